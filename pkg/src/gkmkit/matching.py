"""Maximum bipartite matching via Hopcroft-Karp.

Vertices on both sides are integer indices; the graph is an adjacency
list from left indices to lists of right indices.  Returns the matching
as a left-to-right index map.  Deterministic for a fixed adjacency order.
"""

from __future__ import annotations

from collections import deque
from typing import Dict, List

INF = float("inf")


def maximum_matching(n_left: int, n_right: int,
                     adjacency: List[List[int]]) -> Dict[int, int]:
    """Match left indices 0..n_left-1 to right indices 0..n_right-1."""
    match_left: List[int] = [-1] * n_left
    match_right: List[int] = [-1] * n_right
    dist: List[float] = [0.0] * n_left

    def bfs() -> bool:
        queue: deque[int] = deque()
        for u in range(n_left):
            if match_left[u] == -1:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = INF
        found = False
        while queue:
            u = queue.popleft()
            for v in adjacency[u]:
                w = match_right[v]
                if w == -1:
                    found = True
                elif dist[w] == INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return found

    def dfs(u: int) -> bool:
        for v in adjacency[u]:
            w = match_right[v]
            if w == -1 or (dist[w] == dist[u] + 1 and dfs(w)):
                match_left[u] = v
                match_right[v] = u
                return True
        dist[u] = INF
        return False

    while bfs():
        for u in range(n_left):
            if match_left[u] == -1:
                dfs(u)
    return {u: v for u, v in enumerate(match_left) if v != -1}
