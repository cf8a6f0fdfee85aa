import random

from gkmkit.matching import maximum_matching


def test_perfect_matching_square():
    adj = [[0, 1], [0]]
    m = maximum_matching(2, 2, adj)
    assert m == {0: 1, 1: 0}


def test_no_perfect_matching():
    adj = [[0], [0]]
    m = maximum_matching(2, 2, adj)
    assert len(m) == 1


def test_empty_sides():
    assert maximum_matching(0, 0, []) == {}
    assert maximum_matching(2, 0, [[], []]) == {}


def test_matching_is_injective_and_maximal():
    rng = random.Random(23)
    for _ in range(50):
        nl = rng.randint(1, 8)
        nr = rng.randint(1, 8)
        adj = [[v for v in range(nr) if rng.random() < 0.4] for _ in range(nl)]
        m = maximum_matching(nl, nr, adj)
        assert len(set(m.values())) == len(m)
        for u, v in m.items():
            assert v in adj[u]
        # maximality: no augmenting edge between two unmatched vertices
        free_left = set(range(nl)) - set(m)
        free_right = set(range(nr)) - set(m.values())
        for u in free_left:
            assert not (set(adj[u]) & free_right)


def test_matches_known_maximum():
    # three left vertices squeezed into two right ones
    adj = [[0], [0, 1], [1]]
    assert len(maximum_matching(3, 2, adj)) == 2
