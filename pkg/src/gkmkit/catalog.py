"""Reference fixed-point datasets with known invariants.

Each entry bundles the data, a describing multigraph where one is part of
the classical description, and a dict of expected values used as frozen
oracles by the test-suite.  Expected chi_y values are stored as
coefficient tuples (a_0, ..., a_n) of the genus written in powers of -y.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Tuple

from .model import Edge, FixedPoint, FixedPointData, Multigraph
from .weights import Weight, det, is_unimodular_basis, neg, sub


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    data: FixedPointData
    graph: Multigraph | None = None
    expected: Dict[str, object] = field(default_factory=dict)


def cpn(n: int, basis: Tuple[Weight, ...] | None = None) -> CatalogEntry:
    """Linear action on complex projective n-space.

    Characters 0, a_1, ..., a_n with the a_i a lattice basis (identity by
    default); point p_i carries the weights a_j - a_i for j != i.  The
    graph is the complete graph with edge p_i -> p_j labeled a_j - a_i.
    chi_y is 1 - y + ... + (-y)^n, so all coefficients are 1.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if basis is None:
        basis = tuple(tuple(1 if j == i else 0 for j in range(n))
                      for i in range(n))
    basis = tuple(tuple(v) for v in basis)
    if len(basis) != n or not is_unimodular_basis(basis):
        raise ValueError("basis must be n vectors forming a lattice basis")
    chars: Tuple[Weight, ...] = ((0,) * n,) + basis
    points = tuple(
        FixedPoint(f"p{i}", tuple(sub(chars[j], chars[i])
                                  for j in range(n + 1) if j != i))
        for i in range(n + 1))
    edges = tuple(Edge(f"p{i}", f"p{j}", sub(chars[j], chars[i]))
                  for i in range(n + 1) for j in range(i + 1, n + 1))
    data = FixedPointData(n, n, points, torus_manifold=True)
    graph = Multigraph(tuple(sorted(p.id for p in points)), edges)
    return CatalogEntry(
        name=f"cp{n}",
        data=data,
        graph=graph,
        expected={
            "euler": n + 1,
            "chi_y": (1,) * (n + 1),
            "todd": 1,
            "signature": sum((-1) ** i for i in range(n + 1)),
            "gkm": True,
            "simple": True,
        },
    )


def cp3_nongkm() -> CatalogEntry:
    """A rank-2 action on projective 3-space violating the GKM condition.

    The parallel pair (1,0), (2,0) sits at p0 and the pair (-2,0), (-1,0)
    at p2, so the GKM check fails while pairing, weight sum, and the
    describing graph below all hold.  chi_y is still that of projective
    3-space.
    """
    points = (
        FixedPoint("p0", ((1, 0), (2, 0), (0, 1))),
        FixedPoint("p1", ((-1, 0), (1, 0), (-1, 1))),
        FixedPoint("p2", ((-2, 0), (-1, 0), (-2, 1))),
        FixedPoint("p3", ((0, -1), (1, -1), (2, -1))),
    )
    edges = (
        Edge("p0", "p1", (1, 0)),
        Edge("p0", "p2", (2, 0)),
        Edge("p0", "p3", (0, 1)),
        Edge("p1", "p2", (1, 0)),
        Edge("p1", "p3", (-1, 1)),
        Edge("p2", "p3", (-2, 1)),
    )
    data = FixedPointData(2, 3, points)
    graph = Multigraph(("p0", "p1", "p2", "p3"), edges)
    return CatalogEntry(
        name="cp3_nongkm",
        data=data,
        graph=graph,
        expected={
            "euler": 4,
            "chi_y": (1, 1, 1, 1),
            "gkm": False,
            "pairing": True,
            "weight_sum": True,
        },
    )


def _check_rank2_pair(a: Weight, b: Weight) -> Tuple[Weight, Weight]:
    a, b = tuple(a), tuple(b)
    if len(a) != 2 or len(b) != 2:
        raise ValueError("parameters must be vectors of length 2")
    if det((a, b)) == 0:
        raise ValueError(f"parameters must be linearly independent, got {a}, {b}")
    return a, b


def s6(a: Weight = (1, 0), b: Weight = (0, 1)) -> CatalogEntry:
    """Rank-2 action on the six-sphere: two fixed points, no cohomology in
    middle degrees, chi_y = -y + y^2.

    Weights {-a-b, a, b} and {-a, -b, a+b} for independent a, b.
    """
    a, b = _check_rank2_pair(a, b)
    ab = (a[0] + b[0], a[1] + b[1])
    points = (
        FixedPoint("p", (neg(ab), a, b)),
        FixedPoint("q", (neg(a), neg(b), ab)),
    )
    edges = (
        Edge("p", "q", a),
        Edge("p", "q", b),
        Edge("q", "p", ab),
    )
    data = FixedPointData(2, 3, points)
    graph = Multigraph(("p", "q"), edges)
    return CatalogEntry(
        name="s6",
        data=data,
        graph=graph,
        expected={
            "euler": 2,
            "chi_y": (0, 1, 1, 0),
            "todd": 0,
            "signature": 0,
            "simple": False,
        },
    )


def s6_blowup(a: Weight = (1, 0), b: Weight = (0, 1)) -> CatalogEntry:
    """The six-sphere example blown up at one point: four fixed points,
    chi_y = -2y + 2y^2.

    Weights {-2a-b, a, b-a}, {-a-b, 2a+b, a+2b}, {a-b, -a-2b, b} at the
    three exceptional points and {-a, -b, a+b} at the surviving one.
    """
    a, b = _check_rank2_pair(a, b)

    def lc(ca: int, cb: int) -> Weight:
        return (ca * a[0] + cb * b[0], ca * a[1] + cb * b[1])

    points = (
        FixedPoint("p1", (lc(-2, -1), lc(1, 0), lc(-1, 1))),
        FixedPoint("p2", (lc(-1, -1), lc(2, 1), lc(1, 2))),
        FixedPoint("p3", (lc(1, -1), lc(-1, -2), lc(0, 1))),
        FixedPoint("q", (lc(-1, 0), lc(0, -1), lc(1, 1))),
    )
    edges = (
        Edge("p2", "p1", lc(2, 1)),
        Edge("p1", "q", lc(1, 0)),
        Edge("p1", "p3", lc(-1, 1)),
        Edge("q", "p2", lc(1, 1)),
        Edge("p2", "p3", lc(1, 2)),
        Edge("p3", "q", lc(0, 1)),
    )
    data = FixedPointData(2, 3, points)
    graph = Multigraph(("p1", "p2", "p3", "q"), edges)
    return CatalogEntry(
        name="s6_blowup",
        data=data,
        graph=graph,
        expected={
            "euler": 4,
            "chi_y": (0, 2, 2, 0),
            "todd": 0,
            "signature": 0,
            "simple": True,
        },
    )


def fano(variant: str = "V5") -> CatalogEntry:
    """Circle actions on two rank-one Fano threefolds with four fixed points.

    Weight multisets {1, 2, 3}, {-1, 1, a}, {-1, -a, 1}, {-1, -2, -3} with
    a = 4 for V5 and a = 5 for V22.  The describing graph has parallel
    edges p1 -> p4 labeled 2 and 3, and p2 -> p3 labeled 1 and a, so it is
    not simple.  chi_y matches projective 3-space.
    """
    key = variant.upper()
    if key not in ("V5", "V22"):
        raise ValueError(f"variant must be V5 or V22, got {variant!r}")
    a = 4 if key == "V5" else 5
    points = (
        FixedPoint("p1", ((1,), (2,), (3,))),
        FixedPoint("p2", ((-1,), (1,), (a,))),
        FixedPoint("p3", ((-1,), (-a,), (1,))),
        FixedPoint("p4", ((-1,), (-2,), (-3,))),
    )
    edges = (
        Edge("p1", "p2", (1,)),
        Edge("p1", "p4", (2,)),
        Edge("p1", "p4", (3,)),
        Edge("p2", "p3", (1,)),
        Edge("p2", "p3", (a,)),
        Edge("p3", "p4", (1,)),
    )
    data = FixedPointData(1, 3, points)
    graph = Multigraph(("p1", "p2", "p3", "p4"), edges)
    return CatalogEntry(
        name=f"fano_{key.lower()}",
        data=data,
        graph=graph,
        expected={
            "euler": 4,
            "chi_y": (1, 1, 1, 1),
            "todd": 1,
            "signature": 0,
            "simple": False,
        },
    )


def all_entries() -> Tuple[CatalogEntry, ...]:
    """Default instances of every catalog family."""
    return (
        cpn(1),
        cpn(2),
        cpn(3),
        cpn(4),
        cp3_nongkm(),
        s6(),
        s6_blowup(),
        fano("V5"),
        fano("V22"),
    )
