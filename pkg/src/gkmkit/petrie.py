"""Rigidity check for torus-manifold data with the minimal fixed-point count.

A rank-n torus manifold has at least n+1 fixed points; the linear action
on projective n-space attains the bound.  Given flagged data with exactly
n+1 points, this module decides whether the data is, after relabeling,
exactly that of a linear projective-space model: pick a base point, try
to assign its n weights to the remaining points (each of which must carry
the negated weight), and verify that every point's multiset matches the
model pattern {-w_i} + {w_j - w_i : j != i}.  The verdict is reproduced
from every base-point choice, and on success the report carries the
recovered character basis, the lattice-simplex realization, the
divisor relations of the induced complete graph, and the invariant table.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Tuple

from .genus import ChiYPolynomial, chi_y
from .localization import chern_report
from .model import (
    FixedPointData,
    Multigraph,
    relabel,
    transform,
)
from .weights import (
    Weight,
    frac_add,
    fraction,
    is_unimodular_basis,
    mat_inverse_unimodular,
    neg,
    parallel,
    poly_const,
    sub,
)

from .catalog import cpn


@dataclass(frozen=True)
class Relation:
    from_id: str
    to_id: str
    divisor: Weight


@dataclass(frozen=True)
class PetrieReport:
    verdict: str  # "match" | "no-match" | "precondition-failed"
    base_point: str | None = None
    basis: Tuple[Weight, ...] | None = None
    relabeling: Dict[str, int] | None = None
    simplex: Tuple[Weight, ...] | None = None
    invariants: Dict[str, object] | None = None
    witness: str | None = None
    graph_consistent: bool | None = None
    gl_normalized_equal: bool | None = None

    @property
    def matched(self) -> bool:
        return self.verdict == "match"


def expected_chi_y(n: int) -> ChiYPolynomial:
    """Genus of the n-dimensional linear model: all coefficients one."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    return ChiYPolynomial((1,) * (n + 1))


def triangle_identity(w0i: Weight, w0j: Weight, wij: Weight) -> bool:
    """Does 1/(ab) + 1/((-a)c) + 1/((-b)(-c)) vanish for a=w0i, b=w0j, c=wij?

    The sum collapses to (a - b + c) / (abc), so it vanishes exactly when
    c = b - a; this is the two-dimensional shadow of the model relations.
    """
    if parallel(w0i, w0j):
        raise ValueError(f"degenerate triangle: {w0i} and {w0j} are parallel")
    if not any(wij):
        raise ValueError("zero weight in triangle")
    k = len(w0i)
    one = poly_const(k, 1)
    total = frac_add(
        frac_add(fraction(one, (w0i, w0j)), fraction(one, (neg(w0i), wij))),
        fraction(one, (neg(w0j), neg(wij))))
    return total.is_zero()


def _reconstruct(data: FixedPointData, base_id: str) -> Tuple[Dict[str, Weight] | None, str]:
    """Assign the base point's weights to the other points, model-style.

    Returns (assignment, witness): either a map other_id -> w with
    weights(other) == {-w} + {w' - w : other'}, or None plus a reason.
    Backtracks over candidate assignments since a negated base weight may
    occur at several points.
    """
    base = data.point(base_id)
    others = [pid for pid in data.ids() if pid != base_id]
    bw = list(base.weights)
    candidates: Dict[str, list[int]] = {}
    for pid in others:
        have = set(data.point(pid).weights)
        candidates[pid] = [i for i, w in enumerate(bw) if neg(w) in have]
        if not candidates[pid]:
            return None, (f"no weight of base {base_id} occurs negated at {pid}")
    # tightest candidate lists first, ids as tie-break, for a deterministic search
    order = sorted(others, key=lambda pid: (len(candidates[pid]), pid))
    assign: Dict[str, int] = {}
    used = [False] * len(bw)
    witness = ""

    def verify() -> bool:
        nonlocal witness
        w0 = {pid: bw[assign[pid]] for pid in others}
        for pid in others:
            expected = [neg(w0[pid])]
            expected.extend(sub(w0[q], w0[pid]) for q in others if q != pid)
            if sorted(expected) != sorted(data.point(pid).weights):
                if not witness:
                    witness = (f"weights at {pid} do not match the model pattern "
                               f"for base {base_id}")
                return False
        return True

    def place(t: int) -> bool:
        if t == len(order):
            return verify()
        pid = order[t]
        for i in candidates[pid]:
            if used[i]:
                continue
            used[i] = True
            assign[pid] = i
            if place(t + 1):
                return True
            used[i] = False
            del assign[pid]
        return False

    if place(0):
        return {pid: bw[assign[pid]] for pid in others}, ""
    if not witness:
        witness = f"no consistent assignment of base {base_id} weights"
    return None, witness


def _precondition_witness(data: FixedPointData) -> str | None:
    if not data.torus_manifold:
        return "data is not flagged as a torus manifold"
    if data.torus_rank != data.half_dim:
        return (f"torus rank {data.torus_rank} differs from "
                f"half dimension {data.half_dim}")
    for p in data.points:
        if not is_unimodular_basis(p.weights):
            return f"weights at {p.id} are not a lattice basis"
    if len(data.points) != data.half_dim + 1:
        return (f"expected {data.half_dim + 1} fixed points, "
                f"found {len(data.points)}")
    return None


def petrie_verify(data: FixedPointData, graph: Multigraph | None = None,
                  up_to_gl: bool = False) -> PetrieReport:
    """Decide whether minimal data agrees with a linear projective model."""
    reason = _precondition_witness(data)
    if reason is not None:
        return PetrieReport("precondition-failed", witness=reason)

    ids = data.ids()
    base_id = ids[0]
    assignment, witness = _reconstruct(data, base_id)

    # the verdict may not depend on the base point; re-run from every other one
    for other_base in ids[1:]:
        other_assignment, other_witness = _reconstruct(data, other_base)
        if (other_assignment is None) != (assignment is None):
            return PetrieReport(
                "no-match", base_point=base_id,
                witness=f"verdict differs from base {other_base}: "
                        f"{other_witness or 'matched'}")

    if assignment is None:
        return PetrieReport("no-match", base_point=base_id, witness=witness)

    others = [pid for pid in ids if pid != base_id]
    basis = tuple(assignment[pid] for pid in others)
    relabeling = {base_id: 0}
    relabeling.update({pid: i + 1 for i, pid in enumerate(others)})

    # pairwise divisor relations must satisfy the three-term sum identity
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            if not triangle_identity(basis[i], basis[j], sub(basis[j], basis[i])):
                return PetrieReport(
                    "no-match", base_point=base_id,
                    witness=f"triangle identity fails for {basis[i]}, {basis[j]}")

    graph_consistent: bool | None = None
    if graph is not None:
        graph_consistent, graph_witness = _graph_consistent(
            data, graph, relabeling, basis)
        if not graph_consistent:
            return PetrieReport(
                "no-match", base_point=base_id, basis=basis,
                relabeling=relabeling, graph_consistent=False,
                witness=graph_witness)

    gl_equal: bool | None = None
    if up_to_gl:
        gl_equal = _gl_normalized_equal(data, relabeling, basis)

    genus = chi_y(data)
    chern = chern_report(data)
    invariants: Dict[str, object] = {
        "chi_y": genus.coeffs,
        "euler": genus.euler,
        "todd": genus.todd,
        "signature": genus.signature,
        "chern": dict(sorted(chern.values.items())),
    }
    simplex = ((0,) * data.half_dim,) + basis
    return PetrieReport(
        "match", base_point=base_id, basis=basis, relabeling=relabeling,
        simplex=simplex, invariants=invariants,
        graph_consistent=graph_consistent, gl_normalized_equal=gl_equal)


def _character_of(pid: str, relabeling: Dict[str, int],
                  basis: Tuple[Weight, ...], n: int) -> Weight:
    idx = relabeling[pid]
    return (0,) * n if idx == 0 else basis[idx - 1]


def _graph_consistent(data: FixedPointData, graph: Multigraph,
                      relabeling: Dict[str, int],
                      basis: Tuple[Weight, ...]) -> Tuple[bool, str]:
    """A supplied graph must be the model's complete graph, label-for-label.

    Edge direction is free: u -> v labeled char(v) - char(u) and the
    reversed edge with negated label describe the same data.
    """
    n = data.half_dim
    if set(graph.vertex_ids) != set(relabeling):
        return False, "graph vertex set differs from the fixed point set"
    needed = {frozenset((u, v)) for u in relabeling for v in relabeling if u < v}
    seen: set[frozenset[str]] = set()
    for e in graph.edges:
        if e.from_id == e.to_id:
            return False, f"self-loop at {e.from_id}"
        expected = sub(_character_of(e.to_id, relabeling, basis, n),
                       _character_of(e.from_id, relabeling, basis, n))
        if e.label != expected:
            return False, (f"edge {e.from_id}->{e.to_id} has label {e.label}, "
                           f"model gives {expected}")
        key = frozenset((e.from_id, e.to_id))
        if key in seen:
            return False, f"duplicate edge between {e.from_id} and {e.to_id}"
        seen.add(key)
    if seen != needed:
        return False, "graph is not the complete graph on the fixed points"
    return True, ""


def _gl_normalized_equal(data: FixedPointData, relabeling: Dict[str, int],
                         basis: Tuple[Weight, ...]) -> bool:
    """Transform by the inverse basis matrix and compare with the standard model."""
    n = data.half_dim
    columns = tuple(tuple(basis[j][i] for j in range(n)) for i in range(n))
    inverse = mat_inverse_unimodular(columns)
    normalized = transform(data, inverse)
    renamed = relabel(normalized, {pid: f"p{idx}" for pid, idx in relabeling.items()})
    model = cpn(n).data
    by_id = {p.id: sorted(p.weights) for p in renamed.points}
    return all(sorted(p.weights) == by_id[p.id] for p in model.points)


def gkm_relations(report: PetrieReport) -> Tuple[Relation, ...]:
    """Divisor relations of the matched model: one per unordered point pair."""
    if not report.matched or report.relabeling is None or report.basis is None:
        raise ValueError("relations require a match verdict")
    n = len(report.basis)
    ordered = sorted(report.relabeling, key=lambda pid: report.relabeling[pid])
    rels = []
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            ci = _character_of(ordered[i], report.relabeling, report.basis, n)
            cj = _character_of(ordered[j], report.relabeling, report.basis, n)
            rels.append(Relation(ordered[i], ordered[j], sub(cj, ci)))
    return tuple(rels)


def simplex_realization(report: PetrieReport) -> Tuple[Weight, ...]:
    """Lattice simplex whose vertices realize the matched model.

    Vertices are the origin plus the recovered basis; each relation's
    divisor is re-checked to be the difference of its endpoint vertices.
    """
    if not report.matched or report.basis is None or report.simplex is None:
        raise ValueError("simplex requires a match verdict")
    verts = report.simplex
    for rel in gkm_relations(report):
        i = report.relabeling[rel.from_id]
        j = report.relabeling[rel.to_id]
        if sub(verts[j], verts[i]) != rel.divisor:
            raise AssertionError("simplex vertices do not realize the relations")
    return verts
