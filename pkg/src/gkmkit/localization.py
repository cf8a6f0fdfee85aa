"""Exact fixed-point localization of characteristic numbers.

An integral over the underlying space is recovered as a sum over fixed
points: numerator at the point divided by the product of its weight
forms.  Two evaluation strategies are provided and must agree:

* "generic": evaluate every term at a deterministic generic rational
  point and cross-check the total at a second one.  Sound for numerators
  of total degree at most the half dimension, where the sum is a constant
  rational function; higher degrees are rejected.
* "expanded": carry out the sum as factored rational functions with
  exact cancellation.  Slower, but makes no genericity assumption and
  doubles as the oracle for the generic mode.

Chern numbers take elementary symmetric polynomials of the weight forms
as numerators; the top one always equals the Euler count.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from .model import FixedPointData, ValidationReport, _single
from .weights import (
    SparsePoly,
    dot,
    elem_sym_all,
    elem_sym_scalars,
    frac_sum,
    fraction,
    generic_points,
    poly_const,
    poly_const_value,
    poly_eval,
    poly_is_const,
    poly_mul,
    poly_total_degree,
)

Partition = Tuple[int, ...]


class InconsistencyError(ValueError):
    """Localization produced a value the theory forbids."""


def partitions(m: int) -> Tuple[Partition, ...]:
    """Weakly decreasing integer partitions of m; partitions(0) is ((),)."""
    if m < 0:
        raise ValueError(f"need m >= 0, got {m}")

    def gen(rest: int, cap: int) -> Iterable[Partition]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(gen(m, m))


def _check_numerators(data: FixedPointData,
                      numerators: Mapping[str, SparsePoly]) -> None:
    missing = [p.id for p in data.points if p.id not in numerators]
    if missing:
        raise ValueError(f"numerator missing for points: {missing}")


def localize_sum(data: FixedPointData,
                 numerators: Mapping[str, SparsePoly]):
    """Full factored-fraction sum of numerator/product-of-weights terms."""
    _check_numerators(data, numerators)
    return frac_sum(
        fraction(numerators[p.id], p.weights)
        for p in sorted(data.points, key=lambda p: p.id))


def _evaluated_sum(data: FixedPointData, numerators: Mapping[str, SparsePoly],
                   rho: Sequence[int]) -> Fraction:
    total = Fraction(0)
    for p in data.points:
        den = 1
        for w in p.weights:
            den *= dot(rho, w)
        total += poly_eval(numerators[p.id], rho) / den
    return total


def integrate(data: FixedPointData, numerators: Mapping[str, SparsePoly],
              mode: str = "generic") -> Fraction:
    """Localized integral of per-point numerator classes."""
    _check_numerators(data, numerators)
    if mode == "expanded":
        total = localize_sum(data, numerators)
        if total.is_zero():
            return Fraction(0)
        if total.denominator or not poly_is_const(total.numerator):
            raise InconsistencyError(
                "localized sum is not a constant; the numerators do not "
                "come from a global class of integral degree")
        return poly_const_value(total.numerator)
    if mode != "generic":
        raise ValueError(f"unknown mode {mode!r}")
    deg = max(poly_total_degree(q) for q in numerators.values())
    if deg > data.half_dim:
        raise ValueError(
            f"numerator degree {deg} exceeds half_dim {data.half_dim}; "
            "generic evaluation is unsound here, use mode='expanded'")
    schedule = generic_points(set(data.all_weights()), data.torus_rank)
    v1 = _evaluated_sum(data, numerators, next(schedule))
    v2 = _evaluated_sum(data, numerators, next(schedule))
    if v1 != v2:
        raise InconsistencyError(
            f"localized sum differs between generic points: {v1} vs {v2}")
    return v1


# ---------------------------------------------------------------------------
# Chern numbers


def chern_numerators(data: FixedPointData,
                     partition: Partition) -> Dict[str, SparsePoly]:
    """Per-point product of elementary symmetric classes for the partition."""
    k = data.torus_rank
    out: Dict[str, SparsePoly] = {}
    for p in data.points:
        upto = max(partition) if partition else 0
        elems = elem_sym_all(p.weights, min(upto, len(p.weights)), k)
        num = poly_const(k, 1)
        for part in partition:
            num = poly_mul(num, elems[part])
        out[p.id] = num
    return out


def _chern_generic_value(data: FixedPointData, partition: Partition) -> Fraction:
    """Generic-mode Chern value via scalar elementary symmetric functions.

    Evaluation commutes with products and with elementary symmetric
    polynomials, so this equals integrate() on the expanded numerators;
    the equivalence is pinned down by the tests.
    """
    schedule = generic_points(set(data.all_weights()), data.torus_rank)
    upto = max(partition) if partition else 0
    values = []
    for _ in range(2):
        rho = next(schedule)
        total = Fraction(0)
        for p in data.points:
            pairings = [dot(rho, w) for w in p.weights]
            elems = elem_sym_scalars(pairings, upto)
            num = Fraction(1)
            for part in partition:
                num *= elems[part]
            den = 1
            for v in pairings:
                den *= v
            total += num / den
        values.append(total)
    if values[0] != values[1]:
        raise InconsistencyError(
            f"Chern value for {partition} differs between generic points: "
            f"{values[0]} vs {values[1]}")
    return values[0]


def chern_number(data: FixedPointData, partition: Sequence[int],
                 mode: str = "generic") -> int:
    """Integer Chern number for a partition of the half dimension."""
    part = tuple(sorted(partition, reverse=True))
    if any(x < 1 for x in part) or sum(part) != data.half_dim:
        raise ValueError(
            f"partition {tuple(partition)} does not sum to half_dim {data.half_dim}")
    if mode == "generic":
        value = _chern_generic_value(data, part)
    elif mode == "expanded":
        value = integrate(data, chern_numerators(data, part), mode="expanded")
    else:
        raise ValueError(f"unknown mode {mode!r}")
    if value.denominator != 1:
        raise InconsistencyError(
            f"Chern number for {part} is not an integer: {value}")
    return int(value)


@dataclass(frozen=True)
class ChernReport:
    half_dim: int
    values: Dict[Partition, int]
    failures: Tuple[Tuple[Partition, str], ...] = ()

    @property
    def ok(self) -> bool:
        return not self.failures


def chern_report(data: FixedPointData, mode: str = "generic") -> ChernReport:
    """All Chern numbers of the data, with per-partition failure capture."""
    values: Dict[Partition, int] = {}
    failures = []
    for part in partitions(data.half_dim):
        try:
            values[part] = chern_number(data, part, mode)
        except InconsistencyError as exc:
            failures.append((part, str(exc)))
    return ChernReport(data.half_dim, values, tuple(failures))


def check_lower_degree_vanishing(data: FixedPointData,
                                 mode: str = "generic") -> ValidationReport:
    """Localized integrals of all classes of degree below half_dim must vanish."""
    n = data.half_dim
    k = data.torus_rank
    cache: Dict[str, list[SparsePoly]] = {
        p.id: elem_sym_all(p.weights, min(max(n - 1, 0), n), k)
        for p in data.points}
    witnesses = []
    for m in range(n):
        for part in partitions(m):
            numerators: Dict[str, SparsePoly] = {}
            for p in data.points:
                num = poly_const(k, 1)
                for piece in part:
                    num = poly_mul(num, cache[p.id][piece])
                numerators[p.id] = num
            try:
                value = integrate(data, numerators, mode)
            except InconsistencyError as exc:
                witnesses.append((part, str(exc)))
                continue
            if value != 0:
                witnesses.append((part, str(value)))
    return _single("lower_degree_vanishing", not witnesses, tuple(witnesses))


@dataclass(frozen=True)
class ChernComparison:
    half_dim: int
    rows: Dict[Partition, Tuple[int | None, int | None]]

    @property
    def all_equal(self) -> bool:
        return all(a is not None and a == b for a, b in self.rows.values())


def compare_chern(data: FixedPointData, other: FixedPointData,
                  mode: str = "generic") -> ChernComparison:
    """Partition-by-partition Chern comparison of two datasets of equal half_dim.

    All rows equal means the two are indistinguishable by Chern numbers
    (equivariantly cobordant data always is).
    """
    if data.half_dim != other.half_dim:
        raise ValueError(
            f"half dimensions differ: {data.half_dim} vs {other.half_dim}")
    rows: Dict[Partition, Tuple[int | None, int | None]] = {}
    for part in partitions(data.half_dim):
        pair = []
        for d in (data, other):
            try:
                pair.append(chern_number(d, part, mode))
            except InconsistencyError:
                pair.append(None)
        rows[part] = (pair[0], pair[1])
    return ChernComparison(data.half_dim, rows)
