"""Weight functionals on tropical Plücker vectors.

Two routes to the same number are kept deliberately separate: the sum of
tropical cross-ratios over noncyclic subsets (the planar-kinematics
weight) and the alternating cyclic/gap-interval sum (the bridge
functional), plus the ladder-side closed form of the latter.  The
noncrossing weight comes from the fan decomposition and is computed by
an independent path entirely.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import ladder, ncfan, planar
from .combinat import (
    KSubset,
    cyc_interval,
    gap_interval,
    noncrossing,
    noncyclic_subsets,
    weakly_separated,
)
from .exact import format_fraction
from .ladder import LadderPoint
from .pluecker import PlueckerVector, is_positive_tropical


def pk_weight(pi: PlueckerVector) -> Fraction:
    """Sum of the tropical cross-ratios over all noncyclic subsets."""
    return sum(
        (planar.tropical_u(J, pi) for J in noncyclic_subsets(pi.k, pi.n)),
        Fraction(0),
    )


def bridge(pi: PlueckerVector) -> Fraction:
    """Alternating sum over the cycle of (cyclic - gap) entries."""
    k, n = pi.k, pi.n
    return sum(
        (pi.entries[cyc_interval(j, k, n)] - pi.entries[gap_interval(j, k, n)]
         for j in range(n)),
        Fraction(0),
    )


def p_factor_tropical(y: LadderPoint, i: int) -> Fraction:
    """Row minimum at level i (tropicalized full-row sum)."""
    return min(y.rows[i - 1])


def q_factor_terms(k: int, n: int, j: int) -> list[tuple[tuple[int, int], ...]]:
    """Supports of the k monomials of the j-th two-column factor: term r
    uses rows 1..k-1-r at column j and rows k-r..k-1 at column j+1."""
    if not 1 <= j <= n - k - 1:
        raise ValueError(f"column index out of range: {j}")
    terms = []
    for r in range(k):
        support = tuple((i, j) for i in range(1, k - r)) + tuple(
            (i, j + 1) for i in range(k - r, k)
        )
        terms.append(support)
    return terms


def q_factor_tropical(y: LadderPoint, j: int) -> Fraction:
    """Tropicalized two-column factor: min over its k monomial supports."""
    return min(
        sum((y.weight(l, t) for l, t in term), Fraction(0))
        for term in q_factor_terms(y.k, y.n, j)
    )


def closed_form_tropical(y: LadderPoint) -> Fraction:
    """Grid-side evaluation of the bridge functional:
    sum of all weights minus the row minima minus the two-column factors."""
    k, n = y.k, y.n
    total = sum((v for row in y.rows for v in row), Fraction(0))
    total -= sum((p_factor_tropical(y, i) for i in range(1, k)), Fraction(0))
    total -= sum((q_factor_tropical(y, j) for j in range(1, n - k)), Fraction(0))
    return total


@dataclass(frozen=True)
class WeightReport:
    """The three weight computations and their agreement flag."""

    pk_weight: Fraction
    nc_weight: Fraction
    bridge_value: Fraction
    agree: bool

    def to_json_dict(self) -> dict:
        return {
            "pk_weight": format_fraction(self.pk_weight),
            "nc_weight": format_fraction(self.nc_weight),
            "bridge": format_fraction(self.bridge_value),
            "agree": self.agree,
        }


def weight_report(pi: PlueckerVector) -> WeightReport:
    """All three weights of a positive vector; nc goes through the fan
    decomposition of the projected point."""
    pk = pk_weight(pi)
    br = bridge(pi)
    nc = ncfan.nc_weight(ncfan.psi(pi))
    return WeightReport(pk, nc, br, pk == nc == br)


def weight_two_candidates(k: int, n: int) -> list[tuple[KSubset, KSubset, PlueckerVector]]:
    """All unordered noncyclic pairs that are noncrossing but not weakly
    separated, with the parametrized vector of the ray-candidate sum
    attached.  Positivity is verified; no ray-extremality claim is made."""
    out = []
    for I, J in itertools.combinations(noncyclic_subsets(k, n), 2):
        if noncrossing(I, J) and not weakly_separated(I, J):
            vec = ladder.rho(ncfan.t_vector(I) + ncfan.t_vector(J))
            cert = is_positive_tropical(vec)
            assert cert.ok, f"candidate {I.elems},{J.elems} failed positivity: {cert.violation}"
            out.append((I, J, vec))
    return out
