"""Shared helpers for the test suite: seeded generators and frozen fixtures."""

from __future__ import annotations

import random
from fractions import Fraction

from tropnc import ladder, ncfan, planar
from tropnc.combinat import maximal_noncrossing_collections
from tropnc.ncfan import TPoint
from tropnc.pluecker import PlueckerVector


def rng_for(name: str) -> random.Random:
    """Deterministic per-test generator."""
    return random.Random(f"tropnc:{name}")


def random_tpoint(rng: random.Random, k: int, n: int, lo: int = 0, hi: int = 4) -> TPoint:
    return TPoint.of(
        k, n, [[rng.randint(lo, hi) for _ in range(n - k)] for _ in range(k - 1)]
    )


def random_rational_tpoint(rng: random.Random, k: int, n: int) -> TPoint:
    return TPoint.of(
        k,
        n,
        [
            [Fraction(rng.randint(-12, 12), rng.randint(1, 5)) for _ in range(n - k)]
            for _ in range(k - 1)
        ],
    )


def random_vector(rng: random.Random, k: int, n: int) -> PlueckerVector:
    """Arbitrary rational vector (not necessarily positive)."""
    return PlueckerVector.from_function(
        k, n, lambda I: Fraction(rng.randint(-10, 10), rng.randint(1, 4))
    )


def random_positive_vector(rng: random.Random, k: int, n: int) -> PlueckerVector:
    """Positive tropical vector: the parametrization of a random integer point."""
    return ladder.rho(random_tpoint(rng, k, n))


def random_tableau_point(rng: random.Random, k: int, n: int, max_weight: int):
    """A fan point with known noncrossing multiplicities summing <= max_weight."""
    colls = maximal_noncrossing_collections(k, n)
    coll = colls[rng.randrange(len(colls))]
    while True:
        mults = [rng.randint(0, 2) for _ in coll]
        if 1 <= sum(mults) <= max_weight:
            break
    t = TPoint.zero(k, n)
    for K, m in zip(coll, mults):
        if m:
            t = t + ncfan.t_vector(K).scale(m)
    return t, {K: m for K, m in zip(coll, mults) if m}


def canon(point) -> tuple[Fraction, ...]:
    """Canonical representative modulo all-ones: subtract the first coordinate."""
    vals = [Fraction(v) for v in point]
    return tuple(v - vals[0] for v in vals)


# Planar-basis coefficients of the weight-four example vector at (3, 12).
COEFFS_312 = {
    (1, 4, 11): -1,
    (1, 4, 12): 1,
    (1, 8, 10): -1,
    (1, 8, 11): 1,
    (1, 9, 10): 1,
    (2, 4, 7): -1,
    (2, 4, 11): 1,
    (2, 5, 7): 1,
    (3, 4, 7): 1,
    (5, 7, 10): -1,
    (5, 8, 10): 1,
    (6, 7, 10): 1,
}
TABLEAU_312 = ((1, 9, 10), (2, 5, 7), (3, 4, 12), (6, 8, 11))


def vector_312() -> PlueckerVector:
    return planar.planar_combination(3, 12, COEFFS_312)
