"""Planar basis vectors and planar cross-ratios.

Two independent constructions of the basis vector attached to a k-subset
are kept side by side on purpose: one from directed distances on the
hypersimplex edge graph, one as the corank function of a positroid.
Each is the oracle for the other.  The cross-ratio side produces, for
each subset, a signed exponent vector over its cubical array; the
associated tropical functional is the dual linear form.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .combinat import (
    KSubset,
    cyclic_endpoints,
    dosp,
    is_cyclic_interval,
    ksubset,
    mod1,
    noncyclic_subsets,
    positroid_bases,
)
from .exact import as_fraction
from .pluecker import PlueckerVector


@lru_cache(maxsize=None)
def _distance_map(n: int, src: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    """BFS distances from src over moves replacing j by j-1 (mod n).

    A move subtracts one cyclic step from a single element: the vertex
    e_I travels to e_I + e_{j-1} - e_j whenever j-1 is free.  The graph
    on C(n, k) vertices is strongly connected, so the map is total.
    """
    dist = {src: 0}
    queue = deque([src])
    while queue:
        cur = queue.popleft()
        base = dist[cur]
        members = set(cur)
        for j in cur:
            prev = mod1(j - 1, n)
            if prev in members:
                continue
            nxt = tuple(sorted(members - {j} | {prev}))
            if nxt not in dist:
                dist[nxt] = base + 1
                queue.append(nxt)
    return dist


def directed_distance(src: KSubset, dst: KSubset) -> int:
    """Minimal number of single-element cyclic decrements from src to dst."""
    if (src.k, src.n) != (dst.k, dst.n):
        raise ValueError("mismatched (k, n)")
    return _distance_map(src.n, src.elems)[dst.elems]


@lru_cache(maxsize=None)
def planar_basis_vector(J: KSubset) -> PlueckerVector:
    """Basis vector with entries d(e_J, e_I) / n over all k-subsets I."""
    dist = _distance_map(J.n, J.elems)
    return PlueckerVector(
        J.k, J.n, {I: Fraction(d, J.n) for I, d in dist.items()}
    )


@lru_cache(maxsize=None)
def corank_vector(J: KSubset) -> PlueckerVector:
    """Corank function of the positroid attached to J's decorated ordered
    set partition: corank(I) = k - max over bases B of |I ∩ B|."""
    if is_cyclic_interval(J):
        raise ValueError(f"corank vector needs a noncyclic subset, got {J.elems}")
    bases = positroid_bases(dosp(J))
    k = J.k

    def corank(I: tuple[int, ...]) -> int:
        iset = set(I)
        return k - max(len(iset & set(B)) for B in bases)

    return PlueckerVector.from_function(k, J.n, corank)


@dataclass(frozen=True)
class CrossRatioExponent:
    """Signed exponent vector of a planar cross-ratio over its cubical array."""

    J: KSubset
    exponents: dict

    def support(self) -> list[tuple[int, ...]]:
        return sorted(self.exponents)

    def to_json_dict(self) -> dict:
        return {
            ",".join(str(x) for x in M): sign
            for M, sign in sorted(self.exponents.items())
        }


@lru_cache(maxsize=None)
def cubical_array(J: KSubset) -> CrossRatioExponent:
    """Shifted sets J_M for M over the cyclic endpoints of J, with sign
    (-1)^(|M|+1); the M = {} term is J itself with sign -1."""
    n = J.n
    endpoints = cyclic_endpoints(J)
    exponents: dict[tuple[int, ...], int] = {}
    for r in range(len(endpoints) + 1):
        for M in itertools.combinations(endpoints, r):
            shifted = set(J.elems)
            for m in M:
                shifted.remove(m)
                shifted.add(mod1(m + 1, n))
            key = tuple(sorted(shifted))
            assert len(key) == J.k and key not in exponents, "cubical array collision"
            exponents[key] = (-1) ** (len(M) + 1)
    assert len(exponents) == 2 ** len(endpoints)
    assert sum(exponents.values()) == 0
    return CrossRatioExponent(J, exponents)


def tropical_u(J: KSubset, pi: PlueckerVector) -> Fraction:
    """The tropical cross-ratio functional: signed sum over the cubical array."""
    if (J.k, J.n) != (pi.k, pi.n):
        raise ValueError("mismatched (k, n)")
    array = cubical_array(J)
    return sum(
        (sign * pi.entries[M] for M, sign in array.exponents.items()), Fraction(0)
    )


def planar_expand(pi: PlueckerVector) -> dict[KSubset, Fraction]:
    """Coefficient map J -> u_J(pi) over all noncyclic J; the combination
    sum of c_J times the planar basis reproduces pi modulo lineality."""
    return {J: tropical_u(J, pi) for J in noncyclic_subsets(pi.k, pi.n)}


def planar_combination(k: int, n: int, coeffs) -> PlueckerVector:
    """Exact linear combination sum of c_J * basis vector, sparse input.

    Keys may be KSubset or plain element tuples; zero coefficients are fine.
    """
    out = PlueckerVector.zero(k, n)
    for J, c in coeffs.items():
        c = as_fraction(c)
        if c == 0:
            continue
        if not isinstance(J, KSubset):
            J = ksubset(n, J)
        out = out + planar_basis_vector(J).scale(c)
    return out
