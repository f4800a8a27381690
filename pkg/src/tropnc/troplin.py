"""Tropical linear spaces and their bounded complexes.

A tropical Plücker vector, read as a height function on hypersimplex
vertices, induces a matroid at every shift point w; looplessness puts w
on the tropical linear space and coloop-freeness on its bounded part.
Central roof functions turn the planar-basis expansion into a concrete
piecewise-linear convex function whose cell gradients enumerate the
complex's vertices; the balanced representative pins the translation so
the whole complex sits inside the weight-fold dilate of the fundamental
alcoved region.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Mapping, Sequence

from . import planar
from .combinat import (
    KSubset,
    cyc_interval,
    dosp,
    gap_interval,
    is_cyclic_interval,
    mod1,
)
from .exact import Rational, as_fraction, format_fraction
from .pluecker import PlueckerVector, lineality_shift


class TimeBudgetExceeded(RuntimeError):
    """Raised when vertex enumeration overruns its optional wall-clock budget."""


@dataclass(frozen=True)
class Matroid:
    """Rank-k matroid on [n] given by its explicit basis list."""

    k: int
    n: int
    bases: frozenset

    def __post_init__(self):
        if not self.bases:
            raise ValueError("a matroid needs at least one basis")
        for B in self.bases:
            if len(B) != self.k or not all(1 <= x <= self.n for x in B):
                raise ValueError(f"bad basis {B}")

    def rank(self, subset) -> int:
        sset = set(subset)
        return max(len(sset & set(B)) for B in self.bases)


def uniform_matroid(k: int, n: int) -> Matroid:
    return Matroid(k, n, frozenset(itertools.combinations(range(1, n + 1), k)))


def basis_exchange_ok(M: Matroid) -> bool:
    """Exchange axiom sanity check on the explicit basis list."""
    for B1, B2 in itertools.permutations(M.bases, 2):
        for i in set(B1) - set(B2):
            if not any(
                tuple(sorted(set(B1) - {i} | {j})) in M.bases
                for j in set(B2) - set(B1)
            ):
                return False
    return True


def argmin_matroid(pi: PlueckerVector, w: Sequence[Rational]) -> Matroid:
    """Bases are the subsets minimizing pi_I - sum(w_i, i in I)."""
    ws = [as_fraction(v) for v in w]
    if len(ws) != pi.n:
        raise ValueError(f"need {pi.n} coordinates, got {len(ws)}")
    vals = {I: v - sum(ws[i - 1] for i in I) for I, v in pi.entries.items()}
    best = min(vals.values())
    return Matroid(pi.k, pi.n, frozenset(I for I, v in vals.items() if v == best))


def loops(M: Matroid) -> tuple[int, ...]:
    """Elements lying in no basis."""
    used = set().union(*M.bases)
    return tuple(sorted(set(range(1, M.n + 1)) - used))


def coloops(M: Matroid) -> tuple[int, ...]:
    """Elements lying in every basis."""
    inter = set.intersection(*(set(B) for B in M.bases))
    return tuple(sorted(inter))


def components_partition(M: Matroid) -> tuple[tuple[int, ...], ...]:
    """Connected components: transitive closure of single exchanges,
    equivalently the finest partition on which every basis has constant
    intersection counts."""
    parent = list(range(M.n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    bases = [set(B) for B in M.bases]
    classes = M.n
    for a, b in itertools.combinations(bases, 2):
        diff = a ^ b
        if len(diff) == 2:
            x, y = diff
            if find(x) != find(y):
                union(x, y)
                classes -= 1
                if classes == 1:
                    break
    groups: dict[int, list[int]] = {}
    for x in range(1, M.n + 1):
        groups.setdefault(find(x), []).append(x)
    return tuple(sorted(tuple(sorted(g)) for g in groups.values()))


def is_connected(M: Matroid) -> bool:
    return len(components_partition(M)) == 1


def grassmann_necklace(M: Matroid) -> list[tuple[int, ...]]:
    """The n greedy lexicographic minima in the cyclically shifted orders
    a < a+1 < ... < a-1.  Requires a loopless matroid."""
    if loops(M):
        raise ValueError(f"matroid has loops {loops(M)}; necklace undefined")
    bases = [set(B) for B in M.bases]
    necklace = []
    for a in range(1, M.n + 1):
        order = [mod1(a + i, M.n) for i in range(M.n)]
        chosen: set[int] = set()
        for x in order:
            if len(chosen) == M.k:
                break
            trial = chosen | {x}
            if any(trial <= B for B in bases):
                chosen = trial
        assert len(chosen) == M.k
        necklace.append(tuple(sorted(chosen)))
    return necklace


def in_linear_space(pi: PlueckerVector, w: Sequence[Rational]) -> bool:
    """Membership via the (k+1)-subset test: every minimum is achieved
    at least twice.  Independent of the matroid characterization."""
    ws = [as_fraction(v) for v in w]
    k, n = pi.k, pi.n
    for tau in itertools.combinations(range(1, n + 1), k + 1):
        vals = [
            pi.entries[tuple(x for x in tau if x != i)] + ws[i - 1] for i in tau
        ]
        m = min(vals)
        if vals.count(m) < 2:
            return False
    return True


def in_bounded_part(pi: PlueckerVector, w: Sequence[Rational]) -> bool:
    """Loopless and coloopless shift matroid."""
    M = argmin_matroid(pi, w)
    return not loops(M) and not coloops(M)


@dataclass(frozen=True)
class CentralRoof:
    """The cyclic family of weight vectors defining a central roof.

    For the decorated partition (r_1..r_d, S_1..S_d) of J, the a-th
    vector is W_a = sum over p of (r_{a+1} + ... + r_{a+p}) e_{S_{a+p}},
    indices mod d; the roof is -(1/k) min_a W_a . x.
    """

    J: KSubset
    W: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return self.J.k


@lru_cache(maxsize=None)
def central_roof(J: KSubset) -> CentralRoof:
    if is_cyclic_interval(J):
        raise ValueError(f"central roof needs a noncyclic subset, got {J.elems}")
    part = dosp(J)
    d = part.length
    n = J.n
    vectors = []
    for a in range(1, d + 1):
        W = [0] * n
        acc = 0
        for p in range(1, d + 1):
            acc += part.decorations[(a + p - 1) % d]
            for x in part.blocks[(a + p - 1) % d]:
                W[x - 1] = acc
        vectors.append(tuple(W))
    return CentralRoof(J, tuple(vectors))


def central_roof_value(J: KSubset, x: Sequence[Rational]) -> Fraction:
    """Evaluate the roof -(1/k) min_a W_a . x at a point of R^n."""
    xs = [as_fraction(v) for v in x]
    roof = central_roof(J)
    best = min(sum(c * v for c, v in zip(W, xs)) for W in roof.W)
    return -Fraction(best, 1) / J.k


@lru_cache(maxsize=None)
def central_pluecker_vector(J: KSubset) -> PlueckerVector:
    """The central vector with entries equal to roof values at e_I."""
    roof = central_roof(J)
    k = J.k

    def entry(I: tuple[int, ...]) -> Fraction:
        best = min(sum(W[i - 1] for i in I) for W in roof.W)
        return -Fraction(best, k)

    return PlueckerVector.from_function(k, J.n, entry)


def _combine_central(k: int, n: int, support) -> PlueckerVector:
    out = PlueckerVector.zero(k, n)
    for J, c in support:
        out = out + central_pluecker_vector(J).scale(c)
    return out


def _nonzero_support(pi: PlueckerVector, coeffs) -> list[tuple[KSubset, Fraction]]:
    if coeffs is None:
        coeffs = planar.planar_expand(pi)
    return sorted(
        ((J, as_fraction(c)) for J, c in coeffs.items() if c != 0),
        key=lambda e: e[0],
    )


def central_representative(pi: PlueckerVector) -> PlueckerVector:
    """Planar-coefficient combination of central roofs; equivalent to pi
    modulo lineality, and piecewise-linear as a function on the
    hypersimplex (no affine offset)."""
    support = _nonzero_support(pi, None)
    return _combine_central(pi.k, pi.n, support)


def _lineality_solve(diff: PlueckerVector) -> list[Fraction]:
    """Recover y with diff_I = sum(y_i, i in I); asserts diff is lineality."""
    k, n = diff.k, diff.n
    offsets = [Fraction(0)] * n
    for i in range(2, n + 1):
        S = [x for x in range(1, n + 1) if x not in (1, i)][: k - 1]
        key_i = tuple(sorted(S + [i]))
        key_1 = tuple(sorted(S + [1]))
        offsets[i - 1] = diff.entries[key_i] - diff.entries[key_1]
    base = tuple(range(1, k + 1))
    t = (diff.entries[base] - sum(offsets[i - 1] for i in base)) / k
    y = [o + t for o in offsets]
    for I, v in diff.entries.items():
        assert sum(y[i - 1] for i in I) == v, "difference vector is not lineality"
    return y


def balanced_representative(pi: PlueckerVector) -> PlueckerVector:
    """Lineality shift of the central representative making all n
    cyclic-gap differences equal to (total weight)/n."""
    support = _nonzero_support(pi, None)
    central = _combine_central(pi.k, pi.n, support)
    wt = sum((c for _, c in support), Fraction(0))
    return lineality_shift(central, _balancing_shift(central, wt))


def _balancing_shift(central: PlueckerVector, wt: Fraction) -> list[Fraction]:
    k, n = central.k, central.n
    delta = [Fraction(0)] * (n + 1)
    for j in range(n):
        m = mod1(j + k, n)
        delta[m] = (
            central.entries[cyc_interval(j, k, n)]
            - central.entries[gap_interval(j, k, n)]
            - Fraction(wt, n)
        )
    assert sum(delta) == 0, "cyclic consistency violated"
    y = [Fraction(0)] * n
    for m in range(1, n):
        y[m] = y[m - 1] - delta[m]
    return y


@dataclass(frozen=True)
class BoundedComplexReport:
    """Vertices of the bounded complex plus the dilate bookkeeping.

    Vertices are points of R^n modulo all-ones, canonicalized by
    subtracting the first coordinate; the spread is the largest
    coordinate difference within a single vertex, maximized over
    vertices, which bounds the whole complex by convexity.
    """

    vertices: tuple[tuple[Fraction, ...], ...]
    pk_weight: Fraction
    max_coordinate_spread: Fraction
    within_dilate: bool

    def to_json_dict(self, edges=None) -> dict:
        out = {
            "vertices": [[format_fraction(v) for v in w] for w in self.vertices],
            "pk_weight": format_fraction(self.pk_weight),
            "max_coordinate_spread": format_fraction(self.max_coordinate_spread),
            "within_dilate": self.within_dilate,
        }
        if edges is not None:
            out["edges"] = [list(e) for e in edges]
        return out


def bounded_complex_vertices(
    pi_hat: PlueckerVector,
    coeffs: Mapping | None = None,
    time_budget_s: float | None = None,
) -> BoundedComplexReport:
    """Enumerate the vertices of the bounded complex of pi_hat.

    Candidate gradients run over all choices of one roof sector per
    nonzero coefficient; a candidate is a vertex exactly when its shift
    matroid is connected.  The whole scan runs in scaled integer
    arithmetic; pi_hat may be any lineality representative (the recovered
    shift realigns the candidates).
    """
    deadline = time.monotonic() + time_budget_s if time_budget_s is not None else None
    k, n = pi_hat.k, pi_hat.n
    support = _nonzero_support(pi_hat, coeffs)
    wt = sum((c for _, c in support), Fraction(0))
    if not support:
        return BoundedComplexReport((), wt, Fraction(0), True)

    pure = _combine_central(k, n, support)
    y = _lineality_solve(pure - pi_hat)

    scale = lcm(
        *(v.denominator for v in pi_hat.entries.values()),
        *(k * c.denominator for _, c in support),
        *(v.denominator for v in y),
    )
    pi_scaled = {I: int(v * scale) for I, v in pi_hat.entries.items()}
    base = [int(-v * scale) for v in y]
    contribs = []
    for J, c in support:
        factor = Fraction(-c * scale, k)
        assert factor.denominator == 1
        contribs.append(
            [tuple(int(factor) * x for x in W) for W in central_roof(J).W]
        )

    candidates: dict[tuple[int, ...], tuple[int, ...]] = {}

    def enumerate_sums(level: int, acc: list[int]):
        if deadline is not None and time.monotonic() > deadline:
            raise TimeBudgetExceeded("assignment enumeration over budget")
        if level == len(contribs):
            key = tuple(v - acc[0] for v in acc)
            candidates.setdefault(key, tuple(acc))
            return
        for W in contribs[level]:
            enumerate_sums(level + 1, [a + wv for a, wv in zip(acc, W)])

    enumerate_sums(0, base)

    subsets = [(I, tuple(i - 1 for i in I), v) for I, v in pi_scaled.items()]
    full = set(range(1, n + 1))
    vertices = []
    for w_scaled in candidates.values():
        if deadline is not None and time.monotonic() > deadline:
            raise TimeBudgetExceeded("matroid filtering over budget")
        best = None
        argmin: list[tuple[int, ...]] = []
        for I, idx, v in subsets:
            val = v - sum(w_scaled[i] for i in idx)
            if best is None or val < best:
                best = val
                argmin = [I]
            elif val == best:
                argmin.append(I)
        if set().union(*map(set, argmin)) != full:
            continue  # loop: outside the linear space
        inter = set(argmin[0])
        for B in argmin[1:]:
            inter &= set(B)
            if not inter:
                break
        if inter:
            continue  # coloop: unbounded direction
        M = Matroid(k, n, frozenset(argmin))
        if is_connected(M):
            vertices.append(tuple(Fraction(v - w_scaled[0], scale) for v in w_scaled))

    vertices.sort()
    spread = max(
        (max(wv) - min(wv) for wv in vertices), default=Fraction(0)
    )
    return BoundedComplexReport(tuple(vertices), wt, spread, spread <= wt)


def face_dimension_at(pi: PlueckerVector, w: Sequence[Rational]):
    """Dimension of the face through w, or a tag for non-face points:
    "outside" when w misses the linear space, "unbounded" when the face
    through w is unbounded."""
    M = argmin_matroid(pi, w)
    if loops(M):
        return "outside"
    if coloops(M):
        return "unbounded"
    return len(components_partition(M)) - 1


def matroid_polytope_contains(M: Matroid, x: Sequence[Rational]) -> bool:
    """Exact membership in the basis polytope via the rank inequalities
    x(A) <= rank(A) together with x >= 0 and x([n]) = k."""
    xs = [as_fraction(v) for v in x]
    if len(xs) != M.n:
        raise ValueError(f"need {M.n} coordinates")
    if any(v < 0 for v in xs) or sum(xs) != M.k:
        return False
    ground = range(1, M.n + 1)
    for size in range(1, M.n):
        for A in itertools.combinations(ground, size):
            if sum(xs[i - 1] for i in A) > M.rank(A):
                return False
    return True


def subdifferential_at(
    pi_hat: PlueckerVector, x: Sequence[Rational], coeffs: Mapping | None = None
) -> list[tuple[Fraction, ...]]:
    """All bounded-complex vertices whose shift matroid polytope contains
    the strictly interior point x of the hypersimplex."""
    xs = [as_fraction(v) for v in x]
    if sum(xs) != pi_hat.k or any(not 0 < v < 1 for v in xs):
        raise ValueError("x must be strictly interior: 0 < x_i < 1, sum = k")
    report = bounded_complex_vertices(pi_hat, coeffs)
    out = []
    for w in report.vertices:
        M = argmin_matroid(pi_hat, w)
        if matroid_polytope_contains(M, xs):
            out.append(w)
    return out


def bounded_complex_edges(
    pi_hat: PlueckerVector, vertices: Sequence[Sequence[Rational]]
) -> list[tuple[int, int]]:
    """Vertex pairs whose midpoint lies on a one-dimensional face."""
    out = []
    for i, j in itertools.combinations(range(len(vertices)), 2):
        mid = [
            (as_fraction(a) + as_fraction(b)) / 2
            for a, b in zip(vertices[i], vertices[j])
        ]
        if face_dimension_at(pi_hat, mid) == 1:
            out.append((i, j))
    return out


def diameter_check(
    pi: PlueckerVector, time_budget_s: float | None = None
) -> BoundedComplexReport:
    """Balanced representative, vertex enumeration, and the dilate bound:
    every vertex spread must be at most the total weight.  Convexity of
    the dilated region makes the vertex check sufficient."""
    coeffs = planar.planar_expand(pi)
    support = [(J, c) for J, c in coeffs.items() if c != 0]
    wt = sum((c for _, c in support), Fraction(0))
    central = _combine_central(pi.k, pi.n, support)
    balanced = lineality_shift(central, _balancing_shift(central, wt))
    return bounded_complex_vertices(balanced, coeffs, time_budget_s=time_budget_s)
