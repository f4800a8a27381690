"""The noncrossing fan: ray vectors, projections, and decomposition.

Points of the target space are (k-1) rows of (n-k) rationals, each row
taken modulo the all-ones vector; the canonical representative subtracts
the row minimum, which makes every ray vector a 0/1 array matching the
interval formula on the nose.  Decomposition scans the maximal
noncrossing collections, solving the (unimodular) system on each
candidate cone and accepting nonnegative solutions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from . import exact, planar
from .combinat import (
    KSubset,
    NoncrossingTableau,
    maximal_noncrossing_collections,
    noncyclic_subsets,
    tableau,
)
from .exact import Rational, as_fraction, format_fraction
from .pluecker import PlueckerVector


class DecompositionError(RuntimeError):
    """Raised when the cone scan fails; signals a fan completeness or
    uniqueness violation, i.e. a bug, not a data condition."""


def _canonical_rows(rows) -> tuple[tuple[Fraction, ...], ...]:
    out = []
    for row in rows:
        vals = tuple(as_fraction(v) for v in row)
        m = min(vals)
        out.append(tuple(v - m for v in vals))
    return tuple(out)


@dataclass(frozen=True)
class TPoint:
    """(k-1) rows of length (n-k), each modulo all-ones; stored canonically."""

    k: int
    n: int
    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.rows) != self.k - 1 or any(len(r) != self.n - self.k for r in self.rows):
            raise ValueError(f"rows must be (k-1) x (n-k) for (k,n)=({self.k},{self.n})")

    @classmethod
    def of(cls, k: int, n: int, rows) -> "TPoint":
        return cls(k, n, _canonical_rows(rows))

    @classmethod
    def zero(cls, k: int, n: int) -> "TPoint":
        return cls.of(k, n, [[0] * (n - k) for _ in range(k - 1)])

    def __add__(self, other: "TPoint") -> "TPoint":
        self._check_shape(other)
        return TPoint.of(
            self.k,
            self.n,
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)],
        )

    def __sub__(self, other: "TPoint") -> "TPoint":
        return self + other.scale(-1)

    def scale(self, c: Rational) -> "TPoint":
        c = as_fraction(c)
        return TPoint.of(self.k, self.n, [[c * v for v in row] for row in self.rows])

    def is_zero(self) -> bool:
        return all(v == 0 for row in self.rows for v in row)

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for row in self.rows for v in row)

    def _check_shape(self, other: "TPoint"):
        if (self.k, self.n) != (other.k, other.n):
            raise ValueError("mismatched (k, n)")


@dataclass(frozen=True)
class TTildePoint:
    """k rows of length (n-k), no quotient."""

    k: int
    n: int
    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.rows) != self.k or any(len(r) != self.n - self.k for r in self.rows):
            raise ValueError(f"rows must be k x (n-k) for (k,n)=({self.k},{self.n})")


def t_vector(J: KSubset) -> TPoint:
    """Ray vector of J: row i carries ones on [j_i - (i-1), j_{i+1} - (i+1)],
    clamped to [1, n-k]."""
    k, n = J.k, J.n
    width = n - k
    rows = []
    elems = J.elems
    for i in range(1, k):
        lo = elems[i - 1] - (i - 1)
        hi = elems[i] - (i + 1)
        row = [0] * width
        for s in range(max(lo, 1), min(hi, width) + 1):
            row[s - 1] += 1
        rows.append(row)
    return TPoint.of(k, n, rows)


def t_tilde_vector(J: KSubset) -> TTildePoint:
    """Unquotiented ray vector: row i carries ones on [1, j_i - i]."""
    k, n = J.k, J.n
    width = n - k
    rows = []
    for i in range(1, k + 1):
        hi = J.elems[i - 1] - i
        rows.append(tuple(Fraction(int(1 <= s <= hi)) for s in range(1, width + 1)))
    return TTildePoint(k, n, tuple(rows))


def phi(point: TTildePoint) -> TPoint:
    """Projection with row images -e_1, e_{i-1} - e_i, and e_{k-1}."""
    k, n = point.k, point.n
    width = n - k
    rows = [[Fraction(0)] * width for _ in range(k - 1)]
    for i in range(1, k + 1):
        for j in range(width):
            v = point.rows[i - 1][j]
            if v == 0:
                continue
            if i == 1:
                rows[0][j] -= v
            elif i == k:
                rows[k - 2][j] += v
            else:
                rows[i - 1][j] -= v
                rows[i - 2][j] += v
    return TPoint.of(k, n, rows)


def psi(pi: PlueckerVector) -> TPoint:
    """Projection along the planar basis: sum of u_J(pi) times the ray of J."""
    out = TPoint.zero(pi.k, pi.n)
    for J, c in planar.planar_expand(pi).items():
        if c != 0:
            out = out + t_vector(J).scale(c)
    return out


def lattice_coords(t: TPoint) -> tuple[Fraction, ...]:
    """Quotient coordinates: per-row differences against the last entry.

    These identify each row copy of the quotient lattice with Z^(n-k-1),
    so unimodularity can be read off integer determinants.
    """
    out = []
    for row in t.rows:
        last = row[-1]
        out.extend(v - last for v in row[:-1])
    return tuple(out)


@lru_cache(maxsize=None)
def _cone_data(k: int, n: int):
    """Per maximal collection: the inverse ray matrix in lattice coords."""
    collections = maximal_noncrossing_collections(k, n)
    data = []
    for coll in collections:
        cols = [lattice_coords(t_vector(J)) for J in coll]
        matrix = [[cols[j][i] for j in range(len(cols))] for i in range(len(cols[0]))]
        d = exact.det(matrix)
        assert abs(d) == 1, f"non-unimodular cone for collection {coll}: det={d}"
        inv = exact.inverse(matrix)
        data.append((coll, inv))
    return tuple(data)


def nc_decompose(t: TPoint) -> NoncrossingTableau:
    """Unique expression of t as a nonnegative combination of pairwise
    noncrossing rays, found by scanning all maximal cones.

    Raises DecompositionError if no cone accepts or two cones accept with
    different positive supports (fan completeness/uniqueness violated).
    """
    target = lattice_coords(t)
    found: dict[tuple, tuple] = {}
    for coll, inv in _cone_data(t.k, t.n):
        mu = [sum(row[i] * target[i] for i in range(len(target))) for row in inv]
        if all(m >= 0 for m in mu):
            entry = tuple(sorted((J, m) for J, m in zip(coll, mu) if m > 0))
            found[entry] = entry
    if not found:
        raise DecompositionError(f"no cone contains the point {t!r}")
    if len(found) > 1:
        raise DecompositionError(f"multiple distinct decompositions for {t!r}")
    (entry,) = found.values()
    if t.is_integral():
        assert all(m.denominator == 1 for _, m in entry), "integral point, fractional cone coordinates"
    return tableau(t.k, t.n, entry)


def nc_weight(t: TPoint) -> Fraction:
    """Sum of the decomposition coefficients."""
    return nc_decompose(t).weight()


def d1_project(t: TPoint) -> TPoint:
    """Drop row 1 and shift the remaining rows down: lands in (k-1, n-1)."""
    if t.k < 3:
        raise ValueError("projection needs k >= 3")
    return TPoint.of(t.k - 1, t.n - 1, [list(row) for row in t.rows[1:]])


def to_json_dict(t: TPoint) -> dict:
    return {
        "k": t.k,
        "n": t.n,
        "rows": [[format_fraction(v) for v in row] for row in t.rows],
    }


def from_json_dict(obj: Mapping) -> TPoint:
    return TPoint.of(int(obj["k"]), int(obj["n"]), obj["rows"])


def tableau_to_json_dict(tab: NoncrossingTableau) -> dict:
    return {
        "k": tab.k,
        "n": tab.n,
        "entries": [[J.label(), format_fraction(m)] for J, m in tab.entries],
    }
