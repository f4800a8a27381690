"""Cyclic combinatorics of k-subsets of [n] = {1, ..., n}.

This module is the indexing and predicate layer for everything else:
cyclic intervals, weak separation, the noncrossing predicate, noncrossing
collections, decorated ordered set partitions, and noncrossing set
partitions.  All index arithmetic is cyclic with representatives in
[1, n], never 0, and subsets are stored sorted ascending.

The noncrossing predicate is implemented literally, window by window,
with no shortcut formulas, so that it can serve as the oracle for
everything built on top of it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import as_fraction


def mod1(x: int, n: int) -> int:
    """Reduce x (mod n) into the representative range [1, n]."""
    return (x - 1) % n + 1


@dataclass(frozen=True, order=True)
class KSubset:
    """A sorted k-element subset of [n], with 2 <= k <= n-2 and n >= 4."""

    n: int
    elems: tuple[int, ...]

    def __post_init__(self):
        if self.n < 4:
            raise ValueError(f"ground set too small: n={self.n}")
        k = len(self.elems)
        if not 2 <= k <= self.n - 2:
            raise ValueError(f"need 2 <= k <= n-2, got k={k}, n={self.n}")
        if list(self.elems) != sorted(set(self.elems)):
            raise ValueError(f"elements must be strictly increasing: {self.elems}")
        if self.elems[0] < 1 or self.elems[-1] > self.n:
            raise ValueError(f"elements out of range [1, {self.n}]: {self.elems}")

    @property
    def k(self) -> int:
        return len(self.elems)

    def __iter__(self):
        return iter(self.elems)

    def __contains__(self, x: int) -> bool:
        return x in self.elems

    def label(self) -> str:
        """Comma-joined serialization, e.g. "1,3,5"."""
        return ",".join(str(e) for e in self.elems)


def ksubset(n: int, elems) -> KSubset:
    """Build a KSubset from any iterable of distinct elements of [n]."""
    return KSubset(n, tuple(sorted(elems)))


def all_ksubsets(k: int, n: int) -> list[KSubset]:
    """All k-subsets of [n] in lexicographic order."""
    return [KSubset(n, elems) for elems in itertools.combinations(range(1, n + 1), k)]


def cyclic_endpoints(J: KSubset) -> tuple[int, ...]:
    """Elements j of J whose cyclic successor j+1 lies outside J."""
    return tuple(j for j in J.elems if mod1(j + 1, J.n) not in J)


def is_cyclic_interval(J: KSubset) -> bool:
    """True iff J = {a, a+1, ..., a+k-1} modulo n for some a."""
    return len(cyclic_endpoints(J)) == 1


@lru_cache(maxsize=None)
def cyclic_intervals(k: int, n: int) -> tuple[KSubset, ...]:
    """The n cyclic intervals of size k, by starting point."""
    return tuple(
        ksubset(n, (mod1(a + i, n) for i in range(k))) for a in range(1, n + 1)
    )


def cyc_interval(j: int, k: int, n: int) -> tuple[int, ...]:
    """The cyclic interval {j+1, ..., j+k} (mod n), sorted."""
    return tuple(sorted(mod1(j + i, n) for i in range(1, k + 1)))


def gap_interval(j: int, k: int, n: int) -> tuple[int, ...]:
    """The gap interval {j+1, ..., j+k-1, j+k+1} (mod n), sorted."""
    elems = [mod1(j + i, n) for i in range(1, k)] + [mod1(j + k + 1, n)]
    return tuple(sorted(elems))


@lru_cache(maxsize=None)
def noncyclic_subsets(k: int, n: int) -> tuple[KSubset, ...]:
    """All noncyclic k-subsets of [n] in lexicographic order."""
    return tuple(J for J in all_ksubsets(k, n) if not is_cyclic_interval(J))


def _check_same_shape(I: KSubset, J: KSubset):
    if (I.k, I.n) != (J.k, J.n):
        raise ValueError(f"mismatched (k, n): ({I.k},{I.n}) vs ({J.k},{J.n})")


def cyclic_sign_changes(vec) -> int:
    """Number of sign changes in a vector read cyclically, zeros skipped."""
    signs = [1 if v > 0 else -1 for v in vec if v != 0]
    if not signs:
        return 0
    return sum(1 for i, s in enumerate(signs) if s != signs[(i + 1) % len(signs)])


def _weakly_separated_sets(a: tuple[int, ...], b: tuple[int, ...], n: int) -> bool:
    diff = [0] * n
    for x in a:
        diff[x - 1] += 1
    for x in b:
        diff[x - 1] -= 1
    return cyclic_sign_changes(diff) <= 2


def weakly_separated(I: KSubset, J: KSubset) -> bool:
    """True iff e_I - e_J has at most two cyclic sign changes."""
    _check_same_shape(I, J)
    return _weakly_separated_sets(I.elems, J.elems, I.n)


def noncrossing(I: KSubset, J: KSubset) -> bool:
    """Window-by-window noncrossing test.

    For every window 1 <= a < b <= k the pair must either be weakly
    separated on the window {i_a..i_b} vs {j_a..j_b}, or have differing
    interiors {i_{a+1}..i_{b-1}} vs {j_{a+1}..j_{b-1}} (set inequality).
    """
    _check_same_shape(I, J)
    n, k = I.n, I.k
    ie, je = I.elems, J.elems
    for a in range(k):
        for b in range(a + 1, k):
            if set(ie[a + 1:b]) != set(je[a + 1:b]):
                continue
            if not _weakly_separated_sets(ie[a:b + 1], je[a:b + 1], n):
                return False
    return True


def crossing(I: KSubset, J: KSubset) -> bool:
    return not noncrossing(I, J)


@lru_cache(maxsize=None)
def _compatibility(k: int, n: int) -> tuple[tuple[KSubset, ...], dict]:
    nodes = noncyclic_subsets(k, n)
    index = {J: i for i, J in enumerate(nodes)}
    adj = {i: set() for i in range(len(nodes))}
    for i, j in itertools.combinations(range(len(nodes)), 2):
        if noncrossing(nodes[i], nodes[j]):
            adj[i].add(j)
            adj[j].add(i)
    return nodes, adj


def noncrossing_collections(k: int, n: int, size: int) -> list[tuple[KSubset, ...]]:
    """All collections of exactly `size` pairwise-noncrossing noncyclic
    k-subsets, in lexicographic order (deterministic backtracking)."""
    if size < 1:
        raise ValueError("size must be >= 1")
    nodes, adj = _compatibility(k, n)
    out: list[tuple[KSubset, ...]] = []

    def extend(chosen: list[int], candidates: list[int]):
        if len(chosen) == size:
            out.append(tuple(nodes[i] for i in chosen))
            return
        need = size - len(chosen)
        for pos, i in enumerate(candidates):
            if len(candidates) - pos < need:
                break
            chosen.append(i)
            extend(chosen, [j for j in candidates[pos + 1:] if j in adj[i]])
            chosen.pop()

    extend([], list(range(len(nodes))))
    return out


@lru_cache(maxsize=None)
def maximal_noncrossing_collections(k: int, n: int) -> tuple[tuple[KSubset, ...], ...]:
    """All inclusion-maximal noncrossing collections, sorted lexicographically.

    Maximality is by inclusion among noncyclic subsets; that every maximal
    collection has (k-1)(n-k-1) elements is asserted, not assumed.
    """
    nodes, adj = _compatibility(k, n)
    cliques: list[tuple[int, ...]] = []

    def bron_kerbosch(r: list[int], p: set[int], x: set[int]):
        if not p and not x:
            cliques.append(tuple(sorted(r)))
            return
        pivot = max(p | x, key=lambda v: len(adj[v] & p))
        for v in sorted(p - adj[pivot]):
            bron_kerbosch(r + [v], p & adj[v], x & adj[v])
            p.remove(v)
            x.add(v)

    bron_kerbosch([], set(range(len(nodes))), set())
    expected = (k - 1) * (n - k - 1)
    for c in cliques:
        assert len(c) == expected, (
            f"maximal noncrossing collection of unexpected size {len(c)} != {expected}"
        )
    return tuple(tuple(nodes[i] for i in c) for c in sorted(cliques))


@dataclass(frozen=True)
class DecoratedOSP:
    """Decorated ordered set partition (r_1..r_l, S_1..S_l) of [n].

    Blocks are cyclic intervals listed in cyclic order anchored so that
    1 lies in S_1; each block is stored in cyclic traversal order (gap
    elements first, then the run), so the last r_a elements of S_a are
    the run I_a.
    """

    n: int
    blocks: tuple[tuple[int, ...], ...]
    decorations: tuple[int, ...]

    def __post_init__(self):
        if len(self.blocks) != len(self.decorations):
            raise ValueError("block/decoration length mismatch")
        seen = sorted(x for block in self.blocks for x in block)
        if seen != list(range(1, self.n + 1)):
            raise ValueError("blocks must partition [n]")
        if len(self.blocks) >= 2:
            for block, r in zip(self.blocks, self.decorations):
                if not 1 <= r <= len(block) - 1:
                    raise ValueError(f"decoration {r} out of range for block {block}")

    @property
    def length(self) -> int:
        return len(self.blocks)

    def subset(self) -> KSubset:
        """Reconstruct J as the union of the last r_a elements per block."""
        elems = []
        for block, r in zip(self.blocks, self.decorations):
            elems.extend(block[len(block) - r:])
        return ksubset(self.n, elems)


def dosp(J: KSubset) -> DecoratedOSP:
    """Decorated ordered set partition of J: runs with their preceding gaps."""
    n = J.n
    members = set(J.elems)
    starts = [j for j in J.elems if mod1(j - 1, n) not in members]
    raw_blocks = []
    for start in starts:
        run = [start]
        while mod1(run[-1] + 1, n) in members:
            run.append(mod1(run[-1] + 1, n))
        gap = []
        g = mod1(start - 1, n)
        while g not in members:
            gap.append(g)
            g = mod1(g - 1, n)
        gap.reverse()
        raw_blocks.append((tuple(gap + run), len(run)))
    # anchor: the block containing 1 comes first, then cyclic order
    anchor = next(i for i, (block, _) in enumerate(raw_blocks) if 1 in block)
    first = raw_blocks[anchor][0][0]
    order = sorted(range(len(raw_blocks)),
                   key=lambda i: mod1(raw_blocks[i][0][0] - first + 1, n))
    blocks = tuple(raw_blocks[i][0] for i in order)
    decorations = tuple(raw_blocks[i][1] for i in order)
    return DecoratedOSP(n, blocks, decorations)


def positroid_bases(partition: DecoratedOSP) -> frozenset[tuple[int, ...]]:
    """Bases of the positroid cut out by the chain conditions
    |B ∩ (S_1 ∪ ... ∪ S_a)| >= r_1 + ... + r_a for a < l."""
    n = partition.n
    k = sum(partition.decorations)
    prefixes = []
    acc: set[int] = set()
    need = 0
    for block, r in zip(partition.blocks[:-1], partition.decorations[:-1]):
        acc |= set(block)
        need += r
        prefixes.append((frozenset(acc), need))
    bases = []
    for cand in itertools.combinations(range(1, n + 1), k):
        cset = set(cand)
        if all(len(cset & pref) >= need for pref, need in prefixes):
            bases.append(cand)
    return frozenset(bases)


def is_noncrossing_partition(blocks, n: int) -> bool:
    """Standard noncrossing test for a set partition of [n]: no quadruple
    a < b < c < d with a, c in one block and b, d in another."""
    owner = {}
    for idx, block in enumerate(blocks):
        for x in block:
            if x in owner:
                raise ValueError(f"element {x} repeated across blocks")
            owner[x] = idx
    if sorted(owner) != list(range(1, n + 1)):
        raise ValueError("blocks must partition [n]")
    for a, b, c, d in itertools.combinations(range(1, n + 1), 4):
        if owner[a] == owner[c] and owner[b] == owner[d] and owner[a] != owner[b]:
            return False
    return True


@dataclass(frozen=True)
class NoncrossingTableau:
    """Multiset of pairwise-noncrossing noncyclic k-subsets with positive
    rational multiplicities (integer multiplicities are the classical
    tableaux; rationals house general fan coordinates)."""

    k: int
    n: int
    entries: tuple[tuple[KSubset, Fraction], ...]

    def __post_init__(self):
        seen = set()
        for J, mult in self.entries:
            if (J.k, J.n) != (self.k, self.n):
                raise ValueError(f"entry {J} has wrong shape")
            if is_cyclic_interval(J):
                raise ValueError(f"cyclic entry {J.elems} not allowed")
            if mult <= 0:
                raise ValueError(f"multiplicity of {J.elems} must be positive")
            if J in seen:
                raise ValueError(f"duplicate entry {J.elems}")
            seen.add(J)
        for (I, _), (J, _) in itertools.combinations(self.entries, 2):
            if not noncrossing(I, J):
                raise ValueError(f"entries {I.elems} and {J.elems} cross")

    def weight(self) -> Fraction:
        return sum((m for _, m in self.entries), Fraction(0))

    def support(self) -> tuple[KSubset, ...]:
        return tuple(J for J, _ in self.entries)


def tableau(k: int, n: int, entries) -> NoncrossingTableau:
    """Build a tableau from (subset, multiplicity) pairs, sorted lex."""
    cooked = sorted(((J, as_fraction(m)) for J, m in entries), key=lambda e: e[0])
    return NoncrossingTableau(k, n, tuple(cooked))
