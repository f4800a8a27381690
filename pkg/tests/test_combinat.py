"""Predicates and enumerations on cyclic k-subsets."""

import itertools

import pytest

from tropnc import combinat
from tropnc.combinat import (
    DecoratedOSP,
    KSubset,
    dosp,
    is_cyclic_interval,
    is_noncrossing_partition,
    ksubset,
    maximal_noncrossing_collections,
    noncrossing,
    noncrossing_collections,
    noncyclic_subsets,
    tableau,
    weakly_separated,
)


def test_ksubset_validation():
    with pytest.raises(ValueError):
        ksubset(6, [1, 1, 2])
    with pytest.raises(ValueError):
        ksubset(6, [0, 1])
    with pytest.raises(ValueError):
        ksubset(6, [1])  # k < 2
    with pytest.raises(ValueError):
        ksubset(6, [1, 2, 3, 4, 5])  # k > n - 2
    assert ksubset(6, [5, 1, 3]).elems == (1, 3, 5)


def test_cyclic_interval_examples():
    assert is_cyclic_interval(ksubset(6, [1, 2, 3]))
    assert is_cyclic_interval(ksubset(6, [6, 1]))
    assert not is_cyclic_interval(ksubset(6, [1, 3]))
    # count of noncyclic 2-subsets of [6] is 15 - 6
    assert len(noncyclic_subsets(2, 6)) == 9


def test_weak_separation_examples():
    assert not weakly_separated(ksubset(6, [1, 2, 4]), ksubset(6, [3, 5, 6]))
    assert not weakly_separated(ksubset(6, [1, 4, 5]), ksubset(6, [2, 3, 6]))
    assert weakly_separated(ksubset(6, [1, 2, 5]), ksubset(6, [1, 3, 4]))
    J = ksubset(6, [2, 4, 6])
    assert weakly_separated(J, J)
    with pytest.raises(ValueError):
        weakly_separated(ksubset(6, [1, 2]), ksubset(7, [1, 2]))


def test_noncrossing_examples():
    # noncrossing but not weakly separated
    assert noncrossing(ksubset(6, [1, 2, 4]), ksubset(6, [3, 5, 6]))
    assert noncrossing(ksubset(6, [1, 4, 5]), ksubset(6, [2, 3, 6]))
    # crossing diagonals of a square
    assert not noncrossing(ksubset(4, [1, 3]), ksubset(4, [2, 4]))
    # literal evaluation of both clauses: the window (1,2) has equal (empty)
    # interiors and a four-sign-change subpair, so the pair crosses
    assert not noncrossing(ksubset(6, [1, 3, 5]), ksubset(6, [2, 4, 6]))


def test_predicate_symmetry_and_reflexivity():
    subsets = noncyclic_subsets(3, 6)
    for I in subsets:
        assert noncrossing(I, I)
        assert weakly_separated(I, I)
    for I, J in itertools.combinations(subsets, 2):
        assert noncrossing(I, J) == noncrossing(J, I)
        assert weakly_separated(I, J) == weakly_separated(J, I)


@pytest.mark.parametrize("k,n", [(2, 6), (3, 6), (3, 7), (4, 7)])
def test_weakly_separated_implies_noncrossing(k, n):
    for I, J in itertools.combinations(noncyclic_subsets(k, n), 2):
        if weakly_separated(I, J):
            assert noncrossing(I, J)


@pytest.mark.parametrize("n", [5, 6, 7, 8])
def test_k2_noncrossing_equals_weakly_separated_equals_diagonals(n):
    def diagonals_cross(p, q):
        (a, b), (c, d) = sorted(p.elems), sorted(q.elems)
        return a < c < b < d or c < a < d < b

    for I, J in itertools.combinations(noncyclic_subsets(2, n), 2):
        geometric = not diagonals_cross(I, J)
        assert noncrossing(I, J) == geometric
        assert weakly_separated(I, J) == geometric


def test_collection_counts_2_6():
    assert len(noncrossing_collections(2, 6, 1)) == 9
    assert len(noncrossing_collections(2, 6, 2)) == 21
    assert len(noncrossing_collections(2, 6, 3)) == 14
    assert len(maximal_noncrossing_collections(2, 6)) == 14


def test_collection_counts_3_6():
    maximal = maximal_noncrossing_collections(3, 6)
    assert len(maximal) == 42
    assert len(noncrossing_collections(3, 6, 4)) == 42
    ws = [c for c in maximal if all(weakly_separated(I, J) for I, J in itertools.combinations(c, 2))]
    assert len(ws) == 34
    non_ws = [c for c in maximal if c not in ws]
    markers = (
        frozenset([(1, 2, 4), (3, 5, 6)]),
        frozenset([(1, 4, 5), (2, 3, 6)]),
    )
    for coll in non_ws:
        elems = {J.elems for J in coll}
        assert any(all(tuple(sorted(m)) in elems for m in marker) for marker in markers)


def test_trivial_collection_2_4():
    colls = noncrossing_collections(2, 4, 1)
    assert [[J.elems for J in c] for c in colls] == [[(1, 3)], [(2, 4)]]


def test_maximal_collections_have_fixed_size():
    for k, n in [(2, 5), (2, 6), (3, 6), (3, 7)]:
        for coll in maximal_noncrossing_collections(k, n):
            assert len(coll) == (k - 1) * (n - k - 1)


def test_dosp_examples():
    d = dosp(ksubset(9, [2, 5, 8]))
    assert d.blocks == ((9, 1, 2), (3, 4, 5), (6, 7, 8))
    assert d.decorations == (1, 1, 1)
    d = dosp(ksubset(6, [2, 5, 6]))
    assert d.blocks == ((1, 2), (3, 4, 5, 6))
    assert d.decorations == (1, 2)
    d = dosp(ksubset(6, [1, 2, 3]))
    assert len(d.blocks) == 1 and d.decorations == (3,)
    assert sorted(d.blocks[0]) == [1, 2, 3, 4, 5, 6]


def test_dosp_wrapping_run():
    # the run {9, 1} wraps past n; its block leads the cyclic order
    d = dosp(ksubset(9, [1, 4, 9]))
    assert d.blocks == ((5, 6, 7, 8, 9, 1), (2, 3, 4))
    assert d.decorations == (2, 1)
    assert d.subset().elems == (1, 4, 9)


def test_label_serialization():
    assert ksubset(6, [5, 1, 3]).label() == "1,3,5"


@pytest.mark.parametrize("k,n", [(2, 6), (3, 6), (3, 7)])
def test_dosp_round_trip(k, n):
    for J in combinat.all_ksubsets(k, n):
        d = dosp(J)
        assert d.subset() == J
        assert sum(d.decorations) == k


def test_dosp_validation():
    with pytest.raises(ValueError):
        DecoratedOSP(4, ((1, 2), (3,)), (1, 1))  # misses 4
    with pytest.raises(ValueError):
        DecoratedOSP(4, ((1, 2), (3, 4)), (2, 0))  # decoration out of range


def test_noncrossing_partition():
    assert is_noncrossing_partition([(1, 2), (3, 4, 5)], 5)
    assert not is_noncrossing_partition([(1, 3), (2, 4)], 4)
    assert is_noncrossing_partition([(1, 2, 6), (3, 4, 5)], 6)
    with pytest.raises(ValueError):
        is_noncrossing_partition([(1, 2), (2, 3)], 3)


def test_positroid_bases_schubert_example():
    bases = combinat.positroid_bases(dosp(ksubset(6, [2, 5, 6])))
    # constraint: |B ∩ {1,2}| >= 1
    assert all(set(B) & {1, 2} for B in bases)
    assert (2, 5, 6) in bases
    assert (3, 4, 5) not in bases


def test_tableau_validation():
    t = tableau(3, 6, [(ksubset(6, [1, 4, 5]), 1), (ksubset(6, [2, 3, 6]), 2)])
    assert t.weight() == 3
    with pytest.raises(ValueError):
        tableau(3, 6, [(ksubset(6, [1, 2, 3]), 1)])  # cyclic entry
    with pytest.raises(ValueError):
        tableau(3, 6, [(ksubset(6, [1, 3, 5]), 1), (ksubset(6, [2, 4, 6]), 1)])  # crossing
    with pytest.raises(ValueError):
        tableau(3, 6, [(ksubset(6, [1, 3, 5]), 0)])  # nonpositive multiplicity
