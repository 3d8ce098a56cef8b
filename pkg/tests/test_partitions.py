from math import factorial, prod

import pytest
from sympy import bell
from sympy.utilities.iterables import multiset_partitions

from twisthom.exactlinalg import GradedDims, homology_dims
from twisthom.partitions import (
    MAX_POINTS,
    SetPartition,
    all_partitions,
    enumerate_partitions,
    mobius,
    order_complex_pair,
    partition_weight,
    refinements,
    relative_partition_homology,
)


def brute(n, k, even_only=False):
    out = set()
    for p in multiset_partitions(list(range(1, n + 1)), k):
        if even_only and any(len(b) % 2 for b in p):
            continue
        out.add(SetPartition.of(*p))
    return out


def test_enumerate_examples():
    got = enumerate_partitions(4, 2, even_only=True)
    assert [str(p) for p in got] == ["12|34", "13|24", "14|23"]
    assert len(enumerate_partitions(6, 2, even_only=True)) == 15
    assert enumerate_partitions(5, 2, even_only=True) == []


@pytest.mark.parametrize("n", range(1, 8))
def test_enumerate_matches_brute_force(n):
    for k in range(1, n + 1):
        for even in (False, True):
            got = enumerate_partitions(n, k, even)
            assert len(got) == len(set(got))
            assert set(got) == brute(n, k, even)


def test_enumeration_order_is_lexicographic_in_labels():
    got = enumerate_partitions(5, 3)
    labels = []
    for p in got:
        lab = [0] * 5
        for i, b in enumerate(p.blocks):
            for x in b:
                lab[x - 1] = i
        labels.append(lab)
    assert labels == sorted(labels)


def test_enumerate_bad_k():
    with pytest.raises(ValueError):
        enumerate_partitions(3, 0)
    with pytest.raises(ValueError):
        enumerate_partitions(3, 4)


def test_partition_parsing_and_normalisation():
    a = SetPartition.parse("34|12")
    assert a.blocks == ((1, 2), (3, 4))
    assert str(a) == "12|34"
    assert a.to_json() == [[1, 2], [3, 4]]
    assert SetPartition.parse("1,2|3") == SetPartition.of((1, 2), (3,))
    with pytest.raises(ValueError):
        SetPartition.parse("12|24")


def test_refines():
    assert SetPartition.parse("1|2|34").refines(SetPartition.parse("12|34"))
    assert not SetPartition.parse("13|24").refines(SetPartition.parse("12|34"))


def test_weights():
    assert partition_weight(SetPartition.parse("12|34")) == 1
    assert partition_weight(SetPartition.parse("12|3456")) == 6
    assert partition_weight(SetPartition.parse("123456")) == 120


def test_smallest_pair():
    pair = order_complex_pair(SetPartition.parse("12"), include_discrete=True)
    assert [str(v) for v in pair.vertices] == ["1|2", "12"]
    boundary = [s for s, bd in zip(pair.simplices, pair.in_boundary) if bd]
    assert [tuple(str(pair.vertices[i]) for i in s) for s in boundary] == [("1|2",)]


@pytest.mark.parametrize("n", range(1, 6))
def test_vertex_count_is_bell_with_discrete(n):
    a = SetPartition.of(range(1, n + 1))
    assert len(refinements(a)) == bell(n)
    if n >= 2:
        assert len(order_complex_pair(a, include_discrete=True).vertices) == bell(n)
        assert len(order_complex_pair(a).vertices) == bell(n) - 1


def test_product_of_intervals():
    # refinements of 12|34 form the product of two 2-element lattices: a square
    pair = order_complex_pair(SetPartition.parse("12|34"), include_discrete=True)
    assert len(pair.vertices) == 4
    assert pair.face_counts() == [4, 5, 2]


def test_relative_homology_examples():
    assert relative_partition_homology(SetPartition.parse("12")) == GradedDims({0: 1})
    assert relative_partition_homology(SetPartition.parse("1234")) == GradedDims({2: 6})
    assert relative_partition_homology(SetPartition.parse("12|34")) == GradedDims({1: 1})


def test_including_discrete_makes_pair_acyclic():
    for text in ("12", "123", "1234", "12|34"):
        assert relative_partition_homology(SetPartition.parse(text), include_discrete=True) == GradedDims({})


def _partitions_without_singletons(max_n):
    for n in range(2, max_n + 1):
        for a in all_partitions(n):
            if min(a.sizes) >= 2:
                yield a


@pytest.mark.parametrize("a", list(_partitions_without_singletons(6)), ids=str)
def test_rank_equals_weight(a):
    pair = order_complex_pair(a)
    for relative in (False, True):
        pair.chain_complex(relative).check()
    h = homology_dims(pair.chain_complex(relative=True))
    assert h == GradedDims({a.n - a.k - 1: partition_weight(a)})
    assert h.euler_characteristic() == pair.euler_characteristic(relative=True)


@pytest.mark.parametrize("n", range(1, 7))
def test_mobius_closed_form(n):
    for a in all_partitions(n):
        want = prod((-1) ** (len(b) - 1) * factorial(len(b) - 1) for b in a.blocks)
        assert mobius(a) == want


def test_relative_euler_is_minus_mobius():
    for a in _partitions_without_singletons(5):
        assert order_complex_pair(a).euler_characteristic(relative=True) == -mobius(a)


def test_size_bound():
    with pytest.raises(ValueError, match="9 points"):
        order_complex_pair(SetPartition.of(range(1, MAX_POINTS + 2)))


def test_discrete_root_rejected():
    with pytest.raises(ValueError):
        order_complex_pair(SetPartition.discrete(3))
