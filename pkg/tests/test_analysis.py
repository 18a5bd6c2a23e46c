import pytest
from hypothesis import given, settings

from conftest import bare_linkage, brute_linkages, linked_graphs, subdivided_xx
from vitallink.analysis import (
    enumerate_linkages,
    enumerate_spanning_linkages,
    find_second_linkage,
    is_linkage_of,
    is_vital,
)
from vitallink.core import LinkedGraph, OracleSizeError, TwoLinkage, reverse_path
from vitallink.corpus import small_linked_graphs
from vitallink.truemper import generate_truemper
from vitallink.xx import canonical_xx


def as_pairs(linkages):
    return sorted((tuple(lk.path1), tuple(lk.path2)) for lk in linkages)


def test_bare_linkage_is_vital():
    g = bare_linkage()
    assert as_pairs(enumerate_linkages(g)) == [(("s1", "t1"), ("s2", "t2"))]
    assert is_vital(g)


def test_xx_has_two_spanning_linkages():
    g = canonical_xx()
    found = as_pairs(enumerate_spanning_linkages(g))
    assert len(found) == 2
    assert (("s1", "b", "t1"), ("s2", "a", "t2")) in found
    assert not is_vital(g)


def test_u2_unique():
    g = generate_truemper(2)
    assert len(enumerate_linkages(g)) == 1
    assert is_vital(g)


def test_subdivided_xx_second_linkage_not_spanning():
    g = subdivided_xx()
    assert len(enumerate_spanning_linkages(g)) == 1
    second = find_second_linkage(g)
    assert second is not None and not second.same_paths(g.linkage)
    assert len(second.path1) + len(second.path2) < len(g.vertices)
    assert not is_vital(g)


def test_cap_guard():
    g = generate_truemper(9)
    with pytest.raises(OracleSizeError):
        enumerate_linkages(g)
    assert len(enumerate_linkages(g, cap=None)) == 1


def test_is_linkage_of():
    g = canonical_xx()
    assert is_linkage_of(g, g.linkage)
    assert is_linkage_of(g, TwoLinkage(("s1", "b", "t1"), ("s2", "a", "t2")))
    assert not is_linkage_of(g, TwoLinkage(("s1", "t1"), ("s2", "a", "t2")))
    assert not is_linkage_of(g, TwoLinkage(("s1", "b", "t1"), ("s2", "b", "t2")))


def test_single_vertex_paths():
    g = LinkedGraph.build(("x",), ("y",), [("x", "y")])
    assert len(enumerate_linkages(g)) == 1


def test_agrees_with_brute_force_on_corpus():
    for g in small_linked_graphs(6):
        assert as_pairs(enumerate_linkages(g)) == sorted(brute_linkages(g)), g


@settings(max_examples=80, deadline=None)
@given(linked_graphs(max_len=4, max_rungs=7))
def test_agrees_with_brute_force(g):
    found = enumerate_linkages(g)
    assert as_pairs(found) == sorted(brute_linkages(g))
    assert all(is_linkage_of(g, lk) for lk in found)
    spanning = enumerate_spanning_linkages(g)
    assert as_pairs(spanning) == sorted(
        p for p in brute_linkages(g) if len(p[0]) + len(p[1]) == len(g.vertices)
    )


@settings(max_examples=60, deadline=None)
@given(linked_graphs(max_len=4, max_rungs=7))
def test_vitality_invariant_under_reversal(g):
    assert is_vital(g) == is_vital(reverse_path(g, 1)) == is_vital(reverse_path(g, 2))
