import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import bare_linkage, linked_graphs
from vitallink.analysis import is_vital
from vitallink.core import (
    ChordError,
    ContractPathEdge,
    DeleteRungEdge,
    LinkageError,
    LinkedGraph,
    MinorWitness,
    OracleSizeError,
    apply_witness,
    linked_isomorphic,
    replay,
    reverse_path,
    swap_paths,
)
from vitallink.corpus import truemper_minors
from vitallink.truemper import (
    NotTruemperError,
    RungPartition,
    TruemperCertificate,
    crossing,
    embed_in_truemper,
    extend_truemper,
    find_valid_partition,
    generate_truemper,
    is_valid_partition,
    random_truemper_minor,
    verify_certificate,
)
from vitallink.xx import canonical_xx


def rung(g, a, b):
    (e,) = g.graph.edges_between(a, b)
    return e


# --- generate_truemper --------------------------------------------------------


@pytest.mark.parametrize("n, edges", [(1, 1), (2, 6), (3, 9), (4, 14), (5, 17)])
def test_edge_counts(n, edges):
    g = generate_truemper(n)
    assert len(g.vertices) == 2 * n
    assert len(g.graph.edges) == edges
    assert g.terminals() == ("v1", f"v{n}", "u1", f"u{n}")


def test_u1_is_single_rung():
    g = generate_truemper(1)
    assert g.graph.edge_multiset() == {frozenset(("u1", "v1")): 1}


def test_generate_rejects_zero():
    with pytest.raises(ValueError):
        generate_truemper(0)


@pytest.mark.parametrize("n", range(1, 8))
def test_symmetries(n):
    g = generate_truemper(n)
    for h in (reverse_path(g, 1), reverse_path(g, 2), swap_paths(g)):
        assert linked_isomorphic(h, g, relaxed=True) is not None
        # the same shape without relabelling freedom
        assert sorted(h.rung_positions(e) for e in h.rungs()) == sorted(g.rung_positions(e) for e in g.rungs())


# --- extend_truemper -----------------------------------------------------------


@pytest.mark.parametrize("n", range(1, 7))
def test_extend(n):
    g, iso = extend_truemper(generate_truemper(n))
    assert len(g.vertices) == 2 * n + 4
    assert linked_isomorphic(g, generate_truemper(n + 2)) == iso


def test_extend_rejects_other_graphs(xx):
    with pytest.raises(LinkageError):
        extend_truemper(xx)


# --- embed / verify ------------------------------------------------------------


@pytest.mark.parametrize("n", range(1, 8))
def test_embed_truemper_itself(n):
    cert = embed_in_truemper(generate_truemper(n))
    assert cert.n == n and cert.witness.ops == ()
    assert verify_certificate(generate_truemper(n), cert)


def test_embed_bare_linkage():
    g = bare_linkage()
    cert = embed_in_truemper(g)
    assert verify_certificate(g, cert)
    assert cert.n == 2
    assert sorted(type(op).__name__ for op in cert.witness.ops) == ["DeleteRungEdge"] * 4


def test_embed_xx_fails_with_witness(xx):
    with pytest.raises(NotTruemperError) as err:
        embed_in_truemper(xx)
    assert err.value.xx is not None
    assert linked_isomorphic(apply_witness(xx, err.value.xx.witness), canonical_xx()) is not None


def test_embed_rejects_chords():
    with pytest.raises(ChordError):
        embed_in_truemper(LinkedGraph.build(("s1", "x", "t1"), ("s2",), [("s1", "t1")]))


def test_verify_rejects_wrong_n():
    g = generate_truemper(3)
    assert not verify_certificate(g, TruemperCertificate(2))
    assert not verify_certificate(g, TruemperCertificate(0))
    assert not verify_certificate(g, TruemperCertificate(3, witness=MinorWitness((DeleteRungEdge(999),))))


def test_verify_honours_flags():
    u = generate_truemper(3)
    # delete u1-v1 so the result is no longer symmetric under reversal
    ops = (DeleteRungEdge(rung(u, "u1", "v1")),)
    g = replay(u, ops)[0]
    plain = TruemperCertificate(3, witness=MinorWitness(ops))
    assert verify_certificate(g, plain)
    flipped = reverse_path(g, 1)
    assert not verify_certificate(flipped, plain)
    assert verify_certificate(flipped, TruemperCertificate(3, (True, False), False, MinorWitness(ops)))
    swapped = swap_paths(reverse_path(reverse_path(g, 1), 2))
    assert verify_certificate(swapped, TruemperCertificate(3, (True, True), True, MinorWitness(ops)))


def test_verify_checks_recorded_vertex_map():
    g = bare_linkage()
    cert = embed_in_truemper(g)
    bad = TruemperCertificate(cert.n, witness=MinorWitness(cert.witness.ops, {"v1": "nowhere"}))
    assert not verify_certificate(g, bad)


def test_certificate_json_round_trip():
    g, _ = random_truemper_minor(6, random.Random(3))
    cert = embed_in_truemper(g)
    again = TruemperCertificate.from_dict(json.loads(json.dumps(cert.to_dict())))
    assert again.n == cert.n and again.witness.ops == cert.witness.ops
    assert verify_certificate(g, again)


def test_embeds_every_u3_minor():
    for g in truemper_minors(3):
        assert verify_certificate(g, embed_in_truemper(g))


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 7), st.integers(0, 2**32 - 1))
def test_random_minors_embed(n, seed):
    g, w = random_truemper_minor(n, random.Random(seed))
    assert apply_witness(generate_truemper(n), w) == g
    assert verify_certificate(g, embed_in_truemper(g))


@settings(max_examples=60, deadline=None)
@given(linked_graphs(max_len=4, max_rungs=6))
def test_embed_agrees_with_vitality(g):
    try:
        cert = embed_in_truemper(g)
    except NotTruemperError:
        assert not is_vital(g)
    else:
        assert is_vital(g) and verify_certificate(g, cert)


# --- crossing and partitions ---------------------------------------------------


def test_crossing_examples():
    g = generate_truemper(4)
    assert not crossing(g, rung(g, "u1", "v1"), rung(g, "u2", "v2"))
    assert crossing(g, rung(g, "u1", "v4"), rung(g, "u2", "v3"))
    e = rung(g, "u1", "v4")
    assert not crossing(g, e, e)
    # shared endpoint
    assert not crossing(g, rung(g, "u1", "v1"), e)
    with pytest.raises(LinkageError):
        crossing(g, g.linkage.edges1[0], e)


@given(linked_graphs(max_rungs=6), st.data())
def test_crossing_symmetric(g, data):
    if len(g.rungs()) < 2:
        return
    e = data.draw(st.sampled_from(g.rungs()))
    f = data.draw(st.sampled_from(g.rungs()))
    assert crossing(g, e, f) == crossing(g, f, e)
    (a1, a2), (b1, b2) = g.rung_positions(e), g.rung_positions(f)
    if a1 != b1 and a2 != b2:
        # reversing path 2 flips every strict crossing
        assert crossing(g, e, f) != crossing(reverse_path(g, 2), e, f)


def test_u4_parallel_crossing_partition():
    g = generate_truemper(4)
    parallel = frozenset(rung(g, f"u{i}", f"v{i}") for i in range(1, 5))
    crossed = frozenset(rung(g, f"u{i}", f"v{5 - i}") for i in range(1, 5))
    assert is_valid_partition(g, RungPartition(parallel, crossed))
    assert not is_valid_partition(g, RungPartition(crossed, parallel))
    assert not is_valid_partition(g, RungPartition(parallel, frozenset()))


def test_single_rung_partition():
    g = LinkedGraph.build(("s1",), ("s2",), [("s1", "s2")])
    assert find_valid_partition(g) == RungPartition(frozenset({0}), frozenset())


@pytest.mark.parametrize("n", range(1, 8))
def test_partition_of_truemper(n):
    g = generate_truemper(n)
    p = find_valid_partition(g)
    assert p is not None and is_valid_partition(g, p)


def test_partition_on_mixed_rungs():
    g = LinkedGraph.build(
        ("a0", "a1", "a2"), ("b0", "b1", "b2"),
        [("a0", "b2"), ("a1", "b1"), ("a2", "b0"), ("a0", "b0"), ("a2", "b2")],
    )
    p = find_valid_partition(g)
    if p is not None:
        assert is_valid_partition(g, p)
    brute = any(
        is_valid_partition(g, RungPartition(frozenset(a), frozenset(set(g.rungs()) - set(a))))
        for mask in range(1 << len(g.rungs()))
        for a in [[e for k, e in enumerate(g.rungs()) if mask >> k & 1]]
    )
    assert (p is not None) == brute


@settings(max_examples=80, deadline=None)
@given(linked_graphs(max_len=4, max_rungs=7))
def test_partition_matches_brute_force(g):
    rungs = g.rungs()
    brute = any(
        is_valid_partition(g, RungPartition(frozenset(a), frozenset(set(rungs) - set(a))))
        for mask in range(1 << len(rungs))
        for a in [[e for k, e in enumerate(rungs) if mask >> k & 1]]
    )
    p = find_valid_partition(g)
    assert (p is not None) == brute
    if p is not None:
        assert is_valid_partition(g, p)


def test_partition_cap():
    g = LinkedGraph.build(("a",), ("b",), [("a", "b")] * 5)
    with pytest.raises(OracleSizeError):
        find_valid_partition(g, cap=4)
