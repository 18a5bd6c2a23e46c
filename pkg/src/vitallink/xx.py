"""XX linkage minors: detection, and extraction from a second linkage.

XX is K_{2,4} with the four linkage terminals at its degree-2 vertices.
It is the only obstruction: a chordless spanning 2-linkage is vital exactly
when the graph has no XX linkage minor.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from .analysis import is_linkage_of
from .core import (
    ContractPathEdge,
    DeleteRungEdge,
    EdgeKind,
    LinkageError,
    LinkedGraph,
    MinorWitness,
    OracleSizeError,
    TwoLinkage,
    Vertex,
    apply_witness,
    is_chordless,
    linked_isomorphic,
    replay,
    require_chordless,
    simplify,
)


@dataclass(frozen=True)
class XxWitness:
    witness: MinorWitness
    target_iso: Dict[Vertex, Vertex]


def canonical_xx() -> LinkedGraph:
    return LinkedGraph.build(
        ("s1", "a", "t1"),
        ("s2", "b", "t2"),
        [("s1", "b"), ("t1", "b"), ("s2", "a"), ("t2", "a")],
    )


def _segmentations(length: int, parts: int):
    """Label arrays splitting range(length) into ``parts`` contiguous blocks,
    in lexicographic order of the cut positions."""
    for cuts in combinations(range(1, length), parts - 1):
        labels, block = [], 0
        bounds = set(cuts)
        for k in range(length):
            if k in bounds:
                block += 1
            labels.append(block)
        yield labels


def find_linkage_minor(g: LinkedGraph, h: LinkedGraph) -> Optional[MinorWitness]:
    """Witness that ``h`` is a linkage minor of ``g`` with terminals kept, or None.

    A linkage minor is determined by which path edges are contracted (a split
    of each path into contiguous blocks, one block per vertex of h) and which
    rungs survive, so the search runs over block splits and keeps, for every
    pair of blocks, as many rungs as h needs (smallest ids first).
    """
    require_chordless(g)
    if not is_chordless(h):
        return None
    n1, n2 = len(g.path(1)), len(g.path(2))
    k1, k2 = len(h.path(1)), len(h.path(2))
    if k1 > n1 or k2 > n2 or len(h.rungs()) > len(g.rungs()):
        return None
    need = Counter(h.rung_positions(e) for e in h.rungs())
    g_rungs = sorted(g.rungs())
    ends = {e: g.rung_positions(e) for e in g_rungs}

    for lab1 in _segmentations(n1, k1):
        # quick reject on path-1 blocks alone
        have1 = Counter(lab1[p1] for p1, _ in ends.values())
        if any(have1[b1] < c for b1, c in _project(need, 0).items()):
            continue
        for lab2 in _segmentations(n2, k2):
            groups: Dict[Tuple[int, int], List[int]] = {}
            for e in g_rungs:
                p1, p2 = ends[e]
                groups.setdefault((lab1[p1], lab2[p2]), []).append(e)
            if any(len(groups.get(pair, ())) < c for pair, c in need.items()):
                continue
            keep = set()
            for pair, c in need.items():
                keep.update(groups[pair][:c])
            ops = []
            for e, kind in sorted(g.kinds.items()):
                if kind is EdgeKind.RUNG and e not in keep:
                    ops.append(DeleteRungEdge(e))
            for i, lab in ((1, lab1), (2, lab2)):
                for k, e in enumerate(g.linkage.path_edges(i)):
                    if lab[k] == lab[k + 1]:
                        ops.append(ContractPathEdge(e))
            ops.sort(key=lambda op: op.edge)
            return MinorWitness.record(g, ops)
    return None


def _project(need: Counter, axis: int) -> Counter:
    out: Counter = Counter()
    for pair, c in need.items():
        out[pair[axis]] += c
    return out


def has_xx_linkage_minor(g: LinkedGraph, cap: Optional[int] = None) -> Optional[XxWitness]:
    """A verified XX witness for ``g``, or None when g has no XX linkage minor."""
    require_chordless(g)
    if cap is not None and len(g.vertices) > cap:
        raise OracleSizeError(f"{len(g.vertices)} vertices exceeds cap {cap}")
    if len(g.vertices) < 6 or len(g.rungs()) < 4:
        return None
    target = canonical_xx()
    w = find_linkage_minor(g, target)
    if w is None:
        return None
    iso = linked_isomorphic(apply_witness(g, w), target)
    if iso is None:
        raise RuntimeError("XX search produced a witness that does not replay to XX")
    return XxWitness(w, iso)


def _divergence(original: Sequence[Vertex], other: Sequence[Vertex]) -> Tuple[int, int]:
    """Index of the first vertex of ``other`` off the original prefix, and the
    index of the last vertex of ``other`` before it rejoins the original suffix."""
    k = 0
    while other[k] == original[k]:
        k += 1
    m = 0
    while other[-1 - m] == original[-1 - m]:
        m += 1
    return k, len(other) - m - 1


def extract_xx_from_second_linkage(g: LinkedGraph, second: TwoLinkage) -> XxWitness:
    """Turn a second linkage of ``g`` into an explicit XX linkage minor.

    P1' leaves P1 along a rung e = v1v2 and returns along a rung f = u2u1;
    P2' leaves P2 along e' = v2'v1' and returns along f' = u1'u2'.  Contracting
    the subpaths s1..v1, v1'..u1', u1..t1 of P1 and s2..v2', v2..u2, u2'..t2
    of P2, deleting every rung except e, f, e', f', and collapsing the
    leftover series vertices leaves XX.
    """
    require_chordless(g)
    if not is_linkage_of(g, second):
        raise LinkageError("second is not a linkage of g joining its terminal pairs")
    if second.same_paths(g.linkage):
        raise LinkageError("second linkage coincides with the linkage of g")
    second = TwoLinkage.bind(g.graph, second.path1, second.path2)
    P1, P2 = g.path(1), g.path(2)
    Q1, Q2 = second.path1, second.path2
    # In a chordless graph a path that stays on P1 is P1 itself, and then
    # Q2 avoids P1 entirely and must equal P2.
    if Q1 == P1 or Q2 == P2:
        raise LinkageError("second linkage changes only one path; g must have chords")

    pos = {v: k for k, v in enumerate(P1)}
    pos.update({v: k for k, v in enumerate(P2)})

    a, b = _divergence(P1, Q1)
    v1, v2, u2, u1 = Q1[a - 1], Q1[a], Q1[b], Q1[b + 1]
    e, f = second.edges1[a - 1], second.edges1[b]
    a, b = _divergence(P2, Q2)
    v2p, v1p, u1p, u2p = Q2[a - 1], Q2[a], Q2[b], Q2[b + 1]
    ep, fp = second.edges2[a - 1], second.edges2[b]

    on1 = set(P1)
    if not (v2 not in on1 and u2 not in on1 and v1p in on1 and u1p in on1):
        raise RuntimeError("divergence edges are not rungs")
    if not (pos[v2p] < min(pos[v2], pos[u2]) and pos[u2p] > max(pos[v2], pos[u2])):
        raise RuntimeError("P2' leaves or rejoins P2 inside the detour of P1'")
    if not (pos[v1] < min(pos[v1p], pos[u1p]) and max(pos[v1p], pos[u1p]) < pos[u1]):
        raise RuntimeError("P2' detour does not lie strictly between v1 and u1")

    blocks = {
        1: [(0, pos[v1]), (min(pos[v1p], pos[u1p]), max(pos[v1p], pos[u1p])), (pos[u1], len(P1) - 1)],
        2: [(0, pos[v2p]), (min(pos[v2], pos[u2]), max(pos[v2], pos[u2])), (pos[u2p], len(P2) - 1)],
    }
    ops = []
    for i in (1, 2):
        for k, eid in enumerate(g.linkage.path_edges(i)):
            if any(lo <= k and k + 1 <= hi for lo, hi in blocks[i]):
                ops.append(ContractPathEdge(eid))
    kept = {e, f, ep, fp}
    ops += [DeleteRungEdge(r) for r in sorted(g.rungs()) if r not in kept]

    _, tail = simplify(replay(g, ops)[0])
    witness = MinorWitness.record(g, ops).then(tail)

    iso = linked_isomorphic(apply_witness(g, witness), canonical_xx())
    if iso is None:
        raise RuntimeError("extraction did not produce XX")
    return XxWitness(witness, iso)
