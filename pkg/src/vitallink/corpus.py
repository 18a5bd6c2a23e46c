"""Small-instance corpora of chordless linked graphs.

Graphs are deduplicated up to linked isomorphism with path reversals and
path exchange allowed, which leaves vitality, XX containment and
embeddability unchanged.
"""

from __future__ import annotations

import random
from itertools import combinations, product
from typing import Dict, Iterator, List, Tuple

from .core import TRANSFORMS, ContractPathEdge, DeleteRungEdge, EdgeKind, LinkedGraph, replay, transform
from .truemper import generate_truemper, random_truemper_minor

Key = Tuple[int, int, Tuple[Tuple[int, int], ...]]


def shape_key(g: LinkedGraph) -> Key:
    """Canonical form of a chordless linked graph under the eight relabellings."""
    best = None
    for r1, r2, sw in TRANSFORMS:
        h = transform(g, r1, r2, sw)
        key = (len(h.path(1)), len(h.path(2)), tuple(sorted(h.rung_positions(e) for e in h.rungs())))
        if best is None or key < best:
            best = key
    return best


def from_shape(len1: int, len2: int, rungs) -> LinkedGraph:
    p1 = [f"a{k}" for k in range(len1)]
    p2 = [f"b{k}" for k in range(len2)]
    return LinkedGraph.build(p1, p2, [(p1[i], p2[j]) for i, j in rungs])


def small_linked_graphs(max_vertices: int) -> Iterator[LinkedGraph]:
    """Every chordless linked graph with simple rungs on at most
    ``max_vertices`` vertices, one per relabelling class."""
    for total in range(2, max_vertices + 1):
        for len1 in range(1, total):
            len2 = total - len1
            if len1 > len2:
                continue
            slots = list(product(range(len1), range(len2)))
            for mask in range(1 << len(slots)):
                chosen = [slots[k] for k in range(len(slots)) if mask >> k & 1]
                g = from_shape(len1, len2, chosen)
                # keep only the canonical member of each class
                if shape_key(g) == (len1, len2, tuple(chosen)):
                    yield g


def truemper_minors(n: int) -> List[LinkedGraph]:
    """All linkage minors of Ü_n, one per relabelling class."""
    u = generate_truemper(n)
    path_edges = sorted(e for e, k in u.kinds.items() if k is EdgeKind.PATH)
    rungs = sorted(e for e, k in u.kinds.items() if k is EdgeKind.RUNG)
    out: Dict[Key, LinkedGraph] = {}
    for pc in range(len(path_edges) + 1):
        for contracted in combinations(path_edges, pc):
            for rc in range(len(rungs) + 1):
                for deleted in combinations(rungs, rc):
                    ops = [ContractPathEdge(e) for e in contracted] + [DeleteRungEdge(e) for e in deleted]
                    g = replay(u, ops)[0]
                    out.setdefault(shape_key(g), g)
    return [out[k] for k in sorted(out)]


def random_truemper_graphs(count: int, n: int, seed: int = 0, density: float = 0.5,
                           contract_p: float = 0.3) -> List[LinkedGraph]:
    rng = random.Random(seed)
    return [random_truemper_minor(n, rng, density, contract_p)[0] for _ in range(count)]
