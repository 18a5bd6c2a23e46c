"""The double-rail family Ü_n, embeddings into it, and rung partitions.

Ü_n has rails v_1..v_n and u_1..u_n (the linkage L_n), parallel rungs
u_i v_i and crossing rungs u_i v_{n+1-i}.  For odd n the middle rung
belongs to both families and is a single edge.

Ü_n is invariant under reversing either rail and under exchanging the
rails.  The embedder relies on this to normalise terminals and then
transports the resulting witness back along the matching automorphism.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Dict, FrozenSet, List, Optional, Tuple

from .core import (
    TRANSFORMS,
    ContractPathEdge,
    DeleteRungEdge,
    EdgeKind,
    Graph,
    LinkageError,
    LinkedGraph,
    MinorOpError,
    MinorWitness,
    OracleSizeError,
    TwoLinkage,
    Vertex,
    contract_path_edge,
    delete_rung_edge,
    linked_isomorphic,
    replay,
    require_chordless,
    swap_paths,
    transform,
)
from .xx import XxWitness, find_linkage_minor, has_xx_linkage_minor

Pair = FrozenSet[str]
PairOp = Tuple[str, Pair]

# recursion anchors: graphs this small are matched directly against Ü_1..Ü_3
BASE_VERTICES = 4
# largest block-split count tried when matching a graph straight against Ü_m
DIRECT_MATCH_BUDGET = 256


class NotTruemperError(LinkageError):
    """The graph has an XX linkage minor, so it is not a Truemper graph."""

    def __init__(self, message: str, xx: Optional[XxWitness] = None):
        super().__init__(message)
        self.xx = xx


def _v(i: int) -> str:
    return f"v{i}"


def _u(i: int) -> str:
    return f"u{i}"


@lru_cache(maxsize=None)
def generate_truemper(n: int) -> LinkedGraph:
    """Ü_n with its rail linkage: s1 = v1, t1 = vn, s2 = u1, t2 = un.

    Edge ids: rail v, rail u, parallel rungs u_i v_i, then the crossing
    rungs not already present.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    rails_v = [_v(i) for i in range(1, n + 1)]
    rails_u = [_u(i) for i in range(1, n + 1)]
    rungs = [(_u(i), _v(i)) for i in range(1, n + 1)]
    rungs += [(_u(i), _v(n + 1 - i)) for i in range(1, n + 1) if n + 1 - i != i]
    return LinkedGraph.build(rails_v, rails_u, rungs)


@lru_cache(maxsize=None)
def _pair_ids(n: int) -> Dict[Pair, int]:
    return {frozenset((u, v)): e for e, u, v in generate_truemper(n).graph.edges}


def _as_pair(g: LinkedGraph, op) -> PairOp:
    kind = "contract" if isinstance(op, ContractPathEdge) else "delete"
    return kind, frozenset(g.graph.endpoints[op.edge])


def _shift(name: str) -> str:
    return f"{name[0]}{int(name[1:]) + 1}"


def _lift_pendant(n: int, ops: List[PairOp]) -> List[PairOp]:
    """Ops on Ü_{n+2} when the inner graph lost a pendant path edge at s1.

    s1' = v1 stays as the new pendant terminal; s2', t1', t2' are contracted
    into the old rail ends and every new rung is deleted.
    """
    N = n + 2
    new = [
        ("delete", frozenset((_v(1), _u(1)))),
        ("delete", frozenset((_v(1), _u(N)))),
        ("delete", frozenset((_u(1), _v(N)))),
        ("delete", frozenset((_v(N), _u(N)))),
        ("contract", frozenset((_u(1), _u(2)))),
        ("contract", frozenset((_v(N - 1), _v(N)))),
        ("contract", frozenset((_u(N - 1), _u(N)))),
    ]
    return new + [(k, frozenset(map(_shift, p))) for k, p in ops]


def _lift_rung(n: int, ops: List[PairOp]) -> List[PairOp]:
    """Ops on Ü_{n+2} when the inner graph lost the rung s1 s2.

    All four new vertices are contracted into the old rail ends; the new
    rung s1' s2' survives as the restored edge.
    """
    N = n + 2
    new = [
        ("contract", frozenset((_v(1), _v(2)))),
        ("contract", frozenset((_u(1), _u(2)))),
        ("contract", frozenset((_v(N - 1), _v(N)))),
        ("contract", frozenset((_u(N - 1), _u(N)))),
        ("delete", frozenset((_v(1), _u(N)))),
        ("delete", frozenset((_u(1), _v(N)))),
        ("delete", frozenset((_v(N), _u(N)))),
    ]
    return new + [(k, frozenset(map(_shift, p))) for k, p in ops]


@lru_cache(maxsize=None)
def _automorphism(n: int, r1: bool, r2: bool, sw: bool) -> Dict[str, str]:
    """Vertex map from T^{-1}(Ü_n) onto Ü_n, where T reverses then swaps."""
    u = generate_truemper(n)
    x = swap_paths(u) if sw else u
    x = transform(x, r1, r2, False)
    iso = linked_isomorphic(x, u)
    assert iso is not None
    return iso


def _pull_back(ops: List[PairOp], n: int, r1: bool, r2: bool, sw: bool) -> List[PairOp]:
    if not (r1 or r2 or sw):
        return ops
    phi = _automorphism(n, r1, r2, sw)
    return [(k, frozenset(phi[x] for x in p)) for k, p in ops]


class _Stuck(Exception):
    pass


def _direct_match(g: LinkedGraph) -> Optional[Tuple[int, List[PairOp]]]:
    k1, k2 = len(g.path(1)), len(g.path(2))
    sizes = range(1, 4) if len(g.vertices) <= BASE_VERTICES else ()
    for m in (*sizes, max(k1, k2)):
        if m < max(k1, k2) or comb(m - 1, k1 - 1) * comb(m - 1, k2 - 1) > DIRECT_MATCH_BUDGET:
            continue
        u = generate_truemper(m)
        w = find_linkage_minor(u, g)
        if w is not None:
            return m, [_as_pair(u, op) for op in w.ops]
    return None


def _embed(g: LinkedGraph) -> Tuple[int, List[PairOp]]:
    """Return (n, ops) with ops on Ü_n replaying to a graph strictly
    linked-isomorphic to g."""
    hit = _direct_match(g)
    if hit is not None:
        return hit
    # a terminal of degree one: drop its pendant path edge
    for r1, r2, sw in TRANSFORMS:
        h = transform(g, r1, r2, sw)
        if len(h.path(1)) >= 2 and h.graph.degree(h.linkage.s1) == 1:
            n, ops = _embed(contract_path_edge(h, h.linkage.edges1[0]))
            return n + 2, _pull_back(_lift_pendant(n, ops), n + 2, r1, r2, sw)
    # a rung between two terminals: drop it
    for r1, r2, sw in TRANSFORMS:
        h = transform(g, r1, r2, sw)
        between = h.graph.edges_between(h.linkage.s1, h.linkage.s2)
        if between:
            n, ops = _embed(delete_rung_edge(h, min(between)))
            return n + 2, _pull_back(_lift_rung(n, ops), n + 2, r1, r2, sw)
    raise _Stuck


@dataclass(frozen=True)
class TruemperCertificate:
    """Proof that a graph is a linkage minor of Ü_n.

    The witness replays from ``generate_truemper(n)``; its result matches the
    input after reversing the flagged paths and then, if ``path_swap``,
    exchanging them.
    """

    n: int
    reversal_flags: Tuple[bool, bool] = (False, False)
    path_swap: bool = False
    witness: MinorWitness = field(default_factory=MinorWitness)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "reversal_flags": list(self.reversal_flags),
            "path_swap": self.path_swap,
            "ops": [
                {"op": "contract" if isinstance(op, ContractPathEdge) else "delete", "edge": op.edge}
                for op in self.witness.ops
            ],
            "vertex_map": {str(k): str(v) for k, v in self.witness.vertex_map.items()},
        }

    @classmethod
    def from_dict(cls, data: dict) -> "TruemperCertificate":
        ops = []
        for item in data["ops"]:
            kind = {"contract": ContractPathEdge, "delete": DeleteRungEdge}[item["op"]]
            ops.append(kind(int(item["edge"])))
        return cls(
            int(data["n"]),
            tuple(bool(x) for x in data.get("reversal_flags", (False, False))),
            bool(data.get("path_swap", False)),
            MinorWitness(tuple(ops), dict(data.get("vertex_map", {}))),
        )


def embed_in_truemper(g: LinkedGraph) -> TruemperCertificate:
    """Certify that g is a linkage minor of some Ü_n.

    Follows the inductive construction: peel a pendant terminal edge or a
    terminal-to-terminal rung, embed the smaller graph, and extend Ü_n to
    Ü_{n+2} around it.  Raises :class:`NotTruemperError` (carrying an XX
    witness) when neither reduction applies.
    """
    require_chordless(g)
    try:
        n, pairs = _embed(g)
    except _Stuck:
        raise NotTruemperError("graph has an XX linkage minor", has_xx_linkage_minor(g)) from None
    ids = _pair_ids(n)
    ops = [
        ContractPathEdge(ids[p]) if kind == "contract" else DeleteRungEdge(ids[p])
        for kind, p in pairs
    ]
    cert = TruemperCertificate(n, (False, False), False, MinorWitness.record(generate_truemper(n), ops))
    if not verify_certificate(g, cert):
        raise RuntimeError("embedding failed its own verification")
    return cert


def verify_certificate(g: LinkedGraph, c: TruemperCertificate) -> bool:
    try:
        if c.n < 1:
            return False
        result, where = replay(generate_truemper(c.n), c.witness.ops)
        if c.witness.vertex_map:
            recorded = {str(k): str(v) for k, v in c.witness.vertex_map.items()}
            if recorded != {str(k): str(v) for k, v in where.items()}:
                return False
        r1, r2 = c.reversal_flags
        target = transform(g, r1, r2, c.path_swap)
        return linked_isomorphic(result, target) is not None
    except (LinkageError, MinorOpError, KeyError, TypeError, ValueError):
        return False


def _fresh(base: str, taken: set) -> str:
    name = base
    while name in taken:
        name += "'"
    taken.add(name)
    return name


def extend_truemper(g: LinkedGraph) -> Tuple[LinkedGraph, Dict[Vertex, str]]:
    """Wrap a copy of Ü_n in four new terminals, giving a copy of Ü_{n+2}.

    New vertices s1', t1', s2', t2' get the edges s1'v1, s1's2', s1't2',
    s2'u1, s2't1', v_n t1', u_n t2', t1't2'.  Returns the new graph and its
    isomorphism onto ``generate_truemper(n + 2)``.
    """
    n = len(g.path(1))
    if len(g.path(2)) != n or linked_isomorphic(g, generate_truemper(n)) is None:
        raise LinkageError("input is not a copy of the double-rail graph")
    s1, t1, s2, t2 = g.terminals()
    taken = {str(v) for v in g.vertices}
    ns1, nt1, ns2, nt2 = (_fresh(f"{x}'", taken) for x in (s1, t1, s2, t2))
    e = g.graph.next_edge_id
    new_edges = [
        (ns1, s1), (ns1, ns2), (ns1, nt2), (ns2, s2), (ns2, nt1), (t1, nt1), (t2, nt2), (nt1, nt2),
    ]
    triples = list(g.graph.edges) + [(e + k, a, b) for k, (a, b) in enumerate(new_edges)]
    lk = g.linkage
    linkage = TwoLinkage(
        (ns1,) + lk.path1 + (nt1,),
        (ns2,) + lk.path2 + (nt2,),
        (e,) + lk.edges1 + (e + 5,),
        (e + 3,) + lk.edges2 + (e + 6,),
    )
    graph = Graph(g.graph.vertices + (ns1, nt1, ns2, nt2), tuple(triples))
    out = LinkedGraph(graph, linkage)
    iso = linked_isomorphic(out, generate_truemper(n + 2))
    if iso is None:
        raise RuntimeError("extension is not a copy of the double-rail graph")
    return out, iso


def crossing(g: LinkedGraph, e: int, f: int) -> bool:
    """Rungs e and f meet the two paths in strictly opposite orders.

    Rungs sharing an endpoint never cross.
    """
    for x in (e, f):
        if g.kinds.get(x) is not EdgeKind.RUNG:
            raise LinkageError(f"edge {x} is not a rung")
    (a1, a2), (b1, b2) = g.rung_positions(e), g.rung_positions(f)
    return (a1 - b1) * (a2 - b2) < 0


def _cocrossing(g: LinkedGraph, e: int, f: int) -> bool:
    """Crossing once path 2 is reversed: strictly the same order on both paths."""
    (a1, a2), (b1, b2) = g.rung_positions(e), g.rung_positions(f)
    return (a1 - b1) * (a2 - b2) > 0


@dataclass(frozen=True)
class RungPartition:
    block_a: FrozenSet[int]
    block_b: FrozenSet[int]


def is_valid_partition(g: LinkedGraph, p: RungPartition) -> bool:
    rungs = set(g.rungs())
    if p.block_a & p.block_b or (p.block_a | p.block_b) != rungs:
        return False
    a, b = sorted(p.block_a), sorted(p.block_b)
    if any(crossing(g, x, y) for i, x in enumerate(a) for y in a[i + 1:]):
        return False
    return not any(_cocrossing(g, x, y) for i, x in enumerate(b) for y in b[i + 1:])


def find_valid_partition(g: LinkedGraph, cap: Optional[int] = 512) -> Optional[RungPartition]:
    """Split the rungs into a non-crossing block A and a block B that is
    non-crossing after reversing path 2, or return None.

    Backtracking in rung-id order, A before B, with forced moves propagated:
    a rung in A pushes every rung crossing it into B, and a rung in B pushes
    every rung co-crossing it into A.
    """
    require_chordless(g)
    rungs = sorted(g.rungs())
    if cap is not None and len(rungs) > cap:
        raise OracleSizeError(f"{len(rungs)} rungs exceeds cap {cap}")
    clash = {e: {True: [], False: []} for e in rungs}
    for i, e in enumerate(rungs):
        for f in rungs[i + 1:]:
            if crossing(g, e, f):
                clash[e][True].append(f)
                clash[f][True].append(e)
            elif _cocrossing(g, e, f):
                clash[e][False].append(f)
                clash[f][False].append(e)

    def assign(side: Dict[int, bool], e: int, in_a: bool) -> Optional[Dict[int, bool]]:
        side = dict(side)
        stack = [(e, in_a)]
        while stack:
            x, a = stack.pop()
            if x in side:
                if side[x] != a:
                    return None
                continue
            side[x] = a
            stack.extend((y, not a) for y in clash[x][a])
        return side

    def search(side: Dict[int, bool]) -> Optional[Dict[int, bool]]:
        free = next((e for e in rungs if e not in side), None)
        if free is None:
            return side
        for in_a in (True, False):
            nxt = assign(side, free, in_a)
            if nxt is not None:
                done = search(nxt)
                if done is not None:
                    return done
        return None

    side = search({})
    if side is None:
        return None
    return RungPartition(
        frozenset(e for e, a in side.items() if a),
        frozenset(e for e, a in side.items() if not a),
    )


def random_truemper_minor(
    n: int, rng: random.Random, density: float = 0.5, contract_p: float = 0.3
) -> Tuple[LinkedGraph, MinorWitness]:
    """Sample a linkage minor of Ü_n: keep each rung with probability
    ``density``, contract each rail edge with probability ``contract_p``."""
    u = generate_truemper(n)
    ops = []
    for e, kind in sorted(u.kinds.items()):
        if kind is EdgeKind.RUNG:
            if rng.random() >= density:
                ops.append(DeleteRungEdge(e))
        elif rng.random() < contract_p:
            ops.append(ContractPathEdge(e))
    w = MinorWitness.record(u, ops)
    return replay(u, ops)[0], w
