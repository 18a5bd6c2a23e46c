"""Graphs with a designated order-2 linkage, and linkage-minor operations.

A :class:`LinkedGraph` is a loopless multigraph together with two
vertex-disjoint paths covering every vertex.  All values are immutable;
every operation returns a new value.

Edge identifiers are integers.  They are stable under deletion and
contraction of other edges and are never reused within one graph lineage.
When a path edge is contracted, the merged vertex keeps the identifier of
the endpoint closer to the start terminal of its path.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple, Union

Vertex = Hashable
EdgeTriple = Tuple[int, Vertex, Vertex]


class LinkageError(ValueError):
    """Malformed graph or linkage."""


class NotSpanningError(LinkageError):
    """The linkage does not cover every vertex of the graph."""


class ChordError(LinkageError):
    """An operation that requires a chordless linkage was given chords."""


class OracleSizeError(RuntimeError):
    """An exponential search was asked to run on too large an instance."""


class MinorOpError(LinkageError):
    """A minor operation could not be applied.

    ``index`` is the position of the failing op inside a witness, or None
    when a single operation was applied directly.
    """

    def __init__(self, message: str, index: Optional[int] = None):
        if index is not None:
            message = f"op {index}: {message}"
        super().__init__(message)
        self.index = index


class EdgeKind(enum.Enum):
    PATH = "path"
    CHORD = "chord"
    RUNG = "rung"


@dataclass(frozen=True)
class Graph:
    """Finite loopless multigraph with integer edge identifiers.

    ``edges`` holds ``(edge_id, u, v)`` triples sorted by id.
    """

    vertices: Tuple[Vertex, ...]
    edges: Tuple[EdgeTriple, ...]
    next_edge_id: int = -1

    def __post_init__(self):
        vertices = tuple(self.vertices)
        edges = tuple(sorted((int(e), u, v) for e, u, v in self.edges))
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", edges)
        vset = set(vertices)
        if len(vset) != len(vertices):
            raise LinkageError("duplicate vertex")
        seen = set()
        for e, u, v in edges:
            if e in seen:
                raise LinkageError(f"duplicate edge id {e}")
            seen.add(e)
            if u not in vset or v not in vset:
                raise LinkageError(f"edge {e} has an unknown endpoint")
            if u == v:
                raise LinkageError(f"edge {e} is a loop at {u!r}")
        floor = edges[-1][0] + 1 if edges else 0
        if self.next_edge_id < floor:
            object.__setattr__(self, "next_edge_id", floor)

    @cached_property
    def endpoints(self) -> Dict[int, Tuple[Vertex, Vertex]]:
        return {e: (u, v) for e, u, v in self.edges}

    @cached_property
    def incidence(self) -> Dict[Vertex, List[int]]:
        inc: Dict[Vertex, List[int]] = {v: [] for v in self.vertices}
        for e, u, v in self.edges:
            inc[u].append(e)
            inc[v].append(e)
        return inc

    def degree(self, v: Vertex) -> int:
        return len(self.incidence[v])

    def other_end(self, e: int, v: Vertex) -> Vertex:
        a, b = self.endpoints[e]
        return b if a == v else a

    def neighbors(self, v: Vertex) -> List[Vertex]:
        return [self.other_end(e, v) for e in self.incidence[v]]

    def edges_between(self, u: Vertex, v: Vertex) -> List[int]:
        return [e for e in self.incidence[u] if self.other_end(e, u) == v]

    def edge_multiset(self) -> Counter:
        return Counter(frozenset((u, v)) for _, u, v in self.edges)


@dataclass(frozen=True)
class TwoLinkage:
    """Two vertex-disjoint paths, each bound edge-by-edge to the host graph.

    ``edges1[k]`` joins ``path1[k]`` and ``path1[k + 1]``; likewise for path 2.
    A single-vertex path (no edges) has its two terminals coinciding.
    """

    path1: Tuple[Vertex, ...]
    path2: Tuple[Vertex, ...]
    edges1: Tuple[int, ...] = ()
    edges2: Tuple[int, ...] = ()

    def __post_init__(self):
        for name in ("path1", "path2", "edges1", "edges2"):
            object.__setattr__(self, name, tuple(getattr(self, name)))

    def path(self, i: int) -> Tuple[Vertex, ...]:
        return self.path1 if i == 1 else self.path2

    def path_edges(self, i: int) -> Tuple[int, ...]:
        return self.edges1 if i == 1 else self.edges2

    @property
    def s1(self):
        return self.path1[0]

    @property
    def t1(self):
        return self.path1[-1]

    @property
    def s2(self):
        return self.path2[0]

    @property
    def t2(self):
        return self.path2[-1]

    def same_paths(self, other: "TwoLinkage") -> bool:
        """Compare as vertex sequences, ignoring which parallel edges are used."""
        return self.path1 == other.path1 and self.path2 == other.path2

    @classmethod
    def bind(cls, graph: Graph, path1: Sequence[Vertex], path2: Sequence[Vertex]) -> "TwoLinkage":
        """Bind vertex sequences to edges of ``graph``, smallest id first."""
        bound = []
        for path in (path1, path2):
            ids = []
            for a, b in zip(path, path[1:]):
                between = graph.edges_between(a, b)
                if not between:
                    raise LinkageError(f"{a!r} and {b!r} are not adjacent")
                ids.append(min(between))
            bound.append(tuple(ids))
        return cls(tuple(path1), tuple(path2), bound[0], bound[1])


@dataclass(frozen=True)
class LinkedGraph:
    """A graph with a spanning linkage of order 2."""

    graph: Graph
    linkage: TwoLinkage

    def __post_init__(self):
        g, lk = self.graph, self.linkage
        vset = set(g.vertices)
        for i in (1, 2):
            path, ids = lk.path(i), lk.path_edges(i)
            if not path:
                raise LinkageError(f"path {i} is empty")
            if len(set(path)) != len(path):
                raise LinkageError(f"path {i} repeats a vertex")
            if len(ids) != len(path) - 1:
                raise LinkageError(f"path {i} has {len(path)} vertices but {len(ids)} edges")
            for v in path:
                if v not in vset:
                    raise LinkageError(f"path {i} vertex {v!r} is not in the graph")
            for k, e in enumerate(ids):
                if e not in g.endpoints:
                    raise LinkageError(f"path {i} uses unknown edge {e}")
                if set(g.endpoints[e]) != {path[k], path[k + 1]}:
                    raise LinkageError(f"edge {e} does not join {path[k]!r} and {path[k + 1]!r}")
        if set(lk.path1) & set(lk.path2):
            raise LinkageError("the two paths share a vertex")
        missing = vset - set(lk.path1) - set(lk.path2)
        if missing:
            raise NotSpanningError(f"linkage misses vertices {sorted(map(str, missing))}")

    @classmethod
    def build(
        cls,
        path1: Sequence[Vertex],
        path2: Sequence[Vertex],
        extra: Iterable[Tuple[Vertex, Vertex]] = (),
    ) -> "LinkedGraph":
        """Build from vertex sequences plus off-linkage edges.

        Ids are assigned in order: path 1 edges, path 2 edges, then ``extra``.
        """
        triples: List[EdgeTriple] = []
        bound = []
        for path in (path1, path2):
            ids = []
            for a, b in zip(path, path[1:]):
                ids.append(len(triples))
                triples.append((len(triples), a, b))
            bound.append(ids)
        extra = list(extra)
        vertices = list(path1) + list(path2)
        known = set(vertices)
        for u, v in extra:
            for x in (u, v):
                if x not in known:
                    known.add(x)
                    vertices.append(x)
            triples.append((len(triples), u, v))
        graph = Graph(tuple(vertices), tuple(triples))
        return cls(graph, TwoLinkage(tuple(path1), tuple(path2), tuple(bound[0]), tuple(bound[1])))

    @cached_property
    def positions(self) -> Dict[Vertex, Tuple[int, int]]:
        """Vertex -> (path index, position counted from the start terminal)."""
        pos = {}
        for i in (1, 2):
            for k, v in enumerate(self.linkage.path(i)):
                pos[v] = (i, k)
        return pos

    @cached_property
    def kinds(self) -> Dict[int, EdgeKind]:
        bound = set(self.linkage.edges1) | set(self.linkage.edges2)
        out = {}
        for e, u, v in self.graph.edges:
            if e in bound:
                out[e] = EdgeKind.PATH
            elif self.positions[u][0] == self.positions[v][0]:
                out[e] = EdgeKind.CHORD
            else:
                out[e] = EdgeKind.RUNG
        return out

    @property
    def vertices(self) -> Tuple[Vertex, ...]:
        return self.graph.vertices

    def path(self, i: int) -> Tuple[Vertex, ...]:
        return self.linkage.path(i)

    def terminals(self) -> Tuple[Vertex, Vertex, Vertex, Vertex]:
        lk = self.linkage
        return lk.s1, lk.t1, lk.s2, lk.t2

    def rungs(self) -> List[int]:
        return [e for e, k in self.kinds.items() if k is EdgeKind.RUNG]

    def path_edges(self) -> List[int]:
        return [e for e, k in self.kinds.items() if k is EdgeKind.PATH]

    def rung_positions(self, e: int) -> Tuple[int, int]:
        """Positions (on path 1, on path 2) of the two ends of rung ``e``."""
        a, b = self.graph.endpoints[e]
        pa, pb = self.positions[a], self.positions[b]
        if pa[0] == 1:
            return pa[1], pb[1]
        return pb[1], pa[1]


def classify_edges(g: LinkedGraph) -> Dict[int, EdgeKind]:
    return dict(g.kinds)


def is_chordless(g: LinkedGraph) -> bool:
    return EdgeKind.CHORD not in g.kinds.values()


def require_chordless(g: LinkedGraph) -> None:
    if not is_chordless(g):
        chords = sorted(e for e, k in g.kinds.items() if k is EdgeKind.CHORD)
        raise ChordError(f"linkage has chords {chords}")


def left_of(g: LinkedGraph, path_index: int, v: Vertex, w: Vertex) -> bool:
    """True iff ``v`` is strictly closer than ``w`` to the start of the path."""
    pv, pw = g.positions.get(v), g.positions.get(w)
    for x, p in ((v, pv), (w, pw)):
        if p is None or p[0] != path_index:
            raise LinkageError(f"{x!r} is not on path {path_index}")
    return pv[1] < pw[1]


def reverse_path(g: LinkedGraph, path_index: int) -> LinkedGraph:
    lk = g.linkage
    if path_index == 1:
        new = TwoLinkage(lk.path1[::-1], lk.path2, lk.edges1[::-1], lk.edges2)
    elif path_index == 2:
        new = TwoLinkage(lk.path1, lk.path2[::-1], lk.edges1, lk.edges2[::-1])
    else:
        raise ValueError("path_index must be 1 or 2")
    return LinkedGraph(g.graph, new)


def swap_paths(g: LinkedGraph) -> LinkedGraph:
    lk = g.linkage
    return LinkedGraph(g.graph, TwoLinkage(lk.path2, lk.path1, lk.edges2, lk.edges1))


def transform(g: LinkedGraph, reverse1: bool = False, reverse2: bool = False,
              swap: bool = False) -> LinkedGraph:
    """Reverse the flagged paths, then optionally exchange the two paths."""
    if reverse1:
        g = reverse_path(g, 1)
    if reverse2:
        g = reverse_path(g, 2)
    if swap:
        g = swap_paths(g)
    return g


# Fixed exploration order for relabellings: reversals (none, 1, 2, both),
# then the same four with the paths swapped.
TRANSFORMS: Tuple[Tuple[bool, bool, bool], ...] = tuple(
    (r1, r2, sw) for sw in (False, True) for r1, r2 in ((False, False), (True, False), (False, True), (True, True))
)


def contract_path_edge(g: LinkedGraph, e: int) -> LinkedGraph:
    if g.kinds.get(e) is not EdgeKind.PATH:
        raise MinorOpError(f"edge {e} is not a path edge")
    lk = g.linkage
    i = 1 if e in lk.edges1 else 2
    path, ids = list(lk.path(i)), list(lk.path_edges(i))
    k = ids.index(e)
    keep, gone = path[k], path[k + 1]
    triples = []
    for eid, u, v in g.graph.edges:
        if eid == e:
            continue
        u = keep if u == gone else u
        v = keep if v == gone else v
        if u == v:
            raise MinorOpError(f"contracting edge {e} would turn edge {eid} into a loop")
        triples.append((eid, u, v))
    del path[k + 1]
    del ids[k]
    graph = Graph(tuple(x for x in g.graph.vertices if x != gone), tuple(triples), g.graph.next_edge_id)
    if i == 1:
        new = TwoLinkage(tuple(path), lk.path2, tuple(ids), lk.edges2)
    else:
        new = TwoLinkage(lk.path1, tuple(path), lk.edges1, tuple(ids))
    return LinkedGraph(graph, new)


def delete_rung_edge(g: LinkedGraph, e: int) -> LinkedGraph:
    if g.kinds.get(e) is not EdgeKind.RUNG:
        raise MinorOpError(f"edge {e} is not a rung edge")
    graph = Graph(g.graph.vertices, tuple(t for t in g.graph.edges if t[0] != e), g.graph.next_edge_id)
    return LinkedGraph(graph, g.linkage)


def add_edge(g: LinkedGraph, u: Vertex, v: Vertex) -> Tuple[LinkedGraph, int]:
    """Add an off-linkage edge with a fresh id."""
    e = g.graph.next_edge_id
    graph = Graph(g.graph.vertices, g.graph.edges + ((e, u, v),), e + 1)
    return LinkedGraph(graph, g.linkage), e


@dataclass(frozen=True)
class ContractPathEdge:
    edge: int


@dataclass(frozen=True)
class DeleteRungEdge:
    edge: int


MinorOp = Union[ContractPathEdge, DeleteRungEdge]


def apply_op(g: LinkedGraph, op: MinorOp) -> LinkedGraph:
    if isinstance(op, ContractPathEdge):
        return contract_path_edge(g, op.edge)
    if isinstance(op, DeleteRungEdge):
        return delete_rung_edge(g, op.edge)
    raise TypeError(f"not a minor op: {op!r}")


def replay(g: LinkedGraph, ops: Iterable[MinorOp]) -> Tuple[LinkedGraph, Dict[Vertex, Vertex]]:
    """Apply ``ops`` in order; also return where every source vertex ends up."""
    where = {v: v for v in g.vertices}
    for index, op in enumerate(ops):
        try:
            if isinstance(op, ContractPathEdge):
                lk = g.linkage
                # the vertex that disappears is the endpoint further from s_i
                for i in (1, 2):
                    ids = lk.path_edges(i)
                    if op.edge in ids:
                        k = ids.index(op.edge)
                        keep, gone = lk.path(i)[k], lk.path(i)[k + 1]
                        break
                else:
                    keep = gone = None
                g = apply_op(g, op)
                if gone is not None:
                    for v, w in where.items():
                        if w == gone:
                            where[v] = keep
            else:
                g = apply_op(g, op)
        except MinorOpError as exc:
            raise MinorOpError(str(exc), index) from None
    return g, where


@dataclass(frozen=True)
class MinorWitness:
    """A replayable script of linkage-minor operations.

    ``vertex_map`` sends every source vertex to the result vertex it
    collapses to.
    """

    ops: Tuple[MinorOp, ...] = ()
    vertex_map: Dict[Vertex, Vertex] = field(default_factory=dict, compare=False)

    @classmethod
    def record(cls, source: LinkedGraph, ops: Iterable[MinorOp]) -> "MinorWitness":
        ops = tuple(ops)
        _, where = replay(source, ops)
        return cls(ops, where)

    def then(self, other: "MinorWitness") -> "MinorWitness":
        vm = {v: other.vertex_map.get(w, w) for v, w in self.vertex_map.items()}
        return MinorWitness(self.ops + other.ops, vm)


def apply_witness(g: LinkedGraph, w: MinorWitness) -> LinkedGraph:
    return replay(g, w.ops)[0]


def _series_edge(g: LinkedGraph) -> Optional[int]:
    """Path edge leading into the first non-terminal path vertex that is
    incident only to its two path edges."""
    for i in (1, 2):
        path, ids = g.path(i), g.linkage.path_edges(i)
        for k in range(1, len(path) - 1):
            if g.graph.degree(path[k]) == 2:
                return ids[k - 1]
    return None


def simplify(g: LinkedGraph) -> Tuple[LinkedGraph, MinorWitness]:
    """Collapse parallel rungs and series classes along the paths.

    Parallel rungs keep their smallest id.  A non-terminal path vertex whose
    only edges are its two path edges is merged into its predecessor.
    """
    require_chordless(g)
    source, ops = g, []
    while True:
        groups: Dict[frozenset, List[int]] = {}
        for e in g.rungs():
            groups.setdefault(frozenset(g.graph.endpoints[e]), []).append(e)
        extra = sorted(e for ids in groups.values() for e in sorted(ids)[1:])
        if extra:
            for e in extra:
                ops.append(DeleteRungEdge(e))
                g = delete_rung_edge(g, e)
            continue
        e = _series_edge(g)
        if e is None:
            break
        ops.append(ContractPathEdge(e))
        g = contract_path_edge(g, e)
    return g, MinorWitness.record(source, ops)


def _positional_map(g: LinkedGraph, h: LinkedGraph) -> Optional[Dict[Vertex, Vertex]]:
    if len(g.path(1)) != len(h.path(1)) or len(g.path(2)) != len(h.path(2)):
        return None
    m = dict(zip(g.path(1), h.path(1)))
    m.update(zip(g.path(2), h.path(2)))
    return m


def linked_isomorphic(g: LinkedGraph, h: LinkedGraph, relaxed: bool = False) -> Optional[Dict[Vertex, Vertex]]:
    """Bijection V(g) -> V(h) preserving edges (with multiplicity), paths,
    path order and terminal labels, or None.

    With ``relaxed`` the terminal labels of ``h`` may be permuted by path
    reversals and by exchanging the two paths.
    """
    if len(g.graph.edges) != len(h.graph.edges):
        return None
    target = h.graph.edge_multiset()
    for r1, r2, sw in (TRANSFORMS if relaxed else TRANSFORMS[:1]):
        m = _positional_map(g, transform(h, r1, r2, sw))
        if m is None:
            continue
        mapped = Counter(frozenset((m[u], m[v])) for _, u, v in g.graph.edges)
        if mapped == target:
            return m
    return None
