"""Brute-force linkage enumeration, the ground truth for vitality.

Everything here is exhaustive depth-first search and is meant as a referee
on small instances, not as a practical disjoint-paths solver.
"""

from __future__ import annotations

from typing import Iterator, List, Optional, Sequence

from .core import LinkedGraph, OracleSizeError, TwoLinkage, Vertex

DEFAULT_CAP = 16


def _guard(g: LinkedGraph, cap: Optional[int]) -> None:
    if cap is not None and len(g.vertices) > cap:
        raise OracleSizeError(f"{len(g.vertices)} vertices exceeds the oracle cap of {cap}")


def _simple_paths(g: LinkedGraph, start: Vertex, end: Vertex, blocked: set) -> Iterator[List[Vertex]]:
    """All simple paths start -> end avoiding ``blocked``, in lexicographic
    order of vertex rank."""
    rank = {v: k for k, v in enumerate(g.vertices)}
    nbrs = {v: sorted(set(g.graph.neighbors(v)), key=rank.__getitem__) for v in g.vertices}
    if start in blocked or end in blocked:
        return
    path = [start]
    on_path = {start}

    def extend(v):
        if v == end:
            yield list(path)
            return
        for w in nbrs[v]:
            if w in on_path or w in blocked:
                continue
            path.append(w)
            on_path.add(w)
            yield from extend(w)
            path.pop()
            on_path.discard(w)

    yield from extend(start)


def iter_linkages(g: LinkedGraph, spanning: bool = False, cap: Optional[int] = DEFAULT_CAP) -> Iterator[TwoLinkage]:
    """Yield every order-2 linkage joining (s1, t1) and (s2, t2).

    Linkages are compared as vertex sequences, so parallel edges never give
    rise to distinct entries.  Order is lexicographic in the vertex ranks of
    path 1, then path 2 (rank = position in ``g.vertices``).
    """
    _guard(g, cap)
    s1, t1, s2, t2 = g.terminals()
    everything = set(g.vertices)
    for p1 in _simple_paths(g, s1, t1, {s2, t2}):
        for p2 in _simple_paths(g, s2, t2, set(p1)):
            if spanning and len(p1) + len(p2) != len(everything):
                continue
            yield TwoLinkage.bind(g.graph, p1, p2)


def enumerate_linkages(g: LinkedGraph, cap: Optional[int] = DEFAULT_CAP) -> List[TwoLinkage]:
    return list(iter_linkages(g, spanning=False, cap=cap))


def enumerate_spanning_linkages(g: LinkedGraph, cap: Optional[int] = DEFAULT_CAP) -> List[TwoLinkage]:
    return list(iter_linkages(g, spanning=True, cap=cap))


def find_second_linkage(g: LinkedGraph, cap: Optional[int] = DEFAULT_CAP) -> Optional[TwoLinkage]:
    """First linkage, in enumeration order, whose paths differ from g's own.

    The alternative need not be spanning: uniqueness is about any
    collection of paths joining the same terminal pairs.
    """
    for lk in iter_linkages(g, spanning=False, cap=cap):
        if not lk.same_paths(g.linkage):
            return lk
    return None


def is_vital(g: LinkedGraph, cap: Optional[int] = DEFAULT_CAP) -> bool:
    """The (spanning) linkage of ``g`` is the only one joining its terminals."""
    return find_second_linkage(g, cap=cap) is None


def is_linkage_of(g: LinkedGraph, lk: TwoLinkage) -> bool:
    """Whether ``lk`` is an order-2 linkage of g's graph with g's terminal pairs."""
    s1, t1, s2, t2 = g.terminals()
    p1, p2 = lk.path1, lk.path2
    if not p1 or not p2 or (p1[0], p1[-1], p2[0], p2[-1]) != (s1, t1, s2, t2):
        return False
    if len(set(p1) | set(p2)) != len(p1) + len(p2):
        return False
    return all(_is_walk(g, p) for p in (p1, p2))


def _is_walk(g: LinkedGraph, path: Sequence[Vertex]) -> bool:
    vs = set(g.vertices)
    if any(v not in vs for v in path):
        return False
    return all(g.graph.edges_between(a, b) for a, b in zip(path, path[1:]))
