"""Exact pathwidth for small graphs, and path decomposition checking.

Pathwidth equals the vertex separation number: the minimum, over linear
orders of the vertices, of the largest number of already-placed vertices
that still have a neighbour yet to be placed.  That minimum is computed by
dynamic programming over vertex subsets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, List, Tuple, Union

from .core import Graph, LinkedGraph, OracleSizeError, Vertex

DEFAULT_CAP = 16


@dataclass(frozen=True)
class PathDecomposition:
    bags: Tuple[FrozenSet[Vertex], ...]

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1


def _as_graph(g: Union[Graph, LinkedGraph]) -> Graph:
    return g.graph if isinstance(g, LinkedGraph) else g


def exact_pathwidth(g: Union[Graph, LinkedGraph], cap: int = DEFAULT_CAP) -> Tuple[int, PathDecomposition]:
    """Minimum width and an optimal path decomposition.

    O(2^n * n) time and memory; refuses graphs above ``cap`` vertices.
    """
    g = _as_graph(g)
    vs = list(g.vertices)
    n = len(vs)
    if n > cap:
        raise OracleSizeError(f"{n} vertices exceeds the pathwidth cap of {cap}")
    if n == 0:
        return -1, PathDecomposition(())
    index = {v: k for k, v in enumerate(vs)}
    nbr = [0] * n
    for _, a, b in g.edges:
        nbr[index[a]] |= 1 << index[b]
        nbr[index[b]] |= 1 << index[a]

    full = (1 << n) - 1

    def boundary(s: int) -> int:
        outside = full & ~s
        count, rest = 0, s
        while rest:
            low = rest & -rest
            if nbr[low.bit_length() - 1] & outside:
                count += 1
            rest ^= low
        return count

    best = [0] * (1 << n)
    last = [-1] * (1 << n)
    for s in range(1, 1 << n):
        here = boundary(s)
        top, pick, rest = n + 1, -1, s
        while rest:
            low = rest & -rest
            val = best[s ^ low]
            if val < top:
                top, pick = val, low.bit_length() - 1
            rest ^= low
        best[s] = max(top, here)
        last[s] = pick

    order: List[int] = []
    s = full
    while s:
        order.append(last[s])
        s ^= 1 << last[s]
    order.reverse()

    bags = []
    placed = 0
    for k in order:
        bag = {vs[k]}
        rest = placed
        while rest:
            low = rest & -rest
            j = low.bit_length() - 1
            if nbr[j] & (full & ~placed):
                bag.add(vs[j])
            rest ^= low
        bags.append(frozenset(bag))
        placed |= 1 << k
    return best[full], PathDecomposition(tuple(bags))


def verify_path_decomposition(g: Union[Graph, LinkedGraph], d: PathDecomposition) -> bool:
    g = _as_graph(g)
    vset = set(g.vertices)
    if any(not set(b) <= vset for b in d.bags):
        return False
    covered = set().union(*d.bags) if d.bags else set()
    if covered != vset:
        return False
    for _, a, b in g.edges:
        if not any(a in bag and b in bag for bag in d.bags):
            return False
    for v in vset:
        hits = [k for k, bag in enumerate(d.bags) if v in bag]
        if hits[-1] - hits[0] + 1 != len(hits):
            return False
    return True
