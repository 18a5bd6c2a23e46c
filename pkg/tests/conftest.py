"""Shared fixtures and independent brute-force oracles.

The oracles here deliberately avoid the package's own search code: they
work on plain adjacency structures with itertools, so agreement with the
library is meaningful.
"""

from itertools import combinations, permutations

import pytest
from hypothesis import strategies as st

from vitallink.core import LinkedGraph

# (criterion id, passed, detail) rows filled by test_acceptance.py
ACCEPTANCE_ROWS = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_ROWS:
        return
    terminalreporter.section("acceptance criteria")
    for cid, ok, detail in ACCEPTANCE_ROWS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {cid}: {detail}")


def bare_linkage():
    return LinkedGraph.build(("s1", "t1"), ("s2", "t2"))


def subdivided_xx(which=("s1a",)):
    """XX with the named path edges subdivided once each."""
    p1, p2 = ["s1", "a", "t1"], ["s2", "b", "t2"]
    for name in which:
        path, a, b = {"s1a": (p1, "s1", "a"), "at1": (p1, "a", "t1"),
                      "s2b": (p2, "s2", "b"), "bt2": (p2, "b", "t2")}[name]
        path.insert(path.index(b), f"x_{a}{b}")
    return LinkedGraph.build(p1, p2, [("s1", "b"), ("t1", "b"), ("s2", "a"), ("t2", "a")])


# --- independent oracles -------------------------------------------------


def brute_linkages(g):
    """All (path1, path2) vertex-sequence pairs joining the terminals,
    found by trying every ordered selection of interior vertices."""
    adj = {v: set(g.graph.neighbors(v)) for v in g.vertices}
    s1, t1, s2, t2 = g.terminals()

    def paths(s, t, pool):
        if s == t:
            yield (s,)
            return
        pool = [v for v in pool if v not in (s, t)]
        for k in range(len(pool) + 1):
            for mid in permutations(pool, k):
                seq = (s,) + mid + (t,)
                if all(b in adj[a] for a, b in zip(seq, seq[1:])):
                    yield seq

    out = []
    rest = [v for v in g.vertices if v not in (s2, t2)]
    for p1 in paths(s1, t1, rest):
        pool = [v for v in g.vertices if v not in p1]
        for p2 in paths(s2, t2, pool):
            out.append((p1, p2))
    return out


def brute_has_xx(g):
    """Try every (contracted path edges, deleted rungs) pair; the result is
    XX iff it has 3+3 path vertices and its rungs are exactly one copy of
    each of s1-b, t1-b, s2-a, t2-a (centres a, b in the middle)."""
    lk = g.linkage
    pe = [(1, k) for k in range(len(lk.edges1))] + [(2, k) for k in range(len(lk.edges2))]
    bound = set(lk.edges1) | set(lk.edges2)
    rungs = [(u, v) for e, u, v in g.graph.edges if e not in bound]
    for c in range(len(pe) + 1):
        for contracted in combinations(pe, c):
            block = {}
            for i in (1, 2):
                path, b = lk.path(i), 0
                for k, v in enumerate(path):
                    if k > 0 and (i, k - 1) not in contracted:
                        b += 1
                    block[v] = (i, b)
            if max(b for i, b in block.values() if i == 1) != 2 or max(b for i, b in block.values() if i == 2) != 2:
                continue
            for d in range(len(rungs) + 1):
                for kept in combinations(range(len(rungs)), len(rungs) - d):
                    pairs = sorted(tuple(sorted((block[rungs[j][0]], block[rungs[j][1]]))) for j in kept)
                    if pairs == sorted([((1, 0), (2, 1)), ((1, 2), (2, 1)), ((1, 1), (2, 0)), ((1, 1), (2, 2))]):
                        return True
    return False


def brute_pathwidth(vertices, edges):
    """Vertex separation number by trying every vertex order."""
    vertices = list(vertices)
    adj = {v: set() for v in vertices}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    best = len(vertices)
    for order in permutations(vertices):
        placed, worst = set(), 0
        for v in order:
            placed.add(v)
            worst = max(worst, sum(1 for x in placed if adj[x] - placed))
            if worst >= best:
                break
        best = min(best, worst)
    return best


# --- hypothesis strategies ------------------------------------------------


@st.composite
def linked_graphs(draw, max_len=4, max_rungs=8):
    """Chordless linked graphs, parallel rungs allowed."""
    n1 = draw(st.integers(1, max_len))
    n2 = draw(st.integers(1, max_len))
    p1 = [f"p{k}" for k in range(n1)]
    p2 = [f"q{k}" for k in range(n2)]
    pairs = draw(st.lists(st.tuples(st.integers(0, n1 - 1), st.integers(0, n2 - 1)), max_size=max_rungs))
    return LinkedGraph.build(p1, p2, [(p1[i], p2[j]) for i, j in pairs])


@pytest.fixture
def xx():
    from vitallink.xx import canonical_xx

    return canonical_xx()
