"""Text format for linked graphs, and DOT export.

Format (UTF-8, line based, ``#`` starts a comment)::

    path1: s1 a b t1
    path2: s2 c t2
    rung s1 c
    rung a c

``path1:`` and ``path2:`` appear exactly once each.  Every ``rung`` line adds
one off-linkage edge; repeated lines give parallel edges.  Edge ids are
assigned in reading order: path 1, path 2, then rungs.
"""

from __future__ import annotations

import math
from typing import Dict, List, Optional, Tuple

from .core import EdgeKind, LinkageError, LinkedGraph, NotSpanningError, Vertex, linked_isomorphic, replay, transform
from .truemper import TruemperCertificate, generate_truemper


class DocumentError(LinkageError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _tokens(line: str) -> List[Tuple[int, str]]:
    out, k = [], 0
    while k < len(line):
        if line[k].isspace():
            k += 1
            continue
        j = k
        while j < len(line) and not line[j].isspace():
            j += 1
        out.append((k + 1, line[k:j]))
        k = j
    return out


def parse_linked_graph(text: str) -> LinkedGraph:
    paths: Dict[str, Tuple[int, List[Tuple[int, str]]]] = {}
    rungs: List[Tuple[int, Tuple[int, str], Tuple[int, str]]] = []
    last = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last = lineno
        line = raw.split("#", 1)[0]
        toks = _tokens(line)
        if not toks:
            continue
        col, head = toks[0]
        if head in ("path1:", "path2:"):
            key = head[:-1]
            if key in paths:
                raise DocumentError(f"{key} declared twice", lineno, col)
            if len(toks) < 2:
                raise DocumentError(f"{key} needs at least one vertex", lineno, col + len(head))
            paths[key] = (lineno, toks[1:])
        elif head == "rung":
            if len(toks) != 3:
                at = toks[3][0] if len(toks) > 3 else len(line.rstrip()) + 1
                raise DocumentError("rung takes exactly two vertices", lineno, at)
            rungs.append((lineno, toks[1], toks[2]))
        else:
            raise DocumentError(f"unknown keyword {head!r}", lineno, col)
    for key in ("path1", "path2"):
        if key not in paths:
            raise DocumentError(f"missing {key}", max(last, 1))

    where: Dict[str, str] = {}
    for key in ("path1", "path2"):
        lineno, toks = paths[key]
        for col, name in toks:
            if name in where:
                raise DocumentError(f"vertex {name!r} already on {where[name]}", lineno, col)
            where[name] = key
    extra = []
    for lineno, (ca, a), (cb, b) in rungs:
        for col, name in ((ca, a), (cb, b)):
            if name not in where:
                raise NotSpanningError(f"line {lineno}, column {col}: vertex {name!r} is on neither path")
        if a == b:
            raise DocumentError(f"loop at {a!r}", lineno, cb)
        extra.append((a, b))
    p1 = [name for _, name in paths["path1"][1]]
    p2 = [name for _, name in paths["path2"][1]]
    return LinkedGraph.build(p1, p2, extra)


def _name(v: Vertex) -> str:
    s = str(v)
    if not s or any(c.isspace() for c in s) or "#" in s or s in ("rung", "path1:", "path2:"):
        raise ValueError(f"vertex {v!r} cannot be written in the text format")
    return s


def serialize_linked_graph(g: LinkedGraph, comment: Optional[str] = None) -> str:
    lines = []
    if comment:
        lines += [f"# {c}" for c in comment.splitlines()]
    lines.append("path1: " + " ".join(_name(v) for v in g.path(1)))
    lines.append("path2: " + " ".join(_name(v) for v in g.path(2)))
    bound = set(g.linkage.edges1) | set(g.linkage.edges2)
    for e, a, b in g.graph.edges:
        if e not in bound:
            lines.append(f"rung {_name(a)} {_name(b)}")
    return "\n".join(lines) + "\n"


def _spiderweb(n: int) -> Dict[str, Tuple[float, float]]:
    """Radial positions for the vertices of Ü_n."""
    pos = {}
    for i in range(1, n + 1):
        angle = math.pi * (i - 1) / max(n, 1)
        r = 1.0 + 0.6 * (i - 1)
        pos[f"v{i}"] = (r * math.cos(angle), r * math.sin(angle))
        pos[f"u{i}"] = (-r * math.cos(angle), -r * math.sin(angle))
    return pos


def to_dot(g: LinkedGraph, certificate: Optional[TruemperCertificate] = None) -> str:
    """DOT drawing: path edges bold, rungs thin, chords dashed.

    Without a certificate the paths are drawn as two rows.  With one, each
    vertex sits at the centroid of its preimages in the radial drawing of
    Ü_n.  The layout is illustrative only.
    """
    pos: Dict[Vertex, Tuple[float, float]] = {}
    if certificate is not None:
        web = _spiderweb(certificate.n)
        result, where = replay(generate_truemper(certificate.n), certificate.witness.ops)
        r1, r2 = certificate.reversal_flags
        iso = linked_isomorphic(result, transform(g, r1, r2, certificate.path_swap))
        if iso is not None:
            groups: Dict[Vertex, List[Tuple[float, float]]] = {}
            for src, dst in where.items():
                groups.setdefault(iso[dst], []).append(web[src])
            pos = {v: (sum(x for x, _ in ps) / len(ps), sum(y for _, y in ps) / len(ps)) for v, ps in groups.items()}
    if not pos:
        for i, row in ((1, 1.0), (2, 0.0)):
            for k, v in enumerate(g.path(i)):
                pos[v] = (float(k), row)

    def q(v):
        return '"' + str(v).replace('"', '\\"') + '"'

    out = ["graph linked {", "  node [shape=circle];"]
    terminals = set(g.terminals())
    for v in g.vertices:
        x, y = pos[v]
        extra = ", style=filled, fillcolor=lightgray" if v in terminals else ""
        out.append(f'  {q(v)} [pos="{x:.3f},{y:.3f}!"{extra}];')
    style = {EdgeKind.PATH: "style=bold, penwidth=2.5", EdgeKind.RUNG: "penwidth=1", EdgeKind.CHORD: "style=dashed"}
    for e, a, b in g.graph.edges:
        out.append(f'  {q(a)} -- {q(b)} [{style[g.kinds[e]]}, label="{e}"];')
    out.append("}")
    return "\n".join(out) + "\n"
