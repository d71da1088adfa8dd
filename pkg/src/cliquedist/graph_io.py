"""Readers for edge lists, a GML subset and a Pajek subset; canonical edge-list writer.

Every reader returns an undirected simple :class:`Graph`. Duplicate edges and
reversed arcs collapse; self-loops are rejected.
"""

from __future__ import annotations

import re
from pathlib import Path

from .graph import Graph, GraphError

FORMATS = ("edgelist", "gml", "pajek")


class GraphParseError(ValueError):
    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


def _build(n, edges, labels=None) -> Graph:
    """Build, converting self-loop errors into parse errors that carry the line."""
    pairs = []
    for u, v, lineno in edges:
        if u == v:
            raise GraphParseError(f"self-loop on {labels[u] if labels else u}", lineno)
        pairs.append((u, v))
    return Graph.build(n, pairs, labels)


def parse_edge_list(text: str) -> Graph:
    """One ``a b`` pair per line; labels are mapped to ids in first-appearance order."""
    index: dict[str, int] = {}
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(f"expected two vertex labels, got {len(parts)} tokens", lineno)
        ids = [index.setdefault(tok, len(index)) for tok in parts]
        edges.append((ids[0], ids[1], lineno))
    return _build(len(index), edges, tuple(index))


def write_edge_list(g: Graph) -> str:
    return "".join(f"{i} {j}\n" for i, j in g.edges())


_GML_TOKEN = re.compile(r'"[^"]*"|\[|\]|[^\s\[\]"]+')


def _gml_tokens(text: str):
    for lineno, line in enumerate(text.splitlines(), 1):
        # '#' starts a comment outside quoted strings
        for m in _GML_TOKEN.finditer(line):
            tok = m.group()
            if tok.startswith("#"):
                break
            yield tok, lineno


def _gml_tree(text: str) -> list:
    """Nested ``[(key, value, lineno), ...]`` lists; values are strings or sublists."""
    root: list = []
    stack = [root]
    opened: list[int] = []
    key = None
    for tok, lineno in _gml_tokens(text):
        if tok == "[":
            if key is None:
                raise GraphParseError("'[' without a key", lineno)
            child: list = []
            stack[-1].append((key, child, lineno))
            stack.append(child)
            opened.append(lineno)
            key = None
        elif tok == "]":
            if key is not None:
                raise GraphParseError(f"key '{key}' has no value", lineno)
            if len(stack) == 1:
                raise GraphParseError("unbalanced ']'", lineno)
            stack.pop()
            opened.pop()
        elif key is None:
            key = tok
        else:
            stack[-1].append((key, tok, lineno))
            key = None
    if opened:
        raise GraphParseError("unclosed '['", opened[-1])
    if key is not None:
        raise GraphParseError(f"key '{key}' has no value")
    return root


def _gml_scalar(block: list, name: str):
    for k, v, lineno in block:
        if k == name and isinstance(v, str):
            return v.strip('"'), lineno
    return None, None


def parse_gml(text: str) -> Graph:
    """GML subset: ``graph [ node [ id N ] edge [ source A target B ] ]``.

    Other attributes are skipped and ``directed`` is ignored. Node ids are
    remapped densely in declaration order; ``label`` values are kept as labels.
    """
    tree = _gml_tree(text)
    graphs = [v for k, v, _ in tree if k == "graph" and isinstance(v, list)]
    if not graphs:
        raise GraphParseError("no 'graph [ ... ]' block")
    body = graphs[0]
    index: dict[str, int] = {}
    labels: list[str] = []
    edges = []
    for k, v, lineno in body:
        if k != "node" or not isinstance(v, list):
            continue
        node_id, _ = _gml_scalar(v, "id")
        if node_id is None:
            raise GraphParseError("node without id", lineno)
        if node_id in index:
            raise GraphParseError(f"duplicate node id {node_id}", lineno)
        index[node_id] = len(index)
        label, _ = _gml_scalar(v, "label")
        labels.append(label if label is not None else node_id)
    for k, v, lineno in body:
        if k != "edge" or not isinstance(v, list):
            continue
        ends = []
        for attr in ("source", "target"):
            ref, _ = _gml_scalar(v, attr)
            if ref is None:
                raise GraphParseError(f"edge without {attr}", lineno)
            if ref not in index:
                raise GraphParseError(f"edge references undeclared node id {ref}", lineno)
            ends.append(index[ref])
        edges.append((ends[0], ends[1], lineno))
    return _build(len(index), edges, tuple(labels))


def parse_pajek(text: str) -> Graph:
    """Pajek subset: ``*Vertices N`` then ``*Edges`` / ``*Arcs`` (or ``*Edgeslist`` /
    ``*Arcslist``) sections. Ids are 1-based; weights are dropped; arcs symmetrized."""
    n = None
    labels: list[str] = []
    section = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("%"):
            continue
        if line.startswith("*"):
            head = line.split()
            kind = head[0].lower()
            if kind == "*vertices":
                if len(head) < 2:
                    raise GraphParseError("*Vertices without a count", lineno)
                try:
                    n = int(head[1])
                except ValueError:
                    raise GraphParseError(f"bad vertex count {head[1]!r}", lineno) from None
                labels = [str(i) for i in range(1, n + 1)]
                section = "vertices"
            elif kind in ("*edges", "*arcs"):
                section = "pairs"
            elif kind in ("*edgeslist", "*arcslist"):
                section = "lists"
            else:
                section = None
            if section in ("pairs", "lists") and n is None:
                raise GraphParseError("missing *Vertices header", lineno)
            continue
        if section is None:
            continue
        if section == "vertices":
            m = re.match(r'(\d+)\s+"([^"]*)"', line) or re.match(r"(\d+)\s+(\S+)", line)
            if m and 1 <= int(m.group(1)) <= n:
                labels[int(m.group(1)) - 1] = m.group(2)
            continue
        parts = line.split()
        try:
            ids = [int(p) for p in (parts[:2] if section == "pairs" else parts)]
        except ValueError:
            raise GraphParseError(f"non-integer vertex index in {line!r}", lineno) from None
        if section == "pairs" and len(ids) < 2:
            raise GraphParseError("edge line needs two vertex indices", lineno)
        for i in ids:
            if not 1 <= i <= n:
                raise GraphParseError(f"vertex index {i} outside 1..{n}", lineno)
        src = ids[0]
        for dst in ids[1:]:
            edges.append((src - 1, dst - 1, lineno))
    if n is None:
        raise GraphParseError("missing *Vertices header")
    return _build(n, edges, tuple(labels))


_PARSERS = {"edgelist": parse_edge_list, "gml": parse_gml, "pajek": parse_pajek}


def parse(text: str, fmt: str) -> Graph:
    if fmt not in _PARSERS:
        raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")
    return _PARSERS[fmt](text)


def guess_format(path: str | Path) -> str:
    suffix = Path(path).suffix.lower()
    if suffix == ".gml":
        return "gml"
    if suffix in (".net", ".paj"):
        return "pajek"
    return "edgelist"


def read_graph(path: str | Path, fmt: str | None = None) -> Graph:
    text = Path(path).read_text(encoding="utf-8", errors="replace")
    return parse(text, fmt or guess_format(path))


__all__ = [
    "FORMATS",
    "GraphError",
    "GraphParseError",
    "guess_format",
    "parse",
    "parse_edge_list",
    "parse_gml",
    "parse_pajek",
    "read_graph",
    "write_edge_list",
]
