"""Text file formats for graphs and category systems.

Graph files: UTF-8 lines, ``#`` starts a comment, each data line is two
whitespace-separated decimal ids declaring one undirected edge. The vertex
count defaults to ``1 + max id``; an optional ``# n=<k>`` directive declares
it explicitly (required for isolated vertices, e.g. a single-vertex graph).
Self-loops and duplicate edges are rejected with the offending line number.

Category files: same comment rule; each data line lists the vertex ids of
one category. Duplicate categories merge, out-of-range ids are a hard error.
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import Iterable, Optional, Union

from .categories import CategorySystem
from .errors import CategoryFormatError, GraphFormatError, IdMismatchError
from .graph import Graph

_DIRECTIVE = re.compile(r"^#\s*n\s*=\s*(\d+)\s*$")

PathLike = Union[str, Path]


def parse_graph(text: str, name: str = "<string>") -> Graph:
    edges: list[tuple[int, int]] = []
    seen: dict[tuple[int, int], int] = {}
    declared_n: Optional[int] = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        directive = _DIRECTIVE.match(raw.strip())
        if directive:
            if declared_n is not None:
                raise GraphFormatError("duplicate n= directive", name, lineno)
            declared_n = int(directive.group(1))
            continue
        data = raw.split("#", 1)[0].strip()
        if not data:
            continue
        tokens = data.split()
        if len(tokens) != 2:
            raise GraphFormatError(
                f"expected two vertex ids, got {len(tokens)} tokens", name, lineno
            )
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphFormatError(f"non-integer vertex id in {data!r}", name, lineno)
        if u < 0 or v < 0:
            raise GraphFormatError("vertex ids must be non-negative", name, lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", name, lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(
                f"duplicate edge {key[0]}-{key[1]} (first seen on line {seen[key]})",
                name,
                lineno,
            )
        seen[key] = lineno
        edges.append((u, v))
    try:
        return Graph.from_edges(edges, n=declared_n)
    except GraphFormatError as exc:
        raise GraphFormatError(str(exc), name) from exc


def load_graph(path: PathLike) -> Graph:
    path = Path(path)
    return parse_graph(path.read_text(encoding="utf-8"), str(path))


def parse_categories(text: str, n: int, name: str = "<string>") -> CategorySystem:
    sets: list[list[int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        data = raw.split("#", 1)[0].strip()
        if not data:
            continue
        members = []
        for token in data.split():
            try:
                v = int(token)
            except ValueError:
                raise CategoryFormatError(
                    f"non-integer vertex id {token!r}", name, lineno
                )
            if not (0 <= v < n):
                raise IdMismatchError(
                    f"{name}:{lineno}: vertex id {v} out of range [0,{n})"
                )
            members.append(v)
        sets.append(members)
    return CategorySystem(n, sets)


def load_categories(path: PathLike, n: int) -> CategorySystem:
    path = Path(path)
    return parse_categories(path.read_text(encoding="utf-8"), n, str(path))


def format_categories(system: CategorySystem) -> str:
    """One line per category, members ascending, categories in canonical order."""
    return "".join(" ".join(map(str, c)) + "\n" for c in system.categories)


def save_categories(system: CategorySystem, path: PathLike) -> None:
    Path(path).write_text(format_categories(system), encoding="utf-8")


def format_graph(g: Graph, comment: Optional[str] = None) -> str:
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append(f"# n={g.n}")
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def save_graph(g: Graph, path: PathLike, comment: Optional[str] = None) -> None:
    Path(path).write_text(format_graph(g, comment), encoding="utf-8")


def edges_from_lines(lines: Iterable[str]) -> list[tuple[int, int]]:
    """Convenience for tests: parse bare ``u v`` lines into an edge list."""
    out = []
    for raw in lines:
        data = raw.split("#", 1)[0].strip()
        if data:
            u, v = data.split()
            out.append((int(u), int(v)))
    return out
