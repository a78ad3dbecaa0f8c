"""Edge-list text format shared by trees and general graphs.

The first non-comment line holds the vertex count ``n``; every following
line holds one edge ``u v``. Fields are whitespace-separated and anything
after ``#`` is ignored::

    # spider with legs 1, 2
    4
    0 1
    0 2
    2 3
"""

from __future__ import annotations

from pathlib import Path as FsPath

from .errors import InputError
from .tree import Edge, Tree, tree_from_edge_list


def parse_edge_list(text: str) -> tuple[int, list[Edge]]:
    n = None
    pairs: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        try:
            values = [int(f) for f in fields]
        except ValueError:
            raise InputError(f"line {lineno}: expected integers, got {line!r}") from None
        if n is None:
            if len(values) != 1:
                raise InputError(f"line {lineno}: expected the vertex count on its own line")
            n = values[0]
        else:
            if len(values) != 2:
                raise InputError(f"line {lineno}: expected 'u v', got {line!r}")
            pairs.append((values[0], values[1]))
    if n is None:
        raise InputError("empty edge list: missing vertex count")
    return n, pairs


def parse_tree(text: str) -> Tree:
    n, pairs = parse_edge_list(text)
    return tree_from_edge_list(n, pairs)


def read_tree(path: str | FsPath) -> Tree:
    return parse_tree(FsPath(path).read_text())


def format_edge_list(n: int, edges) -> str:
    lines = [str(n)] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def format_tree(t: Tree) -> str:
    return format_edge_list(t.n, t.edges)
