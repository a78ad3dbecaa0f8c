"""Tree families: paths, stars, spiders, Prüfer decoding and random trees."""

from __future__ import annotations

import heapq
import itertools
import random
from typing import Iterator, Sequence

from .errors import InputError
from .tree import Edge, Tree, tree_from_edge_list


def path_tree(n: int) -> Tree:
    """The path ``0 - 1 - ... - (n-1)``."""
    if n < 1:
        raise InputError(f"path needs n >= 1, got {n}")
    return tree_from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def star_tree(k: int) -> Tree:
    """``K_{1,k}`` with center 0 and leaves ``1 .. k``."""
    if k < 0:
        raise InputError(f"star needs k >= 0 leaves, got {k}")
    return tree_from_edge_list(k + 1, [(0, i) for i in range(1, k + 1)])


def spider_tree(leg_lengths: Sequence[int]) -> Tree:
    """Legs of the given lengths hung from center 0.

    Vertices are numbered leg by leg, walking away from the center, so
    ``spider_tree([1, 2, 3])`` has legs ``0-1``, ``0-2-3`` and ``0-4-5-6``.
    """
    edges: list[Edge] = []
    nxt = 1
    for length in leg_lengths:
        if length < 1:
            raise InputError(f"leg lengths must be >= 1, got {length}")
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return tree_from_edge_list(nxt, edges)


def prufer_decode(seq: Sequence[int], n: int) -> list[Edge]:
    """Edges of the labeled tree on ``0 .. n-1`` with Prüfer sequence ``seq``."""
    if n < 1 or len(seq) != max(n - 2, 0):
        raise InputError(f"Prüfer sequence for n={n} must have length {max(n - 2, 0)}")
    if n == 1:
        return []
    degree = [1] * n
    for x in seq:
        if not 0 <= x < n:
            raise InputError(f"Prüfer entry {x} out of range for n={n}")
        degree[x] += 1
    heap = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(heap)
    edges = []
    for x in seq:
        leaf = heapq.heappop(heap)
        edges.append((min(leaf, x), max(leaf, x)))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(heap, x)
    u, v = heapq.heappop(heap), heapq.heappop(heap)
    edges.append((u, v))
    return edges


def tree_from_prufer(seq: Sequence[int], n: int) -> Tree:
    return tree_from_edge_list(n, prufer_decode(seq, n))


def random_tree(n: int, seed: int | random.Random | None = None) -> Tree:
    """Uniform random labeled tree on ``n`` vertices via a random Prüfer code."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    if n < 1:
        raise InputError(f"random tree needs n >= 1, got {n}")
    seq = [rng.randrange(n) for _ in range(max(n - 2, 0))]
    return tree_from_prufer(seq, n)


def all_labeled_trees(n: int) -> Iterator[Tree]:
    """Every labeled tree on ``n`` vertices, one per Prüfer sequence (n^(n-2) total)."""
    for seq in itertools.product(range(n), repeat=max(n - 2, 0)):
        yield tree_from_prufer(seq, n)


def random_subset(n: int, rng: random.Random) -> tuple[int, ...]:
    """Uniform random subset of ``range(n)``."""
    bits = rng.getrandbits(n) if n else 0
    return tuple(v for v in range(n) if bits >> v & 1)
