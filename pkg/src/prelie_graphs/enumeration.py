"""Isomorphism classes G_{n,m}, the boundary-identifying product and prime factors."""
from __future__ import annotations

import functools
import os
from dataclasses import dataclass
from typing import Iterator

from .graph import (
    AdmissibleGraph,
    GraphKind,
    SignedClass,
    aut_order,
    graph_from_keys,
    normalize,
)
from .grammar import format_graph

__all__ = [
    "GraphEntry",
    "GraphSet",
    "ResourceLimitError",
    "enumerate_graphs",
    "is_prime",
    "max_nodes",
    "prime_factors",
    "product",
]

DEFAULT_MAX_NODES = 6


class ResourceLimitError(RuntimeError):
    pass


def max_nodes() -> int:
    """Largest internal vertex count enumerated; ``PRELIE_MAX_NODES`` overrides."""
    value = os.environ.get("PRELIE_MAX_NODES")
    return int(value) if value else DEFAULT_MAX_NODES


@dataclass(frozen=True)
class GraphEntry:
    graph: AdmissibleGraph
    aut: int

    @property
    def text(self) -> str:
        return format_graph(self.graph)


@dataclass(frozen=True)
class GraphSet:
    kind: GraphKind
    n: int
    m: int
    signed: bool
    entries: tuple[GraphEntry, ...]

    def __iter__(self) -> Iterator[GraphEntry]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def graphs(self) -> list[AdmissibleGraph]:
        return [e.graph for e in self.entries]


def _leaves(m: int) -> list[tuple]:
    return [(0, i) for i in range(1, m + 1)]


@functools.lru_cache(maxsize=None)
def _trees(size: int, m: int, kind: GraphKind, signed: bool) -> tuple:
    """Unoriented keys of all trees with ``size`` internal vertices.

    Children of a vertex are stored smaller-first.  Equal boundary leaves are
    parallel legs and never allowed; equal internal subtrees make the class
    self-negating, so they only appear when ``signed`` is off.
    """
    if size == 0:
        return tuple(_leaves(m))
    if kind is GraphKind.CONSTANT and size > 1:
        return ()
    out = []
    for a_size in range((size - 1) // 2 + 1):
        b_size = size - 1 - a_size
        if kind is GraphKind.CONSTANT and (a_size or b_size):
            continue
        small, large = _trees(a_size, m, kind, signed), _trees(b_size, m, kind, signed)
        for a in small:
            for b in large:
                if a_size == b_size:
                    if a > b or (a == b and (signed or a[0] == 0)):
                        continue
                out.append((1, a, b) if a <= b else (1, b, a))
    return tuple(sorted(set(out)))


def _forests(n: int, m: int, kind: GraphKind, signed: bool) -> Iterator[tuple]:
    pool = [(size, key) for size in range(1, n + 1) for key in _trees(size, m, kind, signed)]

    def rec(start: int, remaining: int, chosen: list) -> Iterator[tuple]:
        if remaining == 0:
            yield tuple(sorted(chosen))
            return
        for k in range(start, len(pool)):
            size, key = pool[k]
            if size > remaining:
                continue
            chosen.append(key)
            yield from rec(k, remaining - size, chosen)
            chosen.pop()

    yield from rec(0, n, [])


def enumerate_graphs(n: int, m: int, kind: GraphKind | str = GraphKind.LINEAR, *, signed: bool = True) -> GraphSet:
    """All classes in G_{n,m}, one canonical representative each.

    With ``signed`` (the default) self-negating classes are left out since they
    vanish; with ``signed=False`` every unoriented class is listed and ``aut``
    counts automorphisms that may exchange legs.
    """
    kind = GraphKind.coerce(kind)
    if n < 0 or m < 1:
        raise ValueError(f"need n >= 0 and m >= 1, got n={n}, m={m}")
    if n > max_nodes():
        raise ResourceLimitError(f"n={n} exceeds the configured bound {max_nodes()} (set PRELIE_MAX_NODES)")
    return _enumerate(n, m, kind, signed)


@functools.lru_cache(maxsize=None)
def _enumerate(n: int, m: int, kind: GraphKind, signed: bool) -> GraphSet:
    entries = []
    for forest in _forests(n, m, kind, signed):
        g = graph_from_keys(m, forest)
        entries.append(GraphEntry(g, aut_order(g, allow_flips=not signed)))
    entries.sort(key=lambda e: e.text)
    return GraphSet(kind, n, m, signed, tuple(entries))


def product(g: AdmissibleGraph, h: AdmissibleGraph, *, signed: bool = True) -> SignedClass:
    """Disjoint union over the shared boundary, normalized."""
    if g.m != h.m:
        raise ValueError(f"boundary counts differ: {g.m} != {h.m}")
    shift = g.n
    legs = g.legs + tuple((l + shift if l >= 0 else l, r + shift if r >= 0 else r) for l, r in h.legs)
    return normalize(AdmissibleGraph(g.m, legs), signed=signed)


def _components(g: AdmissibleGraph) -> list[list[int]]:
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, pair in enumerate(g.legs):
        for t in pair:
            if t >= 0:
                parent[find(u)] = find(t)
    groups: dict[int, list[int]] = {}
    for u in range(g.n):
        groups.setdefault(find(u), []).append(u)
    return list(groups.values())


def is_prime(g: AdmissibleGraph) -> bool:
    """One component after cutting the boundary; the empty graph counts as prime."""
    return len(_components(g)) <= 1


def _induced(g: AdmissibleGraph, vertices: list[int]) -> AdmissibleGraph:
    index = {u: k for k, u in enumerate(vertices)}
    legs = tuple(tuple(index[t] if t >= 0 else t for t in g.legs[u]) for u in vertices)
    return AdmissibleGraph(g.m, legs)


def prime_factors(g: AdmissibleGraph) -> list[AdmissibleGraph]:
    """Prime factors as labeled subgraphs on the full boundary, sorted by text."""
    comps = _components(g)
    if not comps:
        return [g]
    return sorted((_induced(g, c) for c in comps), key=format_graph)


def class_count_check(n: int, m: int, kind: GraphKind | str = GraphKind.LINEAR) -> tuple[int, int]:
    """(number of classes, number of multisets of primes of total size n)."""
    kind = GraphKind.coerce(kind)
    primes_by_size = [
        sum(1 for e in enumerate_graphs(k, m, kind) if is_prime(e.graph)) if k else 0 for k in range(n + 1)
    ]
    # multisets: coefficient of x^n in prod_k (1 - x^k)^(-p_k)
    series = [1] + [0] * n
    for k in range(1, n + 1):
        for _ in range(primes_by_size[k]):
            for total in range(k, n + 1):
                series[total] += series[total - k]
    return len(enumerate_graphs(n, m, kind)), series[n]

