"""Boundary insertion with the Leibniz expansion and the graded composition.

Inserting ``inner`` at boundary point ``i`` of ``outer`` replaces point ``i`` by
the boundary of ``inner`` (later points shift right) and re-targets every
leg that ended on ``i`` at some vertex of ``inner``.  Landings on internal
vertices must be injective.  Results outside the requested graph class
(an internal vertex with two parents, or any internal edge in the constant
class) are projected to zero.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

from .combination import GraphCombination
from .graph import ZERO, AdmissibleGraph, GraphKind, SignedClass, normalize, validate

__all__ = [
    "InsertionData",
    "InvalidInsertionError",
    "apply_insertion",
    "coefficient_of",
    "compose",
    "deg_b",
    "incoming_legs",
    "insert_at",
    "insert_combination",
    "insertion_data",
    "insertion_tally",
    "leibniz_count",
    "raw_insertion",
]


class InvalidInsertionError(ValueError):
    pass


def deg_b(g: AdmissibleGraph) -> int:
    return g.boundary_count - 1


def incoming_legs(g: AdmissibleGraph, i: int) -> list[tuple[int, int]]:
    """``(vertex, side)`` pairs of legs ending on boundary point ``i``; side 0 is L."""
    return [(u, side) for u, pair in enumerate(g.legs) for side in (0, 1) if pair[side] == -i]


@dataclass(frozen=True)
class InsertionData:
    outer: AdmissibleGraph
    position: int
    inner: AdmissibleGraph
    landing: tuple[int, ...]  # one inner target per entry of incoming_legs(outer, position)

    def __post_init__(self) -> None:
        if not 1 <= self.position <= self.outer.m:
            raise IndexError(f"position {self.position} out of range 1..{self.outer.m}")
        legs = incoming_legs(self.outer, self.position)
        if len(self.landing) != len(legs):
            raise InvalidInsertionError(f"expected {len(legs)} landing targets, got {len(self.landing)}")
        for t in self.landing:
            if not -self.inner.m <= t < self.inner.n:
                raise InvalidInsertionError(f"landing target {t} is not a vertex of the inner graph")
        internal = [t for t in self.landing if t >= 0]
        if len(internal) != len(set(internal)):
            raise InvalidInsertionError("landing map is not injective on internal vertices")


def _check_position(outer: AdmissibleGraph, i: int) -> None:
    if not 1 <= i <= outer.m:
        raise IndexError(f"position {i} out of range 1..{outer.m}")


def _landings(k: int, n2: int, m2: int) -> Iterator[tuple[int, ...]]:
    targets = list(range(-m2, 0)) + list(range(n2))

    def rec(prefix: list[int], used: set[int]) -> Iterator[tuple[int, ...]]:
        if len(prefix) == k:
            yield tuple(prefix)
            return
        for t in targets:
            if t >= 0 and t in used:
                continue
            prefix.append(t)
            if t >= 0:
                used.add(t)
            yield from rec(prefix, used)
            prefix.pop()
            used.discard(t)

    yield from rec([], set())


def insertion_data(outer: AdmissibleGraph, i: int, inner: AdmissibleGraph) -> Iterator[InsertionData]:
    """Every landing map with injective internal part."""
    _check_position(outer, i)
    k = len(incoming_legs(outer, i))
    for landing in _landings(k, inner.n, inner.m):
        yield InsertionData(outer, i, inner, landing)


def leibniz_count(outer: AdmissibleGraph, i: int, inner: AdmissibleGraph) -> int:
    """Closed-form size of :func:`insertion_data`: sum over the internally landing subset."""
    k = len(incoming_legs(outer, i))
    n2, m2 = inner.n, inner.m
    return sum(math.comb(k, j) * math.perm(n2, j) * m2 ** (k - j) for j in range(k + 1))


def _raw(outer: AdmissibleGraph, i: int, inner: AdmissibleGraph, landing: tuple[int, ...]) -> AdmissibleGraph:
    n1, m2 = outer.n, inner.m
    slots = {leg: t for leg, t in zip(incoming_legs(outer, i), landing)}

    def inner_target(t: int) -> int:
        return n1 + t if t >= 0 else -(i - 1 - t)

    def outer_target(u: int, side: int, t: int) -> int:
        if t >= 0:
            return t
        b = -t
        if b < i:
            return t
        if b > i:
            return -(b + m2 - 1)
        return inner_target(slots[(u, side)])

    legs = [tuple(outer_target(u, side, t) for side, t in enumerate(pair)) for u, pair in enumerate(outer.legs)]
    legs += [tuple(inner_target(t) for t in pair) for pair in inner.legs]
    return AdmissibleGraph(outer.m + m2 - 1, tuple(legs))


def raw_insertion(d: InsertionData) -> AdmissibleGraph:
    """The labeled graph produced by one landing map, before projection."""
    return _raw(d.outer, d.position, d.inner, d.landing)


def apply_insertion(d: InsertionData, kind: GraphKind | str = GraphKind.LINEAR, *, signed: bool = True) -> SignedClass:
    g = raw_insertion(d)
    if not validate(g, kind):
        return ZERO
    return normalize(g, signed=signed)


@dataclass
class _Tally:
    count: int = 0
    signed_sum: int = 0
    self_negating: bool = False


@functools.lru_cache(maxsize=1 << 14)
def _tally(outer: AdmissibleGraph, i: int, inner: AdmissibleGraph, kind: GraphKind) -> tuple:
    out: dict[AdmissibleGraph, _Tally] = {}
    k = len(incoming_legs(outer, i))
    for landing in _landings(k, inner.n, inner.m):
        g = _raw(outer, i, inner, landing)
        if not validate(g, kind):
            continue
        plain = normalize(g, signed=False)
        sc = normalize(g, signed=True)
        entry = out.setdefault(plain.graph, _Tally())
        entry.count += 1
        if sc.is_zero:
            entry.self_negating = True
        else:
            entry.signed_sum += sc.sign
    return tuple((g, t.count, t.signed_sum, t.self_negating) for g, t in out.items())


def insertion_tally(
    outer: AdmissibleGraph, i: int, inner: AdmissibleGraph, kind: GraphKind | str = GraphKind.LINEAR
) -> dict[AdmissibleGraph, tuple[int, int]]:
    """Per result class: (number of landing maps of that type, signed sum).

    The count is the raw multiplicity with orientation ignored; the signed
    sum is the coefficient in the orientation quotient (0 for self-negating
    classes).
    """
    _check_position(outer, i)
    return {g: (c, s) for g, c, s, _ in _tally(outer, i, inner, GraphKind.coerce(kind))}


def insert_at(
    outer: AdmissibleGraph,
    i: int,
    inner: AdmissibleGraph,
    kind: GraphKind | str = GraphKind.LINEAR,
    *,
    signed: bool = True,
) -> GraphCombination:
    """``outer o_i inner`` summed over all landing maps."""
    _check_position(outer, i)
    tally = _tally(outer, i, inner, GraphKind.coerce(kind))
    if signed:
        return GraphCombination((g, s) for g, _, s, _ in tally)
    return GraphCombination((g, c) for g, c, _, _ in tally)


Operand = Union[GraphCombination, AdmissibleGraph]


def _as_combination(x: Operand, signed: bool) -> GraphCombination:
    if isinstance(x, AdmissibleGraph):
        return GraphCombination.from_graph(x, signed=signed)
    return x


def compose(
    x: Operand,
    y: Operand,
    kind: GraphKind | str = GraphKind.LINEAR,
    *,
    signed: bool = True,
) -> GraphCombination:
    """Bilinear ``sum_i (-1)^((i-1)(m'-1)) x o_i y``."""
    x, y = _as_combination(x, signed), _as_combination(y, signed)
    inner_m = {g.m for g in y}
    if len(inner_m) > 1:
        raise ValueError(f"terms of the inner operand have mixed boundary counts {sorted(inner_m)}")
    if not inner_m:
        return GraphCombination()
    m2 = inner_m.pop()
    terms: list[tuple[AdmissibleGraph, Fraction]] = []
    for g1, c1 in x.items():
        for i in range(1, g1.m + 1):
            sign = -1 if (i - 1) * (m2 - 1) % 2 else 1
            for g2, c2 in y.items():
                scale = sign * c1 * c2
                terms.extend((g, scale * c) for g, c in insert_at(g1, i, g2, kind, signed=signed).items())
    return GraphCombination(terms)


def insert_combination(
    x: Operand,
    i: int,
    y: Operand,
    kind: GraphKind | str = GraphKind.LINEAR,
    *,
    signed: bool = True,
) -> GraphCombination:
    """Bilinear extension of ``insert_at`` at a fixed position, no sign factor."""
    x, y = _as_combination(x, signed), _as_combination(y, signed)
    terms: list[tuple[AdmissibleGraph, Fraction]] = []
    for g1, c1 in x.items():
        if i > g1.m:
            continue
        for g2, c2 in y.items():
            terms.extend((g, c1 * c2 * c) for g, c in insert_at(g1, i, g2, kind, signed=signed).items())
    return GraphCombination(terms)


def coefficient_of(x: GraphCombination, g: AdmissibleGraph, *, signed: bool = True) -> Fraction:
    sc = normalize(g, signed=signed)
    if sc.is_zero:
        return Fraction(0)
    return sc.sign * x.coefficient(sc.graph)
