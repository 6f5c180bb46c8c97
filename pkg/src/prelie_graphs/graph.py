"""Admissible graphs, class validation, canonical forms and orientation classes.

A graph has ``m`` ordered boundary points and ``n`` internal vertices; every
internal vertex emits an ordered pair of legs ``(L, R)``.  Leg targets are
plain integers: ``t >= 0`` is internal vertex ``t`` (0-based) and ``t < 0`` is
boundary point ``-t`` (1-based).

Graphs of both supported kinds are forests once the boundary is cut away
(internal in-degree at most one, no circuits), so canonical forms are built
from recursive subtree keys instead of a search over relabelings.  A
brute-force search is kept as a fallback for general acyclic input.
"""
from __future__ import annotations

import enum
import functools
import itertools
import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Optional

__all__ = [
    "AdmissibleGraph",
    "GraphKind",
    "GraphStructureError",
    "SignedClass",
    "ZERO",
    "aut_order",
    "canonicalize",
    "is_forest",
    "is_isomorphic",
    "negate_at",
    "normalize",
    "validate",
]


class GraphStructureError(ValueError):
    """Raised for graphs whose leg targets are out of range."""


class GraphKind(str, enum.Enum):
    CONSTANT = "constant"
    LINEAR = "linear"

    @classmethod
    def coerce(cls, kind: "GraphKind | str") -> "GraphKind":
        if isinstance(kind, cls):
            return kind
        try:
            return cls(str(kind).lower())
        except ValueError:
            raise ValueError(f"unknown graph class {kind!r} (expected 'linear' or 'constant')") from None


@dataclass(frozen=True)
class AdmissibleGraph:
    """Immutable labeled graph: ``legs[u] == (target_L, target_R)``."""

    boundary_count: int
    legs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        legs = tuple((int(l), int(r)) for l, r in self.legs)
        object.__setattr__(self, "legs", legs)
        m, n = self.boundary_count, len(legs)
        if m < 1:
            raise GraphStructureError(f"boundary_count must be positive, got {m}")
        for u, pair in enumerate(legs):
            for t in pair:
                if not (-m <= t < n):
                    raise GraphStructureError(
                        f"vertex {u + 1}: target {_target_name(t)} out of range for G{n},{m}"
                    )

    @property
    def internal_count(self) -> int:
        return len(self.legs)

    @property
    def m(self) -> int:
        return self.boundary_count

    @property
    def n(self) -> int:
        return len(self.legs)

    def in_degrees(self) -> list[int]:
        deg = [0] * self.n
        for l, r in self.legs:
            if l >= 0:
                deg[l] += 1
            if r >= 0:
                deg[r] += 1
        return deg

    def boundary_in_degree(self, i: int) -> int:
        return sum((l == -i) + (r == -i) for l, r in self.legs)

    def roots(self) -> list[int]:
        return [u for u, d in enumerate(self.in_degrees()) if d == 0]

    def __str__(self) -> str:
        from .grammar import format_graph

        return format_graph(self)


def _target_name(t: int) -> str:
    return f"v{t + 1}" if t >= 0 else f"b{-t}"


def is_acyclic(g: AdmissibleGraph) -> bool:
    state = [0] * g.n  # 0 new, 1 on stack, 2 done
    for start in range(g.n):
        if state[start]:
            continue
        stack = [(start, iter(g.legs[start]))]
        state[start] = 1
        while stack:
            u, it = stack[-1]
            for t in it:
                if t < 0:
                    continue
                if state[t] == 1:
                    return False
                if state[t] == 0:
                    state[t] = 1
                    stack.append((t, iter(g.legs[t])))
                    break
            else:
                state[u] = 2
                stack.pop()
    return True


def is_forest(g: AdmissibleGraph) -> bool:
    """True when internal in-degrees are at most one and there is no circuit."""
    return max(g.in_degrees(), default=0) <= 1 and is_acyclic(g)


def validate(g: AdmissibleGraph, kind: GraphKind | str) -> bool:
    kind = GraphKind.coerce(kind)
    if any(l == r for l, r in g.legs):
        return False
    if kind is GraphKind.CONSTANT:
        return all(l < 0 and r < 0 for l, r in g.legs)
    return is_forest(g)


def negate_at(g: AdmissibleGraph, u: int) -> AdmissibleGraph:
    """Swap the L and R legs of internal vertex ``u`` (0-based)."""
    if not 0 <= u < g.n:
        raise IndexError(f"internal vertex {u} out of range for a graph with {g.n} internal vertices")
    legs = list(g.legs)
    l, r = legs[u]
    legs[u] = (r, l)
    return AdmissibleGraph(g.boundary_count, tuple(legs))


# --- subtree keys -----------------------------------------------------------
#
# leaf key:     (0, i) for boundary point i
# internal key: (1, key_L, key_R)
# Tuple order puts every boundary leaf before every internal subtree.


def _postorder(g: AdmissibleGraph) -> list[int]:
    seen = [False] * g.n
    order: list[int] = []

    def visit(u: int) -> None:
        seen[u] = True
        for t in g.legs[u]:
            if t >= 0 and not seen[t]:
                visit(t)
        order.append(u)

    for u in range(g.n):
        if not seen[u]:
            visit(u)
    return order


@dataclass(frozen=True)
class _Keys:
    forest: tuple
    sign: int
    symmetric_vertices: int  # vertices whose two children have equal unoriented keys


@functools.lru_cache(maxsize=1 << 16)
def _forest_keys(g: AdmissibleGraph, flips: bool) -> _Keys:
    keys: list = [None] * g.n
    signs = [1] * g.n
    symmetric = 0
    for u in _postorder(g):
        l, r = g.legs[u]
        kl = keys[l] if l >= 0 else (0, -l)
        kr = keys[r] if r >= 0 else (0, -r)
        s = (signs[l] if l >= 0 else 1) * (signs[r] if r >= 0 else 1)
        if flips:
            if kl == kr:
                symmetric += 1
            elif kl > kr:
                kl, kr = kr, kl
                s = -s
        keys[u] = (1, kl, kr)
        signs[u] = s
    roots = g.roots()
    sign = math.prod(signs[u] for u in roots)
    return _Keys(tuple(sorted(keys[u] for u in roots)), sign, symmetric)


def graph_from_keys(m: int, forest: tuple) -> AdmissibleGraph:
    """Build the canonical labeled graph of a sorted tuple of root keys."""
    legs: list[tuple[int, int]] = []

    def emit(key: tuple) -> int:
        if key[0] == 0:
            return -key[1]
        l = emit(key[1])
        r = emit(key[2])
        legs.append((l, r))
        return len(legs) - 1

    for key in forest:
        emit(key)
    return AdmissibleGraph(m, tuple(legs))


def forest_key(g: AdmissibleGraph, *, flips: bool) -> tuple:
    if not is_forest(g):
        raise ValueError("forest keys need internal in-degree <= 1 and no circuits")
    return _forest_keys(g, flips).forest


# --- brute force fallback for general acyclic graphs --------------------------


def _relabel(g: AdmissibleGraph, perm: tuple[int, ...], flipped: frozenset[int]) -> tuple:
    """Encoding of ``g`` with internal vertex u moved to ``perm[u]``."""
    new = [None] * g.n
    for u, (l, r) in enumerate(g.legs):
        l2 = perm[l] if l >= 0 else l
        r2 = perm[r] if r >= 0 else r
        new[perm[u]] = (r2, l2) if u in flipped else (l2, r2)
    return tuple(new)


def _brute_search(g: AdmissibleGraph, flips: bool) -> tuple[tuple, int, bool]:
    best, best_sign, zero = None, 1, False
    flip_sets = [frozenset()]
    if flips:
        flip_sets = [frozenset(c) for k in range(g.n + 1) for c in itertools.combinations(range(g.n), k)]
    for perm in itertools.permutations(range(g.n)):
        for fs in flip_sets:
            enc = _relabel(g, perm, fs)
            sign = -1 if len(fs) % 2 else 1
            if best is None or enc < best:
                best, best_sign = enc, sign
            if enc == g.legs and sign == -1:
                zero = True
    return best or (), best_sign, zero


# --- public operations --------------------------------------------------------


def canonicalize(g: AdmissibleGraph) -> AdmissibleGraph:
    """Canonical labeled representative; L/R labels are preserved."""
    if is_forest(g):
        return graph_from_keys(g.m, _forest_keys(g, False).forest)
    if not is_acyclic(g):
        raise ValueError("graphs with circuits have no canonical form here")
    enc, _, _ = _brute_search(g, flips=False)
    return AdmissibleGraph(g.m, enc)


def is_isomorphic(g: AdmissibleGraph, h: AdmissibleGraph) -> bool:
    if (g.m, g.n) != (h.m, h.n):
        return False
    return canonicalize(g) == canonicalize(h)


def aut_order(g: AdmissibleGraph, *, allow_flips: bool = False) -> int:
    """Order of the boundary-fixing automorphism group.

    By default automorphisms preserve the L/R labels.  With ``allow_flips``
    they may also exchange the two legs of a vertex (the automorphisms of the
    graph with its labels forgotten).
    """
    if is_forest(g):
        keys = _forest_keys(g, allow_flips)
        order = math.prod(math.factorial(c) for c in Counter(keys.forest).values())
        if allow_flips:
            # each root key occurring c times contributes its own symmetric vertices c times
            order *= 2 ** keys.symmetric_vertices
        return order
    count = 0
    flip_sets = [frozenset()]
    if allow_flips:
        flip_sets = [frozenset(c) for k in range(g.n + 1) for c in itertools.combinations(range(g.n), k)]
    for perm in itertools.permutations(range(g.n)):
        for fs in flip_sets:
            if _relabel(g, perm, fs) == g.legs:
                count += 1
    return count


@dataclass(frozen=True)
class SignedClass:
    """An orientation class: ``sign * graph`` with ``graph`` canonical, or zero."""

    graph: Optional[AdmissibleGraph]
    sign: int

    @property
    def is_zero(self) -> bool:
        return self.graph is None

    def __neg__(self) -> "SignedClass":
        return self if self.is_zero else SignedClass(self.graph, -self.sign)

    def __iter__(self) -> Iterator:
        yield self.sign
        yield self.graph


ZERO = SignedClass(None, 0)


def normalize(g: AdmissibleGraph, *, signed: bool = True) -> SignedClass:
    """Reduce ``g`` to its orientation class.

    The representative is canonical over internal relabelings and leg flips;
    ``sign`` is the parity of the flips needed to reach it.  A graph that is
    carried to itself by an odd number of flips equals its own negative and
    normalizes to ``ZERO``.  With ``signed=False`` orientation is forgotten:
    the same representative is returned with sign ``+1`` and nothing is zero.
    """
    if is_forest(g):
        keys = _forest_keys(g, True)
        rep = graph_from_keys(g.m, keys.forest)
        if not signed:
            return SignedClass(rep, 1)
        # a vertex with two equal unoriented children is fixed by one odd swap
        if keys.symmetric_vertices:
            return ZERO
        return SignedClass(rep, keys.sign)
    if not is_acyclic(g):
        raise ValueError("graphs with circuits have no orientation class here")
    enc, sign, zero = _brute_search(g, flips=True)
    rep = AdmissibleGraph(g.m, enc)
    if not signed:
        return SignedClass(rep, 1)
    return ZERO if zero else SignedClass(rep, sign)
