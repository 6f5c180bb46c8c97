"""Normal subgraphs, left/right boundary factorization and orbit counting."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .enumeration import enumerate_graphs
from .graph import AdmissibleGraph, GraphKind, aut_order, is_acyclic, normalize
from .grammar import format_graph
from .insertion import insertion_tally

__all__ = [
    "FactorizationResult",
    "OrbitReport",
    "Side",
    "UFReport",
    "alpha",
    "collapse",
    "insertion_orbit_report",
    "is_normal_subgraph",
    "reach",
    "verify_unique_factorization",
]


class Side(str, enum.Enum):
    LEFT = "left"
    RIGHT = "right"

    @property
    def position(self) -> int:
        """Insertion point that this side factorizes."""
        return 1 if self is Side.LEFT else 2


def _pair(side: Side, m: int) -> tuple[int, int]:
    return (1, 2) if Side(side) is Side.LEFT else (m - 1, m)


def reach(g: AdmissibleGraph) -> list[frozenset[int]]:
    """Boundary points reachable from each internal vertex."""
    memo: dict[int, frozenset[int]] = {}

    def rec(u: int) -> frozenset[int]:
        if u not in memo:
            out: set[int] = set()
            for t in g.legs[u]:
                out |= rec(t) if t >= 0 else {-t}
            memo[u] = frozenset(out)
        return memo[u]

    return [rec(u) for u in range(g.n)]


def _subgraph(g: AdmissibleGraph, S: list[int], pair: tuple[int, int]) -> AdmissibleGraph:
    index = {u: k for k, u in enumerate(S)}
    legs = tuple(tuple(index[t] if t >= 0 else -(pair.index(-t) + 1) for t in g.legs[u]) for u in S)
    return AdmissibleGraph(2, legs)


def collapse(g: AdmissibleGraph, S: set[int], pair: tuple[int, int]) -> AdmissibleGraph:
    """Contract ``S`` together with the boundary ``pair`` to a single boundary point."""
    keep = [u for u in range(g.n) if u not in S]
    index = {u: k for k, u in enumerate(keep)}
    lo = pair[0]

    def target(t: int) -> int:
        if t >= 0:
            return -lo if t in S else index[t]
        b = -t
        if b in pair:
            return -lo
        return t if b < lo else t + 1

    legs = tuple(tuple(target(t) for t in g.legs[u]) for u in keep)
    return AdmissibleGraph(g.m - 1, legs)


def is_normal_subgraph(g: AdmissibleGraph, S, pair: tuple[int, int]) -> bool:
    """Whether ``S`` (internal vertices) over the boundary ``pair`` collapses admissibly.

    Checks that every leg out of ``S`` stays inside ``S`` plus the pair,
    that every directed path from ``S`` to the boundary ends in the pair, and
    that the collapsed graph has no vertex with both legs on one target.
    """
    S = set(S)
    if pair not in ((1, 2), (g.m - 1, g.m)):
        raise ValueError(f"{pair} is not the leftmost or rightmost pair of {g.m} boundary points")
    for u in S:
        for t in g.legs[u]:
            if t >= 0 and t not in S:
                return False
            if t < 0 and -t not in pair:
                return False
    reaches = reach(g)
    if any(not reaches[u] <= set(pair) for u in S):
        return False
    q = collapse(g, S, pair)
    return is_acyclic(q) and all(l != r for l, r in q.legs)


@dataclass(frozen=True)
class FactorizationResult:
    side: Side
    alpha: AdmissibleGraph
    quotient: AdmissibleGraph
    vertices: frozenset[int] = field(default=frozenset())


def alpha(g: AdmissibleGraph, side: Side | str) -> FactorizationResult:
    """Largest normal subgraph on the two leftmost (rightmost) boundary points.

    It consists of the internal vertices all of whose paths end in that
    pair; the quotient numbers the collapsed point where the pair was.
    """
    side = Side(side)
    if g.m != 3:
        raise ValueError(f"boundary factorization is defined on three boundary points, got {g.m}")
    pair = _pair(side, g.m)
    S = [u for u, r in enumerate(reach(g)) if r <= set(pair)]
    return FactorizationResult(side, _subgraph(g, S, pair), collapse(g, set(S), pair), frozenset(S))


def _same_class(a: AdmissibleGraph, b: AdmissibleGraph) -> bool:
    return a.m == b.m and normalize(a, signed=False).graph == normalize(b, signed=False).graph


@dataclass
class UFReport:
    max_order: int
    kind: GraphKind
    checked: int = 0
    violations: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


def verify_unique_factorization(
    max_order: int, kind: GraphKind | str = GraphKind.LINEAR, *, signed: bool = True
) -> UFReport:
    """Check every class produced by ``G1 o_k G2`` against ``alpha``.

    For ``k = 1`` the inserted graph must be the left factor and the outer
    graph the left quotient; ``k = 2`` likewise on the right.  Every class
    reached by at least one landing map is checked.
    """
    kind = GraphKind.coerce(kind)
    report = UFReport(max_order, kind)
    for total in range(max_order + 1):
        for i in range(total + 1):
            for e1 in enumerate_graphs(i, 2, kind, signed=signed):
                for e2 in enumerate_graphs(total - i, 2, kind, signed=signed):
                    for side in Side:
                        tally = insertion_tally(e1.graph, side.position, e2.graph, kind)
                        for gamma, (count, _) in tally.items():
                            report.checked += 1
                            f = alpha(gamma, side)
                            if not (_same_class(f.alpha, e2.graph) and _same_class(f.quotient, e1.graph)):
                                report.violations.append(
                                    {
                                        "outer": format_graph(e1.graph),
                                        "inner": format_graph(e2.graph),
                                        "position": side.position,
                                        "graph": format_graph(gamma),
                                        "alpha": format_graph(f.alpha),
                                        "quotient": format_graph(f.quotient),
                                    }
                                )
    return report


@dataclass(frozen=True)
class OrbitReport:
    multiplicity: int
    aut1: int
    aut2: int
    aut_gamma: int

    @property
    def formula(self) -> Fraction:
        return Fraction(self.aut1 * self.aut2, self.aut_gamma)

    @property
    def agrees(self) -> bool:
        return self.multiplicity == 0 or self.multiplicity == self.formula


def insertion_orbit_report(
    outer: AdmissibleGraph,
    i: int,
    inner: AdmissibleGraph,
    gamma: AdmissibleGraph,
    kind: GraphKind | str = GraphKind.LINEAR,
) -> OrbitReport:
    """Landing maps of type ``gamma`` against ``|Aut(outer)||Aut(inner)|/|Aut(gamma)|``.

    Automorphism groups here may exchange legs: that is the group acting on
    landing maps once orientation is ignored.  On canonical representatives
    of nonvanishing classes it coincides with the label-preserving group.
    """
    target = normalize(gamma, signed=False).graph
    count = insertion_tally(outer, i, inner, kind).get(target, (0, 0))[0]
    return OrbitReport(
        count,
        aut_order(outer, allow_flips=True),
        aut_order(inner, allow_flips=True),
        aut_order(gamma, allow_flips=True),
    )
