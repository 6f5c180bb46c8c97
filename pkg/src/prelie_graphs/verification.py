"""The Maurer-Cartan defect of Z, the constant-case closed form, the
normalized-coefficient sweep and the two-vertex three-point table.

Every routine takes a ``signed`` flag.  With ``signed=True`` (the default)
arithmetic happens in the orientation quotient: a leg swap at one vertex
negates the class.  With ``signed=False`` graphs are counted as unoriented
isomorphism classes and automorphisms may exchange legs.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .combination import GraphCombination
from .enumeration import enumerate_graphs
from .factorization import Side, alpha
from .graph import AdmissibleGraph, GraphKind, aut_order, normalize, validate
from .grammar import format_graph
from .insertion import insert_at, insert_combination, insertion_tally
from .named import NAMED_GRAPHS, constant_monomial, named, wedge_power

__all__ = [
    "CoefficientReport",
    "ConsistencyError",
    "G23Row",
    "LedgerRow",
    "MCReport",
    "build_Z",
    "coefficient_theorem_sweep",
    "constant_case_check",
    "factor_coefficient",
    "g23_table",
    "g23_census",
    "mc_defect",
]


class ConsistencyError(AssertionError):
    """The two independent computations of a defect disagree."""


def build_Z(n: int, kind: GraphKind | str = GraphKind.LINEAR, *, signed: bool = True) -> GraphCombination:
    """Sum of every class in G_{n,2} weighted by ``1/|Aut|``."""
    return GraphCombination((e.graph, Fraction(1, e.aut)) for e in enumerate_graphs(n, 2, kind, signed=signed))


def _aut(g: AdmissibleGraph, signed: bool) -> int:
    return aut_order(g, allow_flips=not signed)


@dataclass(frozen=True)
class LedgerRow:
    graph: AdmissibleGraph
    b_left: Fraction
    b_right: Fraction
    c_left: Fraction
    c_right: Fraction

    @property
    def b(self) -> Fraction:
        return self.b_left - self.b_right

    @property
    def c(self) -> Fraction:
        return self.c_left - self.c_right

    def to_record(self, kind: str) -> dict:
        return {
            "schema": 1,
            "class": kind,
            "graph": format_graph(self.graph),
            "B_left": str(self.b_left),
            "B_right": str(self.b_right),
            "C_left": str(self.c_left),
            "C_right": str(self.c_right),
        }


@dataclass
class MCReport:
    order: int
    kind: GraphKind
    signed: bool
    defect: GraphCombination
    shortcut: GraphCombination
    ledger: list[LedgerRow] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.defect == 0

    def row(self, g: AdmissibleGraph) -> LedgerRow:
        rep = normalize(g, signed=False).graph
        for r in self.ledger:
            if r.graph == rep:
                return r
        raise KeyError(format_graph(g))

    def to_record(self) -> dict:
        kind = self.kind.value
        return {
            "schema": 1,
            "class": kind,
            "signed": self.signed,
            "order": self.order,
            "passed": self.passed,
            "defect": self.defect.to_records(kind),
            "ledger": [r.to_record(kind) for r in self.ledger],
        }


def factor_coefficient(
    gamma: AdmissibleGraph, side: Side | str, kind: GraphKind | str = GraphKind.LINEAR, *, signed: bool = True
) -> Fraction:
    """Coefficient of ``gamma`` in ``Z o_k Z`` read off from its unique factorization.

    Only the pair (quotient, alpha) can produce ``gamma``, so the coefficient is
    that single insertion divided by both automorphism orders.
    """
    side = Side(side)
    f = alpha(gamma, side)
    outer, inner = normalize(f.quotient, signed=signed), normalize(f.alpha, signed=signed)
    if outer.is_zero or inner.is_zero:
        return Fraction(0)
    if not (validate(outer.graph, kind) and validate(inner.graph, kind)):
        return Fraction(0)
    raw = insert_at(outer.graph, side.position, inner.graph, kind, signed=signed)
    scale = Fraction(1, _aut(outer.graph, signed) * _aut(inner.graph, signed))
    target = normalize(gamma, signed=signed)
    if target.is_zero:
        return Fraction(0)
    return target.sign * raw.coefficient(target.graph) * scale


def mc_defect(n: int, kind: GraphKind | str = GraphKind.LINEAR, *, signed: bool = True) -> MCReport:
    """``sum_{i+j=n} Z_i o_1 Z_j - Z_i o_2 Z_j`` with a per-class ledger.

    The defect is computed twice: by full bilinear expansion, and class by
    class from the left and right factorizations.  Any disagreement between
    the two raises :class:`ConsistencyError`.
    """
    kind = GraphKind.coerce(kind)
    if n < 0:
        raise ValueError(f"order must be non-negative, got {n}")
    zs = [build_Z(k, kind, signed=signed) for k in range(n + 1)]
    sigma = {1: GraphCombination(), 2: GraphCombination()}
    for i in range(n + 1):
        for k in (1, 2):
            sigma[k] = sigma[k] + insert_combination(zs[i], k, zs[n - i], kind, signed=signed)
    defect = sigma[1] - sigma[2]

    ledger = []
    shortcut_terms = []
    for e in enumerate_graphs(n, 3, kind, signed=signed):
        g = e.graph
        row = LedgerRow(
            g,
            sigma[1].coefficient(g),
            sigma[2].coefficient(g),
            factor_coefficient(g, Side.LEFT, kind, signed=signed),
            factor_coefficient(g, Side.RIGHT, kind, signed=signed),
        )
        if (row.b_left, row.b_right) != (row.c_left, row.c_right):
            raise ConsistencyError(
                f"order {n}: {format_graph(g)} expanded ({row.b_left}, {row.b_right})"
                f" but factorized ({row.c_left}, {row.c_right})"
            )
        ledger.append(row)
        shortcut_terms.append((g, row.c))
    shortcut = GraphCombination(shortcut_terms)
    if shortcut != defect:
        raise ConsistencyError(f"order {n}: expanded defect {defect!r} != factorized defect {shortcut!r}")
    return MCReport(n, kind, signed, defect, shortcut, ledger)


def constant_case_check(r: int, s: int, t: int, *, signed: bool = True) -> dict:
    """Closed form against direct computation on ``Gamma_1^r Gamma_2^s Gamma_3^t``.

    The class is reached only as ``b_1^{r+s} o_1 b_1^t`` on the left and
    ``b_1^{s+t} o_2 b_1^r`` on the right.
    """
    if min(r, s, t) < 0 or r + s + t == 0:
        raise ValueError(f"need r, s, t >= 0 not all zero, got {(r, s, t)}")
    kind = GraphKind.CONSTANT
    gamma = constant_monomial(r, s, t)
    target = normalize(gamma, signed=signed)

    def side(outer_k: int, pos: int, inner_k: int) -> tuple[int, Fraction]:
        outer, inner = wedge_power(outer_k), wedge_power(inner_k)
        rep = normalize(gamma, signed=False).graph
        count = insertion_tally(outer, pos, inner, kind).get(rep, (0, 0))[0]
        z_outer = GraphCombination.from_graph(outer, Fraction(1, _aut(outer, signed)), signed=signed)
        z_inner = GraphCombination.from_graph(inner, Fraction(1, _aut(inner, signed)), signed=signed)
        value = insert_combination(z_outer, pos, z_inner, kind, signed=signed)
        return count, (target.sign * value.coefficient(target.graph) if not target.is_zero else Fraction(0))

    left_count, left = side(r + s, 1, t)
    right_count, right = side(s + t, 2, r)
    left_formula = Fraction(math.comb(r + s, s), math.factorial(t) * math.factorial(r + s))
    right_formula = Fraction(math.comb(s + t, s), math.factorial(r) * math.factorial(s + t))
    return {
        "r": r,
        "s": s,
        "t": t,
        "closed_form": left_formula - right_formula,
        "direct": left - right,
        "left": left,
        "right": right,
        "left_formula": left_formula,
        "right_formula": right_formula,
        "left_count": left_count,
        "right_count": right_count,
        "left_count_formula": math.comb(r + s, s),
        "right_count_formula": math.comb(s + t, s),
    }


@dataclass
class CoefficientReport:
    max_order: int
    kind: GraphKind
    signed: bool
    checked: int = 0
    # (outer, position, inner, graph, count, normalized multiplicity, normalized signed coefficient)
    bad_coefficients: list[dict] = field(default_factory=list)
    left: dict = field(default_factory=dict)
    right: dict = field(default_factory=dict)

    @property
    def lr_mismatches(self) -> list[dict]:
        out = []
        for g in sorted(set(self.left) | set(self.right), key=format_graph):
            cl, cr = self.left.get(g, Fraction(0)), self.right.get(g, Fraction(0))
            if cl != cr:
                out.append({"graph": format_graph(g), "C_left": str(cl), "C_right": str(cr)})
        return out

    @property
    def coefficients_passed(self) -> bool:
        return not self.bad_coefficients

    @property
    def lr_passed(self) -> bool:
        return not self.lr_mismatches

    @property
    def passed(self) -> bool:
        return self.coefficients_passed and self.lr_passed

    def to_record(self) -> dict:
        return {
            "schema": 1,
            "class": self.kind.value,
            "signed": self.signed,
            "max_order": self.max_order,
            "checked": self.checked,
            "passed": self.passed,
            "bad_coefficients": self.bad_coefficients,
            "lr_mismatches": self.lr_mismatches,
        }


def coefficient_theorem_sweep(
    max_order: int, kind: GraphKind | str = GraphKind.LINEAR, *, signed: bool = True
) -> CoefficientReport:
    """Normalized coefficients ``<G1/|Aut| o_k G2/|Aut|, G/|Aut|>`` over all pairs.

    Each reached class must have normalized multiplicity exactly 1 and, in the
    signed setting, no cancellation between landing maps (so the signed
    coefficient is +1 or -1, the sign being that of the representative).  The
    accumulated left and right normalized coefficients of each class are
    compared as well.
    """
    kind = GraphKind.coerce(kind)
    report = CoefficientReport(max_order, kind, signed)
    for total in range(max_order + 1):
        for i in range(total + 1):
            for e1 in enumerate_graphs(i, 2, kind, signed=signed):
                for e2 in enumerate_graphs(total - i, 2, kind, signed=signed):
                    for side, acc in ((Side.LEFT, report.left), (Side.RIGHT, report.right)):
                        tally = insertion_tally(e1.graph, side.position, e2.graph, kind)
                        for gamma, (count, signed_sum) in tally.items():
                            report.checked += 1
                            scale = Fraction(_aut(gamma, signed), e1.aut * e2.aut)
                            mult = count * Fraction(aut_order(gamma, allow_flips=True), e1.aut * e2.aut)
                            if signed:
                                sc = normalize(gamma, signed=True)
                                coeff = 0 if sc.is_zero else sc.sign * signed_sum * scale
                                key = sc.graph
                                ok = sc.is_zero or abs(coeff) == 1
                            else:
                                coeff, key, ok = count * scale, gamma, count * scale == 1
                            if not (ok and mult == 1):
                                report.bad_coefficients.append(
                                    {
                                        "outer": format_graph(e1.graph),
                                        "position": side.position,
                                        "inner": format_graph(e2.graph),
                                        "graph": format_graph(gamma),
                                        "count": count,
                                        "multiplicity": str(mult),
                                        "coefficient": str(coeff),
                                    }
                                )
                            if key is not None and coeff:
                                acc[key] = acc.get(key, Fraction(0)) + coeff
    return report


# -- the two-vertex, three-point table ---------------------------------------

TABLE_NAMES = (
    "Gamma_1^2",
    "Gamma_2^2",
    "Gamma_3^2",
    "Gamma_1Gamma_3",
    "t_2^L",
    "t_2^R",
    "c_2^L",
    "c_2^R",
    "c_2",
)
FACTOR_NAMES = ("b_0", "b_1", "b_1^2", "b_2^L", "b_2^R")
THREE_POINT_NAMES = tuple(k for k in NAMED_GRAPHS if named(k).m == 3)


def _name_of(g: AdmissibleGraph, names) -> str:
    rep = normalize(g, signed=False).graph
    for name in names:
        h = named(name)
        if h.m == g.m and normalize(h, signed=False).graph == rep:
            return name
    return format_graph(normalize(g, signed=False).graph)


@dataclass(frozen=True)
class G23Row:
    name: str
    graph: AdmissibleGraph
    alpha_left: str
    alpha_right: str
    quotient_left: str
    quotient_right: str
    c_left: Fraction
    c_right: Fraction
    count_left: Fraction
    count_right: Fraction

    @property
    def c(self) -> Fraction:
        return self.c_left - self.c_right

    @property
    def count_c(self) -> Fraction:
        return self.count_left - self.count_right

    def to_record(self) -> dict:
        return {
            "schema": 1,
            "class": "linear",
            "name": self.name,
            "graph": format_graph(self.graph),
            "alpha_left": self.alpha_left,
            "alpha_right": self.alpha_right,
            "quotient_left": self.quotient_left,
            "quotient_right": self.quotient_right,
            "C_left": str(self.c_left),
            "C_right": str(self.c_right),
            "C": str(self.c),
            "unsigned_C_left": str(self.count_left),
            "unsigned_C_right": str(self.count_right),
        }


def _row(name: str, g: AdmissibleGraph) -> G23Row:
    fl, fr = alpha(g, Side.LEFT), alpha(g, Side.RIGHT)
    kind = GraphKind.LINEAR
    return G23Row(
        name,
        g,
        _name_of(fl.alpha, FACTOR_NAMES),
        _name_of(fr.alpha, FACTOR_NAMES),
        _name_of(fl.quotient, FACTOR_NAMES),
        _name_of(fr.quotient, FACTOR_NAMES),
        factor_coefficient(g, Side.LEFT, kind, signed=True),
        factor_coefficient(g, Side.RIGHT, kind, signed=True),
        factor_coefficient(g, Side.LEFT, kind, signed=False),
        factor_coefficient(g, Side.RIGHT, kind, signed=False),
    )


def g23_table() -> list[G23Row]:
    """One row per named class of G_{2,3}: factors, quotients, signed and unsigned C."""
    return [_row(name, named(name)) for name in TABLE_NAMES]


def g23_census() -> dict:
    """Every unoriented class of linear G_{2,3}, with C computed both ways.

    Reports the class count next to the nine named classes and flags
    whether the two agree.
    """
    kind = GraphKind.LINEAR
    classes = enumerate_graphs(2, 3, kind, signed=False)
    rows = [_row(_name_of(e.graph, THREE_POINT_NAMES), e.graph) for e in classes]
    nonvanishing = enumerate_graphs(2, 3, kind, signed=True)
    return {
        "count": len(classes),
        "nonvanishing_count": len(nonvanishing),
        "named_count": len(TABLE_NAMES),
        "count_matches_named": len(classes) == len(TABLE_NAMES),
        "rows": rows,
        "all_signed_zero": all(r.c == 0 for r in rows),
        "all_unsigned_zero": all(r.count_c == 0 for r in rows),
    }
