"""Finite formal sums of graph classes with exact rational coefficients."""
from __future__ import annotations

from collections.abc import Mapping
from fractions import Fraction
from typing import Iterable, Iterator, Union

from .graph import AdmissibleGraph, SignedClass, normalize
from .grammar import format_graph

Scalar = Union[int, Fraction]

__all__ = ["GraphCombination"]


class GraphCombination(Mapping):
    """Immutable mapping canonical representative -> nonzero ``Fraction``.

    Keys are assumed to be canonical representatives already; use
    :meth:`from_graph` to bring in an arbitrary labeled graph.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Iterable[tuple[AdmissibleGraph, Scalar]] | Mapping = ()):
        if isinstance(terms, Mapping):
            terms = terms.items()
        acc: dict[AdmissibleGraph, Fraction] = {}
        for g, c in terms:
            value = acc.get(g, Fraction(0)) + Fraction(c)
            if value:
                acc[g] = value
            else:
                acc.pop(g, None)
        self._terms = acc

    @classmethod
    def from_graph(cls, g: AdmissibleGraph, coeff: Scalar = 1, *, signed: bool = True) -> "GraphCombination":
        return cls.from_class(normalize(g, signed=signed), coeff)

    @classmethod
    def from_class(cls, sc: SignedClass, coeff: Scalar = 1) -> "GraphCombination":
        if sc.is_zero:
            return cls()
        return cls([(sc.graph, sc.sign * Fraction(coeff))])

    def __getitem__(self, g: AdmissibleGraph) -> Fraction:
        return self._terms[g]

    def __iter__(self) -> Iterator[AdmissibleGraph]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, g: AdmissibleGraph) -> Fraction:
        return self._terms.get(g, Fraction(0))

    def __add__(self, other: "GraphCombination") -> "GraphCombination":
        if not isinstance(other, GraphCombination):
            return NotImplemented
        return GraphCombination(list(self.items()) + list(other.items()))

    def __sub__(self, other: "GraphCombination") -> "GraphCombination":
        if not isinstance(other, GraphCombination):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "GraphCombination":
        return GraphCombination((g, -c) for g, c in self.items())

    def __mul__(self, scalar: Scalar) -> "GraphCombination":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return GraphCombination((g, c * scalar) for g, c in self.items())

    __rmul__ = __mul__

    def __truediv__(self, scalar: Scalar) -> "GraphCombination":
        return self * (1 / Fraction(scalar))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GraphCombination):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def sorted_terms(self) -> list[tuple[str, Fraction]]:
        return sorted((format_graph(g), c) for g, c in self.items())

    def to_records(self, kind: str) -> list[dict]:
        return [
            {"schema": 1, "class": kind, "coeff": str(c), "graph": text} for text, c in self.sorted_terms()
        ]

    def __repr__(self) -> str:
        if not self._terms:
            return "GraphCombination(0)"
        return "GraphCombination(" + " + ".join(f"{c}*[{t}]" for t, c in self.sorted_terms()) + ")"
