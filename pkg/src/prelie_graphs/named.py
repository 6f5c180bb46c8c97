"""Named graphs on two and three boundary points.

Conventions: ``b_2^L`` / ``b_2^R`` are the two-vertex chains whose free leg
ends on boundary point 1 / 2.  ``Gamma_1``, ``Gamma_2``, ``Gamma_3`` are single
wedges onto (2,3), (1,3), (1,2).  The three-point trees are

    t_2^L = [1, [2, 3]]    t_2^R = [[1, 2], 3]    c_2 = [2, [1, 3]]

in bracket notation, where ``[a, b]`` is a vertex with L-leg to ``a``.
Realizations for ``b_2^{L/R}``, ``t_2^{L/R}`` and ``c_2`` are fixed by their
factorization data, not by drawings; see the README.
"""
from __future__ import annotations

from .graph import AdmissibleGraph
from .grammar import parse_graph

__all__ = ["NAMED_GRAPHS", "named", "wedge_power", "constant_monomial"]

NAMED_GRAPHS: dict[str, str] = {
    "b_0": "G0,2;",
    "b_1": "G1,2;v1:L->b1,R->b2",
    "b_1^2": "G2,2;v1:L->b1,R->b2;v2:L->b1,R->b2",
    "b_2^L": "G2,2;v1:L->b1,R->b2;v2:L->b1,R->v1",
    "b_2^R": "G2,2;v1:L->b1,R->b2;v2:L->v1,R->b2",
    "Gamma_1": "G1,3;v1:L->b2,R->b3",
    "Gamma_2": "G1,3;v1:L->b1,R->b3",
    "Gamma_3": "G1,3;v1:L->b1,R->b2",
    "Gamma_1^2": "G2,3;v1:L->b2,R->b3;v2:L->b2,R->b3",
    "Gamma_2^2": "G2,3;v1:L->b1,R->b3;v2:L->b1,R->b3",
    "Gamma_3^2": "G2,3;v1:L->b1,R->b2;v2:L->b1,R->b2",
    "Gamma_1Gamma_3": "G2,3;v1:L->b2,R->b3;v2:L->b1,R->b2",
    "t_2^L": "G2,3;v1:L->b2,R->b3;v2:L->b1,R->v1",
    "t_2^R": "G2,3;v1:L->b1,R->b2;v2:L->v1,R->b3",
    "c_2^L": "G2,3;v1:L->b1,R->b3;v2:L->b1,R->b2",
    "c_2^R": "G2,3;v1:L->b2,R->b3;v2:L->b1,R->b3",
    "c_2": "G2,3;v1:L->b1,R->b3;v2:L->b2,R->v1",
    "point": "G0,1;",
}


def _alias(name: str) -> str:
    s = name.strip().replace("²", "^2").replace("Γ", "gamma").replace("_", "").replace(" ", "")
    return s.lower().replace("^l", "l").replace("^r", "r")


_ALIASES = {_alias(k): k for k in NAMED_GRAPHS}
_ALIASES.update({"g1": "Gamma_1", "g2": "Gamma_2", "g3": "Gamma_3"})


def named(name: str) -> AdmissibleGraph:
    key = _ALIASES.get(_alias(name))
    if key is None:
        raise KeyError(f"unknown graph name {name!r}; known: {', '.join(NAMED_GRAPHS)}")
    return parse_graph(NAMED_GRAPHS[key])


def wedge_power(k: int) -> AdmissibleGraph:
    """``b_1^k``: k wedges onto (1,2)."""
    return AdmissibleGraph(2, ((-1, -2),) * k)


def constant_monomial(r: int, s: int, t: int) -> AdmissibleGraph:
    """``Gamma_1^r Gamma_2^s Gamma_3^t`` on three boundary points."""
    return AdmissibleGraph(3, ((-2, -3),) * r + ((-1, -3),) * s + ((-1, -2),) * t)
