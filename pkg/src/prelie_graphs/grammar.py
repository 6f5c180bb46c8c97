"""Text form of graphs.

    graph  := "G" INT "," INT ";" (vertex (";" vertex)*)?
    vertex := "v" INT ":L->" target ",R->" target
    target := "b" INT | "v" INT

``G<n>,<m>`` gives the internal and boundary counts.  Whitespace is ignored.
"""
from __future__ import annotations

from .graph import AdmissibleGraph, GraphStructureError, canonicalize

__all__ = ["GraphParseError", "canonical_string", "format_graph", "parse_graph", "read_graph"]


class GraphParseError(ValueError):
    def __init__(self, message: str, position: int, text: str):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.position = position
        self.text = text


def format_graph(g: AdmissibleGraph) -> str:
    def t(x: int) -> str:
        return f"v{x + 1}" if x >= 0 else f"b{-x}"

    body = ";".join(f"v{u + 1}:L->{t(l)},R->{t(r)}" for u, (l, r) in enumerate(g.legs))
    return f"G{g.n},{g.m};{body}"


def canonical_string(g: AdmissibleGraph) -> str:
    return format_graph(canonicalize(g))


class _Cursor:
    def __init__(self, text: str):
        self.text = text
        self.chars = [(c, i) for i, c in enumerate(text) if not c.isspace()]
        self.k = 0

    def pos(self) -> int:
        return self.chars[self.k][1] if self.k < len(self.chars) else len(self.text)

    def fail(self, message: str):
        raise GraphParseError(message, self.pos(), self.text)

    def at_end(self) -> bool:
        return self.k >= len(self.chars)

    def peek(self) -> str:
        return self.chars[self.k][0] if self.k < len(self.chars) else ""

    def expect(self, literal: str) -> None:
        for ch in literal:
            if self.peek() != ch:
                self.fail(f"expected {literal!r}")
            self.k += 1

    def integer(self) -> int:
        start = self.k
        while self.peek().isdigit():
            self.k += 1
        if start == self.k:
            self.fail("expected an integer")
        return int("".join(c for c, _ in self.chars[start:self.k]))


def parse_graph(text: str) -> AdmissibleGraph:
    """Parse the text form.  Syntax problems raise ``GraphParseError``;
    well-formed text with bad indices raises ``GraphStructureError``."""
    cur = _Cursor(text)
    cur.expect("G")
    n = cur.integer()
    cur.expect(",")
    m = cur.integer()
    cur.expect(";")
    legs: dict[int, tuple[int, int]] = {}
    while not cur.at_end():
        if legs:
            cur.expect(";")
        cur.expect("v")
        where = cur.pos()
        u = cur.integer()
        if u in legs:
            raise GraphParseError(f"vertex v{u} defined twice", where, text)
        cur.expect(":L->")
        left = _target(cur)
        cur.expect(",R->")
        right = _target(cur)
        legs[u] = (left, right)
    if sorted(legs) != list(range(1, n + 1)):
        raise GraphStructureError(f"expected vertices v1..v{n}, got {sorted(f'v{u}' for u in legs)}")
    return AdmissibleGraph(m, tuple(legs[u] for u in range(1, n + 1)))


def _target(cur: _Cursor) -> int:
    c, where = cur.peek(), cur.pos()
    if c not in ("b", "v"):
        cur.fail("expected a target 'b<i>' or 'v<j>'")
    cur.k += 1
    i = cur.integer()
    if i < 1:
        what = "boundary points" if c == "b" else "internal vertices"
        raise GraphParseError(f"{what} are numbered from 1", where, cur.text)
    return -i if c == "b" else i - 1


def read_graph(text: str) -> AdmissibleGraph:
    """Parse a graph string or expand a named-graph alias such as ``b1^2``."""
    from .named import named

    stripped = text.strip()
    if stripped[:1] == "G" and stripped[1:2].strip()[:1].isdigit():
        return parse_graph(text)
    return named(stripped)
