"""Forbidden-pattern descriptions and the ``name[:int]`` pattern grammar."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import graph as G
from .errors import ArgumentError, CapabilityError, ParseError
from .graph import Graph
from .graph6 import decode_graph6, encode_graph6

PATTERN_VERTEX_LIMIT = 16

# name -> (builder, smallest parameter)
NAMED = {
    "wheel": (G.wheel, 4),
    "path": (G.path, 1),
    "cycle": (G.cycle, 3),
    "star": (G.star, 1),
    "clique": (G.complete, 1),
    "matching": (G.matching, 1),
    "fan": (G.fan, 2),
}


@dataclass(frozen=True)
class PatternSpec:
    """A named family member (``kind`` in :data:`NAMED` plus ``size``), a
    custom graph (``kind="custom"``), or a finite family of those."""

    kind: str
    size: int | None = None
    graph: Graph | None = None
    members: tuple["PatternSpec", ...] = field(default=())

    def __post_init__(self):
        if self.kind in NAMED:
            minimum = NAMED[self.kind][1]
            if not isinstance(self.size, int) or self.size < minimum:
                raise ArgumentError(f"{self.kind} needs size >= {minimum}, got {self.size}")
            if self.vertex_count > PATTERN_VERTEX_LIMIT:
                raise CapabilityError(f"patterns above {PATTERN_VERTEX_LIMIT} vertices are unsupported")
        elif self.kind == "custom":
            if self.graph is None or self.graph.edge_count < 1:
                raise ArgumentError("custom pattern needs a graph with at least one edge")
            if self.graph.n > PATTERN_VERTEX_LIMIT:
                raise CapabilityError(f"patterns above {PATTERN_VERTEX_LIMIT} vertices are unsupported")
        elif self.kind == "family":
            if not self.members:
                raise ArgumentError("family pattern must be non-empty")
            if any(m.kind == "family" for m in self.members):
                raise ArgumentError("nested families are not supported")
        else:
            raise ArgumentError(f"unknown pattern kind {self.kind!r}")

    @property
    def vertex_count(self) -> int:
        if self.kind == "family":
            return min(m.vertex_count for m in self.members)
        if self.kind == "custom":
            return self.graph.n
        if self.kind == "fan":
            return self.size + 1
        return self.size

    def graphs(self) -> list[Graph]:
        """Member graphs in family order (a single graph for non-families)."""
        if self.kind == "family":
            return [m.graphs()[0] for m in self.members]
        if self.kind == "custom":
            return [self.graph]
        return [NAMED[self.kind][0](self.size)]

    def render(self) -> str:
        if self.kind == "family":
            return "family:" + ",".join(m.render() for m in self.members)
        if self.kind == "custom":
            return "g6:" + encode_graph6(self.graph)
        return f"{self.kind}:{self.size}"

    def __str__(self):
        return self.render()


def Wheel(k): return PatternSpec("wheel", k)
def Path(k): return PatternSpec("path", k)
def Cycle(k): return PatternSpec("cycle", k)
def Star(k): return PatternSpec("star", k)
def Clique(k): return PatternSpec("clique", k)
def Matching(k): return PatternSpec("matching", k)
def Fan(m): return PatternSpec("fan", m)
def Custom(g): return PatternSpec("custom", graph=g)
def Family(*members): return PatternSpec("family", members=tuple(members))


def _parse_member(token: str, offset: int) -> PatternSpec:
    if token.startswith("g6:"):
        try:
            g = decode_graph6(token[3:])
        except ParseError as exc:
            raise ParseError(f"bad graph6 in pattern token {token!r}: {exc}", offset) from None
        try:
            return Custom(g)
        except ArgumentError as exc:
            raise ParseError(f"pattern token {token!r}: {exc}", offset) from None
    name, sep, arg = token.partition(":")
    if name not in NAMED:
        raise ParseError(f"unknown pattern name {name!r}", offset)
    if not sep or not arg.lstrip("-").isdigit():
        raise ParseError(f"pattern {name!r} needs an integer size, got {token!r}", offset)
    try:
        return PatternSpec(name, int(arg))
    except ArgumentError as exc:
        raise ParseError(f"pattern token {token!r}: {exc}", offset) from None


def parse_pattern(text: str) -> PatternSpec:
    """Parse ``wheel:7``, ``family:star:4,path:5`` or ``g6:<graph6>``."""
    text = text.strip()
    if text.startswith("family:"):
        body = text[len("family:"):]
        if not body:
            raise ParseError("family pattern must be non-empty", len(text))
        members, offset = [], len("family:")
        for token in body.split(","):
            if token.startswith("family:"):
                raise ParseError("nested families are not supported", offset)
            members.append(_parse_member(token, offset))
            offset += len(token) + 1
        return Family(*members)
    return _parse_member(text, 0)
