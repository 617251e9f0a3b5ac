"""Loop-free directed graphs on primes, with the subgraph order and union."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import ValidationError
from .primes import prime_set_of

Edge = tuple[int, int]


@dataclass(frozen=True)
class CriticalGraph:
    """Vertices and edges are stored sorted, so equal graphs compare and print equal."""

    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    @property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def successors(self, p: int) -> frozenset[int]:
        return frozenset(q for s, q in self.edges if s == p)

    def to_dict(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_dict(cls, data: Mapping) -> CriticalGraph:
        return graph_from(data["vertices"], [tuple(e) for e in data["edges"]])

    def __str__(self) -> str:
        return f"V = {format_set(self.vertices)}, E = {format_edges(self.edges)}"


EMPTY = CriticalGraph((), ())


def graph_from(vertices: Iterable[int], edges: Iterable[Edge] = ()) -> CriticalGraph:
    vs = prime_set_of(vertices)
    es = set()
    for p, q in edges:
        if p == q:
            raise ValidationError(f"loop ({p}, {q}) is not allowed")
        for end in (p, q):
            if end not in vs:
                raise ValidationError(f"edge ({p}, {q}) uses {end}, which is not a vertex")
        es.add((p, q))
    return CriticalGraph(tuple(sorted(vs)), tuple(sorted(es)))


def is_subgraph(g1: CriticalGraph, g2: CriticalGraph) -> bool:
    return g1.vertex_set <= g2.vertex_set and g1.edge_set <= g2.edge_set


def union(g1: CriticalGraph, g2: CriticalGraph) -> CriticalGraph:
    return CriticalGraph(
        tuple(sorted(g1.vertex_set | g2.vertex_set)),
        tuple(sorted(g1.edge_set | g2.edge_set)),
    )


def format_set(items: Iterable[int]) -> str:
    items = sorted(items)
    return "{" + ", ".join(map(str, items)) + "}" if items else "∅"


def format_edges(edges: Iterable[Edge]) -> str:
    edges = sorted(edges)
    return "{" + ", ".join(f"({p}, {q})" for p, q in edges) + "}" if edges else "∅"
