"""Local formations defined by f(p_i) = G_{pi_i} and their N-critical graphs."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import ValidationError
from .graph import CriticalGraph, graph_from
from .primes import prime_set_of


@dataclass(frozen=True)
class LocalFormationSpec:
    """Support ``pi`` plus, for each p in ``pi``, the prime set allowed in f(p).

    ``local_def`` is a sorted tuple of ``(p, pi_p)`` pairs so the spec is
    hashable and compares structurally; use :meth:`from_mapping` to build one.
    """

    pi: frozenset[int]
    local_def: tuple[tuple[int, frozenset[int]], ...]

    def __post_init__(self) -> None:
        heads = [p for p, _ in self.local_def]
        if len(set(heads)) != len(heads):
            raise ValidationError("local definition lists a prime more than once")
        for p in self.pi:
            if p not in heads:
                raise ValidationError(f"no local definition given for prime {p}")
        for p, allowed in self.local_def:
            if p not in self.pi:
                raise ValidationError(f"prime {p} is defined locally but is not in pi")
            if p not in allowed:
                raise ValidationError(f"prime {p} is missing from its own set {sorted(allowed)}")
            outside = sorted(allowed - self.pi)
            if outside:
                raise ValidationError(f"set for prime {p} contains {outside[0]}, which is not in pi")

    @classmethod
    def from_mapping(cls, local_def: Mapping[int, Iterable[int]]) -> LocalFormationSpec:
        pi = prime_set_of(local_def)
        pairs = tuple(sorted((p, prime_set_of(qs)) for p, qs in local_def.items()))
        return cls(pi, pairs)

    def allowed(self, p: int) -> frozenset[int]:
        return dict(self.local_def)[p]

    def as_mapping(self) -> dict[int, list[int]]:
        return {p: sorted(qs) for p, qs in self.local_def}


def formation_graph(spec: LocalFormationSpec) -> CriticalGraph:
    """Edges (p_i, p_j) for every p_j in pi_i other than p_i itself."""
    edges = [(p, q) for p, allowed in spec.local_def for q in allowed if q != p]
    return graph_from(spec.pi, edges)


def spec_from_graph(g: CriticalGraph) -> LocalFormationSpec:
    """Inverse of :func:`formation_graph`: pi_i = {p_i} plus the successors of p_i."""
    succ: dict[int, set[int]] = {p: {p} for p in g.vertices}
    for p, q in g.edges:
        succ[p].add(q)
    return LocalFormationSpec.from_mapping(succ)
