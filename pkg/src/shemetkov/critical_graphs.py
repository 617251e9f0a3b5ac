"""N-critical graphs of the minimal simple non-abelian groups.

The families, up to isomorphism, are PSL(2, 2^p) for prime p, PSL(2, 3^p) and
Sz(2^p) for odd prime p, PSL(2, p) for primes p > 5 with 5 | p^2 + 1, and
PSL(3, 3).  Each ``*_edges`` helper turns the relevant prime-divisor sets into
the edge set; the ``gamma_*`` functions factor the group order themselves and
are meant for moderate parameters (they are the reference the decider is
tested against).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Mapping

from .errors import ValidationError
from .graph import CriticalGraph, Edge, graph_from
from .primes import is_prime, prime_set


class Family(str, enum.Enum):
    PSL2_2P = "PSL2_2p"
    PSL2_3P = "PSL2_3p"
    PSL2_P = "PSL2_p"
    SZ_2P = "Sz_2p"
    PSL3_3 = "PSL3_3"


@dataclass(frozen=True)
class CandidateGroup:
    family: Family
    parameter: int | None = None

    def __post_init__(self) -> None:
        p = self.parameter
        if self.family is Family.PSL3_3:
            if p is not None:
                raise ValidationError("PSL(3,3) takes no parameter")
            return
        if p is None or not is_prime(p):
            raise ValidationError(f"{self.family.value} needs a prime parameter, got {p!r}")
        if self.family in (Family.PSL2_3P, Family.SZ_2P) and p == 2:
            raise ValidationError(f"{self.family.value} needs an odd prime, got 2")
        if self.family is Family.PSL2_P and not is_psl2_prime(p):
            raise ValidationError(f"PSL(2,{p}) is not minimal simple: need p > 5 and 5 | p^2+1")

    @property
    def name(self) -> str:
        p = self.parameter
        if self.family is Family.PSL2_2P:
            return f"PSL(2,{2**p})"
        if self.family is Family.PSL2_3P:
            return f"PSL(2,{3**p})"
        if self.family is Family.SZ_2P:
            return f"Sz({2**p})"
        if self.family is Family.PSL2_P:
            return f"PSL(2,{p})"
        return "PSL(3,3)"

    def __str__(self) -> str:
        return self.name

    def to_dict(self) -> dict:
        return {"family": self.family.value, "parameter": self.parameter, "name": self.name}

    @classmethod
    def from_dict(cls, data: Mapping) -> CandidateGroup:
        return cls(Family(data["family"]), data.get("parameter"))


A5 = CandidateGroup(Family.PSL2_2P, 2)
PSL33 = CandidateGroup(Family.PSL3_3)

PSL33_EDGES: frozenset[Edge] = frozenset({(2, 3), (3, 2), (13, 3)})
A5_EDGES: frozenset[Edge] = frozenset({(2, 3), (3, 2), (5, 2)})


def is_psl2_prime(p: int) -> bool:
    # 5 | p^2 + 1  <=>  p = +-2 (mod 5)
    return p > 5 and p % 5 in (2, 3) and is_prime(p)


def psl2_2p_edges(minus: frozenset[int], plus: frozenset[int]) -> set[Edge]:
    """``minus`` = pi(2^p - 1), ``plus`` = pi(2^p + 1)."""
    return {(2, q) for q in minus} | {(q, 2) for q in minus | plus}


def sz_2p_edges(minus: frozenset[int], plus_sq: frozenset[int]) -> set[Edge]:
    """``minus`` = pi(2^p - 1), ``plus_sq`` = pi(2^(2p) + 1)."""
    return {(2, q) for q in minus} | {(q, 2) for q in minus | plus_sq}


def psl2_3p_edges(minus: frozenset[int], plus: frozenset[int]) -> set[Edge]:
    """``minus`` = pi(3^p - 1), ``plus`` = pi(3^p + 1)."""
    return (
        {(3, q) for q in minus - {2}}
        | {(2, 3)}
        | {(q, 2) for q in (minus | plus) - {2}}
    )


def psl2_p_edges(p: int, half_minus: frozenset[int], sq_minus: frozenset[int]) -> set[Edge]:
    """``half_minus`` = pi((p - 1)/2), ``sq_minus`` = pi(p^2 - 1)."""
    return {(p, q) for q in half_minus} | {(2, 3)} | {(q, 2) for q in sq_minus - {2}}


def _build(extra_vertices: set[int], edges: set[Edge]) -> CriticalGraph:
    vertices = set(extra_vertices)
    for e in edges:
        vertices.update(e)
    return graph_from(vertices, edges)


def gamma_psl2_2p(p: int) -> CriticalGraph:
    CandidateGroup(Family.PSL2_2P, p)
    minus, plus = prime_set(2**p - 1), prime_set(2**p + 1)
    return _build({2} | minus | plus, psl2_2p_edges(minus, plus))


def gamma_sz_2p(p: int) -> CriticalGraph:
    CandidateGroup(Family.SZ_2P, p)
    minus, plus_sq = prime_set(2**p - 1), prime_set(2 ** (2 * p) + 1)
    return _build({2} | minus | plus_sq, sz_2p_edges(minus, plus_sq))


def gamma_psl2_3p(p: int) -> CriticalGraph:
    CandidateGroup(Family.PSL2_3P, p)
    minus, plus = prime_set(3**p - 1), prime_set(3**p + 1)
    return _build({3} | minus | plus, psl2_3p_edges(minus, plus))


def gamma_psl2_p(p: int) -> CriticalGraph:
    CandidateGroup(Family.PSL2_P, p)
    half_minus, sq_minus = prime_set((p - 1) // 2), prime_set(p * p - 1)
    return _build({p} | sq_minus, psl2_p_edges(p, half_minus, sq_minus))


def gamma_psl33() -> CriticalGraph:
    return graph_from({2, 3, 13}, PSL33_EDGES)


def gamma(cand: CandidateGroup) -> CriticalGraph:
    if cand.family is Family.PSL3_3:
        return gamma_psl33()
    return {
        Family.PSL2_2P: gamma_psl2_2p,
        Family.PSL2_3P: gamma_psl2_3p,
        Family.PSL2_P: gamma_psl2_p,
        Family.SZ_2P: gamma_sz_2p,
    }[cand.family](cand.parameter)


def group_order(cand: CandidateGroup) -> int:
    """|G| from the standard order formulas."""
    p = cand.parameter
    if cand.family is Family.PSL2_2P:
        return (2**p + 1) * (2 ** (2 * p) - 2**p)
    if cand.family is Family.PSL2_3P:
        return (3**p + 1) * (3 ** (2 * p) - 3**p) // 2
    if cand.family is Family.SZ_2P:
        return 2 ** (2 * p) * (2 ** (2 * p) + 1) * (2**p - 1)
    if cand.family is Family.PSL2_P:
        return (p + 1) * (p * p - p) // 2
    return 5616
