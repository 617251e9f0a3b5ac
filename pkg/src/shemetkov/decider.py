"""Decide whether a locally defined formation is a formation of soluble groups
with the Shemetkov property.

The answer is "yes" exactly when no minimal simple non-abelian group has its
N-critical graph inside the formation's graph.  Only a short list of such
groups can possibly fit (see :func:`enumerate_candidates`); each is checked
first for vertex containment (all prime divisors of |G| lie in pi) and only
then for edge containment.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .critical_graphs import (
    A5,
    A5_EDGES,
    PSL33,
    PSL33_EDGES,
    CandidateGroup,
    Family,
    is_psl2_prime,
    psl2_2p_edges,
    psl2_3p_edges,
    psl2_p_edges,
    sz_2p_edges,
)
from .formation import LocalFormationSpec, formation_graph
from .graph import CriticalGraph, Edge, format_edges
from .primes import cofactor_outside, power_divisors_within, prime_divisors_within, prime_set


class Stage(str, enum.Enum):
    VERTEX = "vertex-containment"
    EDGE = "edge-containment"
    LINE = "hardcoded-line"


@dataclass(frozen=True)
class CheckRecord:
    candidate: CandidateGroup
    stage: Stage
    passed: bool
    # the number whose prime divisors were tested, or the required edge set
    subject: str
    missing_edge: Edge | None = None
    # part of the tested number not made of primes in pi (vertex failures only)
    cofactor: int | None = None

    def describe(self) -> str:
        name = self.candidate.name
        if self.stage is Stage.VERTEX:
            if self.passed:
                return f"{name}: {self.subject} ⊆ π"
            return f"{name}: {self.subject} ⊄ π, cofactor {self.cofactor} has primes outside π"
        if self.passed:
            return f"{name}: {self.subject} ⊆ E(Γ)"
        p, q = self.missing_edge
        return f"{name}: {self.subject} ⊄ E(Γ), missing ({p}, {q})"

    def to_dict(self) -> dict:
        return {
            "candidate": self.candidate.to_dict(),
            "stage": self.stage.value,
            "passed": self.passed,
            "subject": self.subject,
            "missing_edge": list(self.missing_edge) if self.missing_edge else None,
            "cofactor": self.cofactor,
        }


@dataclass(frozen=True)
class Verdict:
    is_soluble_shemetkov: bool
    witness: CandidateGroup | None
    trace: tuple[CheckRecord, ...]
    rho: tuple[int, ...]
    candidates_checked: int
    # every embedded candidate found; at most one unless run with all_witnesses
    witnesses: tuple[CandidateGroup, ...] = field(default=())
    reached_rho: bool = True


def rho(pi: frozenset[int]) -> frozenset[int]:
    """Odd primes dividing q - 1 for some q in pi: the only possible exponents p
    for PSL(2, 2^p), Sz(2^p) and PSL(2, 3^p) with p odd."""
    out: set[int] = set()
    for q in pi:
        out |= prime_set(q - 1)
    out.discard(2)
    return frozenset(out)


def enumerate_candidates(pi: frozenset[int]) -> list[CandidateGroup]:
    cands = [PSL33, A5]
    cands += [CandidateGroup(Family.PSL2_P, p) for p in sorted(pi) if is_psl2_prime(p)]
    for p in sorted(rho(pi)):
        cands += [
            CandidateGroup(Family.PSL2_2P, p),
            CandidateGroup(Family.SZ_2P, p),
            CandidateGroup(Family.PSL2_3P, p),
        ]
    return cands


def in_rho_phase(cand: CandidateGroup) -> bool:
    return cand.family in (Family.SZ_2P, Family.PSL2_3P) or (
        cand.family is Family.PSL2_2P and cand.parameter != 2
    )


def _edge_record(cand: CandidateGroup, stage: Stage, required: set[Edge] | frozenset[Edge],
                 gamma: CriticalGraph) -> CheckRecord:
    have = gamma.edge_set
    missing = next((e for e in sorted(required) if e not in have), None)
    return CheckRecord(cand, stage, missing is None, format_edges(required), missing_edge=missing)


def _vertex_stage(cand: CandidateGroup, pi: frozenset[int]):
    """Returns (record, prime sets needed for the edge formula or None)."""
    p = cand.parameter
    if cand.family is Family.PSL2_P:
        subject = f"π(({p}^3-{p})/2)"
        m = (p**3 - p) // 2
        if prime_divisors_within(m, pi) is None:
            rec = CheckRecord(cand, Stage.VERTEX, False, subject, cofactor=cofactor_outside(m, pi))
            return rec, None
        return CheckRecord(cand, Stage.VERTEX, True, subject), None

    if cand.family is Family.PSL2_2P:
        lead, parts = 2, [(2, p, -1), (2, p, 1)]
        subject = f"π(2(2^{2 * p}-1))"
    elif cand.family is Family.SZ_2P:
        lead, parts = 2, [(2, p, -1), (2, 2 * p, 1)]
        subject = f"π(2(2^{p}-1)(2^{2 * p}+1))"
    else:
        lead, parts = 3, [(3, p, -1), (3, p, 1)]
        subject = f"π(3(3^{2 * p}-1)/2)"

    if lead not in pi:
        return CheckRecord(cand, Stage.VERTEX, False, subject, cofactor=lead), None
    sets = []
    for base, k, delta in parts:
        fac, rest = power_divisors_within(base, k, delta, pi)
        if fac is None:
            return CheckRecord(cand, Stage.VERTEX, False, subject, cofactor=rest), None
        sets.append(fac.primes)
    return CheckRecord(cand, Stage.VERTEX, True, subject), sets


def check_candidate(cand: CandidateGroup, gamma: CriticalGraph) -> list[CheckRecord]:
    """Records for each stage run; the candidate embeds iff the last one passed."""
    if cand == PSL33:
        return [_edge_record(cand, Stage.LINE, PSL33_EDGES, gamma)]
    if cand == A5:
        return [_edge_record(cand, Stage.LINE, A5_EDGES, gamma)]

    pi = gamma.vertex_set
    vrec, sets = _vertex_stage(cand, pi)
    if not vrec.passed:
        return [vrec]

    p = cand.parameter
    if cand.family is Family.PSL2_P:
        required = psl2_p_edges(p, prime_set((p - 1) // 2), prime_set(p * p - 1))
    elif cand.family is Family.PSL2_2P:
        required = psl2_2p_edges(*sets)
    elif cand.family is Family.SZ_2P:
        required = sz_2p_edges(*sets)
    else:
        required = psl2_3p_edges(*sets)
    return [vrec, _edge_record(cand, Stage.EDGE, required, gamma)]


def decide_graph(gamma: CriticalGraph, all_witnesses: bool = False) -> Verdict:
    """Check every candidate against ``gamma``; stops at the first embedding
    unless ``all_witnesses`` is set."""
    rho_set = tuple(sorted(rho(gamma.vertex_set)))
    trace: list[CheckRecord] = []
    found: list[CandidateGroup] = []
    checked = 0
    reached_rho = False
    for cand in enumerate_candidates(gamma.vertex_set):
        reached_rho = reached_rho or in_rho_phase(cand)
        records = check_candidate(cand, gamma)
        trace.extend(records)
        checked += 1
        if records[-1].passed:
            found.append(cand)
            if not all_witnesses:
                break
    else:
        reached_rho = True
    return Verdict(
        is_soluble_shemetkov=not found,
        witness=found[0] if found else None,
        trace=tuple(trace),
        rho=rho_set,
        candidates_checked=checked,
        witnesses=tuple(found),
        reached_rho=reached_rho,
    )


def decide(spec: LocalFormationSpec, all_witnesses: bool = False) -> Verdict:
    return decide_graph(formation_graph(spec), all_witnesses=all_witnesses)
