from __future__ import annotations

import itertools

import pytest
from hypothesis import strategies as st

from shemetkov.formation import LocalFormationSpec
from shemetkov.graph import CriticalGraph, graph_from
from shemetkov.oracle import brute_factor_power
from shemetkov.primes import is_prime

PRIMES_TO_50 = [p for p in range(2, 51) if is_prime(p)]

COR0_TEXT = "2: 2 3 5 7\n3: 2 3 5 7\n5: 3 5 7\n7: 5 7\n"
COR0_EDGES = [(2, 3), (2, 5), (2, 7), (3, 2), (3, 5), (3, 7), (5, 3), (5, 7), (7, 5)]
COR2_FORBIDDEN = [(5, 2), (7, 2), (7, 3)]


def complete_graph(vertices) -> CriticalGraph:
    return graph_from(vertices, itertools.permutations(vertices, 2))


def cor2_graph(extra=()) -> CriticalGraph:
    v = [2, 3, 5, 7]
    edges = [e for e in itertools.permutations(v, 2) if e not in COR2_FORBIDDEN]
    return graph_from(v, edges + list(extra))


@pytest.fixture
def cor0_spec() -> LocalFormationSpec:
    return LocalFormationSpec.from_mapping(
        {2: [2, 3, 5, 7], 3: [2, 3, 5, 7], 5: [3, 5, 7], 7: [5, 7]}
    )


@pytest.fixture
def cor0_graph() -> CriticalGraph:
    return graph_from([2, 3, 5, 7], COR0_EDGES)


@st.composite
def graphs(draw, pool=PRIMES_TO_50, min_vertices=0):
    vs = draw(st.lists(st.sampled_from(pool), min_size=min_vertices, unique=True))
    pairs = [e for e in itertools.permutations(sorted(vs), 2)]
    es = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return graph_from(vs, es)


@st.composite
def graph_pairs(draw, pool=PRIMES_TO_50):
    """(sub, super) with sub a random subgraph of super."""
    big = draw(graphs(pool))
    vs = [v for v in big.vertices if draw(st.booleans())]
    keep = set(vs)
    es = [e for e in big.edges if e[0] in keep and e[1] in keep and draw(st.booleans())]
    return graph_from(vs, es), big


@st.composite
def formation_specs(draw, pool=PRIMES_TO_50):
    pi = draw(st.lists(st.sampled_from(pool), min_size=1, unique=True))
    local = {p: {p} | set(draw(st.lists(st.sampled_from(pi), unique=True))) for p in pi}
    return LocalFormationSpec.from_mapping(local)


CORE_PRIMES = (2, 3, 5, 7, 13)


@st.composite
def dense_graphs(draw, pool=PRIMES_TO_50):
    """Dense graphs that usually contain the small primes, so candidate groups embed often."""
    rnd = draw(st.randoms(use_true_random=False))
    vs = [p for p in CORE_PRIMES if rnd.random() < 0.9]
    vs += [p for p in pool if p not in CORE_PRIMES and rnd.random() < 0.3]
    density = rnd.uniform(0.6, 1.0)
    es = [e for e in itertools.permutations(sorted(vs), 2) if rnd.random() < density]
    return graph_from(vs, es)


@st.composite
def dense_graph_pairs(draw):
    big = draw(dense_graphs())
    rnd = draw(st.randoms(use_true_random=False))
    drop = rnd.uniform(0.0, 0.3)
    vs = [v for v in big.vertices if rnd.random() >= drop / 3]
    keep = set(vs)
    es = [e for e in big.edges if e[0] in keep and e[1] in keep and rnd.random() >= drop]
    return graph_from(vs, es), big


def any_graphs():
    return st.one_of(graphs(min_vertices=3), dense_graphs())


def any_graph_pairs():
    return st.one_of(graph_pairs(), dense_graph_pairs())


# Graphs rebuilt straight from the N-critical graph formulas, fed by the oracle.
def _primes(base, k, delta):
    return set(brute_factor_power(base, k, delta).factors)


def oracle_psl2_2p(p):
    minus, sq = _primes(2, p, -1), _primes(2, 2 * p, -1)
    return graph_from({2} | sq, {(2, q) for q in minus} | {(q, 2) for q in sq})


def oracle_sz_2p(p):
    minus, plus_sq = _primes(2, p, -1), _primes(2, 2 * p, 1)
    both = minus | plus_sq
    return graph_from({2} | both, {(2, q) for q in minus} | {(q, 2) for q in both})


def oracle_psl2_3p(p):
    minus, sq = _primes(3, p, -1), _primes(3, 2 * p, -1)
    return graph_from({3} | sq, {(3, q) for q in minus - {2}} | {(2, 3)} | {(q, 2) for q in sq - {2}})


def oracle_psl2_p(p):
    def pi(m):
        return {d for d in range(2, m + 1) if m % d == 0 and is_prime(d)}
    sq = pi(p * p - 1)
    return graph_from({p} | sq, {(p, q) for q in pi((p - 1) // 2)} | {(2, 3)} | {(q, 2) for q in sq - {2}})
