from __future__ import annotations

import pytest

from shemetkov.critical_graphs import (
    CandidateGroup,
    Family,
    gamma,
    gamma_psl2_2p,
    gamma_psl2_3p,
    gamma_psl2_p,
    gamma_psl33,
    gamma_sz_2p,
    group_order,
)
from shemetkov.errors import ValidationError
from shemetkov.primes import prime_set


def E(*pairs):
    return tuple(sorted(pairs))


@pytest.mark.parametrize("p, vertices, edges", [
    (2, (2, 3, 5), E((2, 3), (3, 2), (5, 2))),
    (3, (2, 3, 7), E((2, 7), (3, 2), (7, 2))),
    (5, (2, 3, 11, 31), E((2, 31), (3, 2), (11, 2), (31, 2))),
])
def test_gamma_psl2_2p(p, vertices, edges):
    g = gamma_psl2_2p(p)
    assert g.vertices == vertices
    assert g.edges == edges


@pytest.mark.parametrize("p, vertices, edges", [
    (3, (2, 3, 7, 13), E((3, 13), (2, 3), (7, 2), (13, 2))),
    (5, (2, 3, 11, 61), E((3, 11), (2, 3), (11, 2), (61, 2))),
])
def test_gamma_psl2_3p(p, vertices, edges):
    g = gamma_psl2_3p(p)
    assert g.vertices == vertices
    assert g.edges == edges


@pytest.mark.parametrize("p, vertices, edges", [
    (7, (2, 3, 7), E((7, 3), (2, 3), (3, 2))),
    (13, (2, 3, 7, 13), E((13, 2), (13, 3), (2, 3), (3, 2), (7, 2))),
])
def test_gamma_psl2_p(p, vertices, edges):
    g = gamma_psl2_p(p)
    assert g.vertices == vertices
    assert g.edges == edges


@pytest.mark.parametrize("p, vertices, edges", [
    (3, (2, 5, 7, 13), E((2, 7), (7, 2), (5, 2), (13, 2))),
    (5, (2, 5, 31, 41), E((2, 31), (31, 2), (5, 2), (41, 2))),
])
def test_gamma_sz_2p(p, vertices, edges):
    g = gamma_sz_2p(p)
    assert g.vertices == vertices
    assert g.edges == edges


def test_gamma_psl33():
    g = gamma_psl33()
    assert g.vertices == (2, 3, 13)
    assert (13, 3) in g.edge_set
    assert g.edges == E((2, 3), (3, 2), (13, 3))


@pytest.mark.parametrize("fn, p", [
    (gamma_psl2_3p, 2), (gamma_sz_2p, 2), (gamma_psl2_p, 11), (gamma_psl2_p, 5),
    (gamma_psl2_p, 3), (gamma_psl2_2p, 4), (gamma_psl2_3p, 9),
])
def test_generator_preconditions(fn, p):
    with pytest.raises(ValidationError):
        fn(p)


def test_candidate_names_and_dicts():
    cases = {
        CandidateGroup(Family.PSL2_2P, 2): "PSL(2,4)",
        CandidateGroup(Family.PSL2_2P, 3): "PSL(2,8)",
        CandidateGroup(Family.SZ_2P, 3): "Sz(8)",
        CandidateGroup(Family.PSL2_3P, 3): "PSL(2,27)",
        CandidateGroup(Family.PSL2_P, 7): "PSL(2,7)",
        CandidateGroup(Family.PSL3_3): "PSL(3,3)",
    }
    for cand, name in cases.items():
        assert cand.name == name
        assert CandidateGroup.from_dict(cand.to_dict()) == cand
    with pytest.raises(ValidationError):
        CandidateGroup(Family.PSL3_3, 3)


def _family_params():
    out = [CandidateGroup(Family.PSL3_3)]
    for p in (2, 3, 5, 7, 11, 13):
        out.append(CandidateGroup(Family.PSL2_2P, p))
        if p != 2:
            out += [CandidateGroup(Family.SZ_2P, p), CandidateGroup(Family.PSL2_3P, p)]
    out += [CandidateGroup(Family.PSL2_P, p) for p in (7, 13, 17, 23, 37, 43, 47)]
    return out


@pytest.mark.parametrize("cand", _family_params(), ids=str)
def test_generated_graph_invariants(cand):
    g = gamma(cand)
    assert all(p != q and p in g.vertex_set and q in g.vertex_set for p, q in g.edges)
    assert 2 in g.vertex_set
    # vertex set is exactly the prime support of the group order
    assert g.vertex_set == prime_set(group_order(cand))
    if cand.family in (Family.PSL2_2P, Family.SZ_2P):
        assert all((q, 2) in g.edge_set for q in g.vertices if q != 2)


def test_a5_generator_matches_hardcoded_line():
    assert gamma_psl2_2p(2).edge_set == {(2, 3), (3, 2), (5, 2)}
    assert gamma_psl2_2p(2).vertex_set == {2, 3, 5}
