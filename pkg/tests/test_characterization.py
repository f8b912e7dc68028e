import pytest

from oracles import determinantal_invariant_factors
from skewspec import exact_linalg as la
from skewspec.characterization import (
    certificate_lemma_audit,
    expected_snf_structure,
    fn_membership,
    is_self_transpose,
    last_invariant_factor,
    mate_bound,
    pairwise_level_audit,
    snf_structure_check,
    wdgss_criterion,
)
from skewspec.errors import InapplicableError
from skewspec.graph_core import OrientedGraph, apply_permutation, transpose
from skewspec.spectral import identity_certificate, recover_q, walk_matrix


# ---------------------------------------------------------------- F_n

def test_fn_example1(d1):
    rep = fn_membership(d1)
    assert rep.det_walk == -14392
    assert rep.is_member and rep.reduced == -1799
    assert rep.odd_primes == (7, 257)
    assert rep.k == 2 and rep.bound == 3 and rep.b == 1799
    assert mate_bound(rep) == 3


def test_fn_example2(d2):
    rep = fn_membership(d2)
    assert rep.det_walk == 1528
    assert rep.is_member and rep.reduced == 191
    assert rep.k == 1 and mate_bound(rep) == 1


def test_fn_triangle_not_member(triangle):
    rep = fn_membership(triangle)
    assert rep.det_walk == 0 and not rep.is_member
    with pytest.raises(InapplicableError):
        mate_bound(rep)


def test_fn_single_arc_bound_zero():
    rep = fn_membership(OrientedGraph(2, [(0, 1)]))
    assert rep.is_member and rep.reduced == -1 and rep.k == 0
    assert mate_bound(rep) == 0


def test_fn_non_square_free_excluded():
    # |reduced| divisible by an odd square keeps the graph out of F_n
    from skewspec.graph_core import enumerate_all

    for g in enumerate_all(5):
        rep = fn_membership(g)
        if rep.reduced and rep.reduced % 2 and rep.reduced % 9 == 0:
            assert not rep.is_member
            return
    pytest.skip("no such graph at n=5")


# ---------------------------------------------------------------- WDGSS

def test_wdgss_example2(d2):
    v = wdgss_criterion(d2)
    assert v.verdict == "wdgss_by_criterion"
    assert not v.self_transpose and v.reduced_is_odd_prime and v.applicable


def test_wdgss_example1_not_applicable(d1):
    v = wdgss_criterion(d1)
    assert v.verdict == "not_applicable" and not v.reduced_is_odd_prime


def test_wdgss_single_arc_self_transpose():
    v = wdgss_criterion(OrientedGraph(2, [(0, 1)]))
    assert v.self_transpose and v.verdict == "not_applicable"


def test_self_transpose_detection(d1, d2):
    assert not is_self_transpose(d1)
    assert not is_self_transpose(d2)
    assert is_self_transpose(OrientedGraph(3, [(0, 1), (1, 2), (2, 0)]))


# ---------------------------------------------------------------- SNF structure

def test_expected_structure_shapes():
    assert expected_snf_structure(6, 191) == (1, 1, 1, 2, 2, 382)
    assert expected_snf_structure(7, 1799) == (1, 1, 1, 1, 2, 2, 3598)
    assert expected_snf_structure(2, 1) == (1, 2)
    assert expected_snf_structure(1, 1) == (1,)


def test_snf_structure_example2(d2):
    assert snf_structure_check(d2)
    wt = la.transpose(walk_matrix(d2))
    assert determinantal_invariant_factors(wt) == (1, 1, 1, 2, 2, 382)


def test_snf_structure_example1(d1):
    assert snf_structure_check(d1)
    assert last_invariant_factor(walk_matrix(d1)) == 3598


def test_snf_structure_non_member(triangle):
    with pytest.raises(InapplicableError):
        snf_structure_check(triangle)


def test_rank2_of_f7_member(d1):
    assert la.rank_mod_p(walk_matrix(d1), 2) == 4


# ---------------------------------------------------------------- lemma audits

def test_audit_example1_level7(d1, c1):
    cert = recover_q(d1, c1)
    audit = certificate_lemma_audit(cert)
    assert audit.passed
    names = {c.name for c in audit.checks}
    assert "rank_p_qbar_is_1[p=7]" in names
    assert "gram_qbar_zero_mod_p2[p=7]" in names


def test_audit_example1_level1799(d1):
    cert = recover_q(d1, transpose(d1))
    audit = certificate_lemma_audit(cert)
    assert audit.passed
    names = {c.name for c in audit.checks}
    assert {"rank_p_qbar_is_1[p=7]", "rank_p_qbar_is_1[p=257]"} <= names


def test_audit_identity(d1):
    audit = certificate_lemma_audit(identity_certificate(d1))
    assert audit.passed
    assert not any(c.name.startswith("rank_p") for c in audit.checks)


def test_pairwise_audit_example1(d1, c1):
    q1 = recover_q(d1, c1)
    q2 = recover_q(d1, transpose(d1))
    audit = pairwise_level_audit(q1, q2)
    assert audit.passed
    assert [c.name for c in audit.checks] == ["p_not_dividing_composite_level[p=7]"]


def test_pairwise_audit_same_certificate(d1, c1):
    q1 = recover_q(d1, c1)
    audit = pairwise_level_audit(q1, q1)
    assert audit.passed
    assert "equal_levels_give_permutation" in {c.name for c in audit.checks}


def test_pairwise_audit_isomorphic_targets(d1, c1):
    q1 = recover_q(d1, c1)
    q2 = recover_q(d1, apply_permutation(c1, (6, 5, 4, 3, 2, 1, 0)))
    assert q1.level == q2.level == 7
    assert pairwise_level_audit(q1, q2).passed


def test_pairwise_audit_requires_same_source(d1, d2):
    with pytest.raises(InapplicableError):
        pairwise_level_audit(identity_certificate(d1), identity_certificate(d2))
