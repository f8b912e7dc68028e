import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import brute_skew, brute_walk_matrix, cofactor_det, random_arcs
from skewspec import exact_linalg as la
from skewspec.census import run_census
from skewspec.errors import InputError, NotControllableError, NotCospectralMateError
from skewspec.graph_core import (
    OrientedGraph,
    apply_permutation,
    canonical_graph,
    enumerate_all,
    permutation_matrix,
    skew_adjacency,
    transpose,
)
from skewspec.worked_examples import example2_d
from skewspec.spectral import (
    QCertificate,
    SpectralFingerprint,
    fingerprint,
    generalized_cospectral,
    identity_certificate,
    is_controllable,
    is_permutation_matrix,
    level,
    recover_q,
    verify_gamma_membership,
    walk_matrix,
)


# ---------------------------------------------------------------- walk matrix

def test_walk_matrix_empty(triangle):
    assert walk_matrix(OrientedGraph(3)) == ((1, 0, 0),) * 3


def test_walk_matrix_triangle_balanced(triangle):
    assert walk_matrix(triangle) == ((1, 0, 0),) * 3


def test_walk_matrix_example1_det(d1):
    assert la.det_bareiss(walk_matrix(d1)) == -14392


def test_walk_matrix_matches_oracle_random():
    rng = random.Random(12)
    for _ in range(300):
        n = rng.randint(1, 7)
        arcs = random_arcs(rng, n)
        w = walk_matrix(OrientedGraph(n, arcs))
        assert [list(r) for r in w] == brute_walk_matrix(brute_skew(n, arcs))


def test_walk_column_recurrence_exhaustive():
    for n in range(1, 6):
        for g in enumerate_all(n):
            s = skew_adjacency(g)
            cols = la.transpose(walk_matrix(g))
            assert cols[0] == (1,) * n
            for k in range(n - 1):
                assert cols[k + 1] == la.mat_vec(s, cols[k])


# ---------------------------------------------------------------- controllable

def test_triangle_not_controllable(triangle):
    assert not is_controllable(triangle)


def test_single_arc_controllable():
    g = OrientedGraph(2, [(0, 1)])
    # W = [[1, 1], [1, -1]], det = -2 by direct expansion
    assert cofactor_det([list(r) for r in walk_matrix(g)]) == -2
    assert is_controllable(g)


def test_example2_controllable(d2):
    assert is_controllable(d2)


# ---------------------------------------------------------------- fingerprints

def test_fingerprint_empty_n2():
    fp = fingerprint(OrientedGraph(2))
    assert fp.p_s == (0, 0, 1)
    # J on two vertices: det(xI - J) = x^2 - 2x
    assert fp.p_js == (0, -2, 1)


def test_fingerprint_serialization_round_trip(d1):
    fp = fingerprint(d1)
    assert SpectralFingerprint.deserialize(fp.serialize()) == fp
    assert len(fp.digest()) == 64


def test_fingerprint_monic_degree_n():
    rng = random.Random(1)
    for _ in range(50):
        n = rng.randint(1, 7)
        fp = fingerprint(OrientedGraph(n, random_arcs(rng, n)))
        assert len(fp.p_s) == len(fp.p_js) == n + 1
        assert fp.p_s[-1] == fp.p_js[-1] == 1


def test_fingerprint_transpose_exhaustive_n4():
    for n in range(1, 5):
        for g in enumerate_all(n):
            assert fingerprint(g) == fingerprint(transpose(g))


def test_isomorphic_graphs_share_fingerprint_exhaustive_n4():
    for n in range(1, 5):
        for g in enumerate_all(n):
            assert fingerprint(g) == fingerprint(canonical_graph(g))


def test_example1_pair_cospectral(d1, c1):
    assert fingerprint(d1) == fingerprint(c1)
    assert generalized_cospectral(d1, c1)
    assert generalized_cospectral(d1, d1)


def test_different_arc_counts_not_cospectral():
    a = OrientedGraph(3, [(0, 1)])
    b = OrientedGraph(3, [(0, 1), (1, 2)])
    assert not generalized_cospectral(a, b)


def test_cospectral_size_mismatch():
    with pytest.raises(InputError):
        generalized_cospectral(OrientedGraph(2), OrientedGraph(3))


# ---------------------------------------------------------------- certificates

def test_level_is_lcm_of_denominators():
    assert level([[Fraction(1, 2), Fraction(1, 3)], [0, 1]]) == 6
    assert level(la.identity(3)) == 1


def test_recover_q_identity(d2):
    cert = recover_q(d2, d2)
    assert cert.q == la.to_rational(la.identity(6)) and cert.level == 1


@given(st.permutations(range(6)))
def test_recover_q_relabeling_gives_permutation(sigma):
    d = example2_d()
    cert = recover_q(d, apply_permutation(d, sigma))
    assert cert.q == la.to_rational(permutation_matrix(sigma))
    assert cert.level == 1


def test_recover_q_example1_levels(d1, c1):
    assert recover_q(d1, c1).level == 7
    assert recover_q(d1, transpose(d1)).level == 1799
    assert recover_q(d1, transpose(c1)).level == 257


def test_recover_q_requires_controllable(triangle):
    with pytest.raises(NotControllableError):
        recover_q(triangle, triangle)


def test_recover_q_rejects_non_cospectral(d2):
    other = OrientedGraph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (1, 3)])
    assert is_controllable(other)
    with pytest.raises(NotCospectralMateError):
        recover_q(d2, other)


def test_verify_gamma_membership(d1, c1):
    assert verify_gamma_membership(identity_certificate(d1))
    cert = recover_q(d1, c1)
    assert verify_gamma_membership(cert)
    rows = [list(r) for r in cert.q]
    rows[0][0] += 1
    bad = QCertificate(tuple(map(tuple, rows)), cert.level, cert.source, cert.target)
    assert not verify_gamma_membership(bad)


def test_certificate_scaled(d1, c1):
    cert = recover_q(d1, c1)
    qbar = cert.scaled(7)
    assert all(isinstance(x, int) for row in qbar for x in row)
    with pytest.raises(InputError):
        cert.scaled(3)


@pytest.fixture(scope="module")
def census5():
    return run_census(5)


def test_certificates_n5_properties(census5):
    count = 0
    for certs in census5.certificates.values():
        for cert in certs:
            count += 1
            assert verify_gamma_membership(cert)
            dd = la.det_bareiss(walk_matrix(cert.source))
            dc = la.det_bareiss(walk_matrix(cert.target))
            assert abs(dd) == abs(dc)
            assert (cert.level == 1) == is_permutation_matrix(cert.q)
    assert count > 0
