import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_skew, random_arcs
from skewspec import exact_linalg as la
from skewspec.errors import InputError, UnsupportedError
from skewspec.graph_core import (
    OrientedGraph,
    apply_permutation,
    canonical_form,
    decode,
    encode,
    enumerate_all,
    enumerate_codes,
    format_text,
    from_code,
    from_compact,
    from_skew_matrix,
    is_isomorphic,
    parse_graph,
    parse_text,
    permutation_matrix,
    skew_adjacency,
    to_code,
    to_compact,
    transpose,
)
from skewspec.worked_examples import EXAMPLE1_D_MATRIX, example1_d


@st.composite
def graphs(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    digits = draw(st.lists(st.sampled_from("012"), min_size=n * (n - 1) // 2,
                           max_size=n * (n - 1) // 2))
    return decode(n, "".join(digits))


@st.composite
def graph_and_perm(draw, max_n=6):
    g = draw(graphs(max_n=max_n))
    sigma = draw(st.permutations(range(g.n)))
    return g, tuple(sigma)


# ------------------------------------------------------------ construction

def test_rejects_loops_and_digons():
    with pytest.raises(InputError):
        OrientedGraph(2, [(0, 0)])
    with pytest.raises(InputError):
        OrientedGraph(2, [(0, 1), (1, 0)])
    with pytest.raises(InputError):
        OrientedGraph(2, [(0, 2)])


def test_skew_adjacency_empty():
    assert skew_adjacency(OrientedGraph(3)) == ((0, 0, 0),) * 3


def test_skew_adjacency_single_arc():
    assert skew_adjacency(OrientedGraph(2, [(0, 1)])) == ((0, 1), (-1, 0))


def test_skew_adjacency_example1_matches_printed_matrix():
    arcs = [(0, 1), (0, 2), (3, 0), (2, 3), (2, 4), (2, 5), (3, 4), (3, 6), (4, 5), (6, 4)]
    assert skew_adjacency(OrientedGraph(7, arcs)) == EXAMPLE1_D_MATRIX
    assert example1_d() == OrientedGraph(7, arcs)


def test_skew_adjacency_properties_exhaustive():
    for n in range(1, 6):
        for g in enumerate_all(n):
            s = skew_adjacency(g)
            assert s == la.scale(la.transpose(s), -1)
            assert all(s[i][i] == 0 for i in range(n))
            assert all(x in (-1, 0, 1) for row in s for x in row)
            assert skew_adjacency(transpose(g)) == la.transpose(s)


def test_from_skew_matrix_rejects_non_skew():
    with pytest.raises(InputError):
        from_skew_matrix([[0, 1], [1, 0]])


# ------------------------------------------------------------ transpose

def test_transpose_cases():
    assert transpose(OrientedGraph(3)) == OrientedGraph(3)
    assert transpose(OrientedGraph(2, [(0, 1)])) == OrientedGraph(2, [(1, 0)])


def test_transpose_involution_random():
    rng = random.Random(5)
    for _ in range(1000):
        n = rng.randint(1, 7)
        g = OrientedGraph(n, random_arcs(rng, n))
        assert transpose(transpose(g)) == g


# ------------------------------------------------------------ encodings

def test_compact_single_arc():
    assert to_compact(OrientedGraph(2, [(0, 1)])) == "o2:1"
    assert from_compact("o2:2") == OrientedGraph(2, [(1, 0)])
    assert to_compact(OrientedGraph(1)) == "o1:"


def test_encoding_round_trip_exhaustive():
    for n in range(1, 6):
        for code in enumerate_codes(n):
            g = from_code(n, code)
            assert decode(n, encode(g)) == g
            assert from_compact(to_compact(g)) == g
            assert to_code(g) == code


def test_compact_rejects_garbage():
    for bad in ("o2:3", "o3:01", "x2:1", "o2"):
        with pytest.raises(InputError):
            from_compact(bad)


def test_text_format_round_trip():
    g = example1_d()
    assert parse_text(format_text(g)) == g
    assert parse_graph(format_text(g)) == g
    assert parse_graph("# comment\n" + to_compact(g) + "\n") == g


def test_text_format_comments_and_errors():
    assert parse_text("# header\nn 3\n# arc list\n0 1\n1 2\n") == OrientedGraph(3, [(0, 1), (1, 2)])
    with pytest.raises(InputError, match="line 2"):
        parse_text("n 3\n0 x\n")
    with pytest.raises(InputError, match="line 1"):
        parse_text("3\n")
    with pytest.raises(InputError, match="digon"):
        parse_text("n 2\n0 1\n1 0\n")
    with pytest.raises(InputError):
        parse_text("# nothing\n")


# ------------------------------------------------------------ permutations

def test_identity_permutation():
    g = example1_d()
    assert apply_permutation(g, range(7)) == g


def test_swap_permutation():
    assert apply_permutation(OrientedGraph(2, [(0, 1)]), (1, 0)) == OrientedGraph(2, [(1, 0)])


def test_permutation_size_mismatch():
    with pytest.raises(InputError):
        apply_permutation(OrientedGraph(3), (0, 1))
    with pytest.raises(InputError):
        apply_permutation(OrientedGraph(3), (0, 1, 1))


@given(graph_and_perm())
def test_permutation_conjugates_skew_matrix(gs):
    g, sigma = gs
    p = permutation_matrix(sigma)
    lhs = skew_adjacency(apply_permutation(g, sigma))
    rhs = la.mat_mul(la.mat_mul(la.transpose(p), skew_adjacency(g)), p)
    assert lhs == rhs


# ------------------------------------------------------------ isomorphism

def test_isomorphic_reflexive():
    g = example1_d()
    sigma = is_isomorphic(g, g)
    assert sigma is not None and apply_permutation(g, sigma) == g


@given(graph_and_perm(max_n=7))
@settings(max_examples=150)
def test_isomorphism_witness(gs):
    g, sigma = gs
    h = apply_permutation(g, sigma)
    w = is_isomorphic(g, h)
    assert w is not None and apply_permutation(g, w) == h


def test_different_arc_counts_not_isomorphic():
    assert is_isomorphic(OrientedGraph(3, [(0, 1)]), OrientedGraph(3, [(0, 1), (1, 2)])) is None


def test_directed_triangle_vs_transitive_triangle():
    cyc = OrientedGraph(3, [(0, 1), (1, 2), (2, 0)])
    tt = OrientedGraph(3, [(0, 1), (1, 2), (0, 2)])
    assert is_isomorphic(cyc, tt) is None


# ------------------------------------------------------------ canonical form

def test_canonical_empty():
    assert canonical_form(OrientedGraph(3)) == "o3:000"


def test_canonical_single_arc_both_directions():
    assert canonical_form(OrientedGraph(2, [(0, 1)])) == canonical_form(OrientedGraph(2, [(1, 0)]))


@given(graph_and_perm(max_n=7))
@settings(max_examples=100)
def test_canonical_invariant_under_relabeling(gs):
    g, sigma = gs
    assert canonical_form(g) == canonical_form(apply_permutation(g, sigma))


def _brute_canon(g):
    """Least digit string over all relabelings, computed from scratch."""
    n = g.n
    best = None
    for sigma in itertools.permutations(range(n)):
        s = brute_skew(n, [(sigma[u], sigma[v]) for u, v in g.arcs])
        digits = "".join({0: "0", 1: "1", -1: "2"}[s[i][j]]
                         for i in range(n) for j in range(i + 1, n))
        best = digits if best is None or digits < best else best
    return f"o{n}:{best}"


def test_canonical_matches_brute_force():
    rng = random.Random(8)
    for _ in range(60):
        n = rng.randint(1, 6)
        g = OrientedGraph(n, random_arcs(rng, n))
        assert canonical_form(g) == _brute_canon(g)


def test_canonical_n8_streamed_path():
    rng = random.Random(2)
    g = OrientedGraph(8, random_arcs(rng, 8))
    h = apply_permutation(g, (3, 1, 7, 0, 6, 2, 5, 4))
    assert canonical_form(g) == canonical_form(h)


def test_canonical_separates_orbits_exhaustive_n4():
    gs = list(enumerate_all(4))
    forms = [canonical_form(g) for g in gs]
    reps = {}
    for g, f in zip(gs, forms):
        reps.setdefault(f, g)
    classes = list(reps.values())
    # different forms -> non-isomorphic, checked pairwise
    for a, b in itertools.combinations(classes, 2):
        assert is_isomorphic(a, b) is None
    # same form -> isomorphic
    for g, f in zip(gs, forms):
        assert is_isomorphic(g, reps[f]) is not None
    assert len(classes) == 42


def test_canonical_too_large():
    with pytest.raises(UnsupportedError):
        canonical_form(OrientedGraph(10))


# ------------------------------------------------------------ enumeration

@pytest.mark.parametrize("n,count", [(1, 1), (2, 3), (3, 27), (4, 729), (5, 59049)])
def test_enumeration_counts(n, count):
    assert len(enumerate_codes(n)) == count


def test_enumeration_n2_contents():
    assert [to_compact(g) for g in enumerate_all(2)] == ["o2:0", "o2:1", "o2:2"]


def test_enumeration_distinct_n3():
    gs = list(enumerate_all(3))
    assert len(gs) == len(set(gs)) == 27


@pytest.mark.parametrize("shards", [1, 2, 3, 7, 10])
def test_shards_partition_stream(shards):
    full = [to_compact(g) for g in enumerate_all(4)]
    parts = [to_compact(g) for i in range(shards) for g in enumerate_all(4, shards, i)]
    assert parts == full


def test_enumeration_limits():
    with pytest.raises(UnsupportedError):
        enumerate_codes(7)
    with pytest.raises(InputError):
        enumerate_codes(4, 3, 3)
