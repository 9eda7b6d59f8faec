from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from oracles import brute_has_r_factor

from hampack.core import Graph, union_edge_disjoint
from hampack.construct import (
    babai_graph,
    circulant_regular,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    extremal_graph,
    random_graph,
)
from hampack.errors import CapacityError, ExistenceError, InputError
from hampack.factors import (
    extract_r_factor,
    largest_even_factor,
    dense_factor_degree,
    max_matching,
    petersen_two_factorization,
    r_factor_exists,
    reg_even_of_graph,
    regeven_bounds,
    tutte_quantities,
    tutte_verify_exhaustive,
)


# ---------------------------------------------------------------------------
# Tutte quantities
# ---------------------------------------------------------------------------

def test_quantities_k4_r1_empty_pair():
    cert = tutte_quantities(complete_graph(4), 1, [], [])
    assert (cert.q_r, cert.r_r) == (0, 0)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=9), st.integers(0, 4))
def test_empty_pair_vanishes_for_even_r(g, half_r):
    cert = tutte_quantities(g, 2 * half_r, [], [])
    assert (cert.q_r, cert.r_r) == (0, 0)


def test_quantities_c5_hand_value():
    cert = tutte_quantities(cycle_graph(5), 2, [0], [1])
    assert cert.r_r == 2 - 1 + 0
    assert cert.q_r == 1  # path 2-3-4: 2*3 + e(C,{1}) = 7, odd


def test_quantities_rejects_overlap():
    with pytest.raises(InputError):
        tutte_quantities(complete_graph(4), 1, [0], [0, 1])


def test_negative_r_r_not_clamped():
    cert = tutte_quantities(babai_graph(2), 4, range(4), range(4, 10))
    assert cert.r_r == -2
    assert cert.violates


# ---------------------------------------------------------------------------
# Existence pipeline vs oracles
# ---------------------------------------------------------------------------

def test_k5_has_four_factor():
    decision = r_factor_exists(complete_graph(5), 4)
    assert decision.exists
    decision.factor.validate(complete_graph(5))


def test_c6_has_one_factor():
    assert r_factor_exists(cycle_graph(6), 1).exists


def test_babai2_four_factor_refuted_with_certificate():
    g = babai_graph(2)
    decision = r_factor_exists(g, 4)
    assert not decision.exists
    cert = decision.certificate
    assert cert is not None and cert.violates
    redo = tutte_quantities(g, 4, cert.s, cert.t)
    assert (redo.q_r, redo.r_r) == (cert.q_r, cert.r_r)
    assert not brute_has_r_factor(g, 4)


def test_parity_gate_notes_instead_of_certificate():
    decision = r_factor_exists(complete_graph(5), 1)  # r*n odd
    assert not decision.exists
    assert decision.certificate is None
    assert "odd" in decision.note


def test_r_out_of_range():
    with pytest.raises(InputError):
        r_factor_exists(complete_graph(4), 4)
    with pytest.raises(InputError):
        r_factor_exists(complete_graph(4), -1)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=8), st.data())
def test_existence_matches_brute_force_with_valid_witnesses(g, data):
    if g.n == 0:
        return
    r = data.draw(st.integers(0, g.n - 1))
    decision = r_factor_exists(g, r)
    expected = (r * g.n) % 2 == 0 and brute_has_r_factor(g, r)
    assert decision.exists == expected
    if decision.exists:
        decision.factor.validate(g)
        assert all(d == r for d in decision.factor.subgraph.degrees())
    elif decision.certificate is not None:
        redo = tutte_quantities(g, r, decision.certificate.s, decision.certificate.t)
        assert redo.violates


# ---------------------------------------------------------------------------
# Exhaustive Tutte verification
# ---------------------------------------------------------------------------

def test_k4_r3_all_pairs_hold():
    assert tutte_verify_exhaustive(complete_graph(4), 3)


def test_k4_minus_edge_r3_fails():
    g = Graph(4, [e for e in complete_graph(4).edges() if e != (0, 1)])
    assert not tutte_verify_exhaustive(g, 3)


def test_exhaustive_capacity():
    with pytest.raises(CapacityError):
        tutte_verify_exhaustive(complete_graph(15), 2)


@settings(max_examples=120, deadline=None)
@given(graphs(max_n=6), st.data())
def test_exhaustive_agrees_with_existence(g, data):
    if g.n == 0:
        return
    r = data.draw(st.integers(0, g.n - 1))
    if (r * g.n) % 2:
        return
    assert tutte_verify_exhaustive(g, r) == r_factor_exists(g, r).exists


# ---------------------------------------------------------------------------
# Extraction
# ---------------------------------------------------------------------------

def test_extract_two_factor_of_k5():
    f = extract_r_factor(complete_graph(5), 2)
    assert f.subgraph.degrees() == [2] * 5


def test_extract_c6_two_factor_is_itself():
    f = extract_r_factor(cycle_graph(6), 2)
    assert f.subgraph.edges == cycle_graph(6).edge_set()


def test_extract_extremal_16_9_iff_exists():
    g, _, _ = extremal_graph(16, 9)
    decision = r_factor_exists(g, 8)
    if decision.exists:
        f = extract_r_factor(g, 8)
        assert all(d == 8 for d in f.subgraph.degrees())
    else:
        with pytest.raises(ExistenceError) as err:
            extract_r_factor(g, 8)
        assert err.value.certificate is not None


def test_extract_missing_factor_raises_with_certificate():
    with pytest.raises(ExistenceError) as err:
        extract_r_factor(babai_graph(2), 4)
    assert err.value.certificate.violates


# ---------------------------------------------------------------------------
# Largest even factor
# ---------------------------------------------------------------------------

def test_reg_even_examples():
    assert reg_even_of_graph(complete_graph(5)) == 4
    assert reg_even_of_graph(babai_graph(2)) == 2
    assert reg_even_of_graph(complete_bipartite(12)) == 6


def test_largest_even_factor_returns_witness():
    r, factor = largest_even_factor(babai_graph(2))
    assert r == 2
    factor.validate(babai_graph(2))


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=7))
def test_reg_even_matches_brute_force(g):
    expected = 0
    for r in range(g.n - 1 if g.n else 0, 0, -1):
        if r % 2 == 0 and brute_has_r_factor(g, r):
            expected = r
            break
    assert reg_even_of_graph(g) == expected


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000))
def test_bound_sandwich_on_dirac_graphs(seed):
    g = random_graph(9, 0.8, seed)
    if 2 * g.min_degree() < g.n:
        return
    b = regeven_bounds(g.n, g.min_degree())
    assert reg_even_of_graph(g) >= b.lower


# ---------------------------------------------------------------------------
# Bounds evaluator
# ---------------------------------------------------------------------------

def test_bounds_8_4():
    b = regeven_bounds(8, 4)
    assert b.lower == 2
    assert b.upper == Fraction(3)


def test_bounds_16_8_matches_quarter():
    assert regeven_bounds(16, 8).lower == 4


def test_bounds_10_5():
    b = regeven_bounds(10, 5)
    assert b.lower == 2
    assert b.upper == Fraction(7, 2)


def test_bounds_below_half_are_zero():
    b = regeven_bounds(10, 4)
    assert (b.lower, b.upper) == (0, 0)
    assert b.note


def test_bounds_grid_invariants():
    for n in range(4, 40):
        for delta in range((n + 1) // 2, n):
            b = regeven_bounds(n, delta)
            assert b.lower % 2 == 0
            assert b.admits(b.lower)
            assert not b.admits(b.lower + 40)


# ---------------------------------------------------------------------------
# Two-factor splitting
# ---------------------------------------------------------------------------

@pytest.mark.parametrize(
    "g,count",
    [
        (complete_graph(5), 2),
        (cycle_graph(8), 1),
        (circulant_regular(9, 4), 2),
        (circulant_regular(12, 6), 3),
    ],
)
def test_two_factorization_partitions_edges(g, count):
    factors = petersen_two_factorization(g)
    assert len(factors) == count
    union = None
    for f in factors:
        assert all(d == 2 for d in f.subgraph.degrees())
        union = f.subgraph if union is None else union_edge_disjoint(union, f.subgraph)
    assert union.edges == g.edge_set()


def test_two_factorization_rejects_bad_inputs():
    with pytest.raises(InputError):
        petersen_two_factorization(complete_graph(4))  # odd-regular
    with pytest.raises(InputError):
        petersen_two_factorization(babai_graph(1))  # irregular


# ---------------------------------------------------------------------------
# Even-degree formula
# ---------------------------------------------------------------------------

def test_dense_factor_degree_zero_terms():
    assert dense_factor_degree(16, 0, 0)[0] == 4
    assert dense_factor_degree(10, 0, 0)[0] == 2  # 2.5 rounds down to even


def test_dense_factor_degree_worked_example():
    r, value = dense_factor_degree(64, Fraction(1, 16), Fraction(1, 64))
    assert r == 30
    assert abs(float(value) - 31.149) < 0.001


def test_dense_factor_degree_monotone_in_alpha():
    values = [
        dense_factor_degree(48, Fraction(k, 96), Fraction(1, 96))[0] for k in range(0, 40)
    ]
    assert values == sorted(values)


def test_dense_factor_degree_domain():
    with pytest.raises(InputError):
        dense_factor_degree(16, Fraction(-1, 4), Fraction(1, 8))


# ---------------------------------------------------------------------------
# Matching front end (detail cases live in test_matching.py)
# ---------------------------------------------------------------------------

def test_max_matching_on_factor_host():
    m = max_matching(complete_bipartite(8))
    assert m.size == 4


def test_unbalanced_bipartite_has_no_even_factor():
    # spanning r-regular needs 5r = 7r across the two sides, so r = 0:
    # the almost-balanced bipartite graph pins reg_even below half degree
    g = Graph(12, [(u, 5 + v) for u in range(5) for v in range(7)])
    assert g.min_degree() == 5
    assert reg_even_of_graph(g) == 0
