from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hspec import Hypergraph, complete_r_graph, disjoint_union
from hspec.clique import max_clique_exact
from hspec.lagrangian import (
    LagrangianOptions,
    clique_support_value,
    lagrangian_gradient,
    lagrangian_value,
    maximize_lagrangian,
    project_to_simplex,
)
from hspec.tensor import rayleigh_adjacency
from suites import instance_154, small_suite


def test_value_examples():
    assert lagrangian_value(complete_r_graph(4, {2}), np.full(4, 0.25)) == pytest.approx(3 / 8, abs=1e-15)
    assert lagrangian_value(complete_r_graph(4, {2, 3}), np.full(4, 0.25)) == pytest.approx(10 / 64, abs=1e-15)
    G = complete_r_graph(5, {2, 3})
    assert lagrangian_value(G, np.eye(5)[2]) == 0.0
    assert lagrangian_value(Hypergraph(3, []), np.full(3, 1 / 3)) == 0.0


def test_value_rejects_points_off_the_simplex():
    G = complete_r_graph(3, {2})
    with pytest.raises(ValueError):
        lagrangian_value(G, np.array([0.5, 0.5, 0.5]))
    with pytest.raises(ValueError):
        lagrangian_value(G, np.array([1.2, -0.2, 0.0]))
    with pytest.raises(ValueError):
        lagrangian_value(G, np.array([0.5, 0.5]))


def test_value_relates_to_edge_rayleigh_forms():
    rng = np.random.default_rng(51)
    for G in small_suite(15, 7, 4, seed=51):
        x = rng.dirichlet(np.ones(G.n))
        want = sum(rayleigh_adjacency(Hypergraph(G.n, [e]), x, order=G.rank) / len(e) for e in G.edges)
        assert lagrangian_value(G, x) == pytest.approx(want, rel=1e-12)


def test_exact_value_on_a_rational_point():
    # L = 3 * (1/3)(2/9)(2/9) on the support {0, 1, 4, 5}
    x = np.array([1 / 3, 2 / 9, 0, 0, 2 / 9, 2 / 9])
    assert lagrangian_value(instance_154(), x) == pytest.approx(float(Fraction(4, 81)), rel=1e-14)


@pytest.mark.parametrize(
    "omega, R, k, expected",
    [(4, {2, 3}, 3, 10 / 64), (1, {2, 3}, 3, 0.0), (6, {2}, 2, 0.5 * (1 - 1 / 6)), (4, {2, 4}, 4, 7 / 256)],
)
def test_clique_support_value(omega, R, k, expected):
    assert clique_support_value(omega, R, k) == pytest.approx(expected, abs=1e-15)


def test_clique_support_value_rejects_low_order():
    with pytest.raises(ValueError):
        clique_support_value(4, {2, 4}, 3)


def test_gradient_matches_finite_differences():
    rng = np.random.default_rng(52)
    h = 1e-6
    for G in small_suite(10, 7, 4, seed=52):
        x = rng.uniform(0.1, 1.0, G.n)
        g = lagrangian_gradient(G, x)
        for i in range(G.n):
            xp, xm = x.copy(), x.copy()
            xp[i] += h
            xm[i] -= h
            # L is homogeneous of degree k, so it extends off the simplex by scaling
            f = lambda z: lagrangian_value(G, z / z.sum()) * z.sum() ** G.rank
            fd = (f(xp) - f(xm)) / (2 * h)
            assert abs(fd - g[i]) <= 1e-5 * abs(g[i]) + 1e-9


@settings(max_examples=200, deadline=None)
@given(st.lists(st.floats(-5, 5), min_size=1, max_size=12))
def test_projection_lands_on_the_simplex(v):
    x = project_to_simplex(v)
    assert np.all(x >= 0)
    assert abs(x.sum() - 1) <= 1e-12


def test_projection_is_closest_point():
    rng = np.random.default_rng(53)
    for _ in range(50):
        v = rng.normal(size=6)
        x = project_to_simplex(v)
        for _ in range(20):
            y = rng.dirichlet(np.ones(6))
            assert np.linalg.norm(v - x) <= np.linalg.norm(v - y) + 1e-12


def test_motzkin_straus_small():
    for G in small_suite(10, 8, 2, seed=54):
        omega = max_clique_exact(G).omega
        res = maximize_lagrangian(G)
        assert res.value == pytest.approx(0.5 * (1 - 1 / omega), abs=1e-4)


@pytest.mark.parametrize("R", [{2}, {3}, {2, 3}, {3, 4}])
def test_complete_graph_closed_form(R):
    n = 5
    G = complete_r_graph(n, R)
    res = maximize_lagrangian(G)
    assert res.value == pytest.approx(clique_support_value(n, R, G.rank), abs=1e-6)


def test_two_disjoint_cliques():
    G = disjoint_union(complete_r_graph(3, {2, 3}), complete_r_graph(3, {2, 3}))
    assert maximize_lagrangian(G).value == pytest.approx(clique_support_value(3, {2, 3}, 3), abs=1e-4)


def test_padded_graph_edge_beats_the_clique_value():
    # a 2-edge padded to order 4 carries 1/16 at (1/2, 1/2), above the uniform value 7/256
    G = complete_r_graph(4, {2, 4})
    x = np.array([0.5, 0.5, 0.0, 0.0])
    assert lagrangian_value(G, x) == pytest.approx(1 / 16, abs=1e-15)
    assert maximize_lagrangian(G).value >= 1 / 16 - 1e-12


def test_result_invariants():
    for G in small_suite(12, 8, 4, seed=55):
        res = maximize_lagrangian(G)
        x = res.argmax
        assert np.all(x >= -1e-14) and abs(x.sum() - 1) <= 1e-12
        assert res.value == pytest.approx(lagrangian_value(G, x), abs=1e-12)
        omega = max_clique_exact(G).omega
        assert res.value >= clique_support_value(omega, G.edge_types, G.rank) - 1e-9
        assert res.value >= lagrangian_value(G, np.full(G.n, 1 / G.n)) - 1e-12
        assert not res.certified_global


def test_zero_mass_vertex_can_be_deleted():
    rng = np.random.default_rng(56)
    for G in small_suite(10, 8, 4, seed=56):
        v = int(rng.integers(G.n))
        keep = [u for u in range(G.n) if u != v]
        if len(keep) == 0:
            continue
        H, _ = G.induced_subgraph(keep)
        x = rng.dirichlet(np.ones(G.n))
        x[v] = 0.0
        x /= x.sum()
        want = lagrangian_value(H, x[keep], order=G.rank)
        assert lagrangian_value(G, x) == pytest.approx(want, rel=1e-12, abs=1e-15)


def test_deterministic():
    G = small_suite(1, 8, 3, seed=57)[0]
    a = maximize_lagrangian(G, LagrangianOptions(seed=3))
    b = maximize_lagrangian(G, LagrangianOptions(seed=3))
    assert a.value == b.value and np.array_equal(a.argmax, b.argmax)


def test_empty_graph():
    res = maximize_lagrangian(Hypergraph(4, []))
    assert res.value == 0.0


def test_options_validation():
    with pytest.raises(ValueError):
        LagrangianOptions(tolerance=0)
    with pytest.raises(ValueError):
        LagrangianOptions(backtrack=1.0)
