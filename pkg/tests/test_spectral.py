import numpy as np
import pytest

from hspec import Hypergraph, complete_r_graph, connected_components, disjoint_union
from hspec.spectral import (
    ConvergenceError,
    IterationOptions,
    oracle_signless_spectral_radius,
    oracle_spectral_radius,
    perron_iteration,
    principal_entry_sum,
    signless_spectral_radius,
    spectral_radius,
)
from hspec.tensor import adjacency_apply, dense_tensor_oracle, oracle_apply
from suites import small_suite


def cycle(n):
    return Hypergraph(n, [(i, (i + 1) % n) for i in range(n)])


@pytest.mark.parametrize("n, R, rho, q", [(5, {2}, 4.0, 8.0), (4, {2, 3}, 6.0, 12.0), (6, {3}, 10.0, 20.0)])
def test_complete_graph_values(n, R, rho, q):
    G = complete_r_graph(n, R)
    r = spectral_radius(G)
    assert r.value == pytest.approx(rho, abs=1e-8)
    assert signless_spectral_radius(G).value == pytest.approx(q, abs=1e-8)
    k = G.rank
    np.testing.assert_allclose(r.vector, n ** (-1.0 / k), atol=1e-9)
    assert principal_entry_sum(r) == pytest.approx(n ** ((k - 1) / k), abs=1e-9)


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_single_uniform_edge(k):
    assert spectral_radius(Hypergraph(k, [tuple(range(k))])).value == pytest.approx(1.0, abs=1e-8)


def test_k2_entry_sum():
    r = spectral_radius(Hypergraph(2, [(0, 1)]))
    assert r.entry_sum == pytest.approx(np.sqrt(2), abs=1e-12)


def test_cycle():
    assert spectral_radius(cycle(5)).value == pytest.approx(2.0, abs=1e-8)
    assert signless_spectral_radius(cycle(5)).value == pytest.approx(4.0, abs=1e-8)


def test_regular_graph_signless():
    # the 3-cube is 3-regular
    cube = Hypergraph(8, [(a, a ^ (1 << b)) for a in range(8) for b in range(3) if a < a ^ (1 << b)])
    assert signless_spectral_radius(cube).value == pytest.approx(6.0, abs=1e-8)
    assert oracle_signless_spectral_radius(cube).value == pytest.approx(6.0, abs=1e-8)


def test_empty_graph():
    r = spectral_radius(Hypergraph(3, []))
    assert r.value == 0.0 and r.converged
    assert signless_spectral_radius(Hypergraph(3, [])).value == 0.0


def test_disconnected_takes_largest_component():
    G = disjoint_union(complete_r_graph(3, {2}), complete_r_graph(5, {2}))
    r = spectral_radius(G)
    assert r.value == pytest.approx(4.0, abs=1e-8)
    assert np.all(r.vector[:3] == 0) and np.all(r.vector[3:] > 0)
    assert r.component == (3, 4, 5, 6, 7)


def test_tie_goes_to_first_component():
    G = disjoint_union(complete_r_graph(3, {2}), complete_r_graph(3, {2}))
    r = spectral_radius(G)
    assert r.component == (0, 1, 2)


def test_result_invariants():
    opts = IterationOptions(tolerance=1e-10)
    for G in small_suite(25, 8, 4, seed=31):
        r = spectral_radius(G, opts)
        k = G.rank
        assert r.converged
        assert r.lower <= r.value <= r.upper
        assert r.bracket_width <= 1e-10
        assert abs(np.sum(r.vector**k) - 1.0) <= 1e-12
        assert r.residual <= 10 * opts.tolerance


def test_row_sum_brackets_on_connected_graphs():
    for G in small_suite(40, 8, 4, seed=32):
        if len(connected_components(G)) != 1:
            continue
        d = np.asarray(G.degrees, dtype=float)
        rho = spectral_radius(G).value
        q = signless_spectral_radius(G).value
        assert d.min() - 1e-9 <= rho <= d.max() + 1e-9
        assert 2 * d.min() - 1e-9 <= q <= 2 * d.max() + 1e-9


def test_relabelling_invariance():
    rng = np.random.default_rng(33)
    for G in small_suite(15, 8, 4, seed=33):
        perm = rng.permutation(G.n)
        H = Hypergraph(G.n, [tuple(int(perm[v]) for v in e) for e in G.edges])
        assert abs(spectral_radius(G).value - spectral_radius(H).value) <= 1e-9
        assert abs(signless_spectral_radius(G).value - signless_spectral_radius(H).value) <= 1e-9


def test_oracle_agreement():
    for G in small_suite(20, 5, 3, seed=34):
        assert abs(spectral_radius(G).value - oracle_spectral_radius(G).value) <= 1e-9
        assert abs(signless_spectral_radius(G).value - oracle_signless_spectral_radius(G).value) <= 1e-9


def test_raised_order_single_edge_matches_oracle():
    G = Hypergraph(2, [(0, 1)])
    T = dense_tensor_oracle(G, order=3)
    a = perron_iteration(lambda x: adjacency_apply(G, x, order=3), 2, 3)
    b = perron_iteration(lambda x: oracle_apply(T, x), 2, 3)
    assert a.converged and b.converged
    assert abs(a.value - b.value) <= 1e-9
    # at x0 = x1 the apply gives (A x^2)_i = x_i^2, so the eigenvalue is 1
    assert a.value == pytest.approx(1.0, abs=1e-9)


def test_shift_correction_on_complete_graph():
    # with shift 5 the shifted operator's eigenvalue is n - 1 + 5; the report subtracts it
    opts = IterationOptions(shift=5.0)
    assert spectral_radius(complete_r_graph(6, {2}), opts).value == pytest.approx(5.0, abs=1e-9)


def test_nonconvergence_reports_bracket():
    G = Hypergraph(5, [(0, 1), (1, 2), (2, 3, 4), (0, 3)])
    with pytest.raises(ConvergenceError) as info:
        spectral_radius(G, IterationOptions(max_iterations=3))
    r = info.value.result
    assert not r.converged
    assert r.lower < r.upper
    assert "no convergence" in str(info.value)


def test_principal_entry_sum_needs_convergence():
    G = Hypergraph(5, [(0, 1), (1, 2), (2, 3, 4), (0, 3)])
    r = perron_iteration(lambda x: adjacency_apply(G, x), 5, 3, IterationOptions(max_iterations=2))
    with pytest.raises(ValueError):
        principal_entry_sum(r)


def test_iteration_options_validation():
    with pytest.raises(ValueError):
        IterationOptions(tolerance=0.0)
    with pytest.raises(ValueError):
        IterationOptions(max_iterations=0)


def test_history_records_nested_brackets():
    r = spectral_radius(Hypergraph(5, [(0, 1), (1, 2), (2, 3, 4), (0, 3)]), IterationOptions(history=True))
    lo = [h[0] for h in r.history]
    hi = [h[1] for h in r.history]
    assert all(l <= r.value + 1e-12 for l in lo)
    assert all(h >= r.value - 1e-12 for h in hi)
