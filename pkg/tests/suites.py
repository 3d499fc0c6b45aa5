"""Seeded instance families shared by the property and acceptance tests."""

import itertools

import numpy as np

from hspec import Hypergraph, random_r_graph

TYPE_SETS = [s for r in (1, 2, 3) for s in itertools.combinations((2, 3, 4), r)]
P_CHOICES = (0.2, 0.5, 0.8)


def bound_suite_instance(i):
    """Instance ``i`` of the 200-graph bound suite (n <= 9, R within {2,3,4})."""
    rng = np.random.default_rng(1000 + i)
    R = TYPE_SETS[rng.integers(len(TYPE_SETS))]
    n = int(rng.integers(max(R), 10))
    p = P_CHOICES[rng.integers(len(P_CHOICES))]
    return random_r_graph(n, R, p, seed=i)


def bound_suite(count=200):
    return [bound_suite_instance(i) for i in range(count)]


def small_suite(count, n_max, k_max, seed, min_edges=1):
    """Random R-graphs with n <= n_max and rank <= k_max, at least ``min_edges`` edges."""
    rng = np.random.default_rng(seed)
    types = [s for s in TYPE_SETS if max(s) <= k_max]
    out = []
    while len(out) < count:
        R = types[rng.integers(len(types))]
        n = int(rng.integers(max(R), n_max + 1))
        p = float(rng.uniform(0.2, 0.9))
        G = random_r_graph(n, R, p, seed=int(rng.integers(2**31)))
        if G.num_edges >= min_edges:
            out.append(G)
    return out


def brute_force_omega(G):
    """Clique number by checking all vertex subsets, largest first."""
    if G.is_empty:
        return 1
    edges = G.edge_set
    R = sorted(G.edge_types)
    for size in range(G.n, 0, -1):
        for S in itertools.combinations(range(G.n), size):
            if all(t in edges for s in R if s <= size for t in itertools.combinations(S, s)):
                return size
    return 1


def instance_154():
    return Hypergraph(
        6,
        [(0, 1, 4), (0, 1, 5), (0, 2, 4), (0, 4, 5), (1, 2, 3), (1, 3, 4), (1, 3, 5), (2, 3, 5)],
    )
