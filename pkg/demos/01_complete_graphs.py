"""Spectral radii of complete R-graphs.

A complete R-graph on n vertices contains every s-subset for each s in R.
Its adjacency spectral radius is the common degree sum_s C(n-1, s-1), and
the signless Laplacian radius is twice that. This script checks both
numbers for a few mixed edge-type sets and prints the Perron vector,
which is uniform.
"""

import math

import numpy as np

from hspec import complete_r_graph, signless_spectral_radius, spectral_radius

print(f"{'n':>3} {'R':<10} {'rho':>12} {'expected':>9} {'q':>12} {'U':>10}")
for n, R in [(4, {2}), (5, {2}), (4, {2, 3}), (6, {2, 3}), (6, {2, 4}), (7, {2, 3, 4})]:
    G = complete_r_graph(n, R)
    rho = spectral_radius(G)
    q = signless_spectral_radius(G)
    want = sum(math.comb(n - 1, s - 1) for s in R)
    print(f"{n:>3} {str(sorted(R)):<10} {rho.value:12.9f} {want:9d} {q.value:12.9f} {rho.entry_sum:10.6f}")

# the Perron vector is n^(-1/k) in every coordinate, so U = n^((k-1)/k)
G = complete_r_graph(6, {2, 3})
r = spectral_radius(G)
print("\nPerron vector of the complete {2,3}-graph on 6 vertices:")
print(np.round(r.vector, 9))
print("n^(-1/k) =", 6 ** (-1 / 3))
print(f"converged in {r.iterations} iterations, bracket [{r.lower:.12f}, {r.upper:.12f}]")
