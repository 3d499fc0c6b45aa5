"""Implicit tensor products against the dense tensor.

The library never builds the order-k adjacency tensor; it works edge by
edge through a polynomial whose gradient gives the tensor-vector product.
For small graphs we can afford the dense array, so here both routes are
compared on random positive vectors.
"""

import numpy as np

from hspec import Hypergraph, adjacency_apply, dense_tensor_oracle, rayleigh_adjacency
from hspec.spectral import oracle_spectral_radius, spectral_radius
from hspec.tensor import alpha, oracle_apply, oracle_rayleigh

G = Hypergraph(5, [(0, 1), (1, 2, 3), (0, 2, 3, 4), (3, 4)])
k = G.rank
print(G, "rank", k, "corank", G.corank)

T = dense_tensor_oracle(G)
print(f"dense tensor shape {T.shape}, {np.count_nonzero(T)} nonzero entries")
for e in G.edges:
    # each s-edge fills alpha(k, s) positions with s / alpha(k, s)
    print(f"  edge {e}: alpha({k},{len(e)}) = {alpha(k, len(e))}, entry {len(e) / alpha(k, len(e)):.6f}")

rng = np.random.default_rng(0)
worst = 0.0
for _ in range(20):
    x = rng.uniform(0.1, 1.0, G.n)
    worst = max(worst, np.max(np.abs(adjacency_apply(G, x) - oracle_apply(T, x))))
    worst = max(worst, abs(rayleigh_adjacency(G, x) - oracle_rayleigh(T, x)))
print(f"max deviation over 20 vectors: {worst:.2e}")

a, b = spectral_radius(G), oracle_spectral_radius(G)
print(f"rho implicit {a.value:.15f}")
print(f"rho dense    {b.value:.15f}")

# row sums of the tensor are the degrees
print("A 1^(k-1) =", adjacency_apply(G, np.ones(G.n)), " degrees =", G.degrees)
