"""Two places where the closed-form Lagrangian fails.

1. A complete {2,4}-graph. The order is 4, so each 2-edge enters the
   Lagrangian as ((x_i + x_j)^4 - x_i^4 - x_j^4) / alpha(4, 2) with
   alpha(4, 2) = 14. Putting all mass on one pair gives 1/16, well above
   the value at the uniform vector, (C(n,2) + C(n,4)) / n^4.

2. A 3-uniform graph on six vertices with omega = 3 and two nonadjacent
   vertices of equal edge-type multiset. The clique value is 1/27, but a
   point supported on four vertices gives 4/81. The same graph breaks the
   eigenvector-sum upper bound on rho.

Lagrangian values are rechecked in exact rational arithmetic, independent
of the optimizer and of the floating-point kernels.
"""

import math
from fractions import Fraction

from hspec import Hypergraph, check_all, complete_r_graph, max_clique_exact, maximize_lagrangian
from hspec.bounds import closed_form_condition
from hspec.lagrangian import clique_support_value
from hspec.spectral import oracle_spectral_radius, spectral_radius
from hspec.tensor import alpha, compositions


def multinomial(parts):
    out, rest = 1, sum(parts)
    for p in parts:
        out *= math.comb(rest, p)
        rest -= p
    return out


def exact_lagrangian(G, x, k):
    """L(G, x) over the rationals, summing compositions edge by edge."""
    total = Fraction(0)
    for e in G.edges:
        poly = Fraction(0)
        for parts in compositions(k, len(e)):
            term = Fraction(multinomial(parts))
            for v, p in zip(e, parts):
                term *= x[v] ** p
            poly += term
        total += poly / alpha(k, len(e))
    return total


print("-- complete {2,4}-graphs --")
for n in (4, 5, 6):
    G = complete_r_graph(n, {2, 4})
    pair = [Fraction(1, 2), Fraction(1, 2)] + [Fraction(0)] * (n - 2)
    uniform = [Fraction(1, n)] * n
    print(
        f"n={n}: L(pair) = {exact_lagrangian(G, pair, 4)}, "
        f"L(uniform) = {exact_lagrangian(G, uniform, 4)}, "
        f"optimizer {maximize_lagrangian(G).value:.6f}"
    )

print("\n-- a 3-graph with a nonadjacent equal-type pair --")
G = Hypergraph(6, [(0, 1, 4), (0, 1, 5), (0, 2, 4), (0, 4, 5), (1, 2, 3), (1, 3, 4), (1, 3, 5), (2, 3, 5)])
omega = max_clique_exact(G).omega
print("omega =", omega, " condition:", closed_form_condition(G))
x = [Fraction(1, 3), Fraction(2, 9), Fraction(0), Fraction(0), Fraction(2, 9), Fraction(2, 9)]
print(f"clique value {Fraction(1, 27)}, L at {[str(v) for v in x]} = {exact_lagrangian(G, x, 3)}")
print(f"clique_support_value = {clique_support_value(omega, {3}, 3):.6f}")

rho = spectral_radius(G)
print(f"\nrho implicit {rho.value:.12f}, dense {oracle_spectral_radius(G).value:.12f}, U = {rho.entry_sum:.6f}")
rep = check_all(G)
for r in rep.records:
    print(f"  {r.name:<12} bound {r.bound:9.6f} measured {r.measured:9.6f} slack {r.slack:+.4f} holds {r.holds!s:<5} {r.status}")
