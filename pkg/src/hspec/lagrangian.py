"""The Lagrangian of a general hypergraph on the standard simplex.

    L(G, x) = sum_e P_e(x) / alpha(|e|),   x >= 0, sum x = 1,

with ``P_e`` the edge polynomial from :mod:`hspec.tensor`. For graphs this
is the Motzkin-Straus form ``sum_{ij in E} x_i x_j``.

:func:`maximize_lagrangian` is a local method (projected gradient ascent
with restarts). Its value is a certified lower bound on L(G) but not a
certificate of the global maximum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import numpy as np

from .clique import greedy_maximal_cliques, max_clique_exact
from .hypergraph import Hypergraph
from .tensor import _groups

__all__ = [
    "LagrangianOptions",
    "LagrangianResult",
    "lagrangian_value",
    "lagrangian_gradient",
    "clique_support_value",
    "project_to_simplex",
    "maximize_lagrangian",
]


def project_to_simplex(v) -> np.ndarray:
    """Euclidean projection of ``v`` onto ``{x >= 0, sum x = 1}`` (sort based)."""
    v = np.asarray(v, dtype=float)
    u = np.sort(v)[::-1]
    css = np.cumsum(u) - 1.0
    ind = np.arange(1, v.size + 1)
    rho = np.nonzero(u - css / ind > 0)[0][-1]
    theta = css[rho] / (rho + 1)
    x = np.maximum(v - theta, 0.0)
    # one renormalisation pass keeps |sum - 1| at rounding level
    return x / x.sum()


def _check_simplex(x, n, atol):
    x = np.asarray(x, dtype=float)
    if x.shape != (n,):
        raise ValueError(f"vector has shape {x.shape}, expected ({n},)")
    if np.any(x < -atol) or abs(x.sum() - 1.0) > atol:
        raise ValueError("vector is not on the standard simplex")
    return x


def _value_grad(G, x, k, need_grad=True):
    grp = _groups(G, k)
    val = 0.0
    grad = np.zeros(G.n) if need_grad else None
    for _, idx, a, P, g in grp.terms(x, need_grad=need_grad):
        val += float(np.sum(P)) / a
        if need_grad:
            grad += np.bincount(idx.ravel(), weights=(g / a).ravel(), minlength=G.n)
    return val, grad


def lagrangian_value(G: Hypergraph, x, order: int | None = None, atol: float = 1e-10) -> float:
    """L(G, x) for ``x`` on the simplex (checked to ``atol``); 0 for an edgeless graph."""
    x = _check_simplex(x, G.n, atol)
    if G.is_empty:
        return 0.0
    k = G.rank if order is None else order
    return _value_grad(G, x, k, need_grad=False)[0]


def lagrangian_gradient(G: Hypergraph, x, order: int | None = None) -> np.ndarray:
    """Gradient of L(G, .) at any real ``x`` (no simplex check)."""
    x = np.asarray(x, dtype=float)
    if G.is_empty:
        return np.zeros(G.n)
    k = G.rank if order is None else order
    return _value_grad(G, x, k)[1]


def clique_support_value(omega: int, R: Iterable[int], k: int) -> float:
    """``sum_{s in R} C(omega, s) / omega^k``: L(G, x) with x uniform on an omega-clique."""
    R = sorted(set(R))
    if omega < 1:
        raise ValueError(f"omega must be >= 1, got {omega}")
    if R and k < R[-1]:
        raise ValueError(f"order {k} is below max(R) = {R[-1]}")
    total = sum(Fraction(math.comb(omega, s), omega**k) for s in R)
    return float(total)


@dataclass(frozen=True)
class LagrangianOptions:
    """Restart and step settings for :func:`maximize_lagrangian`."""

    restarts: int = 8
    clique_starts: int = 4
    tolerance: float = 1e-10
    max_iterations: int = 5_000
    seed: int = 0
    backtrack: float = 0.5
    sufficient_increase: float = 1e-4
    node_cap: int = 10**7
    stall_window: int = 50

    def __post_init__(self):
        if self.restarts < 0 or self.clique_starts < 0:
            raise ValueError("restart counts must be nonnegative")
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")
        if not 0 < self.backtrack < 1:
            raise ValueError("backtrack factor must lie in (0, 1)")


@dataclass(frozen=True)
class LagrangianResult:
    value: float
    argmax: np.ndarray
    starts: int
    kkt_residual: float
    iterations: int
    converged: bool
    # never True: the optimiser is local
    certified_global: bool = False


def _kkt_residual(x, g, support_tol=1e-9):
    mu = float(x @ g)
    on = x > support_tol
    r_on = np.max(np.abs(g[on] - mu)) if np.any(on) else 0.0
    r_off = np.max(np.maximum(g[~on] - mu, 0.0)) if np.any(~on) else 0.0
    return float(max(r_on, r_off))


def _ascend(G, k, x, opts):
    """Projected gradient ascent with Armijo backtracking from ``x``."""
    f, g = _value_grad(G, x, k)
    step = 1.0
    converged = False
    it = 0
    recent = [f]
    for it in range(1, opts.max_iterations + 1):
        if np.max(np.abs(project_to_simplex(x + g) - x)) <= opts.tolerance:
            converged = True
            break
        # stagnation: no visible gain over the last stall_window accepted steps
        if len(recent) > opts.stall_window:
            if f - recent[-opts.stall_window - 1] <= 1e-15 * max(1.0, abs(f)):
                break
        step = min(2.0 * step, 1e6)
        while True:
            xn = project_to_simplex(x + step * g)
            fn, gn = _value_grad(G, xn, k)
            if fn >= f + opts.sufficient_increase * float(g @ (xn - x)):
                break
            step *= opts.backtrack
            if step < 1e-16:
                return x, f, g, it, True
        if fn <= f and np.array_equal(xn, x):
            converged = True
            break
        x, f, g = xn, fn, gn
        recent.append(f)
    return x, f, g, it, converged


def maximize_lagrangian(
    G: Hypergraph,
    opts: LagrangianOptions | None = None,
    clique: Iterable[int] | None = None,
    order: int | None = None,
) -> LagrangianResult:
    """Best local maximum of L(G, .) over several starts.

    Starts are the uniform vector, uniform vectors on up to
    ``opts.clique_starts`` maximal cliques (a maximum clique first; pass
    ``clique`` to skip the exact search) and ``opts.restarts`` seeded
    Dirichlet(1) draws. Ties between starts go to the lexicographically
    smaller argmax.
    """
    opts = opts or LagrangianOptions()
    n = G.n
    if G.is_empty:
        x = np.full(n, 1.0 / n)
        return LagrangianResult(0.0, x, 0, 0.0, 0, True)
    k = G.rank if order is None else order
    starts = [np.full(n, 1.0 / n)]
    if opts.clique_starts:
        if clique is None:
            clique = max_clique_exact(G, node_cap=opts.node_cap).vertices
        for c in greedy_maximal_cliques(G, limit=opts.clique_starts, first=clique):
            x = np.zeros(n)
            x[list(c)] = 1.0 / len(c)
            starts.append(x)
    rng = np.random.default_rng(opts.seed)
    starts.extend(rng.dirichlet(np.ones(n)) for _ in range(opts.restarts))

    best = None
    total_it = 0
    all_conv = True
    for x0 in starts:
        x, f, g, it, conv = _ascend(G, k, x0, opts)
        total_it += it
        all_conv &= conv
        key = (-f, tuple(x))
        if best is None or key < best[0]:
            best = (key, x, g)
    _, x, g = best
    value = lagrangian_value(G, x, order=k)
    return LagrangianResult(value, x, len(starts), _kkt_residual(x, g), total_it, all_conv)
