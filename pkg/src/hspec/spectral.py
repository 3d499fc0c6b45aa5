"""Perron eigenpairs of the adjacency and signless Laplacian tensors.

Each connected component is handled on its own so that the operator is
weakly irreducible there. On a component the shifted power iteration

    x <- normalise_k( (T x^{k-1} + shift * x^{[k-1]})^{[1/(k-1)]} )

converges to the positive Perron vector. At every step the
Collatz-Wielandt ratios ``(T x^{k-1})_i / x_i^{k-1}`` bracket the spectral
radius; iteration stops when the bracket is narrower than the tolerance.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .hypergraph import Hypergraph, connected_components
from .tensor import (
    DEFAULT_ORACLE_CAP,
    adjacency_apply,
    dense_tensor_oracle,
    oracle_apply,
    signless_apply,
)

__all__ = [
    "IterationOptions",
    "SpectralResult",
    "ConvergenceError",
    "perron_iteration",
    "spectral_radius",
    "signless_spectral_radius",
    "principal_entry_sum",
    "oracle_spectral_radius",
    "oracle_signless_spectral_radius",
]

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class IterationOptions:
    """Knobs for :func:`perron_iteration`.

    ``shift`` is the multiple of the identity tensor added to the operator.
    If the bracket has not halved within ``stall_window`` iterations the
    iteration restarts from a seeded random positive vector, at most
    ``restarts`` times.
    """

    tolerance: float = 1e-10
    max_iterations: int = 100_000
    shift: float = 1.0
    seed: int = 0
    stall_window: int = 5_000
    restarts: int = 2
    history: bool = False

    def __post_init__(self):
        if not self.tolerance > 0:
            raise ValueError(f"tolerance must be positive, got {self.tolerance}")
        if self.max_iterations < 1:
            raise ValueError(f"max_iterations must be >= 1, got {self.max_iterations}")
        if not self.shift > 0:
            raise ValueError(f"shift must be positive, got {self.shift}")


@dataclass(frozen=True)
class SpectralResult:
    value: float
    vector: np.ndarray
    iterations: int
    residual: float
    converged: bool
    lower: float
    upper: float
    order: int | None = None
    component: tuple[int, ...] = ()
    history: tuple[tuple[float, float], ...] | None = field(default=None, repr=False)

    @property
    def entry_sum(self) -> float:
        """Sum of the eigenvector entries (under the k-norm normalisation)."""
        return float(np.sum(self.vector))

    @property
    def bracket_width(self) -> float:
        return self.upper - self.lower


class ConvergenceError(RuntimeError):
    """Power iteration ran out of iterations; ``result`` holds the last bracket."""

    def __init__(self, result: SpectralResult):
        self.result = result
        super().__init__(
            f"no convergence after {result.iterations} iterations: "
            f"eigenvalue in [{result.lower:.12g}, {result.upper:.12g}]"
        )


def _knorm(x, k):
    return float(np.sum(x**k)) ** (1.0 / k)


def perron_iteration(
    apply: Callable[[np.ndarray], np.ndarray],
    n: int,
    k: int,
    opts: IterationOptions | None = None,
    start: np.ndarray | None = None,
) -> SpectralResult:
    """Shifted power iteration for one weakly irreducible nonnegative operator.

    ``apply(x)`` must return ``T x^{k-1}``. Returns an unconverged result
    (``converged=False``) instead of raising; callers decide.
    """
    opts = opts or IterationOptions()
    rng = np.random.default_rng(opts.seed)
    x = np.ones(n) if start is None else np.array(start, dtype=float)
    x /= _knorm(x, k)
    restarts_left = opts.restarts
    best_width = np.inf
    checkpoint = 0
    hist = [] if opts.history else None
    lo = hi = value = np.nan
    y = None
    it = 0
    while True:
        y = apply(x)
        xk1 = x ** (k - 1)
        ratios = y / xk1
        lo, hi = float(ratios.min()), float(ratios.max())
        value = min(max(float(x @ y), lo), hi)
        if hist is not None:
            hist.append((lo, hi))
        width = hi - lo
        if width <= opts.tolerance or it >= opts.max_iterations:
            break
        if width < 0.5 * best_width:
            best_width = width
            checkpoint = it
        elif it - checkpoint >= opts.stall_window and restarts_left > 0:
            restarts_left -= 1
            log.debug("bracket stalled at width %.3g; restarting", width)
            x = 0.5 + rng.random(n)
            x /= _knorm(x, k)
            best_width = np.inf
            checkpoint = it
            it += 1
            continue
        z = (y + opts.shift * xk1) ** (1.0 / (k - 1))
        x = z / _knorm(z, k)
        it += 1
    residual = float(np.max(np.abs(y - value * x ** (k - 1))))
    return SpectralResult(
        value=value,
        vector=x,
        iterations=it,
        residual=residual,
        converged=bool(hi - lo <= opts.tolerance),
        lower=lo,
        upper=hi,
        order=k,
        history=tuple(hist) if hist is not None else None,
    )


def _by_components(G: Hypergraph, make_apply, opts):
    opts = opts or IterationOptions()
    if G.is_empty:
        e0 = np.zeros(G.n)
        e0[0] = 1.0
        return SpectralResult(0.0, e0, 0, 0.0, True, 0.0, 0.0, None, (0,))
    k = G.rank
    best = None
    total_iter = 0
    all_converged = True
    for comp in connected_components(G):
        if len(comp) == 1:
            continue
        H, _ = G.induced_subgraph(comp)
        res = perron_iteration(make_apply(H, k), H.n, k, opts)
        total_iter += res.iterations
        all_converged &= res.converged
        if best is None or res.value > best[0].value + opts.tolerance:
            best = (res, comp)
    res, comp = best
    vec = np.zeros(G.n)
    vec[comp] = res.vector
    out = SpectralResult(
        value=res.value,
        vector=vec,
        iterations=total_iter,
        residual=res.residual,
        converged=all_converged,
        lower=res.lower,
        upper=res.upper,
        order=k,
        component=tuple(comp),
        history=res.history,
    )
    if not all_converged:
        raise ConvergenceError(out)
    return out


def spectral_radius(G: Hypergraph, opts: IterationOptions | None = None) -> SpectralResult:
    """Spectral radius rho(G) of the adjacency tensor with its Perron vector.

    The vector is the dominant component's Perron vector scaled so that
    ``sum x_i^k = 1``, zero elsewhere. On ties the lowest-indexed component
    wins. An edgeless graph gets ``rho = 0``.

    Raises
    ------
    ConvergenceError
        If any component fails to converge within ``max_iterations``.
    """
    return _by_components(G, lambda H, k: lambda x: adjacency_apply(H, x, order=k), opts)


def signless_spectral_radius(G: Hypergraph, opts: IterationOptions | None = None) -> SpectralResult:
    """Signless Laplacian spectral radius q(G); same conventions as :func:`spectral_radius`."""
    return _by_components(G, lambda H, k: lambda x: signless_apply(H, x, order=k), opts)


def principal_entry_sum(result: SpectralResult) -> float:
    """U, the entry sum of the principal eigenvector."""
    if not result.converged:
        raise ValueError("principal entry sum needs a converged result")
    return result.entry_sum


def _oracle_adjacency(cap):
    def make(H, k):
        T = dense_tensor_oracle(H, order=k, cap=cap)
        return lambda x: oracle_apply(T, x)

    return make


def _oracle_signless(cap):
    def make(H, k):
        T = dense_tensor_oracle(H, order=k, cap=cap)
        d = np.asarray(H.degrees, dtype=float)
        return lambda x: d * x ** (k - 1) + oracle_apply(T, x)

    return make


def oracle_spectral_radius(G: Hypergraph, opts=None, cap: int = DEFAULT_ORACLE_CAP) -> SpectralResult:
    """rho(G) computed by iterating on the materialised dense tensor."""
    return _by_components(G, _oracle_adjacency(cap), opts)


def oracle_signless_spectral_radius(G: Hypergraph, opts=None, cap: int = DEFAULT_ORACLE_CAP) -> SpectralResult:
    return _by_components(G, _oracle_signless(cap), opts)
