"""Matrix-free arithmetic with the adjacency and signless Laplacian tensors.

For a hypergraph of rank ``k`` every edge ``e`` of size ``s`` fills the
entries of an order-``k`` symmetric tensor whose index support is exactly
``e`` with the value ``s / alpha(k, s)``. Nothing here ever stores that
tensor (except :func:`dense_tensor_oracle`). Everything is expressed through
the edge polynomial

    P_e(x) = sum over k_1 + ... + k_s = k, k_i >= 1 of
             k! / (k_1! ... k_s!) * x_{e_1}^{k_1} ... x_{e_s}^{k_s},

so that ``x^T (A(e) x^{k-1}) = (s / alpha) P_e(x)`` and, by symmetry,
``(A(e) x^{k-1})_i = (s / (k alpha)) dP_e/dx_i``.

``P_e`` is evaluated as ``k! [t^k] prod_j (exp(x_j t) - 1)``. Every term of
that truncated series product is nonnegative for nonnegative ``x``, so the
result keeps full relative precision at any order. The alternating
inclusion-exclusion sum is available as ``method="inclusion-exclusion"``
and the literal composition sum as ``method="compositions"`` (slow; used as
a test oracle).
"""

from __future__ import annotations

import functools
import itertools
import math

import numpy as np

from .hypergraph import Hypergraph, HypergraphError

__all__ = [
    "MAX_ORDER",
    "DEFAULT_ORACLE_CAP",
    "TensorDomainError",
    "OracleSizeError",
    "alpha",
    "alpha_by_compositions",
    "compositions",
    "edge_poly_value",
    "edge_poly_gradient",
    "adjacency_apply",
    "signless_apply",
    "rayleigh_adjacency",
    "rayleigh_signless",
    "dense_tensor_oracle",
    "oracle_apply",
    "oracle_rayleigh",
    "maclaurin_means",
    "maclaurin_chain",
]

MAX_ORDER = 20
DEFAULT_ORACLE_CAP = 10**7

_METHODS = ("egf", "inclusion-exclusion", "compositions")


class TensorDomainError(ValueError):
    """Tensor quantity requested where it is undefined (e.g. no edges)."""


class OracleSizeError(ValueError):
    """Dense tensor would exceed the configured entry cap."""


# -- alpha ------------------------------------------------------------------


def _check_order(k, s):
    if not isinstance(k, (int, np.integer)) or not isinstance(s, (int, np.integer)):
        raise TypeError("order and edge size must be integers")
    if k > MAX_ORDER:
        raise TensorDomainError(f"tensor order {k} exceeds supported maximum {MAX_ORDER}")
    if not 1 <= s <= k:
        raise TensorDomainError(f"edge size {s} must satisfy 1 <= s <= k = {k}")


@functools.lru_cache(maxsize=None)
def alpha(k: int, s: int) -> int:
    """Normalising constant alpha(s) for order ``k``, as an exact integer.

    Equal to the number of surjections from a k-set onto an s-set, computed
    as ``sum_j (-1)^j C(s, j) (s - j)^k``.
    """
    _check_order(k, s)
    return sum((-1) ** j * math.comb(s, j) * (s - j) ** k for j in range(s + 1))


def compositions(k: int, s: int):
    """Yield every composition of ``k`` into ``s`` positive parts."""
    for cuts in itertools.combinations(range(1, k), s - 1):
        bounds = (0,) + cuts + (k,)
        yield tuple(bounds[i + 1] - bounds[i] for i in range(s))


def _multinomial(parts):
    out = math.factorial(sum(parts))
    for p in parts:
        out //= math.factorial(p)
    return out


def alpha_by_compositions(k: int, s: int) -> int:
    """alpha(s) as the literal multinomial sum over compositions (oracle)."""
    _check_order(k, s)
    return sum(_multinomial(c) for c in compositions(k, s))


# -- per-edge kernels (vectorised over edges of one size) -------------------


@functools.lru_cache(maxsize=None)
def _egf_tables(k):
    d = np.arange(k + 1)
    inv_fact = np.array([1.0 / math.factorial(i) for i in range(k + 1)])
    # toeplitz gather: row i, column j -> coefficient j - i (or the zero slot)
    diff = d[None, :] - d[:, None]
    toe = np.where(diff >= 0, diff, k + 1)
    return d, inv_fact, toe, float(math.factorial(k))


def _series_mul(a, b, k):
    """Truncated product of power series batches ``a, b`` of shape (m, k+1)."""
    _, _, toe, _ = _egf_tables(k)
    b_pad = np.concatenate([b, np.zeros((b.shape[0], 1))], axis=1)
    return np.einsum("mi,mij->mj", a, b_pad[:, toe])


def _full_edge_terms(X, k, need_grad=True):
    """``s == k``: the single composition (1, ..., 1), so ``P = k! prod x``."""
    kfact = float(math.factorial(k))
    P = kfact * np.prod(X, axis=1)
    if not need_grad:
        return P, None
    m, s = X.shape
    ones = np.ones((m, 1))
    before = np.cumprod(np.hstack([ones, X[:, :-1]]), axis=1)
    after = np.cumprod(np.hstack([ones, X[:, :0:-1]]), axis=1)[:, ::-1]
    return P, kfact * before * after


def _egf_terms(X, k, need_grad=True):
    m, s = X.shape
    if s == k:
        return _full_edge_terms(X, k, need_grad)
    d, inv_fact, _, kfact = _egf_tables(k)
    pw = X[:, :, None] ** d  # (m, s, k+1), 0**0 == 1
    C = pw * inv_fact
    C[:, :, 0] = 0.0  # exp(x t) - 1
    one = np.zeros((m, k + 1))
    one[:, 0] = 1.0
    prefix = [one]
    for j in range(s):
        prefix.append(_series_mul(prefix[-1], C[:, j], k))
    P = kfact * prefix[s][:, k]
    if not need_grad:
        return P, None
    # d/dx (exp(x t) - 1) = t exp(x t): coefficient at t^r is x^(r-1)/(r-1)!
    D = np.zeros_like(C)
    D[:, :, 1:] = pw[:, :, :-1] * inv_fact[:-1]
    grad = np.empty((m, s))
    suffix = one
    for j in range(s - 1, -1, -1):
        loo = _series_mul(prefix[j], suffix, k)
        # [t^k] of D_j * loo
        grad[:, j] = kfact * np.einsum("mr,mr->m", D[:, j, :], loo[:, ::-1])
        suffix = _series_mul(C[:, j], suffix, k)
    return P, grad


@functools.lru_cache(maxsize=None)
def _subset_tables(s):
    masks = np.array(list(itertools.product((0, 1), repeat=s))[1:], dtype=float).T  # (s, 2^s-1)
    signs = (-1.0) ** (s - masks.sum(axis=0))
    return masks, signs


def _ie_terms(X, k, need_grad=True):
    masks, signs = _subset_tables(X.shape[1])
    S = X @ masks
    P = (S**k) @ signs
    if not need_grad:
        return P, None
    grad = k * ((S ** (k - 1)) * signs) @ masks.T
    return P, grad


def _composition_terms(X, k, need_grad=True):
    m, s = X.shape
    P = np.zeros(m)
    grad = np.zeros((m, s))
    for comp in compositions(k, s):
        coef = float(_multinomial(comp))
        ex = np.array(comp)
        P += coef * np.prod(X**ex, axis=1)
        if need_grad:
            for j in range(s):
                lowered = ex.copy()
                lowered[j] -= 1
                grad[:, j] += coef * ex[j] * np.prod(X**lowered, axis=1)
    return P, grad


_KERNELS = {
    "egf": _egf_terms,
    "inclusion-exclusion": _ie_terms,
    "compositions": _composition_terms,
}


def _kernel(method):
    try:
        return _KERNELS[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}; choose from {_METHODS}") from None


def _edge_block(edge, x, k):
    edge = tuple(int(v) for v in edge)
    x = np.asarray(x, dtype=float)
    if len(set(edge)) != len(edge):
        raise HypergraphError(f"edge {edge} repeats a vertex")
    _check_order(k, len(edge))
    return edge, x[list(edge)][None, :]


def edge_poly_value(edge, x, k: int, method: str = "egf") -> float:
    """Edge polynomial ``P_e(x)`` for edge vertex ids ``edge`` and order ``k``."""
    edge, X = _edge_block(edge, x, k)
    P, _ = _kernel(method)(X, k, need_grad=False)
    return float(P[0])


def edge_poly_gradient(edge, x, k: int, method: str = "egf") -> dict[int, float]:
    """Partial derivatives of ``P_e`` at ``x``, keyed by the vertices of ``edge``.

    Every other partial derivative is zero.
    """
    edge, X = _edge_block(edge, x, k)
    _, g = _kernel(method)(X, k)
    return {v: float(g[0, j]) for j, v in enumerate(edge)}


# -- whole-hypergraph operators ----------------------------------------------


class _EdgeGroups:
    """Edges bucketed by size in canonical order, ready for batched kernels."""

    def __init__(self, G: Hypergraph, k: int):
        if G.is_empty:
            raise TensorDomainError("hypergraph has no edges; its tensor is undefined")
        if k < G.rank:
            raise TensorDomainError(f"order {k} is below the rank {G.rank}")
        self.n = G.n
        self.k = k
        self.groups = []
        for s in sorted(G.edge_types):
            idx = np.array(sorted(e for e in G.edges if len(e) == s), dtype=np.intp)
            self.groups.append((s, idx, alpha(k, s)))
        self.degrees = np.asarray(G.degrees, dtype=float)

    def terms(self, x, method="egf", need_grad=True):
        kern = _kernel(method)
        for s, idx, a in self.groups:
            P, g = kern(x[idx], self.k, need_grad=need_grad)
            yield s, idx, a, P, g

    def scatter(self, x, weight, method="egf"):
        """``sum_e weight(s, alpha) * grad P_e`` as a dense n-vector."""
        y = np.zeros(self.n)
        for s, idx, a, _, g in self.terms(x, method):
            y += np.bincount(idx.ravel(), weights=(weight(s, a) * g).ravel(), minlength=self.n)
        return y

    def total(self, x, weight, method="egf"):
        """``sum_e weight(s, alpha) * P_e(x)``."""
        out = 0.0
        for s, _, a, P, _ in self.terms(x, method, need_grad=False):
            out += weight(s, a) * float(np.sum(P))
        return out


@functools.lru_cache(maxsize=512)
def _groups(G: Hypergraph, k: int) -> _EdgeGroups:
    return _EdgeGroups(G, k)


def _prepare(G, x, order):
    if G.is_empty:
        raise TensorDomainError("hypergraph has no edges; its tensor is undefined")
    k = G.rank if order is None else int(order)
    x = np.asarray(x, dtype=float)
    if x.shape != (G.n,):
        raise ValueError(f"vector has shape {x.shape}, expected ({G.n},)")
    return _groups(G, k), x, k


def adjacency_apply(G: Hypergraph, x, order: int | None = None, method: str = "egf") -> np.ndarray:
    """``A(G) x^{k-1}`` where ``k`` is the rank of ``G`` unless ``order`` is given.

    ``order`` lets a component be treated as part of a larger hypergraph
    whose rank fixes the tensor order.
    """
    grp, x, k = _prepare(G, x, order)
    return grp.scatter(x, lambda s, a: s / (k * a), method)


def signless_apply(G: Hypergraph, x, order: int | None = None, method: str = "egf") -> np.ndarray:
    """``Q(G) x^{k-1} = D(G) x^{k-1} + A(G) x^{k-1}``."""
    grp, x, k = _prepare(G, x, order)
    return grp.degrees * x ** (k - 1) + grp.scatter(x, lambda s, a: s / (k * a), method)


def rayleigh_adjacency(G: Hypergraph, x, order: int | None = None, method: str = "egf") -> float:
    """``x^T (A(G) x^{k-1}) = sum_e (s / alpha) P_e(x)``."""
    grp, x, _ = _prepare(G, x, order)
    return grp.total(x, lambda s, a: s / a, method)


def rayleigh_signless(G: Hypergraph, x, order: int | None = None, method: str = "egf") -> float:
    grp, x, k = _prepare(G, x, order)
    return float(grp.degrees @ x**k) + grp.total(x, lambda s, a: s / a, method)


# -- dense oracle -------------------------------------------------------------


def dense_tensor_oracle(G: Hypergraph, order: int | None = None, cap: int = DEFAULT_ORACLE_CAP) -> np.ndarray:
    """Materialise the full adjacency tensor as an ``(n,) * k`` array.

    Built by brute-force enumeration of index tuples, independently of the
    polynomial kernels above. Raises :class:`OracleSizeError` when ``n**k``
    exceeds ``cap``.
    """
    if G.is_empty:
        raise TensorDomainError("hypergraph has no edges; its tensor is undefined")
    k = G.rank if order is None else int(order)
    if k < G.rank:
        raise TensorDomainError(f"order {k} is below the rank {G.rank}")
    if G.n**k > cap:
        raise OracleSizeError(f"dense tensor needs {G.n}^{k} = {G.n ** k} entries, cap is {cap}")
    T = np.zeros((G.n,) * k)
    for e in G.edges:
        support = set(e)
        hits = [t for t in itertools.product(e, repeat=k) if set(t) == support]
        value = len(e) / len(hits)  # len(hits) == alpha(k, |e|)
        for t in hits:
            T[t] = value
    return T


def oracle_apply(T: np.ndarray, x) -> np.ndarray:
    """``T x^{k-1}`` by repeated contraction of the trailing index."""
    y = T
    x = np.asarray(x, dtype=float)
    for _ in range(T.ndim - 1):
        y = y @ x
    return y


def oracle_rayleigh(T: np.ndarray, x) -> float:
    return float(np.asarray(x, dtype=float) @ oracle_apply(T, x))


# -- Maclaurin means ------------------------------------------------------------


def maclaurin_means(x) -> list[float]:
    """Normalised elementary symmetric means ``S_1 .. S_m`` of positive ``x``."""
    x = np.asarray(x, dtype=float).ravel()
    if x.size == 0:
        raise ValueError("need at least one entry")
    if np.any(~(x > 0)):
        raise ValueError("Maclaurin means need strictly positive entries")
    m = x.size
    e = np.zeros(m + 1)
    e[0] = 1.0
    for xi in x:
        e[1:] = e[1:] + xi * e[:-1]
    return [float(e[j] / math.comb(m, j)) for j in range(1, m + 1)]


def maclaurin_chain(x, rtol: float = 1e-12) -> tuple[bool, bool]:
    """Check ``S_1 >= S_2^(1/2) >= ... >= S_m^(1/m)``.

    Returns ``(holds, equality)`` where ``equality`` means every link of the
    chain is tight within ``rtol``.
    """
    roots = np.array([S ** (1.0 / j) for j, S in enumerate(maclaurin_means(x), start=1)])
    gaps = roots[:-1] - roots[1:]
    scale = roots[0]
    holds = bool(np.all(gaps >= -rtol * scale))
    equality = bool(np.all(np.abs(gaps) <= rtol * scale))
    return holds, equality
