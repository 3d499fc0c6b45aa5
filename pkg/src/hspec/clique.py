"""Cliques of R-graphs.

A vertex set ``S`` is a clique when, for every edge type ``s`` of the graph
with ``s <= |S|``, every ``s``-subset of ``S`` is an edge. Sets smaller than
the smallest edge type are therefore cliques vacuously. Being a clique is
hereditary, which is what the branch-and-bound search relies on.

An edgeless graph has clique number 1 by convention.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .hypergraph import Hypergraph, HypergraphError

__all__ = [
    "CliqueResult",
    "DEFAULT_NODE_CAP",
    "is_clique",
    "greedy_clique",
    "max_clique_exact",
    "greedy_maximal_cliques",
]

DEFAULT_NODE_CAP = 10**7


@dataclass(frozen=True)
class CliqueResult:
    vertices: tuple[int, ...]
    nodes_explored: int
    optimal: bool

    @property
    def omega(self) -> int:
        return len(self.vertices)


def is_clique(G: Hypergraph, S: Iterable[int]) -> bool:
    S = sorted(set(int(v) for v in S))
    for v in S:
        if not 0 <= v < G.n:
            raise HypergraphError(f"vertex {v} outside [0, {G.n})")
    edges = G.edge_set
    for s in G.edge_types:
        if s > len(S):
            continue
        if not all(c in edges for c in itertools.combinations(S, s)):
            return False
    return True


def _extends(G, S, v):
    """Whether ``S + [v]`` is a clique, given that ``S`` (sorted) already is."""
    edges = G.edge_set
    size = len(S) + 1
    for s in G.edge_types:
        if s > size:
            continue
        for rest in itertools.combinations(S, s - 1):
            if tuple(sorted(rest + (v,))) not in edges:
                return False
    return True


def greedy_clique(G: Hypergraph, start: int | None = None) -> CliqueResult:
    """Grow a clique by scanning vertices in decreasing degree order.

    With ``start`` given, that vertex is placed first. Ties in degree go to
    the smaller vertex id.
    """
    if G.is_empty:
        return CliqueResult((0 if start is None else start,), 0, False)
    order = sorted(range(G.n), key=lambda v: (-G.degrees[v], v))
    if start is not None:
        order.remove(start)
        order.insert(0, start)
    S: list[int] = []
    for v in order:
        if _extends(G, sorted(S), v):
            S.append(v)
    return CliqueResult(tuple(sorted(S)), len(order), False)


def _compatibility(G):
    """Bitmask adjacency: u, v can share a clique of size >= corank(G)."""
    c = G.corank
    masks = [0] * G.n
    for e in G.edges:
        if len(e) != c:
            continue
        for u, v in itertools.combinations(e, 2):
            masks[u] |= 1 << v
            masks[v] |= 1 << u
    return masks


def _colour_bound(cands, compat):
    """Greedy colouring size of the compatibility graph on ``cands`` (a bitmask)."""
    colours = 0
    rest = cands
    while rest:
        colours += 1
        avail = rest
        while avail:
            low = avail & -avail
            avail &= ~low & ~compat[low.bit_length() - 1]
            rest &= ~low
    return colours


def max_clique_exact(G: Hypergraph, node_cap: int = DEFAULT_NODE_CAP) -> CliqueResult:
    """Maximum clique by branch and bound.

    Vertices are added in increasing id order, so the search walks cliques in
    lexicographic order and the first clique of the largest size it meets is
    the lexicographically smallest one. Subtrees are cut when the clique size
    plus a greedy colouring bound on the remaining compatible candidates
    cannot beat the target. Past ``node_cap`` search nodes the best clique so
    far is returned with ``optimal=False``.
    """
    if G.is_empty:
        return CliqueResult((0,), 0, True)
    greedy = greedy_clique(G)
    compat = _compatibility(G)
    n = G.n
    # target one below greedy so the lexicographically first maximum is found
    best = {"size": greedy.omega - 1, "set": greedy.vertices}
    nodes = 0
    capped = False

    def search(S, cands):
        nonlocal nodes, capped
        nodes += 1
        if nodes > node_cap:
            capped = True
            return
        if len(S) > best["size"]:
            best["size"] = len(S)
            best["set"] = tuple(S)
        rest = cands
        while rest:
            if len(S) + rest.bit_count() <= best["size"]:
                return
            if len(S) + _colour_bound(rest, compat) <= best["size"]:
                return
            low = rest & -rest
            v = low.bit_length() - 1
            rest &= ~low
            S.append(v)
            nxt = 0
            scan = rest & compat[v]
            while scan:
                lw = scan & -scan
                u = lw.bit_length() - 1
                scan &= ~lw
                if _extends(G, S, u):
                    nxt |= lw
            search(S, nxt)
            S.pop()
            if capped:
                return

    search([], (1 << n) - 1)
    return CliqueResult(tuple(best["set"]), nodes, not capped)


def greedy_maximal_cliques(G: Hypergraph, limit: int = 4, first: Iterable[int] | None = None) -> list[tuple[int, ...]]:
    """Up to ``limit`` distinct maximal cliques grown greedily from each vertex.

    ``first``, when given, is extended to a maximal clique and listed first.
    """
    out: list[tuple[int, ...]] = []

    def grow(seed):
        S = sorted(seed)
        for v in sorted(range(G.n), key=lambda v: (-G.degrees[v], v)):
            if v not in S and _extends(G, S, v):
                S = sorted(S + [v])
        return tuple(S)

    if G.is_empty:
        return [(0,)]
    if first is not None:
        out.append(grow(first))
    for v in sorted(range(G.n), key=lambda v: (-G.degrees[v], v)):
        if len(out) >= limit:
            break
        c = grow([v])
        if c not in out:
            out.append(c)
    return out[:limit]
