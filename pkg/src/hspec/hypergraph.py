"""General (non-uniform) hypergraphs.

A :class:`Hypergraph` is an immutable vertex count plus a tuple of edges.
Each edge is a sorted tuple of distinct 0-indexed vertex ids with at least
two members. Edge sizes may differ; the set of sizes is the edge-type set
``R`` and the graph is then called an R-graph.

The ``.hg`` text format::

    # optional comments
    n 4
    e 0 1
    e 0 1 2
"""

from __future__ import annotations

import io
import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

import numpy as np

__all__ = [
    "Hypergraph",
    "HypergraphError",
    "ParseError",
    "parse_hypergraph",
    "serialize_hypergraph",
    "read_hypergraph",
    "write_hypergraph",
    "complete_r_graph",
    "random_r_graph",
    "connected_components",
    "edge_type_multiset",
    "disjoint_union",
]


class HypergraphError(ValueError):
    """Invalid hypergraph data."""


class ParseError(HypergraphError):
    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


def _canonical_key(edge):
    return (len(edge), edge)


@dataclass(frozen=True)
class Hypergraph:
    """Immutable general hypergraph on vertices ``0 .. n-1``.

    Parameters
    ----------
    n : int
        Number of vertices, at least 1.
    edges : iterable of iterables of int
        Edges as vertex collections. Each is stored as a sorted tuple. The
        given order is kept; :func:`serialize_hypergraph` writes canonical
        order.

    Raises
    ------
    HypergraphError
        On out-of-range ids, repeated vertices inside an edge, edges of size
        below 2, duplicate edges, or ``n < 1``.
    """

    n: int
    edges: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        n = self.n
        if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 1:
            raise HypergraphError(f"vertex count must be a positive integer, got {n!r}")
        object.__setattr__(self, "n", int(n))
        checked = []
        seen = set()
        for raw in self.edges:
            verts = [int(v) for v in raw]
            edge = tuple(sorted(verts))
            if len(edge) < 2:
                raise HypergraphError(f"edge {tuple(verts)} has size {len(edge)} < 2")
            if len(set(edge)) != len(edge):
                raise HypergraphError(f"edge {tuple(verts)} repeats a vertex")
            if edge[0] < 0 or edge[-1] >= self.n:
                raise HypergraphError(f"edge {tuple(verts)} has a vertex outside [0, {self.n})")
            if edge in seen:
                raise HypergraphError(f"duplicate edge {edge}")
            seen.add(edge)
            checked.append(edge)
        object.__setattr__(self, "edges", tuple(checked))

    # -- structural queries -------------------------------------------------

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def is_empty(self) -> bool:
        """True when the edge set is empty."""
        return not self.edges

    @property
    def rank(self) -> int | None:
        """Largest edge size, ``None`` for an edgeless graph."""
        return max(map(len, self.edges)) if self.edges else None

    @property
    def corank(self) -> int | None:
        return min(map(len, self.edges)) if self.edges else None

    @property
    def edge_types(self) -> frozenset[int]:
        return frozenset(len(e) for e in self.edges)

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(self.edges)

    @cached_property
    def incident_edges(self) -> tuple[tuple[tuple[int, ...], ...], ...]:
        """``incident_edges[v]`` lists the edges containing ``v``."""
        inc = [[] for _ in range(self.n)]
        for e in self.edges:
            for v in e:
                inc[v].append(e)
        return tuple(tuple(lst) for lst in inc)

    @cached_property
    def degrees(self) -> np.ndarray:
        deg = np.zeros(self.n, dtype=np.int64)
        for e in self.edges:
            deg[list(e)] += 1
        deg.setflags(write=False)
        return deg

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return int(self.degrees[v])

    def neighbours(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return frozenset(u for e in self.incident_edges[v] for u in e if u != v)

    def adjacent(self, u: int, v: int) -> bool:
        """Whether some edge contains both ``u`` and ``v``."""
        self._check_vertex(u)
        self._check_vertex(v)
        return u != v and any(v in e for e in self.incident_edges[u])

    def canonical(self) -> "Hypergraph":
        """Same graph with edges in canonical (size, lexicographic) order."""
        return Hypergraph(self.n, sorted(self.edges, key=_canonical_key))

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Hypergraph", list[int]]:
        """Subgraph induced on ``vertices``, relabelled to ``0..m-1``.

        Returns the subgraph and the list mapping new ids to old ids.
        """
        keep = sorted(set(int(v) for v in vertices))
        if not keep:
            raise HypergraphError("induced subgraph needs at least one vertex")
        for v in keep:
            self._check_vertex(v)
        relabel = {v: i for i, v in enumerate(keep)}
        edges = [tuple(relabel[v] for v in e) for e in self.edges if all(v in relabel for v in e)]
        return Hypergraph(len(keep), edges), keep

    def _check_vertex(self, v):
        if not 0 <= v < self.n:
            raise HypergraphError(f"vertex {v} outside [0, {self.n})")

    def __repr__(self):
        return f"Hypergraph(n={self.n}, m={len(self.edges)}, R={sorted(self.edge_types)})"


def edge_type_multiset(G: Hypergraph, v: int) -> tuple[int, ...]:
    """Sorted sizes of the edges containing ``v`` (the multiset R(v))."""
    G._check_vertex(v)
    return tuple(sorted(len(e) for e in G.incident_edges[v]))


def connected_components(G: Hypergraph) -> list[list[int]]:
    """Vertex sets of the connected components, ordered by smallest vertex.

    Isolated vertices form singleton components.
    """
    parent = list(range(G.n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for e in G.edges:
        r0 = find(e[0])
        for v in e[1:]:
            r = find(v)
            if r != r0:
                parent[max(r, r0)] = min(r, r0)
                r0 = min(r, r0)
    groups: dict[int, list[int]] = {}
    for v in range(G.n):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values(), key=lambda c: c[0])


# -- generators -------------------------------------------------------------


def _check_types(n, R):
    R = sorted(set(int(s) for s in R))
    if not R:
        raise HypergraphError("edge-type set R must be nonempty")
    if R[0] < 2:
        raise HypergraphError(f"edge types must be >= 2, got {R}")
    if R[-1] > n:
        raise HypergraphError(f"max(R) = {R[-1]} exceeds n = {n}")
    return R


def complete_r_graph(n: int, R: Iterable[int]) -> Hypergraph:
    """Complete R-graph: every s-subset of ``range(n)`` for each s in R."""
    R = _check_types(n, R)
    edges = [c for s in R for c in itertools.combinations(range(n), s)]
    return Hypergraph(n, edges)


def random_r_graph(n: int, R: Iterable[int], p: float, seed=None) -> Hypergraph:
    """Keep each candidate s-subset (s in R) independently with probability p.

    Candidates are visited in canonical order and one uniform draw is made
    per candidate, so a fixed seed gives a fixed graph.
    """
    R = _check_types(n, R)
    if not 0.0 <= p <= 1.0 or math.isnan(p):
        raise HypergraphError(f"inclusion probability must lie in [0, 1], got {p}")
    rng = np.random.default_rng(seed)
    edges = []
    for s in R:
        cands = list(itertools.combinations(range(n), s))
        keep = rng.random(len(cands)) < p
        edges.extend(c for c, k in zip(cands, keep) if k)
    return Hypergraph(n, edges)


def disjoint_union(*graphs: Hypergraph) -> Hypergraph:
    """Vertex-disjoint union; the i-th graph's vertices are shifted past the previous ones."""
    offset = 0
    edges = []
    for g in graphs:
        edges.extend(tuple(v + offset for v in e) for e in g.edges)
        offset += g.n
    return Hypergraph(offset, edges)


# -- .hg text format --------------------------------------------------------


def parse_hypergraph(text) -> Hypergraph:
    """Parse the ``.hg`` format from ``str`` or ``bytes``.

    Duplicate edges and all other invariant violations raise
    :class:`ParseError` carrying the offending line number.
    """
    if isinstance(text, (bytes, bytearray)):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not UTF-8: {exc}") from None
    n = None
    edges = []
    seen = {}
    for lineno, line in enumerate(text.split("\n"), start=1):
        line = line.rstrip("\r")
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tag, *rest = stripped.split()
        if tag == "n":
            if n is not None:
                raise ParseError("repeated 'n' line", lineno)
            if edges:
                raise ParseError("'n' line must precede edges", lineno)
            if len(rest) != 1:
                raise ParseError("'n' line takes exactly one integer", lineno)
            n = _parse_int(rest[0], lineno)
            if n < 1:
                raise ParseError(f"vertex count must be >= 1, got {n}", lineno)
        elif tag == "e":
            if n is None:
                raise ParseError("edge before 'n' line", lineno)
            verts = [_parse_int(tok, lineno) for tok in rest]
            if len(verts) < 2:
                raise ParseError(f"edge of size {len(verts)} < 2", lineno)
            if len(set(verts)) != len(verts):
                raise ParseError("repeated vertex within edge", lineno)
            for v in verts:
                if not 0 <= v < n:
                    raise ParseError(f"vertex id {v} out of range [0, {n})", lineno)
            key = tuple(sorted(verts))
            if key in seen:
                raise ParseError(f"duplicate edge {key} (first on line {seen[key]})", lineno)
            seen[key] = lineno
            edges.append(key)
        else:
            raise ParseError(f"unknown line tag {tag!r}", lineno)
    if n is None:
        raise ParseError("missing 'n' line")
    return Hypergraph(n, edges)


def _parse_int(tok, lineno):
    try:
        return int(tok, 10)
    except ValueError:
        raise ParseError(f"expected integer, got {tok!r}", lineno) from None


def serialize_hypergraph(G: Hypergraph) -> bytes:
    """Canonical ``.hg`` bytes: edges sorted by (size, vertices)."""
    buf = io.StringIO()
    buf.write(f"n {G.n}\n")
    for e in sorted(G.edges, key=_canonical_key):
        buf.write("e " + " ".join(map(str, e)) + "\n")
    return buf.getvalue().encode("ascii")


def read_hypergraph(path) -> Hypergraph:
    with open(path, "rb") as fh:
        return parse_hypergraph(fh.read())


def write_hypergraph(G: Hypergraph, path) -> None:
    with open(path, "wb") as fh:
        fh.write(serialize_hypergraph(G))
