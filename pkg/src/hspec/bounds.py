"""Clique-number bounds on hypergraph spectral radii, checked on a given graph.

Closed-form bounds (``omega`` is the clique number, ``R`` the edge types,
``k``/``c`` the rank/corank, ``U`` the entry sum of the principal
eigenvector):

* ``adjacency_clique_bound``   rho >= sum_s C(omega-1, s-1), tight iff complete
* ``signless_clique_bound``    q   >= 2 sum_s C(omega-1, s-1), tight iff complete
* ``rank_corank_bound``        rho >= (omega-c+1)^(c-1) (omega-k+1)^(k-c) / (k-1)!
                                       + (omega-c+1)^(c-1) / (c-1)!
* ``clique_support_value``     L(G) = sum_s C(omega, s) / omega^k (under a
                               structural condition, see
                               :func:`closed_form_condition`)
* ``eigenvector_sum_bound``    rho <= sum_s k (U/omega)^k C(omega, s), same condition

:func:`check_all` evaluates all of them and returns a :class:`BoundReport`
that serialises to JSON with a fixed key order. Record names in that JSON
are part of the file format.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .clique import DEFAULT_NODE_CAP, max_clique_exact
from .hypergraph import Hypergraph, edge_type_multiset
from .lagrangian import LagrangianOptions, clique_support_value, maximize_lagrangian
from .spectral import IterationOptions, signless_spectral_radius, spectral_radius

__all__ = [
    "BoundOptions",
    "BoundRecord",
    "BoundReport",
    "ClosedFormCondition",
    "adjacency_clique_bound",
    "signless_clique_bound",
    "rank_corank_bound",
    "rank_corank_bound_simplified",
    "eigenvector_sum_bound",
    "closed_form_condition",
    "check_all",
]


# -- closed-form bounds ---------------------------------------------------------


def adjacency_clique_bound(omega: int, R: Iterable[int]) -> float:
    """``sum_{s in R} C(omega - 1, s - 1)``."""
    if omega < 1:
        raise ValueError(f"omega must be >= 1, got {omega}")
    return float(sum(math.comb(omega - 1, s - 1) for s in set(R)))


def signless_clique_bound(omega: int, R: Iterable[int]) -> float:
    return 2.0 * adjacency_clique_bound(omega, R)


def rank_corank_bound(omega: int, k: int, c: int) -> float:
    """Lower bound on rho from the clique number, rank ``k`` and corank ``c``.

    Evaluated literally for any ``omega``; the factors ``omega - k + 1`` may
    be zero or negative when ``omega < k``.
    """
    if not 2 <= c <= k:
        raise ValueError(f"need 2 <= c <= k, got c={c}, k={k}")
    head = Fraction(omega - c + 1) ** (c - 1)
    val = head * Fraction(omega - k + 1) ** (k - c) / math.factorial(k - 1) + head / math.factorial(c - 1)
    return float(val)


def rank_corank_bound_simplified(omega: int, k: int) -> float:
    """``omega (omega - k + 2)^(k-2) / (k-1)!``, the corank ``k - 1`` simplification."""
    return float(Fraction(omega * (omega - k + 2) ** (k - 2), math.factorial(k - 1)))


def eigenvector_sum_bound(omega: int, R: Iterable[int], k: int, U: float) -> float:
    """``sum_{s in R} k (U / omega)^k C(omega, s)``."""
    if not U > 0:
        raise ValueError(f"U must be positive, got {U}")
    if omega < 1:
        raise ValueError(f"omega must be >= 1, got {omega}")
    return sum(k * (U / omega) ** k * math.comb(omega, s) for s in set(R))


@dataclass(frozen=True)
class ClosedFormCondition:
    """Whether ``G`` is a complete R-graph, or has two nonadjacent vertices
    with equal edge-type multisets (first such pair in lexicographic order)."""

    is_complete: bool
    witness_pair: tuple[int, int] | None

    @property
    def holds(self) -> bool:
        return self.is_complete or self.witness_pair is not None


def closed_form_condition(G: Hypergraph) -> ClosedFormCondition:
    counts: dict[int, int] = {}
    for e in G.edges:
        counts[len(e)] = counts.get(len(e), 0) + 1
    if all(counts[s] == math.comb(G.n, s) for s in counts):
        # an edgeless graph is vacuously complete for R = {}
        return ClosedFormCondition(True, None)
    types = [edge_type_multiset(G, v) for v in range(G.n)]
    for u, v in itertools.combinations(range(G.n), 2):
        if types[u] == types[v] and not G.adjacent(u, v):
            return ClosedFormCondition(False, (u, v))
    return ClosedFormCondition(False, None)


# -- report ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BoundOptions:
    """Tolerances and sub-solver settings for :func:`check_all`.

    ``tolerance`` decides ``holds`` (slack >= -tolerance); the looser
    ``equality_tolerance`` decides tightness.
    """

    tolerance: float = 1e-7
    equality_tolerance: float = 1e-6
    iteration: IterationOptions = field(default_factory=IterationOptions)
    lagrangian: LagrangianOptions = field(default_factory=LagrangianOptions)
    compute_lagrangian: bool = True
    node_cap: int = DEFAULT_NODE_CAP
    ungated_eigenvector_bound: bool = False

    def __post_init__(self):
        if not self.tolerance > 0 or not self.equality_tolerance > 0:
            raise ValueError("tolerances must be positive")


# status values
CHECKED = "checked"
VACUOUS = "vacuous_regime"
NOT_APPLICABLE = "not_applicable"
UNVERIFIED = "unverified"
INFORMATIONAL = "informational"


@dataclass(frozen=True)
class BoundRecord:
    name: str
    kind: str  # "lower", "upper" or "closed_form"
    bound: float | None
    measured: float | None
    slack: float | None
    holds: bool | None
    equality: bool | None
    status: str = CHECKED
    note: str = ""

    @property
    def counts(self) -> bool:
        """Whether this record takes part in the pass/fail verdict."""
        return self.status == CHECKED

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "kind": self.kind,
            "bound": self.bound,
            "measured": self.measured,
            "slack": self.slack,
            "holds": self.holds,
            "equality": self.equality,
            "status": self.status,
            "note": self.note,
        }


def _record(name, kind, bound, measured, opts, status=CHECKED, note=""):
    if bound is None or measured is None:
        return BoundRecord(name, kind, bound, measured, None, None, None, status, note)
    slack = bound - measured if kind == "upper" or kind == "closed_form" else measured - bound
    holds = slack >= -opts.tolerance
    equality = abs(slack) <= opts.equality_tolerance
    return BoundRecord(name, kind, bound, measured, slack, holds, equality, status, note)


@dataclass(frozen=True)
class BoundReport:
    input: dict
    quantities: dict
    records: tuple[BoundRecord, ...]
    condition: ClosedFormCondition
    omega_optimal: bool
    diagnostics: dict = field(default_factory=dict)

    def record(self, name: str) -> BoundRecord:
        for r in self.records:
            if r.name == name:
                return r
        raise KeyError(name)

    @property
    def violations(self) -> list[BoundRecord]:
        return [r for r in self.records if r.counts and r.holds is False]

    @property
    def all_hold(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {
            "input": dict(self.input),
            "quantities": dict(self.quantities),
            "bounds": [r.as_dict() for r in self.records],
            "conditions": {
                "is_complete_r_graph": self.condition.is_complete,
                "has_nonadjacent_equal_Rv_pair": self.condition.witness_pair is not None,
                "witness_pair": list(self.condition.witness_pair) if self.condition.witness_pair else None,
                "omega_optimal": self.omega_optimal,
            },
            "diagnostics": dict(self.diagnostics),
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.as_dict(), indent=indent)


def check_all(G: Hypergraph, opts: BoundOptions | None = None) -> BoundReport:
    """Compute omega, rho, q, U and (optionally) L, then evaluate every bound.

    ``spectral.ConvergenceError`` propagates. If the clique search hits its
    node cap, every record is marked ``unverified`` rather than evaluated
    with a heuristic omega.
    """
    opts = opts or BoundOptions()
    R = sorted(G.edge_types)
    k, c = G.rank, G.corank
    clique = max_clique_exact(G, node_cap=opts.node_cap)
    omega = clique.omega
    rho = spectral_radius(G, opts.iteration)
    q = signless_spectral_radius(G, opts.iteration)
    U = rho.entry_sum
    cond = closed_form_condition(G)
    lag = None
    if opts.compute_lagrangian:
        lag = maximize_lagrangian(G, opts.lagrangian, clique=clique.vertices)

    base = CHECKED if clique.optimal else UNVERIFIED
    records = [
        _record("lemma_2_3", "lower", adjacency_clique_bound(omega, R), rho.value, opts, base),
        _record("theorem_3_1", "lower", signless_clique_bound(omega, R), q.value, opts, base),
    ]

    if len(R) < 2:
        records.append(
            _record(
                "theorem_3_2", "lower", rank_corank_bound(omega, k, c) if R else None, rho.value, opts,
                NOT_APPLICABLE, "needs at least two edge types",
            )
        )
    else:
        status, note = base, ""
        if omega < k and base == CHECKED:
            status, note = VACUOUS, "omega < rank"
        records.append(_record("theorem_3_2", "lower", rank_corank_bound(omega, k, c), rho.value, opts, status, note))

    if lag is not None:
        closed = clique_support_value(omega, R, k) if R else 0.0
        if cond.holds:
            records.append(_record("theorem_3_3", "closed_form", closed, lag.value, opts, base, "heuristic maximum"))
        else:
            records.append(
                _record("theorem_3_3", "lower", closed, lag.value, opts, base, "condition fails; lower bound only")
            )

    if cond.holds or opts.ungated_eigenvector_bound:
        bound = eigenvector_sum_bound(omega, R, k, U) if R else 0.0
        status = base if cond.holds else INFORMATIONAL
        records.append(_record("theorem_3_4", "upper", bound, rho.value, opts, status))

    quantities = {
        "rho": rho.value,
        "q": q.value,
        "omega": omega,
        "lagrangian": lag.value if lag is not None else None,
        "U": U,
    }
    diagnostics = {
        "rho_iterations": rho.iterations,
        "rho_bracket": [rho.lower, rho.upper],
        "q_iterations": q.iterations,
        "q_bracket": [q.lower, q.upper],
        "clique": list(clique.vertices),
        "clique_nodes": clique.nodes_explored,
    }
    if lag is not None:
        diagnostics["lagrangian_starts"] = lag.starts
        diagnostics["lagrangian_kkt_residual"] = lag.kkt_residual
    return BoundReport(
        input={"n": G.n, "m": G.num_edges, "R": R, "k": k, "c": c},
        quantities=quantities,
        records=tuple(records),
        condition=cond,
        omega_optimal=clique.optimal,
        diagnostics=diagnostics,
    )
