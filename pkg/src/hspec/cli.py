"""Command-line front end.

Exit codes: 0 ok, 1 input or usage error, 2 power iteration did not
converge (a partial report is still written), 3 a checked bound failed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from .bounds import BoundOptions, check_all
from .clique import DEFAULT_NODE_CAP, max_clique_exact
from .hypergraph import (
    HypergraphError,
    complete_r_graph,
    random_r_graph,
    read_hypergraph,
    serialize_hypergraph,
)
from .lagrangian import LagrangianOptions, maximize_lagrangian
from .spectral import (
    ConvergenceError,
    IterationOptions,
    oracle_signless_spectral_radius,
    oracle_spectral_radius,
    signless_spectral_radius,
    spectral_radius,
)
from .tensor import (
    OracleSizeError,
    adjacency_apply,
    dense_tensor_oracle,
    oracle_apply,
    oracle_rayleigh,
    rayleigh_adjacency,
    signless_apply,
)

EXIT_OK, EXIT_INPUT, EXIT_NONCONVERGENCE, EXIT_VIOLATION = 0, 1, 2, 3
QUANTITIES = ("rho", "q", "omega", "lagrangian", "U")
ORACLE_AGREEMENT = 1e-9
ORACLE_CAP = 10**5


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive_float(text):
    try:
        val = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not val > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return val


def _positive_int(text):
    try:
        val = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if val < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {text}")
    return val


def _int_list(text):
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _what(text):
    items = [tok.strip() for tok in text.split(",") if tok.strip()]
    bad = [t for t in items if t not in QUANTITIES]
    if bad or not items:
        raise argparse.ArgumentTypeError(f"choose from {','.join(QUANTITIES)}; got {text!r}")
    return [q for q in QUANTITIES if q in items]


def _common(p):
    p.add_argument("--tol", type=_positive_float, default=1e-10, help="power-iteration bracket width")
    p.add_argument("--max-iter", type=_positive_int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--out", help="write output here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hspec", description="Spectral radii, clique numbers and bound checks for general hypergraphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", help="compute selected quantities of a .hg file")
    p.add_argument("input")
    p.add_argument("--what", type=_what, default=list(QUANTITIES))
    p.add_argument("--restarts", type=int, default=8)
    p.add_argument("--node-cap", type=_positive_int, default=DEFAULT_NODE_CAP)
    _common(p)

    p = sub.add_parser("check-bounds", help="evaluate every bound on a .hg file")
    p.add_argument("input")
    p.add_argument("--restarts", type=int, default=8)
    p.add_argument("--node-cap", type=_positive_int, default=DEFAULT_NODE_CAP)
    p.add_argument("--ungated-thm34", action="store_true", help="also report the eigenvector-sum bound when its condition fails")
    _common(p)

    p = sub.add_parser("gen", help="write a generated hypergraph in .hg format")
    p.add_argument("kind", choices=("complete", "random"))
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--r", type=_int_list, required=True, help="edge types, e.g. 2,3")
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")

    p = sub.add_parser("oracle", help="compare implicit tensor operations with the dense tensor")
    p.add_argument("input")
    p.add_argument("--cap", type=_positive_int, default=ORACLE_CAP, help="maximum number of dense tensor entries")
    p.add_argument("--vectors", type=_positive_int, default=20)
    _common(p)
    return parser


def _emit(text, out):
    if not text.endswith("\n"):
        text += "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        tmp = f"{out}.tmp"
        with open(tmp, "w") as fh:
            fh.write(text)
        os.replace(tmp, out)


def _input_block(G):
    R = sorted(G.edge_types)
    return {"n": G.n, "m": G.num_edges, "R": R, "k": G.rank, "c": G.corank}


def _table(rows):
    width = max(len(k) for k, _ in rows) if rows else 0
    return "\n".join(f"{k:<{width}}  {_fmt(v)}" for k, v in rows)


def _fmt(v):
    if isinstance(v, float):
        return f"{v:.12g}"
    return str(v)


def _iteration_opts(args):
    return IterationOptions(tolerance=args.tol, max_iterations=args.max_iter, seed=args.seed)


def _check_threads():
    raw = os.environ.get("HSPEC_THREADS")
    if raw is None:
        return
    try:
        ok = int(raw) >= 1
    except ValueError:
        ok = False
    if not ok:
        raise UsageError(f"HSPEC_THREADS must be a positive integer, got {raw!r}")


def cmd_compute(args) -> int:
    G = read_hypergraph(args.input)
    it = _iteration_opts(args)
    q_sel = args.what
    quantities: dict = {}
    error = None
    clique = None
    if "omega" in q_sel or "lagrangian" in q_sel:
        clique = max_clique_exact(G, node_cap=args.node_cap)
    rho = None
    # each quantity is attempted, so a partial report keeps whatever converged
    for name in q_sel:
        try:
            if name in ("rho", "U"):
                rho = rho or spectral_radius(G, it)
                quantities[name] = rho.value if name == "rho" else rho.entry_sum
            elif name == "q":
                quantities["q"] = signless_spectral_radius(G, it).value
            elif name == "omega":
                quantities["omega"] = clique.omega
            elif name == "lagrangian":
                lopts = LagrangianOptions(restarts=args.restarts, seed=args.seed, node_cap=args.node_cap)
                quantities["lagrangian"] = maximize_lagrangian(G, lopts, clique=clique.vertices).value
        except ConvergenceError as exc:
            r = exc.result
            if error is None:
                error = {"quantity": name, "message": str(exc), "bracket": [r.lower, r.upper], "iterations": r.iterations}
    doc = {"input": _input_block(G), "quantities": quantities}
    if clique is not None and not clique.optimal:
        doc["warnings"] = ["clique search hit node cap; omega is a lower bound"]
    if error:
        doc["error"] = error
    if args.format == "json":
        _emit(json.dumps(doc, indent=2), args.out)
    else:
        rows = list(quantities.items())
        if error:
            rows.append(("error", error["message"]))
        _emit(_table(rows), args.out)
    return EXIT_NONCONVERGENCE if error else EXIT_OK


def cmd_check_bounds(args) -> int:
    G = read_hypergraph(args.input)
    opts = BoundOptions(
        iteration=_iteration_opts(args),
        lagrangian=LagrangianOptions(restarts=args.restarts, seed=args.seed, node_cap=args.node_cap),
        node_cap=args.node_cap,
        ungated_eigenvector_bound=args.ungated_thm34,
    )
    try:
        report = check_all(G, opts)
    except ConvergenceError as exc:
        r = exc.result
        doc = {
            "input": _input_block(G),
            "error": {"message": str(exc), "bracket": [r.lower, r.upper], "iterations": r.iterations},
        }
        _emit(json.dumps(doc, indent=2) if args.format == "json" else str(exc), args.out)
        return EXIT_NONCONVERGENCE
    if args.format == "json":
        _emit(report.to_json(), args.out)
    else:
        lines = [_table(list(report.quantities.items())), ""]
        hdr = f"{'record':<12} {'kind':<11} {'bound':>14} {'measured':>14} {'slack':>12}  holds  equal  status"
        lines.append(hdr)
        for r in report.records:
            lines.append(
                f"{r.name:<12} {r.kind:<11} {_num(r.bound):>14} {_num(r.measured):>14} {_num(r.slack):>12}"
                f"  {_flag(r.holds):<5}  {_flag(r.equality):<5}  {r.status}"
            )
        c = report.condition
        lines.append("")
        lines.append(f"complete R-graph: {c.is_complete}; nonadjacent equal-R(v) pair: {c.witness_pair}")
        _emit("\n".join(lines), args.out)
    return EXIT_OK if report.all_hold else EXIT_VIOLATION


def _num(v):
    return "-" if v is None else f"{v:.8g}"


def _flag(v):
    return "-" if v is None else ("yes" if v else "no")


def cmd_gen(args) -> int:
    if args.kind == "complete":
        G = complete_r_graph(args.n, args.r)
    else:
        G = random_r_graph(args.n, args.r, args.p, seed=args.seed)
    data = serialize_hypergraph(G).decode("ascii")
    if args.out is None:
        sys.stdout.write(data)
    else:
        _emit(data, args.out)
    return EXIT_OK


def cmd_oracle(args) -> int:
    G = read_hypergraph(args.input)
    if G.is_empty:
        raise HypergraphError("oracle needs at least one edge")
    T = dense_tensor_oracle(G, cap=args.cap)
    k = G.rank
    deg = np.asarray(G.degrees, dtype=float)
    rng = np.random.default_rng(args.seed)
    dev_a = dev_q = dev_r = 0.0
    for _ in range(args.vectors):
        x = rng.uniform(0.1, 1.0, G.n)
        ya = oracle_apply(T, x)
        dev_a = max(dev_a, float(np.max(np.abs(adjacency_apply(G, x) - ya))))
        dev_q = max(dev_q, float(np.max(np.abs(signless_apply(G, x) - (deg * x ** (k - 1) + ya)))))
        dev_r = max(dev_r, abs(rayleigh_adjacency(G, x) - oracle_rayleigh(T, x)))
    it = _iteration_opts(args)
    error = None
    eig = {}
    try:
        rho_i, rho_o = spectral_radius(G, it).value, oracle_spectral_radius(G, it, cap=args.cap).value
        q_i, q_o = signless_spectral_radius(G, it).value, oracle_signless_spectral_radius(G, it, cap=args.cap).value
        eig = {
            "rho_implicit": rho_i,
            "rho_oracle": rho_o,
            "rho_difference": abs(rho_i - rho_o),
            "q_implicit": q_i,
            "q_oracle": q_o,
            "q_difference": abs(q_i - q_o),
        }
    except ConvergenceError as exc:
        error = str(exc)
    worst = max([dev_a, dev_q, dev_r] + [eig.get("rho_difference", 0.0), eig.get("q_difference", 0.0)])
    doc = {
        "input": _input_block(G),
        "vectors": args.vectors,
        "apply_max_deviation": dev_a,
        "signless_apply_max_deviation": dev_q,
        "rayleigh_max_deviation": dev_r,
        **eig,
        "threshold": ORACLE_AGREEMENT,
        "agree": error is None and worst <= ORACLE_AGREEMENT,
    }
    if error:
        doc["error"] = error
    if args.format == "json":
        _emit(json.dumps(doc, indent=2), args.out)
    else:
        _emit(_table([(k, v) for k, v in doc.items() if k != "input"]), args.out)
    if error:
        return EXIT_NONCONVERGENCE
    return EXIT_OK if doc["agree"] else EXIT_INPUT


COMMANDS = {
    "compute": cmd_compute,
    "check-bounds": cmd_check_bounds,
    "gen": cmd_gen,
    "oracle": cmd_oracle,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        _check_threads()
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"hspec: usage error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (HypergraphError, OracleSizeError, OSError, ValueError) as exc:
        print(f"hspec: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
