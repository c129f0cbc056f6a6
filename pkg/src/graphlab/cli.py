"""Command line interface.

Subcommands:

* gamma         build Gamma_k; emit json, dot, or the distance matrix as csv
* divisor-graph build the divisor graph of n; same emit choices
* indices       compute topological indices exactly (json or table)
* verify        check every closed form against the definition-level engine
* claims        evaluate the bundled claim registry (json or markdown)

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 claim
mismatch under --strict.  Output for identical invocations is byte
identical: no timestamps, canonical orderings throughout.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from collections import Counter

from . import claims as claims_mod
from . import formulas, indices, metric
from .exact import format_value, to_decimal
from .graphs import build_gamma, build_general

_DEFAULT_KCAP = 10
_KCAP_ENV = "GRAPHLAB_KCAP"


def _parse_primes(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise ValueError(f"--primes expects comma-separated integers, got {text!r}")


def _emit_graph(g, emit: str) -> str:
    if emit == "json":
        return json.dumps(g.to_json_dict(), indent=2) + "\n"
    if emit == "dot":
        return g.to_dot()
    if emit == "csv":
        return metric.distance_matrix(g).to_csv()
    raise ValueError(f"unknown emit format {emit!r}")


def cmd_gamma(args: argparse.Namespace) -> int:
    basis = _parse_primes(args.primes) if args.primes else None
    g = build_gamma(args.k, basis)
    sys.stdout.write(_emit_graph(g, args.emit))
    return 0


def cmd_divisor_graph(args: argparse.Namespace) -> int:
    g = build_general(args.n)
    sys.stdout.write(_emit_graph(g, args.emit))
    return 0


def _indices_table(values: dict) -> str:
    rows = [(name, format_value(v), to_decimal(v, 6)) for name, v in values.items()]
    w_name = max(len("index"), max(len(r[0]) for r in rows))
    w_exact = max(len("exact"), max(len(r[1]) for r in rows))
    lines = [f"{'index'.ljust(w_name)}  {'exact'.ljust(w_exact)}  approx"]
    for name, exact, approx in rows:
        lines.append(f"{name.ljust(w_name)}  {exact.ljust(w_exact)}  {approx}")
    return "\n".join(lines) + "\n"


def cmd_indices(args: argparse.Namespace) -> int:
    if args.k is not None:
        basis = _parse_primes(args.primes) if args.primes else None
        g = build_gamma(args.k, basis)
    else:
        if args.primes:
            raise ValueError("--primes applies only to --k")
        g = build_general(args.n)
    names = None if args.index == "all" else [s.strip() for s in args.index.split(",")]
    values = indices.compute_indices(g, names)
    if args.format == "json":
        sys.stdout.write(json.dumps(indices.report_dict(g, values), indent=2) + "\n")
    else:
        sys.stdout.write(_indices_table(values))
    return 0


def verification_lines(k_min: int, k_max: int) -> tuple[list[str], bool]:
    """Per-(formula, k) pass/fail lines comparing closed forms to the
    definition-level oracle, plus a summary line."""
    lines: list[str] = []
    passed = failed = 0
    for k in range(k_min, k_max + 1):
        g = build_gamma(k)
        m = len(g.edges())
        omega_counts = Counter(g.omega(i) for i in range(g.order))
        checks = [
            ("order", formulas.order_formula(k), g.order),
            ("size", formulas.size_formula(k), m),
            ("size_recursive", formulas.size_recursive(k), m),
            (
                "count_by_omega",
                tuple(formulas.count_by_omega(k, j) for j in range(k + 1)),
                tuple(omega_counts[j] for j in range(k + 1)),
            ),
            ("wiener", formulas.wiener_formula(k), indices.wiener(g)),
            ("hyper_wiener", formulas.hyper_wiener_formula(k), indices.hyper_wiener(g)),
            ("harary", formulas.harary_formula(k), indices.harary(g)),
            ("zagreb1", formulas.zagreb1_formula(k), indices.zagreb1(g)),
        ]
        for name, formula_value, oracle_value in checks:
            fv = format_value(formula_value) if not isinstance(formula_value, tuple) else str(formula_value)
            ov = format_value(oracle_value) if not isinstance(oracle_value, tuple) else str(oracle_value)
            if formula_value == oracle_value:
                lines.append(f"k={k} {name}: formula {fv} == oracle {ov} [pass]")
                passed += 1
            else:
                lines.append(f"k={k} {name}: formula {fv} != oracle {ov} [FAIL]")
                failed += 1
        formula_deg = tuple(formulas.degree_formula(k, g.omega(i)) for i in range(g.order))
        if formula_deg == g.degrees():
            lines.append(f"k={k} degree: formula == oracle for all {g.order} vertices [pass]")
            passed += 1
        else:
            bad = next(i for i in range(g.order) if formula_deg[i] != g.degree(i))
            lines.append(
                f"k={k} degree: formula {formula_deg[bad]} != oracle {g.degree(bad)} "
                f"at vertex {g.labels()[bad]} [FAIL]"
            )
            failed += 1
    lines.append(f"{passed} checks passed, {failed} failed")
    return lines, failed == 0


def cmd_verify(args: argparse.Namespace) -> int:
    cap = args.cap
    if cap is None:
        env = os.environ.get(_KCAP_ENV)
        if env is not None:
            try:
                cap = int(env)
            except ValueError:
                raise ValueError(f"{_KCAP_ENV} must be an integer, got {env!r}")
        else:
            cap = _DEFAULT_KCAP
    if not 0 <= args.k_min <= args.k_max:
        raise ValueError(f"need 0 <= k-min <= k-max, got {args.k_min}..{args.k_max}")
    if args.k_max > cap:
        raise ValueError(
            f"k-max {args.k_max} exceeds the cap of {cap} "
            f"(raise with --cap or {_KCAP_ENV}; the distance oracle is O(4^k))"
        )
    lines, ok = verification_lines(args.k_min, args.k_max)
    sys.stdout.write("\n".join(lines) + "\n")
    return 0 if ok else 1


def cmd_claims(args: argparse.Namespace) -> int:
    reports = claims_mod.run_all(args.k)
    sys.stdout.write(claims_mod.render_report(reports, args.format))
    if args.strict and any(r.verdict == claims_mod.MISMATCH for r in reports):
        return 3
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphlab",
        description="Exact divisor-function graphs and topological indices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gamma", help="build the k-dprime divisor function graph")
    p.add_argument("--k", type=int, required=True, help="number of distinct primes")
    p.add_argument("--primes", help="comma-separated primes realizing the graph")
    p.add_argument("--emit", choices=("json", "dot", "csv"), default="json",
                   help="csv emits the distance matrix")
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("divisor-graph", help="build the divisor graph of n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--emit", choices=("json", "dot", "csv"), default="json",
                   help="csv emits the distance matrix")
    p.set_defaults(func=cmd_divisor_graph)

    p = sub.add_parser("indices", help="compute topological indices exactly")
    target = p.add_mutually_exclusive_group(required=True)
    target.add_argument("--k", type=int, help="compute on Gamma_k")
    target.add_argument("--n", type=int, help="compute on the divisor graph of n")
    p.add_argument("--primes", help="comma-separated primes (with --k only)")
    p.add_argument("--index", default="all",
                   help="comma-separated index names, or 'all'")
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.set_defaults(func=cmd_indices)

    p = sub.add_parser("verify", help="check closed forms against the oracle")
    p.add_argument("--k-min", type=int, default=0)
    p.add_argument("--k-max", type=int, default=_DEFAULT_KCAP)
    p.add_argument("--cap", type=int, default=None,
                   help=f"largest allowed k-max (default {_DEFAULT_KCAP}, or {_KCAP_ENV})")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("claims", help="evaluate the bundled claim registry")
    p.add_argument("--k", type=int, choices=(3, 4, 5), default=None,
                   help="restrict to one graph")
    p.add_argument("--format", choices=("json", "markdown"), default="json")
    p.add_argument("--strict", action="store_true",
                   help="exit 3 if any evaluated claim mismatches")
    p.set_defaults(func=cmd_claims)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
