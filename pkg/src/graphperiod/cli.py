"""Command-line front end.

Subcommands: ``compute`` (print a polynomial), ``check`` (run one criterion),
``exclude`` (batch criteria over primes), ``oracle`` (automorphism search),
``quotient`` (orbits and quotient graph).  Exit status: 0 pass/not-excluded,
1 fail/excluded (or nothing found), 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

from . import criteria as crit
from . import invariants as inv
from .graphs import MultiGraph, named_graph, parse_edge_list, render_edge_list
from .polynomials import is_prime, reduce_mod_p
from .symmetry import (
    DEFAULT_VERTEX_LIMIT,
    enumerate_automorphisms,
    find_free_period,
    orbits,
    quotient_graph,
)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_ERROR = 2

_NAMED = {"empty", "path", "cycle", "complete", "theta", "petersen", "frucht"}

# --fold folds the variables the congruences quotient by: only u for the
# three-variable polynomial, every variable otherwise
_FOLD_ONLY_U = ("negami",)


@dataclass
class CommandRequest:
    subcommand: str
    graph_spec: str
    json_output: bool = False
    primes: tuple = ()
    prime: int | None = None
    modulus: int | None = None
    fold: bool = False
    classic: bool = False
    invariant: str = ""
    route: str = "auto"
    criterion: str = ""
    assert_self_dual: bool = False
    use_oracle: bool = False
    oracle_action: str = ""
    subset_cap: int = field(default_factory=inv.default_subset_cap)
    oracle_limit: int = DEFAULT_VERTEX_LIMIT


def load_graph(spec: str) -> tuple[MultiGraph, str]:
    """Resolve --graph: a known name spec like ``cycle:5`` wins, otherwise the
    value is read as a file in the edge-list format."""
    name, _, raw_params = spec.partition(":")
    if name in _NAMED:
        params = []
        if raw_params:
            for chunk in raw_params.split(","):
                if not chunk.isdigit():
                    raise ValueError(
                        f"bad parameter {chunk!r} in graph spec {spec!r}"
                    )
                params.append(int(chunk))
        return named_graph(name, *params), spec
    if os.path.exists(spec):
        with open(spec, "r", encoding="utf-8") as fh:
            return parse_edge_list(fh.read()), spec
    raise ValueError(
        f"graph spec {spec!r} is neither a named graph "
        f"({', '.join(sorted(_NAMED))}) nor an existing file"
    )


def _check_prime(p: int) -> int:
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphperiod",
        description="graph polynomials and periodicity-exclusion criteria",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(p):
        p.add_argument("--graph", required=True, help="named spec or file path")
        p.add_argument("--json", action="store_true", help="JSON output")
        p.add_argument(
            "--cap",
            type=int,
            default=None,
            help="subset-expansion edge cap (default from "
            f"{inv.SUBSET_CAP_ENV} or {inv.DEFAULT_SUBSET_CAP})",
        )
        p.add_argument(
            "--oracle-limit",
            type=int,
            default=DEFAULT_VERTEX_LIMIT,
            help="vertex limit for exhaustive automorphism search",
        )

    p_compute = sub.add_parser("compute", help="print a graph polynomial")
    p_compute.add_argument("invariant", choices=("tutte", "negami", "chromatic"))
    add_common(p_compute)
    p_compute.add_argument("--mod", type=int, default=None, help="reduce mod a prime")
    p_compute.add_argument(
        "--fold",
        action="store_true",
        help="fold exponents modulo v^p - v (requires --mod)",
    )
    p_compute.add_argument(
        "--classic",
        action="store_true",
        help="print tau(x,y) instead of the shifted T(s,t)",
    )
    p_compute.add_argument(
        "--route",
        choices=("auto", "expansion", "recursion"),
        default="auto",
        help="negami computation route",
    )

    p_check = sub.add_parser("check", help="run one criterion")
    p_check.add_argument("criterion", choices=crit.CRITERION_IDS)
    add_common(p_check)
    p_check.add_argument("--p", type=int, required=True)
    p_check.add_argument(
        "--assert-self-dual",
        action="store_true",
        help="assert planar self-duality (required by cor1.3)",
    )

    p_exclude = sub.add_parser("exclude", help="batch criteria over primes")
    add_common(p_exclude)
    p_exclude.add_argument(
        "--primes", required=True, help="comma-separated primes, e.g. 2,3,5"
    )
    p_exclude.add_argument(
        "--oracle",
        action="store_true",
        help="cross-check excluded primes against the exhaustive search",
    )

    p_oracle = sub.add_parser("oracle", help="symmetry oracle access")
    oracle_sub = p_oracle.add_subparsers(dest="oracle_action", required=True)
    p_period = oracle_sub.add_parser("find-period", help="search a free period")
    add_common(p_period)
    p_period.add_argument("--p", type=int, required=True)
    p_autos = oracle_sub.add_parser("automorphisms", help="enumerate automorphisms")
    add_common(p_autos)

    p_quotient = sub.add_parser("quotient", help="orbits and quotient graph")
    add_common(p_quotient)
    p_quotient.add_argument("--p", type=int, required=True)

    return parser


def request_from_args(args: argparse.Namespace) -> CommandRequest:
    request = CommandRequest(
        subcommand=args.subcommand,
        graph_spec=args.graph,
        json_output=args.json,
        oracle_limit=args.oracle_limit,
    )
    if args.cap is not None:
        request.subset_cap = args.cap
    if getattr(args, "p", None) is not None:
        request.prime = _check_prime(args.p)
    if getattr(args, "mod", None) is not None:
        request.modulus = _check_prime(args.mod)
    if getattr(args, "primes", None):
        request.primes = tuple(
            _check_prime(int(chunk))
            for chunk in args.primes.split(",")
            if chunk
        )
        if not request.primes:
            raise ValueError("--primes must list at least one prime")
    request.fold = getattr(args, "fold", False)
    request.classic = getattr(args, "classic", False)
    request.invariant = getattr(args, "invariant", "")
    request.route = getattr(args, "route", "auto")
    request.criterion = getattr(args, "criterion", "")
    request.assert_self_dual = getattr(args, "assert_self_dual", False)
    request.use_oracle = getattr(args, "oracle", False)
    request.oracle_action = getattr(args, "oracle_action", "") or ""
    if request.fold and request.modulus is None:
        raise ValueError("--fold requires --mod")
    return request


def _compute_polynomial(request: CommandRequest, g: MultiGraph):
    kind = request.invariant
    if kind == "tutte":
        pair = inv.tutte_deletion_contraction(g)
        poly = pair.classic if request.classic else pair.shifted
        variables = poly.variables
    elif kind == "negami":
        poly = inv.negami_polynomial(
            g, route=request.route, cap=request.subset_cap
        ).polynomial
        variables = poly.variables
    else:
        poly = inv.chromatic_deletion_contraction(g)
        variables = poly.variables
    if request.modulus is not None:
        poly = reduce_mod_p(poly, request.modulus)
        if request.fold:
            targets = _FOLD_TARGETS["tutte" if kind == "tutte" else kind]
            fold_vars = [v for v in targets if v in variables]
            poly = poly.fold(fold_vars)
    return poly


def run(request: CommandRequest) -> int:
    g, label = load_graph(request.graph_spec)

    if request.subcommand == "compute":
        poly = _compute_polynomial(request, g)
        if request.json_output:
            payload = {
                "graph": label,
                "invariant": request.invariant,
                "variables": list(poly.variables),
                "modulus": request.modulus,
                "folded": request.fold,
                "polynomial": str(poly),
            }
            print(json.dumps(payload, ensure_ascii=False))
        else:
            print(poly)
        return EXIT_PASS

    if request.subcommand == "check":
        report = _run_check(request, g, label)
        if request.json_output:
            print(report.to_json())
        else:
            print(crit.render_report(report))
        return EXIT_PASS if report.passed else EXIT_FAIL

    if request.subcommand == "exclude":
        reports = crit.exclusion_report(
            g,
            request.primes,
            graph_label=label,
            use_oracle=request.use_oracle,
            oracle_limit=request.oracle_limit,
        )
        excluded = crit.excluded_primes(reports)
        if request.json_output:
            payload = {
                "graph": label,
                "excluded": excluded,
                "reports": [r.to_dict() for r in reports],
            }
            print(json.dumps(payload, ensure_ascii=False))
        else:
            for p in sorted(set(request.primes)):
                verdict = "excluded" if p in excluded else "not excluded"
                failing = sorted(
                    r.criterion
                    for r in reports
                    if r.p == p and r.verdict == "fail"
                )
                detail = f" ({', '.join(failing)} fail)" if failing else ""
                print(f"p={p}: {verdict}{detail}")
            for report in reports:
                print()
                print(crit.render_report(report))
        return EXIT_FAIL if excluded else EXIT_PASS

    if request.subcommand == "oracle":
        if request.oracle_action == "find-period":
            witness = find_free_period(g, request.prime, limit=request.oracle_limit)
            if request.json_output:
                payload = {
                    "graph": label,
                    "p": request.prime,
                    "found": witness is not None,
                    "automorphism": witness.to_dict() if witness else None,
                }
                print(json.dumps(payload, ensure_ascii=False))
            elif witness is None:
                print(f"no free period of order {request.prime}")
            else:
                print(json.dumps(witness.to_dict()))
            return EXIT_PASS if witness is not None else EXIT_FAIL
        autos = enumerate_automorphisms(g, limit=request.oracle_limit)
        if request.json_output:
            payload = {
                "graph": label,
                "count": len(autos),
                "automorphisms": [a.to_dict() for a in autos],
            }
            print(json.dumps(payload, ensure_ascii=False))
        else:
            print(f"count: {len(autos)}")
            for a in autos:
                print(json.dumps(a.to_dict()))
        return EXIT_PASS

    if request.subcommand == "quotient":
        witness = find_free_period(g, request.prime, limit=request.oracle_limit)
        if witness is None:
            print(
                f"no free period of order {request.prime}; no quotient exists",
                file=sys.stderr,
            )
            return EXIT_FAIL
        qmap = quotient_graph(g, witness)
        vertex_orbits, edge_orbits = orbits(g, witness)
        if request.json_output:
            payload = {
                "graph": label,
                "p": request.prime,
                "automorphism": witness.to_dict(),
                "vertex_orbits": [list(o) for o in vertex_orbits],
                "edge_orbits": [list(o) for o in edge_orbits],
                "quotient": render_edge_list(qmap.quotient),
            }
            print(json.dumps(payload, ensure_ascii=False))
        else:
            print(f"automorphism: {json.dumps(witness.to_dict())}")
            print(f"vertex orbits: {[list(o) for o in vertex_orbits]}")
            print(f"edge orbits: {[list(o) for o in edge_orbits]}")
            print("quotient:")
            print(render_edge_list(qmap.quotient), end="")
        return EXIT_PASS

    raise ValueError(f"unknown subcommand {request.subcommand!r}")


def _run_check(request: CommandRequest, g: MultiGraph, label: str):
    cid = request.criterion
    p = request.prime
    if cid == "thm1.1":
        return crit.check_negami_shape(g, p, graph_label=label)
    if cid == "cor1.2":
        return crit.check_tutte_coefficients(g, p, graph_label=label)
    if cid == "cor1.3":
        if not request.assert_self_dual:
            raise ValueError("cor1.3 requires --assert-self-dual")
        return crit.check_selfdual_vertex_count(
            g, p, request.assert_self_dual, graph_label=label
        )
    witness = find_free_period(g, p, limit=request.oracle_limit)
    if witness is None:
        raise ValueError(
            f"{cid} needs a free period of order {p} as witness and the "
            "oracle found none"
        )
    if cid == "thm3.1":
        return crit.check_negami_quotient_congruence(g, witness, p, graph_label=label)
    if cid == "cor3.2":
        return crit.check_tutte_quotient_congruence(g, witness, p, graph_label=label)
    return crit.check_chromatic_vanishing(g, witness, p, graph_label=label)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_PASS
    try:
        request = request_from_args(args)
        return run(request)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
