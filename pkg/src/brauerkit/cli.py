"""brauerkit command line.

Exit codes: 0 success, 2 bad input or violated constraint, 3 search bound exhausted.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .brauer_complete import certify_indecomposable, completed_from_json
from .brauer_global import SymbolSum
from .characters import CyclicCharacter, InsufficientPlacesError
from .constructions import (
    ConstraintError,
    IndecomposableSpec,
    build_indecomposable,
    build_remark_p1,
    check_primes,
    default_search_degree,
    ncp_admissible,
    ncp_pairs,
    ncp_parameters,
)
from .field import RationalFunction, parse_place
from .lift import index_report, lift_class, lift_report

ENV_SEARCH_DEGREE = "BRAUERKIT_SEARCH_DEGREE"


def _search_degree(args, q=None, e=None):
    """Flag beats environment beats the default 2*q^e*e."""
    if getattr(args, "search_degree", None) is not None:
        return args.search_degree, "flag"
    env = os.environ.get(ENV_SEARCH_DEGREE)
    if env:
        try:
            value = int(env)
        except ValueError:
            raise ConstraintError(f"{ENV_SEARCH_DEGREE}={env!r} is not an integer") from None
        return value, "env"
    if q is not None and e is not None:
        return default_search_degree(q, e), "default"
    return None, "unbounded"


def _load_json(path):
    with open(path) as fh:
        return json.load(fh)


def cmd_indecomposable(args):
    spec_q, spec_e = args.q, args.e
    check_primes(args.p, spec_q)
    spec = IndecomposableSpec(spec_q, spec_e, args.i)
    sd, src = _search_degree(args, spec_q, spec_e)
    result = build_indecomposable(args.p, spec, sd)
    params = {"p": args.p, "q": args.q, "e": args.e, "i": args.i,
              "search_degree": sd, "search_degree_source": src}
    return params, result.to_json()


def cmd_residues(args):
    p = args.p
    x0 = parse_place(args.x0, p)
    if x0.is_infinite:
        raise ConstraintError("--x0 must be a finite place")
    xi = CyclicCharacter.constant(p, args.xi_order)
    symbols = SymbolSum.single(xi, RationalFunction(x0.poly))
    table = symbols.residue_table()
    params = {"p": p, "xi_order": args.xi_order, "x0": str(x0)}
    result = {
        "symbol": symbols.to_json(),
        "residues": [{"place": str(v), "residue": str(x), "order": x.order()} for v, x in table],
    }
    return params, result


def cmd_ncp(args):
    r, s = ncp_parameters(args.q, args.p, args.m0)
    params_list = ncp_admissible(args.q, args.p, args.m0, args.l_max)
    params = {"p": args.p, "q": args.q, "m0": args.m0, "l_max": args.l_max}
    result = {
        "r": r,
        "s": s,
        "pairs": [{"index": i, "period": per} for i, per in ncp_pairs(params_list)],
        "admissible": [x.to_json() for x in params_list],
    }
    if any(x.m == 0 for x in params_list):
        result["flag"] = "m = 0 admitted (r = 0 makes 0 a member of {r} u [s, inf))"
    return params, result


def _require_recipe(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise ConstraintError("missing " + ", ".join("--" + n for n in missing) + " (or give --class)")


def cmd_lift(args):
    if args.class_file:
        gamma = completed_from_json(_load_json(args.class_file))
        sd, src = _search_degree(args)
        lifted = lift_class(gamma)
        params = {"class": args.class_file, "search_degree": sd, "search_degree_source": src}
        return params, lift_report(lifted, index_report(lifted, sd))
    _require_recipe(args, "p", "q", "e", "t")
    sd, src = _search_degree(args, args.q, args.e)
    res = build_remark_p1(args.q, args.e, args.t, args.p, sd)
    params = {"p": args.p, "q": args.q, "e": args.e, "t": args.t,
              "search_degree": sd, "search_degree_source": src}
    result = lift_report(res.lifted, res.report)
    result["x0"] = str(res.x0)
    result["xi"] = res.xi.to_json()
    return params, result


def cmd_certify(args):
    if args.class_file:
        gamma = completed_from_json(_load_json(args.class_file))
        sd, src = _search_degree(args)
        cert = certify_indecomposable(gamma, args.q, sd)
        params = {"class": args.class_file, "q": args.q, "search_degree": sd,
                  "search_degree_source": src}
        return params, {"class": gamma.to_json(), "certificate": cert.to_json()}
    _require_recipe(args, "p", "e", "i")
    check_primes(args.p, args.q)
    spec = IndecomposableSpec(args.q, args.e, args.i)
    sd, src = _search_degree(args, args.q, args.e)
    res = build_indecomposable(args.p, spec, sd)
    params = {"p": args.p, "q": args.q, "e": args.e, "i": args.i,
              "search_degree": sd, "search_degree_source": src}
    return params, {"class": res.gamma.to_json(), "certificate": res.certificate.to_json()}


def _flatten(obj, prefix=""):
    if isinstance(obj, dict):
        for k, v in obj.items():
            yield from _flatten(v, f"{prefix}.{k}" if prefix else str(k))
    elif isinstance(obj, list):
        if not obj:
            yield prefix, "(none)"
        for i, v in enumerate(obj):
            yield from _flatten(v, f"{prefix}[{i}]")
    else:
        yield prefix, "null" if obj is None else obj


def render_human(report: dict) -> str:
    lines = [f"brauerkit {report['command']}"]
    lines += [f"  {k}: {v}" for k, v in _flatten(report["params"], "params")]
    lines += [f"  {k}: {v}" for k, v in _flatten(report["result"])]
    if "elapsed_s" in report:
        lines.append(f"  elapsed_s: {report['elapsed_s']}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit the report as JSON")
    common.add_argument("--search-degree", type=int, default=argparse.SUPPRESS,
                        help=f"place search degree bound (env {ENV_SEARCH_DEGREE})")
    common.add_argument("--timing", action="store_true", default=argparse.SUPPRESS,
                        help="include wall-clock time (breaks byte-stable output)")

    parser = argparse.ArgumentParser(prog="brauerkit", parents=[common],
                                     description="Brauer classes of F_p(t) and of the completed field.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("indecomposable", parents=[common],
                       help="build an indecomposable class of index q^i and period q^e")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.set_defaults(func=cmd_indecomposable)

    p = sub.add_parser("residues", parents=[common], help="residue table of (xi, pi_x0)")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--xi-order", type=int, required=True)
    p.add_argument("--x0", required=True, help="monic irreducible, e.g. t^3+t+1")
    p.set_defaults(func=cmd_residues)

    p = sub.add_parser("ncp", parents=[common], help="noncrossed-product parameters")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m0", type=int, default=1, help="constant field is F_{p^m0}")
    p.add_argument("--l-max", type=int, required=True)
    p.set_defaults(func=cmd_ncp)

    p = sub.add_parser("lift", parents=[common],
                       help="lift a class to K(X) and report its index (P^1 recipe by default)")
    p.add_argument("--class", dest="class_file", help="completed-class JSON file")
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--e", type=int)
    p.add_argument("--t", type=int)
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("certify", parents=[common], help="indecomposability certificate")
    p.add_argument("--class", dest="class_file", help="completed-class JSON file")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--p", type=int)
    p.add_argument("--e", type=int)
    p.add_argument("--i", type=int)
    p.set_defaults(func=cmd_certify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    want_json = getattr(args, "json", False)
    start = time.perf_counter()
    try:
        params, result = args.func(args)
    except InsufficientPlacesError as exc:
        print(f"brauerkit: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError, KeyError) as exc:
        print(f"brauerkit: {exc}", file=sys.stderr)
        return 2
    report = {"command": args.command, "params": params, "result": result}
    if getattr(args, "timing", False):
        report["elapsed_s"] = round(time.perf_counter() - start, 6)
    if want_json:
        print(json.dumps(report, indent=2))
    else:
        print(render_human(report))
    return 0


if __name__ == "__main__":
    sys.exit(main())
