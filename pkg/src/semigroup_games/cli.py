"""Command-line front end.

Every subcommand prints a JSON run report (or CSV / an aligned table with
``--format``).  Exit codes: 0 computed, 2 input error, 3 cap exceeded, or an
undecided verdict under ``--strict``.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__
from .algebra import AlgebraError, NonAssociative, NonClosed, parse_semigroup, parse_subset, verify_tile
from .asymptotics.density import UNDECIDED, density_along, limit_density, parse_sequence
from .asymptotics.fubini import X_INNER, Y_INNER, parity_example, wald_example
from .asymptotics.multiplicative import (CapExceeded, benford_density_estimate,
                                         generate_pn, multiplicative_density)
from .asymptotics.sets import PredicateNotCountable, SetSpecError, parse_set
from .asymptotics.wald import FiniteSupportStrategy, wald_best_response
from .asymptotics.wset import w_oscillation_table
from .games import PayoffError, build_payoff_matrix, parse_payoff, solve_zero_sum, verify_main_theorem
from .measures import im_bounds, indicator, invariant_measures, tile_measure_check
from .rational import approx, jsonable

EXIT_OK, EXIT_INPUT, EXIT_CAP = 0, 2, 3


class InputError(Exception):
    pass


class Undecided(Exception):
    pass


def _digest(text: str) -> str:
    p = Path(text.split(":", 1)[1] if text.startswith(("csv:", "file:")) else text)
    data = p.read_bytes() if p.suffix and p.is_file() else text.encode()
    return hashlib.sha256(data).hexdigest()[:16]


def _semigroup(args, spec):
    return parse_semigroup(spec, require_associative=not args.magma, rng=random.Random(args.seed))


# -- subcommands: each returns (results, inputs) ---------------------------------

def cmd_validate(args, spec):
    try:
        S = parse_semigroup(spec, require_associative=not args.magma, rng=random.Random(args.seed))
    except NonAssociative as exc:
        return {"valid": False, "reason": "non-associative", "witness": list(exc.triple)}
    except NonClosed as exc:
        return {"valid": False, "reason": "not closed", "detail": str(exc)}
    return {"valid": True, "name": S.name, "n": S.n, "associative": S.associative}


def cmd_solve(args, spec):
    S = _semigroup(args, spec)
    rng = random.Random(args.seed)
    if args.winset is not None:
        f = indicator(S.n, parse_subset(args.winset, S.n))
    elif args.payoff is not None:
        f = parse_payoff(args.payoff, S.n, rng)
    else:
        raise InputError("one of --payoff or --winset is required")
    poly = invariant_measures(S)
    sol = solve_zero_sum(build_payoff_matrix(S, f))
    out = {
        "semigroup": S.name, "n": S.n, "payoff": f,
        "value": sol.value, "value_approx": approx(sol.value),
        "p_star": sol.p_star, "q_star": sol.q_star,
        "certificates": {"row_guarantee": sol.row_guarantee, "column_guarantee": sol.column_guarantee},
        "invariant_measure": poly.status,
        "note": "no invariant measure" if poly.empty else "",
    }
    if args.verify:
        rep = verify_main_theorem(S, f, poly)
        out["theorem"] = {
            "applicable": rep.applicable,
            "holds": rep.holds,
            "note": rep.note,
            "measures": rep.to_dict()["measures"],
            "check": "pass" if rep.holds else ("not applicable" if not rep.applicable else "FAIL"),
        }
    return out


def cmd_measures(args, spec):
    S = _semigroup(args, spec)
    poly = invariant_measures(S)
    out = poly.to_dict()
    if poly.empty:
        out["farkas"] = poly.farkas
        out["note"] = "no invariant measure: theorem not applicable"
    return out


def cmd_imbounds(args, spec):
    S = _semigroup(args, spec)
    if args.set is not None:
        f = indicator(S.n, parse_subset(args.set, S.n))
    elif args.payoff is not None:
        f = parse_payoff(args.payoff, S.n, random.Random(args.seed))
    else:
        raise InputError("one of --set or --payoff is required")
    poly = invariant_measures(S)
    if poly.empty:
        return {"semigroup": S.name, "status": "empty", "note": "no invariant measure"}
    lo, hi = im_bounds(poly, f)
    return {"semigroup": S.name, "status": "nonempty", "f_minus": lo, "f_plus": hi, "IM": lo == hi}


def cmd_tile(args, spec):
    S = _semigroup(args, spec)
    W = parse_subset(args.set, S.n)
    translates = [int(v) for v in args.translates.split(",")]
    tile = verify_tile(S, W, translates)
    out = {"semigroup": S.name, "set": W, "translates": translates, "is_tile": tile.is_tile,
           "k": tile.k, "images": tile.images, "uncovered": tile.uncovered,
           "overlap": list(tile.overlap) if tile.overlap else None}
    if tile.is_tile:
        if invariant_measures(S).empty:
            out["note"] = "no invariant measure"
        else:
            rep = tile_measure_check(S, W, translates)
            out.update(measure=rep.expected, measures=rep.measures, bounds=list(rep.bounds), ok=rep.ok)
    return out


def cmd_density(args, _):
    seq = parse_sequence(args.sequence)
    A = parse_set(args.set)
    if args.n is not None:
        r = density_along(seq, A, args.n)
        return {"sequence": seq.name, "set": args.set, "n": args.n, "ratio": r, "approx": approx(r)}
    schedule = [int(v) for v in args.schedule.split(",")] if args.schedule else None
    rep = limit_density(seq, A, schedule, window=args.window)
    if args.strict and rep.verdict == UNDECIDED:
        raise Undecided(f"density of {args.set} along {seq.name} undecided")
    return rep.to_dict()


def cmd_pn(args, _):
    A = parse_set(args.set)
    size = len(generate_pn(args.n))
    d = multiplicative_density(A, args.n)
    return {"n": args.n, "size": size, "expected_size": (args.n + 1) ** args.n, "set": args.set,
            "density": d, "approx": approx(d)}


def cmd_wtable(args, _):
    rows = [r.to_dict() for r in w_oscillation_table(args.jmax)]
    for r in rows:
        r["low_approx"] = approx(r["low_ratio"])
        r["high_approx"] = approx(r["high_ratio"])
    return {"rows": rows}


def cmd_wald(args, _):
    p = FiniteSupportStrategy.parse(args.support)
    t, v = wald_best_response(p)
    return {"support": [[pt, w] for pt, w in p.weights], "best_response": t, "payoff": v}


def cmd_fubini(args, _):
    runner = {"parity": parity_example, "wald": wald_example}[args.example]
    orders = [X_INNER, Y_INNER] if args.order == "both" else [args.order]
    out = {"example": args.example}
    for o in orders:
        rep = runner(o)
        if args.strict and rep.verdict == UNDECIDED:
            raise Undecided(f"{o} integral undecided")
        out[o] = rep.value if rep.value is not None else rep.verdict
        out[f"{o} report"] = rep.to_dict()
    return out


def cmd_benford(args, _):
    digits = [int(d) for d in args.digits]
    est = benford_density_estimate(digits, args.n)
    return {"digits": digits, "n": args.n, "estimate": est, "approx": approx(est), "label": "ESTIMATE"}


COMMANDS = {
    "validate": cmd_validate, "solve": cmd_solve, "measures": cmd_measures,
    "imbounds": cmd_imbounds, "tile": cmd_tile, "density": cmd_density, "pn": cmd_pn,
    "wtable": cmd_wtable, "wald": cmd_wald, "fubini": cmd_fubini, "benford": cmd_benford,
}



def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "table"], default="json")
    common.add_argument("--strict", action="store_true", help="exit 3 on undecided verdicts")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for batches")
    common.add_argument("--seed", type=int, default=0, help="seed for random:/random specs")

    parser = argparse.ArgumentParser(prog="semigroup-games", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def semigroup_cmd(name, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.add_argument("--semigroup", action="append", required=True,
                       help="cyclic:6, leftzero:3, minchain:4, product(cyclic:2,cyclic:3), csv:<file>; repeat for a batch")
        p.add_argument("--magma", action="store_true", help="accept non-associative tables")
        return p

    semigroup_cmd("validate", "check closure and associativity")
    p = semigroup_cmd("solve", "solve the game f(xy) exactly")
    p.add_argument("--payoff")
    p.add_argument("--winset")
    p.add_argument("--verify", action="store_true", help="check value = m(f) for invariant measures m")
    semigroup_cmd("measures", "invariant probability measures")
    p = semigroup_cmd("imbounds", "min/max of m(f) over invariant measures")
    p.add_argument("--set")
    p.add_argument("--payoff")
    p = semigroup_cmd("tile", "tile check and tile measure")
    p.add_argument("--set", required=True)
    p.add_argument("--translates", required=True)

    p = sub.add_parser("density", parents=[common], help="density along an averaging sequence")
    p.add_argument("--sequence", required=True, help="z, n[:base[:length]], evens+, evens-, progression:a:d, pn")
    p.add_argument("--set", required=True, help="residue:k:r, intervals:[a,b];..., wset, evens, benford:123, finite:{...}")
    p.add_argument("--n", type=int)
    p.add_argument("--schedule")
    p.add_argument("--window", type=int, default=5)

    p = sub.add_parser("pn", parents=[common], help="enumerate P_n and a multiplicative density")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--set", default="evens")

    p = sub.add_parser("wtable", parents=[common], help="density of W at the oscillation nodes")
    p.add_argument("--jmax", type=int, default=4)

    p = sub.add_parser("wald", parents=[common], help="best reply in pick-the-bigger-integer")
    p.add_argument("--support", required=True, help="point:weight,...")

    p = sub.add_parser("fubini", parents=[common], help="iterated asymptotic integrals")
    p.add_argument("--example", choices=["parity", "wald"], required=True)
    p.add_argument("--order", choices=[X_INNER, Y_INNER, "both"], default="both")

    p = sub.add_parser("benford", parents=[common], help="leading-digit share of P_n (estimate)")
    p.add_argument("--digits", default="123")
    p.add_argument("--n", type=int, required=True)
    return parser


def _run_one(args, spec):
    """Returns (exit code, report dict)."""
    t0 = time.perf_counter()
    inputs = {}
    if spec is not None:
        inputs["semigroup"] = _digest(spec)
    for key in ("payoff", "winset", "set", "support", "sequence"):
        val = getattr(args, key, None)
        if val is not None:
            inputs[key] = _digest(val)
    code = EXIT_OK
    try:
        results = COMMANDS[args.command](args, spec)
    except (AlgebraError, PayoffError, SetSpecError, InputError, FileNotFoundError, ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, (CapExceeded, PredicateNotCountable)):
            code, results = EXIT_CAP, {"error": str(exc)}
        else:
            code, results = EXIT_INPUT, {"error": str(exc)}
    except Undecided as exc:
        code, results = EXIT_CAP, {"error": str(exc)}
    report = {
        "command": " ".join([args.command] + ([spec] if spec else [])),
        "tool_version": __version__,
        "inputs": inputs,
        "results": jsonable(results),
        "duration_s": round(time.perf_counter() - t0, 4),
    }
    return code, report


def _flatten(obj, prefix=""):
    if isinstance(obj, dict):
        for k, v in obj.items():
            yield from _flatten(v, f"{prefix}.{k}" if prefix else str(k))
    elif isinstance(obj, list) and obj and all(isinstance(v, (dict, list)) for v in obj):
        for i, v in enumerate(obj):
            yield from _flatten(v, f"{prefix}[{i}]")
    else:
        yield prefix, obj if not isinstance(obj, list) else " ".join(map(str, obj))


def _tabular(results):
    if isinstance(results.get("rows"), list):
        rows = results["rows"]
        header = list(rows[0]) if rows else []
        return header, [[r.get(h) for h in header] for r in rows]
    if isinstance(results.get("samples"), list) and results["samples"]:
        header = list(results["samples"][0])
        return header, [[s[h] for h in header] for s in results["samples"]]
    return ["key", "value"], [list(kv) for kv in _flatten(results)]


def render(report, fmt_name):
    if fmt_name == "json":
        return json.dumps(report, sort_keys=True)
    header, rows = _tabular(report["results"])
    if fmt_name == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue().rstrip("\n")
    cells = [header] + [["" if v is None else str(v) for v in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells)


def _job(payload):
    argv, spec = payload
    args = build_parser().parse_args(argv)
    return _run_one(args, spec)


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    specs = getattr(args, "semigroup", None) or [None]
    if len(specs) > 1 and args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            outcomes = list(pool.map(_job, [(argv, s) for s in specs]))
    else:
        outcomes = [_run_one(args, s) for s in specs]
    for _, report in outcomes:
        print(render(report, args.format))
    return max(code for code, _ in outcomes)


if __name__ == "__main__":
    raise SystemExit(main())
