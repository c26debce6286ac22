"""Command-line front end. Every command writes JSON lines; every integer is
written as a decimal string."""

from __future__ import annotations

import argparse
import json
import os
import sys
from collections import Counter
from datetime import datetime, timezone
from fractions import Fraction
from typing import Any, Iterable

from . import designs, johnson, oracle, sieve1, sieve2
from .bigmath import ratio_to_str, square_witness, to_decimal

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_TOO_LARGE = 3


def encode(value: Any) -> Any:
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return to_decimal(value)
    if isinstance(value, Fraction):
        return ratio_to_str(value)
    if isinstance(value, johnson.CodeSubset):
        return str(value)
    if isinstance(value, dict):
        return {str(k): encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    raise TypeError(f"cannot encode {type(value).__name__}")


class Reporter:
    def __init__(self, stream, timestamps: bool = True):
        self.stream = stream
        self.timestamps = timestamps

    def emit(self, command: str, parameters: dict, verdict: str, reason: str | None = None,
             witnesses: dict | None = None) -> None:
        rec = {
            "command": command,
            "parameters": encode(parameters),
            "verdict": verdict,
            "reason": reason or "",
            "witnesses": encode(witnesses or {}),
        }
        if self.timestamps:
            rec["timestamp"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
        self.stream.write(json.dumps(rec, separators=(",", ":")) + "\n")


def nonneg_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="johnson-perfect",
        description="Necessary conditions and exhaustive search for perfect codes in J(n, w).")
    parser.add_argument("--out", help="write JSON lines here instead of stdout")
    parser.add_argument("--no-timestamp", action="store_true",
                        help="omit timestamps so repeated runs are byte-identical")
    sub = parser.add_subparsers(dest="command", required=True)

    def wae(p, with_t=False):
        p.add_argument("--w", type=nonneg_int, required=True)
        p.add_argument("--a", type=nonneg_int, required=True)
        p.add_argument("--e", type=nonneg_int, required=True)
        if with_t:
            p.add_argument("--t", type=nonneg_int, required=True)

    wae(sub.add_parser("sphere", help="sphere size Phi_e(w, a)"))
    p = sub.add_parser("strength", help="design strength from the sigma polynomial")
    wae(p)
    p.add_argument("--trace", action="store_true", help="include every sigma value scanned")
    wae(sub.add_parser("lambda", help="lambda_t of the induced t-design"), with_t=True)

    p = sub.add_parser("sieve1", help="1-perfect sieve over a range of w")
    p.add_argument("--w-min", type=nonneg_int, required=True)
    p.add_argument("--w-max", type=nonneg_int, required=True)
    p.add_argument("--lambda-cap", type=nonneg_int, default=sieve1.DEFAULT_LAMBDA_CAP,
                   help="number of t below the strength to test (default %(default)s)")
    p.add_argument("--lambda-full", action="store_true", help="test lambda_t for every t")
    p.add_argument("--include-nonintegral", action="store_true",
                   help="also emit (w, d) pairs where a is not an integer")
    p.add_argument("--survivors-only", action="store_true")
    p.add_argument("--threads", type=nonneg_int, default=os.cpu_count() or 1)

    p = sub.add_parser("sieve2", help="Pell-equation sieve for 2-perfect codes in J(2w, w)")
    p.add_argument("--m-max", type=nonneg_int, required=True)
    p.add_argument("--full", action="store_true",
                   help="write w, gamma and alpha in full for every m, not just survivors")

    p = sub.add_parser("pell", help="m-th solution of x^2 - 2y^2 = -1")
    p.add_argument("--m", type=nonneg_int, required=True)

    p = sub.add_parser("oracle", help="exhaustive exact-cover search in J(n, w)")
    p.add_argument("--n", type=nonneg_int, required=True)
    p.add_argument("--w", type=nonneg_int, required=True)
    p.add_argument("--e", type=nonneg_int, required=True)
    p.add_argument("--all", action="store_true", help="enumerate every code")
    p.add_argument("--max-universe", type=nonneg_int, default=oracle.DEFAULT_MAX_UNIVERSE)
    return parser


def cmd_sphere(args, rep: Reporter) -> None:
    p = johnson.JohnsonParams(args.w, args.a, args.e)
    rep.emit("sphere", {"w": p.w, "a": p.a, "e": p.e}, "OK",
             witnesses={"n": p.n, "sphere_size": johnson.sphere_size(p)})


def cmd_strength(args, rep: Reporter) -> None:
    r = designs.strength(args.e, args.w, args.a)
    wit: dict[str, Any] = {"phi": r.phi, "roots": list(r.roots),
                           "multiple_roots": r.multiple_roots}
    if args.e in (1, 2) and not (args.e == 2 and args.a):
        wit["closed_form"] = designs.closed_form_strengths(args.e, args.w, args.a)
    if r.note:
        wit["note"] = r.note
    if args.trace:
        wit["sigma_at_t_plus_1"] = r.witness
    params = {"w": args.w, "a": args.a, "e": args.e}
    if r.phi is None:
        rep.emit("strength", params, "FAIL", "strength-not-integral", wit)
    else:
        rep.emit("strength", params, "PASS", witnesses=wit)


def cmd_lambda(args, rep: Reporter) -> None:
    d = designs.design_params(args.e, args.w, args.a, args.t)
    p = johnson.JohnsonParams(args.w, args.a, args.e)
    wit = {"lambda": d.lambda_t, "binomial": [2 * p.w + p.a - d.t, p.w - d.t],
           "sphere": johnson.sphere_size(p)}
    params = {"w": args.w, "a": args.a, "e": args.e, "t": args.t}
    if d.integral:
        rep.emit("lambda", params, "PASS", witnesses=wit)
    else:
        rep.emit("lambda", params, "FAIL", "lambda-fail", wit)


def cmd_sieve1(args, rep: Reporter) -> None:
    if args.w_min > args.w_max:
        raise ValueError(f"--w-min {args.w_min} exceeds --w-max {args.w_max}")
    cap = None if args.lambda_full else args.lambda_cap
    tally: Counter = Counter()
    survivors = []
    for c in sieve1.iter_sieve1(args.w_min, args.w_max, cap, args.include_nonintegral,
                                workers=max(1, args.threads)):
        tally[c.reason or "survivor"] += 1
        if c.passed:
            survivors.append(c)
        if args.survivors_only and not c.passed:
            continue
        rep.emit("sieve1", {"w": c.w, "d": c.d}, c.verdict, c.reason,
                 {"a": c.a, **c.witness})
    rep.emit("sieve1", {"w_min": args.w_min, "w_max": args.w_max, "lambda_cap": cap},
             "SUMMARY", witnesses={
                 "counts": dict(sorted(tally.items())),
                 "survivors": len(survivors),
                 "min_survivor_d": min((c.d for c in survivors), default=None),
                 "all_survivors_d_at_least_12": all(c.d >= 12 for c in survivors),
             })


def _square_record(n: int) -> dict:
    w = square_witness(n)
    if "root" in w:
        return {"square": w["square"], "floor_root": w["root"]}
    return w


def cmd_sieve2(args, rep: Reporter) -> None:
    gamma_squares, square_survivors, survivors = [], [], []
    last = None
    for c in sieve2.iter_sieve2(args.m_max):
        last = c
        if c.gamma_square:
            gamma_squares.append((c.m, c.gamma))
        if c.gamma_square or c.alpha_square:
            square_survivors.append(c.m)
        if c.passed:
            survivors.append((c.m, c.w))
        wit: dict[str, Any] = {"w_digits": len(to_decimal(c.w)), "w_mod60": c.w % 60}
        if args.full or c.gamma_square or c.alpha_square:
            wit.update(w=c.w, gamma=c.gamma, alpha=c.alpha_candidate)
        wit["gamma_square"] = _square_record(c.gamma)
        wit["alpha_square"] = _square_record(c.alpha_candidate)
        rep.emit("sieve2", {"m": c.m}, c.verdict, c.reason, wit)
    front = sieve2.frontier_summary(last.w)
    rep.emit("sieve2", {"m_max": args.m_max}, "SUMMARY", witnesses={
        "gamma_square_m": [m for m, _ in gamma_squares],
        "gamma_square_values": [g for _, g in gamma_squares],
        "square_survivor_m": square_survivors,
        "survivor_m": [m for m, _ in survivors],
        "survivor_w": [w for _, w in survivors],
        "frontier_digits": front["digits"],
        "frontier_leading": front["leading"],
        "frontier_w": last.w,
    })


def cmd_pell(args, rep: Reporter) -> None:
    s = sieve2.pell_solution(args.m)
    rep.emit("pell", {"m": args.m}, "OK", witnesses={
        "x": s.x, "y": s.y, "w": sieve2.w_from_solution(s), "check": s.check()})


def cmd_oracle(args, rep: Reporter) -> None:
    r = oracle.search_perfect_codes(args.n, args.w, args.e, enumerate_all=args.all,
                                    max_universe=args.max_universe)
    rep.emit("oracle", {"n": args.n, "w": args.w, "e": args.e, "all": args.all},
             "FOUND" if r.exists else "NONE", None if r.exists else "no-exact-cover", {
                 "codes": [list(c) for c in r.codes],
                 "families": r.families,
                 "counts": r.counts,
                 "complete": r.complete,
                 "quick_divisibility": r.divisibility.passed,
                 **r.divisibility.witness,
             })


COMMANDS = {
    "sphere": cmd_sphere, "strength": cmd_strength, "lambda": cmd_lambda,
    "sieve1": cmd_sieve1, "sieve2": cmd_sieve2, "pell": cmd_pell, "oracle": cmd_oracle,
}


def main(argv: Iterable[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = open(args.out, "w", encoding="utf-8", newline="\n") if args.out else sys.stdout
    try:
        COMMANDS[args.command](args, Reporter(out, timestamps=not args.no_timestamp))
    except oracle.InstanceTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        if args.out:
            out.close()
        else:
            out.flush()
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
