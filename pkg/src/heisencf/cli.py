"""``heisencf`` command line: JSON in, JSON out.

Exit codes: 0 success, 1 computation error, 2 not found or undecided,
64 bad usage (flags or unreadable input).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from importlib import resources

from . import serialize
from .cf import (
    DigitSequence,
    convergents,
    detect_period,
    distance_trace,
    euler_matrix,
    expand,
    lagrange_report,
    qproduct_check,
    vrelation_check,
)
from .errors import HeisenbergError, PrecisionCapError, SelectionError
from .gaussian import format_scalar
from .lattice import FundamentalDomainConfig, dirichlet_reduce, nearest_candidates
from .numfield import colinearity_certificate, fixed_point_of
from .selftest import run_all
from .siegel import HeisenbergPoint, ProjectivePoint, pairing, projective_to_planar
from .unitary import decompose_power4, is_root_of_unity, tokens_to_matrix, verify_unitary, word_to_matrix

EXIT_OK, EXIT_ERROR, EXIT_UNDECIDED, EXIT_USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# --------------------------------------------------------------------------
# input helpers


def _load(arg: str):
    if arg == "-":
        text = sys.stdin.read()
    elif os.path.isfile(arg):
        with open(arg) as fh:
            text = fh.read()
    else:
        text = arg
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise UsageError(f"input is neither a file nor valid JSON: {e}") from None


def _planar(obj) -> HeisenbergPoint:
    h = serialize.point_from_json(obj)
    if isinstance(h, ProjectivePoint):
        h = projective_to_planar(h)
    return h


def _matrix(obj):
    return serialize.matrix_from_json(obj)


def _matrix_and_point(obj, which: int = 0):
    M = _matrix(obj)
    h = _planar(obj["point"]) if isinstance(obj, dict) and "point" in obj else fixed_point_of(M, which)
    return M, h


def _floats(xs):
    return [None if x == float("inf") else x for x in xs]


# --------------------------------------------------------------------------
# subcommands; each returns (exit code, document)


def cmd_expand(obj, args, cfg):
    h = _planar(obj)
    tr = expand(h, args.n_max, cfg)
    return EXIT_OK, {
        "digits": [g.to_json() for g in tr.digits],
        "terminated": tr.terminated,
        "steps": len(tr.digits) - 1,
    }


def cmd_convergents(obj, args, cfg):
    if "preperiod" in obj:
        d = DigitSequence.from_json(obj)
        cs = convergents(d, None if d.period is None else args.n_max)
    else:
        cs = convergents(expand(_planar(obj), args.n_max, cfg))
    return EXIT_OK, {"convergents": [c.to_json() for c in cs]}


def cmd_period(obj, args, cfg):
    h = _planar(obj)
    d = detect_period(h, args.n_max, cfg)
    if d is None:
        return EXIT_UNDECIDED, {"status": "not-found", "max_steps": args.n_max}
    if d.period is None:
        return EXIT_OK, {"status": "terminating", "sequence": d.to_json()}
    cert = colinearity_certificate(euler_matrix(d), h)
    return (EXIT_OK if cert else EXIT_ERROR), {
        "status": "periodic",
        "sequence": d.to_json(),
        "certificate": cert,
    }


def cmd_euler(obj, args, cfg):
    d = DigitSequence.from_json(obj)
    M = euler_matrix(d)
    return EXIT_OK, {"matrix": M.to_json(), "unitary": verify_unitary(M)}


def cmd_lagrange(obj, args, cfg):
    M, h = _matrix_and_point(obj)
    r = lagrange_report(M, h, n_max=args.n_max, tolerance=args.tolerance, precision=max(512, args.precision_start))
    return EXIT_OK, {
        "point": serialize.point_to_json(h),
        "sequence": r.sequence.to_json(),
        "case": r.case,
        "branch": r.branch,
        "power_word": r.power_word.to_json(),
        "certified_at": r.certified_at,
        "euler_certificate": r.euler_certificate,
    }


def cmd_verify_relation(obj, args, cfg):
    if "x" in obj:
        x, y = (serialize.point_from_json(obj[k]) for k in ("x", "y"))
        x = x if isinstance(x, ProjectivePoint) else x.projective()
        y = y if isinstance(y, ProjectivePoint) else y.projective()
        return EXIT_OK, {"pairing": format_scalar(pairing(x, y)), "equal": x == y}
    M, h = _matrix_and_point(obj)
    return EXIT_OK, {
        "colinear": colinearity_certificate(M, h),
        "vrelation": vrelation_check(M, h, prec=max(256, args.precision_start)),
    }


def cmd_verify_unitary(obj, args, cfg):
    rows = obj["matrix"] if isinstance(obj, dict) else obj
    return EXIT_OK, {"unitary": verify_unitary(rows)}


def cmd_decompose(obj, args, cfg):
    M = _matrix(obj)
    w = decompose_power4(M)
    return EXIT_OK, {"word": w.to_json(), "power": 4, "round_trip": word_to_matrix(w) == M**4}


def cmd_torsion(obj, args, cfg):
    torsion, order = is_root_of_unity(_matrix(obj))
    return EXIT_OK, {"torsion": torsion, "order": order}


def cmd_nearest(obj, args, cfg):
    h = _planar(obj)
    try:
        g, h0 = dirichlet_reduce(h, cfg)
    except PrecisionCapError:
        cands = nearest_candidates(h, cfg, prec=cfg.precision_cap)
        return EXIT_UNDECIDED, {
            "status": "ambiguous",
            "candidates": [c.to_json() for c in sorted(cands, key=lambda c: c.sort_key())],
        }
    return EXIT_OK, {"status": "ok", "nearest": g.to_json(), "reduced": serialize.point_to_json(h0)}


def cmd_trace(obj, args, cfg):
    if "matrix" in obj:
        M, h = _matrix_and_point(obj)
        d = lagrange_report(
            M, h, n_max=max(200, args.n_max), tolerance=args.tolerance, precision=max(512, args.precision_start)
        ).sequence
    elif "sequence" in obj:
        d = DigitSequence.from_json(obj["sequence"])
        h = _planar(obj["point"])
    else:
        h = _planar(obj)
        d = DigitSequence(tuple(expand(h, args.n_max, cfg).digits), None)
    n = args.n_max if d.period is not None else min(args.n_max, len(d.preperiod) - 1)
    dist = _floats(distance_trace(h, d, n, max(512, args.precision_start)))
    return EXIT_OK, {"sequence": d.to_json(), "steps": [[i, x] for i, x in enumerate(dist)]}


def cmd_qcheck(obj, args, cfg):
    word = serialize.word_from_json(obj["word"] if isinstance(obj, dict) else obj)
    if word.leading is not None or word.trailing_j:
        raise UsageError("qcheck takes a word J T_g1 ... J T_gn given as its digit list")
    if isinstance(obj, dict) and "point" in obj:
        h = _planar(obj["point"])
    else:
        toks = []
        for g in word.body:
            toks += ["J", g]
        h = fixed_point_of(tokens_to_matrix(toks))
    return EXIT_OK, {"qproduct": qproduct_check(word, h, prec=max(256, args.precision_start))}


def cmd_selftest(obj, args, cfg):
    only = None if not args.only else {int(x) for x in args.only.split(",")}
    results = run_all(args.seed, only)
    passed = sum(r.passed for r in results)
    for r in results:
        print(r.line(), file=sys.stderr)
    doc = {
        "seed": args.seed,
        "passed": passed,
        "failed": len(results) - passed,
        "checks": [r.to_json() for r in results],
    }
    return (EXIT_OK if passed == len(results) else EXIT_ERROR), doc


COMMANDS = {
    "expand": (cmd_expand, "digits of a point's expansion"),
    "convergents": (cmd_convergents, "convergents of a point or a digit sequence"),
    "period": (cmd_period, "find an exact period of the expansion"),
    "euler": (cmd_euler, "matrix fixing the point of a periodic sequence"),
    "lagrange": (cmd_lagrange, "periodic expansion of a matrix's fixed point"),
    "verify-relation": (cmd_verify_relation, "pairing of two points, or the fixed-point relations"),
    "verify-unitary": (cmd_verify_unitary, "check M^dagger J M = J"),
    "decompose": (cmd_decompose, "write M^4 as a word in T_g and J"),
    "torsion": (cmd_torsion, "is M a root of unity"),
    "nearest": (cmd_nearest, "nearest integer point and reduced point"),
    "trace": (cmd_trace, "(n, distance to limit) pairs for plotting"),
    "qcheck": (cmd_qcheck, "product formula for Q' + QQ u - Q v"),
    "selftest": (cmd_selftest, "run the acceptance checks on a seeded corpus"),
}


def _positive(kind):
    def conv(s):
        x = kind(s)
        if x <= 0:
            raise argparse.ArgumentTypeError(f"must be positive, got {s}")
        return x

    return conv


def _tolerance(s):
    try:
        x = Fraction(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a decimal: {s}") from None
    if not 0 < x < 1:
        raise argparse.ArgumentTypeError("tolerance must lie in (0, 1)")
    return float(x)


def load_schema(command: str) -> dict:
    """The JSON schema shipped for a subcommand's output."""
    text = resources.files("heisencf").joinpath("schemas", f"{command}.json").read_text()
    return json.loads(text)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision-start", type=_positive(int), default=128, help="starting precision in bits")
    common.add_argument("--precision-cap", type=_positive(int), default=65536)
    common.add_argument("--n-max", type=_positive(int), default=200, help="step bound")
    common.add_argument("--tolerance", type=_tolerance, default=1e-8)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--output", "-o", help="write the JSON document here instead of stdout")
    common.add_argument("--tie-break", choices=["lex"], default="lex")

    p = _Parser(prog="heisencf", description="Continued fractions on the Heisenberg group.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, (_, help_) in COMMANDS.items():
        sp = sub.add_parser(name, help=help_, parents=[common])
        if name == "selftest":
            sp.add_argument("--only", help="comma-separated check numbers")
        else:
            sp.add_argument("input", help="inline JSON, a file path, or - for stdin")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.precision_cap < args.precision_start:
        print("heisencf: error: --precision-cap is below --precision-start", file=sys.stderr)
        return EXIT_USAGE
    cfg = FundamentalDomainConfig(
        tie_break=args.tie_break,
        precision_start=min(args.precision_start, args.precision_cap),
        precision_cap=args.precision_cap,
    )
    fn = COMMANDS[args.command][0]
    try:
        obj = None if args.command == "selftest" else _load(args.input)
        code, doc = fn(obj, args, cfg)
    except UsageError as e:
        print(f"heisencf: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (PrecisionCapError, SelectionError) as e:
        code, doc = EXIT_UNDECIDED, {"status": "undecided", "error": type(e).__name__, "message": str(e)}
    except (HeisenbergError, ValueError, KeyError, TypeError) as e:
        code, doc = EXIT_ERROR, {"status": "error", "error": type(e).__name__, "message": str(e)}
    text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
