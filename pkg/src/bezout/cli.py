"""``bezout`` command line front end.

Exit status: 0 success, 1 parse or usage error, 2 precondition violation,
3 theorem violation (an implementation bug, never expected).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from .errors import BezoutError, ParseError, PreconditionError, TheoremViolation
from .linalg import KernelBasis, nullity
from .matrix import ExactMatrix
from .poly import degree, euclid_gcd, format_rational, parse_poly
from .sampling import random_poly, random_rational
from .theory import (
    BezoutPair,
    bezoutian_hankel_toeplitz,
    gcd_report,
    kernel_param_of_multiplication_operator,
    resultant_matrix,
    verify_block_factorization,
    verify_congruence_identity,
    verify_resultant_action,
)

COMMANDS = ("bezoutian", "resultant", "nullity", "gcd-degree", "kernel", "verify", "report")
ACTION_POINTS = (Fraction(0), Fraction(1), Fraction(-1), Fraction(2), Fraction(1, 2))


class UsageError(BezoutError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("-f", "--poly-f", metavar="EXPR")
    common.add_argument("-g", "--poly-g", metavar="EXPR")
    common.add_argument("--size", type=int, metavar="N", help="working size n (default max(deg f, deg g))")
    common.add_argument("--format", choices=("json", "plain", "latex"), default=None)
    common.add_argument("--var", default="z", help="polynomial variable (default z)")

    parser = _Parser(prog="bezout", description="Bezoutian and resultant matrices with exact nullities.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True
    sub.add_parser("bezoutian", parents=[common], help="print the Bezoutian matrix B")
    sub.add_parser("resultant", parents=[common], help="print the resultant matrix R")
    p = sub.add_parser("nullity", parents=[common], help="print nullity(B) and nullity(R)")
    p.add_argument("--matrix-in", metavar="PATH", help="developer flag: nullity of a JSON matrix file ('-' for stdin)")
    sub.add_parser("gcd-degree", parents=[common], help="Euclidean gcd degree next to nullity(B)")
    sub.add_parser("kernel", parents=[common], help="parametrized kernel basis of (u, v) -> f u + g v")
    p = sub.add_parser("verify", parents=[common], help="check the matrix identities")
    p.add_argument("--random", type=int, metavar="COUNT", help="check COUNT seeded random pairs instead")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-degree", type=int, default=8)
    sub.add_parser("report", parents=[common], help="full JSON report")
    return parser


def _pair_from_args(args) -> BezoutPair:
    if args.poly_f is None or args.poly_g is None:
        raise UsageError("both -f/--poly-f and -g/--poly-g are required")
    f = parse_poly(args.poly_f, args.var)
    g = parse_poly(args.poly_g, args.var)
    try:
        return BezoutPair.of(f, g, args.size)
    except PreconditionError as exc:
        raise UsageError(str(exc)) from exc


def _emit_matrix(m: ExactMatrix, fmt: str) -> str:
    if fmt == "json":
        return m.to_json()
    if fmt == "latex":
        return m.to_latex()
    return m.to_plain()


def _read_matrix(path: str) -> ExactMatrix:
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
        return ExactMatrix.from_json(text)
    except (OSError, ValueError, KeyError, TypeError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot read matrix from {path}: {exc}") from exc


def _cmd_nullity(args, out):
    fmt = args.format or "plain"
    if args.matrix_in:
        k = nullity(_read_matrix(args.matrix_in))
        out.append(json.dumps({"nullity": k}) if fmt == "json" else str(k))
        return
    pair = _pair_from_args(args)
    nb = nullity(bezoutian_hankel_toeplitz(pair))
    nr = nullity(resultant_matrix(pair))
    if fmt == "json":
        out.append(json.dumps({"n": pair.n, "nullity_B": nb, "nullity_R": nr}))
    else:
        out.append(f"nullity_B = {nb}\nnullity_R = {nr}")


def _cmd_gcd_degree(args, out):
    fmt = args.format or "plain"
    pair = _pair_from_args(args)
    h = euclid_gcd(pair.f, pair.g)
    nb = nullity(bezoutian_hankel_toeplitz(pair))
    inf = pair.n - pair.m
    if fmt == "json":
        out.append(json.dumps({
            "gcd": h.to_text(args.var),
            "gcd_degree_euclid": degree(h),
            "infinity_multiplicity": inf,
            "nullity_B": nb,
        }))
    else:
        out.append(f"euclid: deg gcd = {degree(h)} (+{inf} at infinity) = {degree(h) + inf}    nullity(B) = {nb}")


def _kernel_text(basis: KernelBasis, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(basis.to_dict())
    if fmt == "latex":
        return basis.as_columns().to_latex() if len(basis) else "\\varnothing"
    return "\n".join(" ".join(format_rational(x) for x in v) for v in basis.vectors)


def _check_pair(pair: BezoutPair, points) -> dict:
    results = {
        "resultant_action": all(verify_resultant_action(pair, z) for z in points),
        "congruence_identity": verify_congruence_identity(pair),
    }
    try:
        results["block_factorization"] = verify_block_factorization(pair)
    except PreconditionError:
        results["block_factorization"] = None
    return results


def _random_case(seed: int, index: int, max_degree: int) -> tuple[BezoutPair, list[Fraction]]:
    rng = random.Random(f"{seed}:{index}")
    n = rng.randint(1, max(1, max_degree))
    f = random_poly(rng, n, 50)
    g = random_poly(rng, rng.randint(0, n), 50)
    points = [random_rational(rng, 50) for _ in range(3)]
    return BezoutPair(f, g, n), points


def _cmd_verify(args, out):
    fmt = args.format or "plain"
    if args.random is not None:
        if args.random < 1 or args.max_degree < 1:
            raise UsageError("--random and --max-degree must be positive")
        failures = []
        for i in range(args.random):
            pair, points = _random_case(args.seed, i, args.max_degree)
            if not all(_check_pair(pair, points).values()):
                failures.append(i)
        held = args.random - len(failures)
        if fmt == "json":
            out.append(json.dumps({"pairs": args.random, "passed": held, "failed_indices": failures, "seed": args.seed}))
        else:
            out.append(f"{held}/{args.random} identities hold")
        if failures:
            raise TheoremViolation(f"identities failed for random pairs {failures}")
        return

    pair = _pair_from_args(args)
    results = _check_pair(pair, ACTION_POINTS)
    if fmt == "json":
        out.append(json.dumps(results))
    else:
        for name, ok in results.items():
            out.append(f"{name}: {'skipped' if ok is None else 'ok' if ok else 'FAILED'}")
    if any(ok is False for ok in results.values()):
        raise TheoremViolation("a matrix identity failed")
    if results["block_factorization"] is None:
        raise PreconditionError(f"block factorization needs deg f = n = {pair.n}, got deg f = {degree(pair.f)}")


def _cmd_report(args, out):
    pair = _pair_from_args(args)
    report = gcd_report(pair)
    if args.format == "plain":
        out.extend(f"{k}: {v}" for k, v in report.to_dict().items())
    else:
        out.append(json.dumps(report.to_dict()))


def run(argv: list[str], stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    out: list[str] = []
    status = 0
    try:
        args = build_parser().parse_args(argv)
        if len(args.var) != 1 or not args.var.isalpha():
            raise UsageError("--var must be a single letter")
        cmd = args.command
        if cmd in ("bezoutian", "resultant"):
            pair = _pair_from_args(args)
            m = bezoutian_hankel_toeplitz(pair) if cmd == "bezoutian" else resultant_matrix(pair)
            out.append(_emit_matrix(m, args.format or "plain"))
        elif cmd == "nullity":
            _cmd_nullity(args, out)
        elif cmd == "gcd-degree":
            _cmd_gcd_degree(args, out)
        elif cmd == "kernel":
            basis = kernel_param_of_multiplication_operator(_pair_from_args(args))
            out.append(_kernel_text(basis, args.format or "plain"))
        elif cmd == "verify":
            _cmd_verify(args, out)
        elif cmd == "report":
            _cmd_report(args, out)
    except ParseError as exc:
        print(f"bezout: parse error: {exc}\n{exc.pointer()}", file=stderr)
        status = 1
    except UsageError as exc:
        print(f"bezout: usage error: {exc}", file=stderr)
        status = 1
    except TheoremViolation as exc:
        print(f"bezout: THEOREM VIOLATION: {exc}", file=stderr)
        status = 3
    except PreconditionError as exc:
        print(f"bezout: precondition violated: {exc}", file=stderr)
        status = 2
    for chunk in out:
        if chunk:
            print(chunk, file=stdout)
    return status


def main(argv: list[str] | None = None) -> None:
    sys.exit(run(sys.argv[1:] if argv is None else argv))
