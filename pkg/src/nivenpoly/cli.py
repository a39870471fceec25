"""Command-line front end.

Exit status is 0 when every verdict holds, 1 when a verdict fails and 2 for
usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from .errors import ArityError, InvalidInputError, NivenPolyError, NotSymmetricError, ParseError
from .mpoly import format_mpoly, is_symmetric, mpoly_to_json
from .niven import common_denominator, dominates, e_case, find_p, pi_coeff_values, pi_construct
from .parser import parse_poly
from .symfund import mesym, symf, vieta
from .upoly import format_upoly, upoly_to_json

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _rationals(text: str) -> list[Fraction]:
    try:
        return [Fraction(x.strip()) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"invalid rational list {text!r}") from exc


def _ints(text: str) -> list[int]:
    try:
        return [int(x.strip()) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"invalid integer list {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nivenpoly",
        description="Symmetric polynomial decomposition and transcendence-skeleton checks.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--out", help="also write the output to this file")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-sym", parents=[common], help="test a polynomial for symmetry")
    p.add_argument("expr")
    p.add_argument("-n", "--n", type=int, dest="arity")

    p = sub.add_parser("decompose", parents=[common], help="write a symmetric polynomial in σ_1..σ_n")
    p.add_argument("expr")
    p.add_argument("-n", "--n", type=int, dest="arity")
    p.add_argument("--verify", action="store_true", help="re-run the recomposition certificate")
    p.add_argument("--fuel", type=int)

    p = sub.add_parser("mesym", parents=[common], help="print σ_{n,k}")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=int, required=True)

    p = sub.add_parser("vieta", parents=[common], help="expand c * prod(X - r)")
    p.add_argument("--c", type=Fraction, default=Fraction(1))
    p.add_argument("--roots", type=_rationals, default=[])

    p = sub.add_parser("niven-e", parents=[common], help="run the e-case skeleton")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--coeffs", type=_ints, required=True)
    p.add_argument("--p", type=int)
    p.add_argument("--tol", type=float, default=1e-8)

    p = sub.add_parser("niven-pi", parents=[common], help="run the π-case subset-sum construction")
    p.add_argument("--npi", type=int, required=True)
    p.add_argument("--coeffs", type=_rationals, help="b_0,...,b_{n-1} of a monic B")

    p = sub.add_parser("findp", parents=[common], help="smallest prime with a*b^(p-1) < (p-1)!")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--bounds", type=_ints, default=[])
    return parser


def _cmd_check_sym(args):
    poly = parse_poly(args.expr, args.arity)
    sym = is_symmetric(poly)
    if args.json:
        return {"poly": mpoly_to_json(poly), "symmetric": sym}, sym
    return ("symmetric" if sym else "not symmetric"), sym


def _cmd_decompose(args):
    poly = parse_poly(args.expr, args.arity)
    try:
        d = symf(poly, args.fuel)
    except NotSymmetricError:
        if args.json:
            return {"symmetric": False, "verified": False}, False
        return "not symmetric", False
    verified = d.verify() if args.verify else True
    weight_ok = d.weight_bound <= d.input_degree
    ok = verified and weight_ok
    if args.json:
        data = d.to_json(verified=verified if args.verify else None)
        return data, ok and data["verified"]
    lines = [
        f"t = {format_mpoly(d.t)}",
        f"iterations {d.iterations}",
        f"weight {d.weight_bound} {'<=' if weight_ok else '>'} degree {d.input_degree}",
    ]
    if args.verify:
        lines.append("verified" if verified else "verification FAILED")
    return "\n".join(lines), ok


def _cmd_mesym(args):
    if args.n < 0 or args.k < 0:
        raise InvalidInputError("n and k must be natural numbers")
    poly = mesym(args.n, args.k)
    return (mpoly_to_json(poly) if args.json else format_mpoly(poly)), True


def _cmd_vieta(args):
    P = vieta(args.c, args.roots)
    return (upoly_to_json(P) if args.json else format_upoly(P)), True


def _cmd_niven_e(args):
    report = e_case(args.degree, args.coeffs, args.p, args.tol)
    if args.json:
        return report.to_json(), report.ok
    p = report.p_used
    mark = lambda b: "ok" if b else "FAIL"  # noqa: E731
    lines = [
        f"p = {p} (smallest admissible prime: {report.bound_p})",
        f"deg F_p = {report.Fp_degree}",
        f"derivative tail: every coefficient of the derivative tail divisible by {p}!: {mark(report.lemma3)}",
        f"G_p integral: {mark(report.Gp_integer)}",
        f"root multiplicities: {mark(report.root_multiplicities_ok)}",
        f"F_pd(0) = (p-1)! T(0)^p + p! G_p(0): {mark(report.Fpd0_decomposition_ok)}",
        f"F_pd(alpha_i) = p! G_p(alpha_i): {mark(report.Fpd_alpha_divisible)}",
        f"E'_p = {report.E_prime}",
        f"{p - 1}! divides E'_p: {mark(report.divisible_by_fact_p_minus_1)}",
        f"{p}! does not divide E'_p: {mark(not report.divisible_by_fact_p)}",
        "quadrature residuals: " + ", ".join(f"{r:.3e}" for r in report.quadrature_residuals),
        "all verdicts hold" if report.ok else "some verdict FAILED",
    ]
    return "\n".join(lines), report.ok


def _cmd_niven_pi(args):
    construction = pi_construct(args.npi)
    ok = all(d.verify() for d in construction.decompositions)
    values = pi_coeff_values(args.npi, args.coeffs) if args.coeffs is not None else None
    if args.json:
        data = {
            "n_pi": args.npi,
            "alpha_prime": [mpoly_to_json(q) for q in construction.alpha_prime],
            "decompositions": [d.to_json() for d in construction.decompositions],
            "verified": ok,
        }
        if values is not None:
            data["coeff_values"] = [str(v) for v in values]
            data["common_denominator"] = common_denominator(values)
        return data, ok
    lines = [
        f"{len(construction.alpha_prime)} subset sums: "
        + ", ".join(format_mpoly(q) for q in construction.alpha_prime)
    ]
    for i, d in enumerate(construction.decompositions):
        lines.append(f"[X^{i}] t = {format_mpoly(d.t)}")
    if values is not None:
        from .upoly import UPoly

        lines.append(f"product = {format_upoly(UPoly(values))}")
        lines.append(f"common denominator = {common_denominator(values)}")
    lines.append("verified" if ok else "verification FAILED")
    return "\n".join(lines), ok


def _cmd_findp(args):
    p = find_p(args.a, args.b, args.bounds)
    ok = dominates(args.a, args.b, p)
    if args.json:
        return {"p": p, "a": args.a, "b": args.b, "bounds": args.bounds, "verified": ok}, ok
    return str(p), ok


_COMMANDS = {
    "check-sym": _cmd_check_sym,
    "decompose": _cmd_decompose,
    "mesym": _cmd_mesym,
    "vieta": _cmd_vieta,
    "niven-e": _cmd_niven_e,
    "niven-pi": _cmd_niven_pi,
    "findp": _cmd_findp,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        output, ok = _COMMANDS[args.command](args)
    except (ParseError, ArityError, InvalidInputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NivenPolyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    text = json.dumps(output, indent=2) if args.json else output
    print(text)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    return EXIT_OK if ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
