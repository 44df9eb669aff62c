"""Command-line entry point ``cubic-congruences``.

Exit codes: 0 pass, 1 a checked statement is false, 2 usage or hypothesis
error, 3 expansion order above the ceiling.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .congruences import (
    ClaimTag,
    CongruenceClaim,
    DEFAULT_DEPTH,
    build_thm11_claims,
    build_thm31_claim,
    build_thm32_claim,
    confirm_claims,
    order_ceiling,
    reports_to_csv,
    search_congruences,
    verify_claims,
)
from .eta import eta_quotient_series, generalized_cubic_series, parse_eta_quotient
from .exceptions import HypothesisError, OracleMismatchError, ResourceLimitError
from .oracle import count_colored_partitions, enumerate_colored_partitions
from .series import EXACT, CoefficientRing
from .theta import (
    BilateralKind,
    check_ahlgren_relation,
    check_binomial_congruence,
    check_classical_identities,
    check_identity,
)

EXIT_PASS, EXIT_FALSE, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3

IDENTITY_NAMES = ["euler", "ramanujan22", "ramanujan32", "chan", "ramanujan-p5", "ahlgren", "binomial"]


class UsageError(Exception):
    pass


def _emit(obj, fmt: str, text: str | None = None):
    if fmt == "text" and text is not None:
        print(text)
    else:
        print(json.dumps(obj, indent=2, ensure_ascii=False))


def _ring(modulus):
    return EXACT if modulus is None else CoefficientRing(modulus)


def _guard_order(order: int):
    limit = order_ceiling()
    if order > limit:
        raise ResourceLimitError(f"expansion order {order} exceeds ceiling {limit}")


def cmd_expand(args) -> int:
    quotient = parse_eta_quotient(args.quotient)
    if args.order < 0:
        raise UsageError("--order must be >= 0")
    _guard_order(args.order)
    series = eta_quotient_series(quotient, args.order, _ring(args.mod))
    _emit(series.to_json(), args.format, str(series))
    return EXIT_PASS


def cmd_coeff(args) -> int:
    if (args.quotient is None) == (args.colors is None):
        raise UsageError("give exactly one of QUOTIENT or --colors")
    if args.n < 0:
        raise UsageError("--n must be >= 0")
    _guard_order(args.n)
    ring = _ring(args.mod)
    if args.colors is not None:
        series = generalized_cubic_series(args.colors, args.n, ring)
        label = f"a_{args.colors}"
    else:
        quotient = parse_eta_quotient(args.quotient)
        series = eta_quotient_series(quotient, args.n, ring)
        label = str(quotient)
    value = series[args.n]
    _emit({"series": label, "n": args.n, "ring": ring.to_json(), "value": str(value)},
          args.format, f"[q^{args.n}] {label} = {value}")
    return EXIT_PASS


def cmd_identity(args) -> int:
    name = args.name
    if name in ("euler", "ramanujan22", "ramanujan32"):
        kind = next(k for k in BilateralKind if k.label == name)
        reports = [check_identity(kind, args.order)]
    elif name in ("chan", "ramanujan-p5"):
        reports = [r for r in check_classical_identities(args.order) if r.name == name]
    else:
        if args.p is None:
            raise UsageError(f"identity {name} requires --p")
        if name == "ahlgren":
            reports = [check_ahlgren_relation(args.p, args.n_max)]
        else:
            reports = [check_binomial_congruence(args.p, args.order)]
    rep = reports[0]
    text = f"{rep.name}: {'pass' if rep.passed else 'FAIL'} to order {rep.order}"
    if "epsilon" in rep.details:
        text += f", ε={rep.details['epsilon']:+d}, offset {rep.details['offset']}"
    if not rep.passed:
        text += f"; first mismatch at {rep.first_mismatch}: {rep.lhs} != {rep.rhs}"
    _emit(rep.to_dict(), args.format, text)
    return EXIT_PASS if rep.passed else EXIT_FALSE


def _claims_for(args) -> list[CongruenceClaim]:
    family = "custom" if args.custom else args.family
    if family is None:
        raise UsageError("choose --family {thm11,thm31,thm32,custom} or --custom")
    if family == "thm11":
        return list(build_thm11_claims())
    if family in ("thm31", "thm32"):
        if args.p is None:
            raise UsageError(f"family {family} requires --p")
        build = build_thm31_claim if family == "thm31" else build_thm32_claim
        return [build(args.p)]
    missing = [flag for flag in ("c", "p", "r", "m") if getattr(args, flag) is None]
    if missing:
        raise UsageError("custom claims need " + ", ".join(f"--{f}" for f in missing))
    try:
        return [CongruenceClaim(args.c, args.p, args.r, args.m, ClaimTag.CUSTOM)]
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _report_text(rep) -> str:
    status = "pass" if rep.passed else f"FAIL at n={rep.first_fail_n} (residue {rep.residue})"
    return f"{rep.claim} [{rep.claim.tag.value}] depth {rep.depth}: {status}"


def cmd_verify(args) -> int:
    claims = _claims_for(args)
    reports = verify_claims(claims, args.depth, jobs=args.jobs)
    if args.format == "csv":
        sys.stdout.write(reports_to_csv(reports))
    else:
        _emit([r.to_dict() for r in reports], args.format, "\n".join(_report_text(r) for r in reports))
    return EXIT_PASS if all(r.passed for r in reports) else EXIT_FALSE


def cmd_search(args) -> int:
    claims = search_congruences(args.c_max, args.p_max, args.depth)
    confirm_depth = args.confirm_depth or 2 * args.depth
    reports = confirm_claims(claims, confirm_depth, jobs=args.jobs)
    if args.format == "csv":
        sys.stdout.write(reports_to_csv(reports))
    elif args.format == "text":
        print("\n".join(_report_text(r) for r in reports))
    else:
        rows = [dict(r.claim.to_dict(), depth=args.depth, confirm_depth=confirm_depth, confirmed=r.passed)
                for r in reports]
        _emit(rows, "json")
    return EXIT_PASS


def cmd_oracle(args) -> int:
    if args.n < 0 or args.c < 1:
        raise UsageError("need --n >= 0 and --c >= 1")
    out = {"n": args.n, "c": args.c, "count": str(count_colored_partitions(args.n, args.c))}
    if args.enumerate or args.list:
        try:
            total, listing = enumerate_colored_partitions(args.n, args.c, listing=True)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        out["enumerated"] = str(total)
        if args.list:
            out["partitions"] = [[list(pair) for pair in part] for part in listing]
    _emit(out, args.format, f"a_{args.c}({args.n}) = {out['count']}")
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cubic-congruences",
                                     description="Exact q-series checks of generalized cubic partition congruences.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p, choices=("json", "text")):
        p.add_argument("--format", choices=choices, default="json")

    p = sub.add_parser("expand", help="expand an eta-quotient such as f1^-1*f2^-2")
    p.add_argument("quotient")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--mod", type=int)
    fmt(p)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("coeff", help="one coefficient of an eta-quotient or of 1/(f1 f2^(c-1))")
    p.add_argument("quotient", nargs="?")
    p.add_argument("--colors", type=int)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mod", type=int)
    fmt(p)
    p.set_defaults(func=cmd_coeff)

    p = sub.add_parser("identity", help="check a q-series identity exactly")
    p.add_argument("name", choices=IDENTITY_NAMES)
    p.add_argument("--order", type=int, default=500)
    p.add_argument("--p", type=int)
    p.add_argument("--n-max", type=int, default=200)
    fmt(p)
    p.set_defaults(func=cmd_identity)

    p = sub.add_parser("verify", help="verify congruence claims to a finite depth")
    p.add_argument("--family", choices=["thm11", "thm31", "thm32", "custom"])
    p.add_argument("--custom", action="store_true", help="same as --family custom")
    for flag in ("c", "p", "r", "m"):
        p.add_argument(f"--{flag}", type=int)
    p.add_argument("--depth", type=int, default=DEFAULT_DEPTH)
    p.add_argument("--jobs", type=int, default=1)
    fmt(p, ("json", "csv", "text"))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="scan a_c(pn+r) = 0 (mod p) over small c, p, r")
    p.add_argument("--c-max", type=int, default=5)
    p.add_argument("--p-max", type=int, default=11)
    p.add_argument("--depth", type=int, default=DEFAULT_DEPTH)
    p.add_argument("--confirm-depth", type=int, help="re-check depth (default: twice --depth)")
    p.add_argument("--jobs", type=int, default=1)
    fmt(p, ("json", "csv", "text"))
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("oracle", help="count generalized cubic partitions combinatorially")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--enumerate", action="store_true", help="also count by listing (n <= 20)")
    p.add_argument("--list", action="store_true", help="include the partitions themselves")
    fmt(p)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except OracleMismatchError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_FALSE
    except (UsageError, HypothesisError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
