"""``symprod`` command-line front end.

Every command prints one JSON object (sorted keys, two-space indent) carrying
``schema_version``.  Exit codes: 0 success, 1 validation error, 2 guard breach.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import genseries
from .exactalg import (
    Poly,
    format_laurent,
    format_rational,
    is_laurent,
    laurent_to_json,
    parse_laurent,
    parse_rational,
    poly_to_json,
    series_to_json,
)
from .homclass import class_from_json, class_to_json
from .partitions import enumerate_partitions, parse_partition, partition_key
from .symfunc import SYMMETRIC, specialize_p
from .symgroup import (
    ClassFunction,
    GuardError,
    alternating_group,
    all_permutations,
    induced_trivial_character,
    irreducible_character,
    parse_cycles,
    regular_character,
    sign_character,
    subgroup_closure,
    trivial_character,
)
from .verify import SCHEMA_VERSION, VerifyConfig, run_verify


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; 2 is reserved for guard breaches here
    def error(self, message):
        raise UsageError(message)


def _laurent_out(f: Poly) -> dict:
    if is_laurent(f):
        return {"value": laurent_to_json(f), "text": format_laurent(f)}
    return {"value": poly_to_json(f), "text": str(f)}


def _read_json(text: str):
    if text.startswith("@"):
        text = Path(text[1:]).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed JSON: {exc.msg} at position {exc.pos}") from None


def _class_arg(args):
    if args.cls is None:
        raise ValueError("--class is required")
    return class_from_json(_read_json(args.cls))


def _chi_arg(args) -> Poly:
    if args.chi is None:
        raise ValueError("--chi is required")
    return parse_laurent(args.chi)


def _need(value, flag):
    if value is None:
        raise ValueError(f"{flag} is required")
    return value


def _subgroup(n: int, specs: list[str] | None):
    specs = specs or []
    if "sym" in specs:
        return all_permutations(n)
    if "alt" in specs:
        return alternating_group(n)
    return subgroup_closure([parse_cycles(s, n) for s in specs], n)


def _representation(n: int, text: str, subgroup_specs) -> ClassFunction:
    """trivial | sign | regular | induced | a partition like [2,1] | raw JSON {"[2,1]": "1", ...}."""
    text = text.strip()
    if text == "trivial":
        return trivial_character(n)
    if text == "sign":
        return sign_character(n)
    if text == "regular":
        return regular_character(n)
    if text == "induced":
        return induced_trivial_character(_subgroup(n, subgroup_specs), n)
    if text.startswith("{"):
        raw = _read_json(text)
        values = {parse_partition(k): parse_rational(v) for k, v in raw.items()}
        for lam in enumerate_partitions(n):
            values.setdefault(lam, Fraction(0))
        return ClassFunction(n, values)
    mu = parse_partition(text.removeprefix("irreducible:"))
    if mu.n != n:
        raise ValueError(f"partition {list(mu)} is not a partition of {n}")
    return irreducible_character(mu)


def cmd_series(args) -> dict:
    cl = _class_arg(args)
    req = genseries.SeriesRequest(cl, _need(args.order, "--order"), args.variant)
    return {"class": class_to_json(cl), "variant": args.variant, "order": req.order,
            "coefficients": series_to_json(req.run())}


def cmd_symmetric(args) -> dict:
    chi = _chi_arg(args)
    N = _need(args.order, "--order")
    if N < 0:
        raise ValueError("order must be non-negative")
    s = genseries.degree_symmetric_series(chi, N, args.variant)
    return {"chi": format_laurent(chi), "variant": args.variant, "order": N,
            "coefficients": [laurent_to_json(c) for c in s],
            "text": [format_laurent(c) for c in s]}


def cmd_twist(args) -> dict:
    n = _need(args.n, "--n")
    V = _representation(n, args.rep, args.subgroup)
    out = {"n": n, "rep": args.rep}
    if args.cls is not None:
        cl = _class_arg(args)
        out["class"] = class_to_json(cl)
        out["twisted_class"] = poly_to_json(genseries.twisted_class(n, V, cl))
    else:
        chi = _chi_arg(args)
        g = genseries.twisted_genus(n, V, chi)
        out["chi"] = format_laurent(chi)
        out["twisted_genus"] = poly_to_json(g)
        out["genus"] = _laurent_out(specialize_p(g, SYMMETRIC))
    return out


def cmd_schur(args) -> dict:
    n = _need(args.n, "--n")
    mu = parse_partition(_need(args.mu, "--mu"))
    out = {"n": n, "mu": partition_key(mu)}
    if args.cls is not None:
        cl = _class_arg(args)
        out["class"] = class_to_json(cl)
        out["schur_class"] = poly_to_json(genseries.schur_class(n, mu, cl))
    else:
        if mu.n != n:
            raise ValueError(f"partition {list(mu)} is not a partition of {n}")
        chi = _chi_arg(args)
        g = genseries.twisted_genus(n, irreducible_character(mu), chi)
        out["chi"] = format_laurent(chi)
        out["genus"] = _laurent_out(specialize_p(g, SYMMETRIC))
    return out


def cmd_quotient(args) -> dict:
    n = _need(args.n, "--n")
    chi = _chi_arg(args)
    K = _subgroup(n, args.subgroup)
    value = genseries.quotient_genus(n, K, chi)
    return {"n": n, "chi": format_laurent(chi), "subgroup_order": len(K),
            "generators": list(args.subgroup or []), **_laurent_out(value)}


def cmd_orbifold(args) -> dict:
    n = _need(args.n, "--n")
    e = parse_rational(_need(args.e, "--e"))
    return {"n": n, "e": format_rational(e), "value": format_rational(genseries.orbifold_euler(n, e))}


def _j_arg(text: str):
    if text in genseries.J_BUILTINS:
        return genseries.J_BUILTINS[text]
    values = [parse_rational(v) for v in text.split(",") if v.strip()]

    def get(r):
        if r > len(values):
            raise ValueError(f"--j gives {len(values)} values, need j_{r}")
        return values[r - 1]

    return get


def cmd_ohmoto(args) -> dict:
    N = _need(args.order, "--order")
    if N < 0:
        raise ValueError("order must be non-negative")
    j = _j_arg(args.j)
    out = {"j": args.j, "order": N}
    if args.cls is not None:
        cl = _class_arg(args)
        out["class"] = class_to_json(cl)
        out["coefficients"] = series_to_json(genseries.ohmoto_series(j, cl, N))
    else:
        e = parse_rational(_need(args.e, "--e or --class"))
        out["e"] = format_rational(e)
        out["coefficients"] = [format_rational(c.constant_term()) for c in genseries.ohmoto_degree_series(j, e, N)]
    return out


def cmd_verify(args) -> dict:
    cfg = VerifyConfig(suites=args.suite or ["all"], max_n=args.max_n, seed=args.seed, threads=args.threads)
    return run_verify(cfg)


COMMANDS = {
    "series": cmd_series,
    "symmetric": cmd_symmetric,
    "twist": cmd_twist,
    "schur": cmd_schur,
    "quotient": cmd_quotient,
    "orbifold": cmd_orbifold,
    "ohmoto": cmd_ohmoto,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--output", help="write JSON here instead of standard output")
    common.add_argument("--threads", type=int, default=1, help="worker threads (output does not depend on it)")

    parser = _Parser(prog="symprod", description="Generating series for symmetric products.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("series", parents=[common], help="class-level generating series")
    p.add_argument("--class", dest="cls", help="GradedClass JSON, inline or @file")
    p.add_argument("--order", type=int)
    p.add_argument("--variant", default="equivariant",
                   choices=["equivariant", "pushforward", "symmetric", "alternating", "forgetful", "identity"])

    p = sub.add_parser("symmetric", parents=[common], help="degree-level symmetric-product genera")
    p.add_argument("--chi", help='Laurent polynomial in y, e.g. "1+y"')
    p.add_argument("--order", type=int)
    p.add_argument("--variant", default="symmetric", choices=["symmetric", "alternating"])

    for name, helptext in (("twist", "representation-twisted class or genus"),
                           ("schur", "Schur-functor class or genus")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--n", type=int)
        p.add_argument("--chi")
        p.add_argument("--class", dest="cls")
        if name == "twist":
            p.add_argument("--rep", default="trivial",
                           help='trivial, sign, regular, induced, a partition "[2,1]" or raw JSON')
            p.add_argument("--subgroup", action="append", help="generator in cycle notation (for --rep induced)")
        else:
            p.add_argument("--mu", help='partition, e.g. "[2,1]"')

    p = sub.add_parser("quotient", parents=[common], help="genus of Z^n/K")
    p.add_argument("--n", type=int)
    p.add_argument("--chi")
    p.add_argument("--subgroup", action="append",
                   help='generator in cycle notation, repeatable; "sym" or "alt" for S_n or A_n')

    p = sub.add_parser("orbifold", parents=[common], help="orbifold Euler characteristic of Z^n/S_n")
    p.add_argument("--n", type=int)
    p.add_argument("--e", help="Euler characteristic of Z")

    p = sub.add_parser("ohmoto", parents=[common], help="Ohmoto-type series")
    p.add_argument("--j", default="one", help='"one", "sigma1" or a comma-separated list j_1,j_2,...')
    p.add_argument("--order", type=int)
    p.add_argument("--class", dest="cls")
    p.add_argument("--e")

    p = sub.add_parser("verify", parents=[common], help="oracle-versus-engine suites")
    p.add_argument("--suite", action="append", help="suite name or all (repeatable)")
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    return parser


def _emit(obj: dict, output: str | None):
    text = json.dumps(obj, sort_keys=True, indent=2) + "\n"
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def run(argv: list[str] | None = None) -> int:
    output = None
    try:
        args = build_parser().parse_args(argv)
        output = args.output
        if args.threads < 1:
            raise ValueError("--threads must be positive")
        body = COMMANDS[args.command](args)
    except GuardError as exc:
        _emit({"schema_version": SCHEMA_VERSION, "error": {"type": "guard", "message": str(exc)}}, output)
        return 2
    except (ValueError, KeyError, OSError) as exc:
        kind = "usage" if isinstance(exc, UsageError) else "validation"
        _emit({"schema_version": SCHEMA_VERSION, "error": {"type": kind, "message": str(exc)}}, output)
        return 1
    body.setdefault("schema_version", SCHEMA_VERSION)
    body.setdefault("command", args.command)
    _emit(body, output)
    if args.command == "verify" and body["total_failures"]:
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
