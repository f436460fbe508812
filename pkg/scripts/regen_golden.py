"""Regenerate tests/golden/.

Oracle fixtures are computed by the brute-force verifiers only; the engine
never runs here except through the CLI cases, whose outputs are frozen as
byte-exact golden files.
"""
import io
import json
import sys
from contextlib import redirect_stdout
from fractions import Fraction
from math import factorial
from pathlib import Path

from symprod import cli, oracle
from symprod.exactalg import format_laurent, format_rational, poly_to_json
from symprod.homclass import ClassKind, GradedClass
from symprod.partitions import enumerate_partitions, partition_key
from symprod.symgroup import irreducible_character
from symprod.verify import sample_subgroups

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"

CLI_CASES = {
    "symmetric_1py_3": ["symmetric", "--chi", "1+y", "--order", "3"],
    "symmetric_alt_1py_6": ["symmetric", "--chi", "1+y", "--order", "6", "--variant", "alternating"],
    "quotient_A3": ["quotient", "--n", "3", "--subgroup", "(1 2 3)", "--chi", "1+y"],
    "quotient_klein": ["quotient", "--n", "4", "--subgroup", "(1 2)(3 4)", "--subgroup", "(1 3)(2 4)",
                       "--chi", "1+y^-1+2y"],
    "twist_21_chi": ["twist", "--n", "3", "--rep", "[2,1]", "--chi", "1+y"],
    "twist_sign_class": ["twist", "--n", "3", "--rep", "sign",
                         "--class", '{"kind": "todd", "components": {"0": "1", "1": "1/2"}}'],
    "schur_21_class": ["schur", "--n", "3", "--mu", "[2,1]",
                       "--class", '{"kind": "hirzebruch", "components": {"0": "1+y", "1": "y"}}'],
    "series_todd_4": ["series", "--order", "4",
                      "--class", '{"kind": "todd", "components": {"0": "1", "1": "1/2"}, "label": "z"}'],
    "series_hirzebruch_alt_3": ["series", "--order", "3", "--variant", "alternating",
                                "--class", '{"kind": "hirzebruch", "components": {"0": "1+y"}}'],
    "orbifold_5": ["orbifold", "--n", "5", "--e", "2"],
    "ohmoto_sigma1": ["ohmoto", "--j", "sigma1", "--order", "6", "--e", "2"],
    "ohmoto_class": ["ohmoto", "--j", "1,3,4", "--order", "3",
                     "--class", '{"kind": "chern", "components": {"0": "2", "1": "1"}}'],
    "verify_all_5": ["verify", "--suite", "all", "--max-n", "5", "--seed", "7"],
}


def oracle_fixtures() -> dict:
    P1 = oracle.PROJECTIVE_LINE
    quotients = {}
    for n in range(1, 5):
        for name, K in sample_subgroups(n):
            gens = [str(g) for g in K]
            quotients[f"{n}:{name}"] = {"elements": gens, "genus": format_laurent(oracle.invariant_trace(P1, K))}
    twisted = {}
    for n in range(1, 5):
        for mu in enumerate_partitions(n):
            value = oracle.twisted_invariant_trace(P1, irreducible_character(mu), method="dense")
            twisted[partition_key(mu)] = format_laurent(value)
    orbifold = {}
    for n in range(6):
        total = sum(Fraction(2) ** k for k in oracle.commuting_pair_orbits(n))
        orbifold[str(n)] = format_rational(total / factorial(n))
    b = {r: GradedClass(ClassKind.TODD, {0: 1, 1: Fraction(1, r)}, label=f"b{r}") for r in range(1, 5)}
    return {
        "projective_line": P1.to_json(),
        "quotient_genus": quotients,
        "twisted_genus": twisted,
        "orbifold_e2_commuting_pairs": orbifold,
        "orbifold_e2_product_expansion": oracle.product_expansion(2, 5),
        "index_subgroups_rank2": [oracle.count_index_subgroups(2, r) for r in range(1, 201)],
        "index_subgroups_rank3": [oracle.count_index_subgroups(3, r) for r in range(1, 31)],
        "direct_conjugacy_sum": {str(n): poly_to_json(oracle.direct_conjugacy_sum(b, n)) for n in range(5)},
    }


def run_cli(argv) -> str:
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = cli.run(argv)
    if code != 0:
        raise SystemExit(f"CLI case {argv} exited with {code}:\n{buf.getvalue()}")
    return buf.getvalue()


def main():
    GOLDEN.mkdir(parents=True, exist_ok=True)
    (GOLDEN / "oracle_fixtures.json").write_text(json.dumps(oracle_fixtures(), sort_keys=True, indent=2) + "\n")
    (GOLDEN / "cli_cases.json").write_text(json.dumps(CLI_CASES, sort_keys=True, indent=2) + "\n")
    for name, argv in CLI_CASES.items():
        (GOLDEN / f"cli_{name}.json").write_text(run_cli(argv))
    print(f"wrote {len(CLI_CASES) + 2} files to {GOLDEN}", file=sys.stderr)


if __name__ == "__main__":
    main()
