import json
import random
from fractions import Fraction
from math import factorial
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from symprod import deloc, genseries, oracle
from symprod.deloc import creation, embed
from symprod.exactalg import (
    ONE,
    ZERO,
    Poly,
    TruncSeries,
    YPOLY,
    laurent_substitute,
    parse_laurent,
    poly_from_json,
    series_exp,
)
from symprod.genseries import (
    SeriesRequest,
    abstract_series,
    degree_symmetric_series,
    equivariant_class_series,
    ohmoto_degree_series,
    ohmoto_series,
    orbifold_euler,
    power_series_variant,
    quotient_genus,
    schur_class,
    schur_decomposition_check,
    symmetric_product_series,
    twisted_class,
    twisted_genus,
)
from symprod.homclass import ClassKind, GradedClass, adams
from symprod.partitions import enumerate_partitions, parse_partition, z_of
from symprod.symfunc import SYMMETRIC, p, specialize_p
from symprod.symgroup import (
    GuardError,
    all_permutations,
    alternating_group,
    irreducible_character,
    parse_cycles,
    regular_character,
    sign_character,
    subgroup_closure,
    trivial_character,
)
from symprod.verify import random_payload

from conftest import graded_classes, laurents

FIXTURES = json.loads((Path(__file__).parent / "golden" / "oracle_fixtures.json").read_text())

cl = GradedClass(ClassKind.HIRZEBRUCH_MINUS_Y, {0: ONE + YPOLY, 1: YPOLY / 2}, label="c")


def D(r, c):
    return embed("D", r, c)


def test_abstract_series_unit_and_coefficients():
    b = random_payload(random.Random(3), 4)
    s = abstract_series(b, 4)
    assert s[0] == ONE
    for n in range(5):
        assert s[n] == oracle.direct_conjugacy_sum(b, n)
    with pytest.raises(ValueError):
        abstract_series({1: cl}, 2)


def test_abstract_series_matches_frozen_oracle():
    b = {r: GradedClass(ClassKind.TODD, {0: 1, 1: Fraction(1, r)}, label=f"b{r}") for r in range(1, 5)}
    s = abstract_series(b, 4)
    for n, frozen in FIXTURES["direct_conjugacy_sum"].items():
        assert s[int(n)] == poly_from_json(frozen)


def test_equivariant_series_examples():
    s = equivariant_class_series(cl, 4)
    assert s[2] == creation(1, cl) ** 2 / 2 + creation(2, adams(2, cl)) / 2
    # identity component is exp(t cl)
    ident = s.map(deloc.identity_projection)
    gen = TruncSeries([ZERO, creation(1, cl), ZERO, ZERO, ZERO], 4)
    assert ident == series_exp(gen, 4)
    chern = GradedClass(ClassKind.CHERN, {0: 3, 2: -1})
    assert equivariant_class_series(chern, 3) == abstract_series(lambda r: chern, 3)


def test_symmetric_product_examples():
    s = symmetric_product_series(cl, 3)
    assert s[1] == p(1) * D(1, cl)
    assert s[2] == (p(1) * D(1, cl)) ** 2 / 2 + p(2) * D(2, adams(2, cl)) / 2
    assert s == equivariant_class_series(cl, 3).map(deloc.pushforward_pi)


def test_variant_examples():
    sym = power_series_variant(cl, 3, "symmetric")
    alt = power_series_variant(cl, 3, "alternating")
    fgt = power_series_variant(cl, 3, "forgetful")
    d1, d2 = D(1, cl), D(2, adams(2, cl))
    assert sym[2] == d1 ** 2 / 2 + d2 / 2
    assert alt[2] == d1 ** 2 / 2 - d2 / 2
    assert fgt[2] == d1 ** 2
    assert fgt[3] == d1 ** 3
    with pytest.raises(ValueError):
        power_series_variant(cl, 3, "bogus")


def test_twisted_class_examples():
    s = symmetric_product_series(cl, 4)
    for n in range(5):
        assert twisted_class(n, trivial_character(n), cl) == s[n]
    d1 = D(1, cl)
    assert twisted_class(2, regular_character(2), cl) == p(1) ** 2 * d1 ** 2
    sign2 = twisted_class(2, sign_character(2), cl)
    assert sign2 == (p(1) * d1) ** 2 / 2 - p(2) * D(2, adams(2, cl)) / 2
    with pytest.raises(ValueError):
        twisted_class(3, trivial_character(2), cl)


def test_schur_class_examples():
    sym = power_series_variant(cl, 4, "symmetric")
    alt = power_series_variant(cl, 4, "alternating")
    for n in range(1, 5):
        assert schur_class(n, (n,), cl) == sym[n]
        assert schur_class(n, (1,) * n, cl) == alt[n]
    assert schur_class(3, (2, 1), cl) == D(1, cl) ** 3 / 3 - D(3, adams(3, cl)) / 3
    with pytest.raises(ValueError):
        schur_class(3, (2,), cl)


@given(graded_classes(), st.integers(0, 4))
def test_schur_decomposition(c, n):
    assert schur_decomposition_check(n, c)


def test_degree_series_examples():
    s = degree_symmetric_series(ONE + YPOLY, 3)
    assert list(s) == [ONE, ONE + YPOLY, ONE + YPOLY + YPOLY ** 2, ONE + YPOLY + YPOLY ** 2 + YPOLY ** 3]
    alt = degree_symmetric_series(ONE + YPOLY, 5, "alternating")
    assert list(alt) == [ONE, ONE + YPOLY, YPOLY, ZERO, ZERO, ZERO]
    assert degree_symmetric_series(ZERO, 4) == TruncSeries.one(4)


@given(laurents, st.integers(0, 5))
def test_degree_series_is_pushforward_degree(chi, N):
    # degree of the symmetric-power series of a class whose degree part is chi
    c = GradedClass(ClassKind.HIRZEBRUCH_MINUS_Y, {0: chi, 1: YPOLY})
    sym = power_series_variant(c, N, "symmetric").map(deloc.pont_degree)
    assert sym == degree_symmetric_series(chi, N)


def test_quotient_genus_examples():
    chi = ONE + YPOLY
    sym = degree_symmetric_series(chi, 4)
    for n in range(1, 5):
        assert quotient_genus(n, all_permutations(n), chi) == sym[n]
        assert quotient_genus(n, subgroup_closure([], n), chi) == chi ** n
    assert quotient_genus(3, alternating_group(3), chi) == parse_laurent("1+y+y^2+y^3")


def test_quotient_genus_matches_frozen_invariant_traces():
    chi = oracle.BigradedSpace.from_json(FIXTURES["projective_line"]).chi_minus_y()
    for key, entry in FIXTURES["quotient_genus"].items():
        n = int(key.split(":")[0])
        K = [parse_cycles(g, n) for g in entry["elements"]]
        assert quotient_genus(n, K, chi) == parse_laurent(entry["genus"]), key


def test_twisted_genus_examples():
    chi = parse_laurent("2+y^-1-3y^2")
    for n in range(1, 5):
        g = specialize_p(twisted_genus(n, trivial_character(n), chi), SYMMETRIC)
        assert g == quotient_genus(n, all_permutations(n), chi)
    sign = specialize_p(twisted_genus(2, sign_character(2), chi), SYMMETRIC)
    assert sign == (chi ** 2 - laurent_substitute(chi, 2)) / 2
    mu21 = specialize_p(twisted_genus(3, irreducible_character((2, 1)), ONE + YPOLY), SYMMETRIC)
    assert mu21 == parse_laurent(FIXTURES["twisted_genus"]["[2,1]"]) == YPOLY + YPOLY ** 2


def test_twisted_genus_matches_frozen_traces():
    for key, value in FIXTURES["twisted_genus"].items():
        mu = parse_partition(key)
        g = specialize_p(twisted_genus(mu.n, irreducible_character(mu), ONE + YPOLY), SYMMETRIC)
        assert g == parse_laurent(value), key


@pytest.mark.parametrize("n", range(1, 7))
def test_euler_specialization(n):
    e = 3
    chi = Poly.const(e)
    lhs = quotient_genus(n, all_permutations(n), chi)
    classical = sum((Fraction(factorial(n), z_of(lam)) * e ** len(lam) for lam in enumerate_partitions(n)),
                    Fraction(0)) / factorial(n)
    assert lhs == classical


def test_ohmoto_examples():
    c = GradedClass(ClassKind.CHERN, {0: 1, 1: 2})
    assert ohmoto_series(lambda r: 0, c, 4) == TruncSeries.one(4)
    assert ohmoto_series(genseries.j_one, c, 4) == equivariant_class_series(c, 4)
    shadow = ohmoto_degree_series(genseries.j_divisor_sum, 2, 5)
    assert shadow[2] == 5
    assert [s.constant_term() for s in shadow] == FIXTURES["orbifold_e2_product_expansion"]


def test_orbifold_examples(monkeypatch):
    assert orbifold_euler(1, Fraction(7, 2)) == Fraction(7, 2)
    assert all(orbifold_euler(n, 0) == 0 for n in range(1, 5))
    assert orbifold_euler(2, 2) == 5
    frozen = FIXTURES["orbifold_e2_commuting_pairs"]
    assert [orbifold_euler(n, 2) for n in range(6)] == [Fraction(frozen[str(n)]) for n in range(6)]
    with pytest.raises(GuardError):
        orbifold_euler(7, 1)
    monkeypatch.setenv("SYMPROD_GUARD_N", "7")
    with pytest.raises(GuardError):
        orbifold_euler(8, 1)


@pytest.mark.parametrize("e", [1, 3])
def test_orbifold_matches_product(e):
    expansion = oracle.product_expansion(e, 5)
    assert [orbifold_euler(n, e) for n in range(6)] == expansion


def test_series_request():
    req = SeriesRequest(cl, 3, "pushforward")
    assert req.kind is ClassKind.HIRZEBRUCH_MINUS_Y
    assert req.run() == symmetric_product_series(cl, 3)
    assert SeriesRequest(cl, 3, "identity").run()[2] == creation(1, cl) ** 2 / 2
    with pytest.raises(ValueError):
        SeriesRequest(cl, -1).run()
    with pytest.raises(ValueError):
        SeriesRequest(cl, 2, "weird").run()
