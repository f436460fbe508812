from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from symprod.partitions import enumerate_partitions, z_of
from symprod.symgroup import (
    ClassFunction,
    GuardError,
    Permutation,
    all_permutations,
    alternating_group,
    character_table,
    class_indicator,
    induced_trivial_character,
    induction_product,
    inner_product,
    irreducible_character,
    parse_cycles,
    regular_character,
    sign_character,
    subgroup_closure,
    trivial_character,
    unit_class_function,
)


def perms(n):
    return st.permutations(list(range(1, n + 1))).map(lambda p: Permutation(tuple(p)))


def test_parse_and_print():
    g = parse_cycles("(1 2)(3 4 5)", 5)
    assert g.images == (2, 1, 4, 5, 3)
    assert str(g) == "(1 2)(3 4 5)"
    assert str(Permutation.identity(3)) == "()"
    assert parse_cycles("(1 2)", 2) != parse_cycles("(1 2)", 5)
    # right-to-left composition
    assert parse_cycles("(1 2)(2 3)", 3) == parse_cycles("(1 2)", 3) * parse_cycles("(2 3)", 3)
    for bad in ("(1 1)", "(0 1)", "(1 6)", "1 2)"):
        with pytest.raises(ValueError):
            parse_cycles(bad, 5)


@given(perms(5), perms(5))
def test_cycle_type_is_conjugation_invariant(s, t):
    assert (t * s * t.inverse()).cycle_type() == s.cycle_type()
    assert (s * t).sign() == s.sign() * t.sign()


def test_closure_examples():
    assert len(subgroup_closure([], 3)) == 1
    a3 = subgroup_closure([parse_cycles("(1 2 3)", 3)], 3)
    assert a3 == alternating_group(3)
    s3 = subgroup_closure([parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)])
    assert len(s3) == 6
    with pytest.raises(ValueError):
        subgroup_closure([parse_cycles("(1 2)", 2), parse_cycles("(1 2)", 3)])


def test_guard(monkeypatch):
    with pytest.raises(GuardError):
        subgroup_closure([], 9)
    monkeypatch.setenv("SYMPROD_GUARD_N", "9")
    assert len(subgroup_closure([], 9)) == 1
    with pytest.raises(GuardError):
        all_permutations(3, guard=2)


def test_induced_examples():
    assert induced_trivial_character(all_permutations(4)) == trivial_character(4)
    assert induced_trivial_character(subgroup_closure([], 4), 4) == regular_character(4)
    chi = induced_trivial_character(alternating_group(3))
    assert [chi(lam) for lam in [(1, 1, 1), (2, 1), (3,)]] == [2, 0, 2]


def brute_induced(K, n):
    """Both textbook formulas: conjugation count and fixed cosets."""
    G = all_permutations(n)
    Kset = set(K)
    by_conj = {}
    by_cosets = {}
    cosets = {frozenset(g * k for k in K) for g in G}
    for lam in enumerate_partitions(n):
        sigma = next(g for g in G if g.cycle_type() == lam)
        by_conj[lam] = Fraction(sum(1 for g in G if g.inverse() * sigma * g in Kset), len(K))
        by_cosets[lam] = sum(1 for c in cosets if frozenset(sigma * x for x in c) == c)
    return ClassFunction(n, by_conj), ClassFunction(n, by_cosets)


@pytest.mark.parametrize("gens", [[], ["(1 2)"], ["(1 2 3)"], ["(1 2)(3 4)"], ["(1 2 3 4)"],
                                  ["(1 2)", "(3 4)"], ["(1 2 3)", "(1 2)"]])
def test_induced_matches_brute_force(gens):
    n = 4
    K = subgroup_closure([parse_cycles(g, n) for g in gens], n)
    conj, cosets = brute_induced(K, n)
    assert induced_trivial_character(K, n) == conj == cosets


def test_irreducible_examples():
    assert irreducible_character((4,)) == trivial_character(4)
    assert irreducible_character((1,) * 4) == sign_character(4)
    chi = irreducible_character((2, 1))
    assert [chi(lam) for lam in [(1, 1, 1), (2, 1), (3,)]] == [2, 0, -1]


@pytest.mark.parametrize("n", range(8))
def test_orthogonality(n):
    table = character_table(n)
    for a, fa in table.items():
        for b, fb in table.items():
            assert inner_product(fa, fb) == (1 if a == b else 0)


@pytest.mark.parametrize("n", range(1, 8))
def test_column_sums(n):
    table = character_table(n)
    for lam in enumerate_partitions(n):
        assert sum(chi(lam) ** 2 for chi in table.values()) == z_of(lam)


@pytest.mark.parametrize("n", range(1, 7))
def test_dimensions_match_hook_length(n):
    for mu, chi in character_table(n).items():
        hooks = 1
        conj = [sum(1 for part in mu if part > j) for j in range(mu[0])]
        for i, row in enumerate(mu):
            for j in range(row):
                hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
        assert chi((1,) * n) == factorial(n) // hooks


def test_induction_examples():
    one1 = trivial_character(1)
    assert induction_product(one1, one1) == regular_character(2)
    f = irreducible_character((2, 1))
    assert induction_product(f, unit_class_function()) == f
    assert induction_product(unit_class_function(), f) == f


def brute_induction(f, g):
    """Ind(f x g) via the defining sum over S_(n+m) and the Young subgroup."""
    n, m = f.n, g.n
    G = all_permutations(n + m)
    young = {s for s in G if all(s(i) <= n for i in range(1, n + 1))}

    def fg(h):
        a = Permutation(h.images[:n])
        b = Permutation(tuple(x - n for x in h.images[n:]))
        return f(a) * g(b)

    values = {}
    for lam in enumerate_partitions(n + m):
        sigma = next(s for s in G if s.cycle_type() == lam)
        conjugates = (x.inverse() * sigma * x for x in G)
        total = sum((fg(c) for c in conjugates if c in young), Fraction(0))
        values[lam] = total / len(young)
    return ClassFunction(n + m, values)


@pytest.mark.parametrize("a, b", [((1,), (1,)), ((2,), (1,)), ((1, 1), (1,)), ((2, 1), (1,)), ((2,), (2,))])
def test_induction_matches_definition(a, b):
    f, g = irreducible_character(a), irreducible_character(b)
    assert induction_product(f, g) == brute_induction(f, g)


def test_class_function_validation():
    with pytest.raises(ValueError):
        ClassFunction(2, {(2,): 1})
    with pytest.raises(ValueError):
        ClassFunction(1, {(1,): 1, (2,): 0})
    assert class_indicator((2,))((2,)) == 1
    with pytest.raises(GuardError):
        induction_product(trivial_character(5), trivial_character(4))
