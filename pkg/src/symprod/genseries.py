"""Generating series for classes of external and symmetric products.

Series are TruncSeries in t whose coefficients live in the free algebras of
:mod:`symprod.deloc` (class level) or in Q[y^{+-1}][p_i] (degree level).

The degree-level variable is the stored ``y`` of the T_{-y*} convention: a
genus chi passed in here is chi_{-y}(Z) written as a Laurent polynomial in y,
and chi_{-y^r} is ``laurent_substitute(chi, r)``.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Mapping, Union

from . import deloc
from .exactalg import ONE, ZERO, Poly, TruncSeries, as_poly, laurent_substitute, series_exp
from .homclass import ClassKind, GradedClass, adams
from .partitions import Partition, enumerate_partitions, z_of
from .symfunc import ALTERNATING, FORGETFUL, SYMMETRIC, p, p_lambda, schur, specialize_p
from .symgroup import (
    ClassFunction,
    Permutation,
    all_permutations,
    check_guard,
    induced_trivial_character,
    irreducible_character,
)

Payload = Union[Mapping[int, GradedClass], Callable[[int], GradedClass]]


def _getter(b: Payload) -> Callable[[int], GradedClass]:
    if callable(b):
        return b
    mapping = dict(b)

    def get(r):
        if r not in mapping:
            raise ValueError(f"payload b_{r} is missing")
        return mapping[r]

    return get


def _exp_of(terms: Callable[[int], Poly], N: int) -> TruncSeries:
    gen = TruncSeries([ZERO] + [terms(r) * Fraction(1, r) for r in range(1, N + 1)], N)
    return series_exp(gen, N)


def abstract_series(b: Payload, N: int) -> TruncSeries:
    """exp(sum_{r<=N} A_r(b_r) t^r / r)."""
    get = _getter(b)
    return _exp_of(lambda r: deloc.creation(r, get(r)), N)


def equivariant_class_series(cl: GradedClass, N: int) -> TruncSeries:
    """Equivariant classes of the external powers: payloads b_r = Psi_r(cl)."""
    return abstract_series(lambda r: adams(r, cl), N)


def symmetric_product_series(cl: GradedClass, N: int) -> TruncSeries:
    """exp(sum_r p_r D_r(Psi_r cl) t^r / r) in the equivariant Pontrjagin ring."""
    return _exp_of(lambda r: p(r) * deloc.embed("D", r, adams(r, cl)), N)


def power_series_variant(cl: GradedClass, N: int, variant: str) -> TruncSeries:
    """Symmetric powers, alternating powers, or the forgetful series.

    ``forgetful`` returns the exponential-generating coefficients c_n with
    sum c_n t^n / n! = exp(t D_1(cl)).
    """
    series = symmetric_product_series(cl, N)
    if variant == "symmetric":
        return specialize_p(series, SYMMETRIC)
    if variant == "alternating":
        return specialize_p(series, ALTERNATING)
    if variant == "forgetful":
        egf = specialize_p(series, FORGETFUL)
        return TruncSeries([c * factorial(n) for n, c in enumerate(egf)], N)
    raise ValueError(f"unknown variant {variant!r}")


def _check_degree(n: int, V: ClassFunction):
    if V.n != n:
        raise ValueError(f"representation has degree {V.n}, expected {n}")


def twisted_class(n: int, V: ClassFunction, cl: GradedClass) -> Poly:
    """sum_{lam |- n} p_lam/z_lam chi_lam(V) prod_r D_r(Psi_r cl)^k_r."""
    _check_degree(n, V)
    d = {}
    out = ZERO
    for lam in enumerate_partitions(n):
        chi = V(lam)
        if not chi:
            continue
        term = p_lambda(lam) * Fraction(1, z_of(lam))
        for r, k in lam.multiplicities().items():
            if r not in d:
                d[r] = deloc.embed("D", r, adams(r, cl))
            term = term * d[r] ** k
        out = out + term * chi
    return out


def schur_class(n: int, mu, cl: GradedClass) -> Poly:
    """Class of the Schur functor S_mu: the V_mu-twisted class at p_i = 1."""
    mu = Partition(mu)
    if mu.n != n:
        raise ValueError(f"partition {list(mu)} is not a partition of {n}")
    return specialize_p(twisted_class(n, irreducible_character(mu), cl), SYMMETRIC)


def schur_decomposition_check(n: int, cl: GradedClass) -> bool:
    """sum_mu s_mu * cl(S_mu) equals the t^n coefficient of the symmetric product series."""
    lhs = ZERO
    for mu in enumerate_partitions(n):
        lhs = lhs + schur(mu) * schur_class(n, mu, cl)
    return lhs == symmetric_product_series(cl, n)[n]


# degree level


def degree_symmetric_series(chi: Poly, N: int, variant: str = "symmetric") -> TruncSeries:
    """exp(sum_r chi(y^r) t^r / r), or exp(-sum_r chi(y^r) (-t)^r / r) if alternating."""
    chi = as_poly(chi)
    if variant == "symmetric":
        return _exp_of(lambda r: laurent_substitute(chi, r), N)
    if variant == "alternating":
        return _exp_of(lambda r: laurent_substitute(chi, r) * (-(-1) ** r), N)
    raise ValueError(f"unknown variant {variant!r}")


def _genus_sum(n: int, V: ClassFunction, chi: Poly, with_p: bool) -> Poly:
    chi = as_poly(chi)
    powers: dict[int, Poly] = {}
    out = ZERO
    for lam in enumerate_partitions(n):
        c = V(lam)
        if not c:
            continue
        term = p_lambda(lam) if with_p else ONE
        term = term * Fraction(1, z_of(lam))
        for r, k in lam.multiplicities().items():
            if r not in powers:
                powers[r] = laurent_substitute(chi, r)
            term = term * powers[r] ** k
        out = out + term * c
    return out


def twisted_genus(n: int, V: ClassFunction, chi: Poly) -> Poly:
    """sum_{lam |- n} p_lam/z_lam chi_lam(V) prod_r chi(y^r)^k_r; set p_i = 1 for the genus."""
    _check_degree(n, V)
    return _genus_sum(n, V, chi, with_p=True)


def quotient_genus(n: int, K: list[Permutation], chi: Poly, guard: int | None = None) -> Poly:
    """chi_{-y}(Z^n / K) from chi_{-y}(Z) for an explicit subgroup K of S_n."""
    check_guard(n, guard, "quotient genus")
    V = induced_trivial_character(K, n)
    return _genus_sum(n, V, chi, with_p=False)


# Ohmoto series and orbifold Euler characteristics


def j_one(r: int) -> Fraction:
    """Number of index-r subgroups of Z."""
    return Fraction(1)


def j_divisor_sum(r: int) -> Fraction:
    """Number of index-r subgroups of Z^2, the divisor sum sigma_1(r)."""
    return Fraction(sum(d for d in range(1, r + 1) if r % d == 0))


J_BUILTINS = {"one": j_one, "sigma1": j_divisor_sum}


def ohmoto_series(j: Mapping[int, Fraction] | Callable[[int], Fraction], c: GradedClass, N: int) -> TruncSeries:
    """exp(sum_r (j_r / r) t^r A_r(c))."""
    get = j if callable(j) else (lambda r: j[r])
    return _exp_of(lambda r: deloc.creation(r, c) * Fraction(get(r)), N)


def ohmoto_degree_series(j: Mapping[int, Fraction] | Callable[[int], Fraction], e, N: int) -> TruncSeries:
    """Degree-level shadow exp(sum_r j_r e t^r / r) for a space of Euler number e."""
    get = j if callable(j) else (lambda r: j[r])
    e = as_poly(e)
    return _exp_of(lambda r: e * Fraction(get(r)), N)


def _orbit_count(n: int, s: tuple[int, ...], t: tuple[int, ...]) -> int:
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for perm in (s, t):
        for i in range(n):
            a, b = find(i), find(perm[i] - 1)
            if a != b:
                parent[a] = b
    return sum(1 for i in range(n) if find(i) == i)


DEFAULT_ORBIFOLD_GUARD = 6


def orbifold_euler(n: int, e, guard: int | None = None) -> Fraction:
    """(1/n!) sum over commuting pairs in S_n of e^(orbits of <sigma, tau>)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if guard is None and not os.environ.get("SYMPROD_GUARD_N"):
        guard = DEFAULT_ORBIFOLD_GUARD
    check_guard(n, guard, "orbifold Euler characteristic")
    e = Fraction(e)
    perms = [g.images for g in all_permutations(n, guard=n)]
    total = Fraction(0)
    for s in perms:
        for t in perms:
            if all(s[t[i] - 1] == t[s[i] - 1] for i in range(n)):
                total += e ** _orbit_count(n, s, t)
    return total / factorial(n)


# request envelope


@dataclass
class SeriesRequest:
    """Everything needed to compute one class-level series."""

    cl: GradedClass
    order: int
    variant: str = "equivariant"
    options: dict = field(default_factory=dict)

    @property
    def kind(self) -> ClassKind:
        return self.cl.kind

    def run(self) -> TruncSeries:
        if self.order < 0:
            raise ValueError("order must be non-negative")
        if self.variant == "equivariant":
            return equivariant_class_series(self.cl, self.order)
        if self.variant == "pushforward":
            return symmetric_product_series(self.cl, self.order)
        if self.variant in ("symmetric", "alternating", "forgetful"):
            return power_series_variant(self.cl, self.order, self.variant)
        if self.variant == "identity":
            return equivariant_class_series(self.cl, self.order).map(deloc.identity_projection)
        raise ValueError(f"unknown series variant {self.variant!r}")
