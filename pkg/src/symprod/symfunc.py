"""Symmetric functions in the power-sum basis and the Frobenius character.

A symmetric function is a Poly in the variables ``("p", r)``; other variables
(``y``, free-algebra generators) may ride along as coefficients.  h, e and
Schur functions are computed into the p-basis, never stored separately.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Mapping, Union

from .exactalg import ONE, Poly, TruncSeries, as_poly, series_exp
from .partitions import Partition, enumerate_partitions, z_of
from .symgroup import ClassFunction, irreducible_character, sign_character, trivial_character

Assignment = Union[Mapping[int, object], Callable[[int], object]]


def is_p(v) -> bool:
    return v[0] == "p"


def p(r: int) -> Poly:
    if r < 1:
        raise ValueError("power sums are indexed by r >= 1")
    return Poly.var(("p", r))


def p_lambda(lam) -> Poly:
    out = ONE
    for r, k in Partition(lam).multiplicities().items():
        out = out * Poly.var(("p", r), k)
    return out


def _mono_partition(mono) -> Partition:
    parts = []
    for v, e in mono:
        if e < 0:
            raise ValueError("negative power of a power sum")
        parts.extend([v[1]] * e)
    return Partition(parts)


def p_components(x: Poly) -> dict[Partition, Poly]:
    """Split x as sum over lam of p_lam * c_lam with c_lam free of p."""
    x = as_poly(x)
    return {_mono_partition(outer): inner for outer, inner in x.coefficient_split(is_p).items()}


def frobenius_char(f: ClassFunction) -> Poly:
    """ch_F(f) = sum over lam |- n of f(lam) p_lam / z_lam."""
    out = Poly()
    for lam, v in f.values.items():
        if v:
            out = out + p_lambda(lam) * v * Fraction(1, z_of(lam))
    return out


def frobenius_inverse(s: Poly, n: int | None = None) -> ClassFunction:
    """Inverse of the Frobenius character on a homogeneous element.

    ``n`` is only needed to place the zero function in a definite degree.
    """
    comps = p_components(s)
    degrees = {lam.n for lam in comps}
    if len(degrees) > 1:
        raise ValueError(f"inhomogeneous symmetric function (degrees {sorted(degrees)})")
    if n is not None and degrees and degrees != {n}:
        raise ValueError(f"expected degree {n}, got {degrees.pop()}")
    if not degrees and n is None:
        raise ValueError("pass n to invert the zero symmetric function")
    n = degrees.pop() if degrees else n
    values = {}
    for lam in enumerate_partitions(n):
        c = comps.get(lam)
        if c is None:
            values[lam] = 0
        elif c.is_constant():
            values[lam] = c.constant_term() * z_of(lam)
        else:
            values[lam] = c * z_of(lam)
    return ClassFunction(n, values)


def h(n: int) -> Poly:
    return frobenius_char(trivial_character(n))


def e(n: int) -> Poly:
    return frobenius_char(sign_character(n))


def schur(mu) -> Poly:
    """s_mu = ch_F(chi^mu)."""
    return frobenius_char(irreducible_character(mu))


def hall_inner(a: Poly, b: Poly) -> Fraction:
    """<p_lam, p_mu> = z_lam delta_{lam,mu}, extended bilinearly (rational parts only)."""
    ca, cb = p_components(a), p_components(b)
    total = Fraction(0)
    for lam, c in ca.items():
        if lam in cb:
            total += c.constant_term() * cb[lam].constant_term() * z_of(lam)
    return total


def complete_series(N: int) -> TruncSeries:
    """exp(sum_{r<=N} p_r t^r / r), whose coefficients are h_0, h_1, ..."""
    gen = TruncSeries([Poly()] + [p(r) * Fraction(1, r) for r in range(1, N + 1)], N)
    return series_exp(gen, N)


# specializations

SYMMETRIC: Callable[[int], int] = lambda r: 1
ALTERNATING: Callable[[int], int] = lambda r: (-1) ** (r - 1)
FORGETFUL: Callable[[int], int] = lambda r: 1 if r == 1 else 0

NAMED_SPECIALIZATIONS = {"symmetric": SYMMETRIC, "alternating": ALTERNATING, "forgetful": FORGETFUL}


def _lookup(assignment: Assignment) -> Callable[[int], object]:
    if isinstance(assignment, str):
        return NAMED_SPECIALIZATIONS[assignment]
    if callable(assignment):
        return assignment
    mapping = dict(assignment)

    def get(r):
        if r not in mapping:
            raise ValueError(f"no value assigned to p_{r}")
        return mapping[r]

    return get


def specialize_p(x, assignment: Assignment):
    """Substitute p_r -> assignment(r) in a Poly or coefficientwise in a TruncSeries."""
    get = _lookup(assignment)

    def images(v):
        return get(v[1]) if is_p(v) else None

    if isinstance(x, TruncSeries):
        return x.map(lambda c: c.substitute(images))
    return as_poly(x).substitute(images)
