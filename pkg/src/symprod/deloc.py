"""Free weighted algebras modelling the delocalized and Pontrjagin sides.

Generators (as Poly variables ``(family, r, label, degree)``):

* ``A_r(v)``      creation operator a_r applied to v, in the delocalized algebra
* ``D_r(v)``      d_{r*} v in the Pontrjagin ring of symmetric products
* ``Delta_r(v)``  Delta_{r*} v in the identity component

Each has weight r.  All algebras are free commutative: no geometric relation
among generators is imposed, so every identity checked here is an identity
that holds before any geometric evaluation.

Delta-family elements are stored in the basis of ordinary (induction)
products.  The twisted product n!m!/(n+m)! * (.) is available as
``twisted_mul``; ``average`` and ``average_F`` are ring homomorphisms for it.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Callable, Mapping

from .exactalg import ONE, ZERO, Poly
from .homclass import GradedClass
from .partitions import Partition
from .symfunc import Assignment, specialize_p

FAMILIES = ("A", "D", "Delta")


def is_generator(v) -> bool:
    return v[0] in FAMILIES


def generator(family: str, r: int, label: str, degree: int) -> Poly:
    if family not in FAMILIES:
        raise ValueError(f"unknown generator family {family!r}")
    if r < 1:
        raise ValueError("generator weight must be positive")
    return Poly.var((family, r, label, degree))


def embed(family: str, r: int, c: GradedClass) -> Poly:
    """family_r(c), expanded linearly over the basis components of c."""
    out = ZERO
    for i, coeff in c.components.items():
        out = out + generator(family, r, c.label, i) * coeff
    return out


def creation(r: int, c: GradedClass) -> Poly:
    """A_r(c): the creation operator (including its factor r) as a generator."""
    return embed("A", r, c)


def monomial_weights(mono) -> list[int]:
    """Weights of the generator factors of a monomial, with multiplicity."""
    out = []
    for v, e in mono:
        if is_generator(v):
            if e < 0:
                raise ValueError("negative power of a free-algebra generator")
            out.extend([v[1]] * e)
    return out


def weight(x: Poly) -> int:
    """Total weight of a homogeneous element (0 for constants)."""
    ws = {sum(monomial_weights(m)) for m, _ in x.items()}
    if len(ws) > 1:
        raise ValueError(f"element is not homogeneous: weights {sorted(ws)}")
    return ws.pop() if ws else 0


def families(x: Poly) -> set[str]:
    return {v[0] for v in x.variables() if is_generator(v)}


def _require_family(x: Poly, family: str, op: str):
    other = families(x) - {family}
    if other:
        raise ValueError(f"{op} expects only {family}-generators, found {sorted(other)}")


def class_for_sigma(b: Mapping[int, GradedClass] | Callable[[int], GradedClass], lam) -> Poly:
    """b^(sigma) for sigma of cycle type lam: prod_r A_r(b_r)^k_r / (k_r! r^k_r)."""
    get = b if callable(b) else b.get
    out = ONE
    for r, k in Partition(lam).multiplicities().items():
        br = get(r)
        if br is None:
            raise ValueError(f"payload b_{r} is missing")
        out = out * creation(r, br) ** k * Fraction(1, factorial(k) * r ** k)
    return out


def _rename(x: Poly, src: str, dst: str, with_p: bool, normalize: bool) -> Poly:
    def fn(mono):
        new = []
        ws = []
        for v, e in mono:
            if v[0] == src:
                new.append(((dst,) + v[1:], e))
                if with_p:
                    new.append((("p", v[1]), e))
                ws.extend([v[1]] * e)
            else:
                new.append((v, e))
        factor = 1
        if normalize and ws:
            factor = Fraction(1, factorial(sum(ws)))
            for w in ws:
                factor *= factorial(w)
        return new, factor

    return x.map_monomials(fn)


def pushforward_pi(x: Poly) -> Poly:
    """pi_*: A_r(v) -> p_r D_r(v), extended multiplicatively."""
    _require_family(x, "A", "pushforward_pi")
    return _rename(x, "A", "D", with_p=True, normalize=False)


def average_F(x: Poly) -> Poly:
    """Frobenius-type averaging av_F: A_r(v) -> p_r Delta_r(v).

    Multiplicative for the twisted product on the target.  In the stored
    (plain-product) basis a weight-n monomial with generator weights w_j
    picks up the factor prod(w_j!) / n!.
    """
    _require_family(x, "A", "average_F")
    return _rename(x, "A", "Delta", with_p=True, normalize=True)


def average(x: Poly) -> Poly:
    """av: A_r(v) -> Delta_r(v), i.e. average_F followed by p_i -> 1."""
    _require_family(x, "A", "average")
    return _rename(x, "A", "Delta", with_p=False, normalize=True)


def to_twisted_basis(x: Poly) -> Poly:
    """Re-express a Delta-family element in the basis of twisted-product monomials."""
    _require_family(x, "Delta", "to_twisted_basis")

    def fn(mono):
        ws = monomial_weights(mono)
        f = Fraction(factorial(sum(ws)))
        for w in ws:
            f /= factorial(w)
        return mono, f

    return x.map_monomials(fn)


def from_twisted_basis(x: Poly) -> Poly:
    _require_family(x, "Delta", "from_twisted_basis")

    def fn(mono):
        ws = monomial_weights(mono)
        f = Fraction(1, factorial(sum(ws)))
        for w in ws:
            f *= factorial(w)
        return mono, f

    return x.map_monomials(fn)


def twisted_mul(x: Poly, y: Poly) -> Poly:
    """Twisted product: n!m!/(n+m)! times the plain product on weight (n, m) parts."""
    return from_twisted_basis(to_twisted_basis(x) * to_twisted_basis(y))


def pushforward_id(x: Poly) -> Poly:
    """pi_* on the identity component: Delta_r(v) -> D_r(v), a ring map from the
    twisted product to the Pontrjagin product."""
    _require_family(x, "Delta", "pushforward_id")
    return _rename(to_twisted_basis(x), "Delta", "D", with_p=False, normalize=False)


def specialize_pont(x: Poly, assignment: Assignment) -> Poly:
    """Substitute the power sums in a Pontrjagin-side element."""
    return specialize_p(x, assignment)


def identity_projection(x: Poly) -> Poly:
    """Keep the part supported on the identity component (A_1 generators only)."""
    return x.filter(lambda mono: all(v[1] == 1 for v, _ in mono if is_generator(v)))


def pont_degree(x: Poly) -> Poly:
    """Degree map on the Pontrjagin side: D_r(label, i) -> 1 if i == 0 else 0.

    deg d_{r*}(v) = deg(v) is the degree-0 component of v, and the degree is
    multiplicative for the Pontrjagin product.
    """
    _require_family(x, "D", "pont_degree")
    return x.substitute(lambda v: (1 if v[3] == 0 else 0) if v[0] == "D" else None)


def point_evaluation(x: Poly) -> Poly:
    """Evaluate a Delta-family element over a point (all payloads erased to 1)."""
    return to_twisted_basis(x).substitute(lambda v: 1 if v[0] == "Delta" else None)


# JSON


def generator_to_json(v) -> dict:
    family, r, label, degree = v
    return {"family": family, "r": r, "label": label, "degree": degree}
