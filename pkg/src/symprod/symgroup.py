"""Permutations, explicit subgroups of S_n, and class functions.

Subgroups are concrete element lists.  Everything that enumerates group
elements is protected by a degree guard (default n <= 8, override with the
``guard`` argument or the ``SYMPROD_GUARD_N`` environment variable).
"""
from __future__ import annotations

import os
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations as _iter_perms
from math import factorial
from typing import Iterable, Mapping

from .exactalg import Poly, as_poly
from .partitions import Partition, enumerate_partitions, z_of

DEFAULT_GUARD_N = 8


class GuardError(ValueError):
    """A brute-force operation was asked for a degree above its guard."""


def guard_n(guard: int | None = None) -> int:
    if guard is not None:
        return guard
    env = os.environ.get("SYMPROD_GUARD_N")
    return int(env) if env else DEFAULT_GUARD_N


def check_guard(n: int, guard: int | None = None, what: str = "operation"):
    limit = guard_n(guard)
    if n > limit:
        raise GuardError(f"{what} needs n={n}, above the guard n<={limit}")


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of {1..n}; ``images[i-1]`` is the image of i."""

    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(i) for i in self.images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"not a permutation of 1..{len(imgs)}: {imgs}")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, text: str, n: int) -> "Permutation":
        return parse_cycles(text, n)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition: (self * other)(i) = self(other(i))."""
        if other.n != self.n:
            raise ValueError("cannot compose permutations of different degree")
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> Partition:
        return Partition(len(c) for c in self.cycles())

    def sign(self) -> int:
        return (-1) ** (self.n - len(self.cycles()))

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.n + 1))

    def __str__(self) -> str:
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles() if len(c) > 1)
        return body or "()"


def parse_cycles(text: str, n: int) -> Permutation:
    """Parse cycle notation such as ``"(1 2)(3 4 5)"``; fixed points may be omitted.

    Cycles are composed right to left, as usual.  Commas may separate entries.
    """
    text = text.strip()
    if not re.fullmatch(r"(\(\s*[\d,\s]*\))*", text.replace(" ", "")) and text not in ("", "e", "id"):
        raise ValueError(f"malformed cycle notation: {text!r}")
    perm = Permutation.identity(n)
    for body in reversed(re.findall(r"\(([^()]*)\)", text)):
        entries = [int(tok) for tok in body.replace(",", " ").split()]
        if len(set(entries)) != len(entries):
            raise ValueError(f"repeated entry in cycle ({body})")
        if any(e < 1 or e > n for e in entries):
            raise ValueError(f"cycle ({body}) out of range for n={n}")
        imgs = list(range(1, n + 1))
        for a, b in zip(entries, entries[1:] + entries[:1]):
            imgs[a - 1] = b
        perm = Permutation(tuple(imgs)) * perm
    return perm


def all_permutations(n: int, guard: int | None = None) -> list[Permutation]:
    check_guard(n, guard, "enumerating S_n")
    return [Permutation(tuple(p)) for p in _iter_perms(range(1, n + 1))]


def subgroup_closure(
    generators: Iterable[Permutation], n: int | None = None, guard: int | None = None
) -> list[Permutation]:
    """All elements of the subgroup generated by ``generators``, sorted.

    ``n`` is required when ``generators`` is empty.
    """
    gens = list(generators)
    degrees = {g.n for g in gens}
    if n is not None:
        degrees.add(n)
    if len(degrees) > 1:
        raise ValueError(f"generators of mixed degree: {sorted(degrees)}")
    if not degrees:
        raise ValueError("degree n is required for an empty generator list")
    (deg,) = degrees
    check_guard(deg, guard, "subgroup closure")
    ident = Permutation.identity(deg)
    elements = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = g * x
                if y not in elements:
                    elements.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(elements)


def alternating_group(n: int, guard: int | None = None) -> list[Permutation]:
    return [p for p in all_permutations(n, guard) if p.sign() == 1]


# class functions


@dataclass(frozen=True)
class ClassFunction:
    """A function on the conjugacy classes of S_n, keyed by cycle type.

    Values are Fractions or Polys (Laurent-valued characters).
    """

    n: int
    values: Mapping[Partition, object]

    def __post_init__(self):
        parts = enumerate_partitions(self.n)
        vals = {}
        for lam in parts:
            if lam not in self.values:
                raise ValueError(f"class function of degree {self.n} missing class {list(lam)}")
            v = self.values[lam]
            vals[lam] = v if isinstance(v, Poly) else Fraction(v)
        extra = set(map(tuple, self.values)) - set(parts)
        if extra:
            raise ValueError(f"classes not of degree {self.n}: {sorted(extra)}")
        object.__setattr__(self, "values", vals)

    def __call__(self, lam) -> object:
        if isinstance(lam, Permutation):
            lam = lam.cycle_type()
        return self.values[Partition(lam)]

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        self._same(other)
        return ClassFunction(self.n, {k: self.values[k] + other.values[k] for k in self.values})

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        self._same(other)
        return ClassFunction(self.n, {k: self.values[k] - other.values[k] for k in self.values})

    def __mul__(self, c) -> "ClassFunction":
        if isinstance(c, ClassFunction):
            self._same(c)
            return ClassFunction(self.n, {k: self.values[k] * c.values[k] for k in self.values})
        return ClassFunction(self.n, {k: v * c for k, v in self.values.items()})

    __rmul__ = __mul__

    def _same(self, other: "ClassFunction"):
        if other.n != self.n:
            raise ValueError(f"degree mismatch: {self.n} vs {other.n}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.n == other.n and all(
            as_poly(self.values[k]) == as_poly(other.values[k]) for k in self.values
        )

    def __hash__(self):
        return hash((self.n, tuple(sorted((k, as_poly(v)) for k, v in self.values.items()))))


def inner_product(f: ClassFunction, g: ClassFunction):
    """<f, g> = sum over classes of f(lam) g(lam) / z_lam (characters are real)."""
    f._same(g)
    return sum((f.values[lam] * g.values[lam] * Fraction(1, z_of(lam)) for lam in f.values),
               Fraction(0))


def trivial_character(n: int) -> ClassFunction:
    return ClassFunction(n, {lam: 1 for lam in enumerate_partitions(n)})


def sign_character(n: int) -> ClassFunction:
    return ClassFunction(n, {lam: (-1) ** (n - len(lam)) for lam in enumerate_partitions(n)})


def regular_character(n: int) -> ClassFunction:
    ident = Partition([1] * n)
    return ClassFunction(n, {lam: (factorial(n) if lam == ident else 0)
                             for lam in enumerate_partitions(n)})


def class_indicator(lam) -> ClassFunction:
    lam = Partition(lam)
    return ClassFunction(lam.n, {mu: int(mu == lam) for mu in enumerate_partitions(lam.n)})


def induced_trivial_character(K: list[Permutation], n: int | None = None) -> ClassFunction:
    """Character of Ind_K^{S_n}(triv) for an explicit subgroup K.

    Uses chi(lam) = z_lam * |K cap C_lam| / |K|, which is
    (1/|K|) #{g : g^-1 sigma g in K} counted class by class.
    """
    if not K:
        raise ValueError("a subgroup has at least the identity element")
    if n is None:
        n = K[0].n
    if any(k.n != n for k in K):
        raise ValueError("subgroup elements of mixed degree")
    counts: dict[Partition, int] = {}
    for k in K:
        lam = k.cycle_type()
        counts[lam] = counts.get(lam, 0) + 1
    values = {}
    for lam in enumerate_partitions(n):
        values[lam] = Fraction(z_of(lam) * counts.get(lam, 0), len(K))
    return ClassFunction(n, values)


# Murnaghan-Nakayama


def _beta_set(mu: tuple[int, ...]) -> tuple[int, ...]:
    length = len(mu)
    return tuple(sorted(mu[i] + (length - 1 - i) for i in range(length)))


def _from_beta(beta: tuple[int, ...]) -> tuple[int, ...]:
    b = sorted(beta, reverse=True)
    length = len(b)
    return tuple(p for p in (b[i] - (length - 1 - i) for i in range(length)) if p > 0)


@lru_cache(maxsize=None)
def _mn(mu: tuple[int, ...], cycles: tuple[int, ...]) -> int:
    # remove a border strip of length cycles[0] from mu, recursively
    if not cycles:
        return 1 if not mu else 0
    r, rest = cycles[0], cycles[1:]
    beta = _beta_set(mu)
    occupied = set(beta)
    total = 0
    for b in beta:
        if b - r < 0 or (b - r) in occupied:
            continue
        # height of the strip = number of beads jumped over
        height = sum(1 for c in beta if b - r < c < b)
        new_beta = tuple(sorted((occupied - {b}) | {b - r}))
        total += (-1) ** height * _mn(_from_beta(new_beta), rest)
    return total


def mn_value(mu, lam) -> int:
    """chi^mu evaluated on the class of cycle type lam."""
    mu, lam = Partition(mu), Partition(lam)
    if mu.n != lam.n:
        raise ValueError("shape and class must have the same size")
    return _mn(tuple(mu), tuple(lam))


def irreducible_character(mu) -> ClassFunction:
    """Character of the irreducible representation V_mu."""
    mu = Partition(mu)
    return ClassFunction(mu.n, {lam: mn_value(mu, lam) for lam in enumerate_partitions(mu.n)})


def character_table(n: int) -> dict[Partition, ClassFunction]:
    return {mu: irreducible_character(mu) for mu in enumerate_partitions(n)}


def induction_product(f: ClassFunction, g: ClassFunction, guard: int | None = None) -> ClassFunction:
    """Ind_{S_n x S_m}^{S_(n+m)}(f x g) by summation over the Young subgroup.

    For a class lam of S_(n+m):
    Ind(lam) = z_lam / (n! m!) * sum of f(a) g(b) over pairs (a, b) in
    S_n x S_m whose combined cycle type is lam.
    """
    n, m = f.n, g.n
    check_guard(n + m, guard, "induction product")
    acc: dict[Partition, object] = {lam: Fraction(0) for lam in enumerate_partitions(n + m)}
    types_a = [a.cycle_type() for a in all_permutations(n, guard=n)]
    types_b = [b.cycle_type() for b in all_permutations(m, guard=m)]
    for ta in types_a:
        fa = f(ta)
        if not fa:
            continue
        for tb in types_b:
            gbv = g(tb)
            if not gbv:
                continue
            lam = Partition(ta + tb)
            acc[lam] = acc[lam] + fa * gbv
    scale = Fraction(1, factorial(n) * factorial(m))
    return ClassFunction(n + m, {lam: v * (scale * z_of(lam)) for lam, v in acc.items()})


def unit_class_function() -> ClassFunction:
    return ClassFunction(0, {Partition(): 1})
