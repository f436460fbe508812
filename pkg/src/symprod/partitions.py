"""Integer partitions as cycle types of permutations."""
from __future__ import annotations

from functools import lru_cache
from math import factorial
from typing import Iterable, Mapping


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Compares and hashes like the plain tuple, so ``Partition((2, 1)) == (2, 1)``
    and either may be used as a dictionary key.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(sorted((int(p) for p in parts), reverse=True))
        if parts and parts[-1] <= 0:
            raise ValueError(f"partition parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def n(self) -> int:
        return sum(self)

    def multiplicities(self) -> dict[int, int]:
        """Cycle type ``{r: k_r}`` with only positive k_r stored."""
        out: dict[int, int] = {}
        for p in self:
            out[p] = out.get(p, 0) + 1
        return dict(sorted(out.items()))

    def __repr__(self) -> str:
        return f"Partition({list(self)})"


CycleType = Mapping[int, int]


def cycle_type(lam: Iterable[int]) -> dict[int, int]:
    return Partition(lam).multiplicities()


def from_cycle_type(mult: CycleType) -> Partition:
    parts = []
    for r, k in mult.items():
        if r < 1 or k < 0:
            raise ValueError(f"invalid cycle type entry {r}: {k}")
        parts.extend([r] * k)
    return Partition(parts)


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n in reverse-lexicographic order, (n) first."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return [Partition(p) for p in _partitions(n, n)]


def z_of(lam: Iterable[int]) -> int:
    """Centralizer order prod_r r**k_r * k_r! of a permutation of type lam."""
    z = 1
    for r, k in cycle_type(lam).items():
        z *= r ** k * factorial(k)
    return z


def length_of(lam: Iterable[int]) -> int:
    return len(tuple(lam))


def class_size(lam: Iterable[int]) -> int:
    lam = Partition(lam)
    return factorial(lam.n) // z_of(lam)


def partition_to_json(lam: Iterable[int]) -> list[int]:
    return list(Partition(lam))


def partition_key(lam: Iterable[int]) -> str:
    """Compact JSON-array text used as a map key, e.g. ``"[3,2,1]"``."""
    return "[" + ",".join(str(p) for p in Partition(lam)) + "]"


def parse_partition(text: str) -> Partition:
    """Accept ``"[2,1]"``, ``"2,1"`` or ``"2 1"``; ``"[]"``/``""`` is empty."""
    body = text.strip().strip("[]()").replace(",", " ")
    return Partition(int(tok) for tok in body.split())
