"""Brute-force verifiers, kept independent of the series engine.

Nothing here calls into :mod:`symprod.genseries` or :mod:`symprod.deloc`;
only exact scalars, permutations and class-function values are shared.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import factorial
from typing import Callable, Iterator, Mapping

from .exactalg import ONE, ZERO, Poly, YPOLY
from .symgroup import ClassFunction, GuardError, Permutation, all_permutations

KUNNETH_MAX_N = 5
KUNNETH_MAX_DIM = 10 ** 4


@dataclass(frozen=True)
class BigradedSpace:
    """Graded vector space with dimensions dims[(i, p)], i cohomological, p Hodge."""

    dims: Mapping[tuple[int, int], int]

    def __post_init__(self):
        clean = {}
        for (i, p), d in sorted(self.dims.items()):
            if d < 0:
                raise ValueError("dimensions are non-negative")
            if d:
                clean[(int(i), int(p))] = int(d)
        object.__setattr__(self, "dims", clean)

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def basis(self) -> list[tuple[int, int]]:
        """One (i, p) entry per basis vector, in a fixed order."""
        return [ip for ip, d in self.dims.items() for _ in range(d)]

    def chi_minus_y(self) -> Poly:
        """sum (-1)^i dim(i, p) y^p."""
        out = ZERO
        for (i, p), d in self.dims.items():
            out = out + YPOLY ** p * ((-1) ** i * d)
        return out

    def to_json(self) -> dict[str, int]:
        return {f"{i},{p}": d for (i, p), d in self.dims.items()}

    @classmethod
    def from_json(cls, obj: Mapping[str, int]) -> "BigradedSpace":
        dims = {}
        for key, d in obj.items():
            i, p = (int(x) for x in key.split(","))
            dims[(i, p)] = int(d)
        return cls(dims)


PROJECTIVE_LINE = BigradedSpace({(0, 0): 1, (2, 1): 1})


def _koszul_sign(sigma: Permutation, degrees: tuple[int, ...]) -> int:
    # factor at position j moves to sigma(j); swapping two odd factors costs -1
    n = sigma.n
    odd = 0
    for j in range(n):
        if degrees[j] % 2 == 0:
            continue
        for k in range(j + 1, n):
            if degrees[k] % 2 and sigma.images[j] > sigma.images[k]:
                odd += 1
    return -1 if odd % 2 else 1


def _check_size(W: BigradedSpace, n: int):
    if n > KUNNETH_MAX_N:
        raise GuardError(f"Kunneth traces are limited to n <= {KUNNETH_MAX_N}")
    if W.total_dim ** n > KUNNETH_MAX_DIM:
        raise GuardError(f"dim(W)^n = {W.total_dim ** n} exceeds {KUNNETH_MAX_DIM}")


def action_matrix(W: BigradedSpace, sigma: Permutation) -> list[tuple[int, int]]:
    """Signed permutation matrix of sigma on W^{(x) n}, column by column.

    Entry ``k`` is ``(row, sign)``: basis tensor k is sent to sign * tensor row.
    Basis tensors are tuples of basis indices of W in lexicographic order.
    """
    n = sigma.n
    _check_size(W, n)
    basis = W.basis()
    dim = len(basis)
    cols = []
    for idx in product(range(dim), repeat=n):
        target = [0] * n
        for j in range(n):
            target[sigma.images[j] - 1] = idx[j]
        row = 0
        for t in target:
            row = row * dim + t
        sign = _koszul_sign(sigma, tuple(basis[b][0] for b in idx))
        cols.append((row, sign))
    return cols


def _weight(W_basis, idx) -> Poly:
    i = sum(W_basis[b][0] for b in idx)
    p = sum(W_basis[b][1] for b in idx)
    return YPOLY ** p * (-1) ** i


def _fixed_tensors(dim: int, sigma: Permutation) -> Iterator[tuple[int, ...]]:
    # tensors fixed up to sign: constant along each cycle
    cycles = sigma.cycles()
    for choice in product(range(dim), repeat=len(cycles)):
        idx = [0] * sigma.n
        for cyc, b in zip(cycles, choice):
            for j in cyc:
                idx[j - 1] = b
        yield tuple(idx)


def kunneth_trace(
    W: BigradedSpace,
    sigma: Permutation,
    V: ClassFunction | None = None,
    method: str = "dense",
) -> Poly:
    """Graded trace sum_{i,p} (-1)^i tr(sigma | (W^{(x)n})^{i,p}) y^p.

    ``method="dense"`` reads the diagonal of the full action matrix;
    ``method="orbit"`` walks only the tensors constant along cycles.  When V
    is given the result is multiplied by chi_V(sigma).
    """
    n = sigma.n
    _check_size(W, n)
    basis = W.basis()
    dim = len(basis)
    total = ZERO
    if method == "dense":
        for k, (row, sign) in enumerate(action_matrix(W, sigma)):
            if row == k:
                idx = []
                for _ in range(n):
                    idx.append(k % dim)
                    k //= dim
                total = total + _weight(basis, idx) * sign
    elif method == "orbit":
        for idx in _fixed_tensors(dim, sigma):
            sign = _koszul_sign(sigma, tuple(basis[b][0] for b in idx))
            total = total + _weight(basis, idx) * sign
    else:
        raise ValueError(f"unknown method {method!r}")
    if V is not None:
        if V.n != n:
            raise ValueError("representation degree does not match the permutation")
        total = total * V(sigma.cycle_type())
    return total


def invariant_trace(W: BigradedSpace, K: list[Permutation], method: str = "dense") -> Poly:
    """Genus of the K-invariants of W^{(x)n}: the average of the graded traces over K."""
    if not K:
        raise ValueError("empty subgroup")
    total = ZERO
    for g in K:
        total = total + kunneth_trace(W, g, method=method)
    return total / len(K)


def twisted_invariant_trace(W: BigradedSpace, V: ClassFunction, method: str = "orbit") -> Poly:
    """Genus of (V (x) W^{(x)n})^{S_n}: (1/n!) sum_sigma chi_V(sigma) tr(sigma)."""
    n = V.n
    total = ZERO
    for g in all_permutations(n, guard=KUNNETH_MAX_N):
        total = total + kunneth_trace(W, g, V=V, method=method)
    return total / factorial(n)


# direct conjugacy sums


def _cycle_types(n: int) -> Iterator[dict[int, int]]:
    """All {r: k_r} with sum r*k_r = n, by bounded brute force over k_1..k_n."""
    ranges = [range(n // r + 1) for r in range(1, n + 1)]
    for ks in product(*ranges):
        if sum(r * k for r, k in zip(range(1, n + 1), ks)) == n:
            yield {r: k for r, k in zip(range(1, n + 1), ks) if k}


def _A(r: int, label: str, degree: int) -> Poly:
    return Poly.var(("A", r, label, degree))


def direct_conjugacy_sum(b: Mapping | Callable, n: int) -> Poly:
    """sum over conjugacy classes of S_n of prod_r A_r(b_r)^k_r / (k_r! r^k_r)."""
    get = b if callable(b) else (lambda r: b[r])
    total = ZERO
    for ks in _cycle_types(n):
        term = ONE
        for r, k in ks.items():
            c = get(r)
            a_r = ZERO
            for i, coeff in c.components.items():
                a_r = a_r + _A(r, c.label, i) * coeff
            for _ in range(k):
                term = term * a_r
            term = term * Fraction(1, factorial(k) * r ** k)
        total = total + term
    return total


# sublattices


def hnf_matrices(d: int, r: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Upper-triangular Hermite normal forms of determinant r.

    Diagonal entries multiply to r; each entry above the diagonal in column j
    lies in [0, a_jj).
    """
    def diagonals(k, rest):
        if k == 1:
            yield (rest,)
            return
        for a in range(1, rest + 1):
            if rest % a == 0:
                for tail in diagonals(k - 1, rest // a):
                    yield (a,) + tail

    for diag in diagonals(d, r):
        slots = [(i, j) for j in range(d) for i in range(j)]
        for vals in product(*(range(diag[j]) for i, j in slots)):
            m = [[0] * d for _ in range(d)]
            for k in range(d):
                m[k][k] = diag[k]
            for (i, j), v in zip(slots, vals):
                m[i][j] = v
            yield tuple(tuple(row) for row in m)


def count_index_subgroups(d: int, r: int) -> int:
    """Number of index-r subgroups of Z^d (d in 1..3, r <= 200)."""
    if d not in (1, 2, 3):
        raise ValueError("rank must be 1, 2 or 3")
    if not 1 <= r <= 200:
        raise ValueError("index must be in 1..200")
    return sum(1 for _ in hnf_matrices(d, r))


def commuting_pair_orbits(n: int) -> Iterator[int]:
    """Orbit counts of <sigma, tau> on {1..n} over all commuting pairs."""
    perms = all_permutations(n, guard=n)
    for s in perms:
        for t in perms:
            if s * t == t * s:
                seen: set[int] = set()
                orbits = 0
                for start in range(1, n + 1):
                    if start in seen:
                        continue
                    orbits += 1
                    stack = [start]
                    seen.add(start)
                    while stack:
                        x = stack.pop()
                        for g in (s, t):
                            y = g(x)
                            if y not in seen:
                                seen.add(y)
                                stack.append(y)
                yield orbits


def product_expansion(e: int, N: int) -> list[int]:
    """Coefficients of prod_{r>=1} (1 - t^r)^(-e) up to t^N, by repeated
    multiplication with geometric series (e a non-negative integer)."""
    coeffs = [1] + [0] * N
    for r in range(1, N + 1):
        for _ in range(e):
            # multiply by 1/(1 - t^r)
            for k in range(r, N + 1):
                coeffs[k] += coeffs[k - r]
    return coeffs


def local_genus_product(chi: Poly, sigma: Permutation) -> Poly:
    """prod over cycles of chi(y^length), evaluated by explicit exponent scaling."""
    out = ONE
    for cyc in sigma.cycles():
        r = len(cyc)
        out = out * Poly({tuple((v, e * r) for v, e in mono): c for mono, c in chi.items()})
    return out
