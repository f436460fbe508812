"""Oracle-versus-engine comparison suites, used by ``symprod verify`` and the tests."""
from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from . import deloc, genseries, oracle
from .exactalg import ONE, ZERO, Poly, YPOLY, laurent, laurent_substitute
from .homclass import ClassKind, GradedClass, adams
from .partitions import enumerate_partitions
from .symfunc import SYMMETRIC, frobenius_char, specialize_p
from .symgroup import (
    Permutation,
    all_permutations,
    alternating_group,
    character_table,
    induction_product,
    inner_product,
    irreducible_character,
    sign_character,
    subgroup_closure,
    trivial_character,
)

SCHEMA_VERSION = 1


# random inputs


def random_rational(rng: random.Random, span: int = 3) -> Fraction:
    num = rng.randint(-span, span)
    return Fraction(num, rng.choice((1, 1, 2, 3)))


def random_laurent(rng: random.Random, lo: int = -1, hi: int = 2) -> Poly:
    return laurent({k: random_rational(rng) for k in range(lo, hi + 1) if rng.random() < 0.5})


def random_class(rng: random.Random, kind: ClassKind | None = None, label: str = "v",
                 max_degree: int = 2) -> GradedClass:
    """Sparse random class; never zero."""
    kind = kind or rng.choice(list(ClassKind))
    comps = {}
    while not comps:
        for i in range(max_degree + 1):
            if rng.random() < 0.6:
                c = random_laurent(rng) if kind is ClassKind.HIRZEBRUCH_MINUS_Y else random_rational(rng)
                if c:
                    comps[i] = c
    return GradedClass(kind, comps, label)


def random_payload(rng: random.Random, N: int) -> dict[int, GradedClass]:
    """Independent classes b_1..b_N, each with its own basis label."""
    kind = rng.choice(list(ClassKind))
    return {r: random_class(rng, kind, label=f"b{r}", max_degree=1) for r in range(1, N + 1)}


def random_space(rng: random.Random, max_dim: int = 3, odd: bool = True) -> oracle.BigradedSpace:
    dims: dict[tuple[int, int], int] = {}
    for _ in range(rng.randint(1, max_dim)):
        i = rng.randint(0, 3) if odd else 2 * rng.randint(0, 2)
        p = rng.randint(0, 2)
        dims[(i, p)] = dims.get((i, p), 0) + 1
    return oracle.BigradedSpace(dims)


def cycle_type_product(chi: Poly, sigma: Permutation) -> Poly:
    out = ONE
    for r, k in sigma.cycle_type().multiplicities().items():
        out = out * laurent_substitute(chi, r) ** k
    return out


def sample_subgroups(n: int) -> list[tuple[str, list[Permutation]]]:
    """{e}, each cyclic subgroup, A_n and S_n, deduplicated."""
    seen = set()
    out = []
    candidates = [("trivial", subgroup_closure([], n))]
    candidates += [(f"<{g}>", subgroup_closure([g], n)) for g in all_permutations(n)]
    candidates += [("alternating", alternating_group(n)), ("symmetric", all_permutations(n))]
    for name, K in candidates:
        key = tuple(K)
        if key not in seen:
            seen.add(key)
            out.append((name, K))
    return out


# suites


@dataclass
class VerifyConfig:
    suites: list[str] = field(default_factory=lambda: ["all"])
    max_n: int = 5
    seed: int = 0
    threads: int = 1

    def resolved_suites(self) -> list[str]:
        names = []
        for s in self.suites:
            if s == "all":
                names.extend(SUITES)
            elif s in SUITES:
                names.append(s)
            else:
                raise ValueError(f"unknown suite {s!r}; choose from {', '.join(['all', *SUITES])}")
        return list(dict.fromkeys(names))


Check = tuple[str, bool]


def suite_engine(cfg: VerifyConfig, rng: random.Random) -> list[Check]:
    out = []
    for trial in range(5):
        b = random_payload(rng, cfg.max_n)
        series = genseries.abstract_series(b, cfg.max_n)
        for n in range(cfg.max_n + 1):
            out.append((f"payload {trial}, n={n}", series[n] == oracle.direct_conjugacy_sum(b, n)))
    cl = random_class(rng)
    eq = genseries.equivariant_class_series(cl, cfg.max_n)
    push = genseries.symmetric_product_series(cl, cfg.max_n)
    out.append(("pushforward of the equivariant series", eq.map(deloc.pushforward_pi) == push))
    return out


def suite_localization(cfg: VerifyConfig, rng: random.Random) -> list[Check]:
    out = []
    top = min(cfg.max_n, 4)
    for trial in range(4):
        W = random_space(rng)
        chi = W.chi_minus_y()
        for n in range(1, top + 1):
            for g in all_permutations(n):
                dense = oracle.kunneth_trace(W, g, method="dense")
                fast = oracle.kunneth_trace(W, g, method="orbit")
                ok = dense == fast == cycle_type_product(chi, g)
                out.append((f"W {W.to_json()}, sigma {g}", ok))
    return out


def suite_quotient(cfg: VerifyConfig, rng: random.Random) -> list[Check]:
    out = []
    spaces = [oracle.PROJECTIVE_LINE, random_space(rng, odd=False)]
    for n in range(1, min(cfg.max_n, 4) + 1):
        for name, K in sample_subgroups(n):
            for W in spaces:
                lhs = genseries.quotient_genus(n, K, W.chi_minus_y())
                out.append((f"n={n}, K={name}, W {W.to_json()}", lhs == oracle.invariant_trace(W, K)))
    return out


def suite_macdonald(cfg: VerifyConfig, rng: random.Random) -> list[Check]:
    N = max(cfg.max_n, 1)
    chi = ONE + YPOLY
    sym = genseries.degree_symmetric_series(chi, N)
    alt = genseries.degree_symmetric_series(chi, N, "alternating")
    out = []
    for n in range(N + 1):
        closed = sum((YPOLY ** i for i in range(n + 1)), ZERO)
        out.append((f"symmetric t^{n}", sym[n] == closed))
        expected = [ONE, chi, YPOLY][n] if n <= 2 else ZERO
        out.append((f"alternating t^{n}", alt[n] == expected))
    return out


def suite_twisting(cfg: VerifyConfig, rng: random.Random) -> list[Check]:
    out = []
    cl = random_class(rng)
    push = genseries.symmetric_product_series(cl, cfg.max_n)
    alt = genseries.power_series_variant(cl, cfg.max_n, "alternating")
    for n in range(cfg.max_n + 1):
        out.append((f"Schur decomposition n={n}", genseries.schur_decomposition_check(n, cl)))
        triv = genseries.twisted_class(n, trivial_character(n), cl)
        out.append((f"trivial twist n={n}", triv == push[n]))
        sgn = specialize_p(genseries.twisted_class(n, sign_character(n), cl), SYMMETRIC)
        out.append((f"sign twist n={n}", sgn == alt[n]))
    W = random_space(rng, max_dim=2)
    for n in range(1, min(cfg.max_n, 4) + 1):
        for mu in enumerate_partitions(n):
            V = irreducible_character(mu)
            engine = specialize_p(genseries.twisted_genus(n, V, W.chi_minus_y()), SYMMETRIC)
            out.append((f"twisted genus mu={list(mu)}", engine == oracle.twisted_invariant_trace(W, V)))
    return out


def suite_frobenius(cfg: VerifyConfig, rng: random.Random) -> list[Check]:
    out = []
    for n in range(cfg.max_n + 1):
        table = character_table(n)
        for a, fa in table.items():
            for b, fb in table.items():
                out.append((f"orthogonality {list(a)} {list(b)}", inner_product(fa, fb) == int(a == b)))
    for n in range(cfg.max_n + 1):
        for m in range(cfg.max_n + 1 - n):
            for a, fa in character_table(n).items():
                for b, fb in character_table(m).items():
                    lhs = frobenius_char(induction_product(fa, fb))
                    out.append((f"ch_F product {list(a)} {list(b)}", lhs == frobenius_char(fa) * frobenius_char(fb)))
    return out


def suite_orbifold(cfg: VerifyConfig, rng: random.Random) -> list[Check]:
    out = []
    top = min(cfg.max_n, 5)
    expansion = oracle.product_expansion(2, top)
    shadow = genseries.ohmoto_degree_series(genseries.j_divisor_sum, 2, top)
    for n in range(top + 1):
        value = genseries.orbifold_euler(n, 2, guard=top)
        out.append((f"orbifold n={n}", value == expansion[n] and shadow[n] == value))
    for r in range(1, 61):
        out.append((f"index {r} in Z^2", oracle.count_index_subgroups(2, r) == genseries.j_divisor_sum(r)))
    return out


def suite_diagram(cfg: VerifyConfig, rng: random.Random) -> list[Check]:
    out = []
    cls = [random_class(rng, label=f"u{k}") for k in range(3)]

    def monomial():
        x = ONE
        for _ in range(rng.randint(1, 3)):
            r = rng.randint(1, 3)
            x = x * deloc.creation(r, adams(r, rng.choice(cls)))
        return x

    for trial in range(10):
        x, y = monomial(), monomial()
        out.append((f"pi multiplicative {trial}",
                    deloc.pushforward_pi(x * y) == deloc.pushforward_pi(x) * deloc.pushforward_pi(y)))
        out.append((f"av_F twisted-multiplicative {trial}",
                    deloc.average_F(x * y) == deloc.twisted_mul(deloc.average_F(x), deloc.average_F(y))))
        out.append((f"diagram {trial}",
                    deloc.pushforward_id(deloc.average(x)) == specialize_p(deloc.pushforward_pi(x), SYMMETRIC)))
    return out


SUITES = {
    "engine": suite_engine,
    "localization": suite_localization,
    "quotient": suite_quotient,
    "macdonald": suite_macdonald,
    "twisting": suite_twisting,
    "frobenius": suite_frobenius,
    "orbifold": suite_orbifold,
    "diagram": suite_diagram,
}


def _run_suite(name: str, cfg: VerifyConfig) -> dict:
    rng = random.Random(f"{cfg.seed}:{name}")
    checks = SUITES[name](cfg, rng)
    return {
        "checks": len(checks),
        "failures": [label for label, ok in checks if not ok],
    }


def run_verify(cfg: VerifyConfig) -> dict:
    """Run the selected suites; the report does not depend on ``cfg.threads``."""
    if cfg.max_n < 0:
        raise ValueError("max-n must be non-negative")
    if cfg.threads < 1:
        raise ValueError("threads must be positive")
    names = cfg.resolved_suites()
    with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
        results = list(pool.map(lambda s: _run_suite(s, cfg), names))
    suites = dict(zip(names, results))
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "verify",
        "seed": cfg.seed,
        "max_n": cfg.max_n,
        "suites": suites,
        "total_checks": sum(r["checks"] for r in results),
        "total_failures": sum(len(r["failures"]) for r in results),
    }
