"""Orbifold Euler characteristics of Z^n/S_n three ways.

Brute force over commuting pairs, the product prod_r (1 - t^r)^(-e), and the
degree-level Ohmoto series with j_r = sigma_1(r).
"""
import argparse
import time
from dataclasses import dataclass

from symprod import genseries, oracle
from symprod.exactalg import format_rational


@dataclass
class LadderConfig:
    e: int = 2
    max_n: int = 5


def ladder(cfg: LadderConfig) -> list[dict]:
    expansion = oracle.product_expansion(cfg.e, cfg.max_n)
    shadow = genseries.ohmoto_degree_series(genseries.j_divisor_sum, cfg.e, cfg.max_n)
    rows = []
    for n in range(cfg.max_n + 1):
        t0 = time.perf_counter()
        brute = genseries.orbifold_euler(n, cfg.e, guard=cfg.max_n)
        rows.append({
            "n": n,
            "commuting_pairs": format_rational(brute),
            "product": expansion[n],
            "ohmoto": format_rational(shadow[n].constant_term()),
            "seconds": time.perf_counter() - t0,
        })
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--e", type=int, default=LadderConfig.e)
    ap.add_argument("--max-n", type=int, default=LadderConfig.max_n)
    args = ap.parse_args()
    cfg = LadderConfig(e=args.e, max_n=args.max_n)
    print(f"{'n':>3} {'pairs':>8} {'product':>8} {'ohmoto':>8} {'time':>8}")
    for row in ladder(cfg):
        agree = row["commuting_pairs"] == str(row["product"]) == row["ohmoto"]
        print(f"{row['n']:>3} {row['commuting_pairs']:>8} {row['product']:>8} {row['ohmoto']:>8} "
              f"{row['seconds']:>7.3f}s{'' if agree else '  MISMATCH'}")


if __name__ == "__main__":
    main()
