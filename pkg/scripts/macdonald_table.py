"""Genera of the symmetric products Z^(n) from the genus of Z.

    python scripts/macdonald_table.py --chi "1+y" --order 8
"""
import argparse
from dataclasses import dataclass

from symprod.exactalg import format_laurent, parse_laurent
from symprod.genseries import degree_symmetric_series


@dataclass
class TableConfig:
    chi: str = "1+y"
    order: int = 8
    variant: str = "symmetric"


def table(cfg: TableConfig) -> list[tuple[int, str]]:
    s = degree_symmetric_series(parse_laurent(cfg.chi), cfg.order, cfg.variant)
    return [(n, format_laurent(c)) for n, c in enumerate(s)]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--chi", default=TableConfig.chi)
    ap.add_argument("--order", type=int, default=TableConfig.order)
    ap.add_argument("--variant", default=TableConfig.variant, choices=["symmetric", "alternating"])
    cfg = TableConfig(**vars(ap.parse_args()))
    print(f"# {cfg.variant} powers, chi = {cfg.chi}")
    for n, text in table(cfg):
        print(f"{n:3d}  {text}")


if __name__ == "__main__":
    main()
