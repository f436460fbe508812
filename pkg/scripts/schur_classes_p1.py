"""Schur-functor genera of powers of the projective line.

For each mu |- n the engine value of the V_mu-twisted genus is printed next to
the trace of V_mu (x) H^*(P^1)^(x)n averaged over S_n, computed by the oracle.
"""
import argparse
from dataclasses import dataclass

from symprod import oracle
from symprod.exactalg import format_laurent
from symprod.genseries import twisted_genus
from symprod.partitions import enumerate_partitions, partition_key
from symprod.symfunc import SYMMETRIC, specialize_p
from symprod.symgroup import irreducible_character


@dataclass
class SchurConfig:
    max_n: int = 4


def rows(cfg: SchurConfig):
    W = oracle.PROJECTIVE_LINE
    chi = W.chi_minus_y()
    for n in range(1, cfg.max_n + 1):
        for mu in enumerate_partitions(n):
            V = irreducible_character(mu)
            engine = specialize_p(twisted_genus(n, V, chi), SYMMETRIC)
            yield n, partition_key(mu), format_laurent(engine), engine == oracle.twisted_invariant_trace(W, V)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=SchurConfig.max_n)
    cfg = SchurConfig(max_n=ap.parse_args().max_n)
    for n, mu, text, ok in rows(cfg):
        print(f"n={n} mu={mu:<10} {text:<28} {'oracle ok' if ok else 'ORACLE MISMATCH'}")


if __name__ == "__main__":
    main()
