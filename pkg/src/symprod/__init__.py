"""Exact generating series for characteristic classes of symmetric products."""
from .exactalg import Poly, TruncSeries, format_laurent, parse_laurent, series_exp, series_log
from .partitions import Partition, enumerate_partitions, z_of
from .symgroup import ClassFunction, GuardError, Permutation, irreducible_character, parse_cycles
from .homclass import ClassKind, GradedClass, adams
from .genseries import (
    abstract_series,
    degree_symmetric_series,
    equivariant_class_series,
    orbifold_euler,
    quotient_genus,
    schur_class,
    symmetric_product_series,
    twisted_class,
    twisted_genus,
)

__all__ = [
    "Poly", "TruncSeries", "format_laurent", "parse_laurent", "series_exp", "series_log",
    "Partition", "enumerate_partitions", "z_of",
    "ClassFunction", "GuardError", "Permutation", "irreducible_character", "parse_cycles",
    "ClassKind", "GradedClass", "adams",
    "abstract_series", "degree_symmetric_series", "equivariant_class_series", "orbifold_euler",
    "quotient_genus", "schur_class", "symmetric_product_series", "twisted_class", "twisted_genus",
]
