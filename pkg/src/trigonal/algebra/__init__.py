"""Exact arithmetic: rationals, polynomials, resultants, Groebner bases, integer normal forms."""

from .bipoly import BiPoly
from .groebner import unit_ideal_2var
from .intmatrix import IntMatrix, kernel_lattice, multiplicative_consistency, smith_normal_form
from .rational import Rat, as_rat, format_rat, parse_rat
from .resultant import resultant_y
from .unipoly import UniPoly, gcd, root_multiplicities, squarefree_decomposition, squarefree_part

__all__ = [
    "BiPoly",
    "IntMatrix",
    "Rat",
    "UniPoly",
    "as_rat",
    "format_rat",
    "gcd",
    "kernel_lattice",
    "multiplicative_consistency",
    "parse_rat",
    "resultant_y",
    "root_multiplicities",
    "smith_normal_form",
    "squarefree_decomposition",
    "squarefree_part",
    "unit_ideal_2var",
]
