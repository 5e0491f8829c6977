"""Class polynomials for the extended affine Weyl group of type A2.

Reduction-method class polynomials in the (twisted) cocenter of the
Iwahori-Hecke algebra, closed-form tables to check them against, and the
affine Deligne-Lusztig data they determine.
"""

from .adlv import (
    D3X,
    GL3,
    PGL3,
    U3,
    adlv,
    basic_class,
    ghkr_check,
    leading_table,
    rational_points,
    sigma_class,
    sigma_classes,
)
from .closedform import closed_form
from .conj import ClassId, Mode, classify, invariant, min_length
from .engine import Engine, class_polynomial
from .group import (
    TAU,
    ExtAffineElt,
    format_element,
    length,
    multiply,
    parse_element,
)
from .poly import QPoly, UPoly

__version__ = "0.1.0"

__all__ = [
    "ClassId", "D3X", "Engine", "ExtAffineElt", "GL3", "Mode", "PGL3", "QPoly", "TAU", "U3",
    "UPoly", "adlv", "basic_class", "class_polynomial", "classify", "closed_form",
    "format_element", "ghkr_check", "invariant", "leading_table", "length", "min_length",
    "multiply", "parse_element", "rational_points", "sigma_class", "sigma_classes",
]
