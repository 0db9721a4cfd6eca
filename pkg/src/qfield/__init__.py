"""Exact arithmetic in Q(i) and Q(sqrt(-3)), their rings of integers and radical towers."""

from .field import EISENSTEIN, FIELDS, GAUSS, FieldElem, QField, field_by_name, format_elem, parse_elem, parse_elem_list
from .radical import RadicalElem, Tower, f_square_decomposition, is_square_in_F, sqrt_with_extension, tower_sqrt
from .rings import (
    Factorization,
    RingElem,
    as_ring_elem,
    divides,
    factor_OK,
    gcd_OK,
    is_integral,
    primes_above,
    primes_by_norm,
    ring_elements_up_to_norm,
    splitting_type,
    unit_normalize,
    valuation,
)
from .squares import (
    Decision,
    is_square_in_K,
    same_square_class,
    sqrt_i_multiple_never_square,
    sqrt_in_K,
    sqrt_is_square_in_F,
    squarefree_part,
)

__all__ = [
    "EISENSTEIN", "FIELDS", "GAUSS", "FieldElem", "QField", "field_by_name", "format_elem",
    "parse_elem", "parse_elem_list", "RadicalElem", "Tower", "f_square_decomposition",
    "is_square_in_F", "sqrt_with_extension", "tower_sqrt", "Factorization", "RingElem",
    "as_ring_elem", "divides", "factor_OK", "gcd_OK", "is_integral", "primes_above",
    "primes_by_norm", "ring_elements_up_to_norm", "splitting_type", "unit_normalize",
    "valuation", "Decision", "is_square_in_K", "same_square_class",
    "sqrt_i_multiple_never_square", "sqrt_in_K", "sqrt_is_square_in_F", "squarefree_part",
]
