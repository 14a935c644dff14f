# Algebra module: number field, sparse polynomials, text grammar

from .field import FieldModulus, FieldElement, field_arith, is_root_of_unity
from .poly import Poly, poly_arith, partial_derivative, substitute, divide_exact, divmod_in_Z, divmod_monic
from .parser import parse_poly, parse_field_element, parse_modulus

__all__ = [
    'FieldModulus', 'FieldElement', 'field_arith', 'is_root_of_unity',
    'Poly', 'poly_arith', 'partial_derivative', 'substitute', 'divide_exact', 'divmod_in_Z', 'divmod_monic',
    'parse_poly', 'parse_field_element', 'parse_modulus',
]
