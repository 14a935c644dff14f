# Filtration module: f-adic expansion and weights on T = K[x, 1/f, z]

from .fadic import FAdicExpansion, fadic_expand
from .weights import TElement, WeightAssignment, embed_in_T, basis_terms, weight, leading_form

__all__ = ['FAdicExpansion', 'fadic_expand', 'TElement', 'WeightAssignment',
           'embed_in_T', 'basis_terms', 'weight', 'leading_form']
