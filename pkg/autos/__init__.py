# Automorphism module: generators H, T, R, S and their words

from .unity import UnityDecomposition, unity_decompose, center, transport_to_centered
from .morphism import Morphism, GeneratorTag, TConvention, compose, invert, morphism_equal, automorphism_shape
from .generators import make_H, make_T, make_R, make_S, build_word

__all__ = [
    'UnityDecomposition', 'unity_decompose', 'center', 'transport_to_centered',
    'Morphism', 'GeneratorTag', 'TConvention', 'compose', 'invert', 'morphism_equal', 'automorphism_shape',
    'make_H', 'make_T', 'make_R', 'make_S', 'build_word',
]
