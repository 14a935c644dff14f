# Surface module: the coordinate ring B and its normal form

from .ring import SurfaceSpec, BElement, make_surface, normalize, b_arith, in_kx, divisible_by_kx

__all__ = ['SurfaceSpec', 'BElement', 'make_surface', 'normalize', 'b_arith', 'in_kx', 'divisible_by_kx']
