"""Commensurability classes of geodesic curves on Shimura surfaces.

Two surface types are handled with base field Q: quotients of H^2 x H^2
attached to a quaternion algebra over a real quadratic field
(:mod:`geocurves.hilbert_surface`), and Picard-type ball quotients attached
to an imaginary quadratic field (:mod:`geocurves.picard_surface`).
"""
from .arith import INF, Place
from .qfields import QuadField, SplitType, make_field
from .quatalg import QuatAlg, ram_from_symbol, symbol_from_ram

__all__ = [
    "INF",
    "Place",
    "QuadField",
    "SplitType",
    "make_field",
    "QuatAlg",
    "ram_from_symbol",
    "symbol_from_ram",
]

__version__ = "0.1.0"
