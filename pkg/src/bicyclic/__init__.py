"""Exact arithmetic and window verification for the extended bicyclic semigroup and its variants."""
from .core import Element, Variant, Window, diff_invariant_check, green_cz, inverse, mul, natural_leq
from .variants import green_v, ideal_floors, idempotents, is_idempotent, omega_leq, smul

__all__ = [
    "Element",
    "Variant",
    "Window",
    "diff_invariant_check",
    "green_cz",
    "green_v",
    "ideal_floors",
    "idempotents",
    "inverse",
    "is_idempotent",
    "mul",
    "natural_leq",
    "omega_leq",
    "smul",
]
