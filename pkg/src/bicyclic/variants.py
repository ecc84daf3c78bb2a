"""Sandwich variants: ``x * y = x . (m, n) . y`` on the same carrier."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Element, Variant, Window, mul, mul_arrays
from .oracle import GUARD_SIDE, WindowTooSmall, ideal_tables, widening


class VariantMismatch(ValueError):
    pass


def smul(v: tuple[int, int], x: tuple[int, int], y: tuple[int, int]) -> Element:
    return mul(mul(x, v), y)


def smul_arrays(v: tuple[int, int], a, b, c, d):
    m, n = np.int64(v[0]), np.int64(v[1])
    pa, pb = mul_arrays(a, b, m, n)
    return mul_arrays(pa, pb, c, d)


@dataclass(frozen=True)
class VariantIdempotent:
    variant: Variant
    index: int

    def __post_init__(self):
        if self.index < 0:
            raise ValueError(f"idempotent index must be non-negative, got {self.index}")

    @property
    def element(self) -> Element:
        return Element(self.variant.n + self.index, self.variant.m + self.index)


def idempotent(v: tuple[int, int], i: int) -> VariantIdempotent:
    return VariantIdempotent(Variant(*v), i)


def idempotents(v: tuple[int, int], count: int) -> list[VariantIdempotent]:
    if count < 1:
        raise ValueError("count must be positive")
    return [idempotent(v, i) for i in range(count)]


def is_idempotent(v: tuple[int, int], x: tuple[int, int]) -> bool:
    # arithmetic test on purpose, so scans against smul(x, x) == x are two-sided
    m, n = v
    return x[0] - n == x[1] - m >= 0


def idempotent_index(v: tuple[int, int], x: tuple[int, int]) -> int:
    if not is_idempotent(v, x):
        raise ValueError(f"{tuple(x)} is not an idempotent of the ({v[0]},{v[1]}) variant")
    return x[0] - v[1]


def omega_leq(v: tuple[int, int], e: VariantIdempotent, f: VariantIdempotent) -> bool:
    """``e <= f`` on the idempotent chain: larger index sits lower."""
    v = Variant(*v)
    if e.variant != v or f.variant != v:
        raise VariantMismatch(f"idempotents belong to {e.variant} and {f.variant}, expected {v}")
    return f.index <= e.index


def ideal_floors(v: tuple[int, int], x: tuple[int, int]) -> tuple[int, int]:
    """Lower bounds of the principal one-sided ideals of ``x``.

    ``x * S`` is exactly the set of pairs with first coordinate >= right
    floor, and ``S * x`` those with second coordinate >= left floor.
    """
    m, n = v
    a, b = x
    right = a if b >= m else a - b + m
    left = b if a >= n else n - a + b
    return right, left


def green_v(rel: str, v: tuple[int, int], x: tuple[int, int], y: tuple[int, int]) -> bool:
    m, n = v
    a, b = x
    c, d = y
    if rel == "R":
        return a == c and (b == d or (b >= m and d >= m))
    if rel == "L":
        return b == d and (a == c or (a >= n and c >= n))
    if rel == "H":
        return a == c and b == d
    if rel == "D":
        # composite of L then R: both coordinate conditions must hold
        return (a == c or (a >= n and c >= n)) and (b == d or (b >= m and d >= m))
    if rel == "J":
        return True
    raise ValueError(f"unknown Green relation {rel!r}")


def simple_check(v: tuple[int, int], w: Window) -> bool:
    """Exhaustively confirm ``S s S`` covers ``w`` for every ``s`` in ``w``.

    Multipliers come from ``w`` widened by the oracle's default delta; the
    widening doubles until every target has a witness or the enumeration
    guard is hit.
    """
    v = (int(v[0]), int(v[1]))
    delta = widening(w, v)
    while True:
        box = w.widen(delta)
        if box.side > GUARD_SIDE:
            raise WindowTooSmall(f"no witness for every target within guard side {GUARD_SIDE}")
        t = ideal_tables(v, box)
        a, b = w.arrays()
        idx = (a - box.lo) * box.side + (b - box.lo)
        # t in u * s * u'  <=>  some p in S s has t in p S
        two_sided = (t.left[idx].astype(np.float32) @ t.right[:, idx].astype(np.float32)) > 0
        if two_sided.all():
            return True
        delta *= 2
