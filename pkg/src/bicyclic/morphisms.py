"""Automorphisms, the bicyclic monoid embedding, and variant isomorphisms.

Every map here is a coordinate translation, so they are stored as integer
offsets rather than as general functions.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .core import Element, Variant, mul


@dataclass(frozen=True)
class Automorphism:
    """``h_k : (i, j) -> (i + k, j + k)``."""

    k: int

    def __call__(self, x: tuple[int, int]) -> Element:
        return aut_apply(self, x)


def aut_apply(h: Automorphism, x: tuple[int, int]) -> Element:
    return Element(x[0] + h.k, x[1] + h.k)


def aut_compose(h1: Automorphism, h2: Automorphism) -> Automorphism:
    """``h1 o h2`` (apply ``h2`` first); parameters add."""
    return Automorphism(h1.k + h2.k)


def aut_invert(h: Automorphism) -> Automorphism:
    return Automorphism(-h.k)


IDENTITY = Automorphism(0)


class BicyclicElement(NamedTuple):
    """``q^i p^j`` in the bicyclic monoid; ``p q = 1``."""

    i: int
    j: int

    @classmethod
    def make(cls, i: int, j: int) -> "BicyclicElement":
        if i < 0 or j < 0:
            raise ValueError(f"bicyclic exponents must be non-negative, got ({i},{j})")
        return cls(i, j)

    def __str__(self) -> str:
        return f"q^{self.i}p^{self.j}"


ONE = BicyclicElement(0, 0)
P = BicyclicElement(0, 1)
Q = BicyclicElement(1, 0)


def embed_bicyclic(k: int, u: BicyclicElement) -> Element:
    """Image of ``q^i p^j`` in the corner ``{(i, j) : i, j >= k}``."""
    return Element(u.i + k, u.j + k)


def bicyclic_mul(u: BicyclicElement, v: BicyclicElement) -> BicyclicElement:
    # non-negative pairs are closed under the product, so pulling back is safe
    r = mul(embed_bicyclic(0, u), embed_bicyclic(0, v))
    return BicyclicElement.make(r.a, r.b)


class InvalidPadding(ValueError):
    pass


@dataclass(frozen=True)
class IsoMap:
    """Translation ``(a, b) -> (a + shift_a, b + shift_b)`` from ``src`` to ``dst``."""

    src: Variant
    dst: Variant
    shift_a: int
    shift_b: int

    def forward(self, x: tuple[int, int]) -> Element:
        return Element(x[0] + self.shift_a, x[1] + self.shift_b)

    def backward(self, y: tuple[int, int]) -> Element:
        return Element(y[0] - self.shift_a, y[1] - self.shift_b)

    __call__ = forward

    def then(self, other: "IsoMap") -> "IsoMap":
        if self.dst != other.src:
            raise ValueError(f"cannot compose: {self.dst} != {other.src}")
        return IsoMap(self.src, other.dst, self.shift_a + other.shift_a, self.shift_b + other.shift_b)

    def inverse(self) -> "IsoMap":
        return IsoMap(self.dst, self.src, -self.shift_a, -self.shift_b)


def iso_diag(k: int) -> IsoMap:
    """Sandwich ``(0,0)`` to sandwich ``(k,k)``, via the automorphism ``h_k``."""
    return IsoMap(Variant(0, 0), Variant(k, k), k, k)


def iso_pad(direction: str, r: int, p: int) -> IsoMap:
    """Sandwich ``(r,r)`` to ``(r+p, r)`` (right) or ``(r, r+p)`` (left).

    The right map pads the second coordinate.  The left map pads the first:
    padding the second coordinate there sends ``(r,r)`` to ``(r, r+p)``,
    which is not idempotent for the target sandwich.
    """
    if p < 1:
        raise InvalidPadding(f"padding must be a positive integer, got {p}")
    if direction == "right":
        return IsoMap(Variant(r, r), Variant(r + p, r), 0, p)
    if direction == "left":
        return IsoMap(Variant(r, r), Variant(r, r + p), p, 0)
    raise ValueError(f"direction must be 'right' or 'left', got {direction!r}")


def canonical_iso(m: int, n: int) -> IsoMap:
    """The composite ``iso_diag(min(m, n))`` then the padding step.

    Closed form: ``(a, b) -> (a + n, b + m)``.
    """
    r = min(m, n)
    iso = iso_diag(r)
    if m > n:
        iso = iso.then(iso_pad("right", r, m - n))
    elif n > m:
        iso = iso.then(iso_pad("left", r, n - m))
    return iso
