"""Arithmetic of the extended bicyclic semigroup on Z x Z.

Elements are pairs ``(a, b)`` of integers.  The product is the three-branch
rule

    (a, b) . (c, d) = (a - b + c, d)   if b < c
                      (a, d)           if b == c
                      (a, d + b - c)   if b > c

Python integers never overflow, so the default ``bigint`` mode is exact.
Setting ``BICYCLIC_INT_MODE=checked64`` makes every product fail loudly when a
coordinate leaves the signed 64-bit range, mirroring a fixed-width build.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Callable, Iterator, NamedTuple, Optional

import numpy as np

INT_MODES = ("bigint", "checked64")
_I64_MIN = -(2**63)
_I64_MAX = 2**63 - 1


def int_mode() -> str:
    mode = os.environ.get("BICYCLIC_INT_MODE", "bigint")
    if mode not in INT_MODES:
        raise ValueError(f"BICYCLIC_INT_MODE must be one of {INT_MODES}, got {mode!r}")
    return mode


_CHECKED = int_mode() == "checked64"


def set_int_mode(mode: str) -> None:
    """Switch the integer backend at runtime (the env var only sets the default)."""
    global _CHECKED
    if mode not in INT_MODES:
        raise ValueError(f"unknown int mode {mode!r}")
    _CHECKED = mode == "checked64"


class Element(NamedTuple):
    a: int
    b: int

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


class Variant(NamedTuple):
    """Sandwich element ``(m, n)`` selecting the product ``x . (m, n) . y``."""

    m: int
    n: int

    @property
    def element(self) -> Element:
        return Element(self.m, self.n)


@dataclass(frozen=True)
class Window:
    """The square ``[lo, hi] x [lo, hi]``, bounds inclusive."""

    lo: int
    hi: int

    def __post_init__(self):
        self.validate()

    @classmethod
    def symmetric(cls, half_width: int) -> "Window":
        return cls(-half_width, half_width)

    def validate(self) -> "Window":
        if self.lo > self.hi:
            raise ValueError(f"window bounds out of order: lo={self.lo} > hi={self.hi}")
        return self

    @property
    def side(self) -> int:
        return self.hi - self.lo + 1

    def __contains__(self, x: object) -> bool:
        a, b = x  # type: ignore[misc]
        return self.lo <= a <= self.hi and self.lo <= b <= self.hi

    def __iter__(self) -> Iterator[Element]:
        # lexicographic on (a, b)
        for a in range(self.lo, self.hi + 1):
            for b in range(self.lo, self.hi + 1):
                yield Element(a, b)

    def __len__(self) -> int:
        return self.side * self.side

    def widen(self, delta: int) -> "Window":
        return Window(self.lo - delta, self.hi + delta)

    def arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """All window elements as two flat int64 coordinate arrays, lexicographic."""
        r = np.arange(self.lo, self.hi + 1, dtype=np.int64)
        a, b = np.meshgrid(r, r, indexing="ij")
        return a.ravel(), b.ravel()


class NotIdempotent(ValueError):
    def __init__(self, which: str, x: Element):
        super().__init__(f"argument {which}={x} is not an idempotent")
        self.which = which
        self.element = x


def _checked(a: int, b: int) -> Element:
    if not (_I64_MIN <= a <= _I64_MAX and _I64_MIN <= b <= _I64_MAX):
        raise OverflowError(f"product ({a},{b}) exceeds the checked 64-bit range")
    return Element(a, b)


def mul(x: tuple[int, int], y: tuple[int, int]) -> Element:
    a, b = x
    c, d = y
    if b < c:
        r = (a - b + c, d)
    elif b == c:
        r = (a, d)
    else:
        r = (a, d + b - c)
    if _CHECKED:
        return _checked(*r)
    return Element(*r)


def mul_arrays(a, b, c, d):
    """Vectorised product over numpy coordinate arrays (broadcasting allowed).

    Callers are responsible for keeping inputs small enough that int64 is
    exact; window enumeration never comes close.
    """
    lt = b < c
    gt = b > c
    ra = np.where(lt, a - b + c, a)
    rb = np.where(gt, d + b - c, d)
    return ra, rb


def inverse(x: tuple[int, int]) -> Element:
    return Element(x[1], x[0])


def is_idempotent(x: tuple[int, int]) -> bool:
    return x[0] == x[1]


GREEN_RELATIONS = ("R", "L", "H", "D", "J")


def green_cz(rel: str, x: tuple[int, int], y: tuple[int, int]) -> bool:
    """Green's relations on the plain semigroup; D and J are universal."""
    if rel == "R":
        return x[0] == y[0]
    if rel == "L":
        return x[1] == y[1]
    if rel == "H":
        return tuple(x) == tuple(y)
    if rel in ("D", "J"):
        return True
    raise ValueError(f"unknown Green relation {rel!r}")


BinOp = Callable[[tuple[int, int], tuple[int, int]], Element]


def natural_leq(mulfn: BinOp, e: tuple[int, int], f: tuple[int, int]) -> bool:
    """``e <= f`` in the natural order on idempotents of ``mulfn``."""
    if mulfn(e, e) != tuple(e):
        raise NotIdempotent("e", Element(*e))
    if mulfn(f, f) != tuple(f):
        raise NotIdempotent("f", Element(*f))
    return mulfn(e, f) == tuple(e) and mulfn(f, e) == tuple(e)


def diff_invariant_check(
    params: Optional[tuple[int, int]], x: tuple[int, int], y: tuple[int, int]
) -> tuple[Element, bool]:
    """Multiply and check that coordinate differences add up.

    With no sandwich, ``(a-b) + (c-d) == i-j``; with sandwich ``(m, n)`` the
    term ``m-n`` joins the sum.
    """
    if params is None:
        p = mul(x, y)
        lhs = (x[0] - x[1]) + (y[0] - y[1])
    else:
        p = mul(mul(x, params), y)
        lhs = (x[0] - x[1]) + (params[0] - params[1]) + (y[0] - y[1])
    return p, lhs == p.a - p.b
