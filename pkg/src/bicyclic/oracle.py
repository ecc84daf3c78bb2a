"""Brute-force oracle built on partial translations of Z.

An element ``(a, b)`` acts on the integers as the partial map
``t -> t + (b - a)`` defined on ``{t >= a}``.  Composing two such maps (left
factor first) gives the product without consulting the three-branch formula
in :mod:`bicyclic.core`, so everything here is an independent check.

Green's relations are decided from principal ideals enumerated over a
widened window; nothing in this module knows the closed forms.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np

from .core import Element, Window

# largest widened box side that brute enumeration will build (side**2 elements)
GUARD_SIDE = 64


class WindowTooSmall(RuntimeError):
    pass


@dataclass(frozen=True)
class PartialShift:
    dom_min: int
    offset: int

    def __call__(self, t: int) -> Optional[int]:
        return t + self.offset if t >= self.dom_min else None

    def then(self, other: "PartialShift") -> "PartialShift":
        """Apply ``self`` first, then ``other``."""
        # t >= self.dom_min and t + self.offset >= other.dom_min
        lo = max(self.dom_min, other.dom_min - self.offset)
        return PartialShift(lo, self.offset + other.offset)


def to_shift(x: tuple[int, int]) -> PartialShift:
    return PartialShift(x[0], x[1] - x[0])


def from_shift(s: PartialShift) -> Element:
    return Element(s.dom_min, s.dom_min + s.offset)


def oracle_mul(x: tuple[int, int], y: tuple[int, int]) -> Element:
    return from_shift(to_shift(x).then(to_shift(y)))


def oracle_smul(params: Optional[tuple[int, int]], x, y) -> Element:
    if params is None:
        return oracle_mul(x, y)
    return oracle_mul(oracle_mul(x, params), y)


def oracle_mul_arrays(a, b, c, d):
    """Shift composition over numpy arrays; returns coordinate arrays."""
    off1 = b - a
    lo = np.maximum(a, c - off1)
    return lo, lo + off1 + (d - c)


def oracle_smul_arrays(params, a, b, c, d):
    if params is None:
        return oracle_mul_arrays(a, b, c, d)
    m, n = params
    pa, pb = oracle_mul_arrays(a, b, np.int64(m), np.int64(n))
    return oracle_mul_arrays(pa, pb, c, d)


def widening(w: Window, params: Optional[tuple[int, int]]) -> int:
    """Delta = 2 * (largest coordinate magnitude in play) + 2.

    The magnitude is taken over the window bounds, which dominate every
    ``x, y`` drawn from it; using the window rather than the pair lets one
    enumeration serve all pairs.
    """
    mags = [abs(w.lo), abs(w.hi)]
    if params is not None:
        mags += [abs(params[0]), abs(params[1])]
    return 2 * max(mags) + 2


class IdealTables:
    """Principal one-sided ideals of every element of a box, by enumeration.

    ``right[i, j]`` is true when element ``j`` lies in ``x_i * S`` with the
    multiplier drawn from the box (``left`` dually).  Products landing
    outside the box are dropped.
    """

    def __init__(self, params: Optional[tuple[int, int]], box: Window):
        if box.side > GUARD_SIDE:
            raise WindowTooSmall(
                f"widened box side {box.side} exceeds guard {GUARD_SIDE}"
            )
        self.params = None if params is None else (int(params[0]), int(params[1]))
        self.box = box
        self.a, self.b = box.arrays()
        n = self.a.size
        self.n = n
        xa, xb = self.a[:, None], self.b[:, None]
        sa, sb = self.a[None, :], self.b[None, :]
        rows = np.broadcast_to(np.arange(n)[:, None], (n, n))

        pa, pb = oracle_smul_arrays(self.params, xa, xb, sa, sb)
        self.right = self._scatter(rows, pa, pb)
        qa, qb = oracle_smul_arrays(self.params, sa, sb, xa, xb)
        self.left = self._scatter(rows, qa, qb)

    def _scatter(self, rows, pa, pb) -> np.ndarray:
        lo, side = self.box.lo, self.box.side
        inside = (pa >= lo) & (pa <= self.box.hi) & (pb >= lo) & (pb <= self.box.hi)
        idx = (pa - lo) * side + (pb - lo)
        out = np.zeros((self.n, self.n), dtype=bool)
        out[rows[inside], idx[inside]] = True
        return out

    def index(self, x: tuple[int, int]) -> int:
        if x not in self.box:
            raise WindowTooSmall(f"{tuple(x)} lies outside the enumeration box {self.box}")
        return (x[0] - self.box.lo) * self.box.side + (x[1] - self.box.lo)

    @property
    def right1(self) -> np.ndarray:
        """``y in x S^1``."""
        return self.right | np.eye(self.n, dtype=bool)

    @property
    def left1(self) -> np.ndarray:
        return self.left | np.eye(self.n, dtype=bool)

    @property
    def relations(self) -> dict[str, np.ndarray]:
        if not hasattr(self, "_rels"):
            r1, l1 = self.right1, self.left1
            rr = r1 & r1.T
            ll = l1 & l1.T
            hh = rr & ll
            dd = (ll.astype(np.float32) @ rr.astype(np.float32)) > 0
            # y in S^1 x S^1  <=>  some t in S^1 x has y in t S^1
            ideal = (l1.astype(np.float32) @ r1.astype(np.float32)) > 0
            jj = ideal & ideal.T
            self._rels = {"R": rr, "L": ll, "H": hh, "D": dd, "J": jj}
        return self._rels


@lru_cache(maxsize=32)
def ideal_tables(params: Optional[tuple[int, int]], box: Window) -> IdealTables:
    return IdealTables(params, box)


def brute_green(
    rel: str,
    params: Optional[tuple[int, int]],
    x: tuple[int, int],
    y: tuple[int, int],
    w: Window,
) -> bool:
    """Decide a Green relation by comparing enumerated principal ideals.

    ``x`` and ``y`` must lie in ``w``; intermediate elements (multipliers,
    the D-witness) are searched in ``w`` widened by :func:`widening`.
    """
    if x not in w or y not in w:
        raise ValueError(f"{tuple(x)} and {tuple(y)} must lie in {w}")
    if params is not None:
        params = (int(params[0]), int(params[1]))
    box = w.widen(widening(w, params))
    t = ideal_tables(params, box)
    rels = t.relations
    if rel not in rels:
        raise ValueError(f"unknown Green relation {rel!r}")
    return bool(rels[rel][t.index(x), t.index(y)])


def brute_green_matrix(rel: str, params: Optional[tuple[int, int]], w: Window) -> np.ndarray:
    """The relation restricted to ``w`` as a boolean matrix (lexicographic order)."""
    if params is not None:
        params = (int(params[0]), int(params[1]))
    box = w.widen(widening(w, params))
    t = ideal_tables(params, box)
    a, b = w.arrays()
    idx = (a - box.lo) * box.side + (b - box.lo)
    return t.relations[rel][np.ix_(idx, idx)]
