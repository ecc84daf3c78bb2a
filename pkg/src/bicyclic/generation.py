"""Subsemigroup closure and non-finite-generation witnesses.

Closure is only ever semi-decided inside a guard window.  Witnesses never
rely on "BFS did not find it"; they come from ideal bounds that hold for the
whole generated subsemigroup.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

import numpy as np

from .core import Element, Variant, Window, mul_arrays
from .variants import ideal_floors, smul_arrays

DEFAULT_CAP = 10**6


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class GenSet:
    elements: frozenset
    params: Optional[Variant] = None

    def __post_init__(self):
        els = frozenset(Element(int(a), int(b)) for a, b in self.elements)
        if not els:
            raise ValueError("generator set must be non-empty")
        object.__setattr__(self, "elements", els)
        if self.params is not None:
            object.__setattr__(self, "params", Variant(*self.params))

    @classmethod
    def of(cls, elements: Iterable[tuple[int, int]], params=None) -> "GenSet":
        return cls(frozenset(elements), params)

    def sorted(self) -> list[Element]:
        return sorted(self.elements)


@dataclass
class ClosureResult:
    found: set
    saturated: bool
    guard: Window
    frontier: set = field(default_factory=set)
    rounds: int = 0

    def __contains__(self, x) -> bool:
        return tuple(x) in self.found


def _product(params, a, b, c, d):
    if params is None:
        return mul_arrays(a, b, c, d)
    return smul_arrays(params, a, b, c, d)


def closure(g: GenSet, guard: Window, cap: int = DEFAULT_CAP) -> ClosureResult:
    """Breadth-first closure of ``g`` under the (plain or sandwich) product.

    Each round multiplies the newly found elements against everything found
    so far, on both sides.  Products outside ``guard`` go to ``frontier`` and
    are not expanded; ``saturated`` means the frontier stayed empty, in which
    case ``found`` is the whole generated subsemigroup.
    """
    gens = g.sorted()
    for x in gens:
        if x not in guard:
            raise ValueError(f"generator {x} lies outside guard {guard}")
    lo, hi, side = guard.lo, guard.hi, guard.side

    def encode(a, b):
        return (a - lo) * side + (b - lo)

    found_codes = np.array(sorted({int(encode(a, b)) for a, b in gens}), dtype=np.int64)
    new_codes = found_codes
    frontier: set = set()
    rounds = 0
    while new_codes.size:
        rounds += 1
        fa, fb = np.divmod(found_codes, side)
        fa, fb = fa + lo, fb + lo
        na, nb = np.divmod(new_codes, side)
        na, nb = na + lo, nb + lo
        left = _product(g.params, na[:, None], nb[:, None], fa[None, :], fb[None, :])
        right = _product(g.params, fa[:, None], fb[:, None], na[None, :], nb[None, :])
        pa = np.concatenate([left[0].ravel(), right[0].ravel()])
        pb = np.concatenate([left[1].ravel(), right[1].ravel()])
        inside = (pa >= lo) & (pa <= hi) & (pb >= lo) & (pb <= hi)
        if not inside.all():
            out = np.unique(np.stack([pa[~inside], pb[~inside]], axis=1), axis=0)
            frontier.update(Element(int(a), int(b)) for a, b in out)
        codes = np.unique(encode(pa[inside], pb[inside]))
        new_codes = np.setdiff1d(codes, found_codes, assume_unique=True)
        found_codes = np.union1d(found_codes, new_codes)
        if found_codes.size > cap:
            raise BudgetExceeded(f"closure exceeded {cap} elements")
    fa, fb = np.divmod(found_codes, side)
    found = {Element(int(a) + lo, int(b) + lo) for a, b in zip(fa, fb)}
    return ClosureResult(found, not frontier, guard, frontier, rounds)


def min_corner(g: GenSet) -> int:
    return min(min(a, b) for a, b in g.elements)


def default_guard(g: GenSet, margin: int = 6) -> Window:
    coords = [c for x in g.elements for c in x]
    return Window(min(coords) - margin, max(coords) + margin)


def witness_cz(g: GenSet) -> Element:
    """A point of the plain semigroup outside the subsemigroup generated by ``g``.

    Everything generated lies in the corner ``{(i, j) : i, j >= k}`` with
    ``k`` the smallest generator coordinate; ``(k-1, k-1)`` does not.  The
    corner is inverse-closed, so the same witness works for inverse
    generation.
    """
    if g.params is not None:
        raise ValueError("witness_cz takes a plain generator set; use witness_variant")
    k = min_corner(g)
    return Element(k - 1, k - 1)


def witness_variant(g: GenSet) -> tuple[Element, tuple[int, int]]:
    """Witness for a sandwich variant, plus the floors ``(xstar, ystar)``.

    Any product of two or more generators lies in ``f * S`` and ``S * f'``
    for generators ``f, f'``, so its coordinates are at least the smallest
    right and left floors.  A point strictly below both floors that is not a
    generator is therefore outside the closure.
    """
    if g.params is None:
        raise ValueError("witness_variant needs a sandwich variant")
    floors = [ideal_floors(g.params, f) for f in g.elements]
    xstar = min(r for r, _ in floors)
    ystar = min(l for _, l in floors)
    t = 0
    while True:
        w = Element(xstar - 1 - t, ystar - 1 - t)
        if w not in g.elements:
            return w, (xstar, ystar)
        t += 1
