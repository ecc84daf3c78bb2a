"""A concrete model of the topology tau* on the (0,0) sandwich variant.

Points with ``a > 0`` or ``b > 0`` are isolated.  Every other point lies on
exactly one diagonal ray ``{(a - i, b - i) : i >= 0}`` whose base has
``a * b == 0`` and ``a + b <= 0``.  Rays are clopen; inside a ray the point
of index ``i`` gets a rational label and the ray carries the order topology
of its labels, so no ray point is isolated.

Two labellings are available.  ``"farey"`` (default) lists the rationals in
``(0, 1)`` by denominator then numerator; ``"calkin-wilf"`` uses the
Calkin-Wilf sequence of all positive rationals.  Both give a dense-in-itself
ray, but Calkin-Wilf is breadth-first in the Stern-Brocot tree, so close
neighbours of a label only appear exponentially late.  Bounded searches for
neighbours therefore use the Farey order.  ``"discrete"`` makes every ray
point isolated, for contrast.

Basic opens are symbolic.  Anything infinite is only ever enumerated up to
an explicit index bound.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Callable, Optional, Union

from .core import Element, Window
from .variants import smul

SANDWICH = (0, 0)
LABELLINGS = ("farey", "calkin-wilf")
RAY_TOPOLOGIES = LABELLINGS + ("discrete",)


def _sprod(x, y) -> Element:
    return smul(SANDWICH, x, y)


# -- point classes ---------------------------------------------------------


@dataclass(frozen=True)
class Isolated:
    point: Element

    kind = "isolated"


@dataclass(frozen=True)
class RayPoint:
    base: Element
    index: int

    kind = "ray"

    def __post_init__(self):
        a, b = self.base
        if a * b != 0 or a + b > 0:
            raise ValueError(f"{self.base} is not a ray base (needs ab=0 and a+b<=0)")
        if self.index < 0:
            raise ValueError("ray index must be non-negative")

    @property
    def point(self) -> Element:
        return Element(self.base.a - self.index, self.base.b - self.index)


PointClass = Union[Isolated, RayPoint]


def is_isolated_point(x: tuple[int, int]) -> bool:
    return x[0] > 0 or x[1] > 0


def classify(x: tuple[int, int]) -> PointClass:
    a, b = x
    if a > 0 or b > 0:
        return Isolated(Element(a, b))
    top = max(a, b)
    return RayPoint(Element(a - top, b - top), -top)


def ray_member(base: tuple[int, int], index: int) -> Element:
    return Element(base[0] - index, base[1] - index)


def ray_bases(w: Window) -> list[Element]:
    """Bases of all rays meeting ``w``, lexicographic."""
    return sorted({classify(x).base for x in w if not is_isolated_point(x)})


# -- Calkin-Wilf enumeration ------------------------------------------------

_CW: list[Fraction] = [Fraction(1)]


def rational_enum(i: int) -> Fraction:
    """The i-th positive rational of the Calkin-Wilf sequence (0-based)."""
    if i < 0:
        raise ValueError("index must be non-negative")
    while len(_CW) <= i:
        r = _CW[-1]
        _CW.append(1 / (2 * (r.numerator // r.denominator) - r + 1))
    return _CW[i]


_FAREY: list[Fraction] = []
_FAREY_DEN = [1]


def farey_enum(i: int) -> Fraction:
    """The i-th rational in ``(0, 1)``, ordered by denominator then numerator."""
    if i < 0:
        raise ValueError("index must be non-negative")
    while len(_FAREY) <= i:
        q = _FAREY_DEN[0] = _FAREY_DEN[0] + 1
        _FAREY.extend(Fraction(p, q) for p in range(1, q) if gcd(p, q) == 1)
    return _FAREY[i]


def label(i: int, labels: str = "farey") -> Fraction:
    if labels == "farey":
        return farey_enum(i)
    if labels == "calkin-wilf":
        return rational_enum(i)
    raise ValueError(f"labels must be one of {LABELLINGS}, got {labels!r}")


# -- basic opens -------------------------------------------------------------


@dataclass(frozen=True)
class Singleton:
    e: Element

    def contains(self, x: tuple[int, int]) -> bool:
        return tuple(x) == tuple(self.e)

    def members(self, bound: int) -> list[Element]:
        return [self.e]


@dataclass(frozen=True)
class RayInterval:
    """Ray points whose label lies in ``(lo, hi)``.

    ``None`` is an unbounded end, so ``RayInterval(base, None, None)`` is the
    whole ray.
    """

    base: Element
    lo: Optional[Fraction] = None
    hi: Optional[Fraction] = None
    labels: str = "farey"

    def __post_init__(self):
        if self.lo is not None and self.hi is not None and not self.lo < self.hi:
            raise ValueError(f"empty interval ({self.lo}, {self.hi})")
        if self.labels not in LABELLINGS:
            raise ValueError(f"labels must be one of {LABELLINGS}")

    def _holds(self, r: Fraction) -> bool:
        return (self.lo is None or self.lo < r) and (self.hi is None or r < self.hi)

    def contains(self, x: tuple[int, int]) -> bool:
        c = classify(x)
        return isinstance(c, RayPoint) and c.base == self.base and self._holds(label(c.index, self.labels))

    def members(self, bound: int) -> list[Element]:
        return [ray_member(self.base, i) for i in range(bound + 1) if self._holds(label(i, self.labels))]

    @property
    def is_full(self) -> bool:
        return self.lo is None and self.hi is None


BasicOpen = Union[Singleton, RayInterval]


def full_ray(base: tuple[int, int]) -> RayInterval:
    return RayInterval(Element(*base))


def basic_nbhds(x: tuple[int, int], resolution: int, ray_topology: str = "farey") -> list[BasicOpen]:
    """Neighbourhood base at ``x``: radii ``1/d`` for ``d = 1..resolution``."""
    if resolution < 1:
        raise ValueError("resolution must be positive")
    if ray_topology not in RAY_TOPOLOGIES:
        raise ValueError(f"ray_topology must be one of {RAY_TOPOLOGIES}")
    c = classify(x)
    if isinstance(c, Isolated) or ray_topology == "discrete":
        return [Singleton(Element(*x))]
    r = label(c.index, ray_topology)
    return [
        RayInterval(c.base, r - Fraction(1, d), r + Fraction(1, d), ray_topology)
        for d in range(1, resolution + 1)
    ]


def disjoint(u: BasicOpen, v: BasicOpen) -> bool:
    if isinstance(u, Singleton):
        return not v.contains(u.e)
    if isinstance(v, Singleton):
        return not u.contains(v.e)
    if u.base != v.base:
        return True
    if u.labels != v.labels:
        raise ValueError("cannot compare intervals under different labellings")
    # two open intervals are disjoint iff one ends before the other starts
    if u.hi is not None and v.lo is not None and u.hi <= v.lo:
        return True
    if v.hi is not None and u.lo is not None and v.hi <= u.lo:
        return True
    return False


def separate(x: tuple[int, int], y: tuple[int, int], labels: str = "farey") -> tuple[BasicOpen, BasicOpen]:
    """Disjoint basic opens around two distinct points."""
    if tuple(x) == tuple(y):
        raise ValueError("cannot separate a point from itself")
    cx, cy = classify(x), classify(y)
    if isinstance(cx, RayPoint) and isinstance(cy, RayPoint) and cx.base == cy.base:
        rx, ry = label(cx.index, labels), label(cy.index, labels)
        # radius 1/d with 2/d < |rx - ry|
        d = int(2 / abs(rx - ry)) + 1
        eps = Fraction(1, d)
        return (
            RayInterval(cx.base, rx - eps, rx + eps, labels),
            RayInterval(cy.base, ry - eps, ry + eps, labels),
        )

    def nbhd(c: PointClass) -> BasicOpen:
        return Singleton(c.point) if isinstance(c, Isolated) else full_ray(c.base)

    return nbhd(cx), nbhd(cy)


def dense_neighbor(i: int, d: int, bound: int = 10**4, labels: str = "farey") -> Optional[int]:
    """Smallest ``j != i`` (``j <= bound``) whose label is within ``1/d`` of label ``i``."""
    r, eps = label(i, labels), Fraction(1, d)
    for j in range(bound + 1):
        if j != i and abs(label(j, labels) - r) < eps:
            return j
    return None


# -- lint -------------------------------------------------------------------

Classifier = Callable[[Element], Union[bool, str]]


def tau_star_classifier(x: Element) -> str:
    return "isolated" if is_isolated_point(x) else "non-isolated"


def discrete_classifier(x: Element) -> str:
    return "isolated"


def _as_isolated(label: Union[bool, str]) -> bool:
    if isinstance(label, bool):
        return label
    if label in ("isolated", "non-isolated"):
        return label == "isolated"
    raise ValueError(f"classifier must return 'isolated'/'non-isolated' or a bool, got {label!r}")


@dataclass(frozen=True)
class Violation:
    point: Element
    reason: str


def lint_shift_constraints(classifier: Classifier, w: Window) -> list[Violation]:
    """Points of ``w`` that any Hausdorff shift-continuous topology must isolate but ``classifier`` does not."""
    out = []
    for x in w:
        if is_isolated_point(x) and not _as_isolated(classifier(x)):
            reason = "a>0" if x.a > 0 else "b>0"
            out.append(Violation(x, f"{reason} forces isolation"))
    return out


# -- continuity -------------------------------------------------------------


class NotCollapsible(ValueError):
    pass


class InvalidTarget(ValueError):
    pass


def _as_ray_base(c) -> Optional[Element]:
    if isinstance(c, RayPoint):
        return c.base
    if isinstance(c, RayInterval) and c.is_full:
        return c.base
    return None


def _as_point(c) -> Element:
    if isinstance(c, (Isolated, Singleton)):
        return Element(*(c.point if isinstance(c, Isolated) else c.e))
    return Element(*c)


def collapse_product(xc, yc) -> Element:
    """The single value of ``A * B`` when ``A`` or ``B`` is a whole ray.

    A ray argument is given as a :class:`RayPoint` (its index is ignored) or
    a full :class:`RayInterval`; the other argument may be a ray or any
    concrete point.
    """
    ra, rb = _as_ray_base(xc), _as_ray_base(yc)
    if ra is None and rb is None:
        raise NotCollapsible("at least one argument must be a whole ray")
    if ra is not None and rb is not None:
        a, b = ra
        c, d = rb
        return Element(a - b, d - c)
    if ra is not None:
        a, b = ra
        c, d = _as_point(yc)
        return Element(a - b, d - c) if c <= 0 else Element(a - b + c, d)
    a, b = _as_point(xc)
    c, d = rb
    return Element(a - b, d - c) if b <= 0 else Element(a, b - c + d)


@lru_cache(maxsize=4096)
def _product_set(u: BasicOpen, v: BasicOpen, bound: int) -> frozenset:
    return frozenset(_sprod(p, q) for p in u.members(bound) for q in v.members(bound))


def verify_certificate(u: BasicOpen, v: BasicOpen, w: BasicOpen, bound: int = 32) -> bool:
    """Check ``U * V`` inside ``w`` on representatives with index up to ``bound``."""
    return all(w.contains(z) for z in _product_set(u, v, bound))


def continuity_certificate(
    x: tuple[int, int], y: tuple[int, int], w: BasicOpen, bound: int = 32
) -> tuple[BasicOpen, BasicOpen]:
    """Basic opens ``U`` at ``x`` and ``V`` at ``y`` with ``U * V`` inside ``w``.

    A ray factor contributes its whole ray (the product over it is a single
    point); an isolated factor contributes itself.  The answer is
    re-checked on representatives with index up to ``bound``.
    """
    z = _sprod(x, y)
    if not w.contains(z):
        raise InvalidTarget(f"target does not contain the product {z}")

    def nbhd(p) -> BasicOpen:
        c = classify(p)
        return Singleton(c.point) if isinstance(c, Isolated) else full_ray(c.base)

    u, v = nbhd(x), nbhd(y)
    if not verify_certificate(u, v, w, bound):
        raise AssertionError(f"certificate for {tuple(x)} * {tuple(y)} failed re-verification")
    return u, v
