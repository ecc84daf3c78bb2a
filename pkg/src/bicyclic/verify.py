"""Window-based verification suites, one per acceptance criterion.

Each suite returns a :class:`SuiteResult`.  ``half_width=None`` runs the
suite on its default window; an integer overrides the main window half-width.
"""
from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Optional

import numpy as np

from . import core, generation, morphisms, oracle, topology, variants
from .core import Element, Window

ACCEPTANCE_VARIANTS = ((0, 0), (2, -1), (-1, 2), (-3, -3))


@dataclass
class SuiteResult:
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extras = ", ".join(f"{k}={v}" for k, v in self.detail.items())
        return f"[{status}] {self.name} ({self.seconds:.1f}s) {extras}"


def _hw(half_width: Optional[int], default: int) -> int:
    return default if half_width is None else half_width


# -- enumerations shared by several criteria --------------------------------


def _diff_fail(params, a, b, c, d, i, j) -> int:
    extra = 0 if params is None else params[0] - params[1]
    return int(np.count_nonzero((a - b) + extra + (c - d) != i - j))


@lru_cache(maxsize=8)
def assoc_enumeration(half_width: int) -> dict:
    """All triples of the window: associativity, plus the difference identity on each product."""
    w = Window.symmetric(half_width)
    a, b = w.arrays()
    counts = {"triples": 0, "assoc_fail": 0, "diff_fail": 0, "products": 0}
    ya, yb = a[:, None], b[:, None]
    za, zb = a[None, :], b[None, :]
    yz = core.mul_arrays(ya, yb, za, zb)
    counts["diff_fail"] += _diff_fail(None, ya, yb, za, zb, *yz)
    counts["products"] += yz[0].size
    for xa, xb in zip(a.tolist(), b.tolist()):
        xy = core.mul_arrays(xa, xb, a, b)
        xy_z = core.mul_arrays(xy[0][:, None], xy[1][:, None], za, zb)
        x_yz = core.mul_arrays(xa, xb, yz[0], yz[1])
        counts["assoc_fail"] += int(np.count_nonzero((xy_z[0] != x_yz[0]) | (xy_z[1] != x_yz[1])))
        counts["diff_fail"] += _diff_fail(None, xa, xb, a, b, *xy)
        counts["diff_fail"] += _diff_fail(None, xy[0][:, None], xy[1][:, None], za, zb, *xy_z)
        counts["diff_fail"] += _diff_fail(None, xa, xb, yz[0], yz[1], *x_yz)
        counts["triples"] += xy_z[0].size
        counts["products"] += xy[0].size + 2 * xy_z[0].size
    return counts


@lru_cache(maxsize=8)
def interassoc_enumeration(half_width: int, variant_half_width: int) -> dict:
    """Both interassociativity identities for every sandwich in the variant range."""
    w = Window.symmetric(half_width)
    a, b = w.arrays()
    counts = {"variants": 0, "triples": 0, "left_fail": 0, "right_fail": 0, "diff_fail": 0}
    ya, yb, za, zb = a[:, None], b[:, None], a[None, :], b[None, :]
    yz = core.mul_arrays(ya, yb, za, zb)
    for v in Window.symmetric(variant_half_width):
        counts["variants"] += 1
        ysz = variants.smul_arrays(v, ya, yb, za, zb)
        counts["diff_fail"] += _diff_fail(v, ya, yb, za, zb, *ysz)
        for xa, xb in zip(a.tolist(), b.tolist()):
            # x . (y * z) == (x . y) * z
            lhs = core.mul_arrays(xa, xb, ysz[0], ysz[1])
            xy = core.mul_arrays(xa, xb, a, b)
            rhs = variants.smul_arrays(v, xy[0][:, None], xy[1][:, None], za, zb)
            counts["left_fail"] += int(np.count_nonzero((lhs[0] != rhs[0]) | (lhs[1] != rhs[1])))
            counts["diff_fail"] += _diff_fail(None, xa, xb, ysz[0], ysz[1], *lhs)
            counts["diff_fail"] += _diff_fail(v, xy[0][:, None], xy[1][:, None], za, zb, *rhs)
            # x * (y . z) == (x * y) . z
            lhs2 = variants.smul_arrays(v, xa, xb, yz[0], yz[1])
            xsy = variants.smul_arrays(v, xa, xb, a, b)
            rhs2 = core.mul_arrays(xsy[0][:, None], xsy[1][:, None], za, zb)
            counts["right_fail"] += int(np.count_nonzero((lhs2[0] != rhs2[0]) | (lhs2[1] != rhs2[1])))
            counts["diff_fail"] += _diff_fail(v, xa, xb, yz[0], yz[1], *lhs2)
            counts["diff_fail"] += _diff_fail(v, xa, xb, a, b, *xsy)
            counts["diff_fail"] += _diff_fail(None, xsy[0][:, None], xsy[1][:, None], za, zb, *rhs2)
            counts["triples"] += lhs[0].size
    return counts


# -- criteria ---------------------------------------------------------------


def suite_associativity(half_width: Optional[int] = None) -> SuiteResult:
    """Criterion 1: associativity on all triples; mul == oracle_mul on all pairs."""
    L = _hw(half_width, 6)
    counts = assoc_enumeration(L)
    w = Window.symmetric(L)
    els = list(w)
    oracle_fail = sum(core.mul(x, y) != oracle.oracle_mul(x, y) for x in els for y in els)
    # the scalar and vectorised products must agree too
    a, b = w.arrays()
    va, vb = core.mul_arrays(a[:, None], b[:, None], a[None, :], b[None, :])
    scalar = np.array([[core.mul(x, y) for y in els] for x in els])
    vector_fail = int(np.count_nonzero((scalar[..., 0] != va) | (scalar[..., 1] != vb)))
    detail = {
        "triples": counts["triples"],
        "assoc_fail": counts["assoc_fail"],
        "oracle_fail": oracle_fail,
        "vector_fail": vector_fail,
    }
    ok = counts["assoc_fail"] == 0 and oracle_fail == 0 and vector_fail == 0
    return SuiteResult("1 associativity + oracle equivalence", ok, detail)


def suite_interassociativity(half_width: Optional[int] = None) -> SuiteResult:
    """Criterion 2: both interassociate identities for (m,n) in [-2,2]^2."""
    counts = interassoc_enumeration(_hw(half_width, 4), 2)
    ok = counts["left_fail"] == 0 and counts["right_fail"] == 0 and counts["variants"] == 25
    detail = {k: counts[k] for k in ("variants", "triples", "left_fail", "right_fail")}
    return SuiteResult("2 interassociativity", ok, detail)


def suite_automorphisms(half_width: Optional[int] = None) -> SuiteResult:
    """Criterion 3: h_k homomorphisms for k in [-5,5]; Aut is Z(+)."""
    w = Window.symmetric(_hw(half_width, 6))
    els = list(w)
    hom_fail = 0
    ks = range(-5, 6)
    for k in ks:
        h = morphisms.Automorphism(k)
        imgs = {x: morphisms.aut_apply(h, x) for x in els}
        for x in els:
            hx = imgs[x]
            for y in els:
                if morphisms.aut_apply(h, core.mul(x, y)) != core.mul(hx, imgs[y]):
                    hom_fail += 1
    group_fail = 0
    H = morphisms.Automorphism
    for k1 in ks:
        h1 = H(k1)
        if morphisms.aut_compose(h1, morphisms.aut_invert(h1)) != morphisms.IDENTITY:
            group_fail += 1
        if morphisms.aut_compose(morphisms.IDENTITY, h1) != h1:
            group_fail += 1
        for k2 in ks:
            h2 = H(k2)
            c = morphisms.aut_compose(h1, h2)
            if c != H(k1 + k2) or c != morphisms.aut_compose(h2, h1):
                group_fail += 1
            # the composite acts as the pointwise composition
            if any(morphisms.aut_apply(c, x) != morphisms.aut_apply(h1, morphisms.aut_apply(h2, x)) for x in els[::7]):
                group_fail += 1
            for k3 in ks[::2]:
                h3 = H(k3)
                if morphisms.aut_compose(morphisms.aut_compose(h1, h2), h3) != morphisms.aut_compose(h1, morphisms.aut_compose(h2, h3)):
                    group_fail += 1
    identity_fail = sum(morphisms.aut_apply(morphisms.IDENTITY, x) != x for x in els)
    ok = hom_fail == group_fail == identity_fail == 0
    return SuiteResult("3 automorphism group", ok, {"hom_fail": hom_fail, "group_fail": group_fail, "identity_fail": identity_fail})


def suite_embedding(half_width: Optional[int] = None) -> SuiteResult:
    """Criterion 4: bicyclic monoid embeds onto each corner; pq = 1."""
    top = _hw(half_width, 8)
    exps = [morphisms.BicyclicElement(i, j) for i in range(top + 1) for j in range(top + 1)]
    hom_fail = inj_fail = image_fail = 0
    for k in (-3, 0, 2):
        w = Window(k - 4, k + top)
        images = [morphisms.embed_bicyclic(k, u) for u in exps]
        if len(set(images)) != len(images):
            inj_fail += 1
        corner = {x for x in w if x.a >= k and x.b >= k}
        if set(images) != corner:
            image_fail += 1
        for u, eu in zip(exps, images):
            for v, ev in zip(exps, images):
                if morphisms.embed_bicyclic(k, morphisms.bicyclic_mul(u, v)) != core.mul(eu, ev):
                    hom_fail += 1
    pq = morphisms.bicyclic_mul(morphisms.P, morphisms.Q) == morphisms.ONE
    ok = hom_fail == inj_fail == image_fail == 0 and pq
    return SuiteResult("4 bicyclic embedding", ok, {"hom_fail": hom_fail, "inj_fail": inj_fail, "image_fail": image_fail, "pq_is_1": pq})


def suite_idempotents(half_width: Optional[int] = None) -> SuiteResult:
    """Criterion 5: exhaustive idempotent scan equals the (n+i, m+i) family."""
    w = Window.symmetric(_hw(half_width, 8))
    mismatches = 0
    found = {}
    for v in ACCEPTANCE_VARIANTS:
        m, n = v
        scan = {x for x in w if variants.smul(v, x, x) == x}
        predicted = {Element(n + i, m + i) for i in range(4 * w.side)} & {x for x in w}
        predicate = {x for x in w if variants.is_idempotent(v, x)}
        mismatches += len(scan ^ predicted) + len(scan ^ predicate)
        found[f"{m},{n}"] = len(scan)
    return SuiteResult("5 idempotents", mismatches == 0, {"mismatches": mismatches, "counts": found})


def suite_omega_chain(half_width: Optional[int] = None) -> SuiteResult:
    """Criterion 6: e_i * e_j = e_max(i,j); omega order; phi onto (N0, max)."""
    top = _hw(half_width, 32)
    fails = 0
    for v in ACCEPTANCE_VARIANTS:
        es = variants.idempotents(v, top + 1)
        op = lambda x, y, v=v: variants.smul(v, x, y)
        for e in es:
            for f in es:
                if variants.smul(v, e.element, f.element) != es[max(e.index, f.index)].element:
                    fails += 1
                leq = variants.omega_leq(v, e, f)
                if leq != core.natural_leq(op, e.element, f.element):
                    fails += 1
                # phi: e_i -> i, order in (N0, max) is x <= y iff max(x, y) == x
                if leq != (max(e.index, f.index) == e.index):
                    fails += 1
        if len({variants.idempotent_index(v, e.element) for e in es}) != len(es):
            fails += 1
    return SuiteResult("6 omega-chain", fails == 0, {"fails": fails, "max_index": top})


def suite_green(half_width: Optional[int] = None) -> SuiteResult:
    """Criterion 7: closed-form Green's relations == brute force."""
    w = Window.symmetric(_hw(half_width, 5))
    els = list(w)
    mismatches = {}
    for v in ACCEPTANCE_VARIANTS:
        for rel in core.GREEN_RELATIONS:
            brute = oracle.brute_green_matrix(rel, v, w)
            closed = np.array([[variants.green_v(rel, v, x, y) for y in els] for x in els])
            mismatches[f"{rel}@{v[0]},{v[1]}"] = int(np.count_nonzero(brute != closed))
    for rel in core.GREEN_RELATIONS:
        brute = oracle.brute_green_matrix(rel, None, w)
        closed = np.array([[core.green_cz(rel, x, y) for y in els] for x in els])
        mismatches[f"{rel}@plain"] = int(np.count_nonzero(brute != closed))
    total = sum(mismatches.values())
    return SuiteResult("7 Green's relations", total == 0, {"pairs": len(els) ** 2, "mismatches": total})


def suite_isomorphisms(half_width: Optional[int] = None) -> SuiteResult:
    """Criterion 8: canonical_iso is a bijective homomorphism preserving idempotent indices."""
    w = Window.symmetric(_hw(half_width, 5))
    els = list(w)
    a, b = w.arrays()
    fails = {"bijection": 0, "hom": 0, "idempotent": 0, "closed_form": 0}
    for m, n in Window.symmetric(3):
        iso = morphisms.canonical_iso(m, n)
        if iso.src != (0, 0) or iso.dst != (m, n) or (iso.shift_a, iso.shift_b) != (n, m):
            fails["closed_form"] += 1
        images = [iso.forward(x) for x in els]
        if len(set(images)) != len(els) or any(iso.backward(y) != x for x, y in zip(els, images)):
            fails["bijection"] += 1
        # homomorphism on all pairs, vectorised; forward is a translation
        lhs = variants.smul_arrays(iso.src, a[:, None], b[:, None], a[None, :], b[None, :])
        lhs = (lhs[0] + iso.shift_a, lhs[1] + iso.shift_b)
        fa, fb = a + iso.shift_a, b + iso.shift_b
        rhs = variants.smul_arrays(iso.dst, fa[:, None], fb[:, None], fa[None, :], fb[None, :])
        fails["hom"] += int(np.count_nonzero((lhs[0] != rhs[0]) | (lhs[1] != rhs[1])))
        for x, y in zip(els, images):
            if variants.is_idempotent(iso.src, x) != variants.is_idempotent(iso.dst, y):
                fails["idempotent"] += 1
            elif variants.is_idempotent(iso.src, x) and variants.idempotent_index(iso.src, x) != variants.idempotent_index(iso.dst, y):
                fails["idempotent"] += 1
        for i in range(33):
            if iso.forward(variants.idempotent((0, 0), i).element) != variants.idempotent((m, n), i).element:
                fails["idempotent"] += 1
    return SuiteResult("8 variant isomorphisms", not any(fails.values()), fails)


def suite_generation(half_width: Optional[int] = None, samples: int = 200, seed: int = 20161) -> SuiteResult:
    """Criterion 9: witnesses lie outside saturated guard-window closures."""
    R = _hw(half_width, 10)
    rng = random.Random(seed)
    fails = {"plain_witness": 0, "variant_witness": 0, "containment": 0, "floors": 0, "negative_region": 0}
    for _ in range(samples):
        size = rng.randint(1, 5)
        gens = [(rng.randint(-R, R), rng.randint(-R, R)) for _ in range(size)]
        g = generation.GenSet.of(gens)
        res = generation.closure(g, generation.default_guard(g))
        if generation.witness_cz(g) in res.found:
            fails["plain_witness"] += 1
        k = generation.min_corner(g)
        if any(min(x) < k for x in res.found):
            fails["containment"] += 1

        v = (rng.randint(-3, 3), rng.randint(-3, 3))
        gv = generation.GenSet.of(gens, v)
        resv = generation.closure(gv, generation.default_guard(gv))
        wit, (xs, ys) = generation.witness_variant(gv)
        if wit in resv.found:
            fails["variant_witness"] += 1
        if any((x.a < xs or x.b < ys) for x in resv.found - gv.elements):
            fails["floors"] += 1
        if v == (0, 0):
            guard = resv.guard
            negative = {x for x in guard if x.a < 0 and x.b < 0}
            if not negative - resv.found:
                fails["negative_region"] += 1
    return SuiteResult("9 non-finite generation", not any(fails.values()), dict(fails, samples=samples))


def suite_difference(half_width: Optional[int] = None) -> SuiteResult:
    """Criterion 10: the difference identity on every product formed in criteria 1-2."""
    c1 = assoc_enumeration(_hw(half_width, 6))
    c2 = interassoc_enumeration(_hw(half_width, 4), 2)
    total = c1["diff_fail"] + c2["diff_fail"]
    return SuiteResult("10 difference invariant", total == 0, {"diff_fail": total})


def suite_topology(half_width: Optional[int] = None) -> SuiteResult:
    """Criterion 11: lint, collapse constancy, Hausdorff, density, continuity."""
    detail = {}
    lint_w = Window.symmetric(_hw(half_width, 8))
    detail["tau_star_violations"] = len(topology.lint_shift_constraints(topology.tau_star_classifier, lint_w))

    def wrong(x):
        # isolates only a+b > 0, i.e. leaves e.g. (5,-9) non-isolated
        return "isolated" if x.a + x.b > 0 else "non-isolated"

    got = {v.point for v in topology.lint_shift_constraints(wrong, lint_w)}
    expected = {x for x in lint_w if x.a + x.b <= 0 and (x.a > 0 or x.b > 0)}
    detail["wrong_classifier_exact"] = got == expected

    bases = [Element(0, -k) for k in range(9)] + [Element(-k, 0) for k in range(1, 9)]
    collapse_fail = 0
    for p in bases:
        for q in bases:
            want = topology.collapse_product(topology.RayPoint(p, 0), topology.RayPoint(q, 0))
            for i in range(33):
                x = topology.ray_member(p, i)
                for j in range(33):
                    if variants.smul((0, 0), x, topology.ray_member(q, j)) != want:
                        collapse_fail += 1
    detail["collapse_fail"] = collapse_fail

    hw = Window.symmetric(_hw(half_width, 6))
    els = list(hw)
    sep_fail = 0
    for i, x in enumerate(els):
        for y in els[i + 1:]:
            u, v = topology.separate(x, y)
            if not (u.contains(x) and v.contains(y) and topology.disjoint(u, v)):
                sep_fail += 1
    detail["hausdorff_fail"] = sep_fail

    dense_fail = sum(topology.dense_neighbor(i, d) is None for i in range(33) for d in range(1, 65))
    detail["dense_fail"] = dense_fail

    cw = Window.symmetric(_hw(half_width, 5))
    cert_fail = certs = 0
    for x in cw:
        for y in cw:
            z = variants.smul((0, 0), x, y)
            for target in topology.basic_nbhds(z, 3):
                certs += 1
                try:
                    u, v = topology.continuity_certificate(x, y, target)
                except AssertionError:
                    cert_fail += 1
                    continue
                if not (u.contains(x) and v.contains(y)):
                    cert_fail += 1
    detail["certificates"] = certs
    detail["certificate_fail"] = cert_fail

    ok = (
        detail["tau_star_violations"] == 0
        and detail["wrong_classifier_exact"]
        and collapse_fail == sep_fail == dense_fail == cert_fail == 0
    )
    return SuiteResult("11 topology tau*", ok, detail)


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "associativity": suite_associativity,
    "interassociativity": suite_interassociativity,
    "automorphisms": suite_automorphisms,
    "embedding": suite_embedding,
    "idempotents": suite_idempotents,
    "omega": suite_omega_chain,
    "green": suite_green,
    "isomorphisms": suite_isomorphisms,
    "generation": suite_generation,
    "difference": suite_difference,
    "topology": suite_topology,
}


def run_suite(name: str, half_width: Optional[int] = None) -> SuiteResult:
    t = time.perf_counter()
    try:
        res = SUITES[name](half_width)
    except Exception as exc:  # a crash counts as a failed criterion
        res = SuiteResult(name, False, {"error": f"{type(exc).__name__}: {exc}"})
    res.seconds = time.perf_counter() - t
    return res


def run_all(names=None, half_width: Optional[int] = None, jobs: int = 1) -> list[SuiteResult]:
    names = list(SUITES) if names is None else list(names)
    if jobs <= 1:
        return [run_suite(n, half_width) for n in names]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(run_suite, names, [half_width] * len(names)))
