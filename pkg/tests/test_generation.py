import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bicyclic.core import Element, Window, inverse, mul
from bicyclic.generation import (
    BudgetExceeded,
    GenSet,
    closure,
    default_guard,
    min_corner,
    witness_cz,
    witness_variant,
)
from bicyclic.variants import ideal_floors, smul

small = st.integers(-10, 10)
gen_sets = st.frozensets(st.tuples(small, small), min_size=1, max_size=5)


def test_closure_examples():
    res = closure(GenSet.of([(0, 1), (2, -1)]), Window(-3, 6))
    assert (1, -1) in res and mul((0, 1), (2, -1)) == (1, -1)
    assert (3, 1) in res and mul((2, -1), (0, 1)) == (3, 1)
    res = closure(GenSet.of([(0, 0)]), Window(-2, 2))
    assert res.found == {(0, 0)}
    assert res.saturated and not res.frontier


def test_closure_frontier_marks_escape():
    res = closure(GenSet.of([(0, 1)]), Window(-3, 3))
    # (0,1)^k = (0,k) leaves any window
    assert not res.saturated
    assert (0, 4) in res.frontier
    assert {(0, k) for k in range(1, 4)} <= res.found


def test_closure_variant_mode():
    g = GenSet.of([(-1, -2), (0, -3)], (0, 0))
    res = closure(g, Window(-6, 6))
    assert smul((0, 0), (-1, -2), (0, -3)) in res
    assert (0, -4) not in res


def test_closure_rejects_generators_outside_guard():
    with pytest.raises(ValueError):
        closure(GenSet.of([(9, 0)]), Window(-3, 3))


def test_budget():
    with pytest.raises(BudgetExceeded):
        closure(GenSet.of([(0, 1), (1, 0)]), Window(0, 20), cap=50)


def test_empty_genset_rejected():
    with pytest.raises(ValueError):
        GenSet.of([])


def test_witness_cz_examples():
    assert min_corner(GenSet.of([(0, 1), (2, -1)])) == -1
    assert witness_cz(GenSet.of([(0, 1), (2, -1)])) == (-2, -2)
    assert witness_cz(GenSet.of([(0, 0)])) == (-1, -1)
    assert witness_cz(GenSet.of([(5, 7), (9, 5)])) == (4, 4)
    res = closure(GenSet.of([(0, 1), (2, -1)]), Window(-4, 6))
    assert (-2, -2) not in res


def test_witness_variant_examples():
    g = GenSet.of([(-1, -2), (0, -3)], (0, 0))
    assert sorted(ideal_floors((0, 0), f)[0] for f in g.elements) == [1, 3]
    assert sorted(ideal_floors((0, 0), f)[1] for f in g.elements) == [-3, -1]
    assert witness_variant(g) == ((0, -4), (1, -3))
    assert witness_variant(GenSet.of([(0, 0)], (0, 0))) == ((-1, -1), (0, 0))


def test_witness_skips_generators():
    # (-1,-1) sits exactly where the first candidate would go
    g = GenSet.of([(0, 0), (-1, -1)], (0, 0))
    w, floors = witness_variant(g)
    assert w not in g.elements
    assert w == (floors[0] - 2, floors[1] - 2)


def test_negative_quadrant_not_covered():
    g = GenSet.of([(-3, -1), (2, -5), (-4, -4)], (0, 0))
    res = closure(g, Window(-12, 12))
    quadrant = {Element(x, y) for x in range(-12, 0) for y in range(-12, 0)}
    assert quadrant - res.found


def test_witness_mode_checks():
    with pytest.raises(ValueError):
        witness_cz(GenSet.of([(0, 0)], (0, 0)))
    with pytest.raises(ValueError):
        witness_variant(GenSet.of([(0, 0)]))


@settings(max_examples=60)
@given(gen_sets)
def test_containment_and_witness_plain(gens):
    g = GenSet.of(gens)
    k = min_corner(g)
    res = closure(g, default_guard(g))
    assert all(a >= k and b >= k for a, b in res.found)
    assert all(a >= k and b >= k for a, b in res.frontier)
    assert witness_cz(g) not in res


@settings(max_examples=60)
@given(gen_sets)
def test_inverse_generators_keep_witness(gens):
    g = GenSet.of(gens)
    g_inv = GenSet.of(set(gens) | {inverse(x) for x in gens})
    assert min_corner(g_inv) == min_corner(g)
    assert witness_cz(g_inv) not in closure(g_inv, default_guard(g_inv))


@settings(max_examples=60)
@given(gen_sets, st.integers(-3, 3), st.integers(-3, 3))
def test_witness_variant_sound(gens, m, n):
    g = GenSet.of(gens, (m, n))
    w, (xs, ys) = witness_variant(g)
    assert w.a < xs and w.b < ys
    guard = Window(min(w.a, default_guard(g).lo) - 1, default_guard(g).hi)
    assert w not in closure(g, guard)


@given(st.lists(st.tuples(small, small), min_size=2, max_size=4), st.integers(-3, 3), st.integers(-3, 3))
def test_floors_bound_every_product(chain, m, n):
    v = (m, n)
    xs = min(ideal_floors(v, f)[0] for f in chain)
    ys = min(ideal_floors(v, f)[1] for f in chain)
    p = chain[0]
    for f in chain[1:]:
        p = smul(v, p, f)
    assert p.a >= xs and p.b >= ys


def test_random_witness_batch():
    rng = random.Random(7)
    for _ in range(25):
        gens = {(rng.randint(-10, 10), rng.randint(-10, 10)) for _ in range(rng.randint(1, 5))}
        g = GenSet.of(gens)
        assert witness_cz(g) not in closure(g, default_guard(g))
