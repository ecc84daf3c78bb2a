import pytest
from hypothesis import given
from hypothesis import strategies as st

from bicyclic.core import Element, Variant, Window, mul
from bicyclic.morphisms import (
    IDENTITY,
    ONE,
    P,
    Q,
    Automorphism,
    BicyclicElement,
    InvalidPadding,
    IsoMap,
    aut_apply,
    aut_compose,
    aut_invert,
    bicyclic_mul,
    canonical_iso,
    embed_bicyclic,
    iso_diag,
    iso_pad,
)
from bicyclic.variants import idempotent, is_idempotent, smul

from conftest import elements

ks = st.integers(-20, 20)
exps = st.integers(0, 30)
bicyclic_elements = st.builds(BicyclicElement, exps, exps)


def textbook_bicyclic(u, v):
    # q^a p^b . q^c p^d = q^(a-b+t) p^(d-c+t), t = max(b, c)
    t = max(u.j, v.i)
    return BicyclicElement(u.i - u.j + t, v.j - v.i + t)


def test_aut_apply_examples():
    assert aut_apply(Automorphism(3), (1, 2)) == (4, 5)
    assert aut_apply(IDENTITY, (-7, 9)) == (-7, 9)
    h = Automorphism(-2)
    assert aut_apply(h, mul((2, 5), (3, 1))) == (0, 1)
    assert mul(aut_apply(h, (2, 5)), aut_apply(h, (3, 1))) == (0, 1)


def test_group_examples():
    assert aut_compose(Automorphism(2), Automorphism(-5)) == Automorphism(-3)
    assert aut_invert(Automorphism(7)) == Automorphism(-7)
    h = Automorphism(4)
    assert aut_compose(h, aut_invert(h)) == IDENTITY


@given(ks, elements, elements)
def test_automorphism_is_homomorphism(k, x, y):
    h = Automorphism(k)
    assert h(mul(x, y)) == mul(h(x), h(y))


@given(ks, ks, ks)
def test_group_laws_on_parameters(a, b, c):
    A, B, C = Automorphism(a), Automorphism(b), Automorphism(c)
    assert aut_compose(aut_compose(A, B), C) == aut_compose(A, aut_compose(B, C))
    assert aut_compose(A, B) == aut_compose(B, A)
    assert aut_compose(A, aut_invert(A)) == IDENTITY


def test_bicyclic_examples():
    assert bicyclic_mul(P, Q) == ONE
    assert bicyclic_mul(BicyclicElement(1, 2), BicyclicElement(4, 0)) == BicyclicElement(3, 0)
    u = BicyclicElement(2, 6)
    assert bicyclic_mul(ONE, u) == u == bicyclic_mul(u, ONE)
    # q p is not the identity
    assert bicyclic_mul(Q, P) == BicyclicElement(1, 1)


@given(bicyclic_elements, bicyclic_elements)
def test_bicyclic_mul_matches_textbook_rule(u, v):
    assert bicyclic_mul(u, v) == textbook_bicyclic(u, v)


def test_embed_examples():
    assert embed_bicyclic(-7, BicyclicElement(2, 0)) == (-5, -7)
    u, v = BicyclicElement(1, 2), BicyclicElement(4, 0)
    assert embed_bicyclic(0, bicyclic_mul(u, v)) == (3, 0) == mul(embed_bicyclic(0, u), embed_bicyclic(0, v))
    img = embed_bicyclic(2, BicyclicElement(0, 5))
    assert img.a >= 2 and img.b >= 2


@given(ks, bicyclic_elements, bicyclic_elements)
def test_embedding_homomorphism(k, u, v):
    assert embed_bicyclic(k, bicyclic_mul(u, v)) == mul(embed_bicyclic(k, u), embed_bicyclic(k, v))


def test_bicyclic_element_rejects_negative_exponents():
    with pytest.raises(ValueError):
        BicyclicElement.make(-1, 0)


def _is_hom(iso: IsoMap, w: Window) -> bool:
    els = list(w)
    return all(iso(smul(iso.src, x, y)) == smul(iso.dst, iso(x), iso(y)) for x in els for y in els)


def test_iso_diag_examples():
    iso = iso_diag(4)
    assert iso((0, 0)) == (4, 4) == idempotent((4, 4), 0).element
    assert iso_diag(0)((3, -2)) == (3, -2)
    iso = iso_diag(1)
    x, y = (0, -2), (-1, 0)
    assert iso(smul((0, 0), x, y)) == smul((1, 1), iso(x), iso(y))


def test_iso_pad_examples():
    iso = iso_pad("right", -1, 3)
    assert iso.src == (-1, -1) and iso.dst == (2, -1)
    assert iso((-1, -1)) == (-1, 2)
    x, y = (0, -2), (-1, 0)
    assert smul((-1, -1), x, y) == (1, 0)
    assert iso((1, 0)) == (1, 3)
    assert smul((2, -1), (0, 1), (-1, 3)) == (1, 3)

    iso = iso_pad("left", 0, 1)
    assert iso.dst == (0, 1)
    # the left pad moves the first coordinate, so e_0 goes to e_0
    assert iso((0, 0)) == (1, 0) == idempotent((0, 1), 0).element


def test_second_coordinate_left_pad_is_not_a_homomorphism():
    naive = IsoMap(Variant(0, 0), Variant(0, 1), 0, 1)
    assert not _is_hom(naive, Window(-3, 3))
    assert _is_hom(iso_pad("left", 0, 1), Window(-3, 3))


def test_iso_pad_rejects_bad_padding():
    with pytest.raises(InvalidPadding):
        iso_pad("right", 0, 0)
    with pytest.raises(ValueError):
        iso_pad("up", 0, 1)


@pytest.mark.parametrize("r, p", [(-2, 1), (0, 3), (3, 2)])
@pytest.mark.parametrize("direction", ["right", "left"])
def test_pads_are_homomorphisms(direction, r, p):
    assert _is_hom(iso_pad(direction, r, p), Window(-4, 4))


def test_canonical_iso_examples():
    iso = canonical_iso(2, -1)
    assert (iso.shift_a, iso.shift_b) == (-1, 2)
    assert smul((0, 0), (0, 0), (1, 1)) == (1, 1)
    assert iso((1, 1)) == (0, 3)
    assert smul((2, -1), iso((0, 0)), iso((1, 1))) == (0, 3)
    assert canonical_iso(0, 0) == IsoMap(Variant(0, 0), Variant(0, 0), 0, 0)


@pytest.mark.parametrize("m, n", [(2, -1), (-1, 2), (3, 3), (-3, 1), (0, 0)])
def test_canonical_iso_transports_idempotent_chain(m, n):
    iso = canonical_iso(m, n)
    for i in range(20):
        e = iso(idempotent((0, 0), i).element)
        assert e == idempotent((m, n), i).element
        assert is_idempotent((m, n), e)


@given(st.integers(-8, 8), st.integers(-8, 8), elements)
def test_canonical_iso_round_trip_and_closed_form(m, n, x):
    iso = canonical_iso(m, n)
    assert (iso.src, iso.dst) == ((0, 0), (m, n))
    assert (iso.shift_a, iso.shift_b) == (n, m)
    assert iso.backward(iso(x)) == x
    assert iso.inverse()(iso(x)) == x


@given(st.integers(-5, 5), st.integers(-5, 5), elements, elements)
def test_canonical_iso_homomorphism(m, n, x, y):
    iso = canonical_iso(m, n)
    assert iso(smul((0, 0), x, y)) == smul((m, n), iso(x), iso(y))
