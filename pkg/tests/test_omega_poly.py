from hypothesis import given
from hypothesis import strategies as st

from epidecide.omega_poly import (
    EQUAL,
    GREATER,
    LESS,
    OmegaPoly,
    parse_poly,
    poly_add,
    poly_compare,
    poly_content,
    poly_eval,
    poly_floor_div,
    poly_integer_roots,
    poly_mul_omega_plus,
    render_poly,
)

P = parse_poly


def test_add_examples():
    assert poly_add(P("w+2"), P("3")) == P("w+5")
    assert poly_add(P("w^2-4"), P("0")) == P("w^2-4")
    assert poly_add(P("2w+27"), P("-2w-27")) == P("0")


def test_mul_omega_plus_examples():
    assert poly_mul_omega_plus(P("1"), -1) == P("w-1")
    assert poly_mul_omega_plus(P("2w+27"), -1) == P("2w^2+25w-27")
    assert poly_mul_omega_plus(P("w"), 0) == P("w^2")


def test_compare_examples():
    assert poly_compare(P("5w+100"), P("w^2")) == LESS
    assert poly_compare(P("w+3"), P("w+3")) == EQUAL
    assert poly_compare(P("2w^2"), P("2w^2+1")) == LESS


def test_integer_roots_examples():
    assert poly_integer_roots(P("w^2-w-2")) == {2, -1}
    assert poly_integer_roots(P("w+5")) == {-5}
    assert poly_integer_roots(P("w^2+1")) == set()


def test_content_examples():
    assert poly_content(P("4w^2+6w")) == 2
    assert poly_content(P("w+1")) == 1
    assert poly_content(P("0")) == 0


def test_eval_examples():
    assert poly_eval(P("2w+27"), 0) == 27
    assert poly_eval(P("w^2-w-2"), 2) == 0
    assert poly_eval(P("w-1"), 5) == 4


def test_render_and_parse():
    assert render_poly(P("2w^2+25w-27")) == "2w^2+25w-27"
    assert render_poly(OmegaPoly((0,))) == "0"
    assert render_poly(OmegaPoly((-27, 25, 2))) == "2w^2+25w-27"
    assert render_poly(OmegaPoly((1, -1))) == "-w+1"
    assert str(P("w")) == "w"


small_polys = st.lists(st.integers(-9, 9), min_size=1, max_size=4).map(
    lambda cs: OmegaPoly(tuple(cs))
)


@given(small_polys, small_polys, small_polys)
def test_total_order(p, q, r):
    # antisymmetric and transitive, total on canonical forms
    assert poly_compare(p, q) == -poly_compare(q, p)
    if poly_compare(p, q) != GREATER and poly_compare(q, r) != GREATER:
        assert poly_compare(p, r) != GREATER
    if poly_compare(p, q) == EQUAL:
        assert p == q


@given(small_polys, small_polys)
def test_add_monotone(p, q):
    if not q.is_zero() and q.leading() > 0:
        assert poly_compare(p, poly_add(p, q)) == LESS


@given(small_polys)
def test_roots_complete(p):
    if p.is_zero():
        return
    roots = poly_integer_roots(p)
    for r in roots:
        assert poly_eval(p, r) == 0
    c0 = next(c for c in p.coeffs if c != 0)
    for k in range(-abs(c0), abs(c0) + 1):
        if poly_eval(p, k) == 0:
            assert k in roots


@given(small_polys, small_polys)
def test_roundtrip_render(p, q):
    assert parse_poly(render_poly(p)) == p


@given(small_polys, st.lists(st.integers(-6, 6), min_size=1, max_size=3))
def test_floor_div(p, dcs):
    d = OmegaPoly(tuple(dcs))
    if d.leading() <= 0 or p.degree > d.degree:
        return
    k, r = poly_floor_div(p, d)
    assert poly_add(d.scale(k), r) == p
    assert poly_compare(r, OmegaPoly((0,))) != LESS
    assert poly_compare(r, d) == LESS
