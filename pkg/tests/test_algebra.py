import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fregdeform.algebra import (
    AlgebraError,
    CoefficientField,
    ExponentOverflow,
    MonomialOrder,
    Polynomial,
    PolynomialSyntaxError,
    RingSignature,
    is_homogeneous,
    is_prime,
    parse_polynomial,
    poly_power,
    weighted_degree,
)

R43 = RingSignature.make("a b c d t", (4, 8, 8, 24, 2), 17)


def polys(ring, max_terms=4, max_exp=3):
    n = ring.nvars
    mono = st.tuples(*[st.integers(0, max_exp)] * n)
    coeff = st.integers(-20, 20)
    return st.dictionaries(mono, coeff, max_size=max_terms).map(
        lambda d: Polynomial.from_terms(ring, d))


def homogeneous_polys(ring, degree, max_terms=4):
    from fregdeform.groebner import monomials_of_degree
    monos = list(monomials_of_degree(ring.weights, degree))
    return st.dictionaries(st.sampled_from(monos), st.integers(1, 16), min_size=1,
                           max_size=max_terms).map(lambda d: Polynomial.from_terms(ring, d))


def test_primality():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    with pytest.raises(AlgebraError):
        CoefficientField(15)


@pytest.mark.parametrize("p", [3, 5, 17])
def test_field_inverses(p):
    K = CoefficientField(p)
    for a in range(1, p):
        assert K(a * K.inv(a)) == 1
    with pytest.raises(ZeroDivisionError):
        K.inv(0)


def test_rationals_exact():
    Q = CoefficientField(0)
    a, b = Q(Fraction(1, 3)), Q(Fraction(2, 7))
    assert (a + b) - b == a
    assert Q.inv(Fraction(2, 7)) == Fraction(7, 2)


def test_signature_validation():
    with pytest.raises(AlgebraError):
        RingSignature.make("x x")
    with pytest.raises(AlgebraError):
        RingSignature.make("x X")
    with pytest.raises(AlgebraError):
        RingSignature.make("x y", (1, 0))
    with pytest.raises(AlgebraError):
        RingSignature.make("x y", (1,))


def test_parse_examples():
    r5 = RingSignature.make("a b c d t", (4, 8, 8, 24, 2), 5)
    assert len(parse_polynomial("a^2*b + 3*t^4", r5)) == 2
    assert len(parse_polynomial("0", r5)) == 0
    f = parse_polynomial("(a^2+t^4)*a^2 - b*c", R43)
    assert len(f) == 3
    assert f == R43.parse("a^4 + a^2*t^4 - b*c")


def test_parse_case_insensitive_and_whitespace():
    assert R43.parse("A ^ 2 * B") == R43.parse("a^2*b")
    assert R43.parse("-(a - b)") == R43.parse("b - a")
    assert R43.parse("2*(a+b)*(a-b)") == R43.parse("2*a^2 - 2*b^2")


def test_parse_errors_report_position():
    with pytest.raises(PolynomialSyntaxError) as info:
        R43.parse("a + * b")
    assert info.value.position == 4
    with pytest.raises(AlgebraError):
        R43.parse("a + q")
    with pytest.raises(AlgebraError):
        R43.parse("a/17")


def test_division_by_literal():
    assert R43.parse("a/2") * 2 == R43.parse("a")
    q = RingSignature.make("x", field=0)
    assert q.parse("x/3").coefficient((1,)) == Fraction(1, 3)


def test_exponent_cap():
    with pytest.raises(ExponentOverflow):
        R43.parse("a^1000001")


def test_weighted_degree_examples():
    r = RingSignature.make("a b c d t", (4, 8, 8, 24, 2), 5)
    assert weighted_degree(r.parse("b^3 - d")) == (24, True)
    assert weighted_degree(r.parse("a^2 + t^4")) == (8, True)
    assert weighted_degree(r.parse("a + t")) == (4, False)
    with pytest.raises(AlgebraError):
        weighted_degree(r.zero())


def test_power_examples():
    f = R43.parse("a + b")
    assert poly_power(f, 0) == 1
    assert poly_power(R43.parse("b^3*t^3"), 17) == R43.parse("b^51*t^51")
    x = RingSignature.make("x y", field=7)
    assert x.parse("x+y") ** 7 == x.parse("x^7 + y^7")


def test_derivative_uses_characteristic():
    r = RingSignature.make("t", field=5)
    assert r.parse("t^5 + t^4").derivative("t") == r.parse("4*t^3")


def test_render_roundtrip():
    for text in ["a^4 + a^2*t^4 - b*c", "0", "-1", "3*a*b - 5*d + 7"]:
        f = R43.parse(text)
        assert R43.parse(f.render()) == f
    q = RingSignature.make("x y", field=0)
    f = q.parse("x/3 - 2*y/5 + 7")
    assert q.parse(f.render()) == f


def test_substitute_is_ring_map():
    r = RingSignature.make("x y", field=5)
    s = RingSignature.make("u", field=5)
    u = s.var("u")
    f = r.parse("x^2 + 3*x*y + 1")
    img = {"x": u + 1, "y": u ** 2}
    assert f.substitute(img, s) == (u + 1) ** 2 + 3 * (u + 1) * u ** 2 + 1


@settings(max_examples=60, deadline=None)
@given(polys(R43), polys(R43), polys(R43))
def test_ring_axioms(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f * g == g * f
    assert (f + g) - g == f


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([3, 5, 17]), st.data())
def test_freshmans_dream(p, data):
    r = RingSignature.make("x y z", field=p)
    f = data.draw(polys(r, 3, 2))
    g = data.draw(polys(r, 3, 2))
    assert (f + g) ** p == f ** p + g ** p


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_degree_additive(data):
    f = data.draw(homogeneous_polys(R43, 2 * data.draw(st.integers(1, 8))))
    g = data.draw(homogeneous_polys(R43, 2 * data.draw(st.integers(1, 8))))
    h = f * g
    assert is_homogeneous(h)
    assert weighted_degree(h).degree == weighted_degree(f).degree + weighted_degree(g).degree


@settings(max_examples=40, deadline=None)
@given(polys(R43), st.integers(0, 5))
def test_power_matches_repeated_product(f, k):
    acc = R43.one()
    for _ in range(k):
        acc = acc * f
    assert poly_power(f, k) == acc


@pytest.mark.parametrize("name", ["lex", "grevlex", "weighted"])
def test_orders_multiplicative_with_minimum_one(name):
    order = MonomialOrder.named(name, R43)
    monos = list(itertools.product(range(3), repeat=5))[::7]
    key = order.key
    one = (0,) * 5
    for u in monos:
        assert u == one or key(one) < key(u)
    for u, v, w in itertools.islice(itertools.product(monos, repeat=3), 0, None, 97):
        if key(u) < key(v):
            uw = tuple(a + b for a, b in zip(u, w))
            vw = tuple(a + b for a, b in zip(v, w))
            assert key(uw) < key(vw)


def test_orders_are_total():
    order = MonomialOrder.weighted(R43.weights)
    monos = list(itertools.product(range(3), repeat=5))
    keys = {order.key(m) for m in monos}
    assert len(keys) == len(monos)


def test_order_validation():
    with pytest.raises(AlgebraError):
        MonomialOrder("bad", ((1, 1), (1, 1)))
    with pytest.raises(AlgebraError):
        MonomialOrder("neg", ((1, -1), (0, 1)))


def test_elimination_order_puts_eliminated_first():
    order = MonomialOrder.elimination((1, 1, 1), [2])
    assert order.key((0, 0, 1)) > order.key((5, 5, 0))
