"""Exact coefficient arithmetic: ring axioms, gcd, and the two-variable layout."""

import random
from fractions import Fraction

import pytest

from intrec import poly as P
from intrec.poly import Poly


def rand_frac(rng, span=9):
    return Fraction(rng.randint(-span, span), rng.randint(1, span))


def rand_poly(rng, var="x", maxdeg=4, span=9):
    return Poly(var, [rand_frac(rng, span) for _ in range(rng.randint(0, maxdeg) + 1)])


def nonzero_poly(rng, var="x", maxdeg=4, span=9):
    while True:
        p = rand_poly(rng, var, maxdeg, span)
        if not p.is_zero():
            return p


def rand_bivar(rng, maxdeg_t=3, maxdeg_x=2, span=5):
    coeffs = [rand_poly(rng, "x", maxdeg_x, span)
              for _ in range(rng.randint(0, maxdeg_t) + 1)]
    return Poly("t", coeffs)


def nonzero_bivar(rng, maxdeg_t=2, maxdeg_x=2, span=4):
    while True:
        p = rand_bivar(rng, maxdeg_t, maxdeg_x, span)
        if not p.is_zero():
            return p


def test_rational_field_axioms():
    rng = random.Random(101)
    for _ in range(1000):
        a, b, c = (P.as_num(rand_frac(rng)) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a + (-a) == 0
        if b:
            assert P.num_div(a, b) * b == a
    assert P.fmt_num(P.as_num(Fraction(4, 2))) == "2"
    assert P.num_from_str("7/3") == Fraction(7, 3)
    with pytest.raises(ZeroDivisionError):
        P.num_div(Fraction(1), Fraction(0))


def test_polynomial_ring_axioms():
    rng = random.Random(202)
    for _ in range(300):
        a, b, c = (rand_poly(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == Poly("x", [])
        v = rand_frac(rng)
        assert (a * b).eval(v) == a.eval(v) * b.eval(v)
        assert (a + b).eval(v) == a.eval(v) + b.eval(v)
        if not (a.is_zero() or b.is_zero()):
            assert (a * b).degree() == a.degree() + b.degree()


def test_derivative_product_rule():
    rng = random.Random(303)
    for _ in range(150):
        a, b = rand_poly(rng), rand_poly(rng)
        assert (a * b).deriv() == a.deriv() * b + a * b.deriv()


def test_divmod_inverts_multiplication():
    rng = random.Random(404)
    for _ in range(200):
        a, b = rand_poly(rng, maxdeg=5), nonzero_poly(rng, maxdeg=3)
        q, r = P.divmod_poly(a, b)
        assert a == q * b + r
        assert r.is_zero() or r.degree() < b.degree()


def test_exact_div_inverts_product():
    rng = random.Random(505)
    for _ in range(120):
        a, b = rand_poly(rng), nonzero_poly(rng)
        assert P.exact_div(a * b, b) == a
    # same inverse law in the two-variable layer
    for _ in range(40):
        a, b = rand_bivar(rng), nonzero_bivar(rng)
        assert P.exact_div(a * b, b) == a


def test_gcd_worked_examples():
    x2m1 = Poly("x", [-1, 0, 1])
    assert P.gcd(x2m1, Poly("x", [1, -2, 1])) == Poly("x", [-1, 1])
    a = Poly("x", [-2, 0, 2])
    zero = Poly("x", [])
    assert P.gcd(a, zero) == a.monic()
    assert P.gcd(zero, a) == a.monic()
    assert P.gcd(zero, zero).is_zero()


def test_gcd_divides_both_inputs():
    rng = random.Random(606)
    for _ in range(200):
        a, b = nonzero_poly(rng), nonzero_poly(rng)
        g = P.gcd(a, b)
        _, ra = P.divmod_poly(a, g)
        _, rb = P.divmod_poly(b, g)
        assert ra.is_zero() and rb.is_zero()


def test_gcd_recovers_planted_factor():
    rng = random.Random(707)
    for _ in range(150):
        g = nonzero_poly(rng, maxdeg=2)
        u, v = nonzero_poly(rng, maxdeg=2), nonzero_poly(rng, maxdeg=2)
        d = P.gcd(g * u, g * v)
        _, r = P.divmod_poly(d, g.monic())
        assert r.is_zero()


def test_lcm_gcd_product_relation():
    rng = random.Random(808)
    for _ in range(100):
        a, b = nonzero_poly(rng), nonzero_poly(rng)
        lhs = P.canonical_unit(a * b)
        rhs = P.canonical_unit(P.gcd(a, b) * P.lcm(a, b))
        assert lhs == rhs


def test_bivariate_gcd_common_factor():
    rng = random.Random(909)
    for _ in range(40):
        g = nonzero_bivar(rng, maxdeg_t=1, maxdeg_x=1)
        u = nonzero_bivar(rng, maxdeg_t=1, maxdeg_x=1)
        v = nonzero_bivar(rng, maxdeg_t=1, maxdeg_x=1)
        d = P.gcd(g * u, g * v)
        # d divides both products and the planted factor divides d
        assert P.exact_div(g * u, d) * d == g * u
        assert P.exact_div(g * v, d) * d == g * v
        assert P.exact_div(d, P.canonical_unit(g)) * P.canonical_unit(g) == d


def test_chebyshev_denominator_is_squarefree():
    den = Poly("t", [Poly("x", [1]), Poly("x", [0, -2]), Poly("x", [1])])
    g = P.gcd(den, den.deriv())
    assert g.is_constant() or (g.degree() == 0 and P.x_degree(g) == 0)


def test_canonical_unit_properties():
    rng = random.Random(111)
    for _ in range(100):
        p = nonzero_poly(rng)
        q = rand_frac(rng)
        if not q:
            q = Fraction(3)
        assert P.canonical_unit(P.scale_poly(p, q)) == P.canonical_unit(p)
        c = P.canonical_unit(p)
        assert P.leading_sign(c) == 1
        assert P.rational_content(c) == 1


def test_int_coeffs_clears_denominators():
    cleared, scale = P.int_coeffs(Poly("x", [Fraction(1, 2), Fraction(1, 3)]))
    assert cleared == [3, 2] and scale == 6


def test_x_coefficients_round_trip():
    bp = Poly("t", [Poly("x", [1, 2]), Poly("x", [0, 3])])
    cols = P.x_coefficients(bp)
    assert cols == [Poly("t", [1]), Poly("t", [2, 3])]
    assert P.from_x_coefficients(cols, "t") == bp
    rng = random.Random(222)
    for _ in range(60):
        p = rand_bivar(rng)
        assert P.from_x_coefficients(P.x_coefficients(p), "t") == p


def test_cross_variable_product_stays_flat():
    # a rational x-polynomial times a t-constant wrapper must not nest
    r = Poly("x", [0, Fraction(1, 2)]) * Poly("t", [Poly("x", [0, 2])])
    assert r.var == "x"
    assert r == Poly("x", [0, 0, 1])
    s = Poly("x", [0, 1]) * Poly("t", [0, 1])
    assert s.var == "t"
    assert P.eval_bivariate(s, Fraction(3), Fraction(5)) == 15


def test_eval_bivariate_worked():
    bp = Poly("t", [Poly("x", [1, 2]), Poly("x", [0, 3])])
    assert P.eval_bivariate(bp, Fraction(2), Fraction(5)) == 35


def test_inner_substitution_and_derivative():
    bp = Poly("t", [Poly("x", [1, 2]), Poly("x", [0, 3])])
    assert P.subs_inner(bp, Fraction(2)) == Poly("t", [5, 6])
    assert P.deriv_inner(bp) == Poly("t", [2, 3])
    sq = Poly("x", [0, 0, 1])
    assert P.subs_inner(sq, Fraction(3)) == Poly("t", [9])
    assert P.deriv_inner(sq) == Poly("x", [0, 2])
