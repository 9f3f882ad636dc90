"""Recurrence guessing from exact terms with held-out verification."""

import math
from fractions import Fraction

from intrec import cfinite as cf
from intrec.guess import guess_cfinite, guess_precursive
from intrec.poly import Poly

T = cf.BUILTINS["chebyshev_T"]


def integral_terms(count):
    """a(n) = integral of T_n over [-1, 1], by the power rule."""
    out = []
    for n in range(count):
        acc = Fraction(0)
        for k, c in enumerate(cf.term(T, n).coeffs):
            acc += Fraction(c) * (1 - Fraction(-1) ** (k + 1)) / (k + 1)
        out.append(acc)
    return out


def windows_hold(rec, terms):
    r = len(rec.coeffs) - 1
    for n in range(rec.threshold, len(terms) - r):
        acc = Fraction(0)
        for i, c in enumerate(rec.coeffs):
            acc += Fraction(c.eval(n)) * terms[n + i]
        if acc:
            return False
    return True


def test_chebyshev_integral_guess():
    terms = integral_terms(30)
    assert terms[:9] == [
        Fraction(2), 0, Fraction(-2, 3), 0, Fraction(-2, 15), 0,
        Fraction(-2, 35), 0, Fraction(-2, 63),
    ]
    rec = guess_precursive(terms, 4, 4)
    assert rec is not None
    assert list(rec.coeffs) == [Poly("n", [1, -1]), Poly("n", []), Poly("n", [3, 1])]
    assert rec.threshold == 0
    assert windows_hold(rec, terms)
    # the stated cell is minimal in the (order, degree) lexicographic search
    assert guess_precursive(terms, 1, 4) is None
    assert guess_precursive(terms, 2, 0) is None


def test_fibonacci_terms():
    terms = [Fraction(v) for v in (0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89)]
    rec = guess_precursive(terms, 4, 4)
    assert list(rec.coeffs) == [Poly("n", [-1]), Poly("n", [-1]), Poly("n", [1])]
    assert windows_hold(rec, terms)


def test_factorial_has_no_low_order_fit():
    terms = [Fraction(math.factorial(n)) for n in range(10)]
    assert guess_precursive(terms, 1, 0) is None


def test_constant_coefficient_examples():
    assert guess_cfinite([Fraction(1)] * 7, 3, margin=4).coeffs == (
        Poly("n", [-1]), Poly("n", [1]),
    )
    doubling = [Fraction(2) ** n for n in range(7)]
    assert guess_cfinite(doubling, 3, margin=4).coeffs == (
        Poly("n", [-2]), Poly("n", [1]),
    )
    # seven terms cannot clear the default eight-term held-out margin
    assert guess_cfinite([Fraction(1)] * 7, 3) is None


def test_precursive_sequence_is_not_cfinite():
    assert guess_cfinite(integral_terms(20), 3) is None


def test_held_out_corruption_blocks_candidates():
    terms = [Fraction(2) ** n for n in range(20)]
    terms[-1] += 1
    assert guess_cfinite(terms, 2) is None


def test_too_few_terms_is_absence_not_error():
    assert guess_precursive([Fraction(1), Fraction(2), Fraction(3)], 2, 2) is None
