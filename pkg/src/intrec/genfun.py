"""Rational generating functions of C-finite polynomial sequences.

For a sequence with recurrence P_n = sum p_i P_{n-i} the series
R(x,t) = sum P_n(x) t^n collapses to N/D with D = 1 - sum p_i t^i and a
numerator read off the initial terms.  Expansion back out runs the
denominator-driven recursion, so the round trip is exact and cheap.
"""

from dataclasses import dataclass

from .errors import NotExpandable
from . import poly as P
from .poly import Poly
from .ratfunc import RatFunc


@dataclass(frozen=True)
class BivariateGF:
    """A rational function of (x, t) intended as a Taylor series at t = 0."""

    value: RatFunc

    def expandable(self):
        d0 = self.value.den.coeff(0)
        return bool(d0) if not isinstance(d0, Poly) else not d0.is_zero()


def generating_function(seq):
    """R(x,t) = sum_n P_n(x) t^n as a normalized rational function."""
    L = seq.order
    den = Poly("t", [1] + [-p for p in seq.coeffs])
    num_coeffs = []
    for n in range(L):
        c = seq.init[n]
        for i in range(1, n + 1):
            c = c - seq.coeffs[i - 1] * seq.init[n - i]
        num_coeffs.append(c)
    num = Poly("t", num_coeffs)
    return BivariateGF(RatFunc(num, den))


def _to_xpoly(v):
    return v if isinstance(v, Poly) else Poly.const("x", v)


def taylor_coeffs(gf, count):
    """First `count` series coefficients at t = 0, as polynomials in x."""
    num, den = gf.value.num, gf.value.den
    d0 = den.coeff(0)
    if not (bool(d0) if not isinstance(d0, Poly) else not d0.is_zero()):
        raise NotExpandable("denominator vanishes at t = 0")
    out = []
    for n in range(count):
        acc = _to_xpoly(num.coeff(n))
        for k in range(1, min(n, den.degree()) + 1):
            acc = acc - _to_xpoly(den.coeff(k)) * out[n - k]
        if isinstance(d0, Poly) and not d0.is_constant():
            try:
                acc = P.exact_div(acc, d0)
            except ArithmeticError:
                raise NotExpandable("series coefficients are not polynomial in x")
        else:
            d = d0.constant() if isinstance(d0, Poly) else d0
            acc = acc * P.num_div(1, d)
        out.append(acc)
    return out
