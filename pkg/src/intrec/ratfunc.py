"""Rational functions as normalized Poly pairs.

Invariant maintained by every constructor and operation: gcd(num, den) is
trivial, and the denominator is integer-primitive with a positive leading
coefficient (leading inner coefficient for bivariate input).  Two equal
rational functions are therefore structurally identical, so `==` is cheap
and printing is deterministic.
"""

from fractions import Fraction

from .errors import ZeroDenominator
from . import poly as P
from .poly import Poly


def _as_poly(v, var):
    if isinstance(v, Poly):
        return v
    if isinstance(v, P.NUM_TYPES):
        return Poly.const(var, v)
    raise TypeError("cannot build a rational function from %r" % (v,))


class RatFunc:
    """Immutable normalized quotient of two polynomials in the same variable."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1, var=None):
        if var is None:
            var = num.var if isinstance(num, Poly) else (den.var if isinstance(den, Poly) else "x")
        num = _as_poly(num, var)
        den = _as_poly(den, var)
        pair = P._xt_promote(num, den)
        if pair is not None:
            num, den = pair
        if num.var == "t" and den.var == "t" and num.is_constant() and den.is_constant():
            nc, dc = num.constant(), den.constant()
            # t-free bivariate pair: drop the wrapper so equality stays structural
            if isinstance(nc, Poly) or isinstance(dc, Poly):
                num, den = _as_poly(nc, "x"), _as_poly(dc, "x")
        if den.is_zero():
            raise ZeroDenominator("zero denominator")
        if num.is_zero():
            den = Poly.const(den.var, 1)
        else:
            g = P.gcd(num, den)
            if not (g.is_constant() and g.constant() == 1):
                num = P.exact_div(num, g)
                den = P.exact_div(den, g)
        u = P.rational_content(den) * P.leading_sign(den)
        if u != 1:
            inv = Fraction(1, 1) / u
            num = P.scale_poly(num, inv)
            den = P.scale_poly(den, inv)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @property
    def var(self):
        return self.num.var if not self.num.is_constant() else self.den.var

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return self.den.is_constant()

    def constant(self):
        if not (self.num.is_constant() and self.den.is_constant()):
            raise ValueError("rational function is not constant")
        return P.num_div(self.num.constant(), self.den.constant())

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (Poly,) + P.NUM_TYPES):
            return RatFunc(other, 1, var=self.var)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.den - o.num * self.den, self.den * o.den)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            raise ZeroDenominator("division by the zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k):
        if not isinstance(k, int):
            raise ValueError("integer exponent expected")
        if k < 0:
            if self.num.is_zero():
                raise ZeroDenominator("negative power of zero")
            return RatFunc(self.den**-k, self.num**-k)
        return RatFunc(self.num**k, self.den**k)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    __hash__ = None

    def __repr__(self):
        return "RatFunc(%r, %r)" % (self.num, self.den)

    # -- calculus & evaluation ----------------------------------------------

    def deriv(self):
        """Derivative with respect to the outer variable."""
        return RatFunc(
            self.num.deriv() * self.den - self.num * self.den.deriv(),
            self.den * self.den,
        )

    def deriv_inner(self):
        """Derivative with respect to x for functions in Q(x)[t] quotients."""
        return RatFunc(
            P.deriv_inner(self.num) * self.den - self.num * P.deriv_inner(self.den),
            self.den * self.den,
        )

    def eval(self, v):
        """Substitute the outer variable; raises ZeroDenominator at a pole."""
        d = self.den.eval(v)
        if isinstance(d, Poly) or d:
            n = self.num.eval(v)
            if isinstance(d, Poly) or isinstance(n, Poly):
                raise ValueError("evaluation left a polynomial; use subs_inner")
            return P.num_div(n, d)
        raise ZeroDenominator("evaluation at a pole")

    def subs_inner(self, v):
        """Substitute x in a bivariate quotient; result stays rational in t."""
        d = P.subs_inner(self.den, v)
        if d.is_zero():
            raise ZeroDenominator("inner substitution vanishes on the denominator")
        return RatFunc(P.subs_inner(self.num, v), d)


def as_ratfunc(v, var):
    if isinstance(v, RatFunc):
        return v
    return RatFunc(v, 1, var=var)
