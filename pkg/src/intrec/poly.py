"""Dense exact polynomials over the rationals, in a tagged variable.

A `Poly` is a dense, lowest-degree-first coefficient list tagged with its
variable ("x", "t" or "n").  Coefficients are ints, `Fraction`s, or -- for
bivariate polynomials in Q[x][t] -- inner `Poly("x")` values.  Canonical form:
no trailing zeros, integral rationals demoted to int, constant inner
polynomials demoted to plain numbers.  Values are never mutated after
construction, so they can be shared freely.

Polynomial gcds run on the subresultant PRS: integer-cleared for univariate
input (the hot path, see `_kernels`), generic over Q[x] for bivariate input.
No factorization is used anywhere.
"""

from fractions import Fraction
from math import gcd as _igcd, lcm as _ilcm

from . import _kernels as K

NUM_TYPES = (int, Fraction)


def as_num(v):
    """Canonical scalar: Fractions with denominator 1 become ints."""
    if type(v) is int:
        return v
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else v
    if isinstance(v, int):
        return int(v)
    raise TypeError("not a rational scalar: %r" % (v,))


def num_div(a, b):
    if not b:
        raise ZeroDivisionError("rational division by zero")
    return as_num(Fraction(a) / Fraction(b))


def fmt_num(v):
    """Exact decimal-free rendering: "a" or "a/b"."""
    return str(v)


def num_from_str(s):
    return as_num(Fraction(s))


def _canon_coeff(c):
    if isinstance(c, Poly):
        if c.degree() <= 0:
            return c.constant()
        return c
    return as_num(c)


def _xt_promote(a, b):
    """Lift the x-side of a nonconstant x/t pair into Q[x][t]; None if n/a."""
    if not (isinstance(a, Poly) and isinstance(b, Poly)):
        return None
    if a.var == b.var or {a.var, b.var} != {"x", "t"}:
        return None
    # a t-constant wrapper around an x-polynomial unwraps to the x side
    if a.var == "t" and a.is_constant() and isinstance(a.constant(), Poly):
        return a.constant(), b
    if b.var == "t" and b.is_constant() and isinstance(b.constant(), Poly):
        return a, b.constant()
    if a.is_constant() or b.is_constant():
        return None
    if a.var == "x":
        return Poly("t", [a]), b
    return a, Poly("t", [b])


class Poly:
    """Immutable dense polynomial; see module docstring for conventions."""

    __slots__ = ("var", "coeffs")

    def __init__(self, var, coeffs):
        if var not in ("x", "t", "n"):
            raise ValueError("unsupported variable %r" % var)
        cs = [_canon_coeff(c) for c in coeffs]
        object.__setattr__(self, "var", var)
        object.__setattr__(self, "coeffs", K.strip(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def const(cls, var, value):
        return cls(var, [value])

    @classmethod
    def variable(cls, var):
        return cls(var, [0, 1])

    @classmethod
    def monomial(cls, var, k, c=1):
        return cls(var, [0] * k + [c])

    # -- inspection ---------------------------------------------------------

    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_constant(self):
        return len(self.coeffs) <= 1

    def constant(self):
        """Value of a constant polynomial (0 for the zero polynomial)."""
        if len(self.coeffs) > 1:
            raise ValueError("polynomial is not constant")
        return self.coeffs[0] if self.coeffs else 0

    def coeff(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def is_bivariate(self):
        return any(isinstance(c, Poly) for c in self.coeffs)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.var == self.var or other.is_constant() or self.is_constant():
                return other.coeffs
            raise ValueError("variable mismatch: %s vs %s" % (self.var, other.var))
        if isinstance(other, NUM_TYPES):
            return [as_num(other)] if other else []
        return None

    def _rewrap(self, other, cs):
        var = self.var
        if isinstance(other, Poly) and self.is_constant() and not other.is_constant():
            var = other.var
        return Poly(var, cs)

    def __add__(self, other):
        pair = _xt_promote(self, other)
        if pair is not None:
            return pair[0] + pair[1]
        oc = self._coerce(other)
        if oc is None:
            return NotImplemented
        return self._rewrap(other, K.padd(self.coeffs, oc))

    __radd__ = __add__

    def __sub__(self, other):
        pair = _xt_promote(self, other)
        if pair is not None:
            return pair[0] - pair[1]
        oc = self._coerce(other)
        if oc is None:
            return NotImplemented
        return self._rewrap(other, K.psub(self.coeffs, oc))

    def __rsub__(self, other):
        pair = _xt_promote(other, self)
        if pair is not None:
            return pair[0] - pair[1]
        oc = self._coerce(other)
        if oc is None:
            return NotImplemented
        return self._rewrap(other, K.psub(oc, self.coeffs))

    def __neg__(self):
        return Poly(self.var, K.pneg(self.coeffs))

    def __mul__(self, other):
        pair = _xt_promote(self, other)
        if pair is not None:
            return pair[0] * pair[1]
        oc = self._coerce(other)
        if oc is None:
            return NotImplemented
        if isinstance(other, NUM_TYPES) or (isinstance(other, Poly) and other.is_constant()):
            c = oc[0] if oc else 0
            return Poly(self.var, K.pscale(self.coeffs, c))
        return self._rewrap(other, K.pmul(self.coeffs, oc))

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Poly.const(self.var, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            if self.var != other.var:
                if self.is_constant():
                    return self.constant() == other
                if other.is_constant():
                    return other.constant() == self
                return False
            return self.coeffs == other.coeffs
        if isinstance(other, NUM_TYPES):
            return self.is_constant() and self.constant() == other
        return NotImplemented

    __hash__ = None

    # -- calculus & evaluation ----------------------------------------------

    def eval(self, v):
        """Substitute the polynomial's own variable."""
        return _canon_coeff(K.peval(self.coeffs, v))

    def deriv(self):
        cs = [i * self.coeffs[i] for i in range(1, len(self.coeffs))]
        return Poly(self.var, cs)

    def map_coeffs(self, f):
        return Poly(self.var, [f(c) for c in self.coeffs])

    def monic(self):
        if not self.coeffs:
            return self
        lead = self.lc()
        if isinstance(lead, Poly):
            raise ValueError("monic() requires rational coefficients")
        if lead == 1:
            return self
        inv = Fraction(1, 1) / Fraction(lead)
        return Poly(self.var, K.pscale(self.coeffs, inv))

    def __repr__(self):
        return "Poly(%r, %r)" % (self.var, self.coeffs)


# -- scalar content ----------------------------------------------------------


def _rational_leaves(p, out):
    for c in p.coeffs:
        if isinstance(c, Poly):
            _rational_leaves(c, out)
        else:
            out.append(c)


def rational_content(p):
    """Positive rational c with p/c integer-primitive (0 for the zero poly)."""
    leaves = []
    _rational_leaves(p, leaves)
    gnum = 0
    lden = 1
    for v in leaves:
        f = Fraction(v)
        gnum = _igcd(gnum, abs(f.numerator))
        lden = _ilcm(lden, f.denominator)
    if gnum == 0:
        return Fraction(0)
    return Fraction(gnum, lden)


def leading_sign(p):
    """Sign of the leading rational coefficient (of the leading inner poly)."""
    c = p.lc()
    while isinstance(c, Poly):
        c = c.lc()
    return -1 if c < 0 else (1 if c > 0 else 0)


def scale_poly(p, c):
    if isinstance(c, Poly):
        raise TypeError("scalar expected")
    return p.map_coeffs(lambda v: v * c if not isinstance(v, Poly) else v.map_coeffs(lambda w: w * c))


def canonical_unit(p):
    """p divided by its signed rational content: integer-primitive, positive lead."""
    if p.is_zero():
        return p
    c = rational_content(p) * leading_sign(p)
    return scale_poly(p, Fraction(1, 1) / c)


def int_coeffs(p):
    """(int list, denominator) with denominator * p having integer coefficients."""
    L = 1
    for c in p.coeffs:
        if isinstance(c, Poly):
            raise ValueError("univariate polynomial expected")
        L = _ilcm(L, Fraction(c).denominator)
    return [int(c * L) for c in p.coeffs], L


# -- division and gcd --------------------------------------------------------


def coeff_div(a, b):
    """Exact division in the coefficient domain (Q or Q[x])."""
    if isinstance(b, Poly):
        if isinstance(a, Poly):
            return exact_div(a, b)
        if not a:
            return 0
        raise ArithmeticError("inexact coefficient division")
    if isinstance(a, Poly):
        return a * num_div(1, b)
    return num_div(a, b)


def divmod_poly(a, b):
    """Quotient/remainder for univariate polynomials over Q."""
    if a.is_bivariate() or b.is_bivariate():
        raise ValueError("divmod_poly is univariate-only")
    q, r = K.pdivmod_q(a.coeffs, b.coeffs)
    return Poly(a.var, q), Poly(a.var, r)


def exact_div(a, b):
    """a / b when b divides a exactly (outer long division, exact inner steps)."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if a.is_zero():
        return Poly(a.var, [])
    if a.var != b.var and not b.is_constant():
        raise ValueError("variable mismatch in exact_div")
    if b.is_constant():
        c = b.constant()
        if isinstance(c, Poly):
            # t-constant divisor with a polynomial x-part
            if a.var == c.var:
                return exact_div(a, c)
            return a.map_coeffs(lambda v: coeff_div(v, c))
        return a * num_div(1, c)
    r = list(a.coeffs)
    db = b.degree()
    lb = b.lc()
    q = [0] * (len(r) - db)
    while len(r) > db:
        while r and not r[-1]:
            del r[-1]
        if len(r) <= db:
            break
        lead = coeff_div(r[-1], lb)
        s = len(r) - 1 - db
        q[s] = lead
        for i in range(db + 1):
            r[s + i] = r[s + i] - lead * b.coeffs[i]
        del r[-1]
    if K.strip(r):
        raise ArithmeticError("inexact polynomial division")
    return Poly(a.var, q)


def _int_rows(p):
    """Denominator-cleared bivariate coefficients as a t-list of int x-lists."""
    L = 1
    for c in p.coeffs:
        if isinstance(c, Poly):
            for v in c.coeffs:
                L = _ilcm(L, Fraction(v).denominator)
        elif c:
            L = _ilcm(L, Fraction(c).denominator)
    out = []
    for c in p.coeffs:
        if isinstance(c, Poly):
            out.append([int(v * L) for v in c.coeffs])
        else:
            out.append([int(c * L)] if c else [])
    return out


def _rows_content(rows):
    """Primitive gcd over Z[x] of the nonzero rows."""
    g = []
    for c in rows:
        if not c:
            continue
        g = K.gcd_int(g, c)
        if len(g) == 1:
            return [1]
    return g


def _rows_primitive(rows, cont):
    if cont == [1]:
        return rows
    return [K.exactdiv_int(c, cont) if c else [] for c in rows]


def _prem_rows(a, b):
    """Pseudo-remainder of t-lists with Z[x]-list coefficients.

    The deficient-degree compensation factor is skipped; callers take
    primitive parts immediately, so content-only factors never matter.
    """
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    while r and len(r) - 1 >= db:
        lead = r[-1]
        s = len(r) - 1 - db
        r = [K.pmul(c, lb) for c in r]
        for i in range(db + 1):
            r[s + i] = K.psub(r[s + i], K.pmul(lead, b[i]))
        del r[-1]
        while r and not r[-1]:
            del r[-1]
    return r


def _gcd_bivariate(a, b):
    """Primitive PRS over Z[x][t] after clearing all rational denominators."""
    ra, rb = _int_rows(a), _int_rows(b)
    ca, cb = _rows_content(ra), _rows_content(rb)
    ra, rb = _rows_primitive(ra, ca), _rows_primitive(rb, cb)
    cont = K.gcd_int(ca, cb)
    if len(ra) < len(rb):
        ra, rb = rb, ra
    while True:
        r = _prem_rows(ra, rb)
        if not r:
            break
        if len(r) == 1:
            rb = [[1]]
            break
        ra, rb = rb, _rows_primitive(r, _rows_content(r))
    if cont != [1]:
        rb = [K.pmul(c, cont) if c else [] for c in rb]
    res = Poly(a.var, [Poly("x", c) for c in rb])
    return canonical_unit(res)


def gcd(a, b):
    """Canonical gcd: monic for univariate over Q, unit-normalized for Q[x][t].

    gcd(a, 0) is the normalized form of a; gcd(0, 0) = 0.
    """
    if a.is_zero() and b.is_zero():
        return Poly(a.var, [])
    if a.is_zero():
        a, b = b, a
    if b.is_zero():
        return canonical_unit(a) if a.is_bivariate() else a.monic()
    if a.var != b.var:
        if a.is_constant() or b.is_constant():
            return Poly(a.var if not a.is_constant() else b.var, [1])
        raise ValueError("variable mismatch in gcd")
    if a.is_bivariate() or b.is_bivariate():
        return _gcd_bivariate(a, b)
    ia, _ = int_coeffs(a)
    ib, _ = int_coeffs(b)
    return Poly(a.var, K.gcd_int(ia, ib)).monic()


def lcm(a, b):
    if a.is_zero() or b.is_zero():
        return Poly(a.var, [])
    g = gcd(a, b)
    m = exact_div(a * b, g)
    return canonical_unit(m) if m.is_bivariate() else m.monic()


# -- bivariate helpers -------------------------------------------------------


def x_degree(p):
    """Max degree in the inner variable of a Q[x][t] polynomial."""
    if p.var == "x":
        return p.degree()
    d = -1
    for c in p.coeffs:
        cd = c.degree() if isinstance(c, Poly) else (0 if c else -1)
        if cd > d:
            d = cd
    return d


def x_coefficients(p):
    """Transpose Q[x][t] -> list of Q[t] polys, index = power of x."""
    if p.var == "x":
        return [Poly("t", [c]) for c in p.coeffs]
    d = x_degree(p)
    if d < 0:
        return []
    cols = []
    for k in range(d + 1):
        col = []
        for c in p.coeffs:
            if isinstance(c, Poly):
                col.append(c.coeff(k))
            else:
                col.append(c if k == 0 else 0)
        cols.append(Poly("t", col))
    return cols


def from_x_coefficients(cols, var="t"):
    """Inverse of `x_coefficients`."""
    depth = max((c.degree() for c in cols), default=-1)
    if depth < 0:
        return Poly(var, [])
    out = []
    for j in range(depth + 1):
        out.append(Poly("x", [c.coeff(j) for c in cols]))
    return Poly(var, out)


def subs_inner(p, v):
    """Substitute x in a Q[x][t] (or plain Q[x]) polynomial; result in Q[t]."""
    if p.var == "x":
        return Poly("t", [p.eval(v)])
    return p.map_coeffs(lambda c: c.eval(v) if isinstance(c, Poly) else c)


def deriv_inner(p):
    """d/dx of a Q[x][t] (or plain Q[x]) polynomial."""
    if p.var == "x":
        return p.deriv()
    return p.map_coeffs(lambda c: c.deriv() if isinstance(c, Poly) else 0)


def eval_bivariate(p, xv, tv):
    """Evaluate a Q[x][t] polynomial at rational (x, t)."""
    acc = 0
    for c in reversed(p.coeffs):
        cv = c.eval(xv) if isinstance(c, Poly) else c
        acc = acc * tv + cv
    return as_num(Fraction(acc))
