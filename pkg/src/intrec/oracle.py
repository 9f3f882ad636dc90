"""Ground-truth values of a(n) = ∫ P_n(x) K(x) dx, independent of telescoping.

Polynomial kernels integrate exactly by the power rule.  Everything else goes
through adaptive tanh-sinh quadrature at a requested decimal precision; the
double-exponential scheme absorbs the endpoint singularity of the Chebyshev
weight without special-casing.  Only two non-rational kernel shapes are
recognized numerically (the Chebyshev weight and single-power |x-a|^c);
anything else needs a caller-supplied evaluator.
"""

from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp

from .cfinite import term
from .errors import ExactOracleUnavailable, QuadratureFailed, UnsupportedKernel
from . import poly as P
from .poly import Poly
from .ratfunc import RatFunc

_MAXDEGREE = 12


@dataclass(frozen=True)
class IntegralProblem:
    seq: object
    kernel: object
    alpha: object
    beta: object

    def __post_init__(self):
        if not Fraction(self.alpha) < Fraction(self.beta):
            raise ValueError("interval endpoints must satisfy alpha < beta")


def _antiderivative_eval(p, point):
    acc = Fraction(0)
    xp = Fraction(point)
    power = xp
    for k, c in enumerate(p.coeffs):
        acc += Fraction(c, k + 1) * power
        power *= xp
    return acc


def exact_term(prob, n):
    """Power-rule integration; only defined for polynomial kernels."""
    kern = prob.kernel
    if not kern.logderiv.is_zero() or not kern.prefactor.is_polynomial():
        raise ExactOracleUnavailable("kernel is not a polynomial")
    pre = kern.prefactor.num * P.num_div(1, kern.prefactor.den.constant())
    integrand = term(prob.seq, n) * pre
    if isinstance(integrand, P.NUM_TYPES):
        integrand = Poly.const("x", integrand)
    hi = _antiderivative_eval(integrand, prob.beta)
    lo = _antiderivative_eval(integrand, prob.alpha)
    return P.as_num(hi - lo)


def _poly_mpf(p):
    cs = [mp.mpf(Fraction(c).numerator) / Fraction(c).denominator for c in p.coeffs]

    def f(x):
        acc = mp.mpf(0)
        for c in reversed(cs):
            acc = acc * x + c
        return acc

    return f


def recognized_form(kern):
    """Closed-form tag implied by the kernel's log-derivative, or None.

    "rational" means no exponential part at all; "chebyshev_weight" is
    1/sqrt(1-x^2); "linear_power" is |x-a|^c.  None means only a
    caller-supplied evaluator can produce numeric values.
    """
    rho = kern.logderiv
    if rho.is_zero():
        return "rational"
    x_ = Poly.variable("x")
    if rho == RatFunc(x_, 1 - x_ * x_):
        return "chebyshev_weight"
    if rho.den.degree() == 1 and rho.num.is_constant():
        return "linear_power"
    return None


def _kernel_evaluator(kern, evaluator):
    if evaluator is not None:
        return evaluator
    pn, pd = _poly_mpf(kern.prefactor.num), _poly_mpf(kern.prefactor.den)
    form = recognized_form(kern)
    if form == "rational":
        return lambda x: pn(x) / pd(x)
    if form == "chebyshev_weight":
        return lambda x: pn(x) / (pd(x) * mp.sqrt(1 - x * x))
    if form == "linear_power":
        rho = kern.logderiv
        q0, q1 = Fraction(rho.den.coeff(0)), Fraction(rho.den.coeff(1))
        a = -q0 / q1
        c = Fraction(rho.num.constant()) / q1
        am = mp.mpf(a.numerator) / a.denominator
        cm = mp.mpf(c.numerator) / c.denominator
        return lambda x: pn(x) / pd(x) * abs(x - am) ** cm
    raise UnsupportedKernel(
        "no closed form known for this kernel log-derivative; supply an evaluator"
    )


def numeric_term(prob, n, precision, evaluator=None):
    """Tanh-sinh quadrature of P_n·K to `precision` decimal digits."""
    kern = prob.kernel
    with mp.workdps(precision + 10):
        kf = _kernel_evaluator(kern, evaluator)
        pf = _poly_mpf(term(prob.seq, n))
        f = lambda x: pf(x) * kf(x)
        a = mp.mpf(Fraction(prob.alpha).numerator) / Fraction(prob.alpha).denominator
        b = mp.mpf(Fraction(prob.beta).numerator) / Fraction(prob.beta).denominator
        val, err = mp.quad(
            f, [a, b], method="tanh-sinh", maxdegree=_MAXDEGREE, error=True
        )
        if not mp.isfinite(val) or err > mp.mpf(10) ** (-precision):
            raise QuadratureFailed(
                "quadrature did not reach 10^-%d (error estimate %s)" % (precision, err)
            )
        return +val


def numeric_unroll(coeffs, seeds, count, dps=40):
    """Float unrolling of a recurrence from numeric seed terms.

    Used to check recurrences against numeric oracle values when the exact
    initial terms are irrational (singular-weight integrals).
    """
    def num(v):
        f = Fraction(v)
        return mp.mpf(f.numerator) / f.denominator

    with mp.workdps(dps):
        out = [mp.mpf(s) for s in seeds]
        r = len(coeffs) - 1
        while len(out) < count:
            nn = len(out) - r
            cr = num(coeffs[-1].eval(nn))
            if cr == 0:
                raise QuadratureFailed("numeric unroll hit a vanishing leading coefficient")
            acc = mp.mpf(0)
            for i in range(r):
                acc += num(coeffs[i].eval(nn)) * out[nn + i]
            out.append(-acc / cr)
        return [+v for v in out[:count]]
