"""Pure and compiled coefficient kernels must be observationally identical."""

import random
from fractions import Fraction

import pytest

from intrec import _kernels as kernels
from intrec._kernels import pure

try:
    from intrec._kernels import fast
except ImportError:
    fast = None

API = ("strip", "padd", "psub", "pneg", "pscale", "pmul", "peval", "pdivmod_q",
       "content_int", "primitive_int", "exactdiv_int", "gcd_int")


def rand_ints(rng, span=99, maxlen=8):
    out = [rng.randint(-span, span) for _ in range(rng.randint(0, maxlen))]
    while out and not out[-1]:
        out.pop()
    return out


def rand_fracs(rng, span=9, maxlen=8):
    out = [Fraction(rng.randint(-span, span), rng.randint(1, span))
           for _ in range(rng.randint(0, maxlen))]
    while out and not out[-1]:
        out.pop()
    return out


def test_api_surface():
    assert kernels.BACKEND_NAME in ("pure", "compiled")
    for name in API:
        assert callable(getattr(pure, name))
        assert callable(getattr(kernels, name))
    if fast is not None:
        for name in API:
            assert callable(getattr(fast, name))
        assert fast.BACKEND_NAME == "compiled"
    assert pure.BACKEND_NAME == "pure"


@pytest.mark.skipif(fast is None, reason="compiled backend not built")
def test_backends_agree_on_random_inputs():
    rng = random.Random(777)
    for _ in range(600):
        a, b = rand_ints(rng), rand_ints(rng)
        assert pure.padd(a, b) == fast.padd(a, b)
        assert pure.psub(a, b) == fast.psub(a, b)
        assert pure.pneg(a) == fast.pneg(a)
        assert pure.pmul(a, b) == fast.pmul(a, b)
        assert pure.pscale(a, 7) == fast.pscale(a, 7)
        v = Fraction(rng.randint(-5, 5), rng.randint(1, 5))
        assert pure.peval(a, v) == fast.peval(a, v)
        assert pure.content_int(a) == fast.content_int(a)
        assert pure.primitive_int(a) == fast.primitive_int(a)
        assert pure.gcd_int(a, b) == fast.gcd_int(a, b)
        fa, fb = rand_fracs(rng), rand_fracs(rng)
        if fb:
            assert pure.pdivmod_q(fa, fb) == fast.pdivmod_q(fa, fb)
        if b:
            prod = pure.pmul(a, b)
            assert pure.exactdiv_int(prod, b) == fast.exactdiv_int(prod, b)


@pytest.mark.skipif(fast is None, reason="compiled backend not built")
def test_exactdiv_raises_identically():
    with pytest.raises(ArithmeticError):
        pure.exactdiv_int([1, 1, 1], [2])
    with pytest.raises(ArithmeticError):
        fast.exactdiv_int([1, 1, 1], [2])


@pytest.mark.skipif(fast is None, reason="compiled backend not built")
def test_backend_swap_gives_identical_telescoper():
    from intrec import cfinite as cf
    from intrec.genfun import generating_function
    from intrec.telescope import telescope, trivial_kernel

    current = fast if kernels.BACKEND_NAME == "compiled" else pure
    results = {}
    try:
        for label, impl in (("pure", pure), ("compiled", fast)):
            kernels.use(impl)
            gf = generating_function(cf.BUILTINS["chebyshev_T"])
            tel = telescope(gf, trivial_kernel(), 6)
            results[label] = (tel.order, tel.opcoeffs, tel.certificate)
    finally:
        kernels.use(current)
    assert results["pure"] == results["compiled"]
