"""Kernel backend selection.

Imports the compiled Cython kernels when available, falling back to the
pure-Python twins.  Override with INTREC_BACKEND=pure|compiled|auto (auto is
the default); `compiled` raises if the extension is missing so CI can assert
it was actually built.
"""

import os

_choice = os.environ.get("INTREC_BACKEND", "auto")
if _choice not in ("auto", "pure", "compiled"):
    raise RuntimeError("INTREC_BACKEND must be auto, pure or compiled, got %r" % _choice)

if _choice == "pure":
    from . import pure as impl
else:
    try:
        from . import fast as impl  # type: ignore[attr-defined]
    except ImportError:
        if _choice == "compiled":
            raise
        from . import pure as impl

_API = (
    "strip",
    "padd",
    "psub",
    "pneg",
    "pscale",
    "pmul",
    "peval",
    "pdivmod_q",
    "content_int",
    "primitive_int",
    "exactdiv_int",
    "gcd_int",
)


def use(module):
    """Re-point every kernel at `module`'s implementations (benchmarks)."""
    g = globals()
    for name in _API:
        g[name] = getattr(module, name)
    g["BACKEND_NAME"] = module.BACKEND_NAME


use(impl)
