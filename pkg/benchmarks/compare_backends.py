#!/usr/bin/env python3
"""Time the pure-Python coefficient kernels against the compiled extension.

Thin wrapper over `intrec bench`; accepts the same flags (--seed, --repeat).
"""

import sys

from intrec.cli import main

if __name__ == "__main__":
    sys.exit(main(["bench"] + sys.argv[1:]))
