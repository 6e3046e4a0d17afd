"""Backend selection for the 3-edge-colouring search.

The compiled extension ``_ckernel`` is used when it was built; otherwise the
pure-Python ``_pykernel`` twin is used. Set ``DELTAMIN_PURE_PYTHON=1`` to force
the fallback. Both backends run the same search and return identical results.
"""

from __future__ import annotations

import os

from . import _pykernel

BACKEND = "python"
_impl = _pykernel.three_edge_colour

if os.environ.get("DELTAMIN_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernel
    except ImportError:  # extension not built
        pass
    else:
        _impl = _ckernel.three_edge_colour
        BACKEND = "cython"

FOUND = _pykernel.FOUND
NONE = _pykernel.NONE
OVER_BUDGET = _pykernel.OVER_BUDGET

BACKENDS = {"python": _pykernel.three_edge_colour}
try:
    from . import _ckernel as _ck

    BACKENDS["cython"] = _ck.three_edge_colour
except ImportError:
    pass


def three_edge_colour(n: int, us: list[int], vs: list[int], budget: int = 0) -> tuple[int, list[int] | None]:
    return _impl(n, us, vs, budget)
