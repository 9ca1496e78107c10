"""Kernel selection.

The compiled ``_ckernels`` extension is used when it was built; otherwise the
pure-Python module is used.  Setting ``INTUITIONIST_PURE=1`` forces the
fallback.
"""

import os

from . import _pykernels as pure

BACKEND = "python"
_impl = pure

if os.environ.get("INTUITIONIST_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = pure

least_exponent = _impl.least_exponent
margin_search = _impl.margin_search
twisted_product = _impl.twisted_product
lex_first_difference = _impl.lex_first_difference

__all__ = [
    "BACKEND",
    "least_exponent",
    "margin_search",
    "twisted_product",
    "lex_first_difference",
    "pure",
]
