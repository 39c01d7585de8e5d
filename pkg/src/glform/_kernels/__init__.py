"""Exact integer-matrix kernels with an optional compiled backend.

``det_exact`` and ``signature_triple`` dispatch to the compiled extension
when it imported successfully and the input fits in machine words; any
capacity signal (overflow, unsupported pivot structure) falls back to the
arbitrary-precision reference implementation per call.
"""

from __future__ import annotations

from . import _pure

try:  # pragma: no cover - exercised when the extension is built
    from . import _fast
    HAVE_FAST = True
except ImportError:  # pragma: no cover
    _fast = None
    HAVE_FAST = False

BACKEND = "fast" if HAVE_FAST else "pure"

smith_invariant_factors = _pure.smith_invariant_factors


def det_exact(rows) -> int:
    if HAVE_FAST:
        try:
            return _fast.det_exact(rows)
        except (OverflowError, NotImplementedError):
            pass
    return _pure.det_exact(rows)


def signature_triple(rows) -> tuple[int, int, int]:
    if HAVE_FAST:
        try:
            return _fast.signature_triple(rows)
        except (OverflowError, NotImplementedError):
            pass
    return _pure.signature_triple(rows)
