"""GF(2) linear algebra with a compiled rank kernel and a pure-Python fallback.

The compiled kernel is used when the ``_gf2ext`` extension imports and the
environment variable ``DUALKNOT_PURE`` is unset.  Both backends return the
same ranks; ``tests/test_gf2.py`` checks that against each other.
"""

from __future__ import annotations

import os
from array import array

from . import _gf2_py
from ._gf2_py import echelon, nullspace, reduce

try:
    from . import _gf2ext
except ImportError:  # extension not built
    _gf2ext = None

BACKEND = "cython" if _gf2ext is not None and not os.environ.get("DUALKNOT_PURE") else "python"

# Packing costs O(rows * ncols / 64) regardless of sparsity.  Cone boundary
# matrices carry one or two entries per row and barely fill in, so the bitset
# loop wins there; the compiled loop pays off on denser input.
_PACK_THRESHOLD = 48
_DENSITY_THRESHOLD = 3.0


def pack(rows: list[int], ncols: int) -> tuple[array, int]:
    nwords = max(1, (ncols + 63) // 64)
    nbytes = 8 * nwords
    buf = array("Q")
    for row in rows:
        buf.frombytes(row.to_bytes(nbytes, "little"))
    return buf, nwords


def rank_python(rows: list[int], ncols: int) -> int:
    return _gf2_py.rank(rows, ncols)


def rank_cython(rows: list[int], ncols: int) -> int:
    if _gf2ext is None:
        raise RuntimeError("compiled GF(2) kernel is not available")
    if not rows:
        return 0
    buf, nwords = pack(rows, ncols)
    return _gf2ext.rank_packed(buf, len(rows), nwords)


def rank(rows: list[int], ncols: int) -> int:
    """Rank over GF(2) of the matrix whose rows are the given bitsets."""
    if BACKEND == "cython" and len(rows) >= _PACK_THRESHOLD:
        if sum(r.bit_count() for r in rows) >= _DENSITY_THRESHOLD * len(rows):
            return rank_cython(rows, ncols)
    return _gf2_py.rank(rows, ncols)


__all__ = ["BACKEND", "rank", "rank_python", "rank_cython", "nullspace", "echelon", "reduce", "pack"]
