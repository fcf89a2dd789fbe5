"""Hot-loop kernels with two interchangeable backends.

The compiled Cython extension (``_bitkern``) is preferred; the pure-Python
module (``_pure``) is the fallback and the reference for cross-checking.
Set ``HEXMATCH_PURE=1`` to force the pure backend.

Both backends expose the same five functions:

    bitrev(value, width)        -- reverse the low `width` bits of `value`
    bitrev_table(width)         -- array of bitrev(h) for all h < 2**width
    census(width)               -- (#palindromes, #anti-symmetric) elements
    noconflict_counts(width)    -- trichotomy case counts + violation count
    matching_cost(partner, w)   -- sum of d_H(h, partner[h]) over all h

Kernels are deliberately dumb: no argument validation (callers validate),
ints in, ints out.
"""

import os

if os.environ.get("HEXMATCH_PURE") == "1":
    from hexmatch._kernels import _pure as _impl

    BACKEND = "pure"
else:
    try:
        from hexmatch._kernels import _bitkern as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from hexmatch._kernels import _pure as _impl

        BACKEND = "pure"

bitrev = _impl.bitrev
bitrev_table = _impl.bitrev_table
census = _impl.census
noconflict_counts = _impl.noconflict_counts
matching_cost = _impl.matching_cost

__all__ = [
    "BACKEND",
    "bitrev",
    "bitrev_table",
    "census",
    "noconflict_counts",
    "matching_cost",
]
