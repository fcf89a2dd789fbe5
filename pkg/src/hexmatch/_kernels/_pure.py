"""Pure-Python kernel backend.

Bit reversal goes through a 256-entry byte table; popcounts use
``int.bit_count``.  Loops are plain Python, so the O(2**width) scans are
roughly two orders of magnitude slower than the compiled backend (see
benchmarks/bench_kernels.py).
"""

from array import array

# _REV8[b] = the 8 bits of b in reverse order
_REV8 = [0] * 256
for _b in range(256):
    _r = 0
    for _i in range(8):
        if _b >> _i & 1:
            _r |= 1 << (7 - _i)
    _REV8[_b] = _r


def bitrev(value: int, width: int) -> int:
    """Reverse the low `width` bits of `value` (width <= 30)."""
    r8 = _REV8
    full = (
        (r8[value & 0xFF] << 24)
        | (r8[(value >> 8) & 0xFF] << 16)
        | (r8[(value >> 16) & 0xFF] << 8)
        | r8[(value >> 24) & 0xFF]
    )
    return full >> (32 - width)


def bitrev_table(width: int) -> array:
    """bitrev(h, width) for every h in 0..2**width-1, as array('I')."""
    r8 = _REV8
    shift = 32 - width
    return array(
        "I",
        (
            (
                (r8[h & 0xFF] << 24)
                | (r8[(h >> 8) & 0xFF] << 16)
                | (r8[(h >> 16) & 0xFF] << 8)
                | r8[h >> 24]
            )
            >> shift
            for h in range(1 << width)
        ),
    )


def census(width: int) -> tuple[int, int]:
    """Stream all 2**width values; count palindromes and anti-symmetric ones."""
    r8 = _REV8
    shift = 32 - width
    mask = (1 << width) - 1
    pal = 0
    anti = 0
    for h in range(1 << width):
        r = (
            (r8[h & 0xFF] << 24)
            | (r8[(h >> 8) & 0xFF] << 16)
            | (r8[(h >> 16) & 0xFF] << 8)
            | r8[h >> 24]
        ) >> shift
        if r == h:
            pal += 1
        if r == h ^ mask:
            anti += 1
    return pal, anti


def noconflict_counts(width: int) -> tuple[int, int, int, int]:
    """Count reversal-vs-complement trichotomy cases over all values.

    Returns (strictly_cheaper, coincide, palindrome, violations) where a
    violation is any value for which not exactly one case holds.  The
    strictly-cheaper case requires d_H(h, rev(h)) < width, so a value with
    rev(h) distinct from both h and comp(h) but distance == width would be
    counted as a violation.
    """
    r8 = _REV8
    shift = 32 - width
    mask = (1 << width) - 1
    cheaper = coincide = palindrome = violations = 0
    for h in range(1 << width):
        r = (
            (r8[h & 0xFF] << 24)
            | (r8[(h >> 8) & 0xFF] << 16)
            | (r8[(h >> 16) & 0xFF] << 8)
            | r8[h >> 24]
        ) >> shift
        c = h ^ mask
        hits = 0
        if r == h:
            palindrome += 1
            hits += 1
        if r == c:
            coincide += 1
            hits += 1
        if r != h and r != c and (h ^ r).bit_count() < width:
            cheaper += 1
            hits += 1
        if hits != 1:
            violations += 1
    return cheaper, coincide, palindrome, violations


def matching_cost(partner, width: int) -> int:
    """Sum of Hamming distances d_H(h, partner[h]) over all h.

    Each pair is hit twice, so a valid matching's total cost is half this.
    """
    return sum((h ^ p).bit_count() for h, p in enumerate(partner))
