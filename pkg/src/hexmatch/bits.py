"""Bit vectors on the Boolean hypercube and their basic involutions.

Conventions:
- A width-n vector is an integer 0 <= value < 2**n.
- Bit i is the coefficient of 2**i, so index 0 is the least significant
  bit (the bottom line when a width-6 vector is read as a hexagram).
- ``reverse`` maps bit i to bit (n-1-i); ``complement`` flips every bit.

All values are immutable; every operation returns a new BitVector.
"""

from __future__ import annotations

from dataclasses import dataclass

from hexmatch import _kernels

MAX_WIDTH = 30


@dataclass(frozen=True, slots=True)
class BitVector:
    """An n-bit word: a vertex of the hypercube {0,1}^n."""

    value: int
    width: int

    def __post_init__(self) -> None:
        if not 1 <= self.width <= MAX_WIDTH:
            raise ValueError(
                f"width {self.width} out of range: need 1 <= width <= {MAX_WIDTH}"
            )
        if not 0 <= self.value < (1 << self.width):
            raise ValueError(
                f"value {self.value} out of range for width {self.width}: "
                f"need 0 <= value < {1 << self.width}"
            )

    def bit(self, i: int) -> int:
        """Bit i (0 = least significant), or raise on a bad index."""
        if not 0 <= i < self.width:
            raise IndexError(f"bit index {i} out of range for width {self.width}")
        return (self.value >> i) & 1

    def __str__(self) -> str:
        # conventional binary notation: bit (width-1) leftmost
        return format(self.value, f"0{self.width}b")


def make(value: int, width: int) -> BitVector:
    """Construct a BitVector, validating both arguments."""
    return BitVector(value, width)


def complement(h: BitVector) -> BitVector:
    """Flip every bit."""
    return BitVector(h.value ^ ((1 << h.width) - 1), h.width)


def reverse(h: BitVector) -> BitVector:
    """Reverse bit order: bit i of the result is bit (width-1-i) of h."""
    return BitVector(_kernels.bitrev(h.value, h.width), h.width)


def comp_rev(h: BitVector) -> BitVector:
    """Complement composed with reversal (the two commute)."""
    return BitVector(
        _kernels.bitrev(h.value, h.width) ^ ((1 << h.width) - 1), h.width
    )


def hamming(h1: BitVector, h2: BitVector) -> int:
    """Number of bit positions where h1 and h2 differ."""
    if h1.width != h2.width:
        raise ValueError(f"width mismatch: {h1.width} != {h2.width}")
    return (h1.value ^ h2.value).bit_count()


def is_palindrome(h: BitVector) -> bool:
    """True iff h reads the same in both bit orders (reverse(h) == h)."""
    return _kernels.bitrev(h.value, h.width) == h.value


def is_antisymmetric(h: BitVector) -> bool:
    """True iff reverse(h) == complement(h).

    Equivalently, bit i always differs from bit (width-1-i); impossible at
    odd widths, where the middle bit would have to differ from itself.
    """
    return _kernels.bitrev(h.value, h.width) == h.value ^ ((1 << h.width) - 1)
