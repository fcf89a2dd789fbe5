# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel backend: tight C loops over the value range.

Same API as hexmatch._kernels._pure; see that module for the contracts.
"""

import array

from cpython cimport array


cdef extern from *:
    int __builtin_popcount(unsigned int) nogil


cdef inline unsigned int _brev32(unsigned int v) nogil:
    # classic 32-bit bit reversal by halving swaps
    v = ((v >> 1) & 0x55555555u) | ((v & 0x55555555u) << 1)
    v = ((v >> 2) & 0x33333333u) | ((v & 0x33333333u) << 2)
    v = ((v >> 4) & 0x0F0F0F0Fu) | ((v & 0x0F0F0F0Fu) << 4)
    v = ((v >> 8) & 0x00FF00FFu) | ((v & 0x00FF00FFu) << 8)
    return (v >> 16) | (v << 16)


def bitrev(value, int width):
    """Reverse the low `width` bits of `value` (width <= 30)."""
    cdef unsigned int v = value
    return _brev32(v) >> (32 - width)


def bitrev_table(int width):
    """bitrev(h, width) for every h in 0..2**width-1, as array('I')."""
    cdef unsigned long long n = 1ULL << width
    cdef int shift = 32 - width
    cdef array.array out = array.array("I", bytes(4 * n))
    cdef unsigned int[::1] view = out
    cdef unsigned long long h
    with nogil:
        for h in range(n):
            view[h] = _brev32(<unsigned int> h) >> shift
    return out


def census(int width):
    """Stream all 2**width values; count palindromes and anti-symmetric ones."""
    cdef unsigned long long n = 1ULL << width
    cdef int shift = 32 - width
    cdef unsigned int mask = <unsigned int> (n - 1)
    cdef unsigned long long pal = 0, anti = 0
    cdef unsigned long long h
    cdef unsigned int r
    with nogil:
        for h in range(n):
            r = _brev32(<unsigned int> h) >> shift
            if r == <unsigned int> h:
                pal += 1
            if r == (<unsigned int> h ^ mask):
                anti += 1
    return pal, anti


def noconflict_counts(int width):
    """(strictly_cheaper, coincide, palindrome, violations) over all values."""
    cdef unsigned long long n = 1ULL << width
    cdef int shift = 32 - width
    cdef unsigned int mask = <unsigned int> (n - 1)
    cdef unsigned long long cheaper = 0, coincide = 0, palindrome = 0, violations = 0
    cdef unsigned long long h
    cdef unsigned int hv, r, c
    cdef int hits
    with nogil:
        for h in range(n):
            hv = <unsigned int> h
            r = _brev32(hv) >> shift
            c = hv ^ mask
            hits = 0
            if r == hv:
                palindrome += 1
                hits += 1
            if r == c:
                coincide += 1
                hits += 1
            if r != hv and r != c and __builtin_popcount(hv ^ r) < width:
                cheaper += 1
                hits += 1
            if hits != 1:
                violations += 1
    return cheaper, coincide, palindrome, violations


def matching_cost(const unsigned int[::1] partner, int width):
    """Sum of d_H(h, partner[h]) over all h; half of this is the pair cost."""
    cdef unsigned long long n = <unsigned long long> partner.shape[0]
    cdef unsigned long long total = 0
    cdef unsigned long long h
    with nogil:
        for h in range(n):
            total += __builtin_popcount(<unsigned int> h ^ partner[h])
    return total
