"""The Klein four-group acting on the hypercube: orbits and their census.

The group is {id, comp, rev, comp∘rev}; comp and rev are commuting
involutions, so composition is XOR on a two-bit encoding (comp bit,
rev bit).  Orbits have size 4 (generic) or size 2:

- palindrome orbits {h, comp(h)} where rev fixes h, and
- anti-symmetric orbits {h, rev(h)} where rev and comp agree on h.

Orbit enumeration is deterministic: records are emitted in ascending order
of the canonical representative, the minimum value in the orbit.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Mapping

from hexmatch import _kernels
from hexmatch.bits import MAX_WIDTH, BitVector


class K4Element(Enum):
    ID = "id"
    COMP = "comp"
    REV = "rev"
    COMP_REV = "comprev"


# two-bit encoding: bit 0 = complement applied, bit 1 = reversal applied
_K4_CODE = {
    K4Element.ID: 0,
    K4Element.COMP: 1,
    K4Element.REV: 2,
    K4Element.COMP_REV: 3,
}
_K4_FROM_CODE = {code: g for g, code in _K4_CODE.items()}


def compose(g1: K4Element, g2: K4Element) -> K4Element:
    """Group composition; XOR of the (comp, rev) component bits."""
    return _K4_FROM_CODE[_K4_CODE[g1] ^ _K4_CODE[g2]]


class PairingKind(Enum):
    """The non-identity element relating the two ends of a matched pair."""

    COMP = "comp"
    REV = "rev"
    COMP_REV = "comprev"


# fixed serialization order for kinds in reports
KIND_ORDER = (PairingKind.COMP, PairingKind.REV, PairingKind.COMP_REV)


class OrbitClass(Enum):
    GENERIC = "generic"
    PALINDROME = "palindrome"
    ANTISYMMETRIC = "antisymmetric"


@dataclass(frozen=True)
class OrbitRecord:
    """One orbit: canonical representative, elements, class, pairing costs.

    ``rev_distance`` is the Hamming distance from the representative to its
    reversal; it is the same for every element of the orbit.
    ``pairing_costs`` maps each distinct nontrivial pairing of the orbit to
    the total cost of its pairs: a generic orbit carries all three kinds,
    while a size-2 orbit has a single pairing recorded under COMP (its
    coinciding alternatives are reported by pair classification instead).
    """

    representative: BitVector
    elements: frozenset[BitVector]
    orbit_class: OrbitClass
    rev_distance: int
    pairing_costs: Mapping[PairingKind, int]

    @property
    def size(self) -> int:
        return len(self.elements)


def apply(g: K4Element, h: BitVector) -> BitVector:
    """Apply a group element to a vector."""
    mask = (1 << h.width) - 1
    v = h.value
    if g is K4Element.ID:
        return h
    if g is K4Element.COMP:
        return BitVector(v ^ mask, h.width)
    if g is K4Element.REV:
        return BitVector(_kernels.bitrev(v, h.width), h.width)
    return BitVector(_kernels.bitrev(v, h.width) ^ mask, h.width)


def _record_from_values(h: int, width: int) -> OrbitRecord:
    # h must be the orbit minimum
    mask = (1 << width) - 1
    r = _kernels.bitrev(h, width)
    c = h ^ mask
    cr = r ^ mask
    d = (h ^ r).bit_count()
    if r == h:
        cls = OrbitClass.PALINDROME
        values = (h, c)
        costs = {PairingKind.COMP: width}
    elif r == c:
        cls = OrbitClass.ANTISYMMETRIC
        values = (h, r)
        costs = {PairingKind.COMP: width}
    else:
        cls = OrbitClass.GENERIC
        values = (h, r, c, cr)
        costs = {
            PairingKind.COMP: 2 * width,
            PairingKind.REV: 2 * d,
            PairingKind.COMP_REV: 2 * (width - d),
        }
    return OrbitRecord(
        representative=BitVector(h, width),
        elements=frozenset(BitVector(v, width) for v in values),
        orbit_class=cls,
        rev_distance=d,
        pairing_costs=costs,
    )


def orbit_of(h: BitVector) -> OrbitRecord:
    """The full orbit record of h (canonical representative = orbit minimum)."""
    mask = (1 << h.width) - 1
    r = _kernels.bitrev(h.value, h.width)
    rep = min(h.value, r, h.value ^ mask, r ^ mask)
    return _record_from_values(rep, h.width)


@dataclass(frozen=True)
class OrbitCensus:
    """Orbit and element counts per class for one width."""

    width: int
    generic_orbits: int
    palindrome_orbits: int
    antisymmetric_orbits: int
    generic_elements: int
    palindrome_elements: int
    antisymmetric_elements: int

    @property
    def total_orbits(self) -> int:
        return self.generic_orbits + self.palindrome_orbits + self.antisymmetric_orbits


def _check_width(width: int) -> None:
    if not 1 <= width <= MAX_WIDTH:
        raise ValueError(f"width {width} out of range: need 1 <= width <= {MAX_WIDTH}")


def orbit_census(width: int) -> OrbitCensus:
    """Count orbits of each class by streaming over all 2**width values.

    Class membership is orbit-invariant (the complement of a palindrome is a
    palindrome, the reversal of an anti-symmetric vector is anti-symmetric),
    so element counts determine orbit counts exactly.
    """
    _check_width(width)
    pal, anti = _kernels.census(width)
    generic = (1 << width) - pal - anti
    assert pal % 2 == 0 and anti % 2 == 0 and generic % 4 == 0
    return OrbitCensus(
        width=width,
        generic_orbits=generic // 4,
        palindrome_orbits=pal // 2,
        antisymmetric_orbits=anti // 2,
        generic_elements=generic,
        palindrome_elements=pal,
        antisymmetric_elements=anti,
    )


def canonical_orbits(width: int) -> list[OrbitRecord]:
    """All orbits, each once, sorted by representative value.

    The union of the records' elements is the full value range and the
    records are pairwise disjoint.  Memory grows like 2**width; the census
    is the streaming alternative when only counts are needed.
    """
    _check_width(width)
    mask = (1 << width) - 1
    bitrev = _kernels.bitrev
    records = []
    for h in range(1 << width):
        r = bitrev(h, width)
        # h is the canonical representative iff it is the orbit minimum;
        # ties happen when rev or comp∘rev fixes h, hence <= not <
        if h <= r and h <= h ^ mask and h <= r ^ mask:
            records.append(_record_from_values(h, width))
    return records
