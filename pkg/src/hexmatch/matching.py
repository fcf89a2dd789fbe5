"""Perfect matchings on the hypercube as fixed-point-free involutions.

A matching is stored as a dense partner array indexed by value: O(1)
lookup, trivially comparable and serializable.  Three named constructors
cover the matchings of interest:

- ``build_reverse_priority``: partner = reversal, except palindromes take
  their complement (reversal would be a fixed point there),
- ``build_complement_only``: partner = complement everywhere,
- ``build_mixed_optimal``: per orbit, the cheapest available pairing,
  which on generic orbits may be comp∘rev.

``validate`` checks the involution, fixed-point-freeness and that every
pair is related by a non-identity group element; ``total_cost`` refuses
to price anything that fails validation.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from typing import Iterable, Iterator

from hexmatch import _kernels
from hexmatch.bits import MAX_WIDTH, BitVector
from hexmatch.orbits import (
    KIND_ORDER,
    OrbitClass,
    PairingKind,
    orbit_of,
)

__all__ = [
    "Matching",
    "PairClassification",
    "ValidationReport",
    "Violation",
    "InvalidMatchingError",
    "reverse_priority_partner",
    "build_reverse_priority",
    "build_complement_only",
    "build_mixed_optimal",
    "validate",
    "total_cost",
    "cost_report",
    "classify_pair",
    "CostReport",
]


class InvalidMatchingError(ValueError):
    """Raised when an operation requires a valid matching and got none."""

    def __init__(self, message: str, report: "ValidationReport"):
        super().__init__(message)
        self.report = report


class Matching:
    """A total partner map on {0,1}^width.

    The constructor only enforces shape (length 2**width, values in range);
    semantic properties (involution, no fixed points, equivariance) are
    checked by :func:`validate` so that defective maps can be inspected.
    """

    __slots__ = ("width", "_partner")

    def __init__(self, width: int, partner_values: Iterable[int]):
        n = 1 << width
        partner = array("I", partner_values)
        if len(partner) != n:
            raise ValueError(
                f"partner map has {len(partner)} entries, need {n} for width {width}"
            )
        for h, p in enumerate(partner):
            if p >= n:
                raise ValueError(f"partner of {h} is {p}, out of range for width {width}")
        self.width = width
        self._partner = partner

    def partner_value(self, value: int) -> int:
        return self._partner[value]

    def partner_of(self, h: BitVector) -> BitVector:
        if h.width != self.width:
            raise ValueError(f"width mismatch: {h.width} != {self.width}")
        return BitVector(self._partner[h.value], self.width)

    def iter_pairs(self) -> Iterator[tuple[int, int]]:
        """Normalized (low, high) value pairs in ascending order of low."""
        partner = self._partner
        for h, p in enumerate(partner):
            if h < p:
                yield (h, p)

    def pair_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.iter_pairs())

    def partner_array(self) -> array:
        """A copy of the dense partner array (index = value)."""
        return array("I", self._partner)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matching):
            return NotImplemented
        return self.width == other.width and self._partner == other._partner

    def __repr__(self) -> str:
        return f"Matching(width={self.width}, pairs={2 ** (self.width - 1)})"


def reverse_priority_partner(h: BitVector) -> BitVector:
    """Reversal unless h is a palindrome, in which case complement."""
    r = _kernels.bitrev(h.value, h.width)
    if r == h.value:
        return BitVector(h.value ^ ((1 << h.width) - 1), h.width)
    return BitVector(r, h.width)


def build_reverse_priority(width: int) -> Matching:
    """The matching defined by :func:`reverse_priority_partner`."""
    _check_width(width)
    mask = (1 << width) - 1
    bitrev = _kernels.bitrev

    def gen() -> Iterator[int]:
        for h in range(1 << width):
            r = bitrev(h, width)
            yield h ^ mask if r == h else r

    return Matching(width, gen())


def build_complement_only(width: int) -> Matching:
    """Partner every value with its complement."""
    _check_width(width)
    mask = (1 << width) - 1
    return Matching(width, (h ^ mask for h in range(1 << width)))


def build_mixed_optimal(width: int) -> Matching:
    """Per orbit, the cheapest pairing; ties prefer rev, then comp∘rev.

    On a generic orbit the reversal pairing costs 2d and the comp∘rev
    pairing 2(width-d) with d the orbit's rev-distance, so comp∘rev wins
    exactly when d > width/2.  Complement (cost 2*width) is never strictly
    cheapest.  Size-2 orbits have a single pairing.
    """
    _check_width(width)
    mask = (1 << width) - 1
    bitrev = _kernels.bitrev
    partner = array("I", bytes(4 << width))
    for h in range(1 << width):
        r = bitrev(h, width)
        if h <= r and h <= h ^ mask and h <= r ^ mask:
            c = h ^ mask
            cr = r ^ mask
            if r == h or r == c:
                other = c  # size-2 orbit; for anti-symmetric values c == r
                partner[h] = other
                partner[other] = h
            else:
                d = (h ^ r).bit_count()
                if 2 * d <= 2 * (width - d):
                    partner[h], partner[r] = r, h
                    partner[c], partner[cr] = cr, c
                else:
                    partner[h], partner[cr] = cr, h
                    partner[c], partner[r] = r, c
    return Matching(width, partner)


@dataclass(frozen=True)
class Violation:
    value: int
    problem: str  # "fixed_point" | "not_involution" | "not_equivariant"


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[Violation, ...]


def validate(m: Matching) -> ValidationReport:
    """Check involution, fixed-point-freeness and pair equivariance."""
    width = m.width
    mask = (1 << width) - 1
    bitrev = _kernels.bitrev
    violations = []
    for h in range(1 << width):
        p = m.partner_value(h)
        if p == h:
            violations.append(Violation(h, "fixed_point"))
            continue
        if m.partner_value(p) != h:
            violations.append(Violation(h, "not_involution"))
        r = bitrev(h, width)
        if p != h ^ mask and p != r and p != r ^ mask:
            violations.append(Violation(h, "not_equivariant"))
    return ValidationReport(ok=not violations, violations=tuple(violations))


def total_cost(m: Matching) -> int:
    """Sum of Hamming distances over the matching's pairs."""
    report = validate(m)
    if not report.ok:
        first = report.violations[0]
        raise InvalidMatchingError(
            f"not a valid matching: {len(report.violations)} violations, "
            f"first is value {first.value} ({first.problem})",
            report,
        )
    return _kernels.matching_cost(m._partner, m.width) // 2


@dataclass(frozen=True)
class CostReport:
    """Total cost split by the orbit class of each pair."""

    total: int
    pairs_by_class: dict[OrbitClass, int]
    cost_by_class: dict[OrbitClass, int]
    generic_distance_histogram: dict[int, int]


def cost_report(m: Matching) -> CostReport:
    """Classified cost breakdown; validates like :func:`total_cost`."""
    total = total_cost(m)
    pairs_by_class = {cls: 0 for cls in OrbitClass}
    cost_by_class = {cls: 0 for cls in OrbitClass}
    histogram: dict[int, int] = {}
    for lo, hi in m.iter_pairs():
        cls = orbit_of(BitVector(lo, m.width)).orbit_class
        d = (lo ^ hi).bit_count()
        pairs_by_class[cls] += 1
        cost_by_class[cls] += d
        if cls is OrbitClass.GENERIC:
            histogram[d] = histogram.get(d, 0) + 1
    return CostReport(
        total=total,
        pairs_by_class=pairs_by_class,
        cost_by_class=cost_by_class,
        generic_distance_histogram=dict(sorted(histogram.items())),
    )


@dataclass(frozen=True)
class PairClassification:
    """Which non-identity elements map one end of a pair to the other."""

    pair: tuple[BitVector, BitVector]  # normalized (min, max) by value
    kinds: frozenset[PairingKind]
    distance: int


def classify_pair(h1: BitVector, h2: BitVector) -> PairClassification:
    """Classify an unordered pair; kinds is empty iff it is not equivariant."""
    if h1.width != h2.width:
        raise ValueError(f"width mismatch: {h1.width} != {h2.width}")
    if h1.value == h2.value:
        raise ValueError(f"a pair needs two distinct elements, got {h1.value} twice")
    mask = (1 << h1.width) - 1
    r = _kernels.bitrev(h1.value, h1.width)
    kinds = set()
    if h1.value ^ mask == h2.value:
        kinds.add(PairingKind.COMP)
    if r == h2.value:
        kinds.add(PairingKind.REV)
    if r ^ mask == h2.value:
        kinds.add(PairingKind.COMP_REV)
    lo, hi = sorted((h1, h2), key=lambda h: h.value)
    return PairClassification(
        pair=(lo, hi),
        kinds=frozenset(kinds),
        distance=(h1.value ^ h2.value).bit_count(),
    )


def kind_labels(kinds: Iterable[PairingKind]) -> list[str]:
    """Kind names in the fixed report order."""
    kinds = set(kinds)
    return [k.value for k in KIND_ORDER if k in kinds]


def _check_width(width: int) -> None:
    if not 1 <= width <= MAX_WIDTH:
        raise ValueError(f"width {width} out of range: need 1 <= width <= {MAX_WIDTH}")
