"""The King Wen sequence of the 64 hexagrams and its structural checks.

The traditional sequence numbers the hexagrams 1..64; reading each
hexagram bottom line first as bit 0 gives a 6-bit integer.  Consecutive
numbers (1,2), (3,4), ... form 32 pairs.  ``verify_regularity`` classifies
every pair by the group element relating its two ends;
``verify_isomorphism`` compares the pair set against the reverse-priority
matching.

Tables can also be loaded from CSV (header ``kw,binary``, then 64 rows
``<kw>,<value>`` in ascending kw order) so alternative orderings can be
run through the same checks.
"""

from __future__ import annotations

from dataclasses import dataclass

from hexmatch.bits import BitVector
from hexmatch.matching import (
    PairClassification,
    build_reverse_priority,
    classify_pair,
)
from hexmatch.orbits import PairingKind

WIDTH = 6

# King Wen number k (1-based) maps to _KING_WEN_BINARY[k-1].
_KING_WEN_BINARY = (
    63, 0, 17, 34, 23, 58, 2, 16, 55, 59, 7, 56, 61, 47, 4, 8,
    25, 38, 3, 48, 41, 37, 32, 1, 57, 39, 33, 30, 18, 45, 28, 14,
    60, 15, 40, 5, 53, 43, 20, 10, 35, 49, 31, 62, 24, 6, 26, 22,
    29, 46, 9, 36, 52, 11, 13, 44, 54, 27, 50, 19, 51, 12, 21, 42,
)


class TableParseError(ValueError):
    """A King Wen CSV table failed to parse; message carries the line number."""


@dataclass(frozen=True)
class KingWenTable:
    """Bijection from King Wen numbers 1..64 onto the 6-bit values."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.values) != 64:
            raise ValueError(f"table has {len(self.values)} entries, need 64")
        seen: dict[int, int] = {}
        for kw0, v in enumerate(self.values):
            if not 0 <= v < 64:
                raise ValueError(f"kw {kw0 + 1}: value {v} out of range 0..63")
            if v in seen:
                raise ValueError(
                    f"value {v} assigned to both kw {seen[v]} and kw {kw0 + 1}"
                )
            seen[v] = kw0 + 1

    def __getitem__(self, kw: int) -> BitVector:
        """The hexagram with King Wen number kw (1-based)."""
        if not 1 <= kw <= 64:
            raise IndexError(f"King Wen number {kw} out of range 1..64")
        return BitVector(self.values[kw - 1], WIDTH)


_DEFAULT = KingWenTable(_KING_WEN_BINARY)


def default_table() -> KingWenTable:
    """The embedded King Wen table."""
    return _DEFAULT


def parse_table(text: str) -> KingWenTable:
    """Parse the CSV table format; errors name the offending line."""
    lines = text.splitlines()
    if not lines or lines[0] != "kw,binary":
        raise TableParseError("line 1: expected header 'kw,binary'")
    rows = lines[1:]
    if len(rows) != 64:
        raise TableParseError(
            f"line {len(lines)}: expected 64 data rows, got {len(rows)}"
        )
    values = []
    seen_values: dict[int, int] = {}
    for i, row in enumerate(rows):
        lineno = i + 2
        parts = row.split(",")
        if len(parts) != 2:
            raise TableParseError(f"line {lineno}: expected '<kw>,<value>', got {row!r}")
        try:
            kw = int(parts[0])
            value = int(parts[1])
        except ValueError:
            raise TableParseError(
                f"line {lineno}: expected '<kw>,<value>', got {row!r}"
            ) from None
        if kw != i + 1:
            raise TableParseError(
                f"line {lineno}: King Wen numbers must ascend 1..64, got {kw}"
            )
        if not 0 <= value < 64:
            raise TableParseError(f"line {lineno}: value {value} out of range 0..63")
        if value in seen_values:
            raise TableParseError(
                f"line {lineno}: duplicate value {value}, "
                f"already used on line {seen_values[value]}"
            )
        seen_values[value] = lineno
        values.append(value)
    return KingWenTable(tuple(values))


def serialize_table(table: KingWenTable) -> str:
    """The exact CSV form accepted by :func:`parse_table`."""
    lines = ["kw,binary"]
    lines.extend(f"{kw0 + 1},{v}" for kw0, v in enumerate(table.values))
    return "\n".join(lines) + "\n"


def pairs(table: KingWenTable) -> list[tuple[BitVector, BitVector]]:
    """The 32 consecutive pairs, odd King Wen number first."""
    return [(table[2 * k + 1], table[2 * k + 2]) for k in range(32)]


# the three pair categories plus a bucket for anything else
CATEGORY_PALINDROME_COMP = "palindrome_comp"
CATEGORY_ANTISYM_BOTH = "antisym_both"
CATEGORY_GENERIC_REV = "generic_rev"
CATEGORY_OTHER = "other"


@dataclass(frozen=True)
class KingWenPairReport:
    kw_numbers: tuple[int, int]
    values: tuple[int, int]  # in King Wen order, not normalized
    classification: PairClassification
    category: str


@dataclass(frozen=True)
class RegularityReport:
    total_pairs: int
    breakdown: dict[str, int]
    per_pair: tuple[KingWenPairReport, ...]
    all_equivariant: bool
    total_distance: int


def _categorize(cls: PairClassification) -> str:
    kinds = cls.kinds
    if PairingKind.COMP in kinds and PairingKind.REV in kinds:
        return CATEGORY_ANTISYM_BOTH
    if PairingKind.COMP in kinds and PairingKind.COMP_REV in kinds:
        return CATEGORY_PALINDROME_COMP
    if kinds == {PairingKind.REV}:
        return CATEGORY_GENERIC_REV
    return CATEGORY_OTHER


def verify_regularity(table: KingWenTable) -> RegularityReport:
    """Classify every pair; equivariant means comp- or rev-related."""
    per_pair = []
    breakdown = {
        CATEGORY_PALINDROME_COMP: 0,
        CATEGORY_ANTISYM_BOTH: 0,
        CATEGORY_GENERIC_REV: 0,
        CATEGORY_OTHER: 0,
    }
    all_equivariant = True
    total_distance = 0
    for k, (a, b) in enumerate(pairs(table)):
        cls = classify_pair(a, b)
        category = _categorize(cls)
        breakdown[category] += 1
        total_distance += cls.distance
        if not (PairingKind.COMP in cls.kinds or PairingKind.REV in cls.kinds):
            all_equivariant = False
        per_pair.append(
            KingWenPairReport(
                kw_numbers=(2 * k + 1, 2 * k + 2),
                values=(a.value, b.value),
                classification=cls,
                category=category,
            )
        )
    return RegularityReport(
        total_pairs=32,
        breakdown=breakdown,
        per_pair=tuple(per_pair),
        all_equivariant=all_equivariant,
        total_distance=total_distance,
    )


@dataclass(frozen=True)
class IsomorphismReport:
    """Pair-set comparison against the reverse-priority matching."""

    equal_as_pair_sets: bool
    only_in_table: tuple[tuple[int, int], ...]
    only_in_reverse_priority: tuple[tuple[int, int], ...]


def verify_isomorphism(table: KingWenTable) -> IsomorphismReport:
    """Strongest reading of equivalence: equality as sets of pairs."""
    table_pairs = frozenset(
        (min(a.value, b.value), max(a.value, b.value)) for a, b in pairs(table)
    )
    rp_pairs = build_reverse_priority(WIDTH).pair_set()
    return IsomorphismReport(
        equal_as_pair_sets=table_pairs == rp_pairs,
        only_in_table=tuple(sorted(table_pairs - rp_pairs)),
        only_in_reverse_priority=tuple(sorted(rp_pairs - table_pairs)),
    )
