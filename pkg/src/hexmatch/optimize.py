"""Exhaustive optimization over equivariant matchings.

An equivariant matching chooses, independently for every orbit, one of the
orbit's available pairings; the total cost is the sum of the chosen orbit
costs.  That per-orbit separability makes global minimization linear in
the number of orbits: minimize each orbit, multiply the minimizer counts.
(The test suite cross-checks this against a flat enumeration of the full
product space that prices each complete matching from scratch.)

A generic orbit offers three pairings (comp, rev, comp∘rev); a size-2
orbit offers exactly one, induced by two coinciding group elements:
comp = comp∘rev on palindrome orbits and comp = rev on anti-symmetric
orbits.  Restricting the allowed kinds can therefore make the space
infeasible, e.g. reversal alone strands every palindrome.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from math import prod

from hexmatch import _kernels
from hexmatch.matching import Matching, build_reverse_priority, total_cost
from hexmatch.orbits import (
    OrbitClass,
    OrbitRecord,
    PairingKind,
    canonical_orbits,
)

MAX_ENUM_WIDTH = 16  # exhaustive sweeps stay comfortably in memory/time

# preference when several allowed pairings tie on cost
_TIE_PREFERENCE = (PairingKind.REV, PairingKind.COMP_REV, PairingKind.COMP)
# label used for a pairing in reports: size-2 pairings are recorded under comp
_LABEL_PREFERENCE = (PairingKind.COMP, PairingKind.REV, PairingKind.COMP_REV)


class InfeasibleSpaceError(ValueError):
    """No allowed pairing exists for some orbit."""

    def __init__(self, message: str, orbit: OrbitRecord):
        super().__init__(message)
        self.orbit = orbit


@dataclass(frozen=True)
class PairingOption:
    """One selectable pairing of an orbit."""

    kinds: frozenset[PairingKind]  # all group elements inducing this pairing
    cost: int
    pairs: tuple[tuple[int, int], ...]  # normalized value pairs

    @property
    def label(self) -> PairingKind:
        return next(k for k in _LABEL_PREFERENCE if k in self.kinds)


@dataclass(frozen=True)
class OrbitChoices:
    record: OrbitRecord
    options: tuple[PairingOption, ...]


@dataclass(frozen=True)
class SearchSpace:
    width: int
    allowed_kinds: frozenset[PairingKind]
    orbit_choices: tuple[OrbitChoices, ...]

    @property
    def space_size(self) -> int:
        return prod(len(oc.options) for oc in self.orbit_choices)


@dataclass(frozen=True)
class OptimizationResult:
    min_cost: int
    minimizer_count: int
    witness: Matching
    per_orbit_choices: tuple[tuple[int, PairingKind, int], ...]  # (rep, kind, cost)
    space_size: int
    tie_broken: bool


def _norm(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


def _orbit_options(record: OrbitRecord, width: int) -> tuple[PairingOption, ...]:
    """All distinct nontrivial pairings of one orbit, with inducing kinds."""
    h = record.representative.value
    mask = (1 << width) - 1
    c = h ^ mask
    r = _kernels.bitrev(h, width)
    if record.orbit_class is OrbitClass.GENERIC:
        cr = r ^ mask
        d = record.rev_distance
        return (
            PairingOption(
                frozenset({PairingKind.COMP}),
                2 * width,
                (_norm(h, c), _norm(r, cr)),
            ),
            PairingOption(
                frozenset({PairingKind.REV}),
                2 * d,
                (_norm(h, r), _norm(c, cr)),
            ),
            PairingOption(
                frozenset({PairingKind.COMP_REV}),
                2 * (width - d),
                (_norm(h, cr), _norm(c, r)),
            ),
        )
    # size-2 orbit: single pairing, two coinciding kinds
    other = c if record.orbit_class is OrbitClass.PALINDROME else r
    if record.orbit_class is OrbitClass.PALINDROME:
        kinds = frozenset({PairingKind.COMP, PairingKind.COMP_REV})
    else:
        kinds = frozenset({PairingKind.COMP, PairingKind.REV})
    return (PairingOption(kinds, width, (_norm(h, other),)),)


def enumerate_space(
    width: int, allowed_kinds: frozenset[PairingKind] | set[PairingKind]
) -> SearchSpace:
    """Build the per-orbit choice lists for the allowed pairing kinds."""
    if not 1 <= width <= MAX_ENUM_WIDTH:
        raise ValueError(
            f"width {width} out of range: need 1 <= width <= {MAX_ENUM_WIDTH}"
        )
    allowed = frozenset(allowed_kinds)
    if not allowed:
        raise ValueError("allowed_kinds must be a nonempty set of pairing kinds")
    choices = []
    for record in canonical_orbits(width):
        options = tuple(
            opt for opt in _orbit_options(record, width) if opt.kinds & allowed
        )
        if not options:
            names = ",".join(sorted(k.value for k in allowed))
            raise InfeasibleSpaceError(
                f"infeasible: orbit of {record.representative} "
                f"({record.orbit_class.value}, elements "
                f"{sorted(e.value for e in record.elements)}) admits no pairing "
                f"from kinds {{{names}}}"
                + (
                    "; palindromes are fixed by reversal"
                    if record.orbit_class is OrbitClass.PALINDROME
                    else ""
                ),
                record,
            )
        choices.append(OrbitChoices(record=record, options=options))
    return SearchSpace(
        width=width, allowed_kinds=allowed, orbit_choices=tuple(choices)
    )


def minimize(space: SearchSpace) -> OptimizationResult:
    """Global cost minimum over the space, by per-orbit separability.

    The witness picks, per orbit, the minimum-cost option, breaking ties by
    preferring rev, then comp∘rev, then comp; ``minimizer_count`` is the
    product of per-orbit minimizer counts.
    """
    width = space.width
    partner = array("I", bytes(4 << width))
    min_cost = 0
    minimizer_count = 1
    tie_broken = False
    per_orbit = []
    for oc in space.orbit_choices:
        best = min(opt.cost for opt in oc.options)
        winners = [opt for opt in oc.options if opt.cost == best]
        minimizer_count *= len(winners)
        if len(winners) > 1:
            tie_broken = True
        chosen = min(
            winners,
            key=lambda opt: min(_TIE_PREFERENCE.index(k) for k in opt.kinds),
        )
        min_cost += best
        per_orbit.append((oc.record.representative.value, chosen.label, best))
        for a, b in chosen.pairs:
            partner[a] = b
            partner[b] = a
    return OptimizationResult(
        min_cost=min_cost,
        minimizer_count=minimizer_count,
        witness=Matching(width, partner),
        per_orbit_choices=tuple(per_orbit),
        space_size=space.space_size,
        tie_broken=tie_broken,
    )


@dataclass(frozen=True)
class NoConflictReport:
    """Exhaustive check that complement and reversal never compete.

    Every value must fall in exactly one case: palindrome (reversal is the
    identity there), coincide (reversal equals complement, both at full
    distance), or strictly cheaper reversal.
    """

    width: int
    ok: bool
    strictly_cheaper: int
    coincide: int
    palindrome: int
    counterexamples: tuple[int, ...]


def verify_no_conflict(width: int) -> NoConflictReport:
    """Check the trichotomy over all 2**width values."""
    if not 1 <= width <= MAX_ENUM_WIDTH:
        raise ValueError(
            f"width {width} out of range: need 1 <= width <= {MAX_ENUM_WIDTH}"
        )
    cheaper, coincide, palindrome, violations = _kernels.noconflict_counts(width)
    counterexamples: tuple[int, ...] = ()
    if violations:
        # re-scan in Python to name the offenders (not expected to trigger)
        mask = (1 << width) - 1
        bad = []
        for h in range(1 << width):
            r = _kernels.bitrev(h, width)
            cases = (
                (r == h)
                + (r == h ^ mask)
                + (r != h and r != h ^ mask and (h ^ r).bit_count() < width)
            )
            if cases != 1:
                bad.append(h)
        counterexamples = tuple(bad)
    return NoConflictReport(
        width=width,
        ok=violations == 0,
        strictly_cheaper=cheaper,
        coincide=coincide,
        palindrome=palindrome,
        counterexamples=counterexamples,
    )


@dataclass(frozen=True)
class SweepRow:
    """One width of the does-reverse-priority-stay-optimal sweep."""

    width: int
    cost_reverse_priority: int
    min_cost_comp_rev: int
    optimal_matches_reverse_priority: bool
    unique: bool
    minimizer_count: int


def conjecture_sweep(width_min: int, width_max: int) -> list[SweepRow]:
    """For each width, minimize over comp/rev and compare pair sets.

    Rows are observed results, not established facts; reports downstream
    flag them as derived.
    """
    if not 1 <= width_min <= width_max <= MAX_ENUM_WIDTH:
        raise ValueError(
            f"bad width range [{width_min}, {width_max}]: "
            f"need 1 <= min <= max <= {MAX_ENUM_WIDTH}"
        )
    rows = []
    for width in range(width_min, width_max + 1):
        rp = build_reverse_priority(width)
        result = minimize(
            enumerate_space(width, {PairingKind.COMP, PairingKind.REV})
        )
        rows.append(
            SweepRow(
                width=width,
                cost_reverse_priority=total_cost(rp),
                min_cost_comp_rev=result.min_cost,
                optimal_matches_reverse_priority=(
                    result.witness.pair_set() == rp.pair_set()
                ),
                unique=result.minimizer_count == 1,
                minimizer_count=result.minimizer_count,
            )
        )
    return rows
