"""Independent brute-force oracles for cross-checking the library.

Everything here recomputes from first principles in ways deliberately
different from the package internals: bit strings instead of integer
xor/popcount tricks, set closure instead of representative scans, and a
flat enumeration of the full per-orbit choice space that prices every
complete matching from scratch (no per-orbit cost sums).
"""

from math import prod

import numpy as np


def bit_string(h: int, width: int) -> str:
    return format(h, f"0{width}b")


def rev(h: int, width: int) -> int:
    return int(bit_string(h, width)[::-1], 2)


def comp(h: int, width: int) -> int:
    return int(
        "".join("1" if ch == "0" else "0" for ch in bit_string(h, width)), 2
    )


def comprev(h: int, width: int) -> int:
    return comp(rev(h, width), width)


def hamming(a: int, b: int, width: int) -> int:
    return sum(
        1 for x, y in zip(bit_string(a, width), bit_string(b, width)) if x != y
    )


def orbit(h: int, width: int) -> frozenset[int]:
    """Closure of {h} under complement and reversal."""
    seen = {h}
    frontier = [h]
    while frontier:
        x = frontier.pop()
        for y in (comp(x, width), rev(x, width)):
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return frozenset(seen)


def all_orbits(width: int) -> list[frozenset[int]]:
    return sorted({orbit(h, width) for h in range(1 << width)}, key=min)


def census(width: int) -> dict[str, int]:
    counts = {
        "generic": 0,
        "palindrome": 0,
        "antisymmetric": 0,
        "generic_elements": 0,
        "palindrome_elements": 0,
        "antisymmetric_elements": 0,
    }
    for ob in all_orbits(width):
        r = min(ob)
        if rev(r, width) == r:
            counts["palindrome"] += 1
            counts["palindrome_elements"] += len(ob)
        elif rev(r, width) == comp(r, width):
            counts["antisymmetric"] += 1
            counts["antisymmetric_elements"] += len(ob)
        else:
            counts["generic"] += 1
            counts["generic_elements"] += len(ob)
    return counts


def classify_kinds(a: int, b: int, width: int) -> set[str]:
    kinds = set()
    if comp(a, width) == b:
        kinds.add("comp")
    if rev(a, width) == b:
        kinds.add("rev")
    if comprev(a, width) == b:
        kinds.add("comprev")
    return kinds


def noconflict_cases(width: int) -> dict[str, int]:
    """Trichotomy case counts plus the number of values violating it."""
    counts = {"strictly_cheaper": 0, "coincide": 0, "palindrome": 0, "bad": 0}
    for h in range(1 << width):
        r = rev(h, width)
        c = comp(h, width)
        is_pal = r == h
        is_coin = r == c
        is_cheap = r != h and r != c and hamming(h, r, width) < width
        if is_pal + is_coin + is_cheap != 1:
            counts["bad"] += 1
        counts["palindrome"] += is_pal
        counts["coincide"] += is_coin
        counts["strictly_cheaper"] += is_cheap
    return counts


_KIND_FUNCS = {"comp": comp, "rev": rev, "comprev": comprev}


def orbit_pairing_choices(width: int, kinds) -> list[list[dict[int, int]]] | None:
    """Per orbit (ascending by minimum), the distinct fixed-point-free
    pairings induced by the allowed kinds.  None if some orbit has no
    choice at all (infeasible restriction)."""
    choices = []
    for ob in all_orbits(width):
        seen_pairings = set()
        options = []
        for name in ("comp", "rev", "comprev"):
            if name not in kinds:
                continue
            fn = _KIND_FUNCS[name]
            pmap = {x: fn(x, width) for x in ob}
            if any(x == y for x, y in pmap.items()):
                continue
            key = frozenset(frozenset(p) for p in pmap.items())
            if key in seen_pairings:
                continue
            seen_pairings.add(key)
            options.append(pmap)
        if not options:
            return None
        choices.append(options)
    return choices


def _distance_table(width: int) -> np.ndarray:
    n = 1 << width
    table = np.zeros((n, n), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            table[a, b] = hamming(a, b, width)
    return table


def flat_cost(partner, width: int) -> int:
    """Price one complete matching from scratch, per-bit."""
    return sum(hamming(h, p, width) for h, p in enumerate(partner)) // 2


def flat_minimum(width: int, kinds, chunk: int = 65536):
    """Enumerate the whole product space of per-orbit pairings.

    Each combination is materialized as a full partner map and priced by
    summing per-bit distances over all values; nothing about per-orbit
    cost additivity is assumed.  Returns (min_cost, minimizer_count,
    space_size, one minimizing pair set), or None if infeasible.
    """
    choices = orbit_pairing_choices(width, kinds)
    if choices is None:
        return None
    n = 1 << width
    sizes = [len(c) for c in choices]
    total = prod(sizes)
    dist = _distance_table(width)

    best = None
    best_count = 0
    best_partner = None
    for start in range(0, total, chunk):
        stop = min(start + chunk, total)
        idx = np.arange(start, stop)
        partners = np.zeros((stop - start, n), dtype=np.int32)
        radix = 1
        for opts, size in zip(choices, sizes):
            digits = (idx // radix) % size
            radix *= size
            for ci, pmap in enumerate(opts):
                rows = digits == ci
                for a, b in pmap.items():
                    partners[rows, a] = b
        costs = np.zeros(stop - start, dtype=np.int64)
        for h in range(n):
            costs += dist[h][partners[:, h]]
        costs //= 2
        chunk_min = int(costs.min())
        if best is None or chunk_min < best:
            best = chunk_min
            best_count = int((costs == chunk_min).sum())
            best_partner = partners[int(np.argmin(costs))].tolist()
        elif chunk_min == best:
            best_count += int((costs == best).sum())
    pair_set = frozenset(
        (h, p) for h, p in enumerate(best_partner) if h < p
    )
    return best, best_count, total, pair_set


def sampled_costs(width: int, kinds, samples: int, seed: int) -> list[int]:
    """Full-price a random sample of the choice space (for widths where
    exhaustive flat enumeration is out of reach)."""
    choices = orbit_pairing_choices(width, kinds)
    assert choices is not None
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(samples):
        partner = {}
        for opts in choices:
            partner.update(opts[rng.integers(len(opts))])
        out.append(
            sum(hamming(h, partner[h], width) for h in partner) // 2
        )
    return out
