"""Command-line interface: deterministic reports over the library operations.

Subcommands:
    orbits      orbit census and full orbit list for a width
    optimize    minimum-cost equivariant matching over chosen pairing kinds
    kingwen     structural checks of a King Wen table (embedded by default)
    conjecture  per-width sweep comparing the comp/rev optimum with the
                reverse-priority rule

Every command accepts --format json|csv|text.  JSON output wraps the
result in an envelope {command, parameters, result, derived_facts_flagged};
facts not pinned to the width-6 analysis are flagged as derived.  Output is
byte-identical across runs for identical invocations.

Exit codes:
    0  success / all checks passed
    1  usage error
    2  table parse error
    3  infeasible pairing-kind restriction
    4  verification failure
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable

from hexmatch import __version__
from hexmatch.kingwen import (
    TableParseError,
    default_table,
    parse_table,
    verify_isomorphism,
    verify_regularity,
)
from hexmatch.matching import classify_pair, kind_labels
from hexmatch.optimize import (
    MAX_ENUM_WIDTH,
    InfeasibleSpaceError,
    conjecture_sweep,
    enumerate_space,
    minimize,
)
from hexmatch.orbits import (
    KIND_ORDER,
    PairingKind,
    canonical_orbits,
    orbit_census,
)
from hexmatch.bits import BitVector

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_INFEASIBLE = 3
EXIT_VERIFY = 4

_FORMATS = ("json", "csv", "text")


class _Parser(argparse.ArgumentParser):
    # usage errors exit 1, not argparse's default 2
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(command: str, parameters: dict, result: dict, derived: bool, fmt: str,
          csv_lines: Iterable[str], text_lines: Iterable[str]) -> None:
    if fmt == "json":
        envelope = {
            "command": command,
            "parameters": parameters,
            "result": result,
            "derived_facts_flagged": derived,
        }
        sys.stdout.write(json.dumps(envelope, indent=2) + "\n")
    elif fmt == "csv":
        sys.stdout.write("\n".join(csv_lines) + "\n")
    else:
        sys.stdout.write("\n".join(text_lines) + "\n")


def _kinds_string(kinds: Iterable[PairingKind]) -> str:
    return "+".join(kind_labels(kinds))


def _pair_rows(matching) -> list[dict]:
    width = matching.width
    rows = []
    for lo, hi in matching.iter_pairs():
        cls = classify_pair(BitVector(lo, width), BitVector(hi, width))
        rows.append(
            {
                "low": lo,
                "high": hi,
                "kind": _kinds_string(cls.kinds),
                "distance": cls.distance,
            }
        )
    return rows


def _parse_kinds(spec: str) -> frozenset[PairingKind] | None:
    by_name = {k.value: k for k in KIND_ORDER}
    kinds = set()
    for name in spec.split(","):
        name = name.strip()
        if name not in by_name:
            return None
        kinds.add(by_name[name])
    return frozenset(kinds)


def cmd_orbits(args) -> int:
    width = args.n
    if not 1 <= width <= MAX_ENUM_WIDTH:
        print(f"error: --n must be in 1..{MAX_ENUM_WIDTH}, got {width}", file=sys.stderr)
        return EXIT_USAGE
    census = orbit_census(width)
    records = canonical_orbits(width)
    orbit_dicts = []
    for rec in records:
        costs = {
            k.value: rec.pairing_costs[k] for k in KIND_ORDER if k in rec.pairing_costs
        }
        orbit_dicts.append(
            {
                "representative": rec.representative.value,
                "bits": str(rec.representative),
                "class": rec.orbit_class.value,
                "elements": sorted(e.value for e in rec.elements),
                "rev_distance": rec.rev_distance,
                "pairing_costs": costs,
            }
        )
    result = {
        "census": {
            "generic_orbits": census.generic_orbits,
            "palindrome_orbits": census.palindrome_orbits,
            "antisymmetric_orbits": census.antisymmetric_orbits,
            "generic_elements": census.generic_elements,
            "palindrome_elements": census.palindrome_elements,
            "antisymmetric_elements": census.antisymmetric_elements,
            "total_orbits": census.total_orbits,
        },
        "orbits": orbit_dicts,
    }

    csv_lines = ["representative,orbit_class,size,rev_distance,elements,cost_comp,cost_rev,cost_comprev"]
    for o in orbit_dicts:
        costs = o["pairing_costs"]
        csv_lines.append(
            f"{o['representative']},{o['class']},{len(o['elements'])},{o['rev_distance']},"
            f"{';'.join(str(e) for e in o['elements'])},"
            f"{costs.get('comp', '')},{costs.get('rev', '')},{costs.get('comprev', '')}"
        )

    text_lines = [
        f"orbit census for width {width}: "
        f"{census.generic_orbits} generic + {census.palindrome_orbits} palindrome + "
        f"{census.antisymmetric_orbits} anti-symmetric = {census.total_orbits} orbits "
        f"({1 << width} values)"
    ]
    for o in orbit_dicts:
        costs = " ".join(f"{k}={v}" for k, v in o["pairing_costs"].items())
        text_lines.append(
            f"  {o['bits']}  {o['class']:<13} rev_distance={o['rev_distance']}  "
            f"elements={{{','.join(str(e) for e in o['elements'])}}}  costs: {costs}"
        )

    _emit(
        "orbits",
        {"n": width, "format": args.format},
        result,
        derived=width != 6,
        fmt=args.format,
        csv_lines=csv_lines,
        text_lines=text_lines,
    )
    return EXIT_OK


def cmd_optimize(args) -> int:
    width = args.n
    if not 1 <= width <= MAX_ENUM_WIDTH:
        print(f"error: --n must be in 1..{MAX_ENUM_WIDTH}, got {width}", file=sys.stderr)
        return EXIT_USAGE
    kinds = _parse_kinds(args.kinds)
    if not kinds:
        print(
            f"error: --kinds must be a comma-separated nonempty subset of "
            f"comp,rev,comprev; got {args.kinds!r}",
            file=sys.stderr,
        )
        return EXIT_USAGE
    try:
        space = enumerate_space(width, kinds)
    except InfeasibleSpaceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    res = minimize(space)
    kinds_param = ",".join(kind_labels(kinds))
    pair_rows = _pair_rows(res.witness)
    result = {
        "width": width,
        "kinds": kind_labels(kinds),
        "min_cost": res.min_cost,
        "minimizer_count": res.minimizer_count,
        "space_size": res.space_size,
        "unique": res.minimizer_count == 1,
        "tie_broken": res.tie_broken,
        "per_orbit": [
            {"representative": rep, "kind": kind.value, "cost": cost}
            for rep, kind, cost in res.per_orbit_choices
        ],
        "witness_pairs": pair_rows,
    }

    csv_lines = ["low,high,kind,distance"]
    csv_lines.extend(
        f"{r['low']},{r['high']},{r['kind']},{r['distance']}" for r in pair_rows
    )

    text_lines = [
        f"optimize width {width} over kinds {kinds_param}: "
        f"min cost {res.min_cost} "
        f"({res.minimizer_count} of {res.space_size} matchings"
        f"{'; unique' if res.minimizer_count == 1 else ''})",
        f"tie_broken: {'true' if res.tie_broken else 'false'}",
    ]
    for rep, kind, cost in res.per_orbit_choices:
        text_lines.append(f"  orbit {rep:>6}: {kind.value:<8} cost {cost}")

    _emit(
        "optimize",
        {"n": width, "kinds": kinds_param, "format": args.format},
        result,
        derived=width != 6,
        fmt=args.format,
        csv_lines=csv_lines,
        text_lines=text_lines,
    )
    return EXIT_OK


def cmd_kingwen(args) -> int:
    if args.table is None:
        table = default_table()
        source = "embedded"
    else:
        try:
            with open(args.table, "r", encoding="ascii") as fh:
                text = fh.read()
        except OSError as exc:
            print(f"error: cannot read {args.table}: {exc}", file=sys.stderr)
            return EXIT_PARSE
        try:
            table = parse_table(text)
        except TableParseError as exc:
            print(f"error: {args.table}: {exc}", file=sys.stderr)
            return EXIT_PARSE
        source = args.table
    reg = verify_regularity(table)
    iso = verify_isomorphism(table)
    ok = reg.all_equivariant and iso.equal_as_pair_sets

    pair_dicts = [
        {
            "kw": list(p.kw_numbers),
            "values": list(p.values),
            "kinds": _kinds_string(p.classification.kinds),
            "distance": p.classification.distance,
            "category": p.category,
        }
        for p in reg.per_pair
    ]
    result = {
        "source": source,
        "all_equivariant": reg.all_equivariant,
        "breakdown": reg.breakdown,
        "total_distance": reg.total_distance,
        "equal_as_pair_sets": iso.equal_as_pair_sets,
        "mismatches": {
            "only_in_table": [list(p) for p in iso.only_in_table],
            "only_in_reverse_priority": [list(p) for p in iso.only_in_reverse_priority],
        },
        "pairs": pair_dicts,
    }

    csv_lines = ["kw_a,kw_b,value_a,value_b,kinds,distance,category"]
    csv_lines.extend(
        f"{p['kw'][0]},{p['kw'][1]},{p['values'][0]},{p['values'][1]},"
        f"{p['kinds']},{p['distance']},{p['category']}"
        for p in pair_dicts
    )

    text_lines = [
        f"king wen table ({source}): 32 pairs, total distance {reg.total_distance}",
        f"breakdown: {reg.breakdown['palindrome_comp']} palindrome-comp, "
        f"{reg.breakdown['antisym_both']} anti-symmetric, "
        f"{reg.breakdown['generic_rev']} generic-rev, "
        f"{reg.breakdown['other']} other",
        f"all pairs comp- or rev-related: {'true' if reg.all_equivariant else 'false'}",
        f"pair set equals reverse-priority matching: "
        f"{'true' if iso.equal_as_pair_sets else 'false'}",
    ]
    if not ok:
        offenders = [p for p in pair_dicts if p["category"] == "other"]
        for p in offenders:
            text_lines.append(
                f"  offending pair kw {p['kw'][0]},{p['kw'][1]}: "
                f"values {p['values'][0]},{p['values'][1]} kinds={p['kinds'] or 'none'}"
            )

    _emit(
        "kingwen",
        {"table": source, "format": args.format},
        result,
        derived=source != "embedded",
        fmt=args.format,
        csv_lines=csv_lines,
        text_lines=text_lines,
    )
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_conjecture(args) -> int:
    lo, hi = args.width_min, args.width_max
    if not 1 <= lo <= hi <= MAX_ENUM_WIDTH:
        print(
            f"error: need 1 <= --from <= --to <= {MAX_ENUM_WIDTH}, got {lo}..{hi}",
            file=sys.stderr,
        )
        return EXIT_USAGE
    rows = conjecture_sweep(lo, hi)
    row_dicts = [
        {
            "width": r.width,
            "cost_reverse_priority": r.cost_reverse_priority,
            "min_cost_comp_rev": r.min_cost_comp_rev,
            "optimal_matches_reverse_priority": r.optimal_matches_reverse_priority,
            "unique": r.unique,
            "minimizer_count": r.minimizer_count,
            "derived": True,
        }
        for r in rows
    ]
    result = {"rows": row_dicts}

    csv_lines = [
        "width,cost_reverse_priority,min_cost_comp_rev,"
        "optimal_matches_reverse_priority,unique,derived"
    ]
    csv_lines.extend(
        f"{r['width']},{r['cost_reverse_priority']},{r['min_cost_comp_rev']},"
        f"{'true' if r['optimal_matches_reverse_priority'] else 'false'},"
        f"{'true' if r['unique'] else 'false'},true"
        for r in row_dicts
    )

    text_lines = [f"conjecture sweep widths {lo}..{hi} (derived evidence)"]
    for r in row_dicts:
        verdict = "matches" if r["optimal_matches_reverse_priority"] else "DIFFERS"
        text_lines.append(
            f"  width {r['width']:>2}: optimum {r['min_cost_comp_rev']:>6} "
            f"(reverse-priority {r['cost_reverse_priority']:>6}) "
            f"{verdict} reverse-priority; unique={'true' if r['unique'] else 'false'}"
        )

    _emit(
        "conjecture",
        {"from": lo, "to": hi, "format": args.format},
        result,
        derived=True,
        fmt=args.format,
        csv_lines=csv_lines,
        text_lines=text_lines,
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="hexmatch",
        description="Equivariant perfect matchings on the Boolean hypercube.",
    )
    parser.add_argument("--version", action="version", version=f"hexmatch {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_orbits = sub.add_parser("orbits", help="orbit census and orbit list")
    p_orbits.add_argument("--n", type=int, default=6, help="bit width (1..16)")
    p_orbits.add_argument("--format", choices=_FORMATS, default="text")
    p_orbits.set_defaults(func=cmd_orbits)

    p_opt = sub.add_parser("optimize", help="minimize total cost over pairing kinds")
    p_opt.add_argument("--n", type=int, default=6, help="bit width (1..16)")
    p_opt.add_argument(
        "--kinds",
        default="comp,rev",
        help="comma-separated subset of comp,rev,comprev (default comp,rev)",
    )
    p_opt.add_argument("--format", choices=_FORMATS, default="text")
    p_opt.set_defaults(func=cmd_optimize)

    p_kw = sub.add_parser("kingwen", help="verify a King Wen table")
    p_kw.add_argument("--table", default=None, help="CSV table path (default: embedded)")
    p_kw.add_argument("--format", choices=_FORMATS, default="text")
    p_kw.set_defaults(func=cmd_kingwen)

    p_conj = sub.add_parser("conjecture", help="sweep widths and compare optima")
    p_conj.add_argument("--from", dest="width_min", type=int, default=1)
    p_conj.add_argument("--to", dest="width_max", type=int, default=8)
    p_conj.add_argument("--format", choices=_FORMATS, default="text")
    p_conj.set_defaults(func=cmd_conjecture)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
