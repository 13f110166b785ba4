"""Command-line interface.

Exit codes, uniform across subcommands: 0 success, 1 malformed input,
2 negative verdict (not Calabi-Yau, witness certified absent, collision
absent, criteria failed), 3 inconclusive (search budget exhausted).
Rationals are always printed as p/q strings, never floats.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import json
import sys
from fractions import Fraction

from . import family, hurwitz, monodromy, selftest, transitions
from .enumeration import EnumerationQuery, enumerate_profiles
from .hodge import Unavailable, hodge_summary
from .lattice import (
    LatticeError,
    build_standard,
    discriminant_group,
    invariant_factors,
)
from .profile import (
    ProfileError,
    is_calabi_yau_profile,
    profile_from_dict,
    profile_to_dict,
)

EXIT_OK = 0
EXIT_MALFORMED = 1
EXIT_NEGATIVE = 2
EXIT_INCONCLUSIVE = 3


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, hurwitz.Permutation):
        return list(obj.image)
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: _jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(x) for x in obj]
    if isinstance(obj, frozenset):
        return sorted(obj)
    if hasattr(obj, "to_lists"):
        return _jsonable(obj.to_lists())
    if obj.__class__.__module__.startswith("sympy"):
        return str(obj)
    return obj


def _emit(data) -> None:
    print(json.dumps(_jsonable(data), indent=2))


def _load_profile(path: str):
    try:
        with open(path) as handle:
            data = json.load(handle)
    except OSError as exc:
        raise ProfileError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ProfileError(f"{path} is not valid JSON: {exc}") from None
    return profile_from_dict(data)


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ProfileError(f"cannot parse rational {text!r} (use p/q)") from None


# --- subcommand handlers ------------------------------------------------------


def _cmd_lattice(args) -> int:
    lattice = build_standard(args.name)
    _emit(
        {
            "name": lattice.label,
            "rank": lattice.rank,
            "signature": list(lattice.signature()),
            "determinant": lattice.determinant(),
            "invariant_factors": invariant_factors(lattice.gram),
            "discriminant_group": discriminant_group(lattice),
        }
    )
    return EXIT_OK


def _cmd_validate(args) -> int:
    profile = _load_profile(args.profile)
    verdict, reason = is_calabi_yau_profile(profile)
    _emit(
        {
            "profile": profile_to_dict(profile),
            "calabi_yau": verdict,
            "reason": reason,
        }
    )
    return EXIT_OK if verdict else EXIT_NEGATIVE


def _hodge_row(profile, data) -> dict:
    return {
        "degree": profile.degree,
        "over_zero": " ".join(map(str, profile.over_zero)),
        "over_infinity": " ".join(map(str, profile.over_infinity)),
        "over_quarter": " ".join(map(str, profile.over_quarter)),
        "extra_ramification": profile.extra_ramification,
        "h11": data.h11,
        "h21": data.h21,
        "euler": data.euler,
        "smooth": data.smoothness.smooth,
        "conditional": data.conditional,
    }


def _cmd_hodge(args) -> int:
    profile = _load_profile(args.profile)
    data = hodge_summary(profile)
    if args.csv:
        row = _hodge_row(profile, data)
        writer = csv.DictWriter(sys.stdout, fieldnames=list(row))
        writer.writeheader()
        writer.writerow(row)
    else:
        _emit({"profile": profile_to_dict(profile), "hodge": data})
    return EXIT_OK


def _cmd_monodromy(args) -> int:
    if args.check:
        report = monodromy.relation_report()
        _emit(report)
        return EXIT_OK if all(report.values()) else EXIT_NEGATIVE
    if args.point is None or args.index is None:
        raise ProfileError("need --point and --index (or --check)")
    _emit(monodromy.matrix_power_report(args.point, args.index))
    return EXIT_OK


def _cmd_hurwitz(args) -> int:
    if args.action == "find":
        profile = _load_profile(args.profile)
        result = hurwitz.find_cover(profile, budget=args.budget)
        payload = {"status": result.status, "nodes": result.nodes}
        if result.witness is not None:
            payload["witness"] = result.witness.to_dict()
        _emit(payload)
        return {
            hurwitz.FOUND: EXIT_OK,
            hurwitz.NOT_FOUND: EXIT_NEGATIVE,
            hurwitz.INCONCLUSIVE: EXIT_INCONCLUSIVE,
        }[result.status]
    try:
        perm = hurwitz.parse_cycles(args.cycles, degree=args.degree)
    except ValueError as exc:
        raise ProfileError(str(exc)) from None
    factors = hurwitz.min_transposition_factorization(perm)
    _emit(
        {
            "permutation": list(perm.image),
            "transpositions": [g.moved_points() for g in factors],
            "length": len(factors),
        }
    )
    return EXIT_OK


def _map_report(mp) -> dict:
    verdict, witnesses = family.detect_quarter_collision(mp)
    points = family.critical_values(mp)
    return {
        "chart": mp.chart,
        "params": [str(p) for p in mp.params],
        "degree": mp.degree,
        "zero_partition": list(mp.zero_partition()),
        "pole_partition": list(mp.pole_partition()),
        "extra_critical_points": points,
        "quarter_collision": verdict,
        "collision_witnesses": witnesses,
    }


def _cmd_family(args) -> int:
    if args.sweep:
        spec = args.sweep
        try:
            name, rng = spec.split("=", 1)
            span, steps = rng.rsplit(":", 1)
            start_text, end_text = span.split("..", 1)
            start, end = _parse_fraction(start_text), _parse_fraction(end_text)
            steps = int(steps)
            if name.strip() != "A" or steps < 2:
                raise ValueError
        except ValueError:
            raise ProfileError(
                f"cannot parse sweep {spec!r}; expected A=p/q..p'/q':steps"
            ) from None
        writer = csv.writer(sys.stdout)
        writer.writerow(["A", "extra_critical_points", "critical_values", "collision"])
        for step in range(steps):
            value = start + (end - start) * Fraction(step, steps - 1)
            if value == 0:
                continue
            mp = family.build_ij_family(args.i, args.j, value)
            verdict, _ = family.detect_quarter_collision(mp)
            points = family.critical_values(mp)
            writer.writerow(
                [
                    str(value),
                    len(points),
                    ";".join(
                        str(p.value) if p.is_rational else f"[{p.value[0]},{p.value[1]}]"
                        for p in points
                    ),
                    verdict,
                ]
            )
        return EXIT_OK
    if args.A is None:
        raise ProfileError("need --A (or --sweep)")
    mp = family.build_ij_family(args.i, args.j, _parse_fraction(args.A))
    report = _map_report(mp)
    _emit(report)
    return EXIT_OK if report["quarter_collision"] else EXIT_NEGATIVE


def _cmd_degenerate(args) -> int:
    profile = _load_profile(args.profile)
    try:
        i_text, j_text = args.parts.split(",", 1)
        parts = (int(i_text), int(j_text))
    except ValueError:
        raise ProfileError(f"cannot parse parts {args.parts!r}; expected i,j") from None
    report = transitions.degenerate(profile, args.target, parts)
    _emit(report)
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    query = EnumerationQuery(
        max_degree=args.max_degree,
        require_smooth=args.smooth,
        fixed_h21=args.h21,
        require_witness=args.witness,
        budget=args.budget,
    )
    entries = enumerate_profiles(query)
    if args.csv:
        writer = None
        for entry in entries:
            if isinstance(entry.hodge, Unavailable):
                data_fields = {"h11": "", "h21": "", "euler": "", "smooth": "", "conditional": ""}
                row = {
                    "degree": entry.profile.degree,
                    "over_zero": " ".join(map(str, entry.profile.over_zero)),
                    "over_infinity": " ".join(map(str, entry.profile.over_infinity)),
                    "over_quarter": " ".join(map(str, entry.profile.over_quarter)),
                    "extra_ramification": entry.profile.extra_ramification,
                    **data_fields,
                }
            else:
                row = _hodge_row(entry.profile, entry.hodge)
            row["witness_status"] = entry.witness_status or ""
            if writer is None:
                writer = csv.DictWriter(sys.stdout, fieldnames=list(row))
                writer.writeheader()
            writer.writerow(row)
    else:
        _emit(
            [
                {
                    "profile": profile_to_dict(entry.profile),
                    "hodge": entry.hodge,
                    "witness_status": entry.witness_status,
                }
                for entry in entries
            ]
        )
    return EXIT_OK


def _cmd_selftest(args) -> int:
    ok = selftest.run(args.criterion or None)
    return EXIT_OK if ok else EXIT_NEGATIVE


# --- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="k3cy",
        description=(
            "Exact classification of Calabi-Yau threefolds fibred by "
            "mirror-quartic K3 surfaces from cover branching data."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lattice", help="print invariants of a built-in lattice")
    p.add_argument("name", choices=["H", "E8", "minus4", "M2"])
    p.set_defaults(handler=_cmd_lattice)

    p = sub.add_parser("validate", help="check a profile JSON for the Calabi-Yau property")
    p.add_argument("profile")
    p.set_defaults(handler=_cmd_validate)

    p = sub.add_parser("hodge", help="Hodge data of a profile JSON")
    p.add_argument("profile")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(handler=_cmd_hodge)

    p = sub.add_parser("monodromy", help="local monodromy powers and R values")
    p.add_argument("--point", choices=list(monodromy.SPECIAL_POINTS))
    p.add_argument("--index", type=int)
    p.add_argument("--check", action="store_true", help="run the relation suite")
    p.set_defaults(handler=_cmd_monodromy)

    p = sub.add_parser("hurwitz", help="witness search and transposition factorization")
    action = p.add_subparsers(dest="action", required=True)
    find = action.add_parser("find", help="search for a permutation witness")
    find.add_argument("profile")
    find.add_argument("--budget", type=int, default=hurwitz.DEFAULT_BUDGET)
    factor = action.add_parser("factor", help="minimal transposition factorization")
    factor.add_argument("cycles", help="cycle notation, e.g. '(1 2 3)(4 5)'")
    factor.add_argument("--degree", type=int, default=None)
    p.set_defaults(handler=_cmd_hurwitz)

    p = sub.add_parser("family", help="critical data of the one-parameter families")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--A", default=None, help="modular parameter as p/q")
    p.add_argument("--sweep", default=None, help="A=p/q..p'/q':steps emits CSV")
    p.set_defaults(handler=_cmd_family)

    p = sub.add_parser("degenerate", help="join two parts of a special fibre")
    p.add_argument("profile")
    p.add_argument("--target", choices=list(transitions.TARGETS), required=True)
    p.add_argument("--parts", required=True, help="two part indices, e.g. 0,1")
    p.set_defaults(handler=_cmd_degenerate)

    p = sub.add_parser("enumerate", help="scan all Calabi-Yau profiles up to a degree")
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--smooth", action="store_true", help="require unramified quarter fibre")
    p.add_argument("--h21", type=int, default=None)
    p.add_argument("--witness", action="store_true", help="attach witness search status")
    p.add_argument("--budget", type=int, default=hurwitz.DEFAULT_BUDGET)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("selftest", help="run the acceptance criteria")
    p.add_argument("--criterion", action="append", help="run one criterion by id (repeatable)")
    p.set_defaults(handler=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (ProfileError, LatticeError, family.FamilyError, transitions.DegenerationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
