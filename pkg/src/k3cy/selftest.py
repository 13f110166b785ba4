"""Acceptance checks: one callable per criterion, shared by pytest and the CLI.

Each check raises AssertionError on failure and returns a short detail string
on success.  All comparisons are exact; there are no tolerances to tune.
"""

from __future__ import annotations

import random
import sys
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Callable

from . import hurwitz, monodromy, transitions
from .enumeration import EnumerationQuery, enumerate_profiles, infinity_partitions, partitions
from .family import build_ij_family, detect_quarter_collision
from .hodge import h21_closed_form, hodge_summary
from .lattice import admissible_automorphism_orders, build_standard, discriminant_group
from .monodromy import (
    POINT_INFINITY,
    POINT_QUARTER,
    POINT_ZERO,
    h1_pullback,
    r_value,
    relation_report,
)
from .profile import (
    canonical_degree,
    ij_family_profile,
    make_profile,
    quintic_mirror_profile,
)


@dataclass(frozen=True)
class Criterion:
    ident: str
    title: str
    check: Callable[[], str]


def _quintic_golden() -> str:
    data = hodge_summary(quintic_mirror_profile())
    assert data.h11 == 101, f"h11 = {data.h11}"
    assert data.h21 == 1, f"h21 = {data.h21}"
    assert data.euler == 200, f"euler = {data.euler}"
    return "h11 = 101, h21 = 1, euler = 200"


def _extremal_local_system() -> str:
    value = h1_pullback(make_profile(1, [1], [1], [1]))
    assert value == 0, f"h1 on the identity cover = {value}"
    return "identity cover has h1 = 0 (extremal)"


def _monodromy_relations() -> str:
    report = relation_report()
    failed = [name for name, ok in report.items() if not ok]
    assert not failed, f"failed relations: {failed}"
    return f"{len(report)} exact relations hold"


def _r_value_oracle() -> str:
    cases = 0
    for index in range(1, 65):
        assert r_value(POINT_ZERO, index) == 2
        assert r_value(POINT_INFINITY, index) == 4 - gcd(index, 4)
        assert r_value(POINT_QUARTER, index) == 2 - gcd(index, 2)
        cases += 3
    return f"{cases} linear-algebra values match the closed forms"


def _cy_profiles(max_degree: int, two_infinity_only: bool = True):
    for degree in range(1, max_degree + 1):
        for over_infinity in infinity_partitions(degree):
            if two_infinity_only and len(over_infinity) != 2:
                continue
            for over_zero in partitions(degree):
                for over_quarter in partitions(degree):
                    extra = (
                        len(over_zero)
                        + len(over_infinity)
                        + len(over_quarter)
                        - degree
                        - 2
                    )
                    if extra < 0:
                        continue
                    yield make_profile(degree, over_zero, over_infinity, over_quarter)


def _h21_cross_derivation() -> str:
    checked = 0
    for profile in _cy_profiles(10):
        closed = h21_closed_form(profile)
        pipeline, remainder = divmod(h1_pullback(profile) - 2, 2)
        assert remainder == 0, f"odd local-system h1 on {profile}"
        assert closed == pipeline, (
            f"{profile}: closed form {closed} != local-system value {pipeline}"
        )
        checked += 1
    assert checked > 0
    return f"{checked} Calabi-Yau profiles up to degree 10 agree both ways"


def _canonical_criterion_equivalence() -> str:
    checked = 0
    allowed = frozenset({1, 2, 4})
    for degree in range(1, 13):
        parts_list = list(partitions(degree))
        for over_zero in parts_list:
            for over_infinity in parts_list:
                for over_quarter in parts_list:
                    extra = (
                        len(over_zero)
                        + len(over_infinity)
                        + len(over_quarter)
                        - degree
                        - 2
                    )
                    if extra < 0:
                        continue
                    profile = make_profile(
                        degree, over_zero, over_infinity, over_quarter
                    )
                    zero_canonical = canonical_degree(profile) == 0
                    clauses = (
                        len(over_infinity) == 2 and set(over_infinity) <= allowed
                    ) or over_infinity == (8,)
                    assert zero_canonical == clauses, f"mismatch at {profile}"
                    checked += 1
    return f"{checked} valid profiles up to degree 12 scanned; criteria coincide"


def _hurwitz_witnesses() -> str:
    found = hurwitz.find_cover(quintic_mirror_profile())
    assert found.status == hurwitz.FOUND, f"quintic witness search: {found.status}"
    found.witness.verify(quintic_mirror_profile())
    missing = hurwitz.find_cover(make_profile(4, [2, 2], [2, 2], [3, 1]))
    assert missing.status == hurwitz.NOT_FOUND, (
        f"expected certified nonexistence, got {missing.status}"
    )
    return "quintic witness found; (2,2)/(2,2)/(3,1) nonexistence certified"


def _family_collision_sweep() -> str:
    hits = []
    for k in range(1, 101):
        scale = Fraction(k, 3125)
        verdict, witnesses = detect_quarter_collision(build_ij_family(1, 4, scale))
        if verdict:
            hits.append(scale)
            assert witnesses and witnesses[0].value == Fraction(1, 256)
    assert hits == [Fraction(1, 3125)], f"collisions at {hits}"
    return "collision exactly at A = 1/3125 over a 100-point sweep"


def _enumeration_classification() -> str:
    entries = enumerate_profiles(
        EnumerationQuery(max_degree=8, require_smooth=True, fixed_h21=1)
    )
    got = [entry.profile for entry in entries]
    expected = sorted(
        (ij_family_profile(i, j) for i, j in ((1, 1), (1, 2), (2, 2), (1, 4), (2, 4), (4, 4))),
        key=lambda p: (p.degree, p.over_zero, p.over_infinity, p.over_quarter),
    )
    assert got == expected, f"got {len(got)} profiles: {got}"
    return "exactly the six one-parameter family profiles"


def _lattice_suite() -> str:
    m2 = build_standard("M2")
    assert m2.rank == 19, f"rank {m2.rank}"
    assert m2.signature() == (1, 18), f"signature {m2.signature()}"
    assert discriminant_group(m2) == [4], f"discriminant {discriminant_group(m2)}"
    orders = admissible_automorphism_orders(3)
    assert orders == [1, 2], f"admissible orders {orders}"
    return "M2: rank 19, signature (1, 18), discriminant Z/4; orders {1, 2}"


def _degeneration_round_trip() -> str:
    rng = random.Random(11)
    eligible = [
        entry.profile
        for entry in enumerate_profiles(EnumerationQuery(max_degree=8))
        if entry.profile.extra_ramification >= 1
    ]
    assert len(eligible) >= 50
    sample = rng.sample(eligible, 50)
    joins = 0
    for profile in sample:
        result = hurwitz.find_cover(profile)
        assert result.status == hurwitz.FOUND, (
            f"no witness within budget for {profile}"
        )
        for target in transitions.TARGETS:
            try:
                report, new_witness = transitions.witness_transform(
                    profile, result.witness, target
                )
            except transitions.CycleSplitError:
                continue
            after = report.after
            relation = (
                len(after.over_zero)
                + len(after.over_infinity)
                + len(after.over_quarter)
                - after.degree
                - after.extra_ramification
            )
            assert relation == 2, f"relation broken: {after}"
            new_witness.verify(after)
            joins += 1
    assert joins >= 50, f"only {joins} joining degenerations exercised"
    return f"50 random profiles; {joins} degenerations preserved relation and witness"


CRITERIA: tuple[Criterion, ...] = (
    Criterion("quintic_golden", "quintic-mirror Hodge numbers", _quintic_golden),
    Criterion("extremal_h1", "identity cover has extremal local system", _extremal_local_system),
    Criterion("monodromy_relations", "monodromy relation suite", _monodromy_relations),
    Criterion("r_value_oracle", "R values match closed forms for indices 1..64", _r_value_oracle),
    Criterion("h21_cross", "closed-form h21 equals local-system h21 (degree <= 10)", _h21_cross_derivation),
    Criterion("canonical_equivalence", "canonical degree 0 iff criterion clauses (degree <= 12)", _canonical_criterion_equivalence),
    Criterion("hurwitz_witness", "witness existence and certified nonexistence", _hurwitz_witnesses),
    Criterion("family_collision", "quarter collision exactly at A = 1/3125", _family_collision_sweep),
    Criterion("enumeration_six", "smooth h21 = 1 classification up to degree 8", _enumeration_classification),
    Criterion("lattice_suite", "polarizing lattice invariants and totient bound", _lattice_suite),
    Criterion("degeneration_round_trip", "degenerations preserve the relation and witnesses", _degeneration_round_trip),
)


def run(idents: list[str] | None = None, stream=None) -> bool:
    """Run all (or selected) acceptance criteria, print one line each."""
    stream = stream or sys.stdout
    selected = CRITERIA
    if idents:
        by_id = {c.ident: c for c in CRITERIA}
        unknown = [i for i in idents if i not in by_id]
        if unknown:
            raise ValueError(f"unknown criteria: {unknown}; known: {sorted(by_id)}")
        selected = tuple(by_id[i] for i in idents)
    all_ok = True
    for criterion in selected:
        try:
            detail = criterion.check()
        except AssertionError as exc:
            all_ok = False
            print(f"FAIL {criterion.ident}: {criterion.title} -- {exc}", file=stream)
        else:
            print(f"PASS {criterion.ident}: {criterion.title} -- {detail}", file=stream)
    return all_ok
