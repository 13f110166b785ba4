"""Exhaustive enumeration of Calabi-Yau cover profiles, with filters.

Partitions are generated in reverse-lexicographic order; the partition over
infinity is restricted up front to the shapes the trivial-canonical-sheaf
criterion allows, which prunes the scan hard.  Output is deduplicated under
the swap symmetry over infinity (automatic, since partitions are stored
sorted) and returned in a fixed total order, so runs are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import hurwitz
from .hodge import HodgeData, Unavailable, hodge_summary
from .profile import RamificationProfile, is_calabi_yau_profile, make_profile


def partitions(n: int):
    """Integer partitions of n, non-increasing parts, reverse-lexicographic order."""
    if n < 0:
        raise ValueError("partitions need a nonnegative integer")

    def rec(remaining: int, cap: int):
        if remaining == 0:
            yield ()
            return
        for first in range(min(cap, remaining), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    yield from rec(n, n)


def infinity_partitions(n: int) -> list[tuple[int, ...]]:
    """Partitions over infinity compatible with a trivial canonical sheaf."""
    out: list[tuple[int, ...]] = []
    if n == 8:
        out.append((8,))
    out.extend(
        (a, b)
        for a in (4, 2, 1)
        for b in (4, 2, 1)
        if b <= a and a + b == n
    )
    return out


@dataclass
class EnumerationQuery:
    max_degree: int
    require_smooth: bool = False
    fixed_h21: int | None = None
    require_witness: bool = False
    budget: int = hurwitz.DEFAULT_BUDGET

    def validate(self) -> None:
        if self.max_degree < 1:
            raise ValueError("max_degree must be at least 1")
        if self.require_witness and self.budget < 1:
            raise ValueError("witness search needs a positive budget")


@dataclass
class EnumerationEntry:
    profile: RamificationProfile
    hodge: HodgeData | Unavailable
    witness_status: str | None


def profile_sort_key(profile: RamificationProfile):
    return (
        profile.degree,
        profile.over_zero,
        profile.over_infinity,
        profile.over_quarter,
    )


def enumerate_profiles(query: EnumerationQuery) -> list[EnumerationEntry]:
    """All Calabi-Yau profiles up to the degree bound passing the filters."""
    query.validate()
    entries = []
    for degree in range(1, query.max_degree + 1):
        for over_infinity in infinity_partitions(degree):
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
                    if query.require_smooth and len(over_quarter) != degree:
                        continue
                    profile = make_profile(degree, over_zero, over_infinity, over_quarter)
                    cy, _ = is_calabi_yau_profile(profile)
                    assert cy, "infinity partitions were pre-filtered to the CY shapes"
                    if len(over_infinity) == 2:
                        hodge_data: HodgeData | Unavailable = hodge_summary(profile)
                        if (
                            query.fixed_h21 is not None
                            and hodge_data.h21 != query.fixed_h21
                        ):
                            continue
                    else:
                        if query.fixed_h21 is not None:
                            continue
                        hodge_data = Unavailable(
                            "Hodge numbers are not computed for a single point over infinity"
                        )
                    status = None
                    if query.require_witness:
                        status = hurwitz.find_cover(profile, budget=query.budget).status
                    entries.append(EnumerationEntry(profile, hodge_data, status))
    entries.sort(key=lambda e: profile_sort_key(e.profile))
    return entries
