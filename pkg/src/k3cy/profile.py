"""Ramification profiles of covers of the mirror-quartic K3 moduli line.

A family of mirror-quartic K3 surfaces over the projective line is pinned
down by a branched cover of the moduli line, and the cover in turn by its
degree together with the ramification partitions over the three special
points lambda = 0, 1/256 and infinity.  This module does the combinatorial
bookkeeping: validity (Riemann-Hurwitz), the trivial-canonical-sheaf
criterion for the pulled-back threefold, the smoothness classification and
the component counts of the singular fibres after crepant resolution.

The total ramification away from the three special points is derived, never
supplied: Riemann-Hurwitz forces it to equal k + l + m - n - 2, so any input
making that quantity negative describes no cover at all and is rejected.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import gcd


class ProfileError(ValueError):
    """Raised for data that does not describe a branched cover."""


def _canonical_partition(parts, degree: int, label: str) -> tuple[int, ...]:
    try:
        tup = tuple(sorted((int(p) for p in parts), reverse=True))
    except (TypeError, ValueError):
        raise ProfileError(f"{label}: partition entries must be integers") from None
    if not tup or any(p < 1 for p in tup):
        raise ProfileError(f"{label}: all parts must be positive integers")
    if sum(tup) != degree:
        raise ProfileError(
            f"{label}: parts sum to {sum(tup)}, expected the degree {degree}"
        )
    return tup


@dataclass(frozen=True)
class RamificationProfile:
    """Cover degree plus the three partitions, stored non-increasing.

    The partition over infinity is treated as unordered, so two profiles
    differing only by a swap of those parts compare equal.
    """

    degree: int
    over_zero: tuple[int, ...]
    over_infinity: tuple[int, ...]
    over_quarter: tuple[int, ...]

    @property
    def extra_ramification(self) -> int:
        """Ramification degree away from the three special points (derived)."""
        return (
            len(self.over_zero)
            + len(self.over_infinity)
            + len(self.over_quarter)
            - self.degree
            - 2
        )

    @property
    def num_odd_over_quarter(self) -> int:
        return sum(1 for z in self.over_quarter if z % 2)

    @property
    def is_unramified_over_quarter(self) -> bool:
        return len(self.over_quarter) == self.degree


def make_profile(degree, over_zero, over_infinity, over_quarter) -> RamificationProfile:
    """Validate and canonicalize a ramification profile."""
    degree = int(degree)
    if degree < 1:
        raise ProfileError("degree must be a positive integer")
    profile = RamificationProfile(
        degree,
        _canonical_partition(over_zero, degree, "over_zero"),
        _canonical_partition(over_infinity, degree, "over_infinity"),
        _canonical_partition(over_quarter, degree, "over_quarter"),
    )
    if profile.extra_ramification < 0:
        raise ProfileError(
            "no such cover: ramification away from the special points would be "
            f"negative ({profile.extra_ramification})"
        )
    return profile


def quintic_mirror_profile() -> RamificationProfile:
    """The profile of the K3 fibration on the quintic mirror threefold."""
    return make_profile(5, [5], [4, 1], [1, 1, 1, 1, 1])


def ij_family_profile(i: int, j: int) -> RamificationProfile:
    """Totally ramified over 0, indices (i, j) over infinity, unramified over 1/256."""
    n = i + j
    return make_profile(n, [n], [i, j], [1] * n)


def canonical_degree(profile: RamificationProfile) -> int:
    """Degree of the canonical sheaf of the normalized pull-back threefold.

    Value 0 is exactly the trivial-canonical-sheaf condition.  The twist from
    the multiple fibre over infinity contributes y/hcf(y, 4) - 1 per point.
    """
    twist = sum(y // gcd(y, 4) - 1 for y in profile.over_infinity)
    return (
        profile.degree
        + profile.extra_ramification
        - len(profile.over_zero)
        - len(profile.over_quarter)
        + twist
    )


_ALLOWED_PAIR_INDICES = frozenset({1, 2, 4})


def is_calabi_yau_profile(profile: RamificationProfile) -> tuple[bool, str]:
    """Whether the pulled-back threefold has trivial canonical sheaf.

    True exactly for two points over infinity with indices in {1, 2, 4}, or a
    single point of index 8.  The reason string names the failing clause.
    """
    y = profile.over_infinity
    if len(y) == 2:
        bad = sorted(set(y) - _ALLOWED_PAIR_INDICES)
        if bad:
            return (
                False,
                f"with two points over infinity both indices must lie in {{1, 2, 4}}; got {list(y)}",
            )
        verdict, reason = True, "two points over infinity with indices in {1, 2, 4}"
    elif len(y) == 1:
        if y[0] != 8:
            return False, f"a single point over infinity requires index 8; got {y[0]}"
        verdict, reason = True, "totally ramified over infinity with index 8"
    else:
        return (
            False,
            f"needs one or two points over infinity; got {len(y)}",
        )
    assert canonical_degree(profile) == 0, "criterion out of step with canonical degree"
    return verdict, reason


@dataclass(frozen=True)
class SmoothnessReport:
    """Smoothness of the resolved total space.

    Each ramification index z > 1 over lambda = 1/256 leaves one isolated
    terminal point whose type index is z - 1 (compound A_{z-1}); the report
    lists (index z, how many).  Smoothness is guaranteed only when there are
    none; otherwise a crepant resolution need not exist and the caveat says so.
    """

    smooth: bool
    singularities: tuple[tuple[int, int], ...]
    caveat: str | None = None


SINGULAR_CAVEAT = "terminal singularities present; crepant resolution not guaranteed"


def smoothness(profile: RamificationProfile) -> SmoothnessReport:
    cy, reason = is_calabi_yau_profile(profile)
    if not cy:
        raise ProfileError(f"smoothness classification needs a Calabi-Yau profile: {reason}")
    counts = Counter(z for z in profile.over_quarter if z > 1)
    if not counts:
        return SmoothnessReport(smooth=True, singularities=())
    singular = tuple(sorted(counts.items(), reverse=True))
    return SmoothnessReport(smooth=False, singularities=singular, caveat=SINGULAR_CAVEAT)


_INFINITY_COMPONENTS = {1: 31, 2: 11, 4: 1}

FIBRE_OVER_ZERO = "zero"
FIBRE_OVER_INFINITY = "infinity"


def fibre_components(location: str, index: int) -> int:
    """Number of irreducible components of a resolved singular fibre.

    Over lambda = 0 with ramification index x the fibre has 2x^2 + 2
    components: the 4 strict transforms of the tetrahedral fibre, 6(x-1)
    from blow-ups along its edges and 2(x-1)(x-2) from its corners.  Over
    infinity the counts are 31, 11, 1 for indices 1, 2, 4; no count is
    established for index 8.
    """
    index = int(index)
    if index < 1:
        raise ProfileError("ramification index must be positive")
    if location == FIBRE_OVER_ZERO:
        return 2 * index * index + 2
    if location == FIBRE_OVER_INFINITY:
        try:
            return _INFINITY_COMPONENTS[index]
        except KeyError:
            raise ProfileError(
                "component counts over infinity are only established for "
                f"indices 1, 2 and 4; got {index}"
            ) from None
    raise ProfileError(f"unknown fibre location {location!r}; expected 'zero' or 'infinity'")


# --- JSON interchange -------------------------------------------------------

_INPUT_KEYS = ("degree", "over_zero", "over_infinity", "over_quarter")


def profile_to_dict(profile: RamificationProfile) -> dict:
    """Plain-dict form; the derived ramification degree is emitted but never read back."""
    return {
        "degree": profile.degree,
        "over_zero": list(profile.over_zero),
        "over_infinity": list(profile.over_infinity),
        "over_quarter": list(profile.over_quarter),
        "extra_ramification": profile.extra_ramification,
    }


def profile_from_dict(data) -> RamificationProfile:
    if not isinstance(data, dict):
        raise ProfileError("profile JSON must be an object")
    missing = [k for k in _INPUT_KEYS if k not in data]
    if missing:
        raise ProfileError(f"profile JSON is missing keys: {missing}")
    return make_profile(
        data["degree"], data["over_zero"], data["over_infinity"], data["over_quarter"]
    )
