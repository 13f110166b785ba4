"""Hodge numbers of the Calabi-Yau total spaces, computed two independent ways.

h^{1,1} comes from a Shioda-Tate style count: the monodromy-fixed Picard
rank of a fibre (19, a constant of the construction), the base class, and
one class per extra component of each singular fibre.  h^{2,1} has a closed
form in the profile data, and is independently recoverable from the
cohomology of the pulled-back transcendental local system; the summary
computation runs both and insists they agree.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import monodromy
from .profile import (
    FIBRE_OVER_INFINITY,
    FIBRE_OVER_ZERO,
    ProfileError,
    RamificationProfile,
    SmoothnessReport,
    fibre_components,
    is_calabi_yau_profile,
    smoothness,
)

# Rank of the monodromy-fixed part of H^2 of a smooth fibre.  The monodromy
# group is infinite, which pins this at the polarization rank; it is a
# constant of the construction, not something recomputable from a profile.
PICARD_RANK_GENERIC = 19

# Extra-component count over infinity, minus one, per ramification index.
_INFINITY_EXCESS = {1: 30, 2: 10, 4: 0}


@dataclass(frozen=True)
class Unavailable:
    """Marker for a quantity the theory does not provide for this input."""

    reason: str


@dataclass(frozen=True)
class HodgeData:
    h11: int
    h21: int
    b2: int
    b3: int
    euler: int
    rho_h: int
    component_census: tuple[tuple[str, int, int], ...]
    smoothness: SmoothnessReport
    conditional: bool

    def __post_init__(self):
        assert self.b2 == self.h11
        assert self.b3 == 2 + 2 * self.h21
        assert self.euler == 2 * (self.h11 - self.h21)


def _require_cy_with_two_infinity(profile: RamificationProfile) -> None:
    cy, reason = is_calabi_yau_profile(profile)
    if not cy:
        raise ProfileError(f"Hodge numbers require a Calabi-Yau profile: {reason}")
    if len(profile.over_infinity) != 2:
        raise ProfileError(
            "Hodge numbers are only computed for two points over infinity; the "
            "single-point index-8 case is a smooth degeneration of the (4, 4) "
            "case and is deliberately left out"
        )


def h11(profile: RamificationProfile) -> int:
    """20 plus 2x^2 + 1 per point over zero plus the excess over infinity."""
    _require_cy_with_two_infinity(profile)
    return (
        PICARD_RANK_GENERIC
        + 1
        + sum(2 * x * x + 1 for x in profile.over_zero)
        + sum(_INFINITY_EXCESS[y] for y in profile.over_infinity)
    )


def h21_closed_form(profile: RamificationProfile) -> int:
    """k + (m_odd - n) / 2 in terms of the profile data."""
    _require_cy_with_two_infinity(profile)
    spread = profile.num_odd_over_quarter - profile.degree
    assert spread % 2 == 0, "odd-part count and degree always share parity here"
    value = len(profile.over_zero) + spread // 2
    if value < 0:
        raise ProfileError(
            f"inconsistent profile: closed form gives h21 = {value} < 0, "
            "which no actual cover can produce"
        )
    return value


def hodge_summary(profile: RamificationProfile) -> HodgeData:
    """Full Hodge data, with the closed form cross-checked against monodromy.

    For profiles ramified over lambda = 1/256 the numbers are those of the
    crepant resolution *if one exists*; the report is flagged conditional
    and carries the smoothness caveat.
    """
    _require_cy_with_two_infinity(profile)
    h11_value = h11(profile)
    closed = h21_closed_form(profile)
    via_local_system, remainder = divmod(monodromy.h1_pullback(profile) - 2, 2)
    if remainder or closed != via_local_system:
        raise RuntimeError(
            "internal cross-check failed: closed-form h21 "
            f"({closed}) != local-system h21 ({via_local_system}); this is a bug"
        )
    census = tuple(
        (FIBRE_OVER_ZERO, x, fibre_components(FIBRE_OVER_ZERO, x))
        for x in profile.over_zero
    ) + tuple(
        (FIBRE_OVER_INFINITY, y, fibre_components(FIBRE_OVER_INFINITY, y))
        for y in profile.over_infinity
    )
    return HodgeData(
        h11=h11_value,
        h21=closed,
        b2=h11_value,
        b3=2 + 2 * closed,
        euler=2 * (h11_value - closed),
        rho_h=PICARD_RANK_GENERIC,
        component_census=census,
        smoothness=smoothness(profile),
        conditional=not profile.is_unramified_over_quarter,
    )
