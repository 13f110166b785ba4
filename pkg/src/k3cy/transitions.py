"""Degenerations: a simple branch point merging into one of the special fibres.

When a ramification point away from the three special points collides with
one of them, the monodromy transposition of the vanishing point multiplies
into the local monodromy at the target.  If the transposition connects two
cycles, the corresponding parts of the target partition join, the extra
ramification degree drops by one, and the Riemann-Hurwitz relation
k + l + m - n - r = 2 survives.  (A transposition landing inside a single
cycle would split it; that collision is a deformation within the same
family, not a degeneration, and is rejected.)

The resulting threefold may stay Calabi-Yau with new Hodge numbers (a
geometric transition), or lose the property; documented special behaviours
are reported as flags.
"""

from __future__ import annotations

from dataclasses import dataclass

from .hodge import HodgeData, Unavailable, hodge_summary
from .hurwitz import CoverWitness
from .profile import (
    ProfileError,
    RamificationProfile,
    SmoothnessReport,
    is_calabi_yau_profile,
    make_profile,
    quintic_mirror_profile,
    smoothness,
)

TARGET_ZERO = "zero"
TARGET_QUARTER = "quarter"
TARGET_INFINITY = "infinity"
TARGETS = (TARGET_ZERO, TARGET_QUARTER, TARGET_INFINITY)

# A pair of unramified quarter points joining into a node in the classical
# one-parameter families: the singular threefold is Q-factorial, so no
# crepant resolution exists.
FLAG_NODE_NO_CREPANT_RESOLUTION = "node_no_crepant_resolution"
# The documented total-ramification limit of the quintic-mirror family: the
# degenerate cover picks up an extra cyclic deck symmetry of order 5.
FLAG_EXTRA_CYCLIC_SYMMETRY = "extra_cyclic_symmetry"
# Joining the whole zero fibre into one point gives the maximally unipotent
# boundary point of the moduli space.
FLAG_MAXIMALLY_UNIPOTENT_LIMIT = "maximally_unipotent_limit"


class DegenerationError(ValueError):
    """Raised for degeneration requests that make no combinatorial sense."""


class CycleSplitError(DegenerationError):
    """The absorbed transposition would split a cycle (a deformation, not a degeneration)."""


def is_classical_family_profile(profile: RamificationProfile) -> bool:
    """Totally ramified over zero, index pair in {1, 2, 4}, unramified quarter."""
    return (
        len(profile.over_zero) == 1
        and len(profile.over_infinity) == 2
        and all(y in (1, 2, 4) for y in profile.over_infinity)
        and profile.is_unramified_over_quarter
    )


@dataclass(frozen=True)
class TransitionReport:
    before: RamificationProfile
    after: RamificationProfile
    target: str
    merged_parts: tuple[tuple[int, int], int]
    after_cy: bool
    after_cy_reason: str
    after_smoothness: SmoothnessReport | None
    hodge_before: HodgeData | Unavailable
    hodge_after: HodgeData | Unavailable
    special_flags: frozenset[str]


def _hodge_or_unavailable(profile: RamificationProfile) -> HodgeData | Unavailable:
    try:
        return hodge_summary(profile)
    except (ProfileError, ValueError) as exc:
        return Unavailable(str(exc))


def degenerate(
    profile: RamificationProfile, target: str, parts: tuple[int, int]
) -> TransitionReport:
    """Join two parts of the target partition, absorbing one simple point.

    ``parts`` are indices into the stored (non-increasing) partition at the
    target.  The profile must have at least one ramification point away from
    the special fibres to absorb.
    """
    if target not in TARGETS:
        raise DegenerationError(f"unknown target {target!r}; expected one of {TARGETS}")
    if profile.extra_ramification < 1:
        raise DegenerationError(
            "nothing to absorb: the profile has no ramification away from the special points"
        )
    partition = getattr(profile, "over_" + target)
    try:
        i, j = sorted(int(p) for p in parts)
    except (TypeError, ValueError):
        raise DegenerationError("parts must be a pair of indices") from None
    if i == j or not (0 <= i < len(partition) and 0 <= j < len(partition)):
        raise DegenerationError(
            f"parts {parts} are not two distinct indices into {list(partition)}"
        )
    joined = partition[i] + partition[j]
    new_partition = [p for idx, p in enumerate(partition) if idx not in (i, j)]
    new_partition.append(joined)

    pieces = {
        TARGET_ZERO: list(profile.over_zero),
        TARGET_QUARTER: list(profile.over_quarter),
        TARGET_INFINITY: list(profile.over_infinity),
    }
    pieces[target] = new_partition
    after = make_profile(
        profile.degree, pieces[TARGET_ZERO], pieces[TARGET_INFINITY], pieces[TARGET_QUARTER]
    )
    assert after.extra_ramification == profile.extra_ramification - 1
    assert after.degree == profile.degree

    flags = set()
    if (
        target == TARGET_QUARTER
        and partition[i] == partition[j] == 1
        and is_classical_family_profile(profile)
    ):
        flags.add(FLAG_NODE_NO_CREPANT_RESOLUTION)
    if (
        target == TARGET_INFINITY
        and profile == quintic_mirror_profile()
        and after.over_infinity == (5,)
    ):
        flags.add(FLAG_EXTRA_CYCLIC_SYMMETRY)
    if target == TARGET_ZERO and len(after.over_zero) == 1:
        flags.add(FLAG_MAXIMALLY_UNIPOTENT_LIMIT)

    after_cy, reason = is_calabi_yau_profile(after)
    return TransitionReport(
        before=profile,
        after=after,
        target=target,
        merged_parts=((i, j), joined),
        after_cy=after_cy,
        after_cy_reason=reason,
        after_smoothness=smoothness(after) if after_cy else None,
        hodge_before=_hodge_or_unavailable(profile),
        hodge_after=_hodge_or_unavailable(after),
        special_flags=frozenset(flags),
    )


def absorb_simple_point(
    witness: CoverWitness, target: str
) -> tuple[CoverWitness, tuple[int, int]]:
    """Multiply the first extra transposition into the target permutation.

    The transposition is conjugated past the entries between its slot and the
    target slot, so the ordered product stays the identity.  Returns the new
    witness together with the sizes of the two joined cycles (largest first);
    raises CycleSplitError if both moved points lie in one cycle of the
    target permutation.
    """
    if target not in TARGETS:
        raise DegenerationError(f"unknown target {target!r}; expected one of {TARGETS}")
    if not witness.extra:
        raise DegenerationError("witness has no extra branch point to absorb")
    tau = witness.extra[0]
    rest = witness.extra[1:]
    z, q, inf = witness.over_zero, witness.over_quarter, witness.over_infinity

    if target == TARGET_INFINITY:
        conjugate = tau
        target_perm = inf
        new = CoverWitness(z, q, inf * conjugate, rest)
    elif target == TARGET_QUARTER:
        conjugate = inf * tau * inf.inverse()
        target_perm = q
        new = CoverWitness(z, q * conjugate, inf, rest)
    else:
        head = q * inf
        conjugate = head * tau * head.inverse()
        target_perm = z
        new = CoverWitness(z * conjugate, q, inf, rest)

    assert new.product().is_identity(), "absorption broke the product identity"
    a, b = conjugate.moved_points()
    cycle_of: dict[int, tuple[int, ...]] = {}
    for cycle in target_perm.cycles(include_fixed=True):
        for point in cycle:
            cycle_of[point] = cycle
    if cycle_of[a] is cycle_of[b]:
        raise CycleSplitError(
            "the absorbed transposition lands inside one cycle of the target "
            "permutation; that collision deforms the cover instead of degenerating it"
        )
    lengths = tuple(sorted((len(cycle_of[a]), len(cycle_of[b])), reverse=True))
    return new, lengths


def witness_transform(
    profile: RamificationProfile, witness: CoverWitness, target: str
) -> tuple[TransitionReport, CoverWitness]:
    """Degenerate a profile and its witness coherently.

    Absorbs the witness's first extra point into the target fibre, finds the
    matching pair of parts in the profile partition, runs :func:`degenerate`,
    and re-verifies the transformed witness against the degenerate profile.
    """
    new_witness, (big, small) = absorb_simple_point(witness, target)
    partition = getattr(profile, "over_" + target)
    i = partition.index(big)
    j = partition.index(small) if small != big else partition.index(big, i + 1)
    report = degenerate(profile, target, (i, j))
    new_witness.verify(report.after)
    return report, new_witness


__all__ = [
    "TARGETS",
    "TARGET_ZERO",
    "TARGET_QUARTER",
    "TARGET_INFINITY",
    "FLAG_NODE_NO_CREPANT_RESOLUTION",
    "FLAG_EXTRA_CYCLIC_SYMMETRY",
    "FLAG_MAXIMALLY_UNIPOTENT_LIMIT",
    "DegenerationError",
    "CycleSplitError",
    "TransitionReport",
    "degenerate",
    "absorb_simple_point",
    "witness_transform",
    "is_classical_family_profile",
]
