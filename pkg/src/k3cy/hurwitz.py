"""Permutation realizations of branched covers.

A cover of the moduli line with a given ramification profile corresponds,
through its monodromy representation, to a tuple of permutations whose cycle
types match the three partitions, whose ordered product is the identity, and
which generate a transitive group (Riemann existence).  Ramification away
from the three special points is modelled as simple (transposition) points:
every cover deforms to one of that shape without changing the special
profiles, so nothing is lost.

Conventions, fixed once and used by every checker in this module:

* permutations act on {1..n} and compose left to right,
  ``(p * q)(i) == q(p(i))``;
* witness tuples multiply to the identity in the order
  ``over_zero * over_quarter * over_infinity * extra_1 * ... * extra_r``;
* searches enumerate candidates in the canonical order of
  :func:`permutations_of_cycle_type` and return the first witness found,
  so results are deterministic.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from math import factorial

from . import hodge
from .profile import RamificationProfile, is_calabi_yau_profile


class WitnessError(ValueError):
    """A permutation tuple failed verification against its profile."""


class Permutation:
    """A permutation of {1..n} stored in one-line form."""

    __slots__ = ("image",)

    def __init__(self, image):
        image = tuple(int(i) for i in image)
        if sorted(image) != list(range(1, len(image) + 1)):
            raise ValueError(f"not a bijection of 1..{len(image)}: {image}")
        self.image = image

    @classmethod
    def _trusted(cls, image: tuple[int, ...]) -> "Permutation":
        # validation-free constructor for hot internal paths
        self = object.__new__(cls)
        self.image = image
        return self

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> "Permutation":
        if not (1 <= a <= n and 1 <= b <= n and a != b):
            raise ValueError(f"bad transposition ({a} {b}) on 1..{n}")
        image = list(range(1, n + 1))
        image[a - 1], image[b - 1] = b, a
        return cls(image)

    @classmethod
    def from_cycles(cls, n: int, cycles) -> "Permutation":
        image = list(range(1, n + 1))
        seen = set()
        for cycle in cycles:
            cycle = tuple(cycle)
            if any(p in seen for p in cycle):
                raise ValueError("cycles must be disjoint")
            seen.update(cycle)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                image[a - 1] = b
        return cls(image)

    @property
    def degree(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        o = other.image
        return Permutation._trusted(tuple(o[x - 1] for x in self.image))

    def inverse(self) -> "Permutation":
        image = [0] * self.degree
        for i, x in enumerate(self.image, start=1):
            image[x - 1] = i
        return Permutation._trusted(tuple(image))

    def cycles(self, include_fixed: bool = False):
        """Disjoint cycles, each starting at its minimum, ordered by minimum."""
        seen = [False] * self.degree
        out = []
        for start in range(1, self.degree + 1):
            if seen[start - 1]:
                continue
            cycle = [start]
            seen[start - 1] = True
            p = self(start)
            while p != start:
                cycle.append(p)
                seen[p - 1] = True
                p = self(p)
            if len(cycle) > 1 or include_fixed:
                out.append(tuple(cycle))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        image = self.image
        seen = bytearray(len(image) + 1)
        lengths = []
        for start in range(1, len(image) + 1):
            if not seen[start]:
                length = 0
                p = start
                while not seen[p]:
                    seen[p] = 1
                    length += 1
                    p = image[p - 1]
                lengths.append(length)
        lengths.sort(reverse=True)
        return tuple(lengths)

    def num_cycles(self) -> int:
        image = self.image
        seen = bytearray(len(image) + 1)
        count = 0
        for start in range(1, len(image) + 1):
            if not seen[start]:
                count += 1
                p = start
                while not seen[p]:
                    seen[p] = 1
                    p = image[p - 1]
        return count

    def is_identity(self) -> bool:
        return all(self.image[i] == i + 1 for i in range(self.degree))

    def is_transposition(self) -> bool:
        return sum(1 for i in range(self.degree) if self.image[i] != i + 1) == 2

    def moved_points(self) -> tuple[int, ...]:
        return tuple(i for i in range(1, self.degree + 1) if self(i) != i)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.image == other.image

    def __hash__(self):
        return hash(self.image)

    def __lt__(self, other):
        return self.image < other.image

    def __repr__(self):
        cycles = self.cycles()
        if not cycles:
            return f"Permutation(id_{self.degree})"
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)
        return f"Permutation[{body}]"


def parse_cycles(text: str, degree: int | None = None) -> Permutation:
    """Parse cycle notation like ``(1 2 3)(4 5)``; commas also accepted."""
    text = text.strip()
    cycles = []
    points = []
    if text not in ("", "()", "id"):
        chunks = text.replace("(", " ").split(")")
        for chunk in chunks:
            chunk = chunk.replace(",", " ").strip()
            if not chunk:
                continue
            try:
                cycle = tuple(int(tok) for tok in chunk.split())
            except ValueError:
                raise ValueError(f"cannot parse cycle {chunk!r}") from None
            cycles.append(cycle)
            points.extend(cycle)
    if degree is None:
        degree = max(points, default=1)
    return Permutation.from_cycles(degree, cycles)


def permutations_of_cycle_type(n: int, parts):
    """All permutations of S_n with the given cycle type, each exactly once.

    Canonical enumeration order (this is the total order quoted by the
    search routines): the cycle through the smallest unplaced point is built
    first, available cycle lengths tried largest first, the remaining cycle
    entries chosen in lexicographic order.
    """
    parts = tuple(sorted((int(p) for p in parts), reverse=True))
    if sum(parts) != n or any(p < 1 for p in parts):
        raise ValueError(f"{parts} is not a partition of {n}")
    cycles_acc: list[tuple[int, ...]] = []

    def rec(points: tuple[int, ...], remaining: tuple[int, ...]):
        if not points:
            yield Permutation.from_cycles(n, cycles_acc)
            return
        leader = points[0]
        others = points[1:]
        tried = set()
        for idx, length in enumerate(remaining):
            if length in tried:
                continue
            tried.add(length)
            rest_remaining = remaining[:idx] + remaining[idx + 1 :]
            for combo in itertools.combinations(others, length - 1):
                chosen = set(combo)
                rest_points = tuple(p for p in others if p not in chosen)
                for arrangement in itertools.permutations(combo):
                    cycles_acc.append((leader,) + arrangement)
                    yield from rec(rest_points, rest_remaining)
                    cycles_acc.pop()

    yield from rec(tuple(range(1, n + 1)), parts)


def canonical_of_cycle_type(n: int, parts) -> Permutation:
    """The representative with consecutive-block cycles (1..p1)(p1+1..p1+p2)..."""
    parts = tuple(sorted((int(p) for p in parts), reverse=True))
    cycles = []
    start = 1
    for p in parts:
        cycles.append(tuple(range(start, start + p)))
        start += p
    return Permutation.from_cycles(n, cycles)


def all_transpositions(n: int) -> list[Permutation]:
    return [
        Permutation.transposition(n, a, b)
        for a in range(1, n + 1)
        for b in range(a + 1, n + 1)
    ]


class _DisjointSet:
    def __init__(self, n: int):
        self.parent = list(range(n + 1))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb

    def component_count(self, n: int) -> int:
        return len({self.find(i) for i in range(1, n + 1)})

    def component_minima(self, n: int) -> list[int]:
        minima: dict[int, int] = {}
        for i in range(1, n + 1):
            root = self.find(i)
            minima.setdefault(root, i)
        return sorted(minima.values())


def _orbit_structure(n: int, perms) -> _DisjointSet:
    dsu = _DisjointSet(n)
    for perm in perms:
        for i in range(1, n + 1):
            dsu.union(i, perm(i))
    return dsu


def group_is_transitive(n: int, perms) -> bool:
    return _orbit_structure(n, perms).component_count(n) == 1


@dataclass(frozen=True)
class CoverWitness:
    """Permutation tuple witnessing a cover with a given profile."""

    over_zero: Permutation
    over_quarter: Permutation
    over_infinity: Permutation
    extra: tuple[Permutation, ...] = ()

    def entries(self) -> tuple[Permutation, ...]:
        """All entries in product order."""
        return (self.over_zero, self.over_quarter, self.over_infinity) + self.extra

    def product(self) -> Permutation:
        entries = self.entries()
        out = entries[0]
        for g in entries[1:]:
            out = out * g
        return out

    def is_transitive(self) -> bool:
        return group_is_transitive(self.over_zero.degree, self.entries())

    def verify(self, profile: RamificationProfile) -> None:
        """Independent check of every witness invariant; raises WitnessError."""
        n = profile.degree
        if any(g.degree != n for g in self.entries()):
            raise WitnessError("degree mismatch with the profile")
        pairs = (
            ("over_zero", self.over_zero, profile.over_zero),
            ("over_quarter", self.over_quarter, profile.over_quarter),
            ("over_infinity", self.over_infinity, profile.over_infinity),
        )
        for name, perm, expected in pairs:
            if perm.cycle_type() != expected:
                raise WitnessError(
                    f"{name} has cycle type {perm.cycle_type()}, profile wants {expected}"
                )
        if len(self.extra) != profile.extra_ramification:
            raise WitnessError(
                f"{len(self.extra)} extra points, profile wants {profile.extra_ramification}"
            )
        for g in self.extra:
            if not g.is_transposition():
                raise WitnessError(f"extra entry {g!r} is not a transposition")
        if not self.product().is_identity():
            raise WitnessError("ordered product is not the identity")
        if not self.is_transitive():
            raise WitnessError("generated group is not transitive")

    def to_dict(self) -> dict:
        return {
            "over_zero": list(self.over_zero.image),
            "over_quarter": list(self.over_quarter.image),
            "over_infinity": list(self.over_infinity.image),
            "extra": [list(g.image) for g in self.extra],
        }


def min_transposition_factorization(perm: Permutation) -> list[Permutation]:
    """Shortest transposition factorization, deterministic tie-breaking.

    Each cycle (c1 c2 ... cj), written starting from its minimum, contributes
    (c1 c2)(c1 c3)...(c1 cj); cycles are taken in order of their minima.  The
    length is degree minus number of cycles (fixed points included), which is
    optimal.
    """
    n = perm.degree
    out = []
    for cycle in perm.cycles():
        lead = cycle[0]
        for point in cycle[1:]:
            out.append(Permutation.transposition(n, lead, point))
    return out


# --- cover search -------------------------------------------------------------

FOUND = "found"
NOT_FOUND = "not_found"
INCONCLUSIVE = "inconclusive"

DEFAULT_BUDGET = 10**7
DEFAULT_DEGREE_CAP = 12


@dataclass(frozen=True)
class SearchResult:
    status: str
    witness: CoverWitness | None
    nodes: int


class _BudgetExhausted(Exception):
    pass


def cycle_type_class_size(n: int, parts) -> int:
    """Number of permutations in S_n with the given cycle type."""
    parts = tuple(sorted((int(p) for p in parts), reverse=True))
    if sum(parts) != n:
        raise ValueError(f"{parts} is not a partition of {n}")
    denominator = 1
    for part, mult in Counter(parts).items():
        denominator *= part**mult * factorial(mult)
    return factorial(n) // denominator


def _complete_with_transpositions(head, sigma_zero, sigma_quarter, sigma_infinity, r):
    """Extra transpositions finishing the tuple, or None if impossible here.

    ``head`` is the precomputed product of the three special permutations;
    the extras must multiply to its inverse rho.  Take a minimal factorization
    of rho (length n - #cycles(rho)); its transpositions act within cycles of
    rho, so they never bridge orbits of the special permutations.  Remaining
    slots come in pairs (t, t) whose product is the identity: each pair may
    bridge two orbits, so transitivity is achievable exactly when the orbit
    deficit fits in the padding.
    """
    n = head.degree
    rho = head.inverse()
    need = n - rho.num_cycles()
    if need > r or (r - need) % 2:
        return None
    taus = min_transposition_factorization(rho)
    dsu = _orbit_structure(n, (sigma_zero, sigma_quarter, sigma_infinity))
    minima = dsu.component_minima(n)
    pads = (r - need) // 2
    if len(minima) - 1 > pads:
        return None
    for a, b in zip(minima, minima[1:]):
        bridge = Permutation.transposition(n, a, b)
        taus.extend((bridge, bridge))
    pads -= len(minima) - 1
    if pads:
        if n < 2:
            return None
        filler = Permutation.transposition(n, 1, 2)
        taus.extend((filler, filler) * pads)
    return taus


def find_cover(
    profile: RamificationProfile,
    budget: int = DEFAULT_BUDGET,
    degree_cap: int = DEFAULT_DEGREE_CAP,
) -> SearchResult:
    """Search for a permutation witness realizing the profile.

    The first permutation is pinned to the canonical representative of the
    over-zero type (any witness is conjugate to one of that shape), so the
    scan over the remaining entries decides existence.  Two exhaustive
    strategies cover the tuple space, chosen by comparing the candidate
    counts, and candidates are always enumerated in the canonical order of
    :func:`permutations_of_cycle_type` (extra transpositions in lexicographic
    order), so the returned witness is the first, hence least, in that
    documented order:

    * *forced-infinity*: enumerate the quarter permutation and the extra
      transpositions, then solve for the infinity permutation from the
      product relation and check its cycle type;
    * *constructive*: enumerate the (quarter, infinity) pairs and complete
      each algebraically consistent pair with constructed transpositions,
      falling back to an exhaustive backtracking pass over the
      transpositions before certifying nonexistence.

    NOT_FOUND always means the space was exhausted; INCONCLUSIVE means the
    node budget ran out first.
    """
    if budget <= 0:
        raise ValueError("budget must be positive")
    n = profile.degree
    if n > degree_cap:
        raise ValueError(
            f"degree {n} exceeds the cap of {degree_cap}; pass degree_cap explicitly to override"
        )
    r = profile.extra_ramification
    sigma_zero = canonical_of_cycle_type(n, profile.over_zero)
    state = {"nodes": 0}

    def spend():
        state["nodes"] += 1
        if state["nodes"] > budget:
            raise _BudgetExhausted

    num_transpositions = n * (n - 1) // 2
    forced_cost = num_transpositions**r if n > 1 else (1 if r == 0 else 0)
    use_forced = r == 0 or forced_cost <= cycle_type_class_size(
        n, profile.over_infinity
    )

    try:
        if use_forced:
            witness = _search_forced_infinity(profile, sigma_zero, r, spend)
        else:
            witness = _search_constructive(profile, sigma_zero, r, spend)
        if witness is not None:
            witness.verify(profile)
            return SearchResult(FOUND, witness, state["nodes"])
        return SearchResult(NOT_FOUND, None, state["nodes"])
    except _BudgetExhausted:
        return SearchResult(INCONCLUSIVE, None, state["nodes"])


def _search_forced_infinity(profile, sigma_zero, r, spend):
    """Enumerate quarter permutation and transpositions; force the infinity entry.

    From sigma_zero * sigma_quarter * sigma_infinity * tau_1 ... tau_r = id,
    the infinity entry is determined as (tau_1...tau_r * sigma_zero*sigma_quarter)^-1;
    only its cycle type and the transitivity of the whole tuple remain to check.
    """
    n = profile.degree
    target_type = profile.over_infinity
    transpositions = all_transpositions(n)

    for sigma_quarter in permutations_of_cycle_type(n, profile.over_quarter):
        head = sigma_zero * sigma_quarter

        def extend(tau_product, chosen):
            if len(chosen) == r:
                spend()
                candidate = tau_product * head if chosen else head
                sigma_infinity = candidate.inverse()
                if sigma_infinity.cycle_type() != target_type:
                    return None
                witness = CoverWitness(sigma_zero, sigma_quarter, sigma_infinity, chosen)
                if witness.is_transitive():
                    return witness
                return None
            for tau in transpositions:
                found = extend(
                    tau_product * tau if chosen else tau, chosen + (tau,)
                )
                if found is not None:
                    return found
            return None

        found = extend(None, ())
        if found is not None:
            return found
    return None


def _search_constructive(profile, sigma_zero, r, spend):
    """Scan (quarter, infinity) pairs; construct extras, backtrack if needed."""
    n = profile.degree
    for sigma_quarter in permutations_of_cycle_type(n, profile.over_quarter):
        head_zero_quarter = sigma_zero * sigma_quarter
        for sigma_infinity in permutations_of_cycle_type(n, profile.over_infinity):
            spend()
            head = head_zero_quarter * sigma_infinity
            extras = _complete_with_transpositions(
                head, sigma_zero, sigma_quarter, sigma_infinity, r
            )
            if extras is not None:
                return CoverWitness(
                    sigma_zero, sigma_quarter, sigma_infinity, tuple(extras)
                )
    # Exhaustive fallback over the extra transpositions.  The constructor
    # above is believed complete, but a NOT_FOUND verdict must come from
    # exhaustion of the actual tuple space, not from a heuristic.
    transpositions = all_transpositions(n)
    for sigma_quarter in permutations_of_cycle_type(n, profile.over_quarter):
        head_zero_quarter = sigma_zero * sigma_quarter
        for sigma_infinity in permutations_of_cycle_type(n, profile.over_infinity):
            spend()
            base = (sigma_zero, sigma_quarter, sigma_infinity)

            def backtrack(head, chosen):
                spend()
                remaining = r - len(chosen)
                rho = head.inverse()
                if n - rho.num_cycles() > remaining:
                    return None
                dsu = _orbit_structure(n, base + chosen)
                if dsu.component_count(n) - 1 > remaining:
                    return None
                if remaining == 1:
                    if not rho.is_transposition():
                        return None
                    witness = CoverWitness(
                        sigma_zero, sigma_quarter, sigma_infinity, chosen + (rho,)
                    )
                    if witness.is_transitive():
                        return witness
                    return None
                for tau in transpositions:
                    found = backtrack(head * tau, chosen + (tau,))
                    if found is not None:
                        return found
                return None

            witness = backtrack(head_zero_quarter * sigma_infinity, ())
            if witness is not None:
                return witness
    return None


def simplify_to_simple(witness: CoverWitness) -> CoverWitness:
    """Replace arbitrary extra entries by their minimal transposition factorizations.

    Accepts the extended form in which extra entries may be any permutations;
    transpositions pass through unchanged, identities disappear.  The ordered
    product is preserved slot by slot, and the generated group can only grow,
    so transitivity is preserved too; both are re-checked.
    """
    new_extra: list[Permutation] = []
    for g in witness.extra:
        if g.is_transposition():
            new_extra.append(g)
        else:
            new_extra.extend(min_transposition_factorization(g))
    out = CoverWitness(
        witness.over_zero, witness.over_quarter, witness.over_infinity, tuple(new_extra)
    )
    if out.product() != witness.product():
        raise WitnessError("factorization changed the ordered product")
    if witness.is_transitive() and not out.is_transitive():
        raise WitnessError("factorization broke transitivity")
    return out


def deformation_dimension(profile: RamificationProfile) -> int:
    """Dimension of the local deformation space of the fibred threefold.

    Under the hypotheses (Calabi-Yau, two points over infinity, unramified
    over 1/256) the fibration deforms exactly by moving the zero-fibre branch
    points, so the dimension is the number of points over zero; this always
    matches h^{2,1}, which is asserted.
    """
    cy, reason = is_calabi_yau_profile(profile)
    if not cy:
        raise ValueError(f"deformation count needs a Calabi-Yau profile: {reason}")
    if len(profile.over_infinity) != 2:
        raise ValueError("deformation count needs two points over infinity")
    if not profile.is_unramified_over_quarter:
        raise ValueError("deformation count needs an unramified quarter fibre (m = n)")
    k = len(profile.over_zero)
    assert k == hodge.h21_closed_form(profile)
    return k
