"""Explicit rational maps realizing covers, and their critical behaviour.

Every cover with two points over infinity and unramified quarter fibre has a
normal form: after a Moebius change of coordinate the points over infinity
sit at 0 and infinity and one zero-fibre point sits at 1, leaving

    g(s) = a1 * (s - 1)^{x1} * prod_{i>=2} (s - a_i)^{x_i} / s^{y1}

in the affine chart, with the second infinity-preimage at s = infinity of
order y2 = n - y1.  The classical one-parameter families are the special
case of a totally ramified zero fibre; they are built in the chart that
puts the zero at s = 0 and the poles at s = 1 and infinity (the two charts
are related by s -> 1 - s up to scale).

Everything is exact: polynomial arithmetic over the rationals, Sturm
sequences for real-root isolation, and a gcd criterion for deciding whether
an extra critical value hits 1/256 exactly.  No floating point appears in
any decision path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import sympy
from sympy import Poly, Rational, symbols

_S = symbols("s")

DEFAULT_ISOLATION_WIDTH = Fraction(1, 2**64)
REFINEMENT_FLOOR = Fraction(1, 2**256)

QUARTER_VALUE = Fraction(1, 256)


class FamilyError(ValueError):
    """Raised for invalid map data or parameters."""


def _rat(x) -> Rational:
    f = Fraction(x)
    return Rational(f.numerator, f.denominator)


def _frac(x) -> Fraction:
    return Fraction(int(x.p), int(x.q)) if isinstance(x, Rational) else Fraction(x)


@dataclass(frozen=True)
class RationalMap:
    """A rational map in one affine chart, with structural branching data.

    ``structural_zeros`` and ``structural_poles`` list (location, order)
    pairs; a location of None is the point at infinity.  Numerator and
    denominator are coprime polynomials over the rationals.
    """

    numerator: Poly
    denominator: Poly
    structural_zeros: tuple[tuple[Fraction | None, int], ...]
    structural_poles: tuple[tuple[Fraction | None, int], ...]
    params: tuple[Fraction, ...]
    chart: str

    @property
    def degree(self) -> int:
        return max(self.numerator.degree(), self.denominator.degree())

    def zero_partition(self) -> tuple[int, ...]:
        return tuple(sorted((o for _, o in self.structural_zeros), reverse=True))

    def pole_partition(self) -> tuple[int, ...]:
        return tuple(sorted((o for _, o in self.structural_poles), reverse=True))

    def value_at(self, point) -> Fraction:
        num = self.numerator.eval(_rat(point))
        den = self.denominator.eval(_rat(point))
        if den == 0:
            raise FamilyError(f"{point} is a pole")
        return _frac(Rational(num, den))


def _check_structure(mp: RationalMap) -> None:
    """Re-verify the declared branching data by factoring the polynomials."""
    if sympy.gcd(mp.numerator, mp.denominator).degree() != 0:
        raise FamilyError("numerator and denominator share a factor")
    for poly, declared in (
        (mp.numerator, mp.structural_zeros),
        (mp.denominator, mp.structural_poles),
    ):
        expected = {loc: order for loc, order in declared if loc is not None}
        found: dict[Fraction, int] = {}
        _, factors = poly.factor_list()
        for factor, mult in factors:
            if factor.degree() != 1:
                raise FamilyError("structural polynomial has an irrational root")
            a, b = factor.all_coeffs()
            found[_frac(Rational(-b, a))] = mult
        if found != expected:
            raise FamilyError(
                f"declared branching {expected} does not match factorization {found}"
            )
        infinite = sum(order for loc, order in declared if loc is None)
        finite = sum(order for loc, order in declared if loc is not None)
        if finite != poly.degree():
            raise FamilyError("finite branching orders do not sum to the degree")
        del infinite  # consistency of the infinite order is checked by the caller


def build_normal_form(x_parts, y_pair, params) -> RationalMap:
    """The normal form g(s) = a1 (s-1)^{x1} prod (s-a_i)^{x_i} / s^{y1}.

    ``params`` supplies (a1, a2, ..., ak): the leading scale followed by the
    k - 1 remaining zero locations, which must be distinct, nonzero and
    different from 1 (the excluded big diagonal).
    """
    x_parts = tuple(int(x) for x in x_parts)
    if not x_parts or any(x < 1 for x in x_parts):
        raise FamilyError("zero-fibre partition must have positive parts")
    n = sum(x_parts)
    if len(y_pair) != 2:
        raise FamilyError("normal form needs exactly two points over infinity")
    y1, y2 = (int(y) for y in y_pair)
    if y1 < 1 or y2 < 1 or y1 + y2 != n:
        raise FamilyError(f"[{y1}, {y2}] is not a two-part partition of {n}")
    params = tuple(Fraction(p) for p in params)
    if len(params) != len(x_parts):
        raise FamilyError(
            f"need {len(x_parts)} parameters (scale plus zero locations); got {len(params)}"
        )
    scale, locations = params[0], params[1:]
    if scale == 0:
        raise FamilyError("the scale parameter must be nonzero")
    if any(a in (0, 1) for a in locations):
        raise FamilyError("zero locations must avoid 0 and 1")
    if len(set(locations)) != len(locations):
        raise FamilyError("zero locations must be pairwise distinct")

    expr = _rat(scale) * (_S - 1) ** x_parts[0]
    zeros = [(Fraction(1), x_parts[0])]
    for a, order in zip(locations, x_parts[1:]):
        expr *= (_S - _rat(a)) ** order
        zeros.append((a, order))
    numerator = Poly(sympy.expand(expr), _S, domain="QQ")
    denominator = Poly(_S**y1, _S, domain="QQ")
    mp = RationalMap(
        numerator,
        denominator,
        structural_zeros=tuple(zeros),
        structural_poles=((Fraction(0), y1), (None, y2)),
        params=params,
        chart="normal_form",
    )
    _check_structure(mp)
    if mp.numerator.degree() - mp.denominator.degree() != y2:
        raise FamilyError("order at infinity does not match the declared partition")
    return mp


def build_ij_family(i: int, j: int, scale) -> RationalMap:
    """The one-parameter family A s^{i+j} / ((s-1)^j), poles at 1 and infinity.

    These are the maps of the classical one-modulus families; i and j run
    over {1, 2, 4}.  The profile read-off is x = [i+j], y = {i, j}, z all
    ones, with a single extra simple critical point.
    """
    i, j = int(i), int(j)
    if i not in (1, 2, 4) or j not in (1, 2, 4):
        raise FamilyError(f"(i, j) must lie in {{1, 2, 4}}^2; got ({i}, {j})")
    scale = Fraction(scale)
    if scale == 0:
        raise FamilyError("the modular parameter must be nonzero")
    numerator = Poly(_rat(scale) * _S ** (i + j), _S, domain="QQ")
    denominator = Poly((_S - 1) ** j, _S, domain="QQ")
    mp = RationalMap(
        numerator,
        denominator,
        structural_zeros=((Fraction(0), i + j),),
        structural_poles=((Fraction(1), j), (None, i)),
        params=(scale,),
        chart="ij_family",
    )
    _check_structure(mp)
    return mp


# --- Sturm machinery ----------------------------------------------------------


def _sign_variations(chain, point: Rational) -> int:
    signs = []
    for poly in chain:
        value = poly.eval(point)
        if value != 0:
            signs.append(1 if value > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _count_roots(chain, lo: Rational, hi: Rational) -> int:
    """Number of distinct real roots in (lo, hi] via Sturm's theorem."""
    return _sign_variations(chain, lo) - _sign_variations(chain, hi)


def _cauchy_bound(poly: Poly) -> Rational:
    coeffs = poly.all_coeffs()
    lead = coeffs[0]
    biggest = max((abs(Rational(c, lead)) for c in coeffs[1:]), default=Rational(0))
    return 1 + biggest


def isolate_real_roots(poly: Poly, width: Fraction = DEFAULT_ISOLATION_WIDTH):
    """Disjoint rational intervals (lo, hi], one distinct real root each.

    The polynomial must be squarefree with no rational roots (so interval
    endpoints, which are rational, are never roots).  Bisection on Sturm
    sequence sign variations, refined until each interval is narrower than
    ``width``.
    """
    if poly.degree() < 1:
        return []
    chain = sympy.sturm(poly)
    bound = _cauchy_bound(poly)
    out = []
    stack = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        count = _count_roots(chain, lo, hi)
        if count == 0:
            continue
        if count == 1 and hi - lo < _rat(width):
            out.append((_frac(lo), _frac(hi)))
            continue
        mid = (lo + hi) / 2
        stack.append((lo, mid))
        stack.append((mid, hi))
    return sorted(out)


def refine_interval(poly: Poly, lo: Fraction, hi: Fraction, width: Fraction):
    """Shrink an isolating interval of ``poly`` below ``width`` by bisection."""
    chain = sympy.sturm(poly)
    lo_r, hi_r = _rat(lo), _rat(hi)
    while hi_r - lo_r >= _rat(width):
        mid = (lo_r + hi_r) / 2
        if _count_roots(chain, lo_r, mid) == 1:
            hi_r = mid
        else:
            lo_r = mid
    return _frac(lo_r), _frac(hi_r)


def _interval_eval(poly: Poly, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """Crude but sound bounds for a polynomial over [lo, hi] (monomial bounds)."""
    coeffs = poly.all_coeffs()
    degree = len(coeffs) - 1
    total_lo = total_hi = Fraction(0)
    for k, c in enumerate(coeffs):
        power = degree - k
        c = _frac(c)
        candidates = [lo**power, hi**power]
        if lo < 0 < hi and power % 2 == 0:
            candidates.append(Fraction(0))
        m_lo, m_hi = min(candidates), max(candidates)
        if c >= 0:
            total_lo += c * m_lo
            total_hi += c * m_hi
        else:
            total_lo += c * m_hi
            total_hi += c * m_lo
    return total_lo, total_hi


# --- critical points ------------------------------------------------------------


@dataclass(frozen=True)
class CriticalPoint:
    """An extra critical point: exact rational location or an isolating interval."""

    location: Fraction | tuple[Fraction, Fraction]
    value: Fraction | tuple[Fraction, Fraction]
    multiplicity: int

    @property
    def is_rational(self) -> bool:
        return isinstance(self.location, Fraction)


def _wronskian_numerator(mp: RationalMap) -> Poly:
    num, den = mp.numerator, mp.denominator
    return num.diff(_S) * den - num * den.diff(_S)


def _reduced_wronskian(mp: RationalMap) -> Poly:
    """Wronskian numerator with the known structural factors divided out."""
    w = _wronskian_numerator(mp)
    for loc, order in mp.structural_zeros + mp.structural_poles:
        if loc is None or order <= 1:
            continue
        factor = Poly((_S - _rat(loc)) ** (order - 1), _S, domain="QQ")
        w, remainder = w.div(factor)
        if not remainder.is_zero:
            raise FamilyError("structural factor does not divide the Wronskian")
    return w


def critical_values(
    mp: RationalMap, isolation_width: Fraction = DEFAULT_ISOLATION_WIDTH
) -> list[CriticalPoint]:
    """Extra critical points and their values, exactly or as intervals.

    Rational critical points are found by exact factorization and evaluated
    exactly; irrational ones are isolated by Sturm bisection to the requested
    width and their values reported as sound rational bounds.
    """
    w = _reduced_wronskian(mp)
    if w.degree() < 1:
        return []
    out = []
    _, factors = w.factor_list()
    for factor, mult in factors:
        if factor.degree() == 0:
            continue
        if factor.degree() == 1:
            a, b = factor.all_coeffs()
            location = _frac(Rational(-b, a))
            out.append(CriticalPoint(location, mp.value_at(location), mult))
            continue
        for lo, hi in isolate_real_roots(factor, isolation_width):
            lo, hi = _shrink_off_poles(mp, factor, lo, hi, isolation_width)
            num_lo, num_hi = _interval_eval(mp.numerator, lo, hi)
            den_lo, den_hi = _interval_eval(mp.denominator, lo, hi)
            bounds = sorted(
                Fraction(a) / Fraction(b)
                for a in (num_lo, num_hi)
                for b in (den_lo, den_hi)
            )
            out.append(CriticalPoint((lo, hi), (bounds[0], bounds[-1]), mult))
    out.sort(key=lambda c: c.location if c.is_rational else c.location[0])
    return out


def _shrink_off_poles(mp, factor, lo, hi, width):
    """Refine an isolating interval until the denominator is bounded away from 0."""
    current = width
    while True:
        den_lo, den_hi = _interval_eval(mp.denominator, lo, hi)
        if den_lo > 0 or den_hi < 0:
            return lo, hi
        current = current / 2**8
        if current < REFINEMENT_FLOOR:
            raise FamilyError("could not separate a critical point from the poles")
        lo, hi = refine_interval(factor, lo, hi, current)


def detect_quarter_collision(
    mp: RationalMap, isolation_width: Fraction = DEFAULT_ISOLATION_WIDTH
) -> tuple[bool | None, list[CriticalPoint]]:
    """Does some extra critical value equal 1/256 exactly?

    Rational critical values are compared exactly.  An irrational critical
    point takes the value 1/256 precisely when it is a common root of the
    reduced Wronskian and of numerator - denominator/256; the gcd of the two
    polynomials decides that exactly, with a Sturm root count locating the
    common root inside the isolating interval.  The verdict is therefore
    always decided (None, the inconclusive verdict, is reserved for the
    impossible case of an undecided comparison).
    """
    witnesses = []
    collision_poly = Poly(
        mp.numerator - _rat(QUARTER_VALUE) * mp.denominator, _S, domain="QQ"
    )
    w = _reduced_wronskian(mp)
    common = sympy.gcd(w, collision_poly)
    for point in critical_values(mp, isolation_width):
        if point.is_rational:
            if point.value == QUARTER_VALUE:
                witnesses.append(point)
            continue
        if common.degree() < 1:
            continue
        lo, hi = point.location
        chain = sympy.sturm(common)
        if _count_roots(chain, _rat(lo), _rat(hi)) > 0:
            witnesses.append(
                CriticalPoint(point.location, QUARTER_VALUE, point.multiplicity)
            )
    return bool(witnesses), witnesses


def ramification_audit(mp: RationalMap) -> tuple[int, int]:
    """(total ramification counted with multiplicity, 2n - 2) for the map."""
    total = sum(order - 1 for _, order in mp.structural_zeros)
    total += sum(order - 1 for _, order in mp.structural_poles)
    total += sum(point.multiplicity for point in critical_values(mp))
    return total, 2 * mp.degree - 2
