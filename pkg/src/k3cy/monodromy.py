"""Exact monodromy of the rank-3 transcendental local system.

The Picard-Fuchs equation of the mirror-quartic K3 family is hypergeometric
of type 3F2(1/4, 2/4, 3/4; 1, 1; 256*lambda).  Such a rigid system is pinned
down, up to common conjugation, by Levelt's theorem: the monodromies at
infinity and zero may be taken to be the companion matrices A and B of the
characteristic polynomials determined by the local exponents, and the third
generator is then A^(-1)B.  This module builds those matrices over exact
integers, computes fixed-subspace dimensions by fraction-free elimination,
and evaluates the cohomology of pull-backs of the local system along
branched covers of the moduli line.

Composition convention: the generators are stored so that

    around_quarter * around_zero * around_infinity == identity,

the one ordering in which the companion-matrix representatives multiply to
the identity without conjugation.  Matrix powers use exact repeated
squaring; ranks use Bareiss fraction-free elimination.  No floating point,
no complex arithmetic: the diagonalized forms over C are never needed,
because conjugation preserves fixed-space dimensions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .profile import RamificationProfile


class ExactMatrix:
    """Immutable dense matrix over exact rationals."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        converted = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if converted and any(len(r) != len(converted[0]) for r in converted):
            raise ValueError("rows must all have the same length")
        self.rows = converted

    # -- construction ------------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def zero(cls, n: int, m: int | None = None) -> "ExactMatrix":
        m = n if m is None else m
        return cls(tuple((0,) * m for _ in range(n)))

    # -- shape ---------------------------------------------------------------

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __eq__(self, other):
        return isinstance(other, ExactMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.rows)
        return f"ExactMatrix[{body}]"

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        return ExactMatrix(
            tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.rows, other.rows))
        )

    def __sub__(self, other):
        return ExactMatrix(
            tuple(tuple(a - b for a, b in zip(r1, r2)) for r1, r2 in zip(self.rows, other.rows))
        )

    def __mul__(self, other):
        if isinstance(other, ExactMatrix):
            if self.ncols != other.nrows:
                raise ValueError("shape mismatch in matrix product")
            cols = list(zip(*other.rows))
            return ExactMatrix(
                tuple(
                    tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                    for row in self.rows
                )
            )
        return self.scaled(other)

    def __rmul__(self, other):
        return self.scaled(other)

    def scaled(self, scalar) -> "ExactMatrix":
        c = Fraction(scalar)
        return ExactMatrix(tuple(tuple(c * x for x in row) for row in self.rows))

    def __pow__(self, exponent: int) -> "ExactMatrix":
        if not self.is_square:
            raise ValueError("only square matrices have powers")
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = ExactMatrix.identity(self.nrows)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def trace(self) -> Fraction:
        if not self.is_square:
            raise ValueError("trace needs a square matrix")
        return sum((self.rows[i][i] for i in range(self.nrows)), Fraction(0))

    def inverse(self) -> "ExactMatrix":
        if not self.is_square:
            raise ValueError("only square matrices can be inverted")
        n = self.nrows
        a = [list(row) for row in self.rows]
        b = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
            if pivot is None:
                raise ValueError("matrix is singular")
            a[col], a[pivot] = a[pivot], a[col]
            b[col], b[pivot] = b[pivot], b[col]
            inv = 1 / a[col][col]
            a[col] = [x * inv for x in a[col]]
            b[col] = [x * inv for x in b[col]]
            for r in range(n):
                if r != col and a[r][col]:
                    f = a[r][col]
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                    b[r] = [x - f * y for x, y in zip(b[r], b[col])]
        return ExactMatrix(b)

    def rank(self) -> int:
        """Rank by Bareiss fraction-free elimination on a denominator-cleared copy."""
        a = []
        for row in self.rows:
            scale = lcm(*(x.denominator for x in row)) if row else 1
            a.append([int(x * scale) for x in row])
        m, n = self.nrows, self.ncols
        rank = 0
        prev = 1
        for col in range(n):
            pivot = next((r for r in range(rank, m) if a[r][col] != 0), None)
            if pivot is None:
                continue
            a[rank], a[pivot] = a[pivot], a[rank]
            for r in range(rank + 1, m):
                for c in range(col + 1, n):
                    a[r][c] = (a[r][c] * a[rank][col] - a[r][col] * a[rank][c]) // prev
                a[r][col] = 0
            prev = a[rank][col]
            rank += 1
            if rank == m:
                break
        return rank

    def kernel_dimension(self) -> int:
        return self.ncols - self.rank()

    def characteristic_polynomial(self) -> tuple[Fraction, ...]:
        """Monic coefficients, highest degree first (Faddeev-LeVerrier)."""
        if not self.is_square:
            raise ValueError("characteristic polynomial needs a square matrix")
        n = self.nrows
        coeffs = [Fraction(1)]
        aux = ExactMatrix.identity(n)
        power = None
        for k in range(1, n + 1):
            power = self * aux if power is not None else self
            ck = -power.trace() / k
            coeffs.append(ck)
            aux = power + ExactMatrix.identity(n).scaled(ck)
        return tuple(coeffs)

    def to_lists(self):
        return [[x for x in row] for row in self.rows]


def fixed_subspace_dim(matrix: ExactMatrix) -> int:
    """Dimension of the subspace fixed by the matrix, i.e. ker(matrix - 1)."""
    if not matrix.is_square:
        raise ValueError("fixed subspace needs a square matrix")
    return (matrix - ExactMatrix.identity(matrix.nrows)).kernel_dimension()


# --- Levelt companion construction ------------------------------------------

# Cyclotomic polynomials for the root-of-unity orders that can occur, as
# integer coefficient tuples, highest degree first.
_CYCLOTOMIC = {
    1: (1, -1),
    2: (1, 1),
    3: (1, 1, 1),
    4: (1, 0, 1),
    6: (1, -1, 1),
}

_PRIMITIVE_RESIDUES = {1: (0,), 2: (1,), 3: (1, 2), 4: (1, 3), 6: (1, 5)}


def _poly_mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return tuple(out)


def _char_poly_from_exponents(exponents) -> tuple[int, ...]:
    """Expand prod(t - exp(2*pi*i*e)) into an integer polynomial, or fail.

    Each exponent must give a root of unity of order 1, 2, 3, 4 or 6, and
    for orders 3, 4, 6 the two primitive roots must occur in full conjugate
    pairs; otherwise the product has no integer coefficients.
    """
    counts: dict[tuple[int, int], int] = {}
    for e in exponents:
        f = Fraction(e) % 1
        order = f.denominator
        if order not in _CYCLOTOMIC:
            raise ValueError(
                f"exponent {e} is a root of unity of order {order}; only orders "
                "1, 2, 3, 4, 6 give integer characteristic polynomials here"
            )
        key = (order, f.numerator % order)
        counts[key] = counts.get(key, 0) + 1
    poly = (1,)
    for order, residues in _PRIMITIVE_RESIDUES.items():
        mults = [counts.get((order, r), 0) for r in residues]
        if len(set(mults)) > 1:
            raise ValueError(
                "non-integral characteristic polynomial: exponents of order "
                f"{order} do not come in full conjugate pairs"
            )
        for _ in range(mults[0]):
            poly = _poly_mul(poly, _CYCLOTOMIC[order])
    return poly


def companion_matrix(coeffs) -> ExactMatrix:
    """Companion matrix of a monic polynomial given highest-degree-first."""
    if not coeffs or coeffs[0] != 1:
        raise ValueError("polynomial must be monic")
    d = len(coeffs) - 1
    if d == 0:
        raise ValueError("constant polynomials have no companion matrix")
    rows = [[0] * d for _ in range(d)]
    for i in range(1, d):
        rows[i][i - 1] = 1
    for i in range(d):
        rows[i][d - 1] = -coeffs[d - i]
    return ExactMatrix(rows)


def levelt_companion(a_exponents, b_exponents) -> tuple[ExactMatrix, ExactMatrix]:
    """Companion matrices of the characteristic polynomials at the two ends.

    For a rigid hypergeometric local system, Levelt's theorem says the
    monodromy representation may be generated by exactly these two matrices.
    """
    if len(a_exponents) != len(b_exponents):
        raise ValueError("exponent lists must have equal length")
    a_poly = _char_poly_from_exponents(a_exponents)
    b_poly = _char_poly_from_exponents(b_exponents)
    return companion_matrix(a_poly), companion_matrix(b_poly)


# --- the mirror-quartic system -----------------------------------------------

POINT_ZERO = "zero"
POINT_QUARTER = "quarter"
POINT_INFINITY = "infinity"
SPECIAL_POINTS = (POINT_ZERO, POINT_QUARTER, POINT_INFINITY)


@dataclass(frozen=True)
class TranscendentalSystem:
    """Local monodromy generators of the rank-3 transcendental local system."""

    around_zero: ExactMatrix
    around_quarter: ExactMatrix
    around_infinity: ExactMatrix
    rank: int = 3

    def generator(self, point: str) -> ExactMatrix:
        try:
            return {
                POINT_ZERO: self.around_zero,
                POINT_QUARTER: self.around_quarter,
                POINT_INFINITY: self.around_infinity,
            }[point]
        except KeyError:
            raise ValueError(
                f"unknown special point {point!r}; expected one of {SPECIAL_POINTS}"
            ) from None


# Known explicit representatives, used as hard checks on the construction.
_EXPECTED_INFINITY = ExactMatrix(((0, 0, -1), (1, 0, -1), (0, 1, -1)))
_EXPECTED_ZERO = ExactMatrix(((3, 1, 0), (-3, 0, 1), (1, 0, 0)))
_EXPECTED_QUARTER = ExactMatrix(((1, 0, -4), (0, 1, 2), (0, 0, -1)))


@lru_cache(maxsize=1)
def standard_system() -> TranscendentalSystem:
    """The monodromy of the 3F2(1/4, 2/4, 3/4; 1, 1) system, exactly.

    Local exponents are (1/4, 1/2, 3/4) at infinity and (1, 1, 1) at zero,
    so the characteristic polynomials are t^3 + t^2 + t + 1 and (t - 1)^3.
    """
    a, b = levelt_companion(
        (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)), (1, 1, 1)
    )
    system = TranscendentalSystem(
        around_zero=b.inverse(),
        around_quarter=a.inverse() * b,
        around_infinity=a,
    )
    if (
        system.around_infinity != _EXPECTED_INFINITY
        or system.around_zero != _EXPECTED_ZERO
        or system.around_quarter != _EXPECTED_QUARTER
    ):
        raise AssertionError("Levelt construction disagrees with the known representatives")
    failures = [name for name, ok in relation_report(system).items() if not ok]
    if failures:
        raise AssertionError(f"monodromy relations failed: {failures}")
    return system


def relation_report(system: TranscendentalSystem | None = None) -> dict[str, bool]:
    """Exact checks of the defining relations of the three generators."""
    if system is None:
        system = standard_system()
    ident = ExactMatrix.identity(system.rank)
    zero_mat = ExactMatrix.zero(system.rank)
    nilpotent = system.around_zero - ident
    return {
        "quarter*zero*infinity=1": system.around_quarter * system.around_zero * system.around_infinity == ident,
        "infinity^4=1": system.around_infinity**4 == ident,
        "(zero-1)^3=0": nilpotent**3 == zero_mat,
        "(zero-1)^2!=0": nilpotent**2 != zero_mat,
        "quarter^2=1": system.around_quarter**2 == ident,
        "charpoly(infinity)=t^3+t^2+t+1": system.around_infinity.characteristic_polynomial()
        == (Fraction(1), Fraction(1), Fraction(1), Fraction(1)),
    }


@lru_cache(maxsize=None)
def r_value(point: str, ram_index: int) -> int:
    """Local cohomology drop at a preimage of a special point.

    Rank of the system minus the dimension fixed by the local monodromy,
    which for a cover ramified to order ``ram_index`` is the corresponding
    generator raised to that power.  Computed by exact linear algebra; the
    closed forms 4 - hcf(y, 4), 2 - hcf(z, 2) and the constant 2 serve as
    independent test oracles, never as the implementation.
    """
    if ram_index < 1:
        raise ValueError("ramification index must be positive")
    system = standard_system()
    return system.rank - fixed_subspace_dim(system.generator(point) ** ram_index)


def h1_pullback(profile: RamificationProfile) -> int:
    """h^1 of the pulled-back local system, pushed onto the base line.

    The counted-with-drops Euler formula on a genus-0 base: the sum of the
    local drops over every preimage of the three special points, minus twice
    the rank.  Ramification away from those points pulls back to trivial
    local monodromy and contributes nothing.
    """
    total = sum(r_value(POINT_ZERO, e) for e in profile.over_zero)
    total += sum(r_value(POINT_INFINITY, e) for e in profile.over_infinity)
    total += sum(r_value(POINT_QUARTER, e) for e in profile.over_quarter)
    return total - 2 * standard_system().rank


def matrix_power_report(point: str, ram_index: int) -> dict:
    """Data behind one local monodromy computation, for the CLI."""
    system = standard_system()
    power = system.generator(point) ** ram_index
    return {
        "point": point,
        "index": ram_index,
        "matrix_power": power.to_lists(),
        "fixed_dimension": fixed_subspace_dim(power),
        "r_value": system.rank - fixed_subspace_dim(power),
    }
