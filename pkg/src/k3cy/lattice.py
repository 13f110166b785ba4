"""Exact integer-lattice arithmetic.

Gram matrices, direct sums, Smith normal form with unimodular transforms,
discriminant groups as invariant-factor lists, and the Euler-totient bound
on orders of lattice automorphisms acting irreducibly on a lattice of a
given rank.  Everything runs over arbitrary-precision integers; there are
no tolerance knobs anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .gram_tables import STANDARD_GRAMS, GRAM_TABLE_VERSION  # noqa: F401


class LatticeError(ValueError):
    """Raised for malformed or degenerate lattice data."""


@dataclass(frozen=True)
class IntegerLattice:
    """A lattice given by a symmetric integer Gram matrix."""

    gram: tuple[tuple[int, ...], ...]
    label: str = ""

    @property
    def rank(self) -> int:
        return len(self.gram)

    def determinant(self) -> int:
        return integer_determinant(self.gram)

    def signature(self) -> tuple[int, int]:
        return gram_signature(self.gram)

    def is_nondegenerate(self) -> bool:
        return self.determinant() != 0


def make_lattice(rows, label: str = "") -> IntegerLattice:
    gram = tuple(tuple(int(x) for x in row) for row in rows)
    n = len(gram)
    if any(len(row) != n for row in gram):
        raise LatticeError("Gram matrix must be square")
    for i in range(n):
        for j in range(i + 1, n):
            if gram[i][j] != gram[j][i]:
                raise LatticeError("Gram matrix must be symmetric")
    return IntegerLattice(gram, label)


def build_standard(name: str) -> IntegerLattice:
    """One of the built-in lattices: H, E8, minus4, or M2 (their direct sum H+E8+E8+<-4>)."""
    try:
        gram = STANDARD_GRAMS[name]
    except KeyError:
        raise LatticeError(
            f"unknown lattice {name!r}; known names: {sorted(STANDARD_GRAMS)}"
        ) from None
    return IntegerLattice(gram, name)


def direct_sum(a: IntegerLattice, b: IntegerLattice) -> IntegerLattice:
    """Orthogonal direct sum; rank adds, determinant multiplies."""
    n, m = a.rank, b.rank
    gram = [[0] * (n + m) for _ in range(n + m)]
    for i in range(n):
        for j in range(n):
            gram[i][j] = a.gram[i][j]
    for i in range(m):
        for j in range(m):
            gram[n + i][n + j] = b.gram[i][j]
    label = f"{a.label}+{b.label}" if a.label and b.label else ""
    return IntegerLattice(tuple(tuple(row) for row in gram), label)


def integer_determinant(matrix) -> int:
    """Determinant of a square integer matrix by fraction-free (Bareiss) elimination."""
    a = [list(map(int, row)) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for i in range(n - 1):
        pivot_row = next((r for r in range(i, n) if a[r][i] != 0), None)
        if pivot_row is None:
            return 0
        if pivot_row != i:
            a[i], a[pivot_row] = a[pivot_row], a[i]
            sign = -sign
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) // prev
            a[r][i] = 0
        prev = a[i][i]
    return sign * a[n - 1][n - 1]


def gram_signature(gram) -> tuple[int, int]:
    """(positive, negative) inertia of a nondegenerate symmetric matrix.

    Symmetric congruence diagonalization over exact rationals (Sylvester's
    law of inertia); a zero diagonal pivot is repaired by adding a suitable
    row and column, which is again a congruence.
    """
    n = len(gram)
    a = [[Fraction(x) for x in row] for row in gram]
    pos = neg = 0
    for i in range(n):
        if a[i][i] == 0:
            j = next((j for j in range(i + 1, n) if a[i][j] != 0), None)
            if j is None:
                raise LatticeError("degenerate Gram matrix")
            sign = 1 if 2 * a[i][j] + a[j][j] != 0 else -1
            for c in range(n):
                a[i][c] += sign * a[j][c]
            for r in range(n):
                a[r][i] += sign * a[r][j]
        pivot = a[i][i]
        if pivot > 0:
            pos += 1
        else:
            neg += 1
        for r in range(i + 1, n):
            f = a[r][i] / pivot
            if f:
                for c in range(n):
                    a[r][c] -= f * a[i][c]
                for c in range(n):
                    a[c][r] -= f * a[c][i]
    return pos, neg


def smith_normal_form(matrix):
    """Smith normal form with transforms: returns (d, u, v) with u*m*v = d.

    d is diagonal with nonnegative entries in a divisibility chain
    d1 | d2 | ...; u and v are unimodular.  Pivoting always picks the entry
    of smallest nonzero absolute value, which keeps coefficient growth down.
    """
    a = [[int(x) for x in row] for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    u = [[int(i == j) for j in range(rows)] for i in range(rows)]
    v = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, q):
        for row in a:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    while t < min(rows, cols):
        pivot = None
        for r in range(t, rows):
            for c in range(t, cols):
                if a[r][c] != 0 and (
                    pivot is None or abs(a[r][c]) < abs(a[pivot[0]][pivot[1]])
                ):
                    pivot = (r, c)
        if pivot is None:
            break
        if pivot != (t, t):
            swap_rows(t, pivot[0])
            swap_cols(t, pivot[1])
        if a[t][t] < 0:
            negate_row(t)
        p = a[t][t]
        cleared = True
        for r in range(t + 1, rows):
            if a[r][t]:
                add_row(t, r, -(a[r][t] // p))
                if a[r][t]:
                    cleared = False
        for c in range(t + 1, cols):
            if a[t][c]:
                add_col(t, c, -(a[t][c] // p))
                if a[t][c]:
                    cleared = False
        if not cleared:
            continue
        bad_row = None
        for r in range(t + 1, rows):
            if any(a[r][c] % p for c in range(t + 1, cols)):
                bad_row = r
                break
        if bad_row is not None:
            add_row(bad_row, t, 1)
            continue
        t += 1

    d = tuple(tuple(row) for row in a)
    return d, tuple(tuple(row) for row in u), tuple(tuple(row) for row in v)


def invariant_factors(matrix) -> list[int]:
    """Nonzero diagonal of the Smith normal form, in divisibility order."""
    d, _, _ = smith_normal_form(matrix)
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0)) if d[i][i]]


def discriminant_group(lattice: IntegerLattice) -> list[int]:
    """Invariant factors > 1 of the cokernel of the Gram matrix.

    An empty list means the lattice is unimodular.
    """
    if lattice.determinant() == 0:
        raise LatticeError("degenerate Gram matrix has no discriminant group")
    return [f for f in invariant_factors(lattice.gram) if f > 1]


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("totient needs a positive argument")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def admissible_automorphism_orders(rank_bound: int) -> list[int]:
    """All n with phi(n) dividing rank_bound.

    The scan is finite: Vaidya's bound phi(n) >= sqrt(n) for n > 2, n != 6
    means phi(n) <= rank_bound forces n <= max(rank_bound^2, 6).
    """
    if rank_bound < 1:
        raise ValueError("rank bound must be positive")
    cutoff = max(rank_bound * rank_bound, 6)
    return [n for n in range(1, cutoff + 1) if rank_bound % euler_phi(n) == 0]


# The orthogonal complement of M2 inside the full K3 lattice has rank 3 and
# discriminant group Z/4Z.  Its Gram matrix is not constructed here, so this
# is recorded as a known constant rather than computed.
COMPLEMENT_RANK = 3
COMPLEMENT_DISCRIMINANT_GROUP = [4]
