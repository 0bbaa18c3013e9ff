"""Exact integer linear algebra for small bounded-entry matrices.

Everything here works over Python's arbitrary-precision integers, so results
are exact for any dimension and entry bound; there is no overflow to guard
against.  Determinants use fraction-free (Bareiss) elimination, characteristic
polynomials are recovered by exact interpolation of det(x*I - M), and integer
eigenvalues come from the rational-root theorem: the characteristic polynomial
is monic with integer coefficients, so every rational eigenvalue is an integer
dividing its constant term, and no eigenvalue of a matrix with entries bounded
by k can exceed n*k in modulus.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, isqrt
from typing import Sequence


@dataclass(frozen=True)
class IntMatrix:
    """An n-by-n matrix of exact integers, stored row-major.

    ``bound``, when present, promises every entry has absolute value at most
    ``bound`` (validated on construction).
    """

    n: int
    entries: tuple[int, ...]
    bound: int | None = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("dimension must be >= 1")
        object.__setattr__(self, "entries", tuple(int(e) for e in self.entries))
        if len(self.entries) != self.n * self.n:
            raise ValueError(f"expected {self.n * self.n} entries, got {len(self.entries)}")
        if self.bound is not None:
            if self.bound < 1:
                raise ValueError("bound must be >= 1 when present")
            worst = max(abs(e) for e in self.entries)
            if worst > self.bound:
                raise ValueError(f"entry {worst} exceeds bound {self.bound}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], bound: int | None = None) -> "IntMatrix":
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        return cls(n, tuple(e for row in rows for e in row), bound)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)), bound=1)

    @classmethod
    def filled(cls, n: int, value: int) -> "IntMatrix":
        b = abs(value) if value != 0 else None
        return cls(n, (value,) * (n * n), bound=b)

    def rows(self) -> list[list[int]]:
        n = self.n
        return [list(self.entries[i * n : (i + 1) * n]) for i in range(n)]

    def trace(self) -> int:
        return sum(self.entries[i * self.n + i] for i in range(self.n))

    def max_abs_entry(self) -> int:
        return max(abs(e) for e in self.entries)

    def effective_bound(self) -> int:
        """The declared bound, or the max absolute entry when none was declared."""
        return self.bound if self.bound is not None else self.max_abs_entry()

    def shift_diagonal(self, lam: int) -> "IntMatrix":
        """M - lam*I, with no declared bound (entries may exceed the original one)."""
        n = self.n
        shifted = list(self.entries)
        for i in range(n):
            shifted[i * n + i] -= lam
        return IntMatrix(n, tuple(shifted))

    def minor_matrix(self, i: int, j: int) -> "IntMatrix":
        """Delete row i and column j (1-based); requires n >= 2."""
        n = self.n
        if n < 2:
            raise ValueError("minor of a 1x1 matrix is undefined")
        if not (1 <= i <= n and 1 <= j <= n):
            raise IndexError(f"indices ({i},{j}) out of range for n={n}")
        sub = [
            self.entries[r * n + c]
            for r in range(n)
            if r != i - 1
            for c in range(n)
            if c != j - 1
        ]
        return IntMatrix(n - 1, tuple(sub))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if not isinstance(other, IntMatrix) or self.n != other.n:
            return NotImplemented
        n = self.n
        a, b = self.entries, other.entries
        out = [0] * (n * n)
        for i in range(n):
            for j in range(n):
                out[i * n + j] = sum(a[i * n + t] * b[t * n + j] for t in range(n))
        return IntMatrix(n, tuple(out))


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients constant-term first."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("polynomial needs at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


@dataclass(frozen=True)
class LinearForm:
    """Non-constant linear integer polynomial slope*x + intercept."""

    slope: int
    intercept: int

    def __post_init__(self) -> None:
        if self.slope == 0:
            raise ValueError("linear form must be non-constant (slope != 0)")

    def __call__(self, x):
        return self.slope * x + self.intercept

    def max_abs_on(self, k: int) -> int:
        """Largest |value| attained on the integer interval [-k, k]."""
        return abs(self.slope) * k + abs(self.intercept)


@dataclass(frozen=True)
class GershgorinDisk:
    """Complex disk centered at a diagonal entry with the off-diagonal row sum as radius."""

    center: int
    radius: int

    def contains(self, x) -> bool:
        return abs(x - self.center) <= self.radius


def det(m: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination.

    All divisions performed are exact, so the computation stays in the
    integers; intermediate entries are bounded by minors of the input.
    """
    n = m.n
    a = m.rows()
    sign = 1
    prev = 1
    for col in range(n - 1):
        pivot_row = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot_row is None:
            return 0
        if pivot_row != col:
            a[col], a[pivot_row] = a[pivot_row], a[col]
            sign = -sign
        pivot = a[col][col]
        for r in range(col + 1, n):
            lead = a[r][col]
            row_r, row_c = a[r], a[col]
            for c in range(col + 1, n):
                row_r[c] = (pivot * row_r[c] - lead * row_c[c]) // prev
            row_r[col] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def cofactor(m: IntMatrix, i: int, j: int) -> int:
    """Determinant of the minor with row i and column j removed (1-based).

    This is the unsigned minor determinant; the checkerboard sign
    (-1)**(i+j) is applied by :func:`adjugate`, not here.
    """
    return det(m.minor_matrix(i, j))


def adjugate(m: IntMatrix) -> IntMatrix:
    """Adjugate matrix: entry (i, j) is (-1)**(i+j) times the (j, i) minor.

    Satisfies M @ adjugate(M) == det(M) * I exactly, for every integer matrix.
    """
    n = m.n
    if n < 2:
        raise ValueError("adjugate requires n >= 2")
    out = [0] * (n * n)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            s = -1 if (i + j) % 2 else 1
            out[(i - 1) * n + (j - 1)] = s * cofactor(m, j, i)
    return IntMatrix(n, tuple(out))


def char_poly(m: IntMatrix) -> IntPolynomial:
    """Characteristic polynomial det(x*I - M), monic with integer coefficients.

    Evaluates the determinant exactly at x = 0..n and interpolates through
    Newton forward differences.  The divisions by j! are exact because the
    target polynomial has integer coefficients; this is asserted.
    """
    n = m.n
    values = [_det_shifted(m, x) for x in range(n + 1)]
    diffs = [values[0]]
    level = values
    for _ in range(n):
        level = [level[i + 1] - level[i] for i in range(len(level) - 1)]
        diffs.append(level[0])
    coeffs = [Fraction(0)] * (n + 1)
    basis = [Fraction(1)]  # coefficients of prod_{i<j} (x - i), constant first
    for j in range(n + 1):
        scale = Fraction(diffs[j], factorial(j))
        for idx, b in enumerate(basis):
            coeffs[idx] += scale * b
        basis = [Fraction(0)] + basis
        for idx in range(len(basis) - 1):
            basis[idx] -= j * basis[idx + 1]
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise AssertionError("interpolation of an integer polynomial produced a non-integer")
        out.append(int(c))
    return IntPolynomial(tuple(out))


def _det_shifted(m: IntMatrix, x: int) -> int:
    """det(x*I - M), exact."""
    n = m.n
    neg = [-e for e in m.entries]
    for i in range(n):
        neg[i * n + i] += x
    return det(IntMatrix(n, tuple(neg)))


def integer_eigenvalues(m: IntMatrix) -> list[int]:
    """All distinct integer eigenvalues, ascending.

    Candidates are 0 (when the characteristic polynomial has a vanishing
    constant term) plus the divisors d of the constant term of the
    x-power-stripped characteristic polynomial with |d| <= n*k, since no
    eigenvalue exceeds n*k in modulus.  Each candidate is confirmed by exact
    polynomial evaluation.
    """
    limit = m.n * m.effective_bound()
    coeffs = list(char_poly(m).coeffs)
    roots: list[int] = []
    stripped = 0
    while coeffs[0] == 0 and len(coeffs) > 1:
        coeffs.pop(0)
        stripped += 1
    if stripped:
        roots.append(0)
    if len(coeffs) > 1:
        poly = IntPolynomial(tuple(coeffs))
        c0 = abs(coeffs[0])
        for d in range(1, limit + 1):
            if c0 % d:
                continue
            if poly(d) == 0:
                roots.append(d)
            if poly(-d) == 0:
                roots.append(-d)
    return sorted(roots)


def discriminant_2x2(m: IntMatrix) -> int:
    """(a - d)**2 + 4*b*c for [[a, b], [c, d]], exact."""
    if m.n != 2:
        raise ValueError("discriminant_2x2 requires a 2x2 matrix")
    a, b, c, d = m.entries
    return (a - d) ** 2 + 4 * b * c


def has_real_eigenvalues_2x2(m: IntMatrix) -> bool:
    """True iff both eigenvalues are real, i.e. the discriminant is >= 0."""
    return discriminant_2x2(m) >= 0


def real_eigenvalues_2x2(m: IntMatrix) -> tuple[float, float]:
    """Both real eigenvalues (trace +- sqrt(discriminant))/2, ascending."""
    disc = discriminant_2x2(m)
    if disc < 0:
        raise ValueError("matrix has complex eigenvalues")
    t = m.trace()
    root = disc**0.5
    return ((t - root) / 2.0, (t + root) / 2.0)


def is_perfect_square(x: int) -> bool:
    """Exact integer perfect-square test (Newton/isqrt with verification)."""
    if x < 0:
        return False
    s = isqrt(x)
    return s * s == x


def has_integer_eigenvalues_2x2(m: IntMatrix) -> bool:
    """True iff the 2x2 matrix has integer eigenvalues.

    Equivalent to the discriminant being a perfect square: the discriminant
    is congruent to trace**2 mod 4, so its square root automatically matches
    the trace's parity and both roots (t +- s)/2 are integers.
    """
    return is_perfect_square(discriminant_2x2(m))


def verify_adjugate_identity(m: IntMatrix) -> bool:
    """Check a11*a22 - a12*a21 == det(M) * det(Z) exactly.

    Here a_ij are unsigned minor determinants and Z is M with its first two
    rows and columns deleted (for n == 3, det(Z) is just the (3,3) entry).
    The identity is polynomial in the entries, so it holds for every integer
    matrix, including singular ones; a correct implementation always returns
    True.
    """
    n = m.n
    if n < 3:
        raise ValueError("identity requires n >= 3")
    lhs = cofactor(m, 1, 1) * cofactor(m, 2, 2) - cofactor(m, 1, 2) * cofactor(m, 2, 1)
    z = [
        m.entries[r * n + c]
        for r in range(2, n)
        for c in range(2, n)
    ]
    det_z = det(IntMatrix(n - 2, tuple(z))) if n > 2 else 1
    return lhs == det(m) * det_z


def gershgorin_disks(m: IntMatrix) -> list[GershgorinDisk]:
    """One disk per row: center the diagonal entry, radius the off-diagonal abs sum.

    Every eigenvalue lies in the union of the disks; with entries bounded by
    k this puts every eigenvalue within n*k of the origin.
    """
    n = m.n
    disks = []
    for i in range(n):
        row = m.entries[i * n : (i + 1) * n]
        radius = sum(abs(e) for j, e in enumerate(row) if j != i)
        disks.append(GershgorinDisk(center=row[i], radius=radius))
    return disks


def eigenvalue_modulus_bound(m: IntMatrix) -> int:
    """n*k bound on every complex eigenvalue's modulus."""
    return m.n * m.effective_bound()
