"""Exact counting of bounded integer matrices with spectral properties.

The 2x2 counters all reduce to the pair-product distribution
r(m) = #{(x, y) in [-k, k]^2 : x*y = m}: a 2x2 matrix [[a, b], [c, d]] has
eigenvalue lam exactly when (a - lam)(d - lam) = b*c, is singular when
a*d = b*c, has an integer spectrum when (a - d)**2 + 4*b*c is a perfect
square, and a real spectrum when that discriminant is >= 0.  r is computed
once by a divisor sieve (O(k^2) time, one int32 array over [0, k^2]) and the
counters convolve against it; every count is an exact integer and every fast
counter is gated by a brute-force oracle on its overlap domain.

Brute-force enumeration over all (2k+1)**(n*n) matrices is the ground truth
for everything else, and is budget-capped rather than silently slow.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Iterator, Sequence

import numpy as np

from . import properties
from .budgets import (
    BRUTE_FORCE_MATRIX_CAP,
    FAST_2X2_K_CAP,
    INTEGER_EIG_K_CAP,
    check_cap,
    check_memory,
)
from .linalg import IntMatrix, LinearForm, integer_eigenvalues
from .properties import MatrixProperty

_CHUNK = 1 << 22  # elements per numpy chunk in the big reductions
_BLOCK_ROWS = 1 << 20  # matrices per enumeration block


@dataclass(frozen=True)
class CountRecord:
    """An exact count of matrices with a property, out of (2k+1)**(n*n)."""

    property: str
    n: int
    k: int
    count: int
    total: int

    def __post_init__(self) -> None:
        expected = (2 * self.k + 1) ** (self.n * self.n)
        if self.total != expected:
            raise ValueError(f"total must be (2k+1)^(n^2) = {expected}, got {self.total}")
        if not 0 <= self.count <= self.total:
            raise ValueError("count must lie in [0, total]")

    @property
    def probability(self) -> Fraction:
        return Fraction(self.count, self.total)

    @property
    def probability_float(self) -> float:
        return float(self.probability)


@dataclass(eq=False)
class ProductDistribution:
    """Counting measure m -> #{(x, y) : (x - shift)(y - shift) = m} over [-k, k]^2.

    For shift == 0 the distribution is even in m and only the m >= 0 half is
    stored.  Counts fit int32 (the largest is 4k+1 at m=0); sums are reduced
    in int64 or Python ints.
    """

    k: int
    shift: int
    _half: np.ndarray | None = field(default=None, repr=False)
    _dense: np.ndarray | None = field(default=None, repr=False)

    @property
    def support_radius(self) -> int:
        return (self.k + abs(self.shift)) ** 2

    @property
    def total_pairs(self) -> int:
        return (2 * self.k + 1) ** 2

    def count(self, m: int) -> int:
        if abs(m) > self.support_radius:
            return 0
        if self._half is not None:
            return int(self._half[abs(m)])
        return int(self._dense[m + self.support_radius])

    def items(self) -> Iterator[tuple[int, int]]:
        """(m, count) pairs over the nonzero support."""
        if self._half is not None:
            for m in range(self.support_radius + 1):
                c = int(self._half[m])
                if c:
                    yield m, c
                    if m:
                        yield -m, c
        else:
            r = self.support_radius
            for idx in np.flatnonzero(self._dense):
                yield int(idx) - r, int(self._dense[idx])


def _pair_product_half(k: int) -> np.ndarray:
    """r(m) for m in [0, k^2], int32: r(0) = 4k+1, r(m) = 2 * #divisor pairs."""
    check_memory("product-distribution memory", 4 * (k * k + 1))
    t = np.zeros(k * k + 1, dtype=np.int32)
    for d in range(1, k + 1):
        t[d : d * k + 1 : d] += 1
    t *= 2
    t[0] = 4 * k + 1
    return t


def product_distribution(k: int, shift: int = 0) -> ProductDistribution:
    """Build the product distribution; memory-budgeted dense storage."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if shift == 0:
        return ProductDistribution(k, 0, _half=_pair_product_half(k))
    radius = (k + abs(shift)) ** 2
    check_memory("product-distribution memory", 8 * (2 * radius + 1))
    u = np.arange(-k, k + 1, dtype=np.int64) - shift
    dense = np.zeros(2 * radius + 1, dtype=np.int64)
    rows = max(1, _CHUNK // (2 * k + 1))
    for lo in range(0, 2 * k + 1, rows):
        prods = np.multiply.outer(u[lo : lo + rows], u).ravel()
        dense += np.bincount(prods + radius, minlength=2 * radius + 1)
    return ProductDistribution(k, shift, _dense=dense)


def _sum_sq(half: np.ndarray) -> int:
    """sum over all signed m of r(m)^2, from the half array."""
    total = int(half[0]) ** 2
    for lo in range(1, half.shape[0], _CHUNK):
        chunk = half[lo : lo + _CHUNK].astype(np.int64)
        total += 2 * int(np.dot(chunk, chunk))
    return total


def count_singular_2x2(k: int, *, max_k: int = FAST_2X2_K_CAP) -> CountRecord:
    """#singular 2x2 matrices = sum_m r(m)**2 (solutions of a*d = b*c)."""
    check_cap("fast 2x2 counter k-cap", k, max_k)
    half = _pair_product_half(k)
    return CountRecord("singular", 2, k, _sum_sq(half), (2 * k + 1) ** 4)


def _lambda_count_from_half(k: int, lam: int, half: np.ndarray) -> int:
    """#{(a,b,c,d) : (a - lam)(d - lam) = b*c} via r-lookups on clipped products."""
    kk = k * k
    u = np.arange(-k, k + 1, dtype=np.int64) - lam
    total = 0
    rows = max(1, _CHUNK // (2 * k + 1))
    for lo in range(0, 2 * k + 1, rows):
        prods = np.abs(np.multiply.outer(u[lo : lo + rows], u).ravel())
        prods = prods[prods <= kk]
        total += int(half[prods].sum(dtype=np.int64))
    return total


def count_lambda_eig_2x2(k: int, lam: int, *, max_k: int = FAST_2X2_K_CAP) -> CountRecord:
    """#2x2 matrices with eigenvalue lam; zero without work when |lam| > 2k."""
    name = f"lambda_eig({lam})"
    total = (2 * k + 1) ** 4
    if abs(lam) > 2 * k:
        return CountRecord(name, 2, k, 0, total)
    check_cap("fast 2x2 counter k-cap", k, max_k)
    half = _pair_product_half(k)
    return CountRecord(name, 2, k, _lambda_count_from_half(k, lam, half), total)


def lambda_eig_counts_2x2(k: int, *, max_k: int = FAST_2X2_K_CAP) -> np.ndarray:
    """Counts for every lam in [-2k, 2k], sharing one sieve (index lam + 2k).

    Uses the negation symmetry count(lam) == count(-lam).
    """
    check_cap("fast 2x2 counter k-cap", k, max_k)
    half = _pair_product_half(k)
    out = np.empty(4 * k + 1, dtype=np.int64)
    for lam in range(0, 2 * k + 1):
        c = _lambda_count_from_half(k, lam, half)
        out[2 * k + lam] = c
        out[2 * k - lam] = c
    return out


def count_integer_eig_2x2(k: int, *, max_k: int = INTEGER_EIG_K_CAP) -> CountRecord:
    """#2x2 matrices whose discriminant (a-d)**2 + 4bc is a perfect square.

    Iterates s = a - d (weight 2k+1-|s| choices of (a, d)) and scans the
    perfect squares u**2 = s**2 + 4m reachable with |m| <= k^2 and u matching
    s's parity, accumulating r(m) for each.
    """
    check_cap("fast 2x2 integer-eig k-cap", k, max_k)
    half = _pair_product_half(k)
    kk = k * k
    total = 0
    for s in range(0, 2 * k + 1):
        ss = s * s
        lo2 = ss - 4 * kk
        if lo2 <= 0:
            umin = s % 2
        else:
            umin = isqrt(lo2)
            if umin * umin < lo2:
                umin += 1
            if umin % 2 != s % 2:
                umin += 1
        umax = isqrt(ss + 4 * kk)
        if umax % 2 != s % 2:
            umax -= 1
        if umax < umin:
            continue
        u = np.arange(umin, umax + 1, 2, dtype=np.int64)
        m = np.abs((u * u - ss) >> 2)
        inner = int(half[m].sum(dtype=np.int64))
        weight = 2 * k + 1 - s
        total += weight * inner if s == 0 else 2 * weight * inner
    return CountRecord("integer_eig", 2, k, total, (2 * k + 1) ** 4)


def count_real_eig_2x2(k: int, *, max_k: int = FAST_2X2_K_CAP) -> CountRecord:
    """#2x2 matrices with (a-d)**2 + 4bc >= 0, via suffix sums of r.

    For s = a - d the (b, c) pairs allowed are those with b*c >= -s^2/4; the
    thresholds floor(s^2/4)+1 are monotone in |s|, so one reverse sweep over
    the half array yields every needed suffix sum without materializing a
    cumulative array.
    """
    check_cap("fast 2x2 counter k-cap", k, max_k)
    half = _pair_product_half(k)
    kk = k * k
    pairs = (2 * k + 1) ** 2
    total = 0
    suffix = 0  # sum_{m >= j_prev} r(m)
    j_prev = kk + 1
    for s in range(2 * k, -1, -1):
        j = s * s // 4 + 1
        if j < j_prev:
            suffix += int(half[j:j_prev].sum(dtype=np.int64))
            j_prev = j
        allowed = pairs - suffix
        weight = 2 * k + 1 - s
        total += weight * allowed if s == 0 else 2 * weight * allowed
    return CountRecord("real_eig", 2, k, total, (2 * k + 1) ** 4)


def count_solutions_linearforms(
    l1: LinearForm, l2: LinearForm, l3: LinearForm, l4: LinearForm, k: int
) -> int:
    """Exact number of (a,b,c,d) in [-k,k]^4 with L1(a)L2(b) = L3(c)L4(d).

    Builds the value distribution of each side (O(k^2) pairs) and sums
    products of matching counts.  Falls back from int64 to Python-int keys
    when a form can exceed 2**31 on the range, keeping products exact.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    forms = (l1, l2, l3, l4)
    check_memory("linear-form counter memory", 2 * 8 * (2 * k + 1) ** 2)
    big = max(f.max_abs_on(k) for f in forms) > 2**31
    if big:
        left = _form_distribution_py(l1, l2, k)
        right = _form_distribution_py(l3, l4, k)
        return sum(c * right.get(v, 0) for v, c in left.items())
    left_vals, left_counts = _form_distribution_np(l1, l2, k)
    right = dict(zip(*(arr.tolist() for arr in _form_distribution_np(l3, l4, k))))
    return sum(
        int(c) * right.get(int(v), 0) for v, c in zip(left_vals.tolist(), left_counts.tolist())
    )


def _form_distribution_np(fa: LinearForm, fb: LinearForm, k: int):
    x = np.arange(-k, k + 1, dtype=np.int64)
    prods = np.multiply.outer(fa.slope * x + fa.intercept, fb.slope * x + fb.intercept)
    return np.unique(prods.ravel(), return_counts=True)


def _form_distribution_py(fa: LinearForm, fb: LinearForm, k: int) -> dict[int, int]:
    from collections import Counter

    va = [fa(x) for x in range(-k, k + 1)]
    vb = [fb(x) for x in range(-k, k + 1)]
    dist: Counter[int] = Counter()
    for a in va:
        for b in vb:
            dist[a * b] += 1
    return dict(dist)


def brute_force_count(
    n: int,
    k: int,
    prop: MatrixProperty,
    *,
    max_matrices: int = BRUTE_FORCE_MATRIX_CAP,
) -> CountRecord:
    """Ground-truth counter: test every matrix in the (2k+1)**(n*n) space.

    Uses the property's vectorized kernel when it supports n (enumerating
    entry blocks with numpy), otherwise a scalar loop over itertools.product.
    """
    total = (2 * k + 1) ** (n * n)
    check_cap("brute-force matrix cap", total, max_matrices)
    if properties.has_batch(prop, n):
        count = _brute_force_batch(n, k, prop)
    else:
        count = 0
        for combo in itertools.product(range(-k, k + 1), repeat=n * n):
            if prop.scalar(IntMatrix(n, combo, bound=k if k >= 1 else None)):
                count += 1
    return CountRecord(prop.name, n, k, count, total)


def _brute_force_batch(n: int, k: int, prop: MatrixProperty) -> int:
    width = 2 * k + 1
    cells = n * n
    # lead entries iterated in Python, the trailing ones expanded per block
    tail = 1
    tail_cells = 0
    while tail_cells < cells and tail * width <= _BLOCK_ROWS:
        tail *= width
        tail_cells += 1
    lead_cells = cells - tail_cells
    tail_block = np.empty((tail, cells), dtype=np.int64)
    rng = np.arange(-k, k + 1, dtype=np.int64)
    for j in range(tail_cells):
        reps = width**j
        tiles = tail // (reps * width)
        tail_block[:, lead_cells + j] = np.tile(np.repeat(rng, reps), tiles)
    count = 0
    for lead in itertools.product(range(-k, k + 1), repeat=lead_cells):
        for j, v in enumerate(lead):
            tail_block[:, j] = v
        count += int(prop.batch(tail_block, n, k).sum())
    return count


def count_integer_eig_any_n(
    n: int, k: int, *, max_matrices: int = BRUTE_FORCE_MATRIX_CAP
) -> CountRecord:
    """Exact #matrices with at least one integer eigenvalue, any dimension.

    n = 2 and n = 3 run vectorized; larger n falls back to per-matrix
    integer-eigenvalue extraction and is only feasible at tiny budgets.
    """
    total = (2 * k + 1) ** (n * n)
    check_cap("brute-force matrix cap", total, max_matrices)
    prop = properties.integer_eig()
    if properties.has_batch(prop, n):
        record = brute_force_count(n, k, prop, max_matrices=max_matrices)
        return CountRecord("integer_eig", n, k, record.count, total)
    count = 0
    for combo in itertools.product(range(-k, k + 1), repeat=n * n):
        if integer_eigenvalues(IntMatrix(n, combo, bound=k if k >= 1 else None)):
            count += 1
    return CountRecord("integer_eig", n, k, count, total)


@dataclass(frozen=True)
class GrowthProbe:
    """Least-squares exponent of log(count) against log(k)."""

    property: str
    points: tuple[tuple[int, int], ...]
    exponent: float
    intercept: float
    residuals: tuple[float, ...]
    epsilon_margin: float = 0.35

    def within(self, target_exponent: float) -> bool:
        """Whether the fitted exponent is target +- epsilon_margin."""
        return abs(self.exponent - target_exponent) <= self.epsilon_margin


def growth_probe(records: Sequence[CountRecord]) -> GrowthProbe:
    """Fit the growth exponent of a family of counts with increasing k."""
    if len(records) < 3:
        raise ValueError("growth probe needs at least 3 records")
    names = {r.property for r in records}
    dims = {r.n for r in records}
    if len(names) != 1 or len(dims) != 1:
        raise ValueError("growth probe needs records of one property and dimension")
    ks = [r.k for r in records]
    if any(b <= a for a, b in zip(ks, ks[1:])):
        raise ValueError("k values must be strictly increasing")
    if any(r.count <= 0 for r in records):
        raise ValueError("counts must be positive to fit a growth exponent")
    logk = np.log([float(r.k) for r in records])
    logc = np.log([float(r.count) for r in records])
    slope, intercept = np.polyfit(logk, logc, 1)
    resid = logc - (slope * logk + intercept)
    return GrowthProbe(
        property=records[0].property,
        points=tuple((r.k, r.count) for r in records),
        exponent=float(slope),
        intercept=float(intercept),
        residuals=tuple(float(x) for x in resid),
    )
