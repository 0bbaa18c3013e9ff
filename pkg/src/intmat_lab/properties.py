"""Spectral property predicates, in scalar and vectorized form.

A :class:`MatrixProperty` pairs a per-matrix predicate with an optional batch
kernel that evaluates the same predicate on a (rows, n*n) int64 entry block.
The batch kernels exist for the hot n=2 and n=3 paths used by enumeration and
sampling; they are exact (integer arithmetic in int64, with magnitudes proven
to fit) and must agree with the scalar predicate everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .linalg import (
    IntMatrix,
    det,
    discriminant_2x2,
    has_integer_eigenvalues_2x2,
    has_real_eigenvalues_2x2,
    integer_eigenvalues,
)

BatchKernel = Callable[[np.ndarray, int, int], np.ndarray]


@dataclass(frozen=True)
class MatrixProperty:
    name: str
    scalar: Callable[[IntMatrix], bool]
    batch: BatchKernel | None = None


def exact_square_mask(values: np.ndarray) -> np.ndarray:
    """Boolean mask of nonnegative perfect squares (int64 input).

    float sqrt is only a candidate generator; candidates +-1 around the
    rounded root are confirmed in integer arithmetic.
    """
    nonneg = values >= 0
    root = np.sqrt(np.maximum(values, 0).astype(np.float64)).astype(np.int64)
    mask = np.zeros(values.shape, dtype=bool)
    for off in (-1, 0, 1):
        cand = root + off
        mask |= (cand >= 0) & (cand * cand == values)
    return mask & nonneg


def _batch_singular_2(entries: np.ndarray, n: int, k: int) -> np.ndarray:
    a, b, c, d = (entries[:, i] for i in range(4))
    return a * d == b * c


def _batch_real_eig_2(entries: np.ndarray, n: int, k: int) -> np.ndarray:
    a, b, c, d = (entries[:, i] for i in range(4))
    return (a - d) ** 2 + 4 * b * c >= 0


def _batch_integer_eig_2(entries: np.ndarray, n: int, k: int) -> np.ndarray:
    a, b, c, d = (entries[:, i] for i in range(4))
    return exact_square_mask((a - d) ** 2 + 4 * b * c)


def _coeffs_3(entries: np.ndarray):
    """Characteristic-polynomial data for 3x3 blocks: trace, minor sum, det."""
    a, b, c, d, e, f, g, h, i = (entries[:, t] for t in range(9))
    tr = a + e + i
    ms = (a * e - b * d) + (a * i - c * g) + (e * i - f * h)
    dt = a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    return tr, ms, dt


def _batch_singular_3(entries: np.ndarray, n: int, k: int) -> np.ndarray:
    _, _, dt = _coeffs_3(entries)
    return dt == 0


def _batch_integer_eig_3(entries: np.ndarray, n: int, k: int) -> np.ndarray:
    """Any integer root of x**3 - tr*x**2 + ms*x - dt with |root| <= 3k.

    A nonzero integer root must divide the determinant, so for each candidate
    magnitude we filter by divisibility before the exact Horner evaluation.
    """
    tr, ms, dt = _coeffs_3(entries)
    hit = dt == 0
    for lam in range(1, 3 * k + 1):
        idx = np.flatnonzero(~hit & (dt % lam == 0))
        if idx.size == 0:
            continue
        t, s, d0 = tr[idx], ms[idx], dt[idx]
        for root in (lam, -lam):
            val = ((root - t) * root + s) * root - d0
            hit[idx[val == 0]] = True
    return hit


def _batch_lambda_eig(lam: int) -> BatchKernel:
    def kernel(entries: np.ndarray, n: int, k: int) -> np.ndarray:
        if n == 2:
            a, b, c, d = (entries[:, i] for i in range(4))
            return (a - lam) * (d - lam) == b * c
        if n == 3:
            shifted = entries.copy()
            for i in range(n):
                shifted[:, i * n + i] -= lam
            _, _, dt = _coeffs_3(shifted)
            return dt == 0
        raise ValueError(f"no batch kernel for n={n}")

    return kernel


def singular() -> MatrixProperty:
    return MatrixProperty(
        "singular",
        scalar=lambda m: det(m) == 0,
        batch=_dispatch({2: _batch_singular_2, 3: _batch_singular_3}),
    )


def integer_eig() -> MatrixProperty:
    def scalar(m: IntMatrix) -> bool:
        if m.n == 2:
            return has_integer_eigenvalues_2x2(m)
        return bool(integer_eigenvalues(m))

    return MatrixProperty(
        "integer_eig",
        scalar=scalar,
        batch=_dispatch({2: _batch_integer_eig_2, 3: _batch_integer_eig_3}),
    )


def real_eig() -> MatrixProperty:
    return MatrixProperty(
        "real_eig",
        scalar=has_real_eigenvalues_2x2,
        batch=_dispatch({2: _batch_real_eig_2}),
    )


def lambda_eig(lam: int) -> MatrixProperty:
    return MatrixProperty(
        f"lambda_eig({lam})",
        scalar=lambda m: det(m.shift_diagonal(lam)) == 0,
        batch=_dispatch({2: _batch_lambda_eig(lam), 3: _batch_lambda_eig(lam)}),
    )


def always() -> MatrixProperty:
    return MatrixProperty(
        "always",
        scalar=lambda m: True,
        batch=lambda entries, n, k: np.ones(entries.shape[0], dtype=bool),
    )


def _dispatch(kernels: dict[int, BatchKernel]) -> BatchKernel:
    def kernel(entries: np.ndarray, n: int, k: int) -> np.ndarray:
        fn = kernels.get(n)
        if fn is None:
            raise ValueError(f"no batch kernel for n={n}")
        return fn(entries, n, k)

    return kernel


def has_batch(prop: MatrixProperty, n: int) -> bool:
    """Whether the property's batch kernel supports dimension n."""
    if prop.batch is None:
        return False
    probe = np.zeros((1, n * n), dtype=np.int64)
    try:
        prop.batch(probe, n, 1)
    except ValueError:
        return False
    return True


_BY_NAME = {
    "singular": singular,
    "integer_eig": integer_eig,
    "real_eig": real_eig,
    "always": always,
}


def by_name(name: str, lam: int | None = None) -> MatrixProperty:
    """Look up a named property; lambda_eig requires ``lam``."""
    if name == "lambda_eig":
        if lam is None:
            raise ValueError("lambda_eig needs a lambda value")
        return lambda_eig(lam)
    try:
        return _BY_NAME[name]()
    except KeyError:
        raise ValueError(f"unknown property {name!r}") from None
