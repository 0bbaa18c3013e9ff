"""Reproducible Monte Carlo estimation and scaled eigenvalue histograms.

Randomness contract: the master stream is PCG64 seeded through
numpy.random.SeedSequence(seed); worker substreams are SeedSequence(seed)
.spawn(workers).  Bounded integers come from Generator.integers, which draws
by rejection from the top bits (no modulo bias).  The reproducibility key is
the pair (seed, workers): the same pair gives bit-identical results, while a
different worker count changes only how samples are partitioned between
substreams.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import counting, properties
from .linalg import IntMatrix
from .properties import MatrixProperty

GENERATOR_ID = f"pcg64/seedseq (numpy {np.__version__})"

_Z95 = 1.959963984540054  # two-sided 95% normal quantile
_CHUNK_ENTRIES = 1 << 22


@dataclass(frozen=True)
class SamplerConfig:
    """Everything needed to reproduce a sampling run bit-for-bit."""

    n: int
    k: int
    samples: int
    seed: int
    workers: int = 1

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.k < 0:
            raise ValueError("k must be >= 0")
        if self.samples < 1:
            raise ValueError("samples must be >= 1")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")


@dataclass(frozen=True)
class EstimateRecord:
    """A Monte Carlo probability estimate with a 95% confidence interval."""

    config: SamplerConfig
    property: str
    hits: int
    generator: str = GENERATOR_ID

    def __post_init__(self) -> None:
        if not 0 <= self.hits <= self.config.samples:
            raise ValueError("hits must lie in [0, samples]")

    @property
    def p_hat(self) -> float:
        return self.hits / self.config.samples

    @property
    def stderr(self) -> float:
        p = self.p_hat
        return math.sqrt(p * (1.0 - p) / self.config.samples)

    @property
    def ci95(self) -> tuple[float, float]:
        return binomial_ci95(self.hits, self.config.samples)


def binomial_ci95(hits: int, samples: int) -> tuple[float, float]:
    """Normal-approximation interval, switching to Wilson near the boundary.

    The Wilson interval is used when either hit count is below 30, where the
    normal approximation is unreliable; both intervals always contain the
    point estimate hits/samples.
    """
    p = hits / samples
    if hits < 30 or samples - hits < 30:
        z2 = _Z95 * _Z95
        denom = 1.0 + z2 / samples
        center = (p + z2 / (2.0 * samples)) / denom
        half = _Z95 * math.sqrt(p * (1.0 - p) / samples + z2 / (4.0 * samples * samples)) / denom
        lo, hi = max(0.0, center - half), min(1.0, center + half)
    else:
        se = math.sqrt(p * (1.0 - p) / samples)
        lo, hi = max(0.0, p - _Z95 * se), min(1.0, p + _Z95 * se)
    # rounding must never push the point estimate outside its own interval
    return (min(lo, p), max(hi, p))


def worker_streams(seed: int, workers: int) -> list[np.random.Generator]:
    """Independent substreams derived as SeedSequence(seed).spawn(workers)."""
    children = np.random.SeedSequence(seed).spawn(workers)
    return [np.random.Generator(np.random.PCG64(child)) for child in children]


def _partition(samples: int, workers: int) -> list[int]:
    base, rem = divmod(samples, workers)
    return [base + (1 if i < rem else 0) for i in range(workers)]


def sample_matrix(stream: np.random.Generator, n: int, k: int) -> IntMatrix:
    """One matrix with n*n entries uniform on [-k, k]."""
    entries = stream.integers(-k, k + 1, size=n * n)
    return IntMatrix(n, tuple(int(e) for e in entries), bound=k if k >= 1 else None)


def _sample_entry_block(stream: np.random.Generator, count: int, n: int, k: int) -> np.ndarray:
    return stream.integers(-k, k + 1, size=(count, n * n), dtype=np.int64)


def estimate_probability(config: SamplerConfig, prop: MatrixProperty) -> EstimateRecord:
    """Estimate P(property) over config.samples uniform matrices.

    Deterministic for a fixed (seed, workers) pair; workers evaluate disjoint
    sample partitions on their own substreams and the hit counts add up.
    """
    quotas = _partition(config.samples, config.workers)
    streams = worker_streams(config.seed, config.workers)
    batched = properties.has_batch(prop, config.n)

    def run(worker: int) -> int:
        stream = streams[worker]
        quota = quotas[worker]
        hits = 0
        if batched:
            chunk_rows = max(1, _CHUNK_ENTRIES // (config.n * config.n))
            left = quota
            while left > 0:
                rows = min(chunk_rows, left)
                left -= rows
                block = _sample_entry_block(stream, rows, config.n, config.k)
                hits += int(prop.batch(block, config.n, config.k).sum())
        else:
            for _ in range(quota):
                if prop.scalar(sample_matrix(stream, config.n, config.k)):
                    hits += 1
        return hits

    if config.workers == 1:
        total_hits = run(0)
    else:
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            total_hits = sum(pool.map(run, range(config.workers)))
    return EstimateRecord(config=config, property=prop.name, hits=total_hits)


@dataclass(eq=False)
class ScaledHistogram:
    """Histogram of rescaled eigenvalues delta = lambda/k over [-2, 2].

    Densities are normalized so the total area is exactly 2 (each retained
    matrix contributes two eigenvalues): density = 2*bins/(sum(bins)*width).
    ``normalizer`` reports the exact normalization context: the total
    recorded eigenvalue weight in exact mode, the number of retained matrices
    in sampled mode.
    """

    k: int
    mode: str  # "integer_spectrum" or "real_spectrum"
    source: str  # "exact" or "sampled"
    bin_width: float
    bins: np.ndarray = field(repr=False)  # int64 eigenvalue counts per bin
    density: np.ndarray = field(repr=False)
    normalizer: int

    @property
    def nbins(self) -> int:
        return int(self.bins.shape[0])

    def edges(self) -> np.ndarray:
        return -2.0 + self.bin_width * np.arange(self.nbins + 1)

    def area(self) -> float:
        return float(self.density.sum() * self.bin_width)


def _nbins_for(bin_width: float) -> int:
    if bin_width <= 0:
        raise ValueError("bin width must be positive")
    nbins = round(4.0 / bin_width)
    if nbins < 1 or abs(nbins * bin_width - 4.0) > 1e-9:
        raise ValueError("bin width must divide the interval [-2, 2] evenly")
    return nbins


def _bin_index_exact(lam: int, k: int, nbins: int) -> int:
    """Bin of delta = lam/k for lam >= 0, right-open bins computed in integers."""
    return min((nbins * (lam + 2 * k)) // (4 * k), nbins - 1)


def eigenvalue_histogram_exact(
    k: int,
    mode: str = "integer_spectrum",
    bin_width: float = 0.04,
    *,
    normalize_by_matrix_count: bool = False,
) -> ScaledHistogram:
    """Exact scaled histogram: bin(lam/k) weighted by the #matrices with eigenvalue lam.

    Matrices with two distinct integer eigenvalues contribute once per
    eigenvalue; repeated-eigenvalue matrices contribute once (a vanishing
    fraction).  Bins are right-open on delta >= 0 and mirrored for delta < 0,
    which keeps the histogram exactly even under lam <-> -lam.

    With ``normalize_by_matrix_count`` densities are divided by the number of
    matrices with an integer eigenvalue instead (the k*count/|members|
    normalization used for pointwise curve comparison); areas then differ
    from 2 by the repeated-eigenvalue deficit.
    """
    if mode != "integer_spectrum":
        raise ValueError("exact histograms exist only for the integer spectrum")
    nbins = _nbins_for(bin_width)
    width = 4.0 / nbins
    lam_counts = counting.lambda_eig_counts_2x2(k)  # index lam + 2k
    bins = np.zeros(nbins, dtype=np.int64)
    for lam in range(0, 2 * k + 1):
        c = int(lam_counts[2 * k + lam])
        i = _bin_index_exact(lam, k, nbins)
        bins[i] += c
        if lam > 0:
            bins[nbins - 1 - i] += c
    eigen_total = int(bins.sum())
    if normalize_by_matrix_count:
        member_count = counting.count_integer_eig_2x2(k).count
        density = bins / (member_count * width)
        normalizer = member_count
    else:
        density = 2.0 * bins / (eigen_total * width)
        normalizer = eigen_total
    return ScaledHistogram(k, mode, "exact", width, bins, density, normalizer)


def eigenvalue_histogram_sampled(
    config: SamplerConfig, mode: str, bin_width: float = 0.04
) -> ScaledHistogram:
    """Sampled scaled histogram over 2x2 matrices.

    Samples matrices, keeps those in the requested spectral subset (integer
    or real spectrum), and bins both eigenvalues' delta = lambda/k.  Exact
    integer binning for the integer spectrum; float binning for the real one
    (discriminants are exact, so the rounding error is far below a bin).
    """
    if config.n != 2:
        raise ValueError("sampled histograms are defined for n = 2 only")
    if mode not in ("integer_spectrum", "real_spectrum"):
        raise ValueError(f"unknown histogram mode {mode!r}")
    if config.k < 1:
        raise ValueError("sampled histograms need k >= 1")
    nbins = _nbins_for(bin_width)
    width = 4.0 / nbins
    quotas = _partition(config.samples, config.workers)
    streams = worker_streams(config.seed, config.workers)

    def run(worker: int) -> tuple[np.ndarray, int]:
        stream = streams[worker]
        left = quotas[worker]
        bins = np.zeros(nbins, dtype=np.int64)
        retained = 0
        chunk_rows = _CHUNK_ENTRIES // 4
        while left > 0:
            rows = min(chunk_rows, left)
            left -= rows
            block = _sample_entry_block(stream, rows, 2, config.k)
            a, b, c, d = (block[:, i] for i in range(4))
            disc = (a - d) ** 2 + 4 * b * c
            if mode == "integer_spectrum":
                keep = properties.exact_square_mask(disc)
                t = (a + d)[keep]
                root = np.rint(np.sqrt(disc[keep].astype(np.float64))).astype(np.int64)
                retained += int(keep.sum())
                for lam in ((t + root) >> 1, (t - root) >> 1):
                    bins += _bin_integer_deltas(lam, config.k, nbins)
            else:
                keep = disc >= 0
                t = (a + d)[keep].astype(np.float64)
                root = np.sqrt(disc[keep].astype(np.float64))
                retained += int(keep.sum())
                for lam in (0.5 * (t + root), 0.5 * (t - root)):
                    bins += _bin_float_deltas(lam / config.k, nbins)
        return bins, retained

    if config.workers == 1:
        results = [run(0)]
    else:
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            results = list(pool.map(run, range(config.workers)))
    bins = np.zeros(nbins, dtype=np.int64)
    retained = 0
    for b, r in results:
        bins += b
        retained += r
    eigen_total = int(bins.sum())
    density = (
        2.0 * bins / (eigen_total * width) if eigen_total else np.zeros(nbins, dtype=np.float64)
    )
    return ScaledHistogram(config.k, mode, "sampled", width, bins, density, retained)


def _bin_integer_deltas(lams: np.ndarray, k: int, nbins: int) -> np.ndarray:
    """Mirror-symmetric exact binning of integer eigenvalues."""
    pos = lams >= 0
    idx = np.empty(lams.shape, dtype=np.int64)
    idx[pos] = np.minimum((nbins * (lams[pos] + 2 * k)) // (4 * k), nbins - 1)
    neg = nbins * (-lams[~pos] + 2 * k) // (4 * k)
    idx[~pos] = nbins - 1 - np.minimum(neg, nbins - 1)
    return np.bincount(idx, minlength=nbins)


def _bin_float_deltas(deltas: np.ndarray, nbins: int) -> np.ndarray:
    """Mirror-symmetric float binning; |delta| <= 2 is guaranteed up to rounding."""
    width = 4.0 / nbins
    pos = deltas >= 0
    idx = np.empty(deltas.shape, dtype=np.int64)
    idx[pos] = np.minimum(((deltas[pos] + 2.0) / width).astype(np.int64), nbins - 1)
    neg = ((-deltas[~pos] + 2.0) / width).astype(np.int64)
    idx[~pos] = nbins - 1 - np.minimum(neg, nbins - 1)
    return np.bincount(idx, minlength=nbins)
