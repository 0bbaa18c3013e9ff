"""Render the limiting eigenvalue-distribution figure from intmat CSV files.

Reads the curve table written by ``intmat curve`` (columns delta,u_z,u_r) and
any number of histogram tables written by ``intmat hist`` (columns
delta_lo,delta_hi,density), and draws the classic picture: the integer-
spectrum limit as a solid line, the real-spectrum limit as a dashed line, and
each histogram as a step outline.  Pure presentation: plotted arrays are the
CSV values, never resampled or smoothed.
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

GOLDEN = (5**0.5 - 1) / 2
PARAMS = {
    "font.family": "serif",
    "font.size": 10,
    "axes.labelsize": 11,
    "legend.fontsize": 9,
    "figure.figsize": (5.2, 5.2 * GOLDEN),
    "lines.linewidth": 1.4,
    "savefig.bbox": "tight",
    "svg.hashsalt": "intmat-figures",  # deterministic ids in vector output
}

# step-outline colors cycle for histogram overlays
HIST_COLORS = ("#4eb3d3", "#2b8cbe", "#a8ddb5", "#7bccc4", "#08589e")


class InputError(Exception):
    """Missing or malformed input file; the message names the offender."""


@dataclass
class CurveData:
    delta: np.ndarray
    u_z: np.ndarray
    u_r: np.ndarray


@dataclass
class HistogramData:
    label: str
    edges: np.ndarray  # nbins + 1 edges
    density: np.ndarray


@dataclass
class FigureSpec:
    curve_csv: Path
    out: Path
    histograms: list[tuple[Path, str]] = field(default_factory=list)
    delta_limits: tuple[float, float] = (-2.0, 2.0)
    density_limits: tuple[float, float] = (0.0, 1.2)


def _read_rows(path: Path, columns: list[str]) -> list[dict[str, float]]:
    """Data rows of an intmat CSV; trailer rows (meta/manifest) are skipped.

    Raises InputError naming the file and the offending column on any
    missing header or non-numeric data cell.
    """
    if not path.exists():
        raise InputError(f"input file does not exist: {path}")
    with path.open(newline="") as stream:
        reader = csv.reader(stream)
        try:
            header = next(reader)
        except StopIteration:
            raise InputError(f"{path}: empty file, expected columns {columns}") from None
        missing = [c for c in columns if c not in header]
        if missing:
            raise InputError(f"{path}: missing column {missing[0]!r} (header: {header})")
        index = {c: header.index(c) for c in columns}
        rows = []
        for lineno, row in enumerate(reader, start=2):
            if not row or row[0] in ("meta", "manifest"):
                continue
            parsed = {}
            for c in columns:
                try:
                    parsed[c] = float(row[index[c]])
                except (ValueError, IndexError):
                    raise InputError(
                        f"{path}:{lineno}: column {c!r} is not numeric: "
                        f"{row[index[c]] if index[c] < len(row) else '<missing>'!r}"
                    ) from None
            rows.append(parsed)
    if not rows:
        raise InputError(f"{path}: no data rows")
    return rows


def read_curve(path: Path) -> CurveData:
    rows = _read_rows(path, ["delta", "u_z", "u_r"])
    return CurveData(
        delta=np.array([r["delta"] for r in rows]),
        u_z=np.array([r["u_z"] for r in rows]),
        u_r=np.array([r["u_r"] for r in rows]),
    )


def read_histogram(path: Path, label: str) -> HistogramData:
    rows = _read_rows(path, ["delta_lo", "delta_hi", "density"])
    lo = np.array([r["delta_lo"] for r in rows])
    hi = np.array([r["delta_hi"] for r in rows])
    if not np.allclose(lo[1:], hi[:-1]):
        raise InputError(f"{path}: column 'delta_lo' does not continue the previous 'delta_hi'")
    return HistogramData(
        label=label,
        edges=np.append(lo, hi[-1]),
        density=np.array([r["density"] for r in rows]),
    )


def render(spec: FigureSpec) -> plt.Figure:
    """Build the figure; the caller (or save_figure) writes it to disk."""
    curve = read_curve(spec.curve_csv)
    overlays = [read_histogram(path, label) for path, label in spec.histograms]
    with plt.rc_context(PARAMS):
        fig, ax = plt.subplots()
        for i, hist in enumerate(overlays):
            ax.stairs(
                hist.density,
                hist.edges,
                color=HIST_COLORS[i % len(HIST_COLORS)],
                linewidth=1.0,
                label=hist.label,
            )
        ax.plot(curve.delta, curve.u_z, "-", color="black", label="integer spectrum")
        ax.plot(curve.delta, curve.u_r, "--", color="black", label="real spectrum")
        ax.set_xlim(*spec.delta_limits)
        ax.set_ylim(*spec.density_limits)
        ax.set_xlabel(r"$\delta$")
        ax.set_ylabel("density")
        ax.legend(loc="upper right", frameon=False)
    return fig


def save_figure(fig: plt.Figure, out: Path, raster: bool) -> Path:
    """Write the figure; vector by default, PNG when raster is requested.

    Timestamp metadata is stripped so identical inputs give identical bytes.
    """
    with plt.rc_context(PARAMS):
        if raster:
            out = out.with_suffix(".png") if out.suffix.lower() != ".png" else out
            fig.savefig(out, dpi=300)
            return out
        if not out.suffix:
            out = out.with_suffix(".svg")
        suffix = out.suffix.lower()
        if suffix == ".svg":
            fig.savefig(out, metadata={"Date": None})
        elif suffix == ".pdf":
            fig.savefig(out, metadata={"CreationDate": None})
        else:
            fig.savefig(out)
        return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="intmat-figures",
        description="Render the limit-curve figure (solid u_z, dashed u_r) with "
        "optional histogram step overlays, from intmat CSV output.",
    )
    parser.add_argument("curve_csv", type=Path, help="CSV from 'intmat curve'")
    parser.add_argument(
        "--hist",
        action="append",
        default=[],
        metavar="CSV[:LABEL]",
        help="histogram CSV from 'intmat hist', with an optional legend label",
    )
    parser.add_argument("--out", type=Path, required=True, help="output image path")
    parser.add_argument(
        "--raster", action="store_true", help="write a PNG instead of a vector image"
    )
    return parser


def spec_from_args(args) -> FigureSpec:
    histograms = []
    for item in args.hist:
        path_str, sep, label = item.partition(":")
        histograms.append((Path(path_str), label if sep else Path(path_str).stem))
    return FigureSpec(curve_csv=args.curve_csv, out=args.out, histograms=histograms)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    spec = spec_from_args(args)
    try:
        fig = render(spec)
    except InputError as exc:
        print(f"intmat-figures: error: {exc}", file=sys.stderr)
        return 1
    written = save_figure(fig, spec.out, args.raster)
    plt.close(fig)
    print(f"wrote {written}", file=sys.stderr)
    return 0


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
