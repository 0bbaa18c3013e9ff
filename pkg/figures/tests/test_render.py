"""Tests for the figure renderer, driven entirely through intmat CSV output."""

import subprocess
import sys
from pathlib import Path

import numpy as np
import pytest

from intmat_figures.render import (
    FigureSpec,
    InputError,
    main,
    read_curve,
    read_histogram,
    render,
)


def _run_intmat(args: list[str], out_path: Path) -> None:
    result = subprocess.run(
        [sys.executable, "-m", "intmat_lab.cli", *args], capture_output=True, check=True
    )
    out_path.write_bytes(result.stdout)


@pytest.fixture(scope="module")
def curve_csv(tmp_path_factory) -> Path:
    path = tmp_path_factory.mktemp("data") / "curve.csv"
    _run_intmat(["curve", "--step", "0.01"], path)
    return path


@pytest.fixture(scope="module")
def hist_csv(tmp_path_factory) -> Path:
    path = tmp_path_factory.mktemp("data") / "hist_k100.csv"
    _run_intmat(
        ["hist", "--mode", "integer", "--source", "exact", "--k", "100", "--bins", "100"], path
    )
    return path


class TestReaders:
    def test_curve_reader(self, curve_csv):
        curve = read_curve(curve_csv)
        assert curve.delta.shape == (401,)
        assert curve.delta[0] == -2.0 and curve.delta[-1] == 2.0
        assert curve.u_z[0] == curve.u_z[-1] == 0.0
        assert curve.u_r[0] == curve.u_r[-1] == 0.0

    def test_histogram_reader(self, hist_csv):
        hist = read_histogram(hist_csv, "k=100")
        assert hist.edges.shape == (101,)
        area = float((hist.density * np.diff(hist.edges)).sum())
        assert area == pytest.approx(2.0, abs=1e-6)

    def test_missing_file(self, tmp_path):
        with pytest.raises(InputError, match="does not exist"):
            read_curve(tmp_path / "nope.csv")

    def test_missing_column(self, tmp_path):
        bad = tmp_path / "bad.csv"
        bad.write_text("delta,u_z\n0,1\n")
        with pytest.raises(InputError, match="'u_r'"):
            read_curve(bad)

    def test_non_numeric_cell(self, tmp_path):
        bad = tmp_path / "bad.csv"
        bad.write_text("delta,u_z,u_r\n0,oops,1\n")
        with pytest.raises(InputError, match="'u_z'"):
            read_curve(bad)

    def test_trailer_rows_skipped(self, curve_csv):
        raw = curve_csv.read_text().splitlines()
        assert raw[-1].startswith("manifest,")
        assert read_curve(curve_csv).delta.shape == (401,)


class TestRender:
    def test_curve_only(self, curve_csv, tmp_path):
        spec = FigureSpec(curve_csv=curve_csv, out=tmp_path / "fig.svg")
        fig = render(spec)
        assert len(fig.axes[0].lines) == 2

    def test_plotted_data_equals_csv_exactly(self, curve_csv, hist_csv, tmp_path):
        spec = FigureSpec(
            curve_csv=curve_csv,
            out=tmp_path / "fig.svg",
            histograms=[(hist_csv, "k=100 exact")],
        )
        fig = render(spec)
        curve = read_curve(curve_csv)
        solid, dashed = fig.axes[0].lines
        assert np.array_equal(np.asarray(solid.get_xdata(), dtype=float), curve.delta)
        assert np.array_equal(np.asarray(solid.get_ydata(), dtype=float), curve.u_z)
        assert np.array_equal(np.asarray(dashed.get_ydata(), dtype=float), curve.u_r)
        assert solid.get_linestyle() == "-"
        assert dashed.get_linestyle() == "--"

    def test_cli_writes_image(self, curve_csv, hist_csv, tmp_path):
        out = tmp_path / "figure.svg"
        code = main([str(curve_csv), "--hist", f"{hist_csv}:k=100 exact", "--out", str(out)])
        assert code == 0
        assert out.exists() and out.stat().st_size > 0
        assert b"<svg" in out.read_bytes()[:200]

    def test_cli_raster_flag(self, curve_csv, tmp_path):
        out = tmp_path / "figure.svg"
        code = main([str(curve_csv), "--out", str(out), "--raster"])
        assert code == 0
        png = tmp_path / "figure.png"
        assert png.exists()
        assert png.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"

    def test_cli_missing_input_names_file(self, tmp_path, capsys):
        code = main([str(tmp_path / "absent.csv"), "--out", str(tmp_path / "fig.svg")])
        assert code == 1
        assert "absent.csv" in capsys.readouterr().err

    def test_cli_malformed_names_column(self, tmp_path, capsys):
        bad = tmp_path / "bad.csv"
        bad.write_text("delta_lo,delta_hi,density\n0,x,1\n")
        curve = tmp_path / "curve.csv"
        curve.write_text("delta,u_z,u_r\n-2,0,0\n0,1,0.8\n2,0,0\n")
        code = main([str(curve), "--hist", str(bad), "--out", str(tmp_path / "f.svg")])
        assert code == 1
        assert "'delta_hi'" in capsys.readouterr().err

    def test_deterministic_output(self, curve_csv, hist_csv, tmp_path):
        out1, out2 = tmp_path / "a.svg", tmp_path / "b.svg"
        argv = [str(curve_csv), "--hist", f"{hist_csv}:overlay"]
        assert main([*argv, "--out", str(out1)]) == 0
        assert main([*argv, "--out", str(out2)]) == 0
        assert out1.read_bytes() == out2.read_bytes()
