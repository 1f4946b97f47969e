import filecmp
import json
from pathlib import Path

import pytest

from photoncat.figures import FigureConfig, repro_figures
from photoncat.sweep import CSV_HEADER, GammaGrid

SMALL = FigureConfig(gamma_grid=GammaGrid(0.2, 1.6, 4), engine="analytic")


@pytest.fixture(scope="module")
def small_run(tmp_path_factory):
    outdir = tmp_path_factory.mktemp("figs")
    meta = repro_figures(outdir, SMALL)
    return Path(outdir), meta


class TestLayout:
    def test_four_figure_groups(self, small_run):
        outdir, meta = small_run
        assert set(meta["manifest"]) == {
            "fig1_mandel_q",
            "fig2_antibunching",
            "fig3_subpoissonian",
            "fig4_squeezing",
        }

    def test_panel_counts(self, small_run):
        outdir, meta = small_run
        csvs = [f for files in meta["manifest"].values() for f in files if f.endswith(".csv")]
        # 2 families x 2 pairs x 2 conventions for the three number
        # witnesses, 4 families x 2 pairs x 2 conventions for squeezing.
        assert len(csvs) == 3 * 8 + 16
        assert len(csvs) >= 16

    def test_eight_squeezing_panels_per_convention(self, small_run):
        outdir, meta = small_run
        files = meta["manifest"]["fig4_squeezing"]
        for convention in ("two_mode", "mode_a"):
            panels = [f for f in files if f.endswith(f".{convention}.csv")]
            assert len(panels) == 8

    def test_csv_schema_and_odd_order_markers(self, small_run):
        outdir, _ = small_run
        path = outdir / "fig4_squeezing" / "Psi3_m1_n3.two_mode.csv"
        lines = path.read_text().strip().split("\n")
        assert lines[0] == CSV_HEADER
        odd_rows = [ln for ln in lines[1:] if ln.endswith("OddOrder")]
        assert len(odd_rows) == SMALL.gamma_grid.count

    def test_svg_plots_written(self, small_run):
        outdir, meta = small_run
        svgs = [f for files in meta["manifest"].values() for f in files if f.endswith(".svg")]
        assert len(svgs) == 8
        for rel in svgs:
            assert (outdir / rel).stat().st_size > 0

    def test_metadata_documents_layout_ambiguity(self, small_run):
        outdir, _ = small_run
        meta = json.loads((outdir / "metadata.json").read_text())
        assert any("panel" in note for note in meta["layout_notes"])
        assert meta["had_row_errors"] is True
        assert meta["had_unexpected_row_errors"] is False


class TestDeterminism:
    def test_byte_identical_reruns(self, tmp_path):
        dir_a, dir_b = tmp_path / "a", tmp_path / "b"
        repro_figures(dir_a, SMALL)
        repro_figures(dir_b, SMALL)
        compare = filecmp.dircmp(dir_a, dir_b)

        def assert_same(cmp):
            assert not cmp.left_only and not cmp.right_only
            assert not cmp.diff_files, cmp.diff_files
            for sub in cmp.subdirs.values():
                assert_same(sub)

        assert_same(compare)
