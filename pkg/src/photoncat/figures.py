"""Figure-dataset reproduction: per-panel CSVs plus static SVG plots.

Four figure groups mirror the reference layout: Mandel Q, antibunching, and
sub-Poissonian statistics for Psi1/Psi2 at (m,n) in {(1,3),(2,6)} with
l in {2,3}; the squeezing group covers all four families with l in {2,3,4}
(odd l rows carry an OddOrder marker -- the witness is even-order only).

Every figure is emitted under both moment conventions: ``two_mode`` (the
bookkeeping the reference curves follow) and ``mode_a`` (the adjudicated
single-mode physics).  Output is byte-deterministic: fixed float formatting,
fixed row order, salted SVG ids, and no timestamps.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .states import ASSUMPTION_NOTES, Family
from .sweep import GammaGrid, SweepConfig, SweepRow, run_sweep, tool_version
from .witnesses import WitnessKind

LOWER_FAMILIES = (Family.PSI1, Family.PSI2)
ALL_FAMILIES = tuple(Family)
PAIRS = ((1, 3), (2, 6))

FIGURE_GROUPS = (
    ("fig1_mandel_q", WitnessKind.MANDEL_Q, LOWER_FAMILIES, (2, 3)),
    ("fig2_antibunching", WitnessKind.ANTIBUNCHING, LOWER_FAMILIES, (2, 3)),
    ("fig3_subpoissonian", WitnessKind.SUB_POISSONIAN, LOWER_FAMILIES, (2, 3)),
    ("fig4_squeezing", WitnessKind.SQUEEZING, ALL_FAMILIES, (2, 3, 4)),
)

LAYOUT_NOTES = (
    "squeezing panels are named explicitly by family and (m, n); the "
    "reference layout reuses the labels (a)-(d) for two parameter sets and "
    "contains an unresolvable family label, so positional labels are not "
    "reproduced",
    "squeezing rows at l=3 carry the OddOrder marker: the witness is "
    "defined for even orders only, while the reference captions sweep "
    "l in {2,3} and the accompanying text uses l=4",
)


@dataclass(frozen=True)
class FigureConfig:
    gamma_grid: GammaGrid = GammaGrid(0.05, 2.0, 40)
    engine: str = "both"
    tol_convergence: float = 1e-10
    tol_agreement: float = 1e-8
    threads: int = 1
    conventions: tuple = ("two_mode", "mode_a")


def _panel_name(family: Family, pair: tuple[int, int]) -> str:
    return f"{family.value}_m{pair[0]}_n{pair[1]}"


def _panel_rows(rows, family: Family, pair) -> list[SweepRow]:
    return [
        row
        for row in rows
        if row.family == family.value and (row.m, row.n) == pair
    ]


def _write_csv(path: Path, rows: list[SweepRow]) -> None:
    from .sweep import CSV_HEADER

    lines = [CSV_HEADER]
    lines.extend(",".join(row.csv_fields()) for row in rows)
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def _plot_figure(
    path: Path, title: str, panels: list[tuple[str, list[SweepRow]]], orders
) -> None:
    plt.rcParams["svg.hashsalt"] = "photoncat"
    ncols = 2
    nrows = (len(panels) + ncols - 1) // ncols
    fig, axes = plt.subplots(
        nrows, ncols, figsize=(4.2 * ncols, 3.2 * nrows), squeeze=False
    )
    for idx, (name, rows) in enumerate(panels):
        ax = axes[idx // ncols][idx % ncols]
        for l in orders:
            series = [
                (row.gamma, row.value)
                for row in rows
                if row.l == l and not row.error and row.value is not None
            ]
            if not series:
                continue
            xs, ys = zip(*series)
            ax.plot(xs, ys, label=f"l={l}")
        ax.set_title(name, fontsize=9)
        ax.set_xlabel("gamma")
        ax.legend(fontsize=7)
    for idx in range(len(panels), nrows * ncols):
        axes[idx // ncols][idx % ncols].axis("off")
    fig.suptitle(title, fontsize=11)
    fig.tight_layout()
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)


def repro_figures(outdir, config: FigureConfig | None = None) -> dict:
    """Emit every figure dataset and plot under ``outdir``.

    Returns a manifest mapping figure names to the files written.  Row-level
    error markers (OddOrder for squeezing l=3, degenerate points) are kept
    in the CSVs; nothing is silently dropped.
    """
    config = config or FigureConfig()
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    manifest: dict = {}
    any_error = False
    unexpected_error = False

    for fig_name, kind, families, orders in FIGURE_GROUPS:
        fig_dir = out / fig_name
        fig_dir.mkdir(exist_ok=True)
        files: list[str] = []
        for convention in config.conventions:
            sweep_config = SweepConfig(
                gamma_grid=config.gamma_grid,
                families=families,
                addition_pairs=PAIRS,
                witness_kinds=(kind,),
                orders={kind: tuple(orders)},
                engine=config.engine,
                convention=convention,
                tol_convergence=config.tol_convergence,
                tol_agreement=config.tol_agreement,
                threads=config.threads,
            )
            result = run_sweep(sweep_config)
            any_error = any_error or result.errored
            # Squeezing rows at odd l are OddOrder by design; anything else
            # marks a genuinely failed grid point.
            unexpected_error = unexpected_error or any(
                row.error and not (row.witness == "squeezing" and row.l % 2 == 1)
                for row in result.rows
            )
            panels = []
            for pair in PAIRS:
                for family in families:
                    name = _panel_name(family, pair)
                    rows = _panel_rows(result.rows, family, pair)
                    csv_path = fig_dir / f"{name}.{convention}.csv"
                    _write_csv(csv_path, rows)
                    files.append(str(csv_path.relative_to(out)))
                    panels.append((name, rows))
            svg_path = fig_dir / f"{fig_name}.{convention}.svg"
            _plot_figure(
                svg_path,
                f"{fig_name} [{convention}]",
                panels,
                orders,
            )
            files.append(str(svg_path.relative_to(out)))
        manifest[fig_name] = files

    meta = {
        "tool": "photoncat",
        "version": tool_version(),
        "gamma_grid": {
            "start": config.gamma_grid.start,
            "stop": config.gamma_grid.stop,
            "count": config.gamma_grid.count,
            "spacing": config.gamma_grid.spacing,
        },
        "engine": config.engine,
        "conventions": list(config.conventions),
        "assumptions": list(ASSUMPTION_NOTES),
        "layout_notes": list(LAYOUT_NOTES),
        "manifest": manifest,
        "had_row_errors": any_error,
        "had_unexpected_row_errors": unexpected_error,
    }
    (out / "metadata.json").write_text(
        json.dumps(meta, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
    return meta
