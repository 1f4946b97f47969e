"""Command-line interface: sweep, verify, repro-figures, witness.

Precedence: command-line flags override config-file keys override built-in
defaults.  Exit codes: 0 success, 2 config error, 3 verification failure,
4 partial sweep (some rows carry error markers).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import figures, sweep
from .errors import ConfigError, DegenerateState, UnconvergedError
from .states import Family, StateSpec, moment_table_analytic, moment_table_two_mode
from .sweep import GammaGrid, SweepConfig, run_sweep, verify_formulas, write_result
from .witnesses import WitnessKind, combine, evaluate
from . import fock

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_VERIFY = 3
EXIT_PARTIAL = 4

_FAMILY_BY_NAME = {f.value.lower(): f for f in Family}
_KIND_BY_NAME = {k.value: k for k in WitnessKind}


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--family", action="append", default=None,
                        help="family name (Psi1..Psi4); repeatable or comma-separated")
    parser.add_argument("--gamma-start", type=float, default=None)
    parser.add_argument("--gamma-stop", type=float, default=None)
    parser.add_argument("--gamma-count", type=int, default=None)
    parser.add_argument("--spacing", choices=sweep.SPACINGS, default=None)
    parser.add_argument("--m", action="append", type=int, default=None,
                        help="mode-a addition order; repeat --m/--n in pairs")
    parser.add_argument("--n", action="append", type=int, default=None,
                        help="mode-b addition order; repeat --m/--n in pairs")
    parser.add_argument("--order", action="append", default=None,
                        help="witness orders, e.g. '2,3' or 'squeezing=2,4'; repeatable")
    parser.add_argument("--witness", action="append", default=None,
                        help="witness kind; repeatable or comma-separated")
    parser.add_argument("--engine", choices=sweep.ENGINES, default=None)
    parser.add_argument("--convention", choices=sweep.CONVENTIONS, default=None,
                        help="mode_a (adjudicated) or two_mode (reference-figure bookkeeping)")
    parser.add_argument("--tol-convergence", type=float, default=None)
    parser.add_argument("--tol-agreement", type=float, default=None)
    parser.add_argument("--out", default=None)
    parser.add_argument("--format", choices=("csv", "json"), default=None)
    parser.add_argument("--config", default=None, help="flat JSON config file")
    parser.add_argument("--threads", type=int, default=None)


def _split_multi(raw) -> list[str]:
    items: list[str] = []
    for chunk in raw:
        items.extend(part.strip() for part in str(chunk).split(",") if part.strip())
    return items


def _parse_families(raw) -> tuple:
    out = []
    for name in _split_multi(raw):
        key = name.lower()
        if key not in _FAMILY_BY_NAME:
            raise ConfigError(f"unknown family {name!r}")
        out.append(_FAMILY_BY_NAME[key])
    return tuple(out)


def _parse_witnesses(raw) -> tuple:
    out = []
    for name in _split_multi(raw):
        if name not in _KIND_BY_NAME:
            raise ConfigError(f"unknown witness {name!r}; choose from "
                              f"{sorted(_KIND_BY_NAME)}")
        out.append(_KIND_BY_NAME[name])
    return tuple(out)


def _parse_orders(raw, kinds) -> dict:
    """'2,3' applies to every kind; 'squeezing=2,4' targets one kind."""
    shared: list[int] = []
    per_kind: dict = {}
    entries = raw if isinstance(raw, (list, tuple)) else [raw]
    for entry in entries:
        if isinstance(entry, dict):
            for key, vals in entry.items():
                kind = _KIND_BY_NAME.get(key)
                if kind is None:
                    raise ConfigError(f"unknown witness {key!r} in orders")
                per_kind[kind] = tuple(int(v) for v in vals)
            continue
        text = str(entry)
        if "=" in text:
            key, _, vals = text.partition("=")
            kind = _KIND_BY_NAME.get(key.strip())
            if kind is None:
                raise ConfigError(f"unknown witness {key.strip()!r} in --order")
            per_kind[kind] = tuple(int(v) for v in vals.split(",") if v.strip())
        else:
            shared.extend(int(v) for v in text.split(",") if v.strip())
    orders = {}
    for kind in kinds:
        orders[kind] = per_kind.get(kind, tuple(shared) or (2, 3))
    return orders


def _load_config_file(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigError("config file must hold a flat JSON object")
    return data


def _build_config(args: argparse.Namespace) -> SweepConfig:
    defaults = {
        "gamma_start": 0.1,
        "gamma_stop": 2.0,
        "gamma_count": 20,
        "spacing": "linear",
        "family": ["Psi1", "Psi2", "Psi3", "Psi4"],
        "m": [1],
        "n": [3],
        "order": ["2,3"],
        "witness": [k.value for k in WitnessKind],
        "engine": "both",
        "convention": "mode_a",
        "tol_convergence": 1e-10,
        "tol_agreement": 1e-8,
        "out": None,
        "format": "csv",
        "threads": 1,
    }
    merged = dict(defaults)
    if args.config:
        merged.update(_load_config_file(args.config))
    cli_values = {
        "gamma_start": args.gamma_start,
        "gamma_stop": args.gamma_stop,
        "gamma_count": args.gamma_count,
        "spacing": args.spacing,
        "family": args.family,
        "m": args.m,
        "n": args.n,
        "order": args.order,
        "witness": args.witness,
        "engine": args.engine,
        "convention": args.convention,
        "tol_convergence": args.tol_convergence,
        "tol_agreement": args.tol_agreement,
        "out": args.out,
        "format": args.format,
        "threads": args.threads,
    }
    merged.update({key: val for key, val in cli_values.items() if val is not None})

    m_list = merged["m"] if isinstance(merged["m"], (list, tuple)) else [merged["m"]]
    n_list = merged["n"] if isinstance(merged["n"], (list, tuple)) else [merged["n"]]
    if len(m_list) != len(n_list):
        raise ConfigError("--m and --n must be given the same number of times")
    pairs = tuple((int(m), int(n)) for m, n in zip(m_list, n_list))

    families = _parse_families(
        merged["family"] if isinstance(merged["family"], (list, tuple))
        else [merged["family"]]
    )
    kinds = _parse_witnesses(
        merged["witness"] if isinstance(merged["witness"], (list, tuple))
        else [merged["witness"]]
    )
    orders = _parse_orders(merged["order"], kinds)
    config = SweepConfig(
        gamma_grid=GammaGrid(
            start=float(merged["gamma_start"]),
            stop=float(merged["gamma_stop"]),
            count=int(merged["gamma_count"]),
            spacing=str(merged["spacing"]),
        ),
        families=families,
        addition_pairs=pairs,
        witness_kinds=kinds,
        orders=orders,
        engine=str(merged["engine"]),
        convention=str(merged["convention"]),
        tol_convergence=float(merged["tol_convergence"]),
        tol_agreement=float(merged["tol_agreement"]),
        out_path=merged["out"],
        out_format=str(merged["format"]),
        threads=int(merged["threads"]),
    )
    config.validate()
    return config


def _cmd_sweep(args) -> int:
    config = _build_config(args)
    result = run_sweep(config)
    if config.out_path:
        write_result(result, config.out_path, config.out_format)
        print(f"wrote {len(result.rows)} rows to {config.out_path}")
    else:
        payload = result.to_csv() if config.out_format == "csv" else result.to_json()
        sys.stdout.write(payload)
    return EXIT_PARTIAL if result.errored else EXIT_OK


def _cmd_verify(args) -> int:
    config = _build_config(args)
    report = verify_formulas(
        tol_agreement=config.tol_agreement,
        tol_convergence=config.tol_convergence,
    )
    sys.stdout.write(report.to_text())
    if config.out_path:
        with open(config.out_path, "w", encoding="utf-8") as fh:
            json.dump(report.to_json_dict(), fh, indent=2, sort_keys=True)
            fh.write("\n")
    return EXIT_OK if report.passed else EXIT_VERIFY


def _cmd_repro_figures(args) -> int:
    config = _build_config(args)
    outdir = config.out_path or "figures_out"
    grid_overridden = any(
        v is not None for v in (args.gamma_start, args.gamma_stop, args.gamma_count)
    )
    fig_config = figures.FigureConfig(
        gamma_grid=(
            config.gamma_grid if grid_overridden else figures.FigureConfig().gamma_grid
        ),
        engine=config.engine,
        tol_convergence=config.tol_convergence,
        tol_agreement=config.tol_agreement,
        threads=config.threads,
    )
    meta = figures.repro_figures(outdir, fig_config)
    total = sum(len(files) for files in meta["manifest"].values())
    print(f"wrote {total} files under {outdir}")
    return EXIT_PARTIAL if meta["had_unexpected_row_errors"] else EXIT_OK


def _cmd_witness(args) -> int:
    config = _build_config(args)
    gamma = config.gamma_grid.start
    family = config.families[0]
    m, n = config.addition_pairs[0]
    max_order = config.max_order()
    try:
        spec = StateSpec(family, gamma, m=m, n=n)
        builder = (
            moment_table_analytic if config.convention == "mode_a"
            else moment_table_two_mode
        )
        analytic = builder(spec, max_order) if config.engine in ("analytic", "both") else None
        oracle = (
            fock.moment_table_oracle(
                spec, max_order,
                convergence_tol=config.tol_convergence,
                convention=config.convention,
            )
            if config.engine in ("oracle", "both")
            else None
        )
    except (DegenerateState, UnconvergedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARTIAL
    reports = []
    for kind in config.witness_kinds:
        for l in config.orders[kind]:
            try:
                rep_a = evaluate(analytic, kind, l) if analytic else None
                rep_o = evaluate(oracle, kind, l) if oracle else None
                rep = combine(rep_a, rep_o) if rep_a and rep_o else (rep_a or rep_o)
            except Exception as exc:  # row-level marker, mirrors sweep behavior
                print(f"{kind.value} l={l}: error {type(exc).__name__}: {exc}")
                continue
            flag = "nonclassical" if rep.nonclassical else "classical-boundary/classical"
            extra = f" discrepancy={rep.discrepancy:.3e}" if rep.provenance == "both" else ""
            print(f"{kind.value} l={l}: {rep.value!r} [{flag}]{extra}")
            reports.append(rep)
    if config.out_path:
        payload = [
            {
                "witness": rep.kind.value,
                "l": rep.order_l,
                "value": rep.value,
                "nonclassical": rep.nonclassical,
                "provenance": rep.provenance,
                "discrepancy": rep.discrepancy,
            }
            for rep in reports
        ]
        with open(config.out_path, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="photoncat",
        description="Photon-added two-mode cat states: moments, nonclassicality "
                    "witnesses, figure datasets, and formula verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, handler, blurb in (
        ("sweep", _cmd_sweep, "evaluate witnesses over a gamma grid"),
        ("verify", _cmd_verify, "cross-check closed forms against the Fock oracle"),
        ("repro-figures", _cmd_repro_figures, "emit the figure datasets and plots"),
        ("witness", _cmd_witness, "single-point witness evaluation"),
    ):
        p = sub.add_parser(name, help=blurb)
        _add_common_flags(p)
        p.set_defaults(handler=handler)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
