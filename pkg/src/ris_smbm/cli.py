"""Config-driven command line front end.

Three subcommands:

* ``simulate <config>`` runs a Monte Carlo BER sweep per experiment section
  and writes ``<name>_ber.csv``.
* ``bound <config>`` evaluates the semi-analytic union bound on the same
  grid and writes ``<name>_bound.csv``.
* ``tables`` regenerates the energy-saving, data-rate, and complexity
  comparison tables.

Config files are INI-style: one experiment per ``[section]``, flat
``key = value`` entries (grammar documented in the README).  A JSON echo of
every effective configuration is written next to the CSV and is itself a
valid config file.  Exit codes: 0 success, 2 configuration error,
3 unsupported size or scheme.
"""

from __future__ import annotations

import argparse
import configparser
import csv
import dataclasses
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .analysis import (
    aber_bound,
    complexity_table,
    data_rate_table,
    energy_saving_table,
)
from .errors import ConfigError, UnsupportedError
from .simkit import BENCHMARK_SCHEMES, DETECTORS, SimPlan, benchmark_config, sweep

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_UNSUPPORTED = 3

BER_CSV_HEADER = ("snr_db", "ber", "stderr", "bit_errors", "bits", "trials", "truncated")
BOUND_CSV_HEADER = ("snr_db", "aber_bound", "stderr", "samples", "clamped")


@dataclass(frozen=True)
class ExperimentConfig:
    """One experiment: scheme parameters, grid, seed, and stop rule."""

    name: str
    scheme: str = "RIS-SMBM"
    modulation_order: int = 4
    num_tx_antennas: int = 4
    num_rf_mirrors: int = 2
    num_ris_elements: int = 16
    detector: str = "ml"
    snr_start_db: float = 0.0
    snr_stop_db: float = 0.0
    snr_step_db: float = 1.0
    seed: int = 1
    min_bit_errors: int = 200
    max_trials: int = 10_000_000
    bound_samples: int = 1000
    symbol_period: float = 1.0

    def __post_init__(self) -> None:
        if self.scheme not in BENCHMARK_SCHEMES + ("RIS-QSM",):
            raise ConfigError(f"unknown scheme {self.scheme!r}")
        if self.detector not in DETECTORS:
            raise ConfigError(f"detector must be one of {DETECTORS}")
        if self.snr_step_db <= 0:
            raise ConfigError("snr_step_db must be > 0")
        if self.snr_stop_db < self.snr_start_db:
            raise ConfigError("snr_stop_db must be >= snr_start_db")
        if math.isinf(self.snr_start_db) and self.snr_start_db != self.snr_stop_db:
            raise ConfigError("an infinite SNR grid must have snr_start_db == snr_stop_db")
        if self.min_bit_errors < 1:
            raise ConfigError("min_bit_errors must be >= 1")
        if self.max_trials < 1:
            raise ConfigError("max_trials must be >= 1")
        if self.bound_samples < 1:
            raise ConfigError("bound_samples must be >= 1")

    @property
    def snr_grid_db(self) -> tuple:
        if self.snr_start_db == self.snr_stop_db:
            return (self.snr_start_db,)
        count = int(math.floor((self.snr_stop_db - self.snr_start_db) / self.snr_step_db + 1e-9))
        return tuple(self.snr_start_db + i * self.snr_step_db for i in range(count + 1))

    def build_config(self):
        """The effective scheme configuration (benchmark degeneracies applied)."""
        return benchmark_config(
            self.scheme,
            self.modulation_order,
            self.num_tx_antennas,
            self.num_rf_mirrors,
            self.num_ris_elements,
            self.symbol_period,
        )


_FIELD_PARSERS = {
    "scheme": str,
    "modulation_order": int,
    "num_tx_antennas": int,
    "num_rf_mirrors": int,
    "num_ris_elements": int,
    "detector": str,
    "snr_start_db": float,
    "snr_stop_db": float,
    "snr_step_db": float,
    "seed": int,
    "min_bit_errors": int,
    "max_trials": int,
    "bound_samples": int,
    "symbol_period": float,
}


def _experiment_from_mapping(name: str, mapping) -> ExperimentConfig:
    kwargs = {}
    for key, raw in mapping.items():
        if key == "name":
            continue
        if key not in _FIELD_PARSERS:
            raise ConfigError(f"experiment {name!r}: unknown field {key!r}")
        try:
            kwargs[key] = _FIELD_PARSERS[key](raw)
        except (TypeError, ValueError):
            raise ConfigError(f"experiment {name!r}: field {key!r} has invalid value {raw!r}")
    return ExperimentConfig(name=name, **kwargs)


def load_experiments(path: str | Path) -> list[ExperimentConfig]:
    """Parse an INI or JSON config file into experiment configurations."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}")
    if path.suffix == ".json":
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{path}:{exc.lineno}: malformed JSON: {exc.msg}")
        if isinstance(payload, dict):
            payload = [payload]
        experiments = []
        for entry in payload:
            if not isinstance(entry, dict) or "name" not in entry:
                raise ConfigError(f"{path}: every JSON experiment needs a 'name' field")
            experiments.append(_experiment_from_mapping(str(entry["name"]), entry))
        return experiments
    parser = configparser.ConfigParser(interpolation=None)
    try:
        parser.read_string(text, source=str(path))
    except configparser.Error as exc:
        raise ConfigError(f"malformed config: {exc}")
    if not parser.sections():
        raise ConfigError(f"{path}: no experiment sections found")
    return [
        _experiment_from_mapping(section, dict(parser.items(section)))
        for section in parser.sections()
    ]


def _echo_config(exp: ExperimentConfig, out_dir: Path) -> Path:
    payload = dataclasses.asdict(exp)
    path = out_dir / f"{exp.name}_config.json"
    path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    return path


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _write_csv(path: Path, header, rows) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_fmt(v) for v in row])


def cmd_simulate(experiments, out_dir: Path, workers: int) -> list[Path]:
    """Run the sweep of every experiment and write ``<name>_ber.csv``."""
    written = []
    for exp in experiments:
        plan = SimPlan(
            cfg=exp.build_config(),
            detector=exp.detector,
            snr_grid_db=exp.snr_grid_db,
            master_seed=exp.seed,
            min_bit_errors=exp.min_bit_errors,
            max_trials=exp.max_trials,
            workers=workers,
        )
        points = sweep(plan)
        path = out_dir / f"{exp.name}_ber.csv"
        _write_csv(
            path,
            BER_CSV_HEADER,
            [
                (p.snr_db, p.ber, p.stderr, p.bit_errors, p.bits_simulated, p.trials, p.truncated)
                for p in points
            ],
        )
        _echo_config(exp, out_dir)
        written.append(path)
    return written


def cmd_bound(experiments, out_dir: Path) -> list[Path]:
    """Evaluate the union bound for every experiment and write ``<name>_bound.csv``."""
    written = []
    for exp in experiments:
        rng = np.random.default_rng(
            np.random.SeedSequence(entropy=exp.seed, spawn_key=(2,))
        )
        points = aber_bound(
            exp.build_config(), exp.snr_grid_db, samples=exp.bound_samples, rng=rng
        )
        path = out_dir / f"{exp.name}_bound.csv"
        _write_csv(
            path,
            BOUND_CSV_HEADER,
            [(p.snr_db, p.aber_bound, p.stderr, p.samples, p.clamped) for p in points],
        )
        _echo_config(exp, out_dir)
        written.append(path)
    return written


def _print_tables(which: str, out_dir: Path) -> None:
    if which in ("all", "table2"):
        rows = energy_saving_table()
        print("Energy saving of RIS-SMBM vs benchmarks [%]")
        print(f"{'M':>4} {'n_T':>4} {'m_rf':>5} {'RIS-SM':>8} {'RIS-MBM':>8} {'RIS-QSM':>8}")
        for r in rows:
            print(
                f"{r.modulation_order:>4} {r.num_tx_antennas:>4} {r.num_rf_mirrors:>5}"
                f" {r.savings['RIS-SM']:>8.2f} {r.savings['RIS-MBM']:>8.2f}"
                f" {r.savings['RIS-QSM']:>8.2f}"
            )
        print()
        _write_csv(
            out_dir / "energy_saving.csv",
            ("modulation_order", "num_tx_antennas", "num_rf_mirrors", "ris_sm", "ris_mbm", "ris_qsm"),
            [
                (
                    r.modulation_order,
                    r.num_tx_antennas,
                    r.num_rf_mirrors,
                    round(r.savings["RIS-SM"], 2),
                    round(r.savings["RIS-MBM"], 2),
                    round(r.savings["RIS-QSM"], 2),
                )
                for r in rows
            ],
        )
    if which in ("all", "table3"):
        rows = data_rate_table()
        print("Data rates [bits/s/Hz]")
        print(f"{'n_T':>4} {'m_rf':>5} {'M':>4} {'RIS-SM':>7} {'RIS-MBM':>8} {'RIS-QSM':>8} {'RIS-SMBM':>9}")
        for r in rows:
            print(
                f"{r.num_tx_antennas:>4} {r.num_rf_mirrors:>5} {r.modulation_order:>4}"
                f" {r.rates['RIS-SM']:>7} {r.rates['RIS-MBM']:>8}"
                f" {r.rates['RIS-QSM']:>8} {r.rates['RIS-SMBM']:>9}"
            )
            for scheme, ref in sorted(r.discrepancies.items()):
                print(
                    f"     note: {scheme} formula gives {r.rates[scheme]},"
                    f" tabulated reference says {ref}"
                )
        print()
        _write_csv(
            out_dir / "data_rates.csv",
            ("num_tx_antennas", "num_rf_mirrors", "modulation_order", "ris_sm", "ris_mbm", "ris_qsm", "ris_smbm", "flags"),
            [
                (
                    r.num_tx_antennas,
                    r.num_rf_mirrors,
                    r.modulation_order,
                    r.rates["RIS-SM"],
                    r.rates["RIS-MBM"],
                    r.rates["RIS-QSM"],
                    r.rates["RIS-SMBM"],
                    ";".join(
                        f"{s}: formula {r.rates[s]} vs reference {ref}"
                        for s, ref in sorted(r.discrepancies.items())
                    ),
                )
                for r in rows
            ],
        )
    if which in ("all", "table4", "fig2"):
        rows = complexity_table()
        print("Detector complexity [real multiplications] and spectral efficiency [bits/s/Hz]")
        for r in rows:
            print(
                f"M={r.modulation_order} n_T={r.num_tx_antennas} m_rf={r.num_rf_mirrors}"
                f" N={r.num_ris_elements}:"
            )
            for name in ("RIS-SMBM (ML)", "RIS-SMBM (ELC)", "RIS-SM", "RIS-QSM", "RIS-MBM"):
                se = r.spectral_efficiencies["RIS-SMBM" if name.startswith("RIS-SMBM") else name]
                print(f"  {name:<15} RM = {r.real_multiplications[name]:>12.0f}   se = {se}")
        print()
        _write_csv(
            out_dir / "complexity.csv",
            (
                "modulation_order",
                "num_tx_antennas",
                "num_rf_mirrors",
                "num_ris_elements",
                "smbm_ml",
                "smbm_elc",
                "ris_sm",
                "ris_qsm",
                "ris_mbm",
            ),
            [
                (
                    r.modulation_order,
                    r.num_tx_antennas,
                    r.num_rf_mirrors,
                    r.num_ris_elements,
                    r.real_multiplications["RIS-SMBM (ML)"],
                    r.real_multiplications["RIS-SMBM (ELC)"],
                    r.real_multiplications["RIS-SM"],
                    r.real_multiplications["RIS-QSM"],
                    r.real_multiplications["RIS-MBM"],
                )
                for r in rows
            ],
        )


def _resolve_experiments(args) -> list[ExperimentConfig]:
    if args.preset:
        from .presets import get_preset

        experiments = get_preset(args.preset)
    elif args.config:
        experiments = load_experiments(args.config)
    else:
        raise ConfigError("provide a config file or --preset")
    if args.seed is not None:
        experiments = [dataclasses.replace(e, seed=args.seed) for e in experiments]
    return experiments


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ris-smbm",
        description="Link-level simulation and analysis for RIS-aided spatial media-based modulation",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", help="run Monte Carlo BER sweeps")
    sim.add_argument("config", nargs="?", help="INI or JSON experiment file")
    sim.add_argument("--preset", help="built-in experiment set name")
    sim.add_argument("--seed", type=int, help="override every experiment's seed")
    sim.add_argument("--workers", type=int, default=1, help="parallel worker processes")
    sim.add_argument("--out-dir", default=".", help="output directory")

    bnd = sub.add_parser("bound", help="evaluate the analytical ABER bound")
    bnd.add_argument("config", nargs="?", help="INI or JSON experiment file")
    bnd.add_argument("--preset", help="built-in experiment set name")
    bnd.add_argument("--seed", type=int, help="override every experiment's seed")
    bnd.add_argument("--out-dir", default=".", help="output directory")

    tab = sub.add_parser("tables", help="print the comparison tables")
    tab.add_argument(
        "--preset",
        default="all",
        choices=("all", "table2", "table3", "table4", "fig2"),
        help="which table set to print",
    )
    tab.add_argument("--out-dir", default=".", help="output directory")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out_dir = Path(args.out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        if args.command == "simulate":
            for path in cmd_simulate(_resolve_experiments(args), out_dir, args.workers):
                print(f"wrote {path}")
        elif args.command == "bound":
            for path in cmd_bound(_resolve_experiments(args), out_dir):
                print(f"wrote {path}")
        elif args.command == "tables":
            _print_tables(args.preset, out_dir)
    except UnsupportedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
