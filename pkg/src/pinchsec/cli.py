"""Command-line front end: config loading, SNR sweeps, CSV output, checks.

The `sweep` subcommand evaluates the analytical bounds, their high-SNR
asymptotes and the Monte Carlo estimates (PA and FA) on a dB grid of the
transmit SNR rho and writes one CSV row per grid point.  Output is data
only; plotting is left to external tools.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .bounds import esc_asymptotic, esc_bounds, sop_asymptotic, sop_bounds
from .diststats import ZbDistribution, ZwDistribution, cdf_pdf_fd_gap, ks_statistic
from .model import ChannelParams, Scenario, SecrecyTarget
from .montecarlo import McConfig, mc_esc_fa, mc_esc_pa, mc_sop_fa, mc_sop_pa
from .quad import bob_piece, integrate, make_rule, willie_pieces


class ConfigError(ValueError):
    """Invalid or unknown configuration input; message names the key."""


class CliError(RuntimeError):
    pass


_DEFAULT_GRID = tuple(float(s) for s in range(-10, 55, 5))

_KNOWN_KEYS = frozenset({
    "side_length_D", "waveguide_height_d", "carrier_freq_hz",
    "attenuation_alpha", "noise_bob_var", "noise_willie_var",
    "target_rate_bits", "target_rate_bps", "bandwidth_hz",
    "snr_db_grid", "quadrature_n", "mc_trials", "mc_seed",
    "mc_chunk_size", "workers", "output_path",
})


@dataclass(frozen=True)
class RunConfig:
    scenario: Scenario
    carrier_freq: float
    attenuation: float
    noise_bob: float
    noise_willie: float
    target: SecrecyTarget
    snr_db_grid: tuple[float, ...]
    quadrature_n: int
    mc: McConfig
    workers: int
    output_path: str | None

    def base_channel(self) -> ChannelParams:
        return ChannelParams(carrier_freq=self.carrier_freq,
                             attenuation=self.attenuation,
                             tx_power=1.0,
                             noise_bob=self.noise_bob,
                             noise_willie=self.noise_willie)

    def channel_at_snr_db(self, snr_db: float) -> ChannelParams:
        rho = 10.0 ** (snr_db / 10.0)
        return ChannelParams(carrier_freq=self.carrier_freq,
                             attenuation=self.attenuation,
                             tx_power=rho,
                             noise_bob=self.noise_bob,
                             noise_willie=self.noise_willie)


# CSV columns, in emission order
@dataclass(frozen=True)
class SweepRecord:
    snr_db: float
    sop_lb: float
    sop_ub: float
    sop_asym_lb: float
    sop_asym_ub: float
    sop_mc: float
    sop_mc_se: float
    esc_lb: float
    esc_ub: float
    esc_asym_lb: float
    esc_asym_ub: float
    esc_mc: float
    esc_mc_se: float
    fa_sop_mc: float
    fa_esc_mc: float


def _require_number(data, key, default, minimum=None, strict=False):
    value = data.get(key, default)
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{key}: expected a number, got {value!r}")
    value = float(value)
    if not math.isfinite(value):
        raise ConfigError(f"{key}: value must be finite")
    if minimum is not None:
        if strict and not value > minimum:
            raise ConfigError(f"{key}: must be > {minimum}")
        if not strict and not value >= minimum:
            raise ConfigError(f"{key}: must be >= {minimum}")
    return value


def _require_int(data, key, default, minimum):
    value = data.get(key, default)
    if isinstance(value, bool):
        raise ConfigError(f"{key}: expected an integer, got {value!r}")
    if isinstance(value, float):
        if value != int(value):
            raise ConfigError(f"{key}: expected an integer, got {value!r}")
        value = int(value)
    if not isinstance(value, int):
        raise ConfigError(f"{key}: expected an integer, got {value!r}")
    if value < minimum:
        raise ConfigError(f"{key}: must be >= {minimum}")
    return value


def config_from_dict(data: dict) -> RunConfig:
    """RunConfig from a flat key/value mapping; absent keys take defaults."""
    if not isinstance(data, dict):
        raise ConfigError("top-level config must be a JSON object")
    unknown = set(data) - _KNOWN_KEYS
    if unknown:
        raise ConfigError(f"unknown config key: {sorted(unknown)[0]!r}")

    side = _require_number(data, "side_length_D", 25.0, minimum=0.0, strict=True)
    height = _require_number(data, "waveguide_height_d", 3.0, minimum=0.0, strict=True)
    carrier = _require_number(data, "carrier_freq_hz", 10e9, minimum=0.0, strict=True)
    alpha = _require_number(data, "attenuation_alpha", 0.01, minimum=0.0)
    noise_b = _require_number(data, "noise_bob_var", 1.0, minimum=0.0, strict=True)
    noise_w = _require_number(data, "noise_willie_var", 1.0, minimum=0.0, strict=True)

    if "target_rate_bits" in data and "target_rate_bps" in data:
        raise ConfigError("target_rate_bits and target_rate_bps are mutually exclusive")
    if "bandwidth_hz" in data and "target_rate_bps" not in data:
        raise ConfigError("bandwidth_hz requires target_rate_bps")
    if "target_rate_bps" in data:
        bps = _require_number(data, "target_rate_bps", None, minimum=0.0)
        bw = _require_number(data, "bandwidth_hz", 1e6, minimum=0.0, strict=True)
        rate = bps / bw
    else:
        rate = _require_number(data, "target_rate_bits", 0.01, minimum=0.0)

    grid = data.get("snr_db_grid", list(_DEFAULT_GRID))
    if not isinstance(grid, (list, tuple)) or len(grid) == 0:
        raise ConfigError("snr_db_grid: expected a nonempty list of dB values")
    try:
        grid = tuple(float(v) for v in grid)
    except (TypeError, ValueError):
        raise ConfigError("snr_db_grid: entries must be numbers") from None
    if not all(math.isfinite(v) for v in grid):
        raise ConfigError("snr_db_grid: entries must be finite")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ConfigError("snr_db_grid: values must be strictly increasing")

    quad_n = _require_int(data, "quadrature_n", 1000, minimum=1)
    trials = _require_int(data, "mc_trials", 50000, minimum=100)
    seed = _require_int(data, "mc_seed", 12345, minimum=0)
    chunk = _require_int(data, "mc_chunk_size", 4096, minimum=1)
    workers = _require_int(data, "workers", 1, minimum=1)

    out = data.get("output_path")
    if out is not None and not isinstance(out, str):
        raise ConfigError("output_path: expected a string")

    try:
        return RunConfig(scenario=Scenario(side_length=side, waveguide_height=height),
                         carrier_freq=carrier,
                         attenuation=alpha,
                         noise_bob=noise_b,
                         noise_willie=noise_w,
                         target=SecrecyTarget(rate=rate),
                         snr_db_grid=grid,
                         quadrature_n=quad_n,
                         mc=McConfig(trials=trials, seed=seed, chunk_size=chunk),
                         workers=workers,
                         output_path=out)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def load_config(path: str) -> RunConfig:
    """Parse a flat JSON config file; an empty file means all defaults."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path!r}: {exc}") from exc
    if text.strip() == "":
        return config_from_dict({})
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path!r} is not valid JSON: {exc}") from exc
    return config_from_dict(data)


def _sweep_point(cfg: RunConfig, rule, snr_db: float) -> SweepRecord:
    chan = cfg.channel_at_snr_db(snr_db)
    sop = sop_bounds(cfg.scenario, chan, cfg.target, rule)
    sop_asym = sop_asymptotic(cfg.scenario, chan, cfg.target, rule)
    esc = esc_bounds(cfg.scenario, chan, rule)
    esc_asym = esc_asymptotic(cfg.scenario, chan, rule)
    sop_mc = mc_sop_pa(cfg.scenario, chan, cfg.target, cfg.mc)
    esc_mc = mc_esc_pa(cfg.scenario, chan, cfg.mc)
    fa_sop = mc_sop_fa(cfg.scenario, chan, cfg.target, cfg.mc)
    fa_esc = mc_esc_fa(cfg.scenario, chan, cfg.mc)
    record = SweepRecord(snr_db=snr_db,
                         sop_lb=sop.lower, sop_ub=sop.upper,
                         sop_asym_lb=sop_asym.lower, sop_asym_ub=sop_asym.upper,
                         sop_mc=sop_mc.mean, sop_mc_se=sop_mc.std_error,
                         esc_lb=esc.lower, esc_ub=esc.upper,
                         esc_asym_lb=esc_asym.lower, esc_asym_ub=esc_asym.upper,
                         esc_mc=esc_mc.mean, esc_mc_se=esc_mc.std_error,
                         fa_sop_mc=fa_sop.mean, fa_esc_mc=fa_esc.mean)
    for name, value in dataclasses.asdict(record).items():
        if not math.isfinite(value):
            raise CliError(f"non-finite {name} at snr_db = {snr_db}")
    return record


def run_sweep(cfg: RunConfig) -> list[SweepRecord]:
    """One SweepRecord per grid point, in grid order."""
    if cfg.noise_bob != cfg.noise_willie:
        raise ConfigError("sweep needs noise_bob_var == noise_willie_var; "
                          "use mc-only for distinct noise levels")
    rule = make_rule(cfg.quadrature_n)
    if cfg.workers <= 1:
        return [_sweep_point(cfg, rule, s) for s in cfg.snr_db_grid]
    with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
        return list(pool.map(lambda s: _sweep_point(cfg, rule, s), cfg.snr_db_grid))


def _format_value(value) -> str:
    # repr of a float is the shortest string that parses back to the same bits
    return repr(float(value))


def csv_lines(records) -> list[str]:
    names = [f.name for f in dataclasses.fields(SweepRecord)]
    lines = [",".join(names)]
    for rec in records:
        lines.append(",".join(_format_value(getattr(rec, name)) for name in names))
    return lines


def write_csv(records, path: str) -> None:
    """Write records with an exact header row and LF line endings."""
    try:
        with open(path, "w", encoding="ascii", newline="") as fh:
            for line in csv_lines(records):
                fh.write(line + "\n")
    except OSError as exc:
        raise CliError(f"cannot write {path!r}: {exc}") from exc


def read_csv(path: str) -> list[SweepRecord]:
    """Inverse of write_csv; round-trips every value exactly."""
    with open(path, "r", encoding="ascii", newline="") as fh:
        lines = fh.read().split("\n")
    names = [f.name for f in dataclasses.fields(SweepRecord)]
    if lines[0] != ",".join(names):
        raise CliError(f"unexpected CSV header in {path!r}")
    records = []
    for line in lines[1:]:
        if line == "":
            continue
        parts = line.split(",")
        if len(parts) != len(names):
            raise CliError(f"malformed CSV row: {line!r}")
        records.append(SweepRecord(**{n: float(v) for n, v in zip(names, parts)}))
    return records


@dataclass(frozen=True)
class StatsCheck:
    name: str
    value: float
    tolerance: float
    passed: bool


@dataclass(frozen=True)
class StatsReport:
    checks: tuple[StatsCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            verdict = "PASS" if c.passed else "FAIL"
            out.append(f"{c.name}: {c.value:.6e} (tolerance {c.tolerance:.3e}) {verdict}")
        out.append("all checks passed" if self.passed else "SOME CHECKS FAILED")
        return out

    def __str__(self) -> str:
        return "\n".join(self.lines())


_NORMALIZATION_NODES = 65536


def _pdf_normalization_residuals(zb: ZbDistribution, zw: ZwDistribution) -> tuple[float, float]:
    rule = make_rule(_NORMALIZATION_NODES)
    piece = bob_piece(zb.side_length, zb.height)

    def g_bob(t):
        return zb.pdf(piece.map(t)) * piece.scale * np.sqrt(1.0 - t * t)

    total_b = integrate(rule, g_bob)
    total_w = 0.0
    branches = (zw.pdf_piece1, zw.pdf_piece2, zw.pdf_piece3)
    for pc, branch in zip(willie_pieces(zw.side_length, zw.height), branches):
        def g(t, pc=pc, branch=branch):
            return branch(pc.map(t)) * pc.scale * np.sqrt(1.0 - t * t)

        total_w += integrate(rule, g)
    return abs(total_b - 1.0), abs(total_w - 1.0)


def validate_stats(cfg: RunConfig, ks_samples: int = 200000,
                   sample_zb_dist: ZbDistribution | None = None,
                   sample_zw_dist: ZwDistribution | None = None) -> StatsReport:
    """Self-checks of the distance distributions against their samplers.

    sample_*_dist override which distribution generates the KS samples
    (the analytical CDFs always come from cfg); they exist so a deliberate
    mismatch can be demonstrated to fail.
    """
    if ks_samples < 1:
        raise ValueError("ks_samples must be >= 1")
    zb = ZbDistribution(cfg.scenario.side_length, cfg.scenario.waveguide_height)
    zw = ZwDistribution(cfg.scenario.side_length, cfg.scenario.waveguide_height)
    res_b, res_w = _pdf_normalization_residuals(zb, zw)

    b0, b1, b2, b3 = zw.breakpoints
    cont1 = abs(float(zw.cdf_piece1(b1)) - float(zw.cdf_piece2(b1)))
    cont2 = abs(float(zw.cdf_piece2(b2)) - float(zw.cdf_piece3(b2)))
    cont3 = abs(float(zw.cdf_piece3(b3)) - 1.0)

    crit = 1.63 / math.sqrt(ks_samples)
    draws_b = (sample_zb_dist or zb).sample(np.random.default_rng(cfg.mc.seed), ks_samples)
    draws_w = (sample_zw_dist or zw).sample(np.random.default_rng(cfg.mc.seed), ks_samples)
    ks_b = ks_statistic(draws_b, zb.cdf)
    ks_w = ks_statistic(draws_w, zw.cdf)

    fd_b = cdf_pdf_fd_gap(zb)
    fd_w = cdf_pdf_fd_gap(zw)

    checks = (
        StatsCheck("pdf_zb normalization residual", res_b, 1e-8, res_b < 1e-8),
        StatsCheck("pdf_zw normalization residual", res_w, 1e-8, res_w < 1e-8),
        StatsCheck("cdf_zw continuity at first breakpoint", cont1, 1e-9, cont1 < 1e-9),
        StatsCheck("cdf_zw continuity at second breakpoint", cont2, 1e-9, cont2 < 1e-9),
        StatsCheck("cdf_zw closure at support end", cont3, 1e-9, cont3 < 1e-9),
        StatsCheck("KS statistic Zb sampler", ks_b, crit, ks_b < crit),
        StatsCheck("KS statistic Zw sampler", ks_w, crit, ks_w < crit),
        StatsCheck("CDF-PDF consistency Zb", fd_b, 1e-5, fd_b < 1e-5),
        StatsCheck("CDF-PDF consistency Zw", fd_w, 1e-5, fd_w < 1e-5),
    )
    return StatsReport(checks=checks)


def _summary_lines(records) -> list[str]:
    lines = [f"{'snr_db':>7} {'sop_lb':>10} {'sop_ub':>10} {'sop_mc':>10} "
             f"{'esc_lb':>10} {'esc_ub':>10} {'esc_mc':>10} {'fa_sop':>10} {'fa_esc':>10}"]
    for r in records:
        lines.append(f"{r.snr_db:>7.1f} {r.sop_lb:>10.6f} {r.sop_ub:>10.6f} "
                     f"{r.sop_mc:>10.6f} {r.esc_lb:>10.6f} {r.esc_ub:>10.6f} "
                     f"{r.esc_mc:>10.6f} {r.fa_sop_mc:>10.6f} {r.fa_esc_mc:>10.6f}")
    return lines


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pinchsec",
        description="Secrecy outage and ergodic secrecy capacity of a "
                    "pinching-antenna system versus a fixed-antenna baseline.")
    sub = parser.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="PATH", help="JSON config file")
    common.add_argument("--out", metavar="PATH", help="output CSV path")
    common.add_argument("--seed", type=int, help="Monte Carlo seed")
    common.add_argument("--trials", type=int, help="Monte Carlo trials")
    common.add_argument("--quad-n", type=int, help="quadrature node count")
    common.add_argument("--snr-db", metavar="LIST",
                        help="comma-separated dB grid, e.g. 0,10,20")
    common.add_argument("--alpha", type=float, help="attenuation in nepers/m")
    common.add_argument("--workers", type=int, help="concurrent grid workers")
    for name, help_text in (
            ("sweep", "bounds + asymptotes + Monte Carlo over the grid, to CSV"),
            ("sop", "outage bounds and Monte Carlo per grid point"),
            ("esc", "capacity bounds and Monte Carlo per grid point"),
            ("validate-stats", "distribution self-checks"),
            ("mc-only", "Monte Carlo estimates only (allows unequal noises)")):
        sub.add_parser(name, parents=[common], help=help_text)
    return parser


def _config_from_args(args) -> RunConfig:
    cfg = load_config(args.config) if args.config else config_from_dict({})
    overrides = {}
    if args.seed is not None:
        overrides["mc"] = dataclasses.replace(cfg.mc, seed=args.seed)
    if args.trials is not None:
        base = overrides.get("mc", cfg.mc)
        overrides["mc"] = dataclasses.replace(base, trials=args.trials)
    if args.quad_n is not None:
        overrides["quadrature_n"] = args.quad_n
    if args.alpha is not None:
        if args.alpha < 0:
            raise ConfigError("--alpha must be >= 0")
        overrides["attenuation"] = args.alpha
    if args.snr_db is not None:
        try:
            grid = tuple(float(v) for v in args.snr_db.split(","))
        except ValueError:
            raise ConfigError(f"--snr-db: cannot parse {args.snr_db!r}") from None
        if len(grid) == 0 or any(b <= a for a, b in zip(grid, grid[1:])):
            raise ConfigError("--snr-db: values must be strictly increasing")
        overrides["snr_db_grid"] = grid
    if args.workers is not None:
        if args.workers < 1:
            raise ConfigError("--workers must be >= 1")
        overrides["workers"] = args.workers
    if args.out is not None:
        overrides["output_path"] = args.out
    try:
        return dataclasses.replace(cfg, **overrides) if overrides else cfg
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def _cmd_sweep(cfg: RunConfig) -> int:
    records = run_sweep(cfg)
    if cfg.output_path:
        write_csv(records, cfg.output_path)
        print(f"wrote {len(records)} grid points to {cfg.output_path}")
        for line in _summary_lines(records):
            print(line)
    else:
        for line in csv_lines(records):
            print(line)
    return 0


def _cmd_single_metric(cfg: RunConfig, want_sop: bool) -> int:
    if cfg.noise_bob != cfg.noise_willie:
        raise ConfigError("analytical bounds need equal noise variances")
    rule = make_rule(cfg.quadrature_n)
    for snr in cfg.snr_db_grid:
        chan = cfg.channel_at_snr_db(snr)
        if want_sop:
            pair = sop_bounds(cfg.scenario, chan, cfg.target, rule)
            asym = sop_asymptotic(cfg.scenario, chan, cfg.target, rule)
            est = mc_sop_pa(cfg.scenario, chan, cfg.target, cfg.mc, workers=cfg.workers)
            label = "sop"
        else:
            pair = esc_bounds(cfg.scenario, chan, rule)
            asym = esc_asymptotic(cfg.scenario, chan, rule)
            est = mc_esc_pa(cfg.scenario, chan, cfg.mc, workers=cfg.workers)
            label = "esc"
        print(f"snr_db {snr:g}: {label} in [{pair.lower:.12g}, {pair.upper:.12g}], "
              f"asymptote [{asym.lower:.12g}, {asym.upper:.12g}], "
              f"mc {est.mean:.12g} +/- {est.std_error:.3g}")
    return 0


def _cmd_mc_only(cfg: RunConfig) -> int:
    for snr in cfg.snr_db_grid:
        chan = cfg.channel_at_snr_db(snr)
        sop = mc_sop_pa(cfg.scenario, chan, cfg.target, cfg.mc, workers=cfg.workers)
        esc = mc_esc_pa(cfg.scenario, chan, cfg.mc, workers=cfg.workers)
        fa_sop = mc_sop_fa(cfg.scenario, chan, cfg.target, cfg.mc, workers=cfg.workers)
        fa_esc = mc_esc_fa(cfg.scenario, chan, cfg.mc, workers=cfg.workers)
        print(f"snr_db {snr:g}: pa_sop {sop.mean:.12g} +/- {sop.std_error:.3g}, "
              f"pa_esc {esc.mean:.12g} +/- {esc.std_error:.3g}, "
              f"fa_sop {fa_sop.mean:.12g}, fa_esc {fa_esc.mean:.12g}")
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        cfg = _config_from_args(args)
        if args.command == "sweep":
            return _cmd_sweep(cfg)
        if args.command == "sop":
            return _cmd_single_metric(cfg, want_sop=True)
        if args.command == "esc":
            return _cmd_single_metric(cfg, want_sop=False)
        if args.command == "mc-only":
            return _cmd_mc_only(cfg)
        if args.command == "validate-stats":
            report = validate_stats(cfg)
            print(report)
            return 0 if report.passed else 1
        raise CliError(f"unhandled command {args.command!r}")
    except (ConfigError, CliError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
