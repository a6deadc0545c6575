"""Seeded Monte Carlo estimates of the exact-model SOP and ESC.

Unlike the analytical bounds, every trial applies the exact guided loss
exp(-2*alpha*(x1 + D/2)) for the sampled Bob position.  Trials are split
into fixed-size chunks; chunk k draws from a child stream spawned from
(seed, k) and partial results are reduced in chunk order, so estimates
are bit-identical for a given (seed, trials, chunk_size) at any worker
count.  All four estimators consume the identical position stream, which
makes paired PA-vs-FA comparisons common-random-number comparisons.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .diststats import _draw_positions
from .model import ChannelParams, Scenario, SecrecyTarget, los_rate


@dataclass(frozen=True)
class McConfig:
    trials: int = 50000
    seed: int = 12345
    chunk_size: int = 4096

    def __post_init__(self):
        if self.trials < 100:
            raise ValueError("trials must be >= 100")
        if self.chunk_size < 1:
            raise ValueError("chunk_size must be >= 1")
        if not (0 <= self.seed < 2 ** 64):
            raise ValueError("seed must fit in 64 bits")

    @property
    def n_chunks(self) -> int:
        return (self.trials + self.chunk_size - 1) // self.chunk_size


@dataclass(frozen=True)
class McEstimate:
    mean: float
    std_error: float
    trials: int


def _chunk_positions(scenario: Scenario, cfg: McConfig, k: int):
    size = min(cfg.chunk_size, cfg.trials - k * cfg.chunk_size)
    rng = np.random.default_rng(np.random.SeedSequence(entropy=cfg.seed, spawn_key=(k,)))
    return _draw_positions(rng, scenario.side_length, size)


def _pa_secrecy(scenario: Scenario, chan: ChannelParams, positions):
    x1, x2, y1, y2 = positions
    d2 = scenario.waveguide_height ** 2
    guided = x1 + scenario.side_length / 2.0
    zb = y1 ** 2 + d2
    zw = (x1 - x2) ** 2 + y2 ** 2 + d2
    return (los_rate(zb, chan, chan.noise_bob, guided)
            - los_rate(zw, chan, chan.noise_willie, guided))


def _fa_secrecy(scenario: Scenario, chan: ChannelParams, positions):
    x1, x2, y1, y2 = positions
    d2 = scenario.waveguide_height ** 2
    zb = x1 ** 2 + y1 ** 2 + d2
    zw = x2 ** 2 + y2 ** 2 + d2
    return (los_rate(zb, chan, chan.noise_bob)
            - los_rate(zw, chan, chan.noise_willie))


def _map_chunks(fn, cfg: McConfig, workers: int) -> list:
    ks = range(cfg.n_chunks)
    if workers <= 1:
        return [fn(k) for k in ks]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, ks))


def _outage_estimate(rates_of, scenario, chan, target, cfg, workers) -> McEstimate:
    def count(k):
        rs = rates_of(scenario, chan, _chunk_positions(scenario, cfg, k))
        return int(np.sum(rs < target.rate))

    total = sum(_map_chunks(count, cfg, workers))
    p = total / cfg.trials
    se = math.sqrt(p * (1.0 - p) / cfg.trials)
    return McEstimate(mean=p, std_error=se, trials=cfg.trials)


def _mean_estimate(rates_of, scenario, chan, cfg, workers) -> McEstimate:
    def sums(k):
        rs = rates_of(scenario, chan, _chunk_positions(scenario, cfg, k))
        return float(np.sum(rs)), float(np.sum(rs * rs))

    s = s2 = 0.0
    for a, b in _map_chunks(sums, cfg, workers):  # fixed chunk order
        s += a
        s2 += b
    n = cfg.trials
    mean = s / n
    var = max((s2 - s * s / n) / (n - 1), 0.0)
    return McEstimate(mean=mean, std_error=math.sqrt(var / n), trials=n)


def mc_sop_pa(scenario: Scenario, chan: ChannelParams, target: SecrecyTarget,
              cfg: McConfig, workers: int = 1) -> McEstimate:
    """Fraction of placements whose exact secrecy rate falls below the target."""
    return _outage_estimate(_pa_secrecy, scenario, chan, target, cfg, workers)


def mc_esc_pa(scenario: Scenario, chan: ChannelParams,
              cfg: McConfig, workers: int = 1) -> McEstimate:
    """Sample mean of the exact secrecy rate over random placements."""
    return _mean_estimate(_pa_secrecy, scenario, chan, cfg, workers)


def mc_sop_fa(scenario: Scenario, chan: ChannelParams, target: SecrecyTarget,
              cfg: McConfig, workers: int = 1) -> McEstimate:
    """Outage of the fixed-antenna baseline on the same position stream."""
    return _outage_estimate(_fa_secrecy, scenario, chan, target, cfg, workers)


def mc_esc_fa(scenario: Scenario, chan: ChannelParams,
              cfg: McConfig, workers: int = 1) -> McEstimate:
    return _mean_estimate(_fa_secrecy, scenario, chan, cfg, workers)
