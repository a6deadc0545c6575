"""Analytical secrecy-outage and ergodic-secrecy-capacity bounds.

The exact guided power loss exp(-2*alpha*L) varies with Bob's position.
Replacing it by its best case (factor 1) on one link and its worst case
(exp(-2*alpha*D)) on the other yields stochastically ordered systems, so
each metric gets a closed-form upper and lower bound expressed through
the Zb/Zw distance distributions.  Integrals over the Zw pieces are
evaluated with Chebyshev-Gauss quadrature; every integrand carries its
sqrt(1 - t^2) compensation factor.

Both metrics saturate at high SNR (the same loss and geometry face Bob
and Willie), so the diversity order and high-SNR slope are zero; the
finite-difference estimators let callers confirm that numerically.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from .diststats import ZbDistribution, ZwDistribution
from .model import ChannelParams, Scenario, SecrecyTarget
from .quad import QuadratureRule, bob_piece, integrate, willie_pieces

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BoundCoefficients:
    """Constant attenuation factors substituted for the exact guided loss.

    bob_factor scales Bob's received power, willie_factor Willie's.  The
    four bound directions use (exp(-2 alpha D), 1) or (1, exp(-2 alpha D)).
    """

    bob_factor: float
    willie_factor: float

    def __post_init__(self):
        if not (0 < self.bob_factor <= 1 and 0 < self.willie_factor <= 1):
            raise ValueError("attenuation factors must lie in (0, 1]")


@dataclass(frozen=True)
class BoundPair:
    lower: float
    upper: float

    @property
    def width(self) -> float:
        return self.upper - self.lower


@dataclass(frozen=True)
class TermSums:
    """Quadrature sums of the per-piece integrands of one bound direction."""

    willie_piece1: float = 0.0
    willie_piece2: float = 0.0
    willie_piece3: float = 0.0
    bob: float = 0.0

    @property
    def willie_total(self) -> float:
        return self.willie_piece1 + self.willie_piece2 + self.willie_piece3

    def as_tuple(self) -> tuple[float, ...]:
        return (self.willie_piece1, self.willie_piece2, self.willie_piece3, self.bob)


def attenuation_span(scenario: Scenario, chan: ChannelParams) -> float:
    """Worst-case guided power loss exp(-2 * alpha * D)."""
    return math.exp(-2.0 * chan.attenuation * scenario.side_length)


def sop_coefficients(scenario: Scenario, chan: ChannelParams) -> tuple[BoundCoefficients, BoundCoefficients]:
    """(upper-bound pair, lower-bound pair) for the outage probability."""
    span = attenuation_span(scenario, chan)
    return (BoundCoefficients(bob_factor=span, willie_factor=1.0),
            BoundCoefficients(bob_factor=1.0, willie_factor=span))


def esc_coefficients(scenario: Scenario, chan: ChannelParams) -> tuple[BoundCoefficients, BoundCoefficients]:
    """(upper-bound pair, lower-bound pair) for the ergodic secrecy capacity."""
    span = attenuation_span(scenario, chan)
    return (BoundCoefficients(bob_factor=1.0, willie_factor=span),
            BoundCoefficients(bob_factor=span, willie_factor=1.0))


def sop_threshold(z_w, coeff: BoundCoefficients, chan: ChannelParams,
                  target: SecrecyTarget):
    """Largest Zb that still avoids secrecy outage, given Willie at z_w.

    threshold = eta*rho*A / (4^Rbar - 1 + 4^Rbar * eta*rho*B / z_w).
    A nonpositive denominator (degenerate zero-target limits) maps to
    +inf, meaning no Zb causes outage.
    """
    z = np.asarray(z_w, dtype=float)
    if np.any(z <= 0):
        raise ValueError("z_w must be positive")
    eta_rho = chan.eta * chan.rho
    fr = target.threshold
    denom = (fr - 1.0) + fr * eta_rho * coeff.willie_factor / z
    safe = np.where(denom > 0, denom, 1.0)
    return np.where(denom > 0, eta_rho * coeff.bob_factor / safe, np.inf)


def _distributions(scenario: Scenario) -> tuple[ZbDistribution, ZwDistribution]:
    return (ZbDistribution(scenario.side_length, scenario.waveguide_height),
            ZwDistribution(scenario.side_length, scenario.waveguide_height))


def _willie_sums(scenario: Scenario, rule: QuadratureRule, value_of_z) -> list[float]:
    """Integrate value_of_z(z) against each Zw density branch over its piece."""
    _, zw = _distributions(scenario)
    pieces = willie_pieces(scenario.side_length, scenario.waveguide_height)
    branches = (zw.pdf_piece1, zw.pdf_piece2, zw.pdf_piece3)
    sums = []
    for piece, branch in zip(pieces, branches):
        def g(t, piece=piece, branch=branch):
            z = piece.map(t)
            return value_of_z(z) * branch(z) * piece.scale * np.sqrt(1.0 - t * t)
        sums.append(integrate(rule, g))
    return sums


def _bob_sum(scenario: Scenario, rule: QuadratureRule, value_of_z) -> float:
    zb, _ = _distributions(scenario)
    piece = bob_piece(scenario.side_length, scenario.waveguide_height)

    def g(t):
        z = piece.map(t)
        return value_of_z(z) * zb.pdf(z) * piece.scale * np.sqrt(1.0 - t * t)

    return integrate(rule, g)


def sop_term_sums(scenario: Scenario, chan: ChannelParams, target: SecrecyTarget,
                  rule: QuadratureRule, coeff: BoundCoefficients) -> TermSums:
    """No-outage mass F_Zb(threshold(z)) integrated over the Zw pieces."""
    zb, _ = _distributions(scenario)

    def no_outage(z):
        return zb.cdf(sop_threshold(z, coeff, chan, target))

    j, k, l = _willie_sums(scenario, rule, no_outage)
    return TermSums(willie_piece1=j, willie_piece2=k, willie_piece3=l)


def sop_asymptotic_term_sums(scenario: Scenario, target: SecrecyTarget,
                             rule: QuadratureRule, coeff: BoundCoefficients) -> TermSums:
    """High-SNR limit: the threshold collapses to z * A / (4^Rbar * B)."""
    zb, _ = _distributions(scenario)
    factor = coeff.bob_factor / (target.threshold * coeff.willie_factor)

    def no_outage(z):
        return zb.cdf(z * factor)

    j, k, l = _willie_sums(scenario, rule, no_outage)
    return TermSums(willie_piece1=j, willie_piece2=k, willie_piece3=l)


def esc_term_sums(scenario: Scenario, chan: ChannelParams,
                  rule: QuadratureRule, coeff: BoundCoefficients) -> TermSums:
    """Rate integrands for one ESC bound direction.

    bob: log2(1 + eta*rho*A/z) against the Zb density;
    willie pieces: log2(1 + eta*rho*B/z) against the Zw branches.
    """
    eta_rho = chan.eta * chan.rho

    def bob_rate(z):
        return np.log2(1.0 + eta_rho * coeff.bob_factor / z)

    def willie_rate(z):
        return np.log2(1.0 + eta_rho * coeff.willie_factor / z)

    c = _bob_sum(scenario, rule, bob_rate)
    j, k, l = _willie_sums(scenario, rule, willie_rate)
    return TermSums(willie_piece1=j, willie_piece2=k, willie_piece3=l, bob=c)


def log2_moment_sums(scenario: Scenario, rule: QuadratureRule) -> TermSums:
    """E[log2 Zb] (bob) and the per-piece parts of E[log2 Zw] (willie_*)."""
    c = _bob_sum(scenario, rule, np.log2)
    j, k, l = _willie_sums(scenario, rule, np.log2)
    return TermSums(willie_piece1=j, willie_piece2=k, willie_piece3=l, bob=c)


def _clamp_probability(value: float, label: str) -> float:
    if 0.0 <= value <= 1.0:
        return value
    logger.warning("clamping %s from %.17g into [0, 1]", label, value)
    return min(1.0, max(0.0, value))


def sop_bounds(scenario: Scenario, chan: ChannelParams, target: SecrecyTarget,
               rule: QuadratureRule) -> BoundPair:
    """Secrecy outage probability bracket at the channel's rho."""
    up_coeff, lo_coeff = sop_coefficients(scenario, chan)
    upper = 1.0 - sop_term_sums(scenario, chan, target, rule, up_coeff).willie_total
    lower = 1.0 - sop_term_sums(scenario, chan, target, rule, lo_coeff).willie_total
    return BoundPair(lower=_clamp_probability(lower, "sop lower bound"),
                     upper=_clamp_probability(upper, "sop upper bound"))


def sop_asymptotic(scenario: Scenario, chan: ChannelParams, target: SecrecyTarget,
                   rule: QuadratureRule) -> BoundPair:
    """High-SNR saturation levels of the SOP bracket; independent of rho."""
    up_coeff, lo_coeff = sop_coefficients(scenario, chan)
    upper = 1.0 - sop_asymptotic_term_sums(scenario, target, rule, up_coeff).willie_total
    lower = 1.0 - sop_asymptotic_term_sums(scenario, target, rule, lo_coeff).willie_total
    return BoundPair(lower=_clamp_probability(lower, "sop asymptotic lower bound"),
                     upper=_clamp_probability(upper, "sop asymptotic upper bound"))


def esc_bounds(scenario: Scenario, chan: ChannelParams,
               rule: QuadratureRule) -> BoundPair:
    """Ergodic secrecy capacity bracket; the 1/2 pre-log is applied here."""
    up_coeff, lo_coeff = esc_coefficients(scenario, chan)
    up = esc_term_sums(scenario, chan, rule, up_coeff)
    lo = esc_term_sums(scenario, chan, rule, lo_coeff)
    return BoundPair(lower=0.5 * (lo.bob - lo.willie_total),
                     upper=0.5 * (up.bob - up.willie_total))


def esc_asymptotic(scenario: Scenario, chan: ChannelParams,
                   rule: QuadratureRule) -> BoundPair:
    """High-SNR ESC levels from the log2 distance moments.

    upper/lower = (1/2) * (E[log2 Zw] - E[log2 Zb] -/+ log2(exp(-2 alpha D))).
    The log of the span is negative, so "minus" is the upper side.
    """
    span = attenuation_span(scenario, chan)
    ms = log2_moment_sums(scenario, rule)
    gap = ms.willie_total - ms.bob
    log_span = math.log2(span)
    return BoundPair(lower=0.5 * (gap + log_span),
                     upper=0.5 * (gap - log_span))


def diversity_estimate(sop_at, rho1: float, rho2: float) -> float:
    """Finite-difference log-log slope of an outage curve, negated.

    Saturating outage gives an estimate near zero.
    """
    if not (0 < rho1 < rho2):
        raise ValueError("need 0 < rho1 < rho2")
    p1, p2 = float(sop_at(rho1)), float(sop_at(rho2))
    if p1 <= 0 or p2 <= 0:
        raise ValueError("outage probabilities must be positive")
    return -(math.log(p2) - math.log(p1)) / (math.log(rho2) - math.log(rho1))


def slope_estimate(esc_at, rho1: float, rho2: float) -> float:
    """Finite-difference high-SNR slope of a rate curve in bits per log2(rho)."""
    if not (0 < rho1 < rho2):
        raise ValueError("need 0 < rho1 < rho2")
    r1, r2 = float(esc_at(rho1)), float(esc_at(rho2))
    return (r2 - r1) / (math.log2(rho2) - math.log2(rho1))
