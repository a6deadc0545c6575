"""Chebyshev-Gauss quadrature and the affine piece maps onto [-1, 1].

The n-node rule has nodes t_i = cos((2i-1)pi/(2n)) and equal weights pi/n.
Every integrand passed to integrate() must already contain the
sqrt(1 - t^2) compensation factor, so that sum(w * g(t)) approximates the
plain integral of the underlying function over its piece.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class QuadratureRule:
    nodes: np.ndarray
    weights: np.ndarray

    @property
    def n(self) -> int:
        return self.nodes.size


def make_rule(n: int) -> QuadratureRule:
    """n-node Chebyshev-Gauss rule; nodes lie strictly inside (-1, 1)."""
    if n < 1:
        raise ValueError("node count must be >= 1")
    i = np.arange(1, n + 1)
    nodes = np.cos((2 * i - 1) * np.pi / (2 * n))
    weights = np.full(n, np.pi / n)
    nodes.flags.writeable = False
    weights.flags.writeable = False
    return QuadratureRule(nodes=nodes, weights=weights)


def integrate(rule: QuadratureRule, integrand) -> float:
    """sum(w_i * g(t_i)) for a vectorized integrand g.

    The summation order is fixed (numpy pairwise over the node array), so
    results are bit-stable for a given rule regardless of caller threading.
    """
    values = np.asarray(integrand(rule.nodes), dtype=float)
    values = np.broadcast_to(values, rule.nodes.shape)
    bad = ~np.isfinite(values)
    if np.any(bad):
        i = int(np.argmax(bad))
        raise ValueError(f"integrand not finite at node {i} (t = {rule.nodes[i]!r}: "
                         f"value {values[i]!r})")
    return float(np.sum(rule.weights * values))


@dataclass(frozen=True)
class PieceMap:
    """Affine substitution z = scale * t + offset for one distribution piece."""

    scale: float
    offset: float

    def map(self, t):
        return self.scale * np.asarray(t, dtype=float) + self.offset

    @property
    def z_range(self) -> tuple[float, float]:
        return (self.offset - self.scale, self.offset + self.scale)


def bob_piece(side_length: float, height: float) -> PieceMap:
    """Single piece covering the Zb support [d^2, d^2 + D^2/4]."""
    D2 = side_length ** 2
    return PieceMap(scale=D2 / 8.0, offset=D2 / 8.0 + height ** 2)


def willie_pieces(side_length: float, height: float) -> tuple[PieceMap, PieceMap, PieceMap]:
    """Three pieces covering the Zw support, one per density branch."""
    D2 = side_length ** 2
    d2 = height ** 2
    return (PieceMap(scale=D2 / 8.0, offset=D2 / 8.0 + d2),
            PieceMap(scale=3.0 * D2 / 8.0, offset=5.0 * D2 / 8.0 + d2),
            PieceMap(scale=D2 / 8.0, offset=9.0 * D2 / 8.0 + d2))
