"""Received power and required transmit gain for an exponent path-loss link.

The classic free-space relation

    P_r = P_t * G_t * G_r * lambda^2 / ((4 pi)^2 * d^2 * L)

is generalized by replacing d^2 with d^n at an implicit 1 m reference
distance. A single exponent n in [2, 5] then spans free space (n = 2)
through heavily obstructed ground-level links (n = 4..5). Distances below
the 1 m reference are rejected rather than clamped: the far-field model is
meaningless there, and silent clamping would hide caller bugs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class LinkBudgetParams:
    """Link constants: transmit/threshold power, receive gain, loss, wavelength, exponent.

    Attributes:
        p_t_w: transmit power in watts.
        p_min_w: receiver sensitivity (minimum detectable power) in watts.
        g_r: receiver antenna gain, linear.
        system_loss: aggregate system loss, linear, at least 1.
        wavelength_m: carrier wavelength in meters.
        n: path loss exponent, in [2, 5].
    """

    p_t_w: float
    p_min_w: float
    g_r: float = 1.0
    system_loss: float = 1.0
    wavelength_m: float = 0.0508
    n: float = 2.0

    def __post_init__(self) -> None:
        if not (self.p_t_w > 0.0 and math.isfinite(self.p_t_w)):
            raise ValueError(f"p_t_w must be positive, got {self.p_t_w!r}")
        if not (self.p_min_w > 0.0 and math.isfinite(self.p_min_w)):
            raise ValueError(f"p_min_w must be positive, got {self.p_min_w!r}")
        if not (self.g_r > 0.0 and math.isfinite(self.g_r)):
            raise ValueError(f"g_r must be positive, got {self.g_r!r}")
        if not (self.system_loss >= 1.0 and math.isfinite(self.system_loss)):
            raise ValueError(f"system_loss must be >= 1, got {self.system_loss!r}")
        if not (self.wavelength_m > 0.0 and math.isfinite(self.wavelength_m)):
            raise ValueError(f"wavelength_m must be positive, got {self.wavelength_m!r}")
        if not (2.0 <= self.n <= 5.0):
            raise ValueError(f"path loss exponent must be in [2, 5], got {self.n!r}")


def gain_coefficient(params: LinkBudgetParams) -> float:
    """Constant K such that the required transmit gain at distance d is K * d**n.

    This is the required gain at the 1 m reference distance.
    """
    return (
        params.p_min_w
        * (4.0 * math.pi) ** 2
        * params.system_loss
        / (params.p_t_w * params.g_r * params.wavelength_m**2)
    )


def received_power(params: LinkBudgetParams, g_t, distance_m):
    """Received power in watts for transmit gain g_t (linear) at distance_m meters.

    Accepts scalars or numpy arrays. Every distance must be at least the
    1 m reference and every gain strictly positive.
    """
    g = np.asarray(g_t, dtype=float)
    d = np.asarray(distance_m, dtype=float)
    if not np.all(g > 0.0):
        raise ValueError("transmit gain must be strictly positive")
    if not np.all(d >= 1.0):
        raise ValueError("distance below the 1 m reference distance")
    p_r = (
        params.p_t_w
        * g
        * params.g_r
        * params.wavelength_m**2
        / ((4.0 * math.pi) ** 2 * d**params.n * params.system_loss)
    )
    return float(p_r) if np.ndim(p_r) == 0 else p_r


def required_gain(params: LinkBudgetParams, distance_m):
    """Smallest transmit gain (linear) that still meets p_min_w at distance_m.

    Exact inverse of received_power at the threshold:
    received_power(params, required_gain(params, d), d) == p_min_w.
    """
    d = np.asarray(distance_m, dtype=float)
    if not np.all(d >= 1.0):
        raise ValueError("distance below the 1 m reference distance")
    g = gain_coefficient(params) * d**params.n
    return float(g) if np.ndim(g) == 0 else g


def max_range(params: LinkBudgetParams, g_t):
    """Largest distance in meters reachable at threshold with transmit gain g_t."""
    g = np.asarray(g_t, dtype=float)
    if not np.all(g > 0.0):
        raise ValueError("transmit gain must be strictly positive")
    r = (g / gain_coefficient(params)) ** (1.0 / params.n)
    return float(r) if np.ndim(r) == 0 else r
