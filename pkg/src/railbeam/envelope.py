"""Minimal azimuth gain envelope for a crossing-warning transmitter.

Geometry: the transmitter rides at the front of the train and moves along
the railway axis (theta = 0 points from the train toward the crossing).
A straight road crosses the railway at the crossing with intersection
angle delta. Vehicles must receive the warning anywhere within the road
safe distance r_s on either side of the crossing, from the moment the
train is d_s meters out until its tail (train_length meters) has cleared.

For each azimuth the envelope stores the largest transmit gain any of
those train/vehicle position pairs demands. Two regimes meet at the
boundary angle theta*: below it the binding receiver is an interior road
point seen from the farthest train position; above it the binding
receiver is the far end of the road safe segment, seen as the train
closes in. Requiring the same coverage behind the train as in front
makes the envelope symmetric front-to-back as well as left-right, so one
quadrant determines the full circle.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .link_budget import LinkBudgetParams, gain_coefficient
from .pattern import AzimuthPattern, bin_count

# Default angular resolution for synthesized envelopes (radians per bin).
DEFAULT_RESOLUTION_RAD = 0.001

# Synthesis refuses coarser grids than this; the coverage margins the
# envelope is built to guarantee degrade with bin width.
MAX_RESOLUTION_RAD = 0.01


@dataclass(frozen=True)
class CrossingGeometry:
    """Crossing layout: intersection angle and the two safe distances.

    Attributes:
        delta_rad: angle between railway and road, in (0, pi/2].
        d_s_m: railway safe (notification) distance in meters.
        r_s_m: road safe distance on either side of the crossing, meters.
        train_length_m: train length in meters; rear coverage must hold
            until the tail clears the crossing.
    """

    delta_rad: float
    d_s_m: float
    r_s_m: float
    train_length_m: float

    def __post_init__(self) -> None:
        if not (0.0 < self.delta_rad <= math.pi / 2.0):
            raise ValueError(
                f"intersection angle must be in (0, pi/2], got {self.delta_rad!r}"
            )
        if self.delta_rad < math.pi / 4.0:
            warnings.warn(
                "intersection angle below 45 degrees is outside the usual "
                "road geometry; results are extrapolated",
                UserWarning,
                stacklevel=2,
            )
        for name in ("d_s_m", "r_s_m", "train_length_m"):
            value = getattr(self, name)
            if not (value > 0.0 and math.isfinite(value)):
                raise ValueError(f"{name} must be positive, got {value!r}")


def boundary_angle(geom: CrossingGeometry) -> float:
    """Azimuth where the binding road point switches from interior to endpoint.

    theta* = atan(r_s sin(delta) / (d_s + r_s cos(delta))), in (0, pi/2).
    """
    return math.atan2(
        geom.r_s_m * math.sin(geom.delta_rad),
        geom.d_s_m + geom.r_s_m * math.cos(geom.delta_rad),
    )


def road_offset_from_angle(theta, geom: CrossingGeometry):
    """Road distance from the crossing seen at azimuth theta from the far train position.

    Inverts tan(theta) = r sin(delta) / (d_s + r cos(delta)) for r. Valid
    for 0 <= theta <= boundary_angle(geom); beyond that the sight line
    leaves the road safe segment.
    """
    t = np.asarray(theta, dtype=float)
    limit = boundary_angle(geom)
    if np.any(t < 0.0) or np.any(t > limit + 1e-12):
        raise ValueError(f"theta outside [0, {limit}]")
    sin_d = math.sin(geom.delta_rad)
    cos_d = math.cos(geom.delta_rad)
    tan_t = np.tan(t)
    r = geom.d_s_m * tan_t / (sin_d - cos_d * tan_t)
    return float(r) if np.ndim(r) == 0 else r


def _interior_gain(t, geom: CrossingGeometry, coeff: float, n: float):
    """Gain needed to reach the interior road point seen at angle t from d_s out."""
    sin_d = math.sin(geom.delta_rad)
    cos_d = math.cos(geom.delta_rad)
    tan_t = np.tan(t)
    r = geom.d_s_m * tan_t / (sin_d - cos_d * tan_t)
    r_sq = (r * sin_d) ** 2 + (r * cos_d + geom.d_s_m) ** 2
    return coeff * r_sq ** (0.5 * n)


def _endpoint_gain(t, geom: CrossingGeometry, coeff: float, n: float):
    """Gain needed to keep the far road endpoint covered while closing in at angle t."""
    perp = geom.r_s_m * math.sin(geom.delta_rad)
    ctan = 1.0 / np.tan(t)
    return coeff * (perp**2 * ctan**2 + perp**2) ** (0.5 * n)


def fold_to_quadrant(theta):
    """Fold any azimuth into [0, pi/2] using the left-right and fore-aft symmetries."""
    t = np.mod(np.asarray(theta, dtype=float), 2.0 * math.pi)
    t = np.where(t > math.pi, 2.0 * math.pi - t, t)
    t = np.where(t > math.pi / 2.0, math.pi - t, t)
    return float(t) if np.ndim(t) == 0 else t


def required_gain_at_angle(theta, geom: CrossingGeometry, params: LinkBudgetParams):
    """Minimal transmit gain (linear) the coverage requirement imposes at azimuth theta.

    Accepts any angle; values are folded into the first quadrant by the
    pattern symmetries before the two-regime formula is applied.
    """
    t = fold_to_quadrant(theta)
    t = np.asarray(t, dtype=float)
    coeff = gain_coefficient(params)
    limit = boundary_angle(geom)
    interior = _interior_gain(np.minimum(t, limit), geom, coeff, params.n)
    endpoint = _endpoint_gain(np.maximum(t, limit), geom, coeff, params.n)
    g = np.where(t <= limit, interior, endpoint)
    return float(g) if np.ndim(g) == 0 else g


def synthesize_envelope(
    geom: CrossingGeometry,
    params: LinkBudgetParams,
    resolution: float = DEFAULT_RESOLUTION_RAD,
) -> AzimuthPattern:
    """Sample the required-gain envelope into an AzimuthPattern.

    Each bin stores the supremum of the continuous requirement over the
    bin center plus/minus one full bin width. That window covers every
    angle whose pessimistic two-bin lookup can consult the bin, so a
    pattern equal to this envelope can never under-cover because of
    discretization. The supremum is exact: the requirement is piecewise
    monotone, so sampling the window edges, the center, and any interior
    image of the boundary angle suffices.
    """
    if not (0.0 < resolution <= MAX_RESOLUTION_RAD):
        raise ValueError(
            f"resolution must be in (0, {MAX_RESOLUTION_RAD}] radians, got {resolution!r}"
        )
    centers = np.arange(bin_count(resolution)) * resolution
    g = required_gain_at_angle(centers, geom, params)
    g = np.maximum(g, required_gain_at_angle(centers - resolution, geom, params))
    g = np.maximum(g, required_gain_at_angle(centers + resolution, geom, params))

    limit = boundary_angle(geom)
    peak = required_gain_at_angle(limit, geom, params)
    for image in (limit, math.pi - limit, math.pi + limit, 2.0 * math.pi - limit):
        dist = np.abs(centers - image)
        dist = np.minimum(dist, 2.0 * math.pi - dist)
        g = np.where(dist <= resolution, np.maximum(g, peak), g)
    return AzimuthPattern(resolution, g)


def envelope_dominates(a: AzimuthPattern, b: AzimuthPattern, tolerance_db: float = 0.0) -> bool:
    """True when every bin of b stays within tolerance_db above the matching bin of a."""
    if not math.isclose(a.resolution, b.resolution, rel_tol=1e-6):
        raise ValueError("patterns must share the same resolution")
    return bool(np.all(b.gains <= a.gains * 10.0 ** (tolerance_db / 10.0)))
