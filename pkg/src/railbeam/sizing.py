"""Physical antenna dimensions implied by a required azimuth envelope.

The azimuth envelope fixes how much gain the horizontal plane needs. The
vertical beamwidth then follows from a power-conservation normalization:
assume the gain is spread uniformly across elevation within some angle
phi_max (zero outside) and solve for the phi_max that makes the discrete
double sum over both angles integrate to an isotropic radiator. Aperture
length and width come from the standard 51-wavelength rule, with phi_max
standing in for the vertical 3 dB beamwidth.

The horizontal 3 dB beamwidth has no uniquely implied definition for a
four-lobed envelope; here it is the width of the half-power region around
the forward peak, doubled to account for the matching aft lobe. The
implied value is always reported next to the width it produces.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .envelope import (
    DEFAULT_RESOLUTION_RAD,
    CrossingGeometry,
    synthesize_envelope,
)
from .link_budget import LinkBudgetParams
from .pattern import AzimuthPattern
from .units import linear_to_db

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class AntennaDimensions:
    """Peak gain, vertical spread, and aperture size of a sized antenna."""

    max_gain_dbi: float
    phi_max_deg: float
    length_m: float
    width_m: float
    horizontal_3db_beamwidth_deg: float

    def __post_init__(self) -> None:
        if not (0.0 < self.phi_max_deg <= 360.0):
            raise ValueError(f"phi_max_deg must be in (0, 360], got {self.phi_max_deg!r}")
        if self.length_m <= 0.0 or self.width_m <= 0.0:
            raise ValueError("aperture dimensions must be positive")
        if not math.isfinite(self.max_gain_dbi):
            raise ValueError("max_gain_dbi must be finite")


def vertical_beamwidth(pat: AzimuthPattern) -> float:
    """Vertical angular spread phi_max in radians for the given azimuth pattern.

    phi_max = 4 pi^2 / (resolution * sum of linear bin gains), clamped to a
    full circle. Low azimuth gain buys a wide vertical spread and vice
    versa; patterns hot enough in azimuth squeeze the vertical plane into
    a sliver.
    """
    total = float(pat.gains.sum())
    if total <= 0.0:
        raise ValueError("pattern has no radiated power")
    phi = 4.0 * math.pi**2 / (pat.resolution * total)
    return min(phi, _TWO_PI)


def aperture_length(phi_3db_deg: float, wavelength_m: float) -> float:
    """Aperture length in meters: 51 * wavelength / vertical 3 dB beamwidth (degrees)."""
    if not (0.0 < phi_3db_deg <= 360.0):
        raise ValueError(f"phi_3db_deg must be in (0, 360], got {phi_3db_deg!r}")
    if wavelength_m <= 0.0:
        raise ValueError(f"wavelength must be positive, got {wavelength_m!r}")
    return 51.0 * wavelength_m / phi_3db_deg


def aperture_width(theta_3db_deg: float, wavelength_m: float) -> float:
    """Aperture width in meters: 51 * wavelength / horizontal 3 dB beamwidth (degrees)."""
    if not (0.0 < theta_3db_deg <= 360.0):
        raise ValueError(f"theta_3db_deg must be in (0, 360], got {theta_3db_deg!r}")
    if wavelength_m <= 0.0:
        raise ValueError(f"wavelength must be positive, got {wavelength_m!r}")
    return 51.0 * wavelength_m / theta_3db_deg


def horizontal_3db_beamwidth(pat: AzimuthPattern) -> float:
    """Horizontal 3 dB beamwidth in degrees: forward half-power lobe width, doubled.

    Doubling charges the aperture for the aft lobe a fore/aft symmetric
    pattern must also radiate. Returns 360 when the pattern never drops
    3 dB below its peak.
    """
    lobe = pat.main_lobe_width_deg()
    if lobe >= 360.0:
        return 360.0
    return min(360.0, 2.0 * lobe)


def size_antenna(
    geom: CrossingGeometry,
    params: LinkBudgetParams,
    resolution: float = DEFAULT_RESOLUTION_RAD,
) -> AntennaDimensions:
    """Synthesize the envelope for the scenario and derive the smallest aperture."""
    env = synthesize_envelope(geom, params, resolution)
    phi_rad = vertical_beamwidth(env)
    phi_deg = 360.0 if phi_rad >= _TWO_PI else math.degrees(phi_rad)
    theta_deg = horizontal_3db_beamwidth(env)
    return AntennaDimensions(
        max_gain_dbi=linear_to_db(env.peak_gain()),
        phi_max_deg=phi_deg,
        length_m=aperture_length(phi_deg, params.wavelength_m),
        width_m=aperture_width(theta_deg, params.wavelength_m),
        horizontal_3db_beamwidth_deg=theta_deg,
    )
