"""Uniform linear arrays of omnidirectional elements, and pattern grading.

A corporate-fed line of N identical elements multiplies the element
pattern by the array factor. With the power split across N elements the
installed peak gain is the element gain plus 10 log10(N). Grading a
candidate pattern against a required envelope is a per-bin comparison in
dB; contiguous shortfall bins merge into violation intervals.

Two angle frames appear here. array_factor_magnitude is referenced to
the element line (its broadside, perpendicular to the line, is at
theta = pi/2). array_pattern returns the installed azimuth pattern of an
array mounted with its element line across the vehicle heading, so the
broadside main beam lands on the forward axis (theta = 0) where a
crossing-warning envelope wants its gain.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .pattern import AzimuthPattern, bin_count
from .units import dbi_to_linear, linear_to_db

_DB_FLOOR = 1e-40


@dataclass(frozen=True)
class UniformLinearArraySpec:
    """Element count, spacing, element gain, and progressive phase taper."""

    n_elements: int
    spacing_m: float
    element_gain_dbi: float = 0.0
    element_elevation_pattern: AzimuthPattern | None = None
    phase_taper_rad: float = 0.0

    def __post_init__(self) -> None:
        if int(self.n_elements) != self.n_elements or self.n_elements < 1:
            raise ValueError(f"n_elements must be a positive integer, got {self.n_elements!r}")
        if not (self.spacing_m > 0.0 and math.isfinite(self.spacing_m)):
            raise ValueError(f"spacing_m must be positive, got {self.spacing_m!r}")


def array_factor_magnitude(spec: UniformLinearArraySpec, wavelength_m: float, theta):
    """|sum over elements of exp(i k psi)| with psi = (2 pi / lambda) d cos(theta) + taper.

    theta is measured from the element line; broadside (theta = pi/2, zero
    taper) aligns all phases and yields exactly N. The removable
    singularity of sin(N psi / 2) / sin(psi / 2) at psi = 0 mod 2 pi is
    returned as N.
    """
    if wavelength_m <= 0.0:
        raise ValueError(f"wavelength must be positive, got {wavelength_m!r}")
    n = spec.n_elements
    psi = (
        2.0 * math.pi / wavelength_m * spec.spacing_m * np.cos(np.asarray(theta, dtype=float))
        + spec.phase_taper_rad
    )
    half = np.sin(psi / 2.0)
    singular = np.abs(half) < 1e-12
    safe = np.where(singular, 1.0, half)
    af = np.where(singular, float(n), np.abs(np.sin(n * psi / 2.0) / safe))
    return float(af) if np.ndim(af) == 0 else af


def array_pattern(
    spec: UniformLinearArraySpec, wavelength_m: float, resolution: float
) -> AzimuthPattern:
    """Installed azimuth pattern of the array, main beam on the forward axis.

    Per-bin linear gain is element gain times array factor squared over N,
    which conserves total radiated power relative to one element driving
    an N-way lossless split. The element is omnidirectional in azimuth.
    """
    centers = np.arange(bin_count(resolution)) * resolution
    af = array_factor_magnitude(spec, wavelength_m, centers - math.pi / 2.0)
    gains = dbi_to_linear(spec.element_gain_dbi) * af**2 / spec.n_elements
    return AzimuthPattern(resolution, gains)


def estimate_element_count(target_gain_dbi: float, element_gain_dbi: float) -> int:
    """Smallest N with element_gain + 10 log10(N) reaching target_gain; 1 if already there."""
    if target_gain_dbi <= element_gain_dbi:
        return 1
    # The epsilon keeps exact decades (e.g. a 10 dB deficit) from rounding up.
    return int(math.ceil(10.0 ** ((target_gain_dbi - element_gain_dbi) / 10.0) - 1e-12))


def array_length(n_elements: int, spacing_m: float) -> float:
    """Physical array length in meters, counted as n_elements spacing cells."""
    if int(n_elements) != n_elements or n_elements < 1:
        raise ValueError(f"n_elements must be a positive integer, got {n_elements!r}")
    if spacing_m <= 0.0:
        raise ValueError(f"spacing_m must be positive, got {spacing_m!r}")
    return n_elements * spacing_m


@dataclass(frozen=True)
class Violation:
    """One contiguous angular interval where the candidate falls short."""

    start_deg: float
    end_deg: float
    worst_shortfall_db: float


@dataclass(frozen=True)
class ComplianceReport:
    """Outcome of grading a candidate pattern against a required envelope."""

    passed: bool
    margin_db: float
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    def to_json_dict(self) -> dict:
        return {
            "pass": self.passed,
            "margin_db": round(self.margin_db, 4),
            "violations": [
                {
                    "start_deg": round(v.start_deg, 4),
                    "end_deg": round(v.end_deg, 4),
                    "worst_shortfall_db": round(v.worst_shortfall_db, 4),
                }
                for v in self.violations
            ],
        }


def compliance_report(candidate: AzimuthPattern, required: AzimuthPattern) -> ComplianceReport:
    """Grade candidate against required bin by bin in dB.

    margin_db is the worst (most negative) per-bin difference. Contiguous
    shortfall bins merge into violation intervals; an interval crossing
    the 0/360 seam is reported with start_deg greater than end_deg.
    """
    if not math.isclose(candidate.resolution, required.resolution, rel_tol=1e-6):
        raise ValueError("candidate and required patterns must share the same resolution")
    cand_db = 10.0 * np.log10(np.maximum(candidate.gains, _DB_FLOOR))
    req_db = 10.0 * np.log10(np.maximum(required.gains, _DB_FLOOR))
    diff = cand_db - req_db
    margin = float(diff.min())
    failing = diff < 0.0
    if not failing.any():
        return ComplianceReport(passed=True, margin_db=margin)

    n = len(diff)
    step_deg = math.degrees(candidate.resolution)
    if failing.all():
        return ComplianceReport(
            passed=False,
            margin_db=margin,
            violations=(Violation(0.0, 360.0, float(-diff.min())),),
        )
    # Rotate so index 0 is compliant, find linear runs, map indices back.
    origin = int(np.argmin(failing))
    rolled = np.roll(failing, -origin)
    edges = np.flatnonzero(np.diff(rolled.astype(int)))
    starts = list(edges[0::2] + 1)
    ends = list(edges[1::2])
    if len(ends) < len(starts):
        ends.append(n - 1)
    violations = []
    for s, e in zip(starts, ends):
        idx = (np.arange(s, e + 1) + origin) % n
        violations.append(
            Violation(
                start_deg=float(idx[0] * step_deg),
                end_deg=float(idx[-1] * step_deg),
                worst_shortfall_db=float(-diff[idx].min()),
            )
        )
    violations.sort(key=lambda v: v.start_deg)
    return ComplianceReport(passed=False, margin_db=margin, violations=tuple(violations))


def violation_contains(report: ComplianceReport, angle_deg: float) -> bool:
    """True when some violation interval covers the given angle (wrap aware)."""
    a = angle_deg % 360.0
    for v in report.violations:
        if v.start_deg == 0.0 and v.end_deg == 360.0:
            return True
        if v.start_deg <= v.end_deg:
            if v.start_deg <= a <= v.end_deg:
                return True
        elif a >= v.start_deg or a <= v.end_deg:
            return True
    return False
