"""Sampled full-circle azimuth gain patterns and their CSV representation.

A pattern holds one linear gain per bin, with bin k centered at angle
k * resolution radians measured from the forward axis (theta = 0). The
file format is a two-column CSV, ``theta_deg,gain_dbi``, one row per bin
center, angles in [0, 360) and gains written with four decimals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .units import linear_to_db

# Linear gain floor used when formatting gains in dB, so nulls stay finite.
_DB_FLOOR = 1e-40


def bin_count(resolution: float) -> int:
    """Number of bins a full circle needs at the given resolution (radians)."""
    if not (resolution > 0.0 and math.isfinite(resolution)):
        raise ValueError(f"resolution must be positive, got {resolution!r}")
    return int(math.ceil(2.0 * math.pi / resolution))


@dataclass(eq=False)
class AzimuthPattern:
    """Uniformly sampled linear gain versus azimuth over a full circle."""

    resolution: float
    gains: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        self.gains = np.asarray(self.gains, dtype=float)
        if self.gains.ndim != 1:
            raise ValueError("gains must be a one dimensional array")
        expected = bin_count(self.resolution)
        if len(self.gains) != expected:
            raise ValueError(
                f"expected {expected} bins for resolution {self.resolution}, "
                f"got {len(self.gains)}"
            )
        if not np.all(np.isfinite(self.gains)):
            raise ValueError("gains must be finite")
        if np.any(self.gains < 0.0):
            raise ValueError("gains must be non-negative")

    def __len__(self) -> int:
        return len(self.gains)

    def bin_centers(self) -> np.ndarray:
        """Bin center angles in radians, [0, 2 pi)."""
        return np.arange(len(self.gains)) * self.resolution

    def gain_at(self, theta):
        """Pessimistic lookup: the lower gain of the two bins bracketing theta.

        A candidate that passes a check through this lookup therefore also
        passes it for any between-bin interpolation of the same samples.
        """
        t = np.mod(np.asarray(theta, dtype=float), 2.0 * math.pi)
        lo = np.minimum(np.floor(t / self.resolution).astype(int), len(self.gains) - 1)
        hi = (lo + 1) % len(self.gains)
        g = np.minimum(self.gains[lo], self.gains[hi])
        return float(g) if np.ndim(g) == 0 else g

    def peak_gain(self) -> float:
        """Largest bin gain, linear."""
        return float(self.gains.max())

    def scaled_db(self, delta_db: float) -> "AzimuthPattern":
        """New pattern with every bin shifted by delta_db decibels."""
        return AzimuthPattern(self.resolution, self.gains * 10.0 ** (delta_db / 10.0))

    def main_lobe_width_deg(self) -> float:
        """Width in degrees of the contiguous half-power region around the peak bin.

        Wraps across the 0/360 seam. Returns 360 when no bin falls more
        than 3 dB below the peak.
        """
        peak = self.gains.max()
        if peak <= 0.0:
            raise ValueError("pattern has no radiated power")
        above = self.gains >= peak / 2.0
        if above.all():
            return 360.0
        n = len(self.gains)
        k = int(np.argmax(self.gains))
        left = k
        while above[(left - 1) % n]:
            left -= 1
        right = k
        while above[(right + 1) % n]:
            right += 1
        run = right - left + 1
        return min(360.0, math.degrees(run * self.resolution))


def write_pattern_csv(pat: AzimuthPattern, path, rounding: str = "nearest") -> None:
    """Write a pattern as ``theta_deg,gain_dbi`` rows, four decimals each.

    rounding picks the direction of the last-decimal quantization:
    "up" keeps a written requirement envelope an upper bound of itself,
    "down" keeps a written candidate pattern pessimistic, "nearest" is
    the unbiased default.
    """
    if rounding not in ("nearest", "up", "down"):
        raise ValueError(f"rounding must be 'nearest', 'up' or 'down', got {rounding!r}")
    with open(path, "w", newline="") as f:
        f.write("theta_deg,gain_dbi\n")
        for center, g in zip(pat.bin_centers(), pat.gains):
            dbi = linear_to_db(max(g, _DB_FLOOR))
            if rounding == "up":
                dbi = math.ceil(dbi * 1e4) / 1e4
            elif rounding == "down":
                dbi = math.floor(dbi * 1e4) / 1e4
            f.write(f"{math.degrees(center):.4f},{dbi:.4f}\n")


def read_pattern_csv(path) -> AzimuthPattern:
    """Parse a pattern CSV written by write_pattern_csv.

    Raises ValueError with a 1-based line number on malformed rows,
    non-monotone angles, or non-uniform spacing.
    """
    thetas: list[float] = []
    gains_dbi: list[float] = []
    with open(path, "r") as f:
        header = f.readline().strip()
        if header != "theta_deg,gain_dbi":
            raise ValueError(f"line 1: expected header 'theta_deg,gain_dbi', got {header!r}")
        for lineno, raw in enumerate(f, start=2):
            line = raw.strip()
            if not line:
                continue
            parts = line.split(",")
            if len(parts) != 2:
                raise ValueError(f"line {lineno}: expected two comma separated fields")
            try:
                theta = float(parts[0])
                gain = float(parts[1])
            except ValueError:
                raise ValueError(f"line {lineno}: could not parse numbers from {line!r}") from None
            if not (0.0 <= theta < 360.0):
                raise ValueError(f"line {lineno}: theta_deg {theta} outside [0, 360)")
            if thetas and theta <= thetas[-1]:
                raise ValueError(f"line {lineno}: non-monotone theta_deg {theta}")
            thetas.append(theta)
            gains_dbi.append(gain)
    if len(thetas) < 2:
        raise ValueError("pattern file needs at least two data rows")
    if abs(thetas[0]) > 1e-6:
        raise ValueError("line 2: first bin center must be at 0 degrees")
    step = (thetas[-1] - thetas[0]) / (len(thetas) - 1)
    diffs = np.diff(thetas)
    if np.max(np.abs(diffs - step)) > 1e-3:
        worst = int(np.argmax(np.abs(diffs - step))) + 3
        raise ValueError(f"line {worst}: non-uniform angular spacing")
    resolution = math.radians(step)
    if bin_count(resolution) != len(thetas):
        raise ValueError(
            f"{len(thetas)} rows do not cover a full circle at {step:.4f} degree spacing"
        )
    gains = 10.0 ** (np.asarray(gains_dbi) / 10.0)
    return AzimuthPattern(resolution, gains)
