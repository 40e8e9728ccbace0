"""Brute-force coverage verification over a dense position grid.

This module is the ground truth the envelope synthesis is judged against,
so it deliberately shares no formulas with it. For every train antenna
position along the track and every vehicle position along the road it
rebuilds the sight-line geometry from coordinates, looks the gain up in
the candidate pattern (pessimistically, lower neighboring bin), and runs
the link budget. The verdict is the worst margin over the threshold.

Coordinates: the crossing sits at the origin, the railway along the x
axis with the train approaching from negative x; antenna positions run
from d_s before the crossing to train_length after it. The road passes
through the origin at the intersection angle; vehicle positions are
signed road distances from the crossing. Vehicle positions within 1 m of
the crossing, and any pair closer than the 1 m far-field reference, are
skipped and counted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .envelope import CrossingGeometry
from .link_budget import LinkBudgetParams, received_power
from .pattern import AzimuthPattern

# Coarsest pattern sampling the oracle accepts (radians per bin).
_MAX_PATTERN_RESOLUTION = 0.01


@dataclass(frozen=True)
class CoverageReport:
    """Verdict of a grid check: worst margin and where it occurred."""

    passed: bool
    min_margin_db: float
    worst_train_pos_m: float
    worst_vehicle_pos_m: float
    train_samples: int
    vehicle_samples: int
    skipped_positions: int

    def to_json_dict(self) -> dict:
        return {
            "pass": self.passed,
            "min_margin_db": round(self.min_margin_db, 4),
            "worst_train_pos_m": round(self.worst_train_pos_m, 3),
            "worst_vehicle_pos_m": round(self.worst_vehicle_pos_m, 3),
            "grid": {
                "train_samples": self.train_samples,
                "vehicle_samples": self.vehicle_samples,
            },
            "skipped_positions": self.skipped_positions,
        }


class TraceRow(NamedTuple):
    train_pos_m: float
    vehicle_pos_m: float
    margin_db: float


def _margins(
    pat: AzimuthPattern,
    geom: CrossingGeometry,
    params: LinkBudgetParams,
    antenna_x: np.ndarray,
    road_pos: np.ndarray,
):
    """Margin in dB over threshold for every antenna/vehicle pair.

    Returns (margins, valid) with shape (len(antenna_x), len(road_pos));
    pairs inside the 1 m reference distance are masked out.
    """
    vx = road_pos * math.cos(geom.delta_rad)
    vy = road_pos * math.sin(geom.delta_rad)
    dx = vx[None, :] - antenna_x[:, None]
    dy = np.broadcast_to(vy[None, :], dx.shape)
    dist = np.hypot(dx, dy)
    valid = dist >= 1.0
    theta = np.arctan2(dy, dx)
    gain = np.maximum(pat.gain_at(theta), 1e-300)
    p_r = received_power(params, gain, np.where(valid, dist, 1.0))
    margins = 10.0 * np.log10(p_r / params.p_min_w)
    return margins, valid


def verify_coverage(
    pat: AzimuthPattern,
    geom: CrossingGeometry,
    params: LinkBudgetParams,
    train_samples: int = 500,
    vehicle_samples: int = 500,
) -> CoverageReport:
    """Check the pattern over train_samples x vehicle_samples positions per track side.

    The train grid spans [0, d_s] before the crossing and [0, train_length]
    past it; the vehicle grid spans [-r_s, r_s] along the road, excluding
    positions within 1 m of the crossing. Passes when the received power
    meets the threshold everywhere.
    """
    if train_samples < 2 or vehicle_samples < 2:
        raise ValueError("need at least 2 samples per axis")
    if pat.resolution > _MAX_PATTERN_RESOLUTION * (1.0 + 1e-9):
        raise ValueError(
            f"pattern resolution {pat.resolution} coarser than "
            f"{_MAX_PATTERN_RESOLUTION} rad"
        )
    road = np.linspace(-geom.r_s_m, geom.r_s_m, vehicle_samples)
    road = road[np.abs(road) >= 1.0]
    antenna_x = np.concatenate(
        [
            -np.linspace(geom.d_s_m, 0.0, train_samples),
            np.linspace(0.0, geom.train_length_m, train_samples),
        ]
    )
    margins, valid = _margins(pat, geom, params, antenna_x, road)
    evaluated = int(valid.sum())
    if evaluated == 0:
        raise ValueError("no valid positions outside the 1 m reference distance")
    skipped = 2 * train_samples * vehicle_samples - evaluated
    masked = np.where(valid, margins, np.inf)
    flat = int(np.argmin(masked))
    i, j = np.unravel_index(flat, masked.shape)
    min_margin = float(masked[i, j])
    return CoverageReport(
        passed=min_margin >= 0.0,
        min_margin_db=min_margin,
        worst_train_pos_m=float(antenna_x[i]),
        worst_vehicle_pos_m=float(road[j]),
        train_samples=train_samples,
        vehicle_samples=vehicle_samples,
        skipped_positions=skipped,
    )


def worst_angle_trace(
    pat: AzimuthPattern,
    geom: CrossingGeometry,
    params: LinkBudgetParams,
    train_samples: int = 200,
    vehicle_samples: int = 400,
) -> list[TraceRow]:
    """Binding vehicle position and margin for each train position.

    Train positions are signed (negative before the crossing, positive
    past it), ordered from first notification to tail clearance.
    """
    if train_samples < 2 or vehicle_samples < 2:
        raise ValueError("need at least 2 samples per axis")
    road = np.linspace(-geom.r_s_m, geom.r_s_m, vehicle_samples)
    road = road[np.abs(road) >= 1.0]
    antenna_x = np.concatenate(
        [
            np.linspace(-geom.d_s_m, 0.0, train_samples),
            np.linspace(0.0, geom.train_length_m, train_samples)[1:],
        ]
    )
    margins, valid = _margins(pat, geom, params, antenna_x, road)
    masked = np.where(valid, margins, np.inf)
    rows = []
    for i, x in enumerate(antenna_x):
        if not valid[i].any():
            continue
        j = int(np.argmin(masked[i]))
        rows.append(TraceRow(float(x), float(road[j]), float(masked[i, j])))
    return rows
