"""Stopping distances, notification distances, and scenario assembly.

The road side of the coverage requirement comes from how far a vehicle
needs to stop; the railway side from how far a train travels during the
required warning lead time. Both feed the crossing geometry used by the
envelope synthesis and the coverage oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import units
from .envelope import CrossingGeometry
from .link_budget import LinkBudgetParams


class Surface(str, Enum):
    DRY = "dry"
    WET = "wet"


# Average stopping distances on dry, level pavement: (speed mph, distance m).
_DEFAULT_ROWS = (
    (25.0, 26.0),
    (35.0, 42.0),
    (45.0, 60.0),
    (55.0, 81.0),
    (65.0, 105.0),
)


@dataclass(frozen=True)
class StoppingTable:
    """Vehicle stopping distance versus speed, dry pavement baseline."""

    rows: tuple[tuple[float, float], ...] = _DEFAULT_ROWS

    def __post_init__(self) -> None:
        if len(self.rows) < 2:
            raise ValueError("stopping table needs at least two rows")
        speeds = [r[0] for r in self.rows]
        dists = [r[1] for r in self.rows]
        if any(b <= a for a, b in zip(speeds, speeds[1:])):
            raise ValueError("stopping table speeds must be strictly increasing")
        if any(b <= a for a, b in zip(dists, dists[1:])):
            raise ValueError("stopping table distances must be strictly increasing")

    @property
    def speeds(self) -> tuple[float, ...]:
        return tuple(r[0] for r in self.rows)

    @property
    def distances(self) -> tuple[float, ...]:
        return tuple(r[1] for r in self.rows)


DEFAULT_STOPPING_TABLE = StoppingTable()


@dataclass(frozen=True)
class SafetyScenario:
    """Traffic side of a crossing scenario."""

    train_speed_mph: float = 79.0
    vehicle_speed_mph: float = 65.0
    lead_time_s: float = 30.0
    surface: Surface = Surface.WET

    def __post_init__(self) -> None:
        for name in ("train_speed_mph", "vehicle_speed_mph", "lead_time_s"):
            value = getattr(self, name)
            if not (value > 0.0 and math.isfinite(value)):
                raise ValueError(f"{name} must be positive, got {value!r}")
        if not (1.0 <= self.lead_time_s <= 120.0):
            raise ValueError(f"lead_time_s must be within [1, 120], got {self.lead_time_s!r}")


def stopping_distance(
    speed_mph: float,
    surface: Surface | str = Surface.WET,
    table: StoppingTable | None = None,
) -> float:
    """Stopping distance in meters at the given speed and pavement state.

    Interpolates linearly between table rows; speeds outside the table are
    rejected rather than extrapolated. Wet pavement doubles the dry value,
    the worst case assumed for the coverage requirement.
    """
    table = table or DEFAULT_STOPPING_TABLE
    surface = Surface(surface)
    speeds = table.speeds
    if not (speeds[0] <= speed_mph <= speeds[-1]):
        raise ValueError(
            f"speed {speed_mph} mph outside stopping table range "
            f"[{speeds[0]}, {speeds[-1]}]"
        )
    dry = float(np.interp(speed_mph, speeds, table.distances))
    return 2.0 * dry if surface is Surface.WET else dry


def notification_distance(train_speed_mph: float, lead_time_s: float) -> float:
    """Distance in meters a train covers during the warning lead time."""
    if lead_time_s < 0.0:
        raise ValueError(f"lead time must be non-negative, got {lead_time_s!r}")
    return units.mph_to_mps(train_speed_mph) * lead_time_s


# Keys accepted in plain-text scenario config files (key=value, one per line).
CONFIG_KEYS = frozenset(
    {
        "train_speed_mph",
        "vehicle_speed_mph",
        "lead_time_s",
        "surface",
        "pt_dbm",
        "pmin_dbm",
        "gr_dbi",
        "loss_db",
        "wavelength_m",
        "n",
        "delta_deg",
        "rs_m",
    }
)


def build_scenario(
    train_speed_mph: float = 79.0,
    vehicle_speed_mph: float = 65.0,
    lead_time_s: float = 30.0,
    surface: Surface | str = Surface.WET,
    pt_dbm: float = 24.0,
    pmin_dbm: float = -90.0,
    gr_dbi: float = 0.0,
    loss_db: float = 0.0,
    wavelength_m: float = 0.0508,
    n: float = 3.0,
    delta_deg: float = 90.0,
    rs_m: float | None = None,
) -> tuple[SafetyScenario, LinkBudgetParams, CrossingGeometry]:
    """Assemble scenario, link parameters, and geometry from plain numbers.

    The railway safe distance is the notification distance for the given
    lead time; the road safe distance defaults to the stopping distance at
    the vehicle speed on the given surface; the train length defaults to
    the railway safe distance (coverage must persist until the tail
    clears, and a train as long as the notification distance is the
    modeled worst case).
    """
    scenario = SafetyScenario(
        train_speed_mph=train_speed_mph,
        vehicle_speed_mph=vehicle_speed_mph,
        lead_time_s=lead_time_s,
        surface=Surface(surface),
    )
    d_s = notification_distance(scenario.train_speed_mph, scenario.lead_time_s)
    r_s = rs_m if rs_m is not None else stopping_distance(
        scenario.vehicle_speed_mph, scenario.surface
    )
    params = LinkBudgetParams(
        p_t_w=units.dbm_to_watts(pt_dbm),
        p_min_w=units.dbm_to_watts(pmin_dbm),
        g_r=units.dbi_to_linear(gr_dbi),
        system_loss=units.db_to_linear(loss_db),
        wavelength_m=wavelength_m,
        n=n,
    )
    geometry = CrossingGeometry(
        delta_rad=math.radians(delta_deg),
        d_s_m=d_s,
        r_s_m=r_s,
        train_length_m=d_s,
    )
    return scenario, params, geometry


def default_scenario() -> tuple[SafetyScenario, LinkBudgetParams, CrossingGeometry]:
    """The stock worst-case scenario: 79 mph train, 65 mph vehicle, wet pavement, 30 s lead."""
    return build_scenario()


def load_scenario(path, **overrides):
    """Read a key=value scenario file and build the scenario triple.

    Blank lines and lines starting with '#' are skipped. Keyword
    overrides (same names as the file keys) win over file values.
    Raises ValueError with a 1-based line number on bad input.
    """
    values: dict[str, object] = {}
    with open(path, "r") as f:
        for lineno, raw in enumerate(f, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"line {lineno}: expected key=value, got {line!r}")
            key, _, text = line.partition("=")
            key = key.strip()
            text = text.strip()
            if key not in CONFIG_KEYS:
                raise ValueError(f"line {lineno}: unknown key {key!r}")
            if key == "surface":
                try:
                    values[key] = Surface(text.lower())
                except ValueError:
                    raise ValueError(
                        f"line {lineno}: surface must be 'dry' or 'wet', got {text!r}"
                    ) from None
            else:
                try:
                    values[key] = float(text)
                except ValueError:
                    raise ValueError(f"line {lineno}: could not parse number {text!r}") from None
    values.update({k: v for k, v in overrides.items() if v is not None})
    return build_scenario(**values)
