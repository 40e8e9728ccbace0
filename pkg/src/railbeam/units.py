"""Unit conversions shared by every other module.

All internal computation runs in linear SI quantities (watts, linear gain,
meters, radians). dBm, dBi and degrees appear only at interfaces, so the
conversions below are the single crossing point between the two worlds.
"""

import math

# 1 mile = 1609.344 m, so 1 mph = 1609.344/3600 m/s exactly.
MPH_TO_MPS = 0.44704


def _require_finite(value: float, what: str) -> None:
    if not math.isfinite(value):
        raise ValueError(f"{what} must be finite, got {value!r}")


def dbm_to_watts(p_dbm: float) -> float:
    """Power in dBm to watts."""
    _require_finite(p_dbm, "power in dBm")
    return 10.0 ** ((p_dbm - 30.0) / 10.0)


def watts_to_dbm(p_w: float) -> float:
    """Power in watts to dBm; requires a strictly positive input."""
    if not (p_w > 0.0 and math.isfinite(p_w)):
        raise ValueError(f"power must be positive and finite, got {p_w!r}")
    return 10.0 * math.log10(p_w) + 30.0


def db_to_linear(x_db: float) -> float:
    """Decibel ratio to linear power ratio."""
    _require_finite(x_db, "dB value")
    return 10.0 ** (x_db / 10.0)


def linear_to_db(x: float) -> float:
    """Linear power ratio to decibels; requires a strictly positive input."""
    if not (x > 0.0 and math.isfinite(x)):
        raise ValueError(f"linear ratio must be positive and finite, got {x!r}")
    return 10.0 * math.log10(x)


# Gain relative to isotropic uses the same decibel arithmetic.
dbi_to_linear = db_to_linear
linear_to_dbi = linear_to_db


def mph_to_mps(v_mph: float) -> float:
    """Speed in miles per hour to meters per second."""
    _require_finite(v_mph, "speed in mph")
    if v_mph < 0.0:
        raise ValueError(f"speed must be non-negative, got {v_mph!r}")
    return v_mph * MPH_TO_MPS
