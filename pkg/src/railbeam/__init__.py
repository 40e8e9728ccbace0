"""Antenna pattern synthesis and coverage verification for train-mounted
grade-crossing warning transmitters.

The pipeline: safety distances define a crossing geometry, the link
budget turns distances into required gains, the envelope module shapes
the minimal azimuth pattern, the sizing module converts it to a physical
aperture, the array module models practical element arrays, and the
coverage oracle brute-force checks any candidate pattern against the
requirement.
"""

from .coverage import CoverageReport, TraceRow, verify_coverage, worst_angle_trace
from .envelope import (
    DEFAULT_RESOLUTION_RAD,
    CrossingGeometry,
    boundary_angle,
    envelope_dominates,
    required_gain_at_angle,
    road_offset_from_angle,
    synthesize_envelope,
)
from .link_budget import (
    LinkBudgetParams,
    gain_coefficient,
    max_range,
    received_power,
    required_gain,
)
from .pattern import AzimuthPattern, read_pattern_csv, write_pattern_csv
from .safety import (
    DEFAULT_STOPPING_TABLE,
    SafetyScenario,
    StoppingTable,
    Surface,
    build_scenario,
    default_scenario,
    load_scenario,
    notification_distance,
    stopping_distance,
)
from .sizing import (
    AntennaDimensions,
    aperture_length,
    aperture_width,
    horizontal_3db_beamwidth,
    size_antenna,
    vertical_beamwidth,
)
from .ula import (
    ComplianceReport,
    UniformLinearArraySpec,
    Violation,
    array_factor_magnitude,
    array_length,
    array_pattern,
    compliance_report,
    estimate_element_count,
    violation_contains,
)

__version__ = "0.1.0"

__all__ = [
    "AntennaDimensions",
    "AzimuthPattern",
    "ComplianceReport",
    "CoverageReport",
    "CrossingGeometry",
    "DEFAULT_RESOLUTION_RAD",
    "DEFAULT_STOPPING_TABLE",
    "LinkBudgetParams",
    "SafetyScenario",
    "StoppingTable",
    "Surface",
    "TraceRow",
    "UniformLinearArraySpec",
    "Violation",
    "aperture_length",
    "aperture_width",
    "array_factor_magnitude",
    "array_length",
    "array_pattern",
    "boundary_angle",
    "build_scenario",
    "compliance_report",
    "default_scenario",
    "envelope_dominates",
    "estimate_element_count",
    "gain_coefficient",
    "horizontal_3db_beamwidth",
    "load_scenario",
    "max_range",
    "notification_distance",
    "read_pattern_csv",
    "received_power",
    "required_gain",
    "required_gain_at_angle",
    "road_offset_from_angle",
    "size_antenna",
    "stopping_distance",
    "synthesize_envelope",
    "verify_coverage",
    "vertical_beamwidth",
    "violation_contains",
    "worst_angle_trace",
    "write_pattern_csv",
]
