import math

import numpy as np
import pytest

from railbeam import (
    CrossingGeometry,
    boundary_angle,
    build_scenario,
    envelope_dominates,
    gain_coefficient,
    required_gain,
    required_gain_at_angle,
    road_offset_from_angle,
    synthesize_envelope,
)
from railbeam.envelope import _endpoint_gain, _interior_gain
from railbeam.units import linear_to_db

DELTAS = (45.0, 60.0, 75.0, 90.0)
EXPONENTS = (2.0, 3.0, 4.0)


def _geometry(delta_deg=90.0, d_s=1059.0, r_s=210.0):
    return CrossingGeometry(math.radians(delta_deg), d_s, r_s, d_s)


def test_boundary_angle_values():
    assert boundary_angle(_geometry()) == pytest.approx(0.1957607, abs=1e-6)
    assert math.degrees(boundary_angle(_geometry())) == pytest.approx(11.216, abs=1e-3)
    assert boundary_angle(_geometry(d_s=530.0)) == pytest.approx(0.3772491, abs=1e-6)
    assert math.degrees(boundary_angle(_geometry(d_s=530.0))) == pytest.approx(21.615, abs=1e-3)


def test_boundary_angle_degenerate_road():
    assert boundary_angle(_geometry(r_s=1e-9)) == pytest.approx(0.0, abs=1e-11)


@pytest.mark.parametrize("delta_deg", DELTAS)
def test_boundary_angle_in_first_quadrant(delta_deg):
    th = boundary_angle(_geometry(delta_deg))
    assert 0.0 < th < math.pi / 2.0


def test_road_offset_on_axis():
    assert road_offset_from_angle(0.0, _geometry()) == 0.0


def test_road_offset_perpendicular_reduces_to_tangent():
    geom = _geometry()
    theta = math.atan(0.1)
    assert road_offset_from_angle(theta, geom) == pytest.approx(0.1 * geom.d_s_m, rel=1e-12)


@pytest.mark.parametrize("delta_deg", DELTAS)
def test_road_offset_at_boundary_is_road_limit(delta_deg):
    geom = _geometry(delta_deg)
    r = road_offset_from_angle(boundary_angle(geom), geom)
    assert r == pytest.approx(geom.r_s_m, rel=1e-6)


@pytest.mark.parametrize("delta_deg", DELTAS)
@pytest.mark.parametrize("fraction", [0.1, 0.5, 0.9, 1.0])
def test_road_offset_inverts_sight_angle(delta_deg, fraction):
    geom = _geometry(delta_deg)
    theta = fraction * boundary_angle(geom)
    r = road_offset_from_angle(theta, geom)
    lhs = math.tan(theta)
    rhs = r * math.sin(geom.delta_rad) / (geom.d_s_m + r * math.cos(geom.delta_rad))
    assert lhs == pytest.approx(rhs, rel=1e-9)


def test_road_offset_domain_enforced():
    geom = _geometry()
    with pytest.raises(ValueError):
        road_offset_from_angle(boundary_angle(geom) + 0.01, geom)
    with pytest.raises(ValueError):
        road_offset_from_angle(-0.01, geom)


def test_gain_at_boundary_matches_published_peaks(default_setup):
    _, params, geom = default_setup
    peak = required_gain_at_angle(boundary_angle(geom), geom, params)
    assert linear_to_db(peak) == pytest.approx(24.8, abs=0.2)
    _, params15, geom15 = build_scenario(lead_time_s=15.0)
    peak15 = required_gain_at_angle(boundary_angle(geom15), geom15, params15)
    assert linear_to_db(peak15) == pytest.approx(16.5, abs=0.2)


@pytest.mark.parametrize("n", EXPONENTS)
def test_broadside_closed_form(n):
    _, params, geom = build_scenario(n=n)
    expected = gain_coefficient(params) * geom.r_s_m**n
    assert required_gain_at_angle(math.pi / 2.0, geom, params) == pytest.approx(
        expected, rel=1e-12
    )


@pytest.mark.parametrize("delta_deg", DELTAS)
@pytest.mark.parametrize("n", EXPONENTS)
def test_branch_continuity_at_boundary(delta_deg, n):
    _, params, geom = build_scenario(delta_deg=delta_deg, n=n)
    theta = boundary_angle(geom)
    coeff = gain_coefficient(params)
    interior = _interior_gain(theta, geom, coeff, n)
    endpoint = _endpoint_gain(theta, geom, coeff, n)
    assert abs(interior - endpoint) / interior <= 1e-9


def test_gain_monotone_up_to_boundary(default_setup):
    _, params, geom = default_setup
    thetas = np.linspace(0.0, boundary_angle(geom), 500)
    g = required_gain_at_angle(thetas, geom, params)
    assert np.all(np.diff(g) >= 0)


def test_transmit_power_scaling(default_setup):
    _, params, geom = default_setup
    _, params4, _ = build_scenario(pt_dbm=24.0 + 10.0 * math.log10(4.0))
    thetas = np.linspace(0.0, 2.0 * math.pi, 1000)
    g1 = required_gain_at_angle(thetas, geom, params)
    g4 = required_gain_at_angle(thetas, geom, params4)
    assert np.allclose(g4, g1 / 4.0, rtol=1e-9)


@pytest.mark.parametrize("delta_deg", DELTAS)
def test_generator_symmetries(delta_deg):
    _, params, geom = build_scenario(delta_deg=delta_deg)
    thetas = np.linspace(0.0, math.pi / 2.0, 2001)
    base = required_gain_at_angle(thetas, geom, params)
    mirrored = required_gain_at_angle(math.pi - thetas, geom, params)
    reversed_ = required_gain_at_angle(2.0 * math.pi - thetas, geom, params)
    assert np.allclose(mirrored, base, rtol=1e-12)
    assert np.allclose(reversed_, base, rtol=1e-12)


@pytest.mark.parametrize("n", EXPONENTS)
def test_perpendicular_endpoint_branch_closed_form(n):
    _, params, geom = build_scenario(n=n)
    coeff = gain_coefficient(params)
    thetas = np.linspace(boundary_angle(geom) + 1e-6, math.pi / 2.0, 400)
    expected = coeff * geom.r_s_m**n / np.sin(thetas) ** n
    assert np.allclose(required_gain_at_angle(thetas, geom, params), expected, rtol=1e-9)


def test_synthesized_bin_count(envelope_30s_n3):
    assert len(envelope_30s_n3) == math.ceil(2.0 * math.pi / 0.001)


def test_envelope_on_axis_value(default_setup, envelope_30s_n3):
    _, params, geom = default_setup
    assert envelope_30s_n3.gains[0] == pytest.approx(
        required_gain(params, geom.d_s_m), rel=1e-4
    )


def test_envelope_peak_is_boundary_gain(default_setup, envelope_30s_n3):
    _, params, geom = default_setup
    expected = required_gain_at_angle(boundary_angle(geom), geom, params)
    assert envelope_30s_n3.peak_gain() == expected


def test_envelope_upper_bounds_requirement(default_setup, envelope_30s_n3):
    # the sampled envelope may never dip below the continuous requirement
    _, params, geom = default_setup
    rng = np.random.default_rng(20260810)
    thetas = rng.uniform(0.0, 2.0 * math.pi, 20000)
    looked_up = envelope_30s_n3.gain_at(thetas)
    exact = required_gain_at_angle(thetas, geom, params)
    assert np.all(looked_up >= exact * (1.0 - 1e-12))


def test_envelope_bin_symmetry(default_setup, envelope_30s_n3):
    _, params, geom = default_setup
    centers = envelope_30s_n3.bin_centers()
    quadrant = centers[centers <= math.pi / 2.0]
    base = required_gain_at_angle(quadrant, geom, params)
    assert np.allclose(
        required_gain_at_angle(math.pi - quadrant, geom, params), base, rtol=1e-12
    )
    assert np.allclose(
        required_gain_at_angle(2.0 * math.pi - quadrant, geom, params), base, rtol=1e-12
    )


def test_synthesis_resolution_bounds(default_setup):
    _, params, geom = default_setup
    with pytest.raises(ValueError):
        synthesize_envelope(geom, params, 0.02)
    with pytest.raises(ValueError):
        synthesize_envelope(geom, params, 0.0)


def test_dominates_reflexive(envelope_30s_n3):
    assert envelope_dominates(envelope_30s_n3, envelope_30s_n3, 0.0)


def test_dominates_rejects_doubled(envelope_30s_n3):
    doubled = envelope_30s_n3.scaled_db(3.0103)
    assert not envelope_dominates(envelope_30s_n3, doubled, 0.0)
    assert envelope_dominates(doubled, envelope_30s_n3, 0.0)


def test_dominates_tolerance(envelope_30s_n3):
    nudged = envelope_30s_n3.scaled_db(0.9)
    assert envelope_dominates(envelope_30s_n3, nudged, 1.0)
    assert not envelope_dominates(envelope_30s_n3, nudged, 0.5)


def test_dominates_resolution_mismatch(envelope_30s_n3, default_setup):
    _, params, geom = default_setup
    coarse = synthesize_envelope(geom, params, 0.002)
    with pytest.raises(ValueError):
        envelope_dominates(envelope_30s_n3, coarse, 0.0)


def test_skew_envelopes_within_two_db_of_perpendicular(envelope_30s_n3):
    # the perpendicular case needs up to ~1.7 dB less gain near the
    # boundary angle than the 45 degree case, and more everywhere else
    _, params, _ = build_scenario()
    for delta_deg, worst in ((45.0, 1.71), (60.0, 1.24), (75.0, 0.66)):
        _, _, geom_d = build_scenario(delta_deg=delta_deg)
        env_d = synthesize_envelope(geom_d, params)
        assert envelope_dominates(envelope_30s_n3, env_d, 2.0)
        excess = 10.0 * np.log10(env_d.gains / envelope_30s_n3.gains)
        assert excess.max() == pytest.approx(worst, abs=0.02)


def test_shallow_angle_warns():
    with pytest.warns(UserWarning):
        CrossingGeometry(math.radians(30.0), 1000.0, 200.0, 1000.0)


def test_geometry_validation():
    with pytest.raises(ValueError):
        CrossingGeometry(0.0, 1000.0, 200.0, 1000.0)
    with pytest.raises(ValueError):
        CrossingGeometry(math.radians(120.0), 1000.0, 200.0, 1000.0)
    with pytest.raises(ValueError):
        CrossingGeometry(math.pi / 2.0, -5.0, 200.0, 1000.0)
    with pytest.raises(ValueError):
        CrossingGeometry(math.pi / 2.0, 1000.0, 200.0, 0.0)
