import pytest

from railbeam import default_scenario, synthesize_envelope


@pytest.fixture(scope="session")
def default_setup():
    """Stock scenario triple: (SafetyScenario, LinkBudgetParams, CrossingGeometry)."""
    return default_scenario()


@pytest.fixture(scope="session")
def envelope_30s_n3(default_setup):
    """Synthesized envelope for the stock 30 s, n=3, perpendicular scenario."""
    _, params, geom = default_setup
    return synthesize_envelope(geom, params)
