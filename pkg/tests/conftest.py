import json
import pathlib

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

DATA = pathlib.Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def frozen():
    """Reference values produced by scripts/freeze_oracles.py from the naive oracles."""
    return json.loads((DATA / "oracle_values.json").read_text())
