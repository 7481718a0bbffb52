import os
import sys

import pytest
from hypothesis import HealthCheck, settings

from modtensor.rootdata import get_datum

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(scope="session")
def a2():
    return get_datum("A2")


@pytest.fixture(scope="session")
def b2():
    return get_datum("B2")


@pytest.fixture(scope="session", params=["A2", "B2"])
def datum(request):
    return get_datum(request.param)
