import os
import sys

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

from evenorient import kernels  # noqa: E402

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow], print_blob=True
)
settings.load_profile("default")

try:
    from evenorient import _ckernels  # noqa: F401

    HAVE_COMPILED = True
except ImportError:
    HAVE_COMPILED = False

BACKENDS = ["python"] + (["compiled"] if HAVE_COMPILED else [])


@pytest.fixture(params=BACKENDS)
def backend(request):
    """Run the test once per available kernel backend."""
    before = kernels.BACKEND
    kernels.use_backend(request.param)
    yield request.param
    kernels.use_backend(before)
