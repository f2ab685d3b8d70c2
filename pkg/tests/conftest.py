import os
import sys
import warnings

from hypothesis import HealthCheck, settings

sys.path.insert(
    0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..", "src"))
)

warnings.filterwarnings(
    "ignore", category=DeprecationWarning, module="pydantic._internal._config"
)

# Enumerations are cached per root system, so the first example of a run is
# much slower than the rest.
settings.register_profile(
    "default",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("ci", max_examples=150, deadline=None)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))
