import os

from hypothesis import HealthCheck, settings

# Exact rational arithmetic makes individual examples slow but never flaky;
# a wall-clock deadline would only add noise.
settings.register_profile(
    "tauforge",
    deadline=None,
    max_examples=int(os.environ.get("TAUFORGE_HYPOTHESIS_EXAMPLES", "40")),
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("tauforge")
