"""Shared hypothesis profile: deterministic runs, no deadline.

The series engine can take tens of milliseconds per call when parameters
land near the convergence boundary, so per-example deadlines are off.
Derandomization keeps failures reproducible across machines.
"""

from hypothesis import HealthCheck, settings

settings.register_profile(
    "ci",
    derandomize=True,
    deadline=None,
    max_examples=50,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("ci")
