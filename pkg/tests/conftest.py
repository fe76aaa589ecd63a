import math

from hypothesis import HealthCheck, settings

settings.register_profile(
    "repo", max_examples=40, deadline=None, derandomize=True, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("repo")


def rel_err(a, b):
    a, b = float(a), float(b)
    if a == b:
        return 0.0
    return abs(a - b) / abs(b) if b != 0 else math.inf


def assert_close(a, b, rel, abs_tol=0.0):
    a, b = float(a), float(b)
    assert abs(a - b) <= abs_tol or rel_err(a, b) <= rel, f"{a!r} vs {b!r}: rel {rel_err(a, b):.3e} > {rel:g}"
