import os

from hypothesis import HealthCheck, settings

from transwords.words import PowerBound

settings.register_profile("default", max_examples=150, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=600, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

TEST_BOUNDS = tuple(PowerBound.parse(s) for s in ("2", "2+", "7/4", "3"))
