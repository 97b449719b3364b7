import hypothesis
import numpy as np
import pytest

from core.fem import build_space, build_uniform

np.seterr(all="warn")

hypothesis.settings.register_profile("fast", max_examples=5)
hypothesis.settings.register_profile("ci", max_examples=200, deadline=None)
hypothesis.settings.register_profile("dev", max_examples=50, deadline=None)
hypothesis.settings.load_profile("dev")


@pytest.fixture
def unit_space():
    """[0, 1] 위 10요소 1차 공간"""
    return build_space(build_uniform(0.0, 1.0, 10), 1)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)
