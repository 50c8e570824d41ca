import numpy as np
import pytest

from ghzmeter import OrthoFrame


def random_direction(rng):
    v = rng.standard_normal(3)
    return v / np.linalg.norm(v)


def random_orthogonal_frame(rng):
    n1 = random_direction(rng)
    v = rng.standard_normal(3)
    v -= np.dot(v, n1) * n1
    return OrthoFrame(n1, v / np.linalg.norm(v))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def frame_xy():
    return OrthoFrame([1.0, 0.0, 0.0], [0.0, 1.0, 0.0])


@pytest.fixture
def frame_zx():
    return OrthoFrame([0.0, 0.0, 1.0], [1.0, 0.0, 0.0])
