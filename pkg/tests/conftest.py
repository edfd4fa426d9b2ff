import numpy as np
import pytest

from hilfer_dfc import Grid, GridFn


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def random_grid_fn(rng, base=0.0, count=24, scale=1.0):
    return GridFn(Grid(base, count), rng.uniform(-scale, scale, count))


def rel_err(got, expect):
    return abs(got - expect) / max(1.0, abs(expect))
