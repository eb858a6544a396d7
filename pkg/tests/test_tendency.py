import math

import numpy as np
import pytest

from wbc_cluster.exceptions import ConfigError, SampleTooLarge, TendencyError
from wbc_cluster.load_examples import two_blobs, uniform_box
from wbc_cluster.tendency import (HopkinsConfig, default_sample_size, hopkins,
                                  hopkins_control, uniform_control)


def test_default_sample_size():
    assert default_sample_size(683) == 68
    assert default_sample_size(5) == 1
    assert default_sample_size(2) == 1


def test_identical_points_are_degenerate():
    data = np.ones((20, 3))
    data[0, 0] = 2.
    data[1, 1] = 2.
    # every row has an exact duplicate
    data = np.vstack([data, data])
    with pytest.warns(UserWarning):
        result = hopkins(data, m=5, trials=4, seed=1)
    assert result.degenerate
    assert all(0. <= x <= 1. for x in result.per_trial)


def test_all_points_identical_gives_one():
    with pytest.warns(UserWarning):
        result = hopkins(np.zeros((10, 2)), m=3, trials=2)
    assert result.h == 1.
    assert result.degenerate


def test_uniform_box_is_near_one_half():
    data = uniform_box(n=683, d=2, seed=11).to_numpy()
    result = hopkins(data, m=68, trials=50, seed=0)
    assert 0.45 <= result.h <= 0.55


def test_blobs_are_more_clustered_than_uniform():
    blobs = two_blobs(n=100, seed=2).to_numpy()
    uniform = uniform_box(n=200, d=2, seed=2).to_numpy()
    assert hopkins(blobs, trials=10, seed=5).h > \
        hopkins(uniform, trials=10, seed=5).h


def test_result_is_mean_of_trials():
    data = uniform_box(n=100, d=3, seed=4).to_numpy()
    result = hopkins(data, m=10, trials=7, seed=3)
    assert len(result.per_trial) == 7
    assert result.h == math.fsum(result.per_trial) / 7
    assert all(0. <= x <= 1. for x in result.per_trial)
    assert result.m == 10
    assert result.std >= 0.


def test_determinism():
    data = uniform_box(n=80, d=2, seed=9).to_numpy()
    first = hopkins(data, m=8, trials=5, seed=42)
    second = hopkins(data, m=8, trials=5, seed=42)
    assert first.per_trial == second.per_trial
    assert first.h == second.h


def test_trials_are_independent_substreams():
    data = uniform_box(n=80, d=2, seed=9).to_numpy()
    longer = hopkins(data, m=8, trials=5, seed=10)
    shifted = hopkins(data, m=8, trials=4, seed=11)
    assert longer.per_trial[1:] == shifted.per_trial


def test_power_variant():
    data = two_blobs(n=40, seed=3).to_numpy()
    result = hopkins(data, m=8, trials=5, seed=0, power=2)
    assert result.power == 2
    assert 0. <= result.h <= 1.


def test_sample_too_large():
    with pytest.raises(SampleTooLarge):
        hopkins(np.random.default_rng(0).random((10, 2)), m=10)


def test_too_few_points():
    with pytest.raises(TendencyError):
        hopkins(np.array([[1., 2.]]))


def test_invalid_config():
    with pytest.raises(ConfigError):
        HopkinsConfig(trials=0)
    with pytest.raises(ConfigError):
        HopkinsConfig(m=0)


def test_uniform_control_keeps_shape_and_box():
    data = two_blobs(n=30, seed=0).to_numpy()
    control = uniform_control(data, seed=1)
    assert control.shape == data.shape
    assert (control.min(axis=0) >= data.min(axis=0)).all()
    assert (control.max(axis=0) <= data.max(axis=0)).all()
    result = hopkins_control(data, trials=5, seed=1)
    assert 0.25 <= result.h <= 0.75
