# -*- coding: utf-8 -*-
"""
Created on Tue Sep 15 14:21:07 2026

Hopkins statistic: clustering tendency of a dataset before any clustering
runs. Values near 1 indicate clustered data, values near 0.5 spatially
uniform data.
"""

import logging
import math
import warnings
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .exceptions import ConfigError, SampleTooLarge, TendencyError
from .metrics import Metric, _as_matrix, nearest_neighbor

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HopkinsConfig:
    """
    Args:
        m (int): sample size per trial, floor(0.1 * n) if None
        trials (int): number of independent trials
        seed (int): base seed, trial t draws from default_rng(seed + t)
        power (int): exponent applied to the distances, 1 or d
    """
    m: Optional[int] = None
    trials: int = 30
    seed: int = 0
    power: int = 1

    def __post_init__(self):
        if self.m is not None and self.m < 1:
            raise ConfigError("m must be at least 1")
        if self.trials < 1:
            raise ConfigError("trials must be at least 1")
        if self.power < 1:
            raise ConfigError("power must be at least 1")


@dataclass(frozen=True)
class HopkinsResult:
    h: float
    m: int
    trials: int
    per_trial: Tuple[float, ...]
    seed: int
    power: int = 1
    degenerate: bool = False

    @property
    def std(self):
        """Spread of the per trial values"""
        if len(self.per_trial) < 2:
            return 0.0
        return float(np.std(self.per_trial, ddof=1))

    def to_dict(self):
        return {"h": self.h, "m": self.m, "trials": self.trials,
                "per_trial": list(self.per_trial), "std": self.std,
                "seed": self.seed, "power": self.power,
                "degenerate": self.degenerate}


def default_sample_size(n):
    # 68 for the 683 preprocessed WBC rows
    return max(1, min(n - 1, int(0.1 * n)))


def _hopkins_trial(features, m, rng, power):
    nCases, dVariables = features.shape
    low = features.min(axis=0)
    high = features.max(axis=0)
    synthetic = low + (high - low) * rng.random((m, dVariables))
    sampled = rng.choice(nCases, size=m, replace=False)

    u = np.array([nearest_neighbor(x, features,
                                   metric=Metric.EUCLIDEAN)[1]
                  for x in synthetic])
    w = np.array([nearest_neighbor(features[i], features, exclude=int(i),
                                   metric=Metric.EUCLIDEAN)[1]
                  for i in sampled])
    sumU = math.fsum(u ** power)
    sumW = math.fsum(w ** power)
    if sumU + sumW == 0:
        return 1.0, True
    return sumU / (sumU + sumW), sumW == 0


def hopkins(data, m=None, trials=30, seed=0, power=1):
    """
    Hopkins statistic averaged over independent trials

    Per trial m points are drawn uniformly in the bounding box of the data
    (u: distance to the nearest data point) and m data points are drawn
    without replacement (w: distance to the nearest other data point).
    The trial value is sum(u) / (sum(u) + sum(w)).

    Args:
        data (Dataset / array): n x d points, n >= 2
        m (int): sample size, floor(0.1 * n) if None
        trials (int): number of trials
        seed (int): base seed, trial t uses default_rng(seed + t)
        power (int): exponent of the distances (1 or the dimension d)

    Returns:
        HopkinsResult
    """
    config = HopkinsConfig(m, trials, seed, power)
    features = _as_matrix(data)
    nCases = features.shape[0]
    if nCases < 2:
        raise TendencyError("Hopkins statistic needs at least 2 points")
    if m is None:
        m = default_sample_size(nCases)
    if m > nCases - 1:
        raise SampleTooLarge("sample size " + str(m) + " exceeds n - 1 = "
                             + str(nCases - 1))

    perTrial = []
    degenerate = False
    for trial in range(config.trials):
        rng = np.random.default_rng(config.seed + trial)
        value, flag = _hopkins_trial(features, m, rng, config.power)
        perTrial.append(value)
        degenerate = degenerate or flag
        logger.debug("hopkins trial %d: %.6f", trial, value)

    if degenerate:
        warnings.warn("All sampled points coincide with their nearest "
                      "neighbor, Hopkins statistic is 1 by convention")
    h = math.fsum(perTrial) / len(perTrial)
    logger.info("hopkins statistic %.6f (m=%d, trials=%d)", h, m,
                config.trials)
    return HopkinsResult(h, m, config.trials, tuple(perTrial), config.seed,
                         config.power, degenerate)


def uniform_control(data, seed=0):
    """Uniform data of the same shape and bounding box as data"""
    features = _as_matrix(data)
    rng = np.random.default_rng(seed)
    low = features.min(axis=0)
    high = features.max(axis=0)
    return low + (high - low) * rng.random(features.shape)


def hopkins_control(data, m=None, trials=30, seed=0, power=1):
    """
    Hopkins statistic of uniform reference data with the same n, d and
    bounding box, the H = 0.5 baseline for the dataset's value
    """
    return hopkins(uniform_control(data, seed), m, trials, seed, power)
