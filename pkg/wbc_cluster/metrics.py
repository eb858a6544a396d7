# -*- coding: utf-8 -*-
"""
Created on Tue Sep 15 08:40:52 2026

Distance kernels and the condensed pairwise distance matrix shared by the
tendency, PAM and silhouette computations.

All kernels accumulate the coordinate terms from left to right, one column
at a time, so distance(), pairwise() and nearest_neighbor() return bit
identical values for the same pair of points.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.spatial.distance import squareform

from .exceptions import (ConfigError, DimensionMismatch, EmptyCandidateSet,
                         MetricError)

logger = logging.getLogger(__name__)


class Metric(str, Enum):
    """
    Supported dissimilarities. SQUARED_EUCLIDEAN violates the triangle
    inequality and is no metric in the strict sense.
    """
    EUCLIDEAN = "euclidean"
    SQUARED_EUCLIDEAN = "sqeuclidean"
    MANHATTAN = "manhattan"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ConfigError("unknown metric " + repr(value) + ", use one "
                              "of " + ", ".join(x.value for x in cls)) \
                from None


def _as_matrix(data):
    # Dataset or array like -> 2d float array
    features = getattr(data, "features", data)
    features = np.asarray(features, dtype=float)
    if features.ndim == 1:
        features = features.reshape(-1, 1)
    return features


def _accumulate(diff, metric):
    """
    Reduces a matrix of coordinate differences (one row per pair) to one
    distance per row, adding the columns from left to right
    """
    acc = np.zeros(diff.shape[0])
    if metric == Metric.MANHATTAN:
        for j in range(diff.shape[1]):
            acc += np.abs(diff[:, j])
        return acc
    for j in range(diff.shape[1]):
        acc += diff[:, j] * diff[:, j]
    if metric == Metric.EUCLIDEAN:
        return np.sqrt(acc)
    return acc


def distance(a, b, metric=Metric.EUCLIDEAN):
    """
    Distance between two vectors

    Args:
        a (array): first vector
        b (array): second vector
        metric (Metric): dissimilarity to be used

    Returns:
        float distance
    """
    metric = Metric.parse(metric)
    a = np.asarray(a, dtype=float).ravel()
    b = np.asarray(b, dtype=float).ravel()
    if len(a) != len(b):
        raise DimensionMismatch("vectors have length " + str(len(a)) +
                                " and " + str(len(b)))
    return float(_accumulate((a - b).reshape(1, -1), metric)[0])


def condensed_index(n, i, j):
    """Position of the pair (i, j), i < j, in the condensed vector"""
    if i == j or not (0 <= i < n and 0 <= j < n):
        raise MetricError("invalid pair (" + str(i) + ", " + str(j) +
                          ") for " + str(n) + " points")
    if i > j:
        i, j = j, i
    return i * n - i * (i + 1) // 2 + (j - i - 1)


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """
    Condensed upper triangle of a symmetric distance matrix

    Args:
        n (int): number of points
        metric (Metric): metric the values were computed with
        values (array): n(n-1)/2 distances, pair (i, j) with i < j stored
                        at i*n - i(i+1)/2 + (j - i - 1)
    """
    n: int
    metric: Metric
    values: np.ndarray

    def __post_init__(self):
        values = np.array(self.values, dtype=float).ravel()
        if len(values) != self.n * (self.n - 1) // 2:
            raise MetricError("expected " + str(self.n * (self.n - 1) // 2)
                              + " values for " + str(self.n) + " points")
        if (values < 0).any():
            raise MetricError("distances must be nonnegative")
        values.flags.writeable = False
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "metric", Metric.parse(self.metric))

    def __len__(self):
        return self.n

    def get(self, i, j):
        if i == j:
            return 0.0
        return float(self.values[condensed_index(self.n, i, j)])

    def square(self):
        """Full n x n matrix with zero diagonal"""
        if self.n == 1:
            return np.zeros((1, 1))
        return squareform(self.values, checks=False)

    def scaled(self, factor):
        return DistanceMatrix(self.n, self.metric, self.values * factor)


def pairwise(data, metric=Metric.EUCLIDEAN, threads=1):
    """
    All pairwise distances of the rows of data

    Args:
        data (Dataset / array): n x d points
        metric (Metric): dissimilarity to be used
        threads (int): rows of the triangle computed in parallel

    Returns:
        DistanceMatrix
    """
    metric = Metric.parse(metric)
    features = _as_matrix(data)
    nCases = features.shape[0]
    if nCases < 1:
        raise MetricError("pairwise distances need at least one point")

    def triangle_row(i):
        return _accumulate(features[i + 1:] - features[i], metric)

    rows = range(nCases - 1)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            parts = list(executor.map(triangle_row, rows))
    else:
        parts = [triangle_row(i) for i in rows]
    values = np.concatenate(parts) if parts else np.empty(0)
    logger.debug("computed %d pairwise %s distances", len(values),
                 metric.value)
    return DistanceMatrix(nCases, metric, values)


def nearest_neighbor(query, data, exclude=None, metric=Metric.EUCLIDEAN):
    """
    Closest row of data to the query point, ties go to the lowest index

    Args:
        query (array): query vector
        data (Dataset / array): n x d candidate points
        exclude (int): row index that is not a candidate
        metric (Metric): dissimilarity to be used

    Returns:
        tuple of row index and distance
    """
    metric = Metric.parse(metric)
    features = _as_matrix(data)
    query = np.asarray(query, dtype=float).ravel()
    if features.shape[1] != len(query):
        raise DimensionMismatch("query has length " + str(len(query)) +
                                ", data has " + str(features.shape[1]) +
                                " columns")
    nCandidates = features.shape[0] - (1 if exclude is not None
                                       and 0 <= exclude < features.shape[0]
                                       else 0)
    if nCandidates < 1:
        raise EmptyCandidateSet("no candidate rows left")
    dist = _accumulate(features - query, metric)
    if exclude is not None and 0 <= exclude < features.shape[0]:
        dist[exclude] = np.inf
    index = int(np.argmin(dist))
    return index, float(dist[index])
