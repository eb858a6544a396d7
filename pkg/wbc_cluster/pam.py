# -*- coding: utf-8 -*-
"""
Created on Thu Sep 17 10:14:45 2026

Partitioning Around Medoids: greedy BUILD initialization followed by
best improvement SWAP search on a precomputed distance matrix.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Tuple

import numpy as np

from .exceptions import ConfigError, InvalidMedoid, TooFewPoints
from .kmeans import Partition
from .metrics import Metric

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PamConfig:
    """
    Args:
        k (int): number of medoids
        max_swap_iters (int): upper bound on applied swaps
        metric (Metric): metric of the distance matrix
    """
    k: int = 2
    max_swap_iters: int = 200
    metric: Metric = Metric.EUCLIDEAN

    def __post_init__(self):
        object.__setattr__(self, "metric", Metric.parse(self.metric))
        if self.k < 1:
            raise ConfigError("k must be at least 1")
        if self.max_swap_iters < 0:
            raise ConfigError("max_swap_iters must be nonnegative")


@dataclass(frozen=True, eq=False)
class PamResult:
    """
    Args:
        medoid_indices (tuple): ascending row indices of the medoids
        labels (array): position of the nearest medoid per point
        cost (float): sum of distances to the nearest medoid
        swaps_performed (int): applied swaps
        converged (bool): no improving swap was left
        history (tuple): cost after BUILD and after every swap
    """
    medoid_indices: Tuple[int, ...]
    labels: np.ndarray
    cost: float
    swaps_performed: int
    converged: bool
    history: Tuple[float, ...] = field(default=())

    def __post_init__(self):
        labels = np.array(self.labels, dtype=int)
        labels.flags.writeable = False
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "medoid_indices",
                           tuple(int(x) for x in self.medoid_indices))

    @property
    def k(self):
        return len(self.medoid_indices)

    @property
    def sizes(self):
        return np.bincount(self.labels, minlength=self.k)

    def as_partition(self):
        return Partition(self.labels, self.k, self.cost, None,
                         self.medoid_indices, self.swaps_performed,
                         self.converged, self.history)

    def to_dict(self):
        return {"k": self.k, "medoid_indices": list(self.medoid_indices),
                "cost": self.cost, "sizes": self.sizes.tolist(),
                "labels": self.labels.tolist(),
                "swaps_performed": self.swaps_performed,
                "converged": self.converged}


def _check_medoids(n, medoids):
    medoids = [int(x) for x in medoids]
    if len(medoids) == 0:
        raise InvalidMedoid("at least one medoid is required")
    if len(set(medoids)) != len(medoids):
        raise InvalidMedoid("medoids are not distinct: " + str(medoids))
    for m in medoids:
        if not 0 <= m < n:
            raise InvalidMedoid("medoid " + str(m) + " is not a row index "
                                "of " + str(n) + " points")
    return medoids


def pam_cost(dist, medoids):
    """
    Sum over all points of the distance to the nearest medoid

    Args:
        dist (DistanceMatrix): pairwise distances
        medoids (iterable): distinct row indices

    Returns:
        float cost
    """
    medoids = _check_medoids(dist.n, medoids)
    square = dist.square()
    return math.fsum(square[medoids].min(axis=0).tolist())


def _assign(square, medoids):
    # medoids ascending: argmin ties go to the lowest medoid index
    labels = np.argmin(square[medoids], axis=0)
    # a medoid sharing its coordinates with another one keeps its own cluster
    labels[list(medoids)] = np.arange(len(medoids))
    return labels


def _build(square, k):
    medoids = [int(np.argmin(square.sum(axis=1)))]
    nearest = square[medoids[0]].copy()
    while len(medoids) < k:
        gains = np.maximum(nearest[np.newaxis, :] - square, 0).sum(axis=1)
        gains[medoids] = -np.inf
        candidate = int(np.argmax(gains))
        medoids.append(candidate)
        nearest = np.minimum(nearest, square[candidate])
        logger.debug("BUILD added medoid %d (gain %.6f)", candidate,
                     gains[candidate])
    return sorted(medoids)


def _best_swap(square, medoids):
    """
    Cheapest configuration reachable by one (medoid, non-medoid) exchange,
    ties resolved towards the lowest (medoid, candidate) pair
    """
    nCases = square.shape[0]
    sub = square[medoids]
    order = np.argsort(sub, axis=0, kind="stable")
    nearestPos = order[0]
    d1 = sub[nearestPos, np.arange(nCases)]
    d2 = sub[order[1], np.arange(nCases)] if len(medoids) > 1 \
        else np.full(nCases, np.inf)
    isMedoid = np.zeros(nCases, dtype=bool)
    isMedoid[medoids] = True

    bestCost = np.inf
    bestPair = None
    for pos, medoid in enumerate(medoids):
        # distance to the closest remaining medoid once this one is removed
        remaining = np.where(nearestPos == pos, d2, d1)
        costs = np.minimum(square, remaining[np.newaxis, :]).sum(axis=1)
        costs[isMedoid] = np.inf
        candidate = int(np.argmin(costs))
        if costs[candidate] < bestCost:
            bestCost = float(costs[candidate])
            bestPair = (medoid, candidate)
    return bestPair, bestCost


def pam(dist, config=None, **kwargs):
    """
    Partitioning Around Medoids

    Args:
        dist (DistanceMatrix): pairwise distances of the points
        config (PamConfig): algorithm parameters, keyword arguments are used
                            if no config is given

    Returns:
        PamResult
    """
    if config is None:
        config = PamConfig(**kwargs)
    nCases = dist.n
    if nCases < config.k:
        raise TooFewPoints(str(nCases) + " points cannot form " +
                           str(config.k) + " clusters")
    square = dist.square()

    medoids = _build(square, config.k)
    cost = pam_cost(dist, medoids)
    history = [cost]
    swaps = 0
    converged = False
    while True:
        if config.k == nCases:
            converged = True
            break
        pair, newCost = _best_swap(square, medoids)
        if pair is None or cost - newCost <= 1e-12 * max(1.0, cost):
            converged = True
            break
        if swaps >= config.max_swap_iters:
            break
        medoids = sorted([x for x in medoids if x != pair[0]] + [pair[1]])
        cost = pam_cost(dist, medoids)
        history.append(cost)
        swaps += 1
        logger.debug("SWAP %d: medoid %d -> %d, cost %.6f", swaps, pair[0],
                     pair[1], cost)

    labels = _assign(square, medoids)
    logger.info("pam k=%d: cost %.6f after %d swaps", config.k, cost, swaps)
    return PamResult(tuple(medoids), labels, cost, swaps, converged,
                     tuple(history))
