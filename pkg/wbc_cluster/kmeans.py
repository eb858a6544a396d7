# -*- coding: utf-8 -*-
"""
Created on Wed Sep 16 09:55:30 2026

Lloyd's K-means with k-means++ or uniform random seeding and restarts.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Optional, Tuple

import numpy as np

from .exceptions import ConfigError, EmptyDataset, MissingCenter, TooFewPoints
from .metrics import Metric, _accumulate, _as_matrix

logger = logging.getLogger(__name__)


class Init(str, Enum):
    KMEANS_PP = "kmeans++"
    RANDOM = "random"


@dataclass(frozen=True)
class KMeansConfig:
    """
    Args:
        k (int): number of clusters
        init (Init): seeding scheme of every restart
        max_iter (int): maximal Lloyd iterations per restart
        restarts (int): independent restarts, the best objective is kept
        tol (float): convergence threshold on the maximal centroid shift
        seed (int): base seed, restart r draws from default_rng(seed + r)
    """
    k: int = 2
    init: Init = Init.KMEANS_PP
    max_iter: int = 100
    restarts: int = 25
    tol: float = 1e-9
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "init", Init(self.init))
        if self.k < 1:
            raise ConfigError("k must be at least 1")
        if self.max_iter < 1:
            raise ConfigError("max_iter must be at least 1")
        if self.restarts < 1:
            raise ConfigError("restarts must be at least 1")
        if self.tol < 0:
            raise ConfigError("tol must be nonnegative")


@dataclass(frozen=True, eq=False)
class Partition:
    """
    Cluster assignment with the artifacts of the algorithm that produced it

    Args:
        labels (array): cluster id in [0, k) per point
        k (int): number of clusters
        objective (float): WSS for K-means, total distance for PAM
        centroids (array): k x d cluster means (K-means)
        medoid_indices (tuple): row index per cluster (PAM)
        iterations (int): Lloyd iterations / swaps performed
        converged (bool): stopped by the convergence criterion
        history (tuple): objective after every iteration
    """
    labels: np.ndarray
    k: int
    objective: float
    centroids: Optional[np.ndarray] = None
    medoid_indices: Optional[Tuple[int, ...]] = None
    iterations: int = 0
    converged: bool = False
    history: Tuple[float, ...] = field(default=())

    def __post_init__(self):
        labels = np.array(self.labels, dtype=int)
        labels.flags.writeable = False
        object.__setattr__(self, "labels", labels)
        if self.centroids is not None:
            centroids = np.array(self.centroids, dtype=float)
            centroids.flags.writeable = False
            object.__setattr__(self, "centroids", centroids)

    @property
    def sizes(self):
        return np.bincount(self.labels, minlength=self.k)

    def to_dict(self):
        return {"k": self.k, "objective": self.objective,
                "sizes": self.sizes.tolist(),
                "labels": self.labels.tolist(),
                "centroids": None if self.centroids is None
                else self.centroids.tolist(),
                "medoid_indices": None if self.medoid_indices is None
                else list(self.medoid_indices),
                "iterations": self.iterations,
                "converged": self.converged}


def squared_distances(features, centers):
    """n x k matrix of squared euclidean distances, column order fixed"""
    return np.column_stack([_accumulate(features - c,
                                        Metric.SQUARED_EUCLIDEAN)
                            for c in centers])


def wss(data, labels, centers):
    """
    Within cluster sum of squares

    Args:
        data (Dataset / array): n x d points
        labels (array): cluster id per point
        centers (array): one center per cluster id

    Returns:
        float sum of squared distances of the points to their center
    """
    features = _as_matrix(data)
    labels = np.asarray(labels, dtype=int)
    centers = np.asarray(centers, dtype=float).reshape(-1, features.shape[1])
    if len(labels) != features.shape[0]:
        raise ConfigError("labels must have one entry per point")
    if len(labels) > 0 and (labels.min() < 0
                            or labels.max() >= centers.shape[0]):
        raise MissingCenter("no center for cluster id "
                            + str(labels.max() if labels.max()
                                  >= centers.shape[0] else labels.min()))
    if len(labels) == 0:
        return 0.0
    terms = _accumulate(features - centers[labels],
                        Metric.SQUARED_EUCLIDEAN)
    return math.fsum(terms.tolist())


def _kmeans_pp(features, k, rng):
    nCases = features.shape[0]
    chosen = [int(rng.integers(nCases))]
    closest = _accumulate(features - features[chosen[0]],
                          Metric.SQUARED_EUCLIDEAN)
    for _ in range(1, k):
        total = closest.sum()
        if total > 0:
            index = int(rng.choice(nCases, p=closest / total))
        else:
            # all points coincide with a chosen center
            candidates = np.setdiff1d(np.arange(nCases), chosen)
            index = int(rng.choice(candidates))
        chosen.append(index)
        closest = np.minimum(closest,
                             _accumulate(features - features[index],
                                         Metric.SQUARED_EUCLIDEAN))
    return features[chosen].copy()


def _seed_centers(features, k, init, rng):
    if init == Init.KMEANS_PP:
        return _kmeans_pp(features, k, rng)
    return features[rng.choice(features.shape[0], size=k,
                               replace=False)].copy()


def _repair_empty(features, labels, centers, sqdist, k):
    """Every empty cluster seizes the point farthest from its centroid"""
    counts = np.bincount(labels, minlength=k)
    for cluster in np.flatnonzero(counts == 0):
        own = sqdist[np.arange(len(labels)), labels].copy()
        own[counts[labels] <= 1] = -1
        donor = int(np.argmax(own))
        counts[labels[donor]] -= 1
        labels[donor] = cluster
        counts[cluster] += 1
        centers[cluster] = features[donor]
        sqdist[donor, :] = _accumulate(centers - features[donor],
                                       Metric.SQUARED_EUCLIDEAN)
    return labels


def _canonical(labels, centroids):
    # cluster ids in order of first occurrence
    _, first = np.unique(labels, return_index=True)
    order = np.unique(labels)[np.argsort(first)]
    mapping = np.empty(len(order), dtype=int)
    mapping[order] = np.arange(len(order))
    return mapping[labels], centroids[order]


def _lloyd(features, config, rng):
    k = config.k
    centers = _seed_centers(features, k, config.init, rng)
    history = []
    converged = False
    iterations = 0
    for iterations in range(1, config.max_iter + 1):
        sqdist = squared_distances(features, centers)
        labels = np.argmin(sqdist, axis=1)
        labels = _repair_empty(features, labels, centers, sqdist, k)
        newCenters = np.array([features[labels == c].mean(axis=0)
                               for c in range(k)])
        shift = math.sqrt(max(_accumulate(newCenters - centers,
                                          Metric.SQUARED_EUCLIDEAN)))
        centers = newCenters
        history.append(wss(features, labels, centers))
        if shift <= config.tol:
            converged = True
            break
    labels, centers = _canonical(labels, centers)
    return Partition(labels, k, history[-1], centers, None, iterations,
                     converged, tuple(history))


def kmeans(data, config=None, threads=1, **kwargs):
    """
    Best of several Lloyd runs

    Args:
        data (Dataset / array): n x d points
        config (KMeansConfig): algorithm parameters, keyword arguments
                               override its fields
        threads (int): restarts run in parallel

    Returns:
        Partition of the restart with the smallest WSS
    """
    if config is None:
        config = KMeansConfig(**kwargs)
    elif kwargs:
        config = replace(config, **kwargs)
    features = _as_matrix(data)
    nCases = features.shape[0]
    if nCases == 0:
        raise EmptyDataset("cannot cluster an empty dataset")
    if nCases < config.k:
        raise TooFewPoints(str(nCases) + " points cannot form " +
                           str(config.k) + " clusters")

    def restart(r):
        return _lloyd(features, config, np.random.default_rng(config.seed + r))

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            results = list(executor.map(restart, range(config.restarts)))
    else:
        results = [restart(r) for r in range(config.restarts)]

    best = results[0]
    for r, result in enumerate(results):
        logger.debug("k-means restart %d: wss %.6f after %d iterations", r,
                     result.objective, result.iterations)
        if result.objective < best.objective:
            best = result
    logger.info("k-means k=%d: wss %.6f, sizes %s", config.k, best.objective,
                best.sizes.tolist())
    return best
