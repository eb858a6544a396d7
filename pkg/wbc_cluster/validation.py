# -*- coding: utf-8 -*-
"""
Created on Fri Sep 18 11:02:16 2026

Silhouette analysis and the sweep over the number of clusters k producing
the elbow (WSS) and average silhouette curves.
"""

import logging
import math
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Dict, Tuple

import numpy as np

from .exceptions import ConfigError, SingleCluster, ValidationError
from .kmeans import KMeansConfig, kmeans
from .metrics import Metric, _as_matrix, pairwise
from .pam import PamConfig, pam

logger = logging.getLogger(__name__)


class Algorithm(str, Enum):
    KMEANS = "kmeans"
    PAM = "pam"


@dataclass(frozen=True, eq=False)
class SilhouetteReport:
    """
    Args:
        widths (array): silhouette width s(i) per point
        labels (array): cluster id per point
        cluster_means (dict): mean width per cluster id
        overall (float): mean width over all points
        order (array): point indices grouped by ascending cluster id and
                       sorted by descending width within each cluster
    """
    widths: np.ndarray
    labels: np.ndarray
    cluster_means: Dict[int, float]
    overall: float
    order: np.ndarray

    @property
    def cluster_sizes(self):
        return {c: int(np.sum(self.labels == c)) for c in self.cluster_means}

    def to_dict(self):
        return {"overall": self.overall,
                "cluster_means": {str(k): v for k, v in
                                  self.cluster_means.items()},
                "cluster_sizes": {str(k): v for k, v in
                                  self.cluster_sizes.items()},
                "widths": self.widths.tolist()}


def silhouette(dist, labels):
    """
    Silhouette widths of a partition

    a(i) is the mean distance of i to the other members of its cluster,
    b(i) the smallest mean distance of i to the members of another cluster
    and s(i) = (b(i) - a(i)) / max(a(i), b(i)). Members of singleton
    clusters get s(i) = 0.

    Args:
        dist (DistanceMatrix): pairwise distances
        labels (array): cluster id per point

    Returns:
        SilhouetteReport
    """
    labels = np.asarray(labels, dtype=int)
    if len(labels) != dist.n:
        raise ConfigError("labels must have one entry per point")
    clusterIds = [int(x) for x in np.unique(labels)]
    if len(clusterIds) < 2:
        raise SingleCluster("silhouette needs at least 2 clusters, got "
                            + str(len(clusterIds)))
    members = {c: np.flatnonzero(labels == c) for c in clusterIds}
    square = dist.square()

    widths = np.zeros(dist.n)
    for i in range(dist.n):
        own = int(labels[i])
        if len(members[own]) == 1:
            continue
        row = square[i]
        # row[i] is 0 and does not change the sum
        a = math.fsum(row[members[own]].tolist()) / (len(members[own]) - 1)
        b = min(math.fsum(row[members[c]].tolist()) / len(members[c])
                for c in clusterIds if c != own)
        denom = max(a, b)
        widths[i] = 0.0 if denom == 0 else (b - a) / denom

    if (widths < -1).any() or (widths > 1).any():
        raise ValidationError("silhouette width outside [-1, 1]")
    clusterMeans = {c: math.fsum(widths[members[c]].tolist())
                    / len(members[c]) for c in clusterIds}
    overall = math.fsum(widths.tolist()) / dist.n
    order = np.concatenate([members[c][np.argsort(-widths[members[c]],
                                                  kind="stable")]
                            for c in clusterIds])
    widths.flags.writeable = False
    return SilhouetteReport(widths, labels, clusterMeans, overall, order)


@dataclass(frozen=True, eq=False)
class KSweepResult:
    """
    Args:
        ks (tuple): evaluated numbers of clusters
        avg_silhouette (tuple): average silhouette per k
        wss (tuple): WSS (K-means) or total medoid distance (PAM) per k
        best_k (int): k with the highest average silhouette, smaller k wins
                      ties
        algorithm (Algorithm): clustering algorithm of the sweep
        partitions (tuple): the Partition per k
    """
    ks: Tuple[int, ...]
    avg_silhouette: Tuple[float, ...]
    wss: Tuple[float, ...]
    best_k: int
    algorithm: Algorithm = Algorithm.KMEANS
    partitions: Tuple = field(default=(), repr=False)

    @property
    def peak_silhouette(self):
        return self.avg_silhouette[self.ks.index(self.best_k)]

    def to_dict(self):
        return {"algorithm": self.algorithm.value, "ks": list(self.ks),
                "avg_silhouette": list(self.avg_silhouette),
                "wss": list(self.wss), "best_k": self.best_k}


def sweep_k(data, k_range=range(2, 11), algorithm=Algorithm.KMEANS,
            base_config=None, seed=0, metric=Metric.EUCLIDEAN, dist=None,
            threads=1):
    """
    Runs the clustering for every k and records objective and silhouette

    Args:
        data (Dataset / array): n x d points
        k_range (iterable): numbers of clusters, each in [2, n - 1]
        algorithm (Algorithm): KMEANS (best of restarts) or PAM
        base_config (KMeansConfig / PamConfig): parameters besides k
        seed (int): seed of every K-means run
        metric (Metric): metric of the silhouette / PAM distances
        dist (DistanceMatrix): precomputed distances, computed once if None
        threads (int): parallel restarts / distance rows

    Returns:
        KSweepResult
    """
    algorithm = Algorithm(algorithm)
    features = _as_matrix(data)
    nCases = features.shape[0]
    ks = tuple(int(k) for k in k_range)
    if not ks:
        raise ConfigError("k range is empty")
    for k in ks:
        if not 2 <= k <= nCases - 1:
            raise ConfigError("k = " + str(k) + " outside [2, n - 1] = [2, "
                              + str(nCases - 1) + "]")
    if dist is None:
        dist = pairwise(features, metric, threads)

    lstSil = []
    lstWss = []
    lstPartitions = []
    for k in ks:
        if algorithm == Algorithm.KMEANS:
            config = replace(base_config or KMeansConfig(), k=k, seed=seed)
            partition = kmeans(features, config, threads)
        else:
            config = replace(base_config or PamConfig(metric=dist.metric),
                             k=k)
            partition = pam(dist, config).as_partition()
        report = silhouette(dist, partition.labels)
        lstSil.append(report.overall)
        lstWss.append(partition.objective)
        lstPartitions.append(partition)
        logger.debug("sweep k=%d: objective %.6f, silhouette %.6f", k,
                     partition.objective, report.overall)

    bestK = ks[0]
    bestSil = lstSil[0]
    for k, value in zip(ks, lstSil):
        if value > bestSil or (value == bestSil and k < bestK):
            bestK = k
            bestSil = value
    logger.info("sweep %s: best k=%d with average silhouette %.6f",
                algorithm.value, bestK, bestSil)
    return KSweepResult(ks, tuple(lstSil), tuple(lstWss), bestK, algorithm,
                        tuple(lstPartitions))
