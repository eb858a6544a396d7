# -*- coding: utf-8 -*-
"""
Created on Mon Sep 21 15:47:03 2026

Principal component projection onto the plane used by the cluster scatter
plots. The covariance matrix is small (d = 9 for the breast cancer data),
so it is diagonalized completely by cyclic Jacobi rotations.
"""

import logging
import warnings
from dataclasses import dataclass

import numpy as np

from .exceptions import InsufficientData
from .metrics import _as_matrix

logger = logging.getLogger(__name__)


def jacobi_eigen(matrix, tol=1e-15, maxSweeps=100):
    """
    Eigen decomposition of a real symmetric matrix by cyclic Jacobi
    rotations

    Args:
        matrix (array): symmetric d x d matrix
        tol (float): stop once the off-diagonal norm is below tol times the
                     Frobenius norm
        maxSweeps (int): maximal number of sweeps over all (p, q) pairs

    Returns:
        tuple of eigenvalues (descending) and eigenvectors (as columns)
    """
    a = np.array(matrix, dtype=float)
    d = a.shape[0]
    v = np.eye(d)
    scale = np.sqrt(np.sum(a * a))
    for _ in range(maxSweeps):
        off = np.sqrt(2 * np.sum(np.triu(a, 1) ** 2))
        if off <= tol * scale or scale == 0:
            break
        for p in range(d - 1):
            for q in range(p + 1, d):
                if a[p, q] == 0:
                    continue
                diff = a[q, q] - a[p, p]
                if abs(a[p, q]) < abs(diff) * 1e-150:
                    # theta ** 2 would overflow, t = 1 / (2 theta)
                    t = a[p, q] / diff
                else:
                    theta = diff / (2 * a[p, q])
                    t = 1.0 if theta == 0 else np.sign(theta) / (
                        abs(theta) + np.sqrt(theta ** 2 + 1))
                c = 1 / np.sqrt(t ** 2 + 1)
                s = t * c
                rot = np.eye(d)
                rot[p, p] = c
                rot[q, q] = c
                rot[p, q] = s
                rot[q, p] = -s
                a = rot.T @ a @ rot
                # keep the pair exactly annihilated and the matrix symmetric
                a[p, q] = a[q, p] = 0.0
                v = v @ rot
    values = np.diag(a).copy()
    order = np.argsort(-values, kind="stable")
    return values[order], v[:, order]


def _fix_signs(vectors):
    # largest magnitude entry of every component is positive
    for j in range(vectors.shape[1]):
        i = int(np.argmax(np.abs(vectors[:, j])))
        if vectors[i, j] < 0:
            vectors[:, j] = -vectors[:, j]
    return vectors


@dataclass(frozen=True, eq=False)
class Projection2D:
    """
    Args:
        coords (array): n x 2 projected points
        axis_variance (tuple): fraction of the total variance per axis
        components (array): 2 x d unit loading vectors
        eigenvalues (array): all covariance eigenvalues, descending
        mean (array): column means used for centering
        degenerate (bool): data had zero total variance
    """
    coords: np.ndarray
    axis_variance: tuple
    components: np.ndarray
    eigenvalues: np.ndarray
    mean: np.ndarray
    degenerate: bool = False

    def transform(self, points):
        """Projects further points, e.g. centroids, onto the same plane"""
        points = np.asarray(points, dtype=float).reshape(-1, len(self.mean))
        return (points - self.mean) @ self.components.T

    def to_dict(self):
        return {"axis_variance": list(self.axis_variance),
                "components": self.components.tolist(),
                "eigenvalues": self.eigenvalues.tolist(),
                "degenerate": self.degenerate}


def pca_2d(data):
    """
    Projection onto the first two principal components

    Args:
        data (Dataset / array): n x d points, n >= 2 and d >= 2

    Returns:
        Projection2D
    """
    features = _as_matrix(data)
    nCases, dVariables = features.shape
    if nCases < 2 or dVariables < 2:
        raise InsufficientData("PCA projection needs at least 2 points and "
                               "2 features, got " + str(nCases) + " x "
                               + str(dVariables))
    mean = features.mean(axis=0)
    centered = features - mean
    cov = centered.T @ centered / (nCases - 1)
    total = float(np.trace(cov))

    if total == 0:
        warnings.warn("Data has zero total variance, all projected "
                      "coordinates are 0")
        components = np.eye(dVariables)[:2]
        return Projection2D(np.zeros((nCases, 2)), (0.0, 0.0), components,
                            np.zeros(dVariables), mean, True)

    values, vectors = jacobi_eigen(cov)
    values = np.clip(values, 0, None)
    vectors = _fix_signs(vectors)
    components = vectors[:, :2].T.copy()
    coords = centered @ components.T
    axisVariance = (float(values[0] / total), float(values[1] / total))
    logger.debug("pca axis variance %.4f / %.4f", *axisVariance)
    return Projection2D(coords, axisVariance, components, values, mean)
