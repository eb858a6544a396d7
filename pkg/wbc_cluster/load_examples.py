# -*- coding: utf-8 -*-
"""
Created on Tue Sep 29 08:55:14 2026

Seeded synthetic example data.
"""

import numpy as np
import pandas as pd

from .dataset import WBC_COLUMNS


def two_blobs(n=30, seed=0):
    """Two well separated gaussian blobs in the plane, n points each"""
    rng = np.random.default_rng(seed)
    first = rng.normal(0., 0.3, size=(n, 2))
    second = rng.normal(0., 0.3, size=(n, 2)) + np.array([5., 5.])
    return pd.DataFrame(np.vstack([first, second]), columns=["X1", "X2"])


def three_blobs(n=20, seed=0):
    """Three gaussian blobs in three dimensions, n points each"""
    rng = np.random.default_rng(seed)
    centers = np.array([[0., 0., 0.], [6., 0., 0.], [0., 6., 6.]])
    data = np.vstack([rng.normal(0., 0.4, size=(n, 3)) + c for c in centers])
    return pd.DataFrame(data, columns=["X1", "X2", "X3"])


def uniform_box(n=200, d=2, seed=0):
    """Uniform points in the unit cube, no cluster structure"""
    rng = np.random.default_rng(seed)
    return pd.DataFrame(rng.random((n, d)),
                        columns=["X" + str(i + 1) for i in range(d)])


def wbc_like(n=60, missing=3, seed=0):
    """
    Table in the layout of the breast cancer file: sample code number, nine
    cytology ratings 1 - 10 and the class code 2 (benign) / 4 (malignant).
    Benign rows have low ratings, malignant rows high ones. The first
    `missing` rows get a missing Bare Nuclei rating (None).
    """
    rng = np.random.default_rng(seed)
    nMalignant = n // 3
    classes = np.array([2] * (n - nMalignant) + [4] * nMalignant)
    rng.shuffle(classes)
    low = rng.integers(1, 4, size=(n, 9))
    high = rng.integers(6, 11, size=(n, 9))
    ratings = np.where((classes == 4)[:, np.newaxis], high, low)
    ids = 1000000 + np.arange(n) * 17
    df = pd.DataFrame(ratings, columns=list(WBC_COLUMNS[1:10]))
    df.insert(0, WBC_COLUMNS[0], ids)
    df[WBC_COLUMNS[10]] = classes
    df = df.astype(object)
    df.iloc[:missing, 6] = None
    return df


def wbc_like_csv(n=60, missing=3, seed=0):
    """wbc_like as headerless csv bytes with ? for missing ratings"""
    df = wbc_like(n, missing, seed)
    return df.to_csv(index=False, header=False, na_rep="?",
                     lineterminator="\n").encode("utf-8")


def load_examples():
    dctExamples = {}
    dctExamples["TwoBlobs"] = two_blobs()
    dctExamples["ThreeBlobs"] = three_blobs()
    dctExamples["UniformBox"] = uniform_box()
    dctExamples["WbcLike"] = wbc_like()

    return dctExamples
