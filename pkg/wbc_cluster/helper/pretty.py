# -*- coding: utf-8 -*-
"""
Created on Wed Sep 23 09:41:12 2026

Round axis breaks for the plots.
"""

import numpy as np


def nice_step(x, h=1.5, h5=None):
    """Step size of 1, 2, 5 or 10 times a power of 10 close to x"""
    if h5 is None:
        h5 = 0.5 + 1.5*h
    if x <= 0:
        return 1.

    exp = np.floor(np.log10(x))
    f = x / 10**exp

    if f <= (2+h)/(1+h):
        nf = 1.
    elif f <= (5+2*h5)/(1+h5):
        nf = 2.
    elif f <= (10+5*h)/(1+h):
        nf = 5.
    else:
        nf = 10.
    return nf * 10.**exp


def pretty(low, high, n=5, h=1.5, h5=None, integer=False):
    """
    About n+1 equally spaced round values covering [low, high]

    Args:
        low (numeric): lower bound of range
        high (numeric): upper bound of range
        n (int): desired number of intervals
        h (float): larger values favor larger units
        h5 (float): multiplier favoring factor 5 over 2
        integer (bool): step is at least 1, e.g. for numbers of clusters

    Returns:
        Numpy array of breakpoints
    """
    if high < low:
        low, high = high, low
    d = nice_step((high - low) / max(n, 1), h, h5)
    if integer:
        d = max(d, 1.)
    miny = np.floor(low / d) * d
    maxy = np.ceil(high / d) * d
    breaks = np.arange(miny, maxy + 0.5*d, d)
    return breaks.astype(int) if integer else breaks
