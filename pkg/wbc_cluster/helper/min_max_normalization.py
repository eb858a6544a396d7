# -*- coding: utf-8 -*-
"""
Created on Mon Sep 14 09:12:40 2026

Min-max scaling of numeric columns onto [0, 1].
"""

import warnings
import pandas as pd
import numpy as np
from pandas.api.types import is_numeric_dtype


def min_max_normalization(data, withBackTransformation=False):
    """
    This function maps all numeric columns of a pandas dataframe or a single
    pandas series onto [0, 1] by (x - min) / (max - min), using the observed
    min and max of each column. Constant columns map to 0.

    Args:
        data (dataframe / series): data to be normalized
        withBackTransformation (boolean): provides the per column min and max
                                          to denormalize the data again

    Return:
        Normalized data as dataframe / series or a dictionary containing the
        normalized data and the per column MinX and MaxX
    """

    #__________________________________________________________NORMALIZE SERIES
    if isinstance(data, pd.Series):
        minX = float(data.min())
        maxX = float(data.max())
        denom = maxX - minX
        if denom == 0:
            denom = 1
        data = (data - minX) / denom

        if withBackTransformation == True:
            return {"TransformedData": data, "MinX": minX, "MaxX": maxX}
        else:
            return data

    #_______________________________________________________NORMALIZE DATAFRAME
    if isinstance(data, pd.DataFrame):
        dataOut = pd.DataFrame(index=data.index)
        minX = {}
        maxX = {}
        for strCol in list(data.columns):
            if is_numeric_dtype(data[strCol]):
                xtrans = min_max_normalization(data[strCol],
                                               withBackTransformation=True)
                dataOut[strCol] = xtrans["TransformedData"]
                minX[strCol] = xtrans["MinX"]
                maxX[strCol] = xtrans["MaxX"]
        if withBackTransformation == True:
            return {"TransformedData": dataOut, "MinX": minX, "MaxX": maxX}
        return dataOut

    #____________________________________________________HANDLE WRONG DATA TYPE
    warnings.warn("Data is not a pandas dataframe or series, try to convert "
                  "it to a dataframe")
    return min_max_normalization(pd.DataFrame(np.asarray(data, dtype=float)),
                                 withBackTransformation)
