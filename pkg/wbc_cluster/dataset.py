# -*- coding: utf-8 -*-
"""
Created on Mon Sep 14 10:03:11 2026

Reading of CSV / ARFF tables and their preprocessing into an analysis ready
feature matrix: removal of rows with missing cells, removal of the id and
class columns and min-max normalization of the remaining features.
"""

import io
import logging
import re
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import arff
import numpy as np
import pandas as pd

from .exceptions import (ArffSyntax, ConfigError, DatasetError,
                         InvalidClassValue, MalformedRow, MissingValues,
                         NonNumericCell, UnknownColumn,
                         UnsupportedAttributeType)
from .helper.min_max_normalization import min_max_normalization

logger = logging.getLogger(__name__)

# attribute table of the Wisconsin breast cancer data (original UCI file)
WBC_COLUMNS = ("Sample code number", "Clump Thickness",
               "Uniformity of Cell Size", "Uniformity of Cell Shape",
               "Marginal Adhesion", "Single Epithelial Cell Size",
               "Bare Nuclei", "Bland Chromatin", "Normal Nucleoli", "Mitoses",
               "Class")
WBC_ID_COLUMN = "Sample code number"
WBC_LABEL_COLUMN = "Class"


class ClassLabel(str, Enum):
    BENIGN = "Benign"
    MALIGNANT = "Malignant"


CLASS_CODES = {2: ClassLabel.BENIGN, 4: ClassLabel.MALIGNANT}


@dataclass(frozen=True)
class CsvConfig:
    """
    Options of the delimiter separated reader

    Args:
        header (bool): first non blank line holds the column names
        delimiter (str): single field delimiter character
        missing_marker (str): cell text denoting a missing value
        column_names (tuple): names overriding header / generated names
    """
    header: bool = False
    delimiter: str = ","
    missing_marker: str = "?"
    column_names: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        if len(self.delimiter) != 1:
            raise ConfigError("delimiter must be a single character, got "
                              + repr(self.delimiter))
        if self.column_names is not None:
            object.__setattr__(self, "column_names",
                               tuple(self.column_names))


#_____________________________________________________________________RAW TABLE
@dataclass(frozen=True, eq=False)
class RawTable:
    """
    Numeric table as read from file. Missing cells are stored as nan.

    Args:
        column_names (tuple): unique column names
        cells (array): n x c matrix of floats, nan marks a missing cell
        row_ids (tuple): identifier per row, positional by default
        nominal_values (dict): declared values of nominal ARFF columns, the
                               cells of those columns hold the value index
    """
    column_names: Tuple[str, ...]
    cells: np.ndarray
    row_ids: Tuple = ()
    nominal_values: Mapping[str, Tuple[str, ...]] = field(default_factory=dict)

    def __post_init__(self):
        names = tuple(str(x) for x in self.column_names)
        cells = np.array(self.cells, dtype=float)
        if cells.size == 0:
            cells = cells.reshape(len(cells) if cells.ndim > 1 else 0,
                                  len(names))
        if cells.ndim != 2 or cells.shape[1] != len(names):
            raise DatasetError("cells must be a matrix with one column per "
                               "column name")
        if len(set(names)) != len(names):
            raise DatasetError("column names are not unique: "
                               + str(list(names)))
        rowIds = tuple(self.row_ids) if len(self.row_ids) > 0 \
            else tuple(range(cells.shape[0]))
        if len(rowIds) != cells.shape[0]:
            raise DatasetError("row_ids must have one entry per row")
        for strCol in self.nominal_values:
            if strCol not in names:
                raise UnknownColumn(strCol)
        cells.flags.writeable = False
        object.__setattr__(self, "column_names", names)
        object.__setattr__(self, "cells", cells)
        object.__setattr__(self, "row_ids", rowIds)
        object.__setattr__(self, "nominal_values",
                           {k: tuple(v) for k, v in
                            self.nominal_values.items()})

    @property
    def n_rows(self):
        return self.cells.shape[0]

    @property
    def n_cols(self):
        return self.cells.shape[1]

    def __eq__(self, other):
        if not isinstance(other, RawTable):
            return NotImplemented
        return self.column_names == other.column_names \
            and self.cells.shape == other.cells.shape \
            and bool(np.array_equal(self.cells, other.cells, equal_nan=True)) \
            and self.row_ids == other.row_ids \
            and self.nominal_values == other.nominal_values

    def column_index(self, name):
        try:
            return self.column_names.index(name)
        except ValueError:
            raise UnknownColumn(name) from None

    def column(self, name):
        return self.cells[:, self.column_index(name)]

    def missing_mask(self):
        return np.isnan(self.cells)

    def missing_per_column(self):
        return dict(zip(self.column_names,
                        self.missing_mask().sum(axis=0).tolist()))

    def take(self, rows):
        rows = np.asarray(rows, dtype=int)
        return RawTable(self.column_names,
                        self.cells[rows].reshape(len(rows), self.n_cols),
                        tuple(self.row_ids[i] for i in rows),
                        self.nominal_values)

    def with_column_names(self, names):
        names = tuple(names)
        dctNominal = {names[self.column_index(k)]: v
                      for k, v in self.nominal_values.items()}
        return RawTable(names, self.cells, self.row_ids, dctNominal)

    def to_frame(self):
        return pd.DataFrame(np.array(self.cells), columns=self.column_names,
                            index=pd.Index(self.row_ids, name="index"))


#_______________________________________________________________________DATASET
@dataclass(frozen=True, eq=False)
class Dataset:
    """
    Analysis ready feature matrix, never contains missing values

    Args:
        features (array): n x d matrix of floats
        row_ids (tuple): identifier per row
        labels (tuple): optional ClassLabel per row, never used for clustering
        feature_names (tuple): name per feature column
        normalized (bool): all features were min-max scaled to [0, 1]
    """
    features: np.ndarray
    row_ids: Tuple = ()
    labels: Optional[Tuple[ClassLabel, ...]] = None
    feature_names: Tuple[str, ...] = ()
    normalized: bool = False

    def __post_init__(self):
        features = np.array(self.features, dtype=float)
        if features.ndim == 1:
            features = features.reshape(-1, 1)
        if features.ndim != 2:
            raise DatasetError("features must be a two dimensional matrix")
        if np.isnan(features).any():
            raise MissingValues("features contain missing values")
        nCases, dVariables = features.shape
        rowIds = tuple(self.row_ids) if len(self.row_ids) > 0 \
            else tuple(range(nCases))
        names = tuple(self.feature_names) if len(self.feature_names) > 0 \
            else tuple("C_" + str(i + 1) for i in range(dVariables))
        if len(rowIds) != nCases:
            raise DatasetError("row_ids must have one entry per row")
        if len(names) != dVariables:
            raise DatasetError("feature_names must have one entry per column")
        labels = self.labels
        if labels is not None:
            labels = tuple(ClassLabel(x) for x in labels)
            if len(labels) != nCases:
                raise DatasetError("labels must have one entry per row")
        if self.normalized and nCases > 0 \
                and (features.min() < 0 or features.max() > 1):
            raise DatasetError("normalized features must lie in [0, 1]")
        features.flags.writeable = False
        object.__setattr__(self, "features", features)
        object.__setattr__(self, "row_ids", rowIds)
        object.__setattr__(self, "feature_names", names)
        object.__setattr__(self, "labels", labels)

    @property
    def n_rows(self):
        return self.features.shape[0]

    @property
    def n_features(self):
        return self.features.shape[1]

    def class_counts(self):
        """Number of rows per class label, empty if no labels are present"""
        if self.labels is None:
            return {}
        return {label.value: sum(1 for x in self.labels if x == label)
                for label in ClassLabel}

    def to_frame(self, withLabels=True):
        df = pd.DataFrame(np.array(self.features),
                          columns=self.feature_names,
                          index=pd.Index(self.row_ids, name="index"))
        if withLabels and self.labels is not None:
            df[WBC_LABEL_COLUMN] = [x.value for x in self.labels]
        return df

    def to_table(self):
        """RawTable of the features, class appended as nominal column {2,4}"""
        cells = np.array(self.features)
        names = self.feature_names
        dctNominal = {}
        if self.labels is not None:
            codes = {label: i for i, label in
                     enumerate((ClassLabel.BENIGN, ClassLabel.MALIGNANT))}
            classCol = np.array([codes[x] for x in self.labels], dtype=float)
            cells = np.column_stack([cells, classCol]) if self.n_rows > 0 \
                else np.empty((0, self.n_features + 1))
            names = names + (WBC_LABEL_COLUMN,)
            dctNominal[WBC_LABEL_COLUMN] = ("2", "4")
        return RawTable(names, cells, self.row_ids, dctNominal)


@dataclass(frozen=True)
class PreprocessReport:
    rows_before: int
    rows_after: int
    rows_dropped: int
    dropped_row_ids: Tuple = ()
    columns_dropped: Tuple[str, ...] = ()
    norm_params: Dict[str, Tuple[float, float]] = field(default_factory=dict)

    def __post_init__(self):
        if self.rows_before - self.rows_dropped != self.rows_after:
            raise DatasetError("rows_before - rows_dropped must equal "
                               "rows_after")

    def to_dict(self):
        return {"rows_before": self.rows_before,
                "rows_after": self.rows_after,
                "rows_dropped": self.rows_dropped,
                "dropped_row_ids": [_plain(x) for x in self.dropped_row_ids],
                "columns_dropped": list(self.columns_dropped),
                "norm_params": {k: {"min": v[0], "max": v[1]}
                                for k, v in self.norm_params.items()}}


def _plain(value):
    # numpy scalars and integral floats become plain python numbers
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if value.is_integer():
            return int(value)
    return value


def _read_text(input):
    if hasattr(input, "read"):
        input = input.read()
    if isinstance(input, str):
        return input
    return bytes(input).decode("utf-8-sig")


#___________________________________________________________________________CSV
_RE_FIELD_COUNT = re.compile(r"Expected (\d+) fields in line (\d+), saw (\d+)")


def _content_lines(text, delimiter):
    # physical numbers of the lines pandas does not skip as blank
    blank = " \t".replace(delimiter, "")
    return [i for i, line in enumerate(re.split(r"\r\n|\r|\n", text),
                                        start=1)
            if line.strip(blank)]


def parse_csv(input, config=None):
    """
    Reads a delimiter separated table of numbers

    Args:
        input (bytes / binary file): the table
        config (CsvConfig): header, delimiter and missing marker

    Returns:
        RawTable with one row per non blank data line
    """
    if config is None:
        config = CsvConfig()
    text = _read_text(input)
    lineNumbers = _content_lines(text, config.delimiter)
    if not lineNumbers:
        names = tuple(config.column_names or ())
        return RawTable(names, np.empty((0, len(names))))

    try:
        frame = pd.read_csv(io.StringIO(text), header=None,
                            sep=config.delimiter, dtype=str,
                            keep_default_na=False, skip_blank_lines=True)
    except pd.errors.ParserError as e:
        match = _RE_FIELD_COUNT.search(str(e))
        if match is None:
            raise DatasetError("unreadable table: " + str(e)) from None
        expected, line, found = (int(x) for x in match.groups())
        raise MalformedRow(line, expected, found) from None

    # lines shorter than the first one are padded with NaN
    short = frame.isna().to_numpy()
    frame = frame.fillna("").apply(lambda x: x.str.strip())

    names = None
    if config.header:
        names = frame.iloc[0].tolist()
        frame, short, lineNumbers = frame.iloc[1:], short[1:], lineNumbers[1:]

    keep = ~(frame == "").all(axis=1).to_numpy()
    frame, short = frame[keep], short[keep]
    lineNumbers = [n for n, k in zip(lineNumbers, keep) if k]
    if short.any():
        iRow = int(np.flatnonzero(short.any(axis=1))[0])
        raise MalformedRow(lineNumbers[iRow], short.shape[1],
                           int((~short[iRow]).sum()))

    nCols = frame.shape[1]
    if config.column_names is not None:
        if len(config.column_names) != nCols:
            raise ConfigError("column_names has " +
                              str(len(config.column_names)) + " entries, "
                              "table has " + str(nCols) + " columns")
        names = list(config.column_names)
    elif names is None:
        names = ["C_" + str(i + 1) for i in range(nCols)]

    if frame.empty:
        return RawTable(tuple(names), np.empty((0, len(names))))

    missing = (frame == config.missing_marker).to_numpy()
    numeric = frame.apply(lambda x: pd.to_numeric(x, errors="coerce"))
    cells = numeric.to_numpy(dtype=float)
    bad = ~missing & ~np.isfinite(cells)
    if bad.any():
        iRow, iCol = np.argwhere(bad)[0]
        raise NonNumericCell(lineNumbers[iRow], names[iCol],
                             frame.iat[iRow, iCol])
    cells[missing] = np.nan
    logger.debug("parsed %d rows with %d columns", cells.shape[0],
                 cells.shape[1])
    return RawTable(tuple(names), cells)


#__________________________________________________________________________ARFF
_RE_ATTRIBUTE_TYPE = re.compile(
    r"""^@attribute\s+(".*"|'.*'|[^{}%,\s]*)\s+([a-z]+)\b(.*)$""", re.I)
_ARFF_UNSUPPORTED_TYPES = ("string", "date", "relational")
_ARFF_QUOTES = "'\""


def _check_arff_subset(lines):
    # liac-arff accepts string attributes and sparse rows, both rejected here
    inData = False
    for lineNo, line in enumerate(lines, start=1):
        line = line.strip()
        if inData:
            if line.startswith("{"):
                raise ArffSyntax("sparse data rows are not supported",
                                 lineNo)
        elif line.lower().startswith("@data"):
            inData = True
        else:
            match = _RE_ATTRIBUTE_TYPE.match(line)
            if match and match.group(2).lower() in _ARFF_UNSUPPORTED_TYPES:
                raise UnsupportedAttributeType(
                    match.group(1).strip(_ARFF_QUOTES),
                    (match.group(2) + match.group(3)).strip())


def parse_arff(input):
    """
    Reads the numeric / nominal subset of the Attribute-Relation File Format

    Args:
        input (bytes / binary file): ARFF document

    Returns:
        RawTable, nominal cells hold the index of their declared value
    """
    text = _read_text(input).replace("\r\n", "\n")
    _check_arff_subset(text.split("\n"))
    # liac-arff strips leading blank lines, comments keep the numbering
    body = text.lstrip("\r\n ")
    body = "%\n" * text[:len(text) - len(body)].count("\n") + body
    try:
        document = arff.loads(body, encode_nominal=True)
    except arff.ArffException as e:
        line = getattr(e, "line", -1)
        raise ArffSyntax(str(e), line if line > 0 else None) from None

    names = []
    dctNominal = {}
    for name, attrType in document["attributes"]:
        names.append(name)
        if isinstance(attrType, (list, tuple)):
            dctNominal[name] = tuple(attrType)
    rows = document["data"]
    if not rows:
        return RawTable(tuple(names), np.empty((0, len(names))), (),
                        dctNominal)
    cells = np.array([[np.nan if x is None else x for x in row]
                      for row in rows], dtype=float)
    if np.isinf(cells).any():
        iRow, iCol = np.argwhere(np.isinf(cells))[0]
        raise ArffSyntax("infinite value in data row " + str(iRow + 1) +
                         ", attribute " + repr(names[iCol]))
    return RawTable(tuple(names), cells, (), dctNominal)


def write_arff(table, relation_name="data"):
    """
    Writes a RawTable as ARFF document

    Args:
        table (RawTable): table to be written
        relation_name (str): name of the @relation

    Returns:
        bytes of the document, missing cells written as ?
    """
    attributes = []
    declared = []
    for strCol in table.column_names:
        # the reader strips quote characters around attribute names
        if strCol == "" or strCol[0] in _ARFF_QUOTES \
                or strCol[-1] in _ARFF_QUOTES:
            raise ConfigError("column name " + repr(strCol) + " cannot be "
                              "written as ARFF attribute")
        values = table.nominal_values.get(strCol)
        declared.append(values)
        attributes.append((strCol, list(values) if values is not None
                           else "NUMERIC"))

    data = [[None if np.isnan(value) else
             (values[int(value)] if values is not None else float(value))
             for value, values in zip(row, declared)]
            for row in table.cells]
    try:
        text = arff.dumps({"relation": relation_name,
                           "attributes": attributes, "data": data})
    except arff.BadObject as e:
        raise ConfigError(str(e)) from None
    return (text + "\n").encode("utf-8")


def load_table(path, fmt=None, csv_config=None, schema="wbc"):
    """
    Reads a table from file

    Args:
        path (str / Path): file to be read
        fmt (str): 'csv' or 'arff', derived from the extension if None
        csv_config (CsvConfig): options for csv files
        schema (str): 'wbc' names a headerless 11 column csv after the
                      breast cancer attribute table, 'none' keeps C_i names

    Returns:
        RawTable
    """
    path = Path(path)
    if fmt is None:
        fmt = "arff" if path.suffix.lower() == ".arff" else "csv"
    if fmt not in ("csv", "arff"):
        raise ConfigError("format must be csv or arff, got " + repr(fmt))
    if csv_config is None:
        csv_config = CsvConfig()
    data = path.read_bytes()
    if fmt == "arff":
        table = parse_arff(data)
    else:
        table = parse_csv(data, csv_config)
        if schema == "wbc" and not csv_config.header \
                and csv_config.column_names is None \
                and table.n_cols == len(WBC_COLUMNS):
            table = table.with_column_names(WBC_COLUMNS)
    logger.info("read %s: %d rows, %d columns", path, table.n_rows,
                table.n_cols)
    return table


#_________________________________________________________________PREPROCESSING
def drop_missing_rows(table, id_column=None):
    """
    Deletes every row containing a missing cell, order is preserved

    Args:
        table (RawTable): table to be cleaned
        id_column (str): column whose values identify the dropped rows,
                         the positional row ids are used if None

    Returns:
        tuple of the cleaned RawTable and the list of dropped ids
    """
    mask = table.missing_mask().any(axis=1)
    keep = np.flatnonzero(~mask)
    dropped = np.flatnonzero(mask)
    if id_column is not None:
        ids = table.column(id_column)
        droppedIds = [table.row_ids[i] if np.isnan(ids[i]) else _plain(ids[i])
                      for i in dropped]
    else:
        droppedIds = [table.row_ids[i] for i in dropped]
    if len(dropped) > 0:
        logger.info("deleting %d rows with missing values", len(dropped))
    return table.take(keep), droppedIds


def _class_values(table, label_column):
    values = table.column(label_column)
    declared = table.nominal_values.get(label_column)
    result = []
    for value in values:
        if np.isnan(value):
            result.append(None)
            continue
        if declared is not None:
            text = declared[int(value)]
            try:
                value = float(text)
            except ValueError:
                raise InvalidClassValue(text) from None
        if value not in CLASS_CODES:
            raise InvalidClassValue(_plain(value))
        result.append(CLASS_CODES[int(value)])
    return result


def class_distribution(table, label_column):
    """Counts per class of a (possibly not yet cleaned) table"""
    values = _class_values(table, label_column)
    return {label.value: sum(1 for x in values if x == label)
            for label in ClassLabel}


def build_dataset(table, id_column=None, label_column=None, normalize=True):
    """
    Turns a clean table into a Dataset

    Args:
        table (RawTable): table without missing cells
        id_column (str): column of row identifiers, removed from features
        label_column (str): column of class codes 2 / 4, removed from
                            features
        normalize (bool): min-max normalize every feature column

    Returns:
        tuple of Dataset and PreprocessReport
    """
    lstDropped = [x for x in (id_column, label_column) if x is not None]
    for strCol in lstDropped:
        table.column_index(strCol)
    if table.missing_mask().any():
        raise MissingValues("table contains missing cells, drop them first")

    if id_column is not None:
        rowIds = tuple(_plain(x) for x in table.column(id_column))
    else:
        rowIds = table.row_ids
    labels = None
    if label_column is not None:
        labels = tuple(_class_values(table, label_column))

    lstCols = [x for x in table.column_names if x not in lstDropped]
    data = pd.DataFrame(np.array(table.cells),
                        columns=table.column_names)[lstCols]
    dctParams = {}
    if normalize and table.n_rows > 0:
        xtrans = min_max_normalization(data, withBackTransformation=True)
        data = xtrans["TransformedData"][lstCols]
        dctParams = {x: (xtrans["MinX"][x], xtrans["MaxX"][x])
                     for x in lstCols}

    dataset = Dataset(data.to_numpy(dtype=float).reshape(table.n_rows,
                                                         len(lstCols)),
                      rowIds, labels, tuple(lstCols), bool(normalize))
    report = PreprocessReport(table.n_rows, table.n_rows, 0, (),
                              tuple(lstDropped), dctParams)
    return dataset, report


def preprocess(table, id_column=None, label_column=None, normalize=True):
    """
    Missing row deletion followed by build_dataset

    Returns:
        tuple of Dataset and PreprocessReport counting the raw table
    """
    clean, droppedIds = drop_missing_rows(table, id_column)
    dataset, report = build_dataset(clean, id_column, label_column,
                                    normalize)
    report = PreprocessReport(table.n_rows, clean.n_rows, len(droppedIds),
                              tuple(droppedIds), report.columns_dropped,
                              report.norm_params)
    return dataset, report
