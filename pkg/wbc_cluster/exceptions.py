# -*- coding: utf-8 -*-
"""
Exception hierarchy of the wbc_cluster package.

Every error raised on purpose by the library derives from WbcClusterError,
grouped by the module that raises it.
"""


class WbcClusterError(Exception):
    """Base class of all wbc_cluster errors"""


class ConfigError(WbcClusterError, ValueError):
    """A parameter value is outside its valid range"""


#_______________________________________________________________________DATASET
class DatasetError(WbcClusterError):
    """Input table cannot be read or turned into a dataset"""


class MalformedRow(DatasetError):
    def __init__(self, line, expected, found):
        self.line = line
        self.expected = expected
        self.found = found
        super().__init__("line " + str(line) + ": expected " + str(expected)
                         + " fields, found " + str(found))


class NonNumericCell(DatasetError):
    def __init__(self, line, column, value):
        self.line = line
        self.column = column
        self.value = value
        super().__init__("line " + str(line) + ", column " + str(column)
                         + ": cannot parse " + repr(value) + " as a number")


class ArffSyntax(DatasetError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = "line " + str(line) + ": " + message
        super().__init__(message)


class UnsupportedAttributeType(DatasetError):
    def __init__(self, attribute, attribute_type):
        self.attribute = attribute
        self.attribute_type = attribute_type
        super().__init__("attribute " + repr(attribute) + " has unsupported "
                         "type " + repr(attribute_type))


class UnknownColumn(DatasetError):
    def __init__(self, column):
        self.column = column
        super().__init__("column " + repr(column) + " not contained in table")


class InvalidClassValue(DatasetError):
    def __init__(self, value):
        self.value = value
        super().__init__("class value " + repr(value) + " is not one of "
                         "2 (benign) or 4 (malignant)")


class MissingValues(DatasetError):
    """Table still contains missing cells"""


#_______________________________________________________________________METRICS
class MetricError(WbcClusterError):
    pass


class DimensionMismatch(MetricError):
    pass


class EmptyCandidateSet(MetricError):
    pass


#______________________________________________________________________TENDENCY
class TendencyError(WbcClusterError):
    pass


class SampleTooLarge(TendencyError):
    pass


#____________________________________________________________________CLUSTERING
class ClusteringError(WbcClusterError):
    pass


class TooFewPoints(ClusteringError):
    pass


class EmptyDataset(ClusteringError):
    pass


class MissingCenter(ClusteringError):
    pass


class InvalidMedoid(ClusteringError):
    pass


#____________________________________________________________________VALIDATION
class ValidationError(WbcClusterError):
    pass


class SingleCluster(ValidationError):
    pass


#____________________________________________________________________PROJECTION
class ProjectionError(WbcClusterError):
    pass


class InsufficientData(ProjectionError):
    pass


#________________________________________________________________________REPORT
class ReportError(WbcClusterError):
    pass


class NoLabels(ReportError):
    pass


class SchemaViolation(ReportError):
    pass
