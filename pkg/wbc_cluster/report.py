# -*- coding: utf-8 -*-
"""
Created on Tue Sep 22 13:30:58 2026

Analysis report: majority class naming of clusters, the cluster size
table and the JSON / Markdown serialization of all results.
"""

import json
import logging
import math
import os
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional

import jsonschema
import numpy as np

from . import __version__
from .dataset import ClassLabel
from .exceptions import ConfigError, NoLabels, SchemaViolation

logger = logging.getLogger(__name__)

SCHEMA_PATH = os.path.join(os.path.dirname(__file__), "report_schema.json")


class ReportFormat(str, Enum):
    JSON = "json"
    MARKDOWN = "markdown"


#________________________________________________________________CLUSTER NAMING
@dataclass(frozen=True)
class ClusterName:
    name: str
    majority_class: ClassLabel
    purity: float
    size: int

    def to_dict(self):
        return {"name": self.name,
                "majority_class": self.majority_class.value,
                "purity": self.purity, "size": self.size}


@dataclass(frozen=True)
class ClusterNaming:
    names: Dict[int, ClusterName] = field(default_factory=dict)

    def __getitem__(self, cluster):
        return self.names[cluster]

    def to_dict(self):
        return {str(k): v.to_dict() for k, v in sorted(self.names.items())}


def name_clusters(labels, classes):
    """
    Names every cluster after the class held by most of its members

    Args:
        labels (array): cluster id per point
        classes (sequence): ClassLabel per point

    Returns:
        ClusterNaming, ties go to Benign
    """
    if classes is None or len(classes) == 0:
        raise NoLabels("class labels are required to name clusters")
    labels = np.asarray(labels, dtype=int)
    if len(classes) != len(labels):
        raise ConfigError("classes must have one entry per point")
    classes = [ClassLabel(x) for x in classes]

    dctNames = {}
    for cluster in np.unique(labels):
        counts = Counter(classes[i] for i in np.flatnonzero(labels == cluster))
        size = sum(counts.values())
        nBenign = counts[ClassLabel.BENIGN]
        nMalignant = counts[ClassLabel.MALIGNANT]
        majority = ClassLabel.BENIGN if nBenign >= nMalignant \
            else ClassLabel.MALIGNANT
        dctNames[int(cluster)] = ClusterName(majority.value, majority,
                                             counts[majority] / size, size)
    return ClusterNaming(dctNames)


def label_agreement(labels, classes, naming):
    """Fraction of points whose class equals the name of their cluster"""
    labels = np.asarray(labels, dtype=int)
    if len(labels) == 0:
        return 0.0
    hits = sum(1 for cluster, label in zip(labels, classes)
               if naming[int(cluster)].majority_class == ClassLabel(label))
    return hits / len(labels)


def whole_percent(part, total):
    """Share in percent rounded half up to a whole number"""
    if total == 0:
        return 0
    return int(math.floor(100 * part / total + 0.5))


def size_table(labels, naming=None):
    """
    Cluster size table in the layout of the K-means result table

    Returns:
        list of dicts with cluster, name, size and percent
    """
    labels = np.asarray(labels, dtype=int)
    lstRows = []
    for cluster, size in enumerate(np.bincount(labels)):
        if size == 0:
            continue
        name = naming[cluster].name if naming is not None \
            else "Cluster " + str(cluster + 1)
        lstRows.append({"cluster": cluster, "name": name, "size": int(size),
                        "percent": whole_percent(size, len(labels))})
    return lstRows


#______________________________________________________________________SECTIONS
def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(x) for x in obj]
    if isinstance(obj, np.ndarray):
        return _jsonable(obj.tolist())
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return float(obj)
    return obj


def kmeans_section(partition, classes=None):
    naming = name_clusters(partition.labels, classes) if classes else None
    section = partition.to_dict()
    del section["medoid_indices"]
    section["table"] = size_table(partition.labels, naming)
    section["naming"] = naming.to_dict() if naming is not None else None
    section["agreement"] = label_agreement(partition.labels, classes,
                                           naming) if naming else None
    return section


def pam_section(result, silhouette_report=None, classes=None, row_ids=None):
    naming = name_clusters(result.labels, classes) if classes else None
    section = result.to_dict()
    section["medoid_row_ids"] = [row_ids[i] for i in result.medoid_indices] \
        if row_ids is not None else list(result.medoid_indices)
    section["table"] = size_table(result.labels, naming)
    section["naming"] = naming.to_dict() if naming is not None else None
    section["agreement"] = label_agreement(result.labels, classes,
                                           naming) if naming else None
    section["silhouette"] = silhouette_report.overall \
        if silhouette_report is not None else None
    return section


def hopkins_section(result, control=None):
    if result is None:
        return None
    section = result.to_dict()
    section["control"] = control.to_dict() if control is not None else None
    return section


def dataset_section(dataset, preprocess_report, source=None,
                    classes_before=None):
    distribution = None
    if dataset.labels is not None:
        distribution = {"before": classes_before
                        if classes_before is not None
                        else dataset.class_counts(),
                        "after": dataset.class_counts()}
    return {"source": None if source is None else str(source),
            "rows_before": preprocess_report.rows_before,
            "rows_after": preprocess_report.rows_after,
            "n_features": dataset.n_features,
            "feature_names": list(dataset.feature_names),
            "dropped_row_ids": list(preprocess_report.dropped_row_ids),
            "class_distribution": distribution}


@dataclass
class AnalysisReport:
    """
    Aggregate of every analysis step, sections are None when the step did
    not run
    """
    dataset: Dict[str, Any]
    preprocessing: Dict[str, Any]
    hopkins: Optional[Dict[str, Any]] = None
    kmeans: Optional[Dict[str, Any]] = None
    pam: Optional[Dict[str, Any]] = None
    silhouette: Optional[Dict[str, Any]] = None
    sweep: Optional[Dict[str, Any]] = None
    config: Dict[str, Any] = field(default_factory=dict)
    version: str = __version__

    def to_dict(self):
        return _jsonable({"dataset": self.dataset,
                          "preprocessing": self.preprocessing,
                          "hopkins": self.hopkins, "kmeans": self.kmeans,
                          "pam": self.pam, "silhouette": self.silhouette,
                          "sweep": self.sweep, "config": self.config,
                          "version": self.version})


#_________________________________________________________________SERIALIZATION
def load_schema():
    with open(SCHEMA_PATH, "r", encoding="utf-8") as f:
        return json.load(f)


def validate_report(document):
    """Raises SchemaViolation if document does not match the schema"""
    try:
        jsonschema.validate(document, load_schema())
    except jsonschema.ValidationError as e:
        raise SchemaViolation("report violates schema at " +
                              "/".join(str(x) for x in e.absolute_path) +
                              ": " + e.message) from None


def _fmt(value, digits=4):
    if value is None:
        return "n/a"
    return ("{:." + str(digits) + "f}").format(value)


def _markdown(document):
    lstLines = ["# Cluster analysis report", ""]
    ds = document["dataset"]
    lstLines += ["## Dataset", "",
                 "- Source: " + str(ds["source"]),
                 "- Instances before preprocessing: " + str(ds["rows_before"]),
                 "- Instances after preprocessing: " + str(ds["rows_after"]),
                 "- Features: " + str(ds["n_features"])]
    if ds["class_distribution"] is not None:
        for strKey in ("before", "after"):
            counts = ds["class_distribution"][strKey]
            total = sum(counts.values())
            lstLines.append("- Classes " + strKey + " preprocessing: " +
                            ", ".join(k + " " + str(v) + " (" +
                                      str(whole_percent(v, total)) + "%)"
                                      for k, v in counts.items()))
    pre = document["preprocessing"]
    lstLines += ["", "## Preprocessing", "",
                 "- Rows dropped for missing values: " +
                 str(pre["rows_dropped"]),
                 "- Columns removed from features: " +
                 (", ".join(pre["columns_dropped"]) or "none"),
                 "- Min-max normalized: " +
                 ("yes" if pre["norm_params"] else "no")]

    hop = document["hopkins"]
    lstLines += ["", "## Clustering tendency", ""]
    if hop is None:
        lstLines.append("Not computed.")
    else:
        lstLines.append("- Hopkins statistic: " + _fmt(hop["h"], 7) +
                        " (sd " + _fmt(hop["std"]) + ", m = " +
                        str(hop["m"]) + ", " + str(hop["trials"]) +
                        " trials)")
        if hop.get("control") is not None:
            lstLines.append("- Uniform reference data: " +
                            _fmt(hop["control"]["h"], 7))

    for strKey, strTitle in (("kmeans", "K-means"), ("pam", "PAM")):
        section = document[strKey]
        lstLines += ["", "## " + strTitle, ""]
        if section is None:
            lstLines.append("Not computed.")
            continue
        lstLines += ["| Cluster | Instances | Share |",
                     "|---|---:|---:|"]
        for row in section["table"]:
            lstLines.append("| " + row["name"] + " | " + str(row["size"]) +
                            " | " + str(row["percent"]) + "% |")
        lstLines.append("")
        if strKey == "kmeans":
            lstLines.append("- Within cluster sum of squares: " +
                            _fmt(section["objective"]))
        else:
            lstLines.append("- Total distance to medoids: " +
                            _fmt(section["cost"]))
            lstLines.append("- Medoids (row ids): " +
                            ", ".join(str(x) for x in
                                      section["medoid_row_ids"]))
            lstLines.append("- Average silhouette width: " +
                            _fmt(section["silhouette"]))
        if section["agreement"] is not None:
            lstLines.append("- Agreement with class labels: " +
                            _fmt(section["agreement"]))

    sil = document["silhouette"]
    lstLines += ["", "## Silhouette", ""]
    if sil is None:
        lstLines.append("Not computed.")
    else:
        lstLines.append("- Average silhouette width: " + _fmt(sil["overall"]))
        for strCluster, value in sil["cluster_means"].items():
            lstLines.append("- Cluster " + strCluster + ": " + _fmt(value) +
                            " (" + str(sil["cluster_sizes"][strCluster]) +
                            " points)")

    sweep = document["sweep"]
    lstLines += ["", "## Sweep over k", ""]
    if sweep is None:
        lstLines.append("Not computed.")
    else:
        lstLines += ["| k | Average silhouette | Objective |",
                     "|---:|---:|---:|"]
        for k, sil, obj in zip(sweep["ks"], sweep["avg_silhouette"],
                               sweep["wss"]):
            lstLines.append("| " + str(k) + " | " + _fmt(sil) + " | " +
                            _fmt(obj) + " |")
        lstLines += ["", "Best k: " + str(sweep["best_k"])]

    lstLines += ["", "---", "", "wbc_cluster " + document["version"], ""]
    return "\n".join(lstLines)


def emit_report(report, fmt=ReportFormat.JSON):
    """
    Serializes the report

    Args:
        report (AnalysisReport): results to be written
        fmt (ReportFormat): JSON (canonical, schema validated) or MARKDOWN

    Returns:
        bytes of the document
    """
    fmt = ReportFormat(fmt)
    document = report.to_dict()
    validate_report(document)
    if fmt == ReportFormat.JSON:
        text = json.dumps(document, sort_keys=True, indent=2,
                          allow_nan=False) + "\n"
    else:
        text = _markdown(document)
    return text.encode("utf-8")
