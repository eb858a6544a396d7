import json

import numpy as np
import pytest

from wbc_cluster import __version__
from wbc_cluster.dataset import ClassLabel, RawTable, preprocess
from wbc_cluster.exceptions import ConfigError, NoLabels, SchemaViolation
from wbc_cluster.kmeans import kmeans
from wbc_cluster.metrics import pairwise
from wbc_cluster.pam import pam
from wbc_cluster.report import (AnalysisReport, ReportFormat, dataset_section,
                                emit_report, hopkins_section, kmeans_section,
                                label_agreement, name_clusters, pam_section,
                                size_table, validate_report, whole_percent)
from wbc_cluster.tendency import hopkins
from wbc_cluster.validation import silhouette, sweep_k

B = ClassLabel.BENIGN
M = ClassLabel.MALIGNANT


def test_majority_naming_and_purity():
    naming = name_clusters([0] * 10 + [1] * 4, [B] * 9 + [M] + [M] * 4)
    assert naming[0].name == "Benign"
    assert naming[0].purity == 0.9
    assert naming[0].size == 10
    assert naming[1].majority_class == M
    assert naming[1].purity == 1.


def test_naming_tie_goes_to_benign():
    naming = name_clusters([0, 0, 0, 0], [B, M, M, B])
    assert naming[0].majority_class == B
    assert naming[0].purity == 0.5


def test_naming_accepts_label_values():
    naming = name_clusters([0, 1], ["Malignant", "Benign"])
    assert naming[0].majority_class == M
    assert naming.to_dict()["1"]["majority_class"] == "Benign"


def test_naming_errors():
    with pytest.raises(NoLabels):
        name_clusters([0, 1], None)
    with pytest.raises(NoLabels):
        name_clusters([0, 1], [])
    with pytest.raises(ConfigError):
        name_clusters([0, 1], [B])


def test_label_agreement():
    labels = [0, 0, 0, 1, 1]
    classes = [B, B, M, M, M]
    naming = name_clusters(labels, classes)
    assert label_agreement(labels, classes, naming) == 0.8


@pytest.mark.parametrize("part,total,expected", [
    (444, 683, 65), (239, 683, 35), (1, 8, 13), (1, 3, 33), (0, 5, 0),
    (3, 0, 0)])
def test_whole_percent(part, total, expected):
    assert whole_percent(part, total) == expected


def test_size_table():
    labels = [0, 1, 1, 1, 0, 1, 1, 1]
    rows = size_table(labels)
    assert rows == [{"cluster": 0, "name": "Cluster 1", "size": 2,
                     "percent": 25},
                    {"cluster": 1, "name": "Cluster 2", "size": 6,
                     "percent": 75}]
    naming = name_clusters(labels, [M, B, B, B, M, B, B, M])
    assert [r["name"] for r in size_table(labels, naming)] == \
        ["Malignant", "Benign"]


@pytest.fixture
def clean():
    cells = np.array([[1., 1., 1., 2.], [2., 1., 2., 2.], [3., 2., 1., 2.],
                      [4., 9., 8., 4.], [5., 8., 9., 4.], [6., 9., 9., 4.],
                      [7., np.nan, 2., 2.]])
    table = RawTable(("id", "a", "b", "Class"), cells)
    return preprocess(table, "id", "Class")


def empty_report(clean):
    dataset, prep = clean
    return AnalysisReport(dataset_section(dataset, prep, "toy.csv"),
                          prep.to_dict())


def full_report(clean):
    dataset, prep = clean
    classes = list(dataset.labels)
    dist = pairwise(dataset)
    partition = kmeans(dataset, k=2, restarts=3)
    medoids = pam(dist, k=2)
    report = silhouette(dist, medoids.labels)
    sweep = sweep_k(dataset, [2, 3], dist=dist)
    return AnalysisReport(
        dataset_section(dataset, prep, "toy.csv"), prep.to_dict(),
        hopkins=hopkins_section(hopkins(dataset, trials=3)),
        kmeans=kmeans_section(partition, classes),
        pam=pam_section(medoids, report, classes, dataset.row_ids),
        silhouette=report.to_dict(), sweep=sweep.to_dict(),
        config={"k": 2, "seed": 0})


def test_empty_analysis_validates(clean):
    document = empty_report(clean).to_dict()
    validate_report(document)
    assert document["hopkins"] is None
    assert document["sweep"] is None
    assert document["dataset"]["rows_before"] == 7
    assert document["dataset"]["dropped_row_ids"] == [7]
    assert document["version"] == __version__


def test_full_report_sections(clean):
    document = full_report(clean).to_dict()
    validate_report(document)
    assert "medoid_indices" not in document["kmeans"]
    assert document["kmeans"]["agreement"] == 1.
    assert sorted(r["name"] for r in document["kmeans"]["table"]) == \
        ["Benign", "Malignant"]
    assert set(document["pam"]["medoid_row_ids"]) <= {1, 2, 3, 4, 5, 6}
    assert document["dataset"]["class_distribution"]["after"] == \
        {"Benign": 3, "Malignant": 3}


def test_json_is_canonical(clean):
    text = emit_report(full_report(clean), ReportFormat.JSON)
    assert text.endswith(b"\n")
    reserialized = json.dumps(json.loads(text), sort_keys=True, indent=2,
                              allow_nan=False) + "\n"
    assert reserialized.encode("utf-8") == text
    assert emit_report(full_report(clean)) == text


def test_schema_violation(clean):
    document = empty_report(clean).to_dict()
    document["dataset"]["rows_after"] = -1
    with pytest.raises(SchemaViolation):
        validate_report(document)
    del document["sweep"]
    with pytest.raises(SchemaViolation):
        validate_report(document)


def test_markdown(clean):
    text = emit_report(full_report(clean), "markdown").decode("utf-8")
    assert text.startswith("# Cluster analysis report")
    assert "- Instances before preprocessing: 7" in text
    assert "| Benign | 3 | 50% |" in text
    assert "Best k: " in text
    empty = emit_report(empty_report(clean), ReportFormat.MARKDOWN).decode()
    assert empty.count("Not computed.") == 5
