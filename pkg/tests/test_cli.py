import json
import os

import yaml
from typer.testing import CliRunner

from wbc_cluster.cli import (EXIT_INPUT, EXIT_OK, EXIT_USAGE, PipelineConfig,
                             _load_config, app, main)
from wbc_cluster.dataset import WBC_COLUMNS, load_table, parse_arff

runner = CliRunner()

FAST = ["--trials", "5", "--restarts", "3"]
ARTIFACTS = ["scatter_kmeans", "scatter_pam", "silhouette_pam", "sweep",
             "boxplot_kmeans", "kmeans_grid"]


def run(capsys, *args):
    code = main([str(x) for x in args])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_analyze_writes_everything(tmp_path, wbc_like_file):
    out = tmp_path / "results"
    result = runner.invoke(app, ["analyze", str(wbc_like_file), "--out",
                                 str(out)] + FAST)
    assert result.exit_code == EXIT_OK
    assert "Best k: " in result.output
    names = set(os.listdir(out))
    assert {"report.json", "report.md"} <= names
    for stem in ARTIFACTS:
        assert stem + ".svg" in names
        assert stem + ".csv" in names
    document = json.loads((out / "report.json").read_text())
    assert document["dataset"]["rows_before"] == 60
    assert document["dataset"]["rows_after"] == 57
    assert document["config"]["trials"] == 5


def test_analyze_is_reproducible(tmp_path, wbc_like_file, capsys):
    outputs = []
    for name in ("first", "second"):
        code, out, _ = run(capsys, "analyze", wbc_like_file, "--out",
                           tmp_path / name, *FAST)
        assert code == EXIT_OK
        outputs.append(out.replace(str(tmp_path / name), ""))
    assert outputs[0] == outputs[1]
    for name in ["report.json", "report.md"] + \
            [s + ext for s in ARTIFACTS for ext in (".svg", ".csv")]:
        assert (tmp_path / "first" / name).read_bytes() == \
            (tmp_path / "second" / name).read_bytes(), name


def test_missing_input_file(tmp_path, capsys):
    missing = tmp_path / "missing.csv"
    code, _, err = run(capsys, "analyze", missing, "--out", tmp_path / "o")
    assert code == EXIT_INPUT
    assert "missing.csv" in err
    assert not (tmp_path / "o").exists()


def test_malformed_input(tmp_path, capsys):
    path = tmp_path / "bad.csv"
    path.write_bytes(b"1,2,3\n4,5\n")
    code, _, err = run(capsys, "inspect", path)
    assert code == EXIT_INPUT
    assert "Error" in err


def test_usage_errors(capsys):
    assert main(["kmeans"]) == EXIT_USAGE
    assert main(["no-such-command"]) == EXIT_USAGE
    capsys.readouterr()


def test_bad_metric(wbc_like_file, capsys):
    code, _, err = run(capsys, "pam", wbc_like_file, "--metric", "cosine")
    assert code == EXIT_USAGE
    assert "cosine" in err


def test_inspect_json(wbc_like_file, capsys):
    code, out, _ = run(capsys, "inspect", wbc_like_file, "--json")
    assert code == EXIT_OK
    document = json.loads(out)
    assert document["rows"] == 60
    assert document["columns"] == 11
    assert document["column_names"] == list(WBC_COLUMNS)
    assert document["missing"]["Bare Nuclei"] == 3
    assert document["rows_with_missing"] == 3
    assert sum(document["class_distribution"].values()) == 60


def test_tendency_output_is_stable(wbc_like_file, capsys):
    first = run(capsys, "tendency", wbc_like_file, "--trials", "10")
    second = run(capsys, "tendency", wbc_like_file, "--trials", "10")
    assert first[0] == EXIT_OK
    assert first[1] == second[1]
    assert first[1].startswith("Hopkins statistic: ")


def test_tendency_json(wbc_like_file, capsys):
    code, out, _ = run(capsys, "tendency", wbc_like_file, "--trials", "4",
                       "--m", "5", "--control", "--json")
    assert code == EXIT_OK
    document = json.loads(out)
    assert document["m"] == 5
    assert len(document["per_trial"]) == 4
    assert 0 <= document["control"]["h"] <= 1


def test_kmeans_pam_and_sweep_commands(tmp_path, wbc_like_file, capsys):
    code, out, _ = run(capsys, "kmeans", wbc_like_file, "--restarts", "3",
                       "--json", "--out", tmp_path)
    assert code == EXIT_OK
    assert sum(json.loads(out)["sizes"]) == 57
    assert (tmp_path / "scatter_kmeans.svg").exists()

    code, out, _ = run(capsys, "pam", wbc_like_file, "--json")
    assert code == EXIT_OK
    section = json.loads(out)
    assert len(section["medoid_row_ids"]) == 2
    assert -1 <= section["silhouette"] <= 1

    code, out, _ = run(capsys, "silhouette", wbc_like_file, "--json",
                       "--algorithm", "kmeans")
    assert code == EXIT_OK
    assert len(json.loads(out)["widths"]) == 57

    code, out, _ = run(capsys, "sweep", wbc_like_file, "--k-min", "2",
                       "--k-max", "4", "--json")
    assert code == EXIT_OK
    assert json.loads(out)["ks"] == [2, 3, 4]


def test_preprocess_to_csv_and_arff(tmp_path, wbc_like_file, capsys):
    csvPath = tmp_path / "clean.csv"
    code, out, _ = run(capsys, "preprocess", wbc_like_file, "--out", csvPath)
    assert code == EXIT_OK
    assert "60 -> 57" in out
    lines = csvPath.read_text().splitlines()
    assert len(lines) == 58
    header = lines[0].split(",")
    assert header[0] == "Sample code number"
    assert header[-1] == "Class"
    assert lines[1].split(",")[-1] in ("2", "4")

    arffPath = tmp_path / "clean.arff"
    code, _, _ = run(capsys, "preprocess", wbc_like_file, "--out", arffPath)
    assert code == EXIT_OK
    table = parse_arff(arffPath.read_bytes())
    assert table.n_rows == 57
    assert table.nominal_values["Class"] == ("2", "4")
    assert load_table(arffPath).n_rows == 57


def test_config_template_and_override(tmp_path, wbc_like_file, capsys):
    configPath = tmp_path / "config.yaml"
    code, _, _ = run(capsys, "config-template", "--output", configPath)
    assert code == EXIT_OK
    values = yaml.safe_load(configPath.read_text())
    assert values == PipelineConfig().to_dict()

    values.update({"k": 3, "trials": 5, "restarts": 3, "k_max": 4})
    configPath.write_text(yaml.safe_dump(values))
    code, out, _ = run(capsys, "analyze", wbc_like_file, "--out",
                       tmp_path / "results", "--config", configPath,
                       "--k", "2", "--json")
    assert code == EXIT_OK
    document = json.loads(out)
    assert document["config"]["k"] == 2
    assert document["config"]["trials"] == 5
    assert document["sweep"]["ks"] == [2, 3, 4]


def test_unknown_config_key(tmp_path, wbc_like_file, capsys):
    configPath = tmp_path / "config.yaml"
    configPath.write_text("clusters: 3\n")
    code, _, err = run(capsys, "analyze", wbc_like_file, "--config",
                       configPath, "--out", tmp_path / "o")
    assert code == EXIT_USAGE
    assert "clusters" in err


def test_load_config_precedence(tmp_path):
    configPath = tmp_path / "config.yaml"
    configPath.write_text("seed: 7\nk: 4\n")
    config = _load_config(configPath, k=None, seed=3)
    assert config.seed == 3
    assert config.k == 4
