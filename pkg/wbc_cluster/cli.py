# -*- coding: utf-8 -*-
"""
Created on Mon Sep 28 14:20:11 2026

Command line driver. Every subcommand reads a CSV / ARFF table, runs its
part of the analysis and prints a summary, ``analyze`` runs the complete
pipeline and writes the report and all figures into an output directory.

Exit codes: 0 success, 1 usage error, 2 input error, 3 analysis error.
"""

import json
import logging
from contextlib import contextmanager
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Optional

import pandas as pd
import typer
import yaml

try:  # newer typer releases vendor their own copy of click
    from typer import _click as click
except ImportError:
    import click

from . import __version__
from .dataset import (WBC_ID_COLUMN, WBC_LABEL_COLUMN, ClassLabel, CsvConfig,
                      class_distribution, load_table, preprocess, write_arff)
from .exceptions import ConfigError, DatasetError, WbcClusterError
from .kmeans import Init, KMeansConfig, kmeans
from .metrics import Metric, pairwise
from .pam import PamConfig, pam
from .plots import (emit_feature_boxplot_svg, emit_kgrid_svg, emit_scatter_svg,
                    emit_silhouette_svg, emit_sweep_svg)
from .projection import pca_2d
from .report import (AnalysisReport, ReportFormat, _jsonable, dataset_section,
                     emit_report, hopkins_section, kmeans_section,
                     pam_section)
from .tendency import HopkinsConfig, hopkins, hopkins_control
from .validation import Algorithm, silhouette, sweep_k

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_ANALYSIS = 3

app = typer.Typer(
    name="wbc-cluster",
    help="Cluster analysis of the Wisconsin breast cancer data",
    add_completion=False,
    no_args_is_help=True,
)


#_________________________________________________________________CONFIGURATION
@dataclass(frozen=True)
class PipelineConfig:
    """
    Every parameter of a complete analysis, echoed into the report
    """
    input_format: Optional[str] = None
    schema: str = "wbc"
    header: bool = False
    delimiter: str = ","
    missing_marker: str = "?"
    id_column: Optional[str] = None
    label_column: Optional[str] = None
    normalize: bool = True
    metric: str = Metric.EUCLIDEAN.value
    seed: int = 0
    threads: int = 1
    k: int = 2
    init: str = Init.KMEANS_PP.value
    restarts: int = 25
    max_iter: int = 100
    tol: float = 1e-9
    max_swap_iters: int = 200
    hopkins_m: Optional[int] = None
    trials: int = 30
    power: int = 1
    control: bool = True
    k_min: int = 2
    k_max: int = 10
    sweep_algorithm: str = Algorithm.KMEANS.value

    def __post_init__(self):
        object.__setattr__(self, "metric", Metric.parse(self.metric).value)
        try:
            object.__setattr__(self, "init", Init(self.init).value)
            object.__setattr__(self, "sweep_algorithm",
                               Algorithm(self.sweep_algorithm).value)
        except ValueError as e:
            raise ConfigError(str(e)) from None
        if self.input_format not in (None, "csv", "arff"):
            raise ConfigError("format must be csv or arff, got " +
                              repr(self.input_format))
        if self.schema not in ("wbc", "none"):
            raise ConfigError("schema must be wbc or none")
        if self.threads < 1:
            raise ConfigError("threads must be at least 1")
        if not 2 <= self.k_min <= self.k_max:
            raise ConfigError("k range needs 2 <= k_min <= k_max")
        # parameter checks of the algorithm configs
        self.csv_config()
        self.kmeans_config()
        self.pam_config()
        self.hopkins_config()

    @classmethod
    def from_dict(cls, dct):
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(dct) - known)
        if unknown:
            raise ConfigError("unknown configuration keys: " +
                              ", ".join(unknown))
        return cls(**dct)

    def to_dict(self):
        return asdict(self)

    def csv_config(self):
        return CsvConfig(self.header, self.delimiter, self.missing_marker)

    def kmeans_config(self):
        return KMeansConfig(self.k, self.init, self.max_iter, self.restarts,
                            self.tol, self.seed)

    def pam_config(self):
        return PamConfig(self.k, self.max_swap_iters, self.metric)

    def hopkins_config(self):
        return HopkinsConfig(self.hopkins_m, self.trials, self.seed,
                             self.power)


def _load_config(config_file, **overrides):
    """
    YAML file values as defaults, explicitly given flags (not None) win
    """
    dctConfig = {}
    if config_file is not None:
        with open(config_file, "r", encoding="utf-8") as f:
            try:
                loaded = yaml.safe_load(f)
            except yaml.YAMLError as e:
                raise ConfigError("cannot parse " + str(config_file) + ": " +
                                  str(e)) from None
        if loaded is None:
            loaded = {}
        if not isinstance(loaded, dict):
            raise ConfigError(str(config_file) + " must contain a mapping")
        dctConfig.update(loaded)
        logger.info("loaded configuration from %s", config_file)
    dctConfig.update({k: v for k, v in overrides.items() if v is not None})
    return PipelineConfig.from_dict(dctConfig)


#_______________________________________________________________________HELPERS
def _setup_logging(verbose):
    logging.basicConfig(level=logging.DEBUG if verbose else logging.INFO,
                        format="%(levelname)s %(name)s: %(message)s",
                        force=True)


@contextmanager
def _exit_codes():
    try:
        yield
    except ConfigError as e:
        typer.echo("Error: " + str(e), err=True)
        raise typer.Exit(EXIT_USAGE)
    except (DatasetError, OSError) as e:
        typer.echo("Error: " + str(e), err=True)
        raise typer.Exit(EXIT_INPUT)
    except WbcClusterError as e:
        typer.echo("Error: " + type(e).__name__ + ": " + str(e), err=True)
        raise typer.Exit(EXIT_ANALYSIS)


def _resolve_columns(table, config):
    """Id and label column, the WBC names are used when present"""
    idColumn = config.id_column
    labelColumn = config.label_column
    if config.schema == "wbc":
        if idColumn is None and WBC_ID_COLUMN in table.column_names:
            idColumn = WBC_ID_COLUMN
        if labelColumn is None and WBC_LABEL_COLUMN in table.column_names:
            labelColumn = WBC_LABEL_COLUMN
    return idColumn, labelColumn


def _load(input, config):
    table = load_table(input, config.input_format, config.csv_config(),
                       config.schema)
    idColumn, labelColumn = _resolve_columns(table, config)
    dataset, report = preprocess(table, idColumn, labelColumn,
                                 config.normalize)
    return table, labelColumn, dataset, report


def _classes(dataset):
    return list(dataset.labels) if dataset.labels is not None else None


def _dump(document):
    return json.dumps(_jsonable(document), sort_keys=True, indent=2,
                      allow_nan=False)


def _echo_table(rows):
    for row in rows:
        typer.echo("  " + row["name"] + ": " + str(row["size"]) + " (" +
                   str(row["percent"]) + "%)")


def _out_dir(out):
    out = Path(out)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _sweep_range(config, nCases):
    kMax = min(config.k_max, nCases - 1)
    if kMax < config.k_min:
        raise ConfigError("no k in [" + str(config.k_min) + ", " +
                          str(config.k_max) + "] fits " + str(nCases) +
                          " points")
    return range(config.k_min, kMax + 1)


def _write_dataset(dataset, path, idColumn):
    path = Path(path)
    if path.suffix.lower() == ".arff":
        path.write_bytes(write_arff(dataset.to_table(), path.stem))
        return
    df = pd.DataFrame(dataset.features, columns=list(dataset.feature_names))
    df.insert(0, idColumn or "row_id", list(dataset.row_ids))
    if dataset.labels is not None:
        codes = {ClassLabel.BENIGN: 2, ClassLabel.MALIGNANT: 4}
        df[WBC_LABEL_COLUMN] = [codes[x] for x in dataset.labels]
    path.write_bytes(df.to_csv(index=False, float_format="%.17g",
                               lineterminator="\n").encode("utf-8"))


#______________________________________________________________________PIPELINE
def run_pipeline(input, out, config=None):
    """
    preprocess, hopkins, kmeans, pam, silhouette and sweep, followed by the
    report and all figures written into out

    Args:
        input (str / Path): CSV or ARFF file
        out (str / Path): output directory, created if missing
        config (PipelineConfig): parameters, defaults if None

    Returns:
        AnalysisReport
    """
    if config is None:
        config = PipelineConfig()
    table, labelColumn, dataset, prep = _load(input, config)
    out = _out_dir(out)
    classesBefore = class_distribution(table, labelColumn) \
        if labelColumn is not None else None
    classes = _classes(dataset)
    metric = Metric.parse(config.metric)

    hopkinsConfig = config.hopkins_config()
    tendency = hopkins(dataset, **asdict(hopkinsConfig))
    control = hopkins_control(dataset, **asdict(hopkinsConfig)) \
        if config.control else None

    partition = kmeans(dataset, config.kmeans_config(), config.threads)
    dist = pairwise(dataset, metric, config.threads)
    medoids = pam(dist, config.pam_config())
    silReport = silhouette(dist, medoids.labels)
    algorithm = Algorithm(config.sweep_algorithm)
    baseConfig = config.kmeans_config() if algorithm == Algorithm.KMEANS \
        else config.pam_config()
    sweep = sweep_k(dataset, _sweep_range(config, dataset.n_rows), algorithm,
                    baseConfig, config.seed, metric, dist, config.threads)

    report = AnalysisReport(
        dataset=dataset_section(dataset, prep, input, classesBefore),
        preprocessing=prep.to_dict(),
        hopkins=hopkins_section(tendency, control),
        kmeans=kmeans_section(partition, classes),
        pam=pam_section(medoids, silReport, classes, dataset.row_ids),
        silhouette=silReport.to_dict(),
        sweep=sweep.to_dict(),
        config=config.to_dict(),
        version=__version__)
    (out / "report.json").write_bytes(emit_report(report, ReportFormat.JSON))
    (out / "report.md").write_bytes(emit_report(report,
                                                ReportFormat.MARKDOWN))

    proj = pca_2d(dataset)
    emit_scatter_svg(proj, partition.labels,
                     proj.transform(partition.centroids),
                     "K-means, k = " + str(partition.k)
                     ).write(out, "scatter_kmeans")
    emit_scatter_svg(proj, medoids.labels,
                     proj.coords[list(medoids.medoid_indices)],
                     "PAM, k = " + str(medoids.k)).write(out, "scatter_pam")
    emit_silhouette_svg(silReport, "Silhouette plot of PAM"
                        ).write(out, "silhouette_pam")
    emit_sweep_svg(sweep).write(out, "sweep")
    emit_feature_boxplot_svg(dataset, partition.labels,
                             title="Features by K-means cluster"
                             ).write(out, "boxplot_kmeans")
    emit_kgrid_svg(proj, sweep.partitions,
                   ("K-means" if algorithm == Algorithm.KMEANS else "PAM") +
                   " for different k").write(out, "kmeans_grid")
    logger.info("analysis written to %s", out)
    return report


#______________________________________________________________________COMMANDS
def _format_option():
    return typer.Option(None, "--format", help="Input format: csv or arff, "
                        "derived from the file extension if omitted")


def _schema_option():
    return typer.Option(None, "--schema", help="wbc names a headerless 11 "
                        "column csv after the breast cancer attributes, none "
                        "keeps C_i names")


def _id_option():
    return typer.Option(None, "--id-column", help="Column of row identifiers")


def _label_option():
    return typer.Option(None, "--label-column",
                        help="Column of class codes 2 / 4")


def _normalize_option():
    return typer.Option(None, "--normalize/--no-normalize",
                        help="Min-max normalize the features (default on)")


def _metric_option():
    return typer.Option(None, "--metric",
                        help="euclidean, sqeuclidean or manhattan")


def _seed_option():
    return typer.Option(None, "--seed", help="Base seed of all random draws")


def _k_option():
    return typer.Option(None, "--k", help="Number of clusters")


def _threads_option():
    return typer.Option(None, "--threads", help="Worker threads, never "
                        "changes results")


def _json_option():
    return typer.Option(False, "--json", help="Print JSON instead of text")


def _out_option(text="Directory for figures and CSV plot data"):
    return typer.Option(None, "--out", "-o", help=text)


def _verbose_option():
    return typer.Option(False, "--verbose", "-v",
                        help="Enable debug logging")


@app.command()
def inspect(
    input: Path = typer.Argument(..., help="CSV or ARFF file"),
    input_format: Optional[str] = _format_option(),
    schema: Optional[str] = _schema_option(),
    id_column: Optional[str] = _id_option(),
    label_column: Optional[str] = _label_option(),
    as_json: bool = _json_option(),
    verbose: bool = _verbose_option(),
):
    """Shape, missing cells per column and class distribution"""
    _setup_logging(verbose)
    with _exit_codes():
        config = _load_config(None, input_format=input_format, schema=schema,
                              id_column=id_column, label_column=label_column)
        table = load_table(input, config.input_format, config.csv_config(),
                           config.schema)
        _, labelColumn = _resolve_columns(table, config)
        missing = {k: int(v) for k, v in table.missing_per_column().items()}
        distribution = class_distribution(table, labelColumn) \
            if labelColumn is not None else None
        document = {"rows": table.n_rows, "columns": table.n_cols,
                    "column_names": list(table.column_names),
                    "missing": missing,
                    "rows_with_missing":
                        int(table.missing_mask().any(axis=1).sum()),
                    "class_distribution": distribution}
        if as_json:
            typer.echo(_dump(document))
            return
        typer.echo(str(input) + ": " + str(table.n_rows) + " rows, " +
                   str(table.n_cols) + " columns")
        typer.echo("Rows with missing values: " +
                   str(document["rows_with_missing"]))
        for strCol, count in missing.items():
            typer.echo("  " + strCol + ": " + str(count) + " missing")
        if distribution is not None:
            typer.echo("Classes: " + ", ".join(
                k + " " + str(v) for k, v in distribution.items()))


@app.command("preprocess")
def preprocess_command(
    input: Path = typer.Argument(..., help="CSV or ARFF file"),
    out: Path = typer.Option(..., "--out", "-o", help="Cleaned dataset, "
                             "ARFF if the name ends in .arff, CSV otherwise"),
    input_format: Optional[str] = _format_option(),
    schema: Optional[str] = _schema_option(),
    id_column: Optional[str] = _id_option(),
    label_column: Optional[str] = _label_option(),
    normalize: Optional[bool] = _normalize_option(),
    as_json: bool = _json_option(),
    verbose: bool = _verbose_option(),
):
    """Drops rows with missing values and normalizes the features"""
    _setup_logging(verbose)
    with _exit_codes():
        config = _load_config(None, input_format=input_format, schema=schema,
                              id_column=id_column, label_column=label_column,
                              normalize=normalize)
        table, _, dataset, report = _load(input, config)
        idColumn, _ = _resolve_columns(table, config)
        _write_dataset(dataset, out, idColumn)
        if as_json:
            typer.echo(_dump(report.to_dict()))
            return
        typer.echo("Rows: " + str(report.rows_before) + " -> " +
                   str(report.rows_after) + " (" + str(report.rows_dropped) +
                   " dropped)")
        typer.echo("Features: " + str(dataset.n_features))
        typer.echo("Written to " + str(out))


@app.command()
def tendency(
    input: Path = typer.Argument(..., help="CSV or ARFF file"),
    m: Optional[int] = typer.Option(None, "--m", help="Sample size per "
                                    "trial, floor(0.1 n) if omitted"),
    trials: Optional[int] = typer.Option(None, "--trials",
                                         help="Number of trials"),
    power: Optional[int] = typer.Option(None, "--power", help="Distance "
                                        "exponent, 1 or the dimension"),
    control: bool = typer.Option(False, "--control", help="Also report H "
                                 "of uniform data of the same shape"),
    input_format: Optional[str] = _format_option(),
    schema: Optional[str] = _schema_option(),
    normalize: Optional[bool] = _normalize_option(),
    seed: Optional[int] = _seed_option(),
    as_json: bool = _json_option(),
    verbose: bool = _verbose_option(),
):
    """Hopkins statistic of clustering tendency"""
    _setup_logging(verbose)
    with _exit_codes():
        config = _load_config(None, input_format=input_format, schema=schema,
                              normalize=normalize, seed=seed, hopkins_m=m,
                              trials=trials, power=power)
        _, _, dataset, _ = _load(input, config)
        hopkinsConfig = config.hopkins_config()
        result = hopkins(dataset, **asdict(hopkinsConfig))
        reference = hopkins_control(dataset, **asdict(hopkinsConfig)) \
            if control else None
        if as_json:
            typer.echo(_dump(hopkins_section(result, reference)))
            return
        typer.echo("Hopkins statistic: " + format(result.h, ".7f"))
        typer.echo("  sd " + format(result.std, ".7f") + ", m = " +
                   str(result.m) + ", " + str(result.trials) + " trials, "
                   "seed " + str(result.seed))
        if reference is not None:
            typer.echo("Uniform reference: " + format(reference.h, ".7f"))


@app.command("kmeans")
def kmeans_command(
    input: Path = typer.Argument(..., help="CSV or ARFF file"),
    k: Optional[int] = _k_option(),
    restarts: Optional[int] = typer.Option(None, "--restarts",
                                           help="Independent restarts"),
    init: Optional[str] = typer.Option(None, "--init",
                                       help="kmeans++ or random"),
    max_iter: Optional[int] = typer.Option(None, "--max-iter",
                                           help="Iterations per restart"),
    input_format: Optional[str] = _format_option(),
    schema: Optional[str] = _schema_option(),
    normalize: Optional[bool] = _normalize_option(),
    seed: Optional[int] = _seed_option(),
    threads: Optional[int] = _threads_option(),
    out: Optional[Path] = _out_option(),
    as_json: bool = _json_option(),
    verbose: bool = _verbose_option(),
):
    """K-means clustering, best of several restarts"""
    _setup_logging(verbose)
    with _exit_codes():
        config = _load_config(None, input_format=input_format, schema=schema,
                              normalize=normalize, seed=seed, k=k,
                              restarts=restarts, init=init, max_iter=max_iter,
                              threads=threads)
        _, _, dataset, _ = _load(input, config)
        partition = kmeans(dataset, config.kmeans_config(), config.threads)
        section = kmeans_section(partition, _classes(dataset))
        if out is not None:
            proj = pca_2d(dataset)
            emit_scatter_svg(proj, partition.labels,
                             proj.transform(partition.centroids),
                             "K-means, k = " + str(partition.k)
                             ).write(_out_dir(out), "scatter_kmeans")
        if as_json:
            typer.echo(_dump(section))
            return
        typer.echo("K-means k = " + str(partition.k) + ": WSS " +
                   format(partition.objective, ".6f") + " after " +
                   str(partition.iterations) + " iterations")
        _echo_table(section["table"])


@app.command("pam")
def pam_command(
    input: Path = typer.Argument(..., help="CSV or ARFF file"),
    k: Optional[int] = _k_option(),
    max_swap_iters: Optional[int] = typer.Option(None, "--max-swaps",
                                                 help="Upper bound on swaps"),
    input_format: Optional[str] = _format_option(),
    schema: Optional[str] = _schema_option(),
    normalize: Optional[bool] = _normalize_option(),
    metric: Optional[str] = _metric_option(),
    threads: Optional[int] = _threads_option(),
    out: Optional[Path] = _out_option(),
    as_json: bool = _json_option(),
    verbose: bool = _verbose_option(),
):
    """Partitioning Around Medoids"""
    _setup_logging(verbose)
    with _exit_codes():
        config = _load_config(None, input_format=input_format, schema=schema,
                              normalize=normalize, metric=metric, k=k,
                              max_swap_iters=max_swap_iters, threads=threads)
        _, _, dataset, _ = _load(input, config)
        dist = pairwise(dataset, config.metric, config.threads)
        result = pam(dist, config.pam_config())
        silReport = silhouette(dist, result.labels) if result.k > 1 else None
        section = pam_section(result, silReport, _classes(dataset),
                              dataset.row_ids)
        if out is not None:
            proj = pca_2d(dataset)
            emit_scatter_svg(proj, result.labels,
                             proj.coords[list(result.medoid_indices)],
                             "PAM, k = " + str(result.k)
                             ).write(_out_dir(out), "scatter_pam")
        if as_json:
            typer.echo(_dump(section))
            return
        typer.echo("PAM k = " + str(result.k) + ": cost " +
                   format(result.cost, ".6f") + " after " +
                   str(result.swaps_performed) + " swaps")
        typer.echo("Medoids (row ids): " +
                   ", ".join(str(x) for x in section["medoid_row_ids"]))
        _echo_table(section["table"])


@app.command("silhouette")
def silhouette_command(
    input: Path = typer.Argument(..., help="CSV or ARFF file"),
    algorithm: str = typer.Option("pam", "--algorithm",
                                  help="kmeans or pam"),
    k: Optional[int] = _k_option(),
    input_format: Optional[str] = _format_option(),
    schema: Optional[str] = _schema_option(),
    normalize: Optional[bool] = _normalize_option(),
    metric: Optional[str] = _metric_option(),
    seed: Optional[int] = _seed_option(),
    threads: Optional[int] = _threads_option(),
    out: Optional[Path] = _out_option(),
    as_json: bool = _json_option(),
    verbose: bool = _verbose_option(),
):
    """Silhouette widths of a K-means or PAM partition"""
    _setup_logging(verbose)
    with _exit_codes():
        config = _load_config(None, input_format=input_format, schema=schema,
                              normalize=normalize, metric=metric, seed=seed,
                              k=k, threads=threads,
                              sweep_algorithm=algorithm)
        _, _, dataset, _ = _load(input, config)
        dist = pairwise(dataset, config.metric, config.threads)
        if Algorithm(config.sweep_algorithm) == Algorithm.KMEANS:
            labels = kmeans(dataset, config.kmeans_config(),
                            config.threads).labels
        else:
            labels = pam(dist, config.pam_config()).labels
        report = silhouette(dist, labels)
        if out is not None:
            emit_silhouette_svg(report, "Silhouette plot of " +
                                config.sweep_algorithm
                                ).write(_out_dir(out),
                                        "silhouette_" + config.sweep_algorithm)
        if as_json:
            typer.echo(_dump(report.to_dict()))
            return
        typer.echo("Average silhouette width: " +
                   format(report.overall, ".4f"))
        sizes = report.cluster_sizes
        for cluster, mean in report.cluster_means.items():
            typer.echo("  cluster " + str(cluster) + ": " +
                       format(mean, ".4f") + " (" + str(sizes[cluster]) +
                       " points)")


@app.command()
def sweep(
    input: Path = typer.Argument(..., help="CSV or ARFF file"),
    algorithm: Optional[str] = typer.Option(None, "--algorithm",
                                            help="kmeans or pam"),
    k_min: Optional[int] = typer.Option(None, "--k-min",
                                        help="Smallest k (default 2)"),
    k_max: Optional[int] = typer.Option(None, "--k-max", help="Largest k "
                                        "(default 10, at most n - 1)"),
    input_format: Optional[str] = _format_option(),
    schema: Optional[str] = _schema_option(),
    normalize: Optional[bool] = _normalize_option(),
    metric: Optional[str] = _metric_option(),
    seed: Optional[int] = _seed_option(),
    threads: Optional[int] = _threads_option(),
    out: Optional[Path] = _out_option(),
    as_json: bool = _json_option(),
    verbose: bool = _verbose_option(),
):
    """Objective and average silhouette for a range of k"""
    _setup_logging(verbose)
    with _exit_codes():
        config = _load_config(None, input_format=input_format, schema=schema,
                              normalize=normalize, metric=metric, seed=seed,
                              threads=threads, sweep_algorithm=algorithm,
                              k_min=k_min, k_max=k_max)
        _, _, dataset, _ = _load(input, config)
        algo = Algorithm(config.sweep_algorithm)
        baseConfig = config.kmeans_config() if algo == Algorithm.KMEANS \
            else config.pam_config()
        result = sweep_k(dataset, _sweep_range(config, dataset.n_rows), algo,
                         baseConfig, config.seed, config.metric,
                         threads=config.threads)
        if out is not None:
            emit_sweep_svg(result).write(_out_dir(out), "sweep")
        if as_json:
            typer.echo(_dump(result.to_dict()))
            return
        typer.echo("k  silhouette  objective")
        for k, sil, obj in zip(result.ks, result.avg_silhouette, result.wss):
            typer.echo(str(k).ljust(3) + format(sil, ".4f").rjust(10) +
                       format(obj, ".4f").rjust(12))
        typer.echo("Best k: " + str(result.best_k))


@app.command()
def analyze(
    input: Path = typer.Argument(..., help="CSV or ARFF file"),
    out: Path = typer.Option(Path("results"), "--out", "-o",
                             help="Output directory"),
    config_file: Optional[Path] = typer.Option(None, "--config", "-c",
                                               help="YAML file of "
                                               "PipelineConfig values"),
    k: Optional[int] = _k_option(),
    m: Optional[int] = typer.Option(None, "--m",
                                    help="Hopkins sample size per trial"),
    trials: Optional[int] = typer.Option(None, "--trials",
                                         help="Hopkins trials"),
    restarts: Optional[int] = typer.Option(None, "--restarts",
                                           help="K-means restarts"),
    init: Optional[str] = typer.Option(None, "--init",
                                       help="kmeans++ or random"),
    input_format: Optional[str] = _format_option(),
    schema: Optional[str] = _schema_option(),
    id_column: Optional[str] = _id_option(),
    label_column: Optional[str] = _label_option(),
    normalize: Optional[bool] = _normalize_option(),
    metric: Optional[str] = _metric_option(),
    seed: Optional[int] = _seed_option(),
    threads: Optional[int] = _threads_option(),
    as_json: bool = _json_option(),
    verbose: bool = _verbose_option(),
):
    """Complete analysis: report.json, report.md and all figures"""
    _setup_logging(verbose)
    with _exit_codes():
        config = _load_config(config_file, input_format=input_format,
                              schema=schema, id_column=id_column,
                              label_column=label_column, normalize=normalize,
                              metric=metric, seed=seed, threads=threads, k=k,
                              hopkins_m=m, trials=trials, restarts=restarts,
                              init=init)
        report = run_pipeline(input, out, config)
        if as_json:
            typer.echo(_dump(report.to_dict()))
            return
        typer.echo("Hopkins statistic: " + format(report.hopkins["h"], ".7f"))
        typer.echo("K-means:")
        _echo_table(report.kmeans["table"])
        typer.echo("PAM (average silhouette " +
                   format(report.pam["silhouette"], ".4f") + "):")
        _echo_table(report.pam["table"])
        typer.echo("Best k: " + str(report.sweep["best_k"]))
        typer.echo("Results saved to " + str(out))


@app.command()
def config_template(
    output_file: Path = typer.Option(Path("wbc_cluster.yaml"), "--output",
                                     "-o", help="Template file"),
):
    """Writes a YAML file with the default PipelineConfig"""
    with _exit_codes():
        with open(output_file, "w", encoding="utf-8") as f:
            yaml.safe_dump(PipelineConfig().to_dict(), f,
                           default_flow_style=False, sort_keys=False)
        typer.echo("Configuration template saved to " + str(output_file))


def main(argv=None):
    """Console entry point, returns the exit code"""
    try:
        code = app(args=argv, prog_name="wbc-cluster", standalone_mode=False)
    except click.exceptions.UsageError as e:
        e.show()
        return EXIT_USAGE
    except click.exceptions.Abort:
        return EXIT_USAGE
    return code if isinstance(code, int) else EXIT_OK
