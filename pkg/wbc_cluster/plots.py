# -*- coding: utf-8 -*-
"""
Created on Thu Sep 24 10:05:37 2026

Static figures of the analysis drawn with plotnine and saved as
self-contained SVG. Every figure comes with the data frame it was drawn
from, written next to the SVG as CSV.
"""

import logging
import os
from dataclasses import dataclass
from io import BytesIO

import matplotlib
import matplotlib.pyplot as plt
import numpy as np
import pandas as pd
import plotnine as p9

from .helper.pretty import pretty
from .metrics import _as_matrix

logger = logging.getLogger(__name__)

SVG_HASHSALT = "wbc_cluster"
FIGURE_SIZE = (6.4, 4.8)


@dataclass(frozen=True, eq=False)
class PlotArtifact:
    """
    Args:
        svg (bytes): the rendered figure
        data (dataframe): plot data the figure was drawn from
    """
    svg: bytes
    data: pd.DataFrame

    def csv(self):
        return self.data.to_csv(index=False, float_format="%.17g",
                                lineterminator="\n").encode("utf-8")

    def write(self, directory, stem):
        """Writes <stem>.svg and <stem>.csv, returns both paths"""
        svgPath = os.path.join(directory, stem + ".svg")
        csvPath = os.path.join(directory, stem + ".csv")
        with open(svgPath, "wb") as f:
            f.write(self.svg)
        with open(csvPath, "wb") as f:
            f.write(self.csv())
        logger.debug("wrote %s and %s", svgPath, csvPath)
        return svgPath, csvPath


def _to_svg(plot, figureSize=FIGURE_SIZE):
    plot = plot + p9.theme_bw() + p9.theme(figure_size=figureSize)
    with matplotlib.rc_context({"svg.hashsalt": SVG_HASHSALT,
                                "svg.fonttype": "path"}):
        fig = plot.draw(show=False)
        buffer = BytesIO()
        fig.savefig(buffer, format="svg", metadata={"Date": None})
    plt.close(fig)
    return buffer.getvalue()


def _cluster_factor(labels):
    labels = np.asarray(labels, dtype=int)
    categories = [str(x) for x in np.unique(labels)]
    return pd.Categorical([str(x) for x in labels], categories=categories)


def _axis_title(name, share):
    return name + " (" + format(100 * share, ".1f") + "% variance)"


def _blank(xName, yName, title):
    dummy = pd.DataFrame({xName: [0.0], yName: [0.0]})
    return p9.ggplot(dummy, p9.aes(x=xName, y=yName)) + p9.geom_blank() \
        + p9.ggtitle(title)


#_______________________________________________________________________SCATTER
def emit_scatter_svg(proj, labels, centers=None, title="Clusters"):
    """
    Points of the PCA plane colored by cluster

    Args:
        proj (Projection2D): projected points
        labels (array): cluster id per point
        centers (array): projected centroids / medoids, one row per cluster,
                         drawn with a distinct marker
        title (str): plot title

    Returns:
        PlotArtifact with columns x, y, cluster, role (point / center)
    """
    coords = np.asarray(proj.coords, dtype=float).reshape(-1, 2)
    labels = np.asarray(labels, dtype=int)
    if len(labels) != len(coords):
        raise ValueError("labels must have one entry per projected point")

    data = pd.DataFrame({"x": coords[:, 0], "y": coords[:, 1],
                         "cluster": labels, "role": "point"})
    if centers is not None:
        centers = np.asarray(centers, dtype=float).reshape(-1, 2)
        data = pd.concat([data, pd.DataFrame({
            "x": centers[:, 0], "y": centers[:, 1],
            "cluster": np.arange(len(centers)), "role": "center"})],
            ignore_index=True)

    xTitle = _axis_title("PC1", proj.axis_variance[0])
    yTitle = _axis_title("PC2", proj.axis_variance[1])
    if len(data) == 0:
        plot = _blank("x", "y", title)
    else:
        dfPlot = data.assign(Cluster=_cluster_factor(data["cluster"]))
        points = dfPlot[dfPlot["role"] == "point"]
        plot = p9.ggplot(points, p9.aes(x="x", y="y", color="Cluster")) \
            + p9.geom_point(size=1.5, alpha=0.7) + p9.ggtitle(title)
        if centers is not None and len(centers) > 0:
            plot = plot + p9.geom_point(data=dfPlot[dfPlot["role"] == "center"],
                                        mapping=p9.aes(x="x", y="y"),
                                        shape="X", size=6, color="black",
                                        inherit_aes=False)
    plot = plot + p9.labs(x=xTitle, y=yTitle)
    return PlotArtifact(_to_svg(plot), data)


#____________________________________________________________________SILHOUETTE
def emit_silhouette_svg(report, title="Silhouette plot"):
    """
    Horizontal silhouette bars, sorted descending within clusters, with a
    dashed line at the overall mean and the cluster means as annotations

    Returns:
        PlotArtifact with columns position, point, cluster, width
    """
    order = np.asarray(report.order, dtype=int)
    widths = np.asarray(report.widths, dtype=float)
    labels = np.asarray(report.labels, dtype=int)
    data = pd.DataFrame({"position": np.arange(len(order)), "point": order,
                         "cluster": labels[order], "width": widths[order]})

    if len(data) == 0:
        plot = _blank("position", "width", title)
    else:
        dfPlot = data.assign(Cluster=_cluster_factor(data["cluster"]))
        lstNotes = []
        for cluster, mean in report.cluster_means.items():
            members = data["position"][data["cluster"] == cluster]
            lstNotes.append({"position": float(members.mean()), "width": 1.0,
                             "text": str(cluster) + ": " + str(len(members)) +
                             " | " + format(mean, ".2f")})
        dfNotes = pd.DataFrame(lstNotes)
        plot = p9.ggplot(dfPlot, p9.aes(x="position", y="width",
                                        fill="Cluster")) \
            + p9.geom_col(width=1) \
            + p9.geom_hline(yintercept=report.overall, linetype="dashed") \
            + p9.geom_text(data=dfNotes, mapping=p9.aes(x="position",
                                                        y="width",
                                                        label="text"),
                           inherit_aes=False, ha="right", size=8) \
            + p9.scale_x_reverse() + p9.coord_flip() \
            + p9.ggtitle(title + ", average width " +
                         format(report.overall, ".2f"))
    plot = plot + p9.labs(x="", y="Silhouette width")
    return PlotArtifact(_to_svg(plot), data)


#_________________________________________________________________________SWEEP
def emit_sweep_svg(sweep, title="Number of clusters"):
    """
    Average silhouette and objective (elbow) curves over k with the best k
    marked

    Returns:
        PlotArtifact with columns k, measure, value, best
    """
    ks = list(sweep.ks)
    objective = "WSS" if sweep.algorithm.value == "kmeans" else "PAM cost"
    data = pd.DataFrame({
        "k": ks + ks,
        "measure": ["Average silhouette"] * len(ks) + [objective] * len(ks),
        "value": list(sweep.avg_silhouette) + list(sweep.wss)})
    data["best"] = data["k"] == sweep.best_k

    dfPlot = data.assign(measure=pd.Categorical(
        data["measure"], categories=["Average silhouette", objective]))
    plot = p9.ggplot(dfPlot, p9.aes(x="k", y="value")) \
        + p9.geom_line() + p9.geom_point() \
        + p9.geom_point(data=dfPlot[dfPlot["best"]], color="red", size=3) \
        + p9.geom_vline(xintercept=sweep.best_k, linetype="dashed",
                        color="red") \
        + p9.facet_wrap("~measure", ncol=1, scales="free_y") \
        + p9.scale_x_continuous(breaks=pretty(min(ks), max(ks), len(ks) - 1,
                                              integer=True)) \
        + p9.labs(x="k", y="") \
        + p9.ggtitle(title + " (" + sweep.algorithm.value + "), best k = " +
                     str(sweep.best_k))
    return PlotArtifact(_to_svg(plot, (6.4, 6.4)), data)


#_______________________________________________________________________BOXPLOT
def emit_feature_boxplot_svg(data, labels, names=None,
                             title="Features by cluster"):
    """
    One box per feature and cluster

    Args:
        data (Dataset / array): n x d points
        labels (array): cluster id per point
        names (list): feature names, taken from the Dataset if None

    Returns:
        PlotArtifact in long format with columns row, cluster, feature, value
    """
    features = _as_matrix(data)
    if names is None:
        names = list(getattr(data, "feature_names", ())) or \
            ["C_" + str(i + 1) for i in range(features.shape[1])]
    labels = np.asarray(labels, dtype=int)

    dfWide = pd.DataFrame(features, columns=names)
    dfWide.insert(0, "cluster", labels)
    dfWide.insert(0, "row", np.arange(len(labels)))
    dfLong = pd.melt(dfWide, id_vars=["row", "cluster"], value_vars=names,
                     var_name="feature", value_name="value")

    if len(dfLong) == 0:
        plot = _blank("feature", "value", title)
    else:
        dfPlot = dfLong.assign(Cluster=_cluster_factor(dfLong["cluster"]))
        plot = p9.ggplot(dfPlot, p9.aes(x="feature", y="value",
                                        fill="Cluster")) \
            + p9.geom_boxplot(outlier_size=0.5) \
            + p9.scale_x_discrete(limits=list(names)) \
            + p9.ggtitle(title)
    plot = plot + p9.labs(x="", y="Value") \
        + p9.theme(axis_text_x=p9.element_text(rotation=90))
    return PlotArtifact(_to_svg(plot), dfLong)


#______________________________________________________________________K GRID
def emit_kgrid_svg(proj, partitions, title="K-means for different k"):
    """
    One PCA scatter panel per partition, e.g. the partitions of a sweep

    Returns:
        PlotArtifact with columns k, x, y, cluster
    """
    coords = np.asarray(proj.coords, dtype=float).reshape(-1, 2)
    lstFrames = []
    for partition in partitions:
        if len(partition.labels) != len(coords):
            raise ValueError("labels must have one entry per projected point")
        lstFrames.append(pd.DataFrame({"k": partition.k, "x": coords[:, 0],
                                       "y": coords[:, 1],
                                       "cluster": partition.labels}))
    data = pd.concat(lstFrames, ignore_index=True) if lstFrames else \
        pd.DataFrame({"k": [], "x": [], "y": [], "cluster": []})

    if len(data) == 0:
        plot = _blank("x", "y", title)
    else:
        panels = ["k = " + str(p.k) for p in partitions]
        dfPlot = data.assign(
            Cluster=_cluster_factor(data["cluster"]),
            panel=pd.Categorical(["k = " + str(k) for k in data["k"]],
                                 categories=list(dict.fromkeys(panels))))
        nCols = int(np.ceil(np.sqrt(len(set(panels)))))
        plot = p9.ggplot(dfPlot, p9.aes(x="x", y="y", color="Cluster")) \
            + p9.geom_point(size=0.8, alpha=0.7) \
            + p9.facet_wrap("~panel", ncol=nCols) + p9.ggtitle(title)
    plot = plot + p9.labs(x=_axis_title("PC1", proj.axis_variance[0]),
                          y=_axis_title("PC2", proj.axis_variance[1]))
    return PlotArtifact(_to_svg(plot, (8, 8)), data)
