__version__ = '0.1.0'

from .exceptions import WbcClusterError
from .dataset import (RawTable, Dataset, CsvConfig, ClassLabel, parse_csv,
                      parse_arff, write_arff, load_table, drop_missing_rows,
                      build_dataset, preprocess, class_distribution)
from .metrics import Metric, DistanceMatrix, distance, pairwise, nearest_neighbor
from .tendency import HopkinsConfig, HopkinsResult, hopkins, hopkins_control
from .kmeans import KMeansConfig, Partition, kmeans, wss
from .pam import PamConfig, PamResult, pam, pam_cost
from .validation import SilhouetteReport, KSweepResult, silhouette, sweep_k
from .projection import Projection2D, jacobi_eigen, pca_2d
from .report import (AnalysisReport, ClusterNaming, name_clusters,
                     label_agreement, size_table, emit_report)
from .plots import (emit_scatter_svg, emit_silhouette_svg, emit_sweep_svg,
                    emit_feature_boxplot_svg, emit_kgrid_svg)
from .load_examples import load_examples
