import itertools

import numpy as np
import pytest

from wbc_cluster.exceptions import ConfigError, InvalidMedoid, TooFewPoints
from wbc_cluster.load_examples import three_blobs, two_blobs
from wbc_cluster.metrics import Metric, pairwise
from wbc_cluster.pam import PamConfig, pam, pam_cost


def test_line_points(line_points):
    dist = pairwise(line_points)
    result = pam(dist, k=2)
    assert result.medoid_indices == (1, 4)
    assert line_points[list(result.medoid_indices)].ravel().tolist() == \
        [1., 11.]
    assert result.cost == 4.
    assert result.labels.tolist() == [0, 0, 0, 1, 1, 1]
    assert result.converged
    assert result.history == (5., 4.)


def test_every_point_a_medoid():
    dist = pairwise(np.random.default_rng(0).random((6, 2)))
    result = pam(dist, k=6)
    assert result.cost == 0.
    assert result.medoid_indices == tuple(range(6))
    assert result.labels.tolist() == list(range(6))


@pytest.mark.parametrize("seed", range(10))
@pytest.mark.parametrize("k", [2, 3])
def test_matches_exhaustive_search(seed, k):
    # 8 to 12 points in k well separated blobs
    if k == 2:
        data = two_blobs(n=4 + seed % 3, seed=seed).to_numpy()
    else:
        data = three_blobs(n=3 + seed % 2, seed=seed).to_numpy()
    dist = pairwise(data)
    best = min(pam_cost(dist, c)
               for c in itertools.combinations(range(dist.n), k))
    assert pam(dist, k=k).cost == pytest.approx(best)


@pytest.mark.parametrize("metric", [Metric.EUCLIDEAN, Metric.MANHATTAN])
def test_no_single_swap_improves(metric):
    dist = pairwise(np.random.default_rng(5).random((25, 3)), metric)
    result = pam(dist, k=3, metric=metric)
    medoids = set(result.medoid_indices)
    for old in medoids:
        for new in set(range(dist.n)) - medoids:
            swapped = (medoids - {old}) | {new}
            assert pam_cost(dist, swapped) >= \
                result.cost - 1e-12 * max(1., result.cost)


def test_history_strictly_decreasing():
    dist = pairwise(np.random.default_rng(6).random((40, 2)))
    result = pam(dist, k=4)
    assert len(result.history) == result.swaps_performed + 1
    for before, after in zip(result.history, result.history[1:]):
        assert after < before
    assert result.history[-1] == result.cost
    assert result.cost == pam_cost(dist, result.medoid_indices)


def test_labels_point_to_nearest_medoid():
    data = np.random.default_rng(7).random((30, 2))
    dist = pairwise(data)
    result = pam(dist, k=3)
    square = dist.square()
    for i, label in enumerate(result.labels):
        nearest = square[list(result.medoid_indices), i].min()
        assert square[result.medoid_indices[label], i] == nearest


def test_coincident_medoids_keep_their_own_cluster():
    data = np.array([[0.], [0.], [1.], [1.]])
    result = pam(pairwise(data), k=3)
    assert result.cost == 0.
    assert (result.sizes > 0).all()
    for position, medoid in enumerate(result.medoid_indices):
        assert result.labels[medoid] == position


def test_swap_limit():
    dist = pairwise(np.random.default_rng(8).random((40, 2)))
    result = pam(dist, PamConfig(k=4, max_swap_iters=0))
    assert result.swaps_performed == 0
    assert len(result.history) == 1


def test_as_partition():
    dist = pairwise(two_blobs(n=6, seed=0).to_numpy())
    result = pam(dist, k=2)
    partition = result.as_partition()
    assert partition.objective == result.cost
    assert partition.medoid_indices == result.medoid_indices
    assert partition.centroids is None
    assert partition.sizes.tolist() == [6, 6]


def test_pam_cost_examples(line_points):
    dist = pairwise(line_points)
    assert pam_cost(dist, [1, 4]) == 4.
    assert pam_cost(dist, range(6)) == 0.
    assert pam_cost(dist, [0]) == 36.


@pytest.mark.parametrize("medoids", [[], [0, 0], [6], [-1]])
def test_pam_cost_invalid_medoids(line_points, medoids):
    with pytest.raises(InvalidMedoid):
        pam_cost(pairwise(line_points), medoids)


def test_errors(line_points):
    with pytest.raises(TooFewPoints):
        pam(pairwise(line_points), k=7)
    with pytest.raises(ConfigError):
        PamConfig(k=0)
    with pytest.raises(ConfigError):
        PamConfig(max_swap_iters=-1)
