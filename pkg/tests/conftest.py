import os

import numpy as np
import pytest

from wbc_cluster.load_examples import two_blobs, wbc_like_csv

WBC_FILE = os.path.join(os.path.dirname(__file__), "data",
                        "breast-cancer-wisconsin.data")


@pytest.fixture(scope="session")
def wbc_path():
    """The UCI breast cancer file, tests using it are skipped without it"""
    path = os.environ.get("WBC_DATA", WBC_FILE)
    if not os.path.isfile(path):
        pytest.skip("breast-cancer-wisconsin.data not available, set WBC_DATA")
    return path


@pytest.fixture
def line_points():
    # the 1-D toy instance {0, 1, 2, 10, 11, 12}
    return np.array([[0.], [1.], [2.], [10.], [11.], [12.]])


@pytest.fixture(scope="session")
def blobs():
    return two_blobs(n=30, seed=1).to_numpy()


@pytest.fixture
def wbc_like_file(tmp_path):
    path = tmp_path / "wbc_like.data"
    path.write_bytes(wbc_like_csv(n=60, missing=3, seed=0))
    return path
