import numpy as np
import pytest

from lengram import _backend
from lengram.ingest import WordLengthSeries


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    # compile the numba kernels once so individual tests do not pay for it
    _backend.warm_up()


@pytest.fixture(scope="session")
def demo_corpus(tmp_path_factory):
    """Full-size bundled demo corpus (used by the acceptance suite)."""
    from lengram.demo import build_demo_corpus

    root = tmp_path_factory.mktemp("demo_corpus")
    manifest = build_demo_corpus(root)
    return root, manifest


@pytest.fixture(scope="session")
def small_corpus(tmp_path_factory):
    """A quick two-category corpus for CLI-level tests."""
    from lengram.demo import build_demo_corpus

    root = tmp_path_factory.mktemp("small_corpus")
    manifest = build_demo_corpus(root, news_words=8000, literature_words=8000)
    return root, manifest


def make_series(values, language="en", genre="test"):
    values = np.asarray(values, dtype=np.uint16)
    return WordLengthSeries(
        lengths=values,
        language=language,
        genre=genre,
        source_ids=[("synthetic", 0, int(values.shape[0]))],
    )


@pytest.fixture
def series_factory():
    return make_series
