import pytest

from helpers import split_corpus


@pytest.fixture(scope="session")
def corpus9():
    """Exhaustive split-graph corpus up to 9 vertices (see helpers)."""
    return split_corpus(9)


@pytest.fixture(scope="session")
def corpus7():
    return split_corpus(7)
