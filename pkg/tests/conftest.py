import pytest

from crossorder import random_instance

CORPUS_SIZE = 520


@pytest.fixture(scope="session")
def corpus():
    """A deterministic pool of generated instances shared by the heavier
    property suites."""
    return [random_instance(i) for i in range(CORPUS_SIZE)]
