import pytest

from refined_bohr import functions as F


@pytest.fixture(scope="session")
def corpus():
    return F.corpus(seed=42)


@pytest.fixture(scope="session")
def small_corpus(corpus):
    # every Moebius and Blaschke member plus a slice of the Schur functions
    return corpus[:60]
