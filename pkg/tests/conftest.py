import pytest

from cosec.generators import enumerate_cotrees, random_corpus

# Frozen corpus parameters: changing any of these invalidates recorded
# regression values (counts, finding totals) in the tests.
RANDOM_CORPUS_SEED = 20260823
RANDOM_CORPUS_SIZE = 5000
RANDOM_CORPUS_MAX_LEAVES = 14


@pytest.fixture(scope="session")
def exhaustive8():
    """Every normalized cotree shape with at most 8 leaves (809 trees)."""
    return list(enumerate_cotrees(8))


@pytest.fixture(scope="session")
def random5000():
    """The seeded 5000-tree random corpus used by the acceptance criteria."""
    return list(
        random_corpus(RANDOM_CORPUS_SIZE, RANDOM_CORPUS_MAX_LEAVES, RANDOM_CORPUS_SEED)
    )
