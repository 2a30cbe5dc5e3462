import pytest

from contextprob import concepts
from contextprob.fixtures import fixture_path

# Frozen copy of the shipped pet rating fixture, kept here independently so
# that accidental edits to the data file are caught by the suite.
PET_RATING_ROWS = {
    "rabbit": (0.07, 2.52, 1.77),
    "cat": (3.96, 4.80, 0.94),
    "mouse": (0.74, 2.27, 3.31),
    "bird": (0.42, 3.06, 1.41),
    "parrot": (0.53, 5.80, 1.57),
    "goldfish": (0.12, 0.69, 0.83),
    "hamster": (0.85, 2.72, 1.25),
    "canary": (0.26, 2.73, 0.86),
    "guppy": (0.14, 0.68, 0.83),
    "snake": (0.57, 0.98, 5.64),
    "spider": (0.26, 0.40, 5.96),
    "dog": (6.81, 6.78, 0.91),
    "hedgehog": (0.53, 0.85, 3.48),
    "guinea pig": (0.58, 2.63, 1.31),
}

CONTEXT_BONE = "The pet is chewing a bone"
CONTEXT_TAUGHT = "The pet is being taught"
CONTEXT_WEIRD = "Look what a pet he has, I knew he was a weird person"
PET_CONTEXTS = (CONTEXT_BONE, CONTEXT_TAUGHT, CONTEXT_WEIRD)


def pet_column(index: int) -> list[float]:
    return [row[index] for row in PET_RATING_ROWS.values()]


@pytest.fixture(scope="session")
def pet_ratings_path():
    return fixture_path("pet_context_ratings.tsv")


@pytest.fixture(scope="session")
def pet_table(pet_ratings_path):
    return concepts.load_ratings(pet_ratings_path)
