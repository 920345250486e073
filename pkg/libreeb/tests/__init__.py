"Shared helpers for the unittest suite"
import numpy as np

from ..morse import random_coloring
from ..recognition import Recognizer


def colorings(g, count, seed=0):
    "Seeded stream of random total orders on g"
    rng = np.random.default_rng(seed)
    for _ in range(count):
        yield random_coloring(g, rng)


def recognizer(budget=10 ** 6):
    "Private recognizer so tests never share cache state"
    return Recognizer(budget=budget)
