import random

import pytest

from avgconn import _flow
from avgconn.core import Graph


@pytest.fixture(scope="session", autouse=True)
def _warm_kernels():
    # Compile the numba kernels once so individual tests time honestly.
    _flow.warmup()


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(
        n, [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < p]
    )


def random_connected_graph(rng: random.Random, n: int, p: float) -> Graph:
    from avgconn.core import is_connected

    while True:
        g = random_graph(rng, n, p)
        if is_connected(g):
            return g
