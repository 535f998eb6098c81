import numpy as np
import pytest

from twoeig import Graph, SignedGraph

# The 6-vertex regular two-graph worked through in the docs: ten triples,
# pair count 2, descendant at vertex 0 has edges 12, 13, 24, 35, 45 and the
# induced complete signing has spectrum +-sqrt(5) with multiplicity 3.
K6_TRIPLES = [
    (0, 1, 2), (0, 1, 3), (0, 2, 4), (0, 3, 5), (0, 4, 5),
    (1, 2, 5), (1, 3, 4), (1, 4, 5), (2, 3, 4), (2, 3, 5),
]

K6_MATRIX = [
    [0, 1, 1, 1, 1, 1],
    [1, 0, -1, -1, 1, 1],
    [1, -1, 0, 1, -1, 1],
    [1, -1, 1, 0, 1, -1],
    [1, 1, -1, 1, 0, -1],
    [1, 1, 1, -1, -1, 0],
]

K6_DESCENDANT_EDGES = [(1, 2), (1, 3), (2, 4), (3, 5), (4, 5)]


def petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, edges)


def random_signed_graph(rng: np.random.Generator, n: int, p: float = 0.5) -> SignedGraph:
    """Random graph with random signs, resampled until it has an edge."""
    while True:
        upper = rng.random((n, n)) < p
        signs = rng.choice((-1, 1), size=(n, n))
        a = np.triu(upper, 1).astype(np.int8) * signs.astype(np.int8)
        a = a + a.T
        if np.any(a):
            return SignedGraph(a)


@pytest.fixture
def k6_signing() -> SignedGraph:
    return SignedGraph(K6_MATRIX)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20260815)
