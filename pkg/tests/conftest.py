import pytest

from schnyder_cotree.extract import run_pipeline
from schnyder_cotree.generators import builtin_corpus, from_coordinates
from schnyder_cotree.planar import suspend
from schnyder_cotree.schnyder import SchnyderWood

# A 12-vertex example wood: r1, r2, r3 are 0, 1, 2 and inner vertices k = 1..9
# get id k + 2.  Coordinates and colours follow a standard 12-vertex example.
EXAMPLE_POINTS = {
    "r1": (0, 10), "r2": (6, 0), "r3": (-6, 0), 1: (-2, 0), 2: (2, 0), 3: (-1.5, 2),
    4: (1.5, 2), 5: (-2.2, 3.3), 6: (-0.5, 3.3), 7: (2.5, 3), 8: (0.5, 5), 9: (0, 8),
}
# (x, y, colour of x -> y, colour of y -> x); 0 means no direction
EXAMPLE_DIRECTIONS = (
    [(x, y, 2, 3) for x, y in [("r3", 1), (1, 2), (2, "r2"), (3, 4)]]
    + [(x, y, 1, 3) for x, y in [("r3", "r1"), (5, 9), (1, 3), (6, 8)]]
    + [(x, y, 2, 1) for x, y in [("r1", "r2"), (9, 8), (6, 4), (5, 3), (4, 2), (8, 7)]]
    + [(x, y, 3, 0) for x, y in [(5, "r3"), (6, 5), (7, 4)]]
    + [(7, "r2", 2, 0), (9, "r1", 1, 0)]
)


def _vid(x):
    return {"r1": 0, "r2": 1, "r3": 2}[x] if isinstance(x, str) else x + 2


def example_graph():
    pts = [None] * 12
    for k, p in EXAMPLE_POINTS.items():
        pts[_vid(k)] = p
    edges = [(_vid(x), _vid(y)) for x, y, _, _ in EXAMPLE_DIRECTIONS]
    return from_coordinates(pts, edges, (0, 1, 2))


def example_wood():
    G = example_graph()
    Gs = suspend(G)
    col = [0] * Gs.dart_count
    for x, y, a, b in EXAMPLE_DIRECTIONS:
        d = G.dart(_vid(x), _vid(y))
        col[d], col[d ^ 1] = a, b
    for k in range(3):
        col[2 * G.m + k] = k + 1
    return SchnyderWood(Gs, tuple(col))


@pytest.fixture(scope="session")
def corpus():
    return builtin_corpus()


@pytest.fixture(scope="session")
def small_corpus():
    return builtin_corpus(stacked_count=15, max_n=25)


@pytest.fixture(scope="session")
def pipelines(corpus):
    return {name: run_pipeline(G, strict=False) for name, G in corpus}
