import pytest

from schnyder_cotree.dual_wood import dual_wood
from schnyder_cotree.errors import UnknownVertex
from schnyder_cotree.generators import cube, k4
from schnyder_cotree.opp import (
    OrderedPathPartition, check_index_monotonicity, compatible_opp, contours_from_scratch,
    contours_incremental, parent_edges, validate_opp, vertex_index,
)
from schnyder_cotree.planar import suspend
from schnyder_cotree.schnyder import BLUE, GREEN, RED, compute_wood


@pytest.fixture(scope="module")
def k4_wood():
    return compute_wood(suspend(k4()))


def test_k4_green_opp(k4_wood):
    P = compatible_opp(k4_wood, GREEN)
    assert P.base_pair == (1, 2)
    assert [set(p) for p in P.paths] == [{1, 2}, {3}, {0}]
    assert P.index == (2, 0, 0, 1)
    assert validate_opp(k4_wood.host.base, P).ok


def test_k4_vertex_index(k4_wood):
    P = compatible_opp(k4_wood, GREEN)
    assert vertex_index(P, 3) == 1
    assert vertex_index(P, 1) == 0
    with pytest.raises(UnknownVertex):
        vertex_index(P, 4)


def test_k4_parents(k4_wood):
    P = compatible_opp(k4_wood, GREEN)
    par = parent_edges(k4_wood, P)
    G = k4_wood.host.base
    assert par.parent_path == (-1, 0, 1)
    assert G.edges[par.parent_edge[1]] == (1, 3)  # v - r2
    assert G.edges[par.parent_edge[2]] == (0, 3)  # v - r1
    # incoming red at r1
    assert k4_wood.colors[G.dart(3, 0)] == RED


def test_swapped_paths_rejected(k4_wood):
    P = compatible_opp(k4_wood, GREEN)
    paths = (P.paths[0], P.paths[2], P.paths[1])
    index = [0] * 4
    for t, p in enumerate(paths):
        for v in p:
            index[v] = t
    bad = OrderedPathPartition(GREEN, P.base_pair, paths, tuple(index))
    assert "cond1" in validate_opp(k4_wood.host.base, bad).codes()


def test_non_path_rejected():
    S = compute_wood(suspend(cube()))
    P = compatible_opp(S, GREEN)
    G = S.host.base
    last = P.paths[1][-1]
    b = next(v for v in range(G.n) if P.index[v] > 1 and v not in G.adjacency()[last])
    paths = [list(p) for p in P.paths]
    paths[P.index[b]].remove(b)
    paths[1].append(b)
    paths = tuple(tuple(p) for p in paths if p)
    index = [0] * G.n
    for t, p in enumerate(paths):
        for v in p:
            index[v] = t
    bad = OrderedPathPartition(GREEN, P.base_pair, paths, tuple(index))
    assert "induced_path" in validate_opp(G, bad).codes()


def test_corpus_opps(corpus):
    for name, G in corpus:
        S = compute_wood(suspend(G))
        for i in (RED, GREEN, BLUE):
            P = compatible_opp(S, i)
            assert validate_opp(G, P).ok, (name, i)
            assert check_index_monotonicity(S, P).ok, (name, i)
            assert contours_from_scratch(G, P) == contours_incremental(G, P), (name, i)
        P = compatible_opp(S, GREEN)
        par = parent_edges(S, P)
        for t in range(1, len(P.paths)):
            j = par.parent_path[t]
            u, v = G.edges[par.parent_edge[t]]
            assert {P.index[u], P.index[v]} == {t, j}
            assert j < t


def test_dual_opps(corpus):
    for name, G in corpus[::5]:
        Sd, _ = dual_wood(compute_wood(suspend(G)))
        P = compatible_opp(Sd, GREEN)
        assert validate_opp(Sd.host.base, P).ok, name
        parent_edges(Sd, P)
