"""Property tests over random stacked triangulations, thinned 3-connected
plane graphs obtained from them, and their duals."""

import random

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from schnyder_cotree.dual_wood import check_crossing_vertices, completion, dual_wood
from schnyder_cotree.export import crossing_pairs, schnyder_coordinates
from schnyder_cotree.extract import run_pipeline
from schnyder_cotree.formats import read_rot, read_wood, write_rot, write_wood
from schnyder_cotree.generators import dual_of, stacked
from schnyder_cotree.opp import check_index_monotonicity, compatible_opp, validate_opp
from schnyder_cotree.planar import build_graph, check_three_connected, suspend
from schnyder_cotree.schnyder import BLUE, GREEN, RED, compute_wood, validate_wood

SETTINGS = settings(max_examples=40, deadline=None,
                    suppress_health_check=[HealthCheck.too_slow])


def thin(G, seed):
    """Delete inner edges in random order while the graph stays 3-connected."""
    rng = random.Random(seed)
    outer = {frozenset(p) for p in ((0, 1), (1, 2), (2, 0))}
    order = [e for e in range(G.m) if frozenset(G.edges[e]) not in outer]
    rng.shuffle(order)
    keep = G.neighbor_lists()
    for e in order[: rng.randint(0, len(order))]:
        u, v = G.edges[e]
        trial = [list(r) for r in keep]
        trial[u].remove(v)
        trial[v].remove(u)
        H = build_graph(G.n, trial, G.roots)
        if check_three_connected(H):
            keep = trial
    return build_graph(G.n, keep, G.roots)


@st.composite
def graphs(draw):
    n = draw(st.integers(4, 30))
    G = stacked(n, draw(st.integers(0, 2 ** 16)))
    mode = draw(st.sampled_from(["stacked", "thinned", "dual"]))
    if mode == "thinned":
        G = thin(G, draw(st.integers(0, 2 ** 16)))
    elif mode == "dual":
        G = dual_of(thin(G, draw(st.integers(0, 2 ** 16))))
    return G


def test_thinning_removes_edges():
    G = stacked(30, 5)
    H = thin(G, 1)
    assert H.m < G.m and check_three_connected(H)
    assert any(len(w) > 3 for w in H.faces)


@SETTINGS
@given(graphs())
def test_wood_and_dual_wood(G):
    Gs = suspend(G)
    S = compute_wood(Gs)
    assert validate_wood(Gs, S).ok
    Sd, corr = dual_wood(S)
    assert validate_wood(Sd.host, Sd).ok
    assert check_crossing_vertices(completion(Gs, S, Sd, corr)).ok
    for e in range(G.m):
        assert S.is_bidirected(e) != Sd.is_bidirected(e)


@SETTINGS
@given(graphs())
def test_opp_every_colour(G):
    S = compute_wood(suspend(G))
    for i in (RED, GREEN, BLUE):
        P = compatible_opp(S, i)
        assert validate_opp(G, P).ok
        assert check_index_monotonicity(S, P).ok
        assert sorted(v for p in P.paths for v in p) == list(range(G.n))


@SETTINGS
@given(graphs())
def test_pipeline_certificates(G):
    res = run_pipeline(G, strict=False)
    assert res.ok, {k: v for k, v in res.certificates.items() if not v}
    assert res.pair.max_deg_tree <= 5 and res.pair.max_deg_cotree <= 5
    assert res.H.max_degree <= 5 and res.H_dual.max_degree <= 5
    assert res.H_dual.degrees()[res.H_dual.x] <= 3


@SETTINGS
@given(graphs())
def test_round_trips(G):
    H = read_rot(write_rot(G))
    assert H.neighbor_lists() == G.neighbor_lists() and H.roots == G.roots
    Gs = suspend(G)
    S = compute_wood(Gs)
    assert read_wood(write_wood(S), Gs) == S


@settings(max_examples=15, deadline=None)
@given(graphs())
def test_face_count_drawing_is_plane(G):
    pts, counts = schnyder_coordinates(compute_wood(suspend(G)))
    assert all(sum(c) == G.f - 1 for c in counts)
    assert crossing_pairs(G, pts) == []
