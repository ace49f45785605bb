import pytest
from conftest import example_graph, example_wood

from schnyder_cotree.errors import NotThreeConnected
from schnyder_cotree.generators import cube, k4
from schnyder_cotree.oracle import enumerate_woods
from schnyder_cotree.planar import suspend
from schnyder_cotree.schnyder import (
    BLUE, GREEN, RED, SchnyderWood, color_tree, compute_wood, pred, succ, validate_wood,
)
from test_planar import two_k4_sharing_an_edge


def test_color_arithmetic():
    assert [succ(i) for i in (1, 2, 3)] == [2, 3, 1]
    assert [pred(i) for i in (1, 2, 3)] == [3, 1, 2]


def test_k4_wood():
    S = compute_wood(suspend(k4()))
    # edges: 0:(r1,r2) 1:(r1,v) 2:(r1,r3) 3:(r2,r3) 4:(r2,v) 5:(r3,v)
    assert [S.kind(e) for e in range(6)] == ["bi", "uni_vu", "bi", "bi", "uni_vu", "uni_vu"]
    G = S.host.base
    assert S.colors[G.dart(2, 0)] == RED and S.colors[G.dart(0, 2)] == BLUE
    assert S.colors[G.dart(0, 1)] == GREEN and S.colors[G.dart(1, 0)] == RED
    assert S.colors[G.dart(2, 1)] == GREEN and S.colors[G.dart(1, 2)] == BLUE
    assert [S.colors[G.dart(3, r)] for r in (0, 1, 2)] == [RED, GREEN, BLUE]


def test_k4_wood_is_the_unique_one():
    Gs = suspend(k4())
    woods = list(enumerate_woods(Gs, 100))
    assert woods == [compute_wood(Gs)]


def test_example_wood_validates():
    S = example_wood()
    assert validate_wood(S.host, S).ok
    assert (S.host.base.n, S.host.base.m) == (12, 19)


def test_compute_wood_on_example_graph():
    Gs = suspend(example_graph())
    assert validate_wood(Gs, compute_wood(Gs)).ok


def test_two_cut_rejected():
    with pytest.raises(NotThreeConnected):
        compute_wood(suspend(two_k4_sharing_an_edge()))


def test_recoloured_red_edge_breaks_outgoing_condition():
    S = compute_wood(suspend(k4()))
    G = S.host.base
    col = list(S.colors)
    col[G.dart(3, 0)] = GREEN
    rep = validate_wood(S.host, SchnyderWood(S.host, tuple(col)))
    assert any(v.code == "cond3.outgoing" and v.where == 3 for v in rep)


def test_monochromatic_face_cycle_reported():
    S = compute_wood(suspend(cube()))
    G = S.host.base
    fid = next(f for f in range(G.f) if f != G.outer_face)
    col = list(S.colors)
    for d in G.faces[fid]:
        col[d], col[d ^ 1] = RED, 0
    rep = validate_wood(S.host, SchnyderWood(S.host, tuple(col)))
    assert any(v.code == "cond4.cycle" and v.where == fid for v in rep)


def test_half_edge_colour_checked():
    S = compute_wood(suspend(k4()))
    col = list(S.colors)
    col[-1] = RED
    rep = validate_wood(S.host, SchnyderWood(S.host, tuple(col)))
    assert "cond2.half_edge" in rep.codes()


def test_k4_red_tree():
    S = compute_wood(suspend(k4()))
    T = color_tree(S, RED)
    assert T.root == 0
    assert [p[1] if p else None for p in T.parent] == [None, 0, 0, 0]


def test_cube_trees_have_seven_edges():
    S = compute_wood(suspend(cube()))
    for i in (RED, GREEN, BLUE):
        assert len(color_tree(S, i).edges()) == 7


def test_corpus_woods(corpus):
    for name, G in corpus:
        Gs = suspend(G)
        S = compute_wood(Gs)
        assert validate_wood(Gs, S).ok, name
        # three outgoing directions per vertex, half-edges included
        outs = [0] * G.n
        for d, c in enumerate(S.colors):
            if c:
                outs[Gs.tail(d)] += 1
        assert outs == [3] * G.n
        for i in (RED, GREEN, BLUE):
            T = color_tree(S, i)
            for v in range(G.n):
                path = T.path_to_root(v)
                assert path[-1] == G.roots[i - 1] and len(path) <= G.n


def test_deterministic():
    Gs = suspend(cube())
    assert compute_wood(Gs).colors == compute_wood(suspend(cube())).colors
