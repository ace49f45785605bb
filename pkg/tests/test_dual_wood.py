import pytest
from conftest import example_wood

from schnyder_cotree.completion import STUB
from schnyder_cotree.dual_wood import (
    check_crossing_vertices, completion, double_dual_matches, dual_wood,
)
from schnyder_cotree.errors import InvalidWood
from schnyder_cotree.generators import k4
from schnyder_cotree.planar import suspend
from schnyder_cotree.schnyder import SchnyderWood, compute_wood, validate_wood


def test_k4_dual_wood():
    S = compute_wood(suspend(k4()))
    Sd, corr = dual_wood(S)
    assert validate_wood(Sd.host, Sd).ok
    outer = [0, 2, 3]  # the bidirected outer edges
    inner = [1, 4, 5]  # v's unidirected edges
    assert sorted(Sd.colors[2 * e] or Sd.colors[2 * e + 1] for e in outer) == [1, 2, 3]
    assert all(Sd.kind(e).startswith("uni") for e in outer)
    assert all(Sd.kind(e) == "bi" for e in inner)
    # the half-edges of b1, b2, b3 are coloured 1, 2, 3
    m = Sd.host.base.m
    assert Sd.colors[2 * m:] == (1, 2, 3)


def test_invalid_input_rejected():
    S = compute_wood(suspend(k4()))
    bad = SchnyderWood(S.host, (0,) * len(S.colors))
    with pytest.raises(InvalidWood):
        dual_wood(bad)


def test_k4_completion():
    S = compute_wood(suspend(k4()))
    C = completion(S.host, S)
    sk = C.skeleton
    assert sk.n_cross == 9
    assert sk.vertex_count == 4 + 6 + 9
    assert check_crossing_vertices(C).ok
    # the three half-edge crossings end in an outer stub
    assert sum(1 for slots in sk.slots if STUB in slots) == 3


def test_example_completion_size():
    S = example_wood()
    C = completion(S.host, S)
    G = S.host.base
    assert C.skeleton.vertex_count == G.n + (G.f - 1 + 3) + (G.m + 3) == 45
    assert check_crossing_vertices(C).ok


def test_flipped_direction_reported():
    S = compute_wood(suspend(k4()))
    C = completion(S.host, S)
    c = 0
    s = next(s for s in range(4) if not C.outward[c][s])
    rep = check_crossing_vertices(C.flip(c, s))
    assert not rep.ok
    assert any(v.where == c for v in rep)


def test_dual_from_orientation_agrees(corpus):
    for name, G in corpus[::7]:
        Gs = suspend(G)
        S, Sd_orient, _ = compute_wood(Gs, return_dual=True)
        Sd, _ = dual_wood(S)
        assert Sd == Sd_orient, name


def test_corpus_dual_woods(corpus):
    for name, G in corpus:
        S = compute_wood(suspend(G))
        Sd, corr = dual_wood(S)
        assert validate_wood(Sd.host, Sd).ok, name
        assert check_crossing_vertices(completion(S.host, S, Sd, corr)).ok, name
        for e in range(G.m):
            assert S.is_bidirected(e) != Sd.is_bidirected(e), (name, e)
        S2, _ = dual_wood(Sd)
        assert double_dual_matches(S, S2, G.m), name
