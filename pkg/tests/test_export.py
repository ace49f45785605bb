import re
import xml.etree.ElementTree as ET
from fractions import Fraction

import pytest

from schnyder_cotree.dual_wood import completion
from schnyder_cotree.export import (
    crossing_pairs, draw_schnyder, region_face_counts, schnyder_coordinates, segments_cross,
    to_dot,
)
from schnyder_cotree.extract import run_pipeline
from schnyder_cotree.generators import cube, icosahedron, k4
from schnyder_cotree.planar import suspend
from schnyder_cotree.schnyder import compute_wood

ID = r'(?:[A-Za-z_][A-Za-z0-9_]*|-?(?:\.\d+|\d+(?:\.\d*)?)|"(?:[^"\\]|\\.)*")'
ATTRS = rf'(?:\s*\[(?:\s*{ID}\s*=\s*{ID}\s*,?)*\s*\])?'
STMT = re.compile(rf'^\s*(?:{ID}(?:\s*(?:--|->)\s*{ID})*{ATTRS}|(?:node|edge|graph){ATTRS});$')


def assert_dot(text, directed):
    lines = text.strip().splitlines()
    head = "digraph" if directed else "graph"
    assert re.match(rf"^{head} {ID} {{$", lines[0]), lines[0]
    assert lines[-1] == "}"
    for ln in lines[1:-1]:
        assert STMT.match(ln), ln
        assert ("--" if directed else "->") not in ln, ln


def k4_wood():
    return compute_wood(suspend(k4()))


def test_wood_dot():
    text = to_dot(k4_wood())
    assert_dot(text, True)
    edges = [ln for ln in text.splitlines() if "id=\"e" in ln]
    assert len(edges) == 6
    assert sum("dir=both" in ln for ln in edges) == 3
    assert text.count("half") == 6  # three invisible targets plus their arrows


def test_graph_and_candidate_dot():
    res = run_pipeline(cube())
    assert_dot(to_dot(res.G), False)
    text = to_dot(res.H)
    assert_dot(text, False)
    assert text.count("dotted") == res.G.m - len(res.H.edge_ids)
    assert_dot(to_dot((res.G, res.dual.graph, res.pair)), False)


def test_completion_dot():
    S = k4_wood()
    text = to_dot(completion(S.host, S))
    assert_dot(text, True)
    assert len(re.findall(r"shape=diamond", text)) == 9
    assert len(re.findall(r"shape=box", text)) == 6


def test_unknown_type():
    with pytest.raises(TypeError):
        to_dot(42)


def test_k4_face_counts():
    counts = region_face_counts(k4_wood())
    assert counts == [(3, 0, 0), (0, 3, 0), (0, 0, 3), (1, 1, 1)]


@pytest.mark.parametrize("G,n,m", [(k4(), 4, 6), (icosahedron(), 12, 30), (cube(), 8, 12)],
                         ids=["k4", "icosahedron", "cube"])
def test_drawing(G, n, m):
    svg, bad = draw_schnyder(compute_wood(suspend(G)))
    assert bad == []
    root = ET.fromstring(svg)
    ns = "{http://www.w3.org/2000/svg}"
    assert len(root.findall(f"{ns}circle")) == n
    assert len(root.findall(f"{ns}line")) >= m


def test_corpus_drawings_are_plane(small_corpus):
    for name, G in small_corpus:
        S = compute_wood(suspend(G))
        pts, counts = schnyder_coordinates(S)
        assert all(sum(c) == G.f - 1 for c in counts), name
        assert len(set(pts)) == G.n, name
        assert crossing_pairs(G, pts) == [], name


def P(x, y):
    return (Fraction(x), Fraction(y))


def test_segments_cross_cases():
    assert segments_cross(P(0, 0), P(2, 2), P(0, 2), P(2, 0))
    assert not segments_cross(P(0, 0), P(1, 0), P(0, 1), P(1, 1))
    assert not segments_cross(P(0, 0), P(1, 0), P(1, 0), P(1, 1))  # shared endpoint
    assert segments_cross(P(0, 0), P(2, 0), P(0, 0), P(1, 0))  # collinear overlap
    assert not segments_cross(P(0, 0), P(1, 0), P(0, 0), P(-1, 0))  # opposite rays
    assert segments_cross(P(0, 0), P(2, 0), P(1, 0), P(1, 1))  # T junction
    assert not segments_cross(P(0, 0), P(1, 0), P(2, 0), P(3, 0))
