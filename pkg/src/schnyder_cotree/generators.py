"""Corpus generators for 3-connected plane graphs.

Small families are laid out with coordinates and their rotation systems read
off by sorting neighbours clockwise by angle.  Stacked triangulations are
grown combinatorially, so arbitrarily deep insertions stay exact.
"""

import math
import random

from .errors import BadParams
from .planar import build_graph, default_roots, dual_graph, identify_roots, suspend, suspended_dual

PHI = (1 + 5 ** 0.5) / 2


def _rotation_2d(points, edges):
    nbrs = [[] for _ in points]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    rot = []
    for v, (x, y) in enumerate(points):
        # clockwise = decreasing angle with y pointing up
        rot.append(sorted(nbrs[v], key=lambda u: -math.atan2(points[u][1] - y, points[u][0] - x)))
    return rot


def _rotation_3d(points, edges):
    nbrs = [[] for _ in points]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    rot = []
    for v, p in enumerate(points):
        nrm = _unit(p)
        a = _unit(_cross(nrm, (0.3, 0.7, 0.1) if abs(nrm[0]) > 0.5 else (1.0, 0.2, 0.3)))
        b = _cross(nrm, a)

        def angle(u):
            q = [points[u][k] - p[k] for k in range(3)]
            return math.atan2(_dot(q, b), _dot(q, a))

        # clockwise as seen from outside the polytope
        rot.append(sorted(nbrs[v], key=lambda u: -angle(u)))
    return rot


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _cross(a, b):
    return (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])


def _unit(a):
    s = math.sqrt(_dot(a, a))
    return tuple(x / s for x in a)


def _polytope(points):
    dists = {}
    for u in range(len(points)):
        for v in range(u + 1, len(points)):
            dists[(u, v)] = math.dist(points[u], points[v])
    shortest = min(dists.values())
    edges = [uv for uv, d in dists.items() if d < shortest * 1.001]
    G = build_graph(len(points), _rotation_3d(points, edges))
    return G.with_roots(default_roots(G))


def from_coordinates(points, edges, roots):
    return build_graph(len(points), _rotation_2d(points, edges), roots)


def k4():
    """The sample instance: outer triangle 0, 1, 2 (clockwise) and centre 3."""
    return build_graph(4, [[1, 3, 2], [2, 3, 0], [0, 3, 1], [0, 1, 2]], (0, 1, 2))


def wheel(k):
    """Wheel with ``k`` rim vertices 0..k-1 (clockwise) and hub ``k``."""
    if k < 3:
        raise BadParams(f"wheel needs at least 3 rim vertices, got {k}")
    pts = [(math.sin(2 * math.pi * i / k), math.cos(2 * math.pi * i / k)) for i in range(k)]
    pts.append((0.0, 0.0))
    edges = [(i, (i + 1) % k) for i in range(k)] + [(i, k) for i in range(k)]
    return from_coordinates(pts, edges, (0, k // 3, (2 * k) // 3))


def prism():
    pts = []
    for r in (2.0, 1.0):
        for i in range(3):
            a = math.pi / 2 - 2 * math.pi * i / 3
            pts.append((r * math.cos(a), r * math.sin(a)))
    edges = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]
    return from_coordinates(pts, edges, (0, 1, 2))


def cube():
    pts = [(-2, 2), (2, 2), (2, -2), (-2, -2), (-1, 1), (1, 1), (1, -1), (-1, -1)]
    edges = [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4),
             (0, 4), (1, 5), (2, 6), (3, 7)]
    return from_coordinates(pts, edges, (0, 1, 2))


def octahedron():
    pts = [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]
    return _polytope(pts)


def dodecahedron():
    pts = []
    for i in range(5):
        a = math.radians(90 - 72 * i)
        pts.append((3 * math.cos(a), 3 * math.sin(a)))  # outer pentagon 0..4
    for j in range(10):
        a = math.radians(90 - 36 * j)
        pts.append((2 * math.cos(a), 2 * math.sin(a)))  # decagon 5..14
    for i in range(5):
        a = math.radians(90 - 72 * i - 36)
        pts.append((math.cos(a), math.sin(a)))  # inner pentagon 15..19
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + j, 5 + (j + 1) % 10) for j in range(10)]
    edges += [(15 + i, 15 + (i + 1) % 5) for i in range(5)]
    edges += [(i, 5 + 2 * i) for i in range(5)]
    edges += [(15 + i, 5 + 2 * i + 1) for i in range(5)]
    return from_coordinates(pts, edges, (0, 1, 3))


def icosahedron():
    pts = []
    for s1 in (-1, 1):
        for s2 in (-PHI, PHI):
            pts += [(0, s1, s2), (s1, s2, 0), (s2, 0, s1)]
    return _polytope(pts)


def stacked(n, seed=0):
    """Stacked triangulation on ``n`` vertices: starting from K4, insert each
    new vertex into a uniformly chosen inner face."""
    if n < 4:
        raise BadParams(f"stacked triangulation needs n >= 4, got {n}")
    rng = random.Random(seed)
    rot = [[1, 3, 2], [2, 3, 0], [0, 3, 1], [0, 1, 2]]
    # inner faces as (a, b, c) walked with the face on the left
    faces = [(0, 3, 1), (1, 3, 2), (2, 3, 0)]
    for w in range(4, n):
        a, b, c = faces.pop(rng.randrange(len(faces)))
        for x, prev in ((a, c), (b, a), (c, b)):
            # face left of prev->x->next lies clockwise after x->prev
            r = rot[x]
            r.insert(r.index(prev) + 1, w)
        rot.append([a, c, b])
        faces += [(a, b, w), (b, c, w), (c, a, w)]
    return build_graph(n, rot, (0, 1, 2))


def dual_of(G):
    """Plane dual of ``G`` with default roots."""
    return dual_graph(G)


def dual_via_suspension(G):
    return identify_roots(suspended_dual(suspend(G))[0]).graph


KINDS = ("k4", "wheel", "prism", "cube", "octahedron", "dodecahedron", "icosahedron", "stacked")


def gen(kind, n=None, seed=0):
    """Generate a graph of the given family; ``n`` is the rim size for wheels
    and the vertex count for stacked triangulations."""
    if kind == "k4":
        return k4()
    if kind == "wheel":
        if n is None:
            raise BadParams("wheel needs a rim size")
        return wheel(n)
    if kind == "stacked":
        if n is None:
            raise BadParams("stacked needs a vertex count")
        return stacked(n, seed)
    simple = {"prism": prism, "cube": cube, "octahedron": octahedron,
              "dodecahedron": dodecahedron, "icosahedron": icosahedron}
    if kind not in simple:
        raise BadParams(f"unknown kind {kind!r}")
    return simple[kind]()


def builtin_corpus(seed=0, stacked_count=100, max_n=50, duals=True):
    """Named corpus graphs, in a fixed order."""
    items = [("k4", k4())]
    items += [(f"wheel{k}", wheel(k)) for k in range(4, 11)]
    items += [("prism", prism()), ("cube", cube()), ("dodecahedron", dodecahedron()),
              ("icosahedron", icosahedron())]
    rng = random.Random(seed)
    for k in range(stacked_count):
        n = rng.randint(5, max_n)
        items.append((f"stacked{k:03d}_n{n}", stacked(n, seed=rng.randrange(2 ** 31))))
    if duals:
        items += [(f"{name}_dual", dual_of(G)) for name, G in list(items)]
    return items
