"""Embedded plane graphs as rotation systems.

Conventions used throughout the package:

* Edge ``e = (u, v)`` owns two darts: ``2e`` runs ``u -> v`` and ``2e + 1``
  runs ``v -> u``; ``d ^ 1`` is the twin of ``d``.
* ``rotation[v]`` lists the darts leaving ``v`` in clockwise order.
* Faces are traced with ``face_next(d) = cw_next(twin(d))``, which keeps the
  face on the left of every dart.  Inner faces are therefore walked
  counterclockwise and the outer face clockwise, so three roots "appear in
  clockwise order on the outer face" exactly when they appear in that cyclic
  order along the outer face walk.
* The dual dart of ``d`` runs from the face right of ``d`` to the face left
  of ``d``; with that choice ``d`` points to the right of its dual dart.
"""

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import (
    EulerViolation,
    NonSimple,
    PlanarGraphError,
    RootsNotClockwise,
    RootsNotOnOuterFace,
)


def twin(d):
    return d ^ 1


@dataclass(frozen=True)
class FaceDecomposition:
    faces: tuple
    outer_face: int
    dart_face: tuple


@dataclass(frozen=True, eq=False)
class EmbeddedPlanarGraph:
    n: int
    edges: tuple
    rotation: tuple
    roots: Optional[tuple]
    faces: tuple
    dart_face: tuple
    outer_face: int
    rot_pos: tuple

    @property
    def m(self):
        return len(self.edges)

    @property
    def f(self):
        return len(self.faces)

    def tail(self, d):
        return self.edges[d >> 1][d & 1]

    def head(self, d):
        return self.edges[d >> 1][1 - (d & 1)]

    def dart(self, u, v):
        """Dart from ``u`` to neighbour ``v``."""
        for d in self.rotation[u]:
            if self.head(d) == v:
                return d
        raise KeyError((u, v))

    def cw_next(self, d):
        rot = self.rotation[self.tail(d)]
        return rot[(self.rot_pos[d] + 1) % len(rot)]

    def ccw_next(self, d):
        rot = self.rotation[self.tail(d)]
        return rot[(self.rot_pos[d] - 1) % len(rot)]

    def face_next(self, d):
        return self.cw_next(d ^ 1)

    def neighbors(self, v):
        return [self.head(d) for d in self.rotation[v]]

    def degree(self, v):
        return len(self.rotation[v])

    def left_face(self, d):
        return self.dart_face[d]

    def right_face(self, d):
        return self.dart_face[d ^ 1]

    def face_vertices(self, fid):
        return [self.tail(d) for d in self.faces[fid]]

    def outer_walk(self, start=None):
        """Darts of the outer face in clockwise order, optionally starting at
        the dart leaving vertex ``start``."""
        walk = list(self.faces[self.outer_face])
        if start is not None:
            for k, d in enumerate(walk):
                if self.tail(d) == start:
                    return walk[k:] + walk[:k]
            raise KeyError(start)
        return walk

    def adjacency(self):
        return [set(self.neighbors(v)) for v in range(self.n)]

    def with_roots(self, roots):
        return build_graph(self.n, self.neighbor_lists(), roots, edges=self.edges)

    def neighbor_lists(self):
        return [self.neighbors(v) for v in range(self.n)]

    def __repr__(self):
        return f"EmbeddedPlanarGraph(n={self.n}, m={self.m}, f={self.f}, roots={self.roots})"


def _trace(n, edges, rotation, rot_pos):
    dart_face = [-1] * (2 * len(edges))
    faces = []

    def head(d):
        return edges[d >> 1][1 - (d & 1)]

    for v in range(n):
        for d0 in rotation[v]:
            if dart_face[d0] != -1:
                continue
            fid = len(faces)
            walk = []
            d = d0
            while dart_face[d] == -1:
                dart_face[d] = fid
                walk.append(d)
                t = d ^ 1
                rot = rotation[head(d)]
                d = rot[(rot_pos[t] + 1) % len(rot)]
            if d != d0:
                raise EulerViolation("face tracing did not close; rotation lists are inconsistent")
            faces.append(tuple(walk))
    return faces, dart_face


def _cyclic_in_order(seq, items):
    """True if ``items`` occur in ``seq`` (a cyclic sequence) in this cyclic order."""
    pos = []
    for x in items:
        if x not in seq:
            return False
        pos.append(seq.index(x))
    k = len(seq)
    a, b, c = pos
    return (b - a) % k < (c - a) % k


def build_graph(n, rotation, roots=None, *, edges=None, outer_face=None):
    """Validate a rotation system and return the embedded graph.

    ``rotation[v]`` lists the neighbours of ``v`` in clockwise order.  Edge ids
    follow ``edges`` when given, otherwise first appearance in the rotation
    lists.  With ``roots`` the outer face is the face along which the roots
    appear in clockwise order; otherwise ``outer_face`` (default 0) is used.
    """
    if n < 1 or len(rotation) != n:
        raise PlanarGraphError(f"expected {n} rotation lists, got {len(rotation)}")
    counts = {}
    for v, nbrs in enumerate(rotation):
        for u in nbrs:
            if not 0 <= u < n:
                raise PlanarGraphError(f"vertex {v} lists unknown neighbour {u}")
            counts[(v, u)] = counts.get((v, u), 0) + 1
    for (v, u), c in counts.items():
        if counts.get((u, v), 0) != c:
            raise EulerViolation(f"rotation lists disagree on edge {v}-{u}")
    for (v, u), c in counts.items():
        if u == v:
            raise NonSimple(f"loop at vertex {v}")
        if c > 1:
            raise NonSimple(f"parallel edges between {v} and {u}")

    if edges is None:
        eid = {}
        edge_list = []
        for v, nbrs in enumerate(rotation):
            for u in nbrs:
                key = (min(u, v), max(u, v))
                if key not in eid:
                    eid[key] = len(edge_list)
                    edge_list.append((v, u))
    else:
        edge_list = [tuple(e) for e in edges]
        eid = {}
        for k, (u, v) in enumerate(edge_list):
            key = (min(u, v), max(u, v))
            if key in eid:
                raise NonSimple(f"edge {u}-{v} listed twice")
            eid[key] = k
        if len(eid) * 2 != len(counts):
            raise EulerViolation("explicit edge list does not match rotation lists")
        for (v, u) in counts:
            if (min(u, v), max(u, v)) not in eid:
                raise EulerViolation(f"edge {v}-{u} missing from explicit edge list")

    m = len(edge_list)
    rot = []
    rot_pos = [0] * (2 * m)
    for v, nbrs in enumerate(rotation):
        darts = []
        for k, u in enumerate(nbrs):
            e = eid[(min(u, v), max(u, v))]
            d = 2 * e if edge_list[e][0] == v else 2 * e + 1
            rot_pos[d] = k
            darts.append(d)
        rot.append(tuple(darts))

    seen = [False] * n
    seen[0] = True
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u in rotation[v]:
            if not seen[u]:
                seen[u] = True
                queue.append(u)
    if not all(seen):
        raise EulerViolation("graph is not connected")

    faces, dart_face = _trace(n, edge_list, rot, rot_pos)
    if n - m + len(faces) != 2:
        raise EulerViolation(f"n - m + f = {n} - {m} + {len(faces)} != 2; not a planar embedding")

    if roots is not None:
        roots = tuple(int(r) for r in roots)
        if len(roots) != 3 or len(set(roots)) != 3 or not all(0 <= r < n for r in roots):
            raise RootsNotOnOuterFace(f"roots must be three distinct vertices, got {roots}")
        candidates = []
        for fid, walk in enumerate(faces):
            verts = [edge_list[d >> 1][d & 1] for d in walk]
            if all(r in verts for r in roots):
                candidates.append((fid, verts))
        if not candidates:
            raise RootsNotOnOuterFace(f"no face contains all roots {roots}")
        outer = None
        for fid, verts in candidates:
            if _cyclic_in_order(verts, roots):
                outer = fid
                break
        if outer is None:
            raise RootsNotClockwise(f"roots {roots} are not in clockwise order on any face")
    else:
        outer = 0 if outer_face is None else outer_face
        if not 0 <= outer < len(faces):
            raise PlanarGraphError(f"outer face {outer} out of range")

    return EmbeddedPlanarGraph(
        n=n,
        edges=tuple(edge_list),
        rotation=tuple(rot),
        roots=roots,
        faces=tuple(faces),
        dart_face=tuple(dart_face),
        outer_face=outer,
        rot_pos=tuple(rot_pos),
    )


def trace_faces(G):
    return FaceDecomposition(G.faces, G.outer_face, G.dart_face)


def default_roots(G):
    """Three vertices along the outer face in clockwise order."""
    verts = []
    for d in G.faces[G.outer_face]:
        v = G.tail(d)
        if v not in verts:
            verts.append(v)
    if len(verts) < 3:
        raise RootsNotOnOuterFace("outer face has fewer than three vertices")
    return tuple(verts[:3])


def with_default_roots(G):
    return build_graph(G.n, G.neighbor_lists(), default_roots(G), edges=G.edges)


# ---------------------------------------------------------------------------
# connectivity

def _articulation_free(n, adj, removed):
    """True iff the graph minus ``removed`` is connected and has no cut vertex."""
    verts = [v for v in range(n) if v != removed]
    if len(verts) <= 2:
        return True
    root = verts[0]
    disc = [-1] * n
    low = [0] * n
    disc[root] = 0
    timer = 1
    root_children = 0
    stack = [(root, -1, iter(adj[root]))]
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for u in it:
            if u == removed or u == parent:
                continue
            if disc[u] == -1:
                disc[u] = low[u] = timer
                timer += 1
                if v == root:
                    root_children += 1
                stack.append((u, v, iter(adj[u])))
                advanced = True
                break
            low[v] = min(low[v], disc[u])
        if advanced:
            continue
        stack.pop()
        if parent != -1:
            low[parent] = min(low[parent], low[v])
            if parent != root and low[v] >= disc[parent]:
                return False
    if timer != len(verts):
        return False
    return root_children <= 1


def check_three_connected(G):
    """True iff no set of at most two vertices disconnects ``G``.

    Removes each vertex in turn and looks for a cut vertex in the rest, which
    covers every vertex pair.
    """
    if G.n < 4:
        return False
    adj = [list(G.neighbors(v)) for v in range(G.n)]
    if not _articulation_free(G.n, adj, -1):
        return False
    return all(_articulation_free(G.n, adj, v) for v in range(G.n))


# ---------------------------------------------------------------------------
# suspension and duals

@dataclass(frozen=True, eq=False)
class Suspension:
    """A plane graph with one half-edge at each root, reaching into the outer face.

    The half-edge at ``roots[k]`` is dart ``2m + k``; it has a tail and no head.
    """

    base: EmbeddedPlanarGraph
    rotation: tuple
    rot_pos: tuple

    @property
    def roots(self):
        return self.base.roots

    @property
    def m(self):
        return self.base.m

    @property
    def n(self):
        return self.base.n

    @property
    def dart_count(self):
        return 2 * self.base.m + 3

    def is_half(self, d):
        return d >= 2 * self.base.m

    def half_dart(self, k):
        return 2 * self.base.m + k

    def tail(self, d):
        if d >= 2 * self.base.m:
            return self.base.roots[d - 2 * self.base.m]
        return self.base.tail(d)

    def head(self, d):
        if d >= 2 * self.base.m:
            return None
        return self.base.head(d)

    def cw_next(self, d):
        rot = self.rotation[self.tail(d)]
        return rot[(self.rot_pos[d] + 1) % len(rot)]

    def ccw_next(self, d):
        rot = self.rotation[self.tail(d)]
        return rot[(self.rot_pos[d] - 1) % len(rot)]


def suspend(G):
    """Add a half-edge at each root, between its two outer-boundary darts."""
    if G.roots is None:
        raise RootsNotOnOuterFace("graph has no roots")
    m = G.m
    rot = [list(r) for r in G.rotation]
    outer = G.outer_face
    for k, r in enumerate(G.roots):
        out = [d for d in G.rotation[r] if G.dart_face[d] == outer]
        if not out:
            raise RootsNotOnOuterFace(f"root {r} has no dart on the outer face")
        k_pos = rot[r].index(out[0])
        rot[r].insert(k_pos, 2 * m + k)
    rot_pos = [0] * (2 * m + 3)
    for v in range(G.n):
        for p, d in enumerate(rot[v]):
            rot_pos[d] = p
    return Suspension(G, tuple(tuple(r) for r in rot), tuple(rot_pos))


@dataclass(frozen=True, eq=False)
class DualCorrespondence:
    """Edge bijection between a suspension and its suspended dual.

    Primal edge ``e < m`` corresponds to dual edge ``e``; the half-edge at
    ``r_{k+1}`` corresponds to the dual triangle edge ``m + k``.  Dual vertex
    ``w`` is the inner face ``face_of[w]`` of the primal, or ``None`` for the
    three outer-region vertices ``b = (b1, b2, b3)``.
    """

    m: int
    face_of: tuple
    vertex_of_face: dict
    b: tuple

    def dual_edge(self, e):
        return e

    def primal_edge(self, e):
        return e

    def primal_dart(self, dual_dart):
        """(d*)* = twin(d): the dual of dual dart ``2e`` is primal dart ``2e+1``."""
        return dual_dart ^ 1


def outer_arcs(G):
    """Map each outer-face dart to the index (0, 1, 2) of the outer region it
    borders: the region opposite root ``r_{i}`` is ``b_i``, bounded by the
    clockwise arc from ``r_{i+1}`` to ``r_{i-1}``."""
    r = G.roots
    walk = G.outer_walk(start=r[0])
    arc_of = {}
    region = 2  # arc r1 -> r2 borders b3
    for d in walk:
        v = G.tail(d)
        if v == r[1]:
            region = 0  # arc r2 -> r3 borders b1
        elif v == r[2]:
            region = 1  # arc r3 -> r1 borders b2
        arc_of[d] = region
    return arc_of


def suspended_dual(Gs):
    """Suspended dual of a suspension, with its edge correspondence."""
    G = Gs.base
    m = G.m
    inner = [fid for fid in range(G.f) if fid != G.outer_face]
    vertex_of_face = {fid: k for k, fid in enumerate(inner)}
    nb = len(inner)
    b = (nb, nb + 1, nb + 2)
    arc_of = outer_arcs(G)

    def dual_vertex(d):
        fid = G.dart_face[d]
        if fid == G.outer_face:
            return b[arc_of[d]]
        return vertex_of_face[fid]

    dual_edges = []
    for e in range(m):
        d = 2 * e
        dual_edges.append((dual_vertex(d ^ 1), dual_vertex(d)))
    for k in range(3):
        # half-edge at r_i has b_{i+1} on its left, b_{i-1} on its right
        dual_edges.append((b[(k - 1) % 3], b[(k + 1) % 3]))

    rotation = []
    for fid in inner:
        walk = G.faces[fid]
        rotation.append([dual_vertex(d ^ 1) for d in reversed(walk)])
    walk = G.outer_walk(start=G.roots[0])
    for i in range(3):
        arc = [d for d in walk if arc_of[d] == i]
        nbrs = [dual_vertex(d ^ 1) for d in reversed(arc)]
        nbrs += [b[(i + 2) % 3], b[(i + 1) % 3]]
        rotation.append(nbrs)

    Gd = build_graph(nb + 3, rotation, b, edges=dual_edges)
    corr = DualCorrespondence(
        m=m,
        face_of=tuple(inner) + (None, None, None),
        vertex_of_face=vertex_of_face,
        b=b,
    )
    return suspend(Gd), corr


@dataclass(frozen=True, eq=False)
class IdentifiedDual:
    """Result of merging the three roots of a suspended dual into ``x``."""

    graph: EmbeddedPlanarGraph
    x: int
    vertex_map: tuple
    edge_map: dict  # suspended-dual edge id -> edge id in graph (loops dropped)


def identify_roots(Gds):
    """Merge the roots of a suspended dual into a single vertex ``x``.

    Edges among the roots become loops and are dropped; parallel edges keep
    the smallest id; half-edges are dropped.
    """
    Gd = Gds.base
    b = Gd.roots
    bset = set(b)
    x = min(b)
    vmap = []
    nxt = 0
    for v in range(Gd.n):
        if v in bset and v != x:
            vmap.append(None)
            continue
        vmap.append(nxt)
        nxt += 1
    for v in b:
        vmap[v] = vmap[x]
    new_n = nxt

    kept = {}
    new_edges = []
    edge_map = {}
    for e, (u, v) in enumerate(Gd.edges):
        nu, nv = vmap[u], vmap[v]
        if nu == nv:
            continue
        key = (min(nu, nv), max(nu, nv))
        if key not in kept:
            kept[key] = len(new_edges)
            new_edges.append((nu, nv))
        edge_map[e] = kept[key]

    def non_root_segment(i):
        rot = list(Gd.rotation[b[i]])
        start = rot.index(Gd.dart(b[i], b[(i + 1) % 3]))
        rot = rot[start + 1:] + rot[:start + 1]
        out = []
        for d in rot:
            if Gd.head(d) in bset:
                break
            out.append(d)
        return out

    rotation = [None] * new_n
    for v in range(Gd.n):
        if v in bset:
            continue
        rotation[vmap[v]] = [vmap[u] for u in Gd.neighbors(v)]
    xr = []
    for i in (0, 2, 1):
        xr.extend(vmap[Gd.head(d)] for d in non_root_segment(i))
    rotation[vmap[x]] = xr
    # drop duplicates created by parallel edges, keeping first occurrence
    for v in range(new_n):
        seen = set()
        rotation[v] = [u for u in rotation[v] if not (u in seen or seen.add(u))]
    G = build_graph(new_n, rotation, edges=new_edges)
    G = with_default_roots(G)
    return IdentifiedDual(G, vmap[x], tuple(vmap), edge_map)


def dual_graph(G, roots=True):
    """Ordinary plane dual: one vertex per face, edge ids shared with ``G``.

    Dual dart ``2e`` runs from the face right of primal dart ``2e`` to the face
    left of it.
    """
    edges = [(G.dart_face[2 * e + 1], G.dart_face[2 * e]) for e in range(G.m)]
    rotation = [[G.dart_face[d ^ 1] for d in reversed(walk)] for walk in G.faces]
    D = build_graph(G.f, rotation, edges=edges)
    return with_default_roots(D) if roots else D


# ---------------------------------------------------------------------------
# canonical form

def _code_from(G, d0, mirror):
    label = {G.tail(d0): 0}
    entry = {G.tail(d0): d0}
    order = [G.tail(d0)]
    code = []
    k = 0
    while k < len(order):
        v = order[k]
        k += 1
        rot = G.rotation[v]
        p = G.rot_pos[entry[v]]
        deg = len(rot)
        for j in range(deg):
            d = rot[(p - j) % deg] if mirror else rot[(p + j) % deg]
            u = G.head(d)
            if u not in label:
                label[u] = len(order)
                entry[u] = d ^ 1
                order.append(u)
            code.append(label[u])
        code.append(-1)
    return tuple(code)


def canonical_form(G, mirror=True):
    """Canonical code of the rotation system; equal codes iff the embedded
    graphs are isomorphic (up to reflection when ``mirror``)."""
    best = None
    for d in range(2 * G.m):
        for mir in ((False, True) if mirror else (False,)):
            c = _code_from(G, d, mir)
            if best is None or c < best:
                best = c
    return (G.n, G.m, best)


def induced_face_walk(G, inside, start):
    """Walk the face left of ``start`` in the subgraph induced by ``inside``.

    Yields darts until the walk returns to ``start``.
    """
    d = start
    limit = 2 * G.m + 1
    while limit:
        yield d
        t = d ^ 1
        nd = G.cw_next(t)
        while not inside[G.head(nd)]:
            nd = G.cw_next(nd)
        d = nd
        if d == start:
            return
        limit -= 1
    raise PlanarGraphError("induced face walk did not close")


def edge_list_adjacency(n, edge_pairs):
    adj = [[] for _ in range(n)]
    for k, (u, v) in enumerate(edge_pairs):
        adj[u].append((v, k))
        adj[v].append((u, k))
    return adj


def is_spanning_tree(n, edge_pairs):
    """True iff ``edge_pairs`` (sequence of (u, v)) is a spanning tree on ``n`` vertices."""
    if len(edge_pairs) != n - 1:
        return False
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for u, v in edge_pairs:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def max_degree(n, edge_pairs: Sequence):
    deg = [0] * n
    for u, v in edge_pairs:
        deg[u] += 1
        deg[v] += 1
    return max(deg) if deg else 0
