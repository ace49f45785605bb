"""Ordered path partitions compatible with a Schnyder wood."""

import heapq
from dataclasses import dataclass

from .errors import CyclicConstraint, ParentEdgeAlarm, UnknownVertex
from .planar import induced_face_walk
from .report import ValidationReport
from .schnyder import GREEN, pred, succ


@dataclass(frozen=True)
class OrderedPathPartition:
    color: int  # base pair is (r_color, r_{color+1})
    base_pair: tuple
    paths: tuple  # each path starts at its color-outgoing end
    index: tuple  # vertex -> path position

    @property
    def s(self):
        return len(self.paths) - 1

    def to_json(self):
        return {"base_pair": list(self.base_pair), "color": self.color,
                "paths": [list(p) for p in self.paths]}


def vertex_index(P, v):
    if not isinstance(v, int) or not 0 <= v < len(P.index):
        raise UnknownVertex(v)
    return P.index[v]


def _path_components(S, i):
    """Maximal i-(i+1)-coloured paths, each listed from its i-outgoing end."""
    Gs = S.host
    G = Gs.base
    pair = {i, succ(i)}
    path_nbrs = [[] for _ in range(G.n)]
    for e in range(G.m):
        if S.is_bidirected(e) and S.edge_colors(e) == pair:
            u, v = G.edges[e]
            path_nbrs[u].append(v)
            path_nbrs[v].append(u)
    seen = [False] * G.n
    paths = []
    for v0 in range(G.n):
        if seen[v0]:
            continue
        # collect the component
        comp = [v0]
        seen[v0] = True
        k = 0
        while k < len(comp):
            for u in path_nbrs[comp[k]]:
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
            k += 1
        edges_in = sum(len(path_nbrs[v]) for v in comp) // 2
        if edges_in != len(comp) - 1 or any(len(path_nbrs[v]) > 2 for v in comp):
            raise CyclicConstraint(f"i-(i+1)-coloured component at {v0} is not a path")
        # start where the outgoing i-edge leaves the component
        start = None
        for v in comp:
            d = S.outgoing(v, i)
            if Gs.is_half(d) or Gs.head(d) not in path_nbrs[v]:
                start = v
                break
        if start is None:
            raise CyclicConstraint(f"component at {v0} has no {i}-outgoing end")
        seq = [start]
        while True:
            d = S.outgoing(seq[-1], succ(i))
            if Gs.is_half(d):
                break
            w = Gs.head(d)
            if w not in path_nbrs[seq[-1]]:
                break
            seq.append(w)
        if len(seq) != len(comp):
            raise CyclicConstraint(f"component at {v0} is not traversed by colour {succ(i)}")
        paths.append(seq)
    return paths


def compatible_opp(S, i=GREEN):
    """Ordered path partition with base pair ``(r_i, r_{i+1})``.

    The paths are the maximal ``i``-``(i+1)``-coloured paths; they are ordered by
    a linear extension of the order in which colour ``i`` and ``i+1`` edges
    point backwards and colour ``i+2`` edges point forwards.  Ties go to the
    path with the smallest vertex id.
    """
    Gs = S.host
    G = Gs.base
    paths = _path_components(S, i)
    comp = [0] * G.n
    for k, p in enumerate(paths):
        for v in p:
            comp[v] = k
    succs = [set() for _ in paths]
    indeg = [0] * len(paths)
    back = {i, succ(i)}
    for d in range(2 * G.m):
        c = S.colors[d]
        if not c:
            continue
        a, b = comp[G.tail(d)], comp[G.head(d)]
        if a == b:
            if S.is_bidirected(d >> 1) and S.edge_colors(d >> 1) == back:
                continue
            raise CyclicConstraint(f"edge {d >> 1} closes a cycle inside path {a}")
        first, second = (b, a) if c in back else (a, b)
        if second not in succs[first]:
            succs[first].add(second)
            indeg[second] += 1
    heap = [(min(p), k) for k, p in enumerate(paths) if indeg[k] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        _, k = heapq.heappop(heap)
        order.append(k)
        for k2 in succs[k]:
            indeg[k2] -= 1
            if indeg[k2] == 0:
                heapq.heappush(heap, (min(paths[k2]), k2))
    if len(order) != len(paths):
        raise CyclicConstraint("path order constraints contain a cycle")
    ordered = tuple(tuple(paths[k]) for k in order)
    index = [0] * G.n
    for t, p in enumerate(ordered):
        for v in p:
            index[v] = t
    r = G.roots
    return OrderedPathPartition(i, (r[i - 1], r[succ(i) - 1]), ordered, tuple(index))


def _base_arc(G, rj, rj1):
    """Darts of the clockwise outer path from ``rj`` to ``rj1``."""
    walk = G.outer_walk(start=rj)
    arc = []
    for d in walk:
        arc.append(d)
        if G.head(d) == rj1:
            return arc
    return arc


def contour(G, inside, arc):
    """Vertices of the clockwise walk from ``r_{j+1}`` to ``r_j`` on the outer
    face of the subgraph induced by ``inside``; ``arc`` is the base path's
    darts.  Returns None when the walk never comes back to the base path."""
    verts = [G.head(arc[-1])]
    walk = induced_face_walk(G, inside, arc[-1])
    next(walk)
    for d in walk:
        if d == arc[0]:
            return verts
        verts.append(G.head(d))
    # the walk closed on arc[-1]; fine only for a one-edge base path
    return verts if arc[0] == arc[-1] else None


def contours_from_scratch(G, P):
    arc = _base_arc(G, *P.base_pair)
    inside = [False] * G.n
    out = []
    for p in P.paths:
        for v in p:
            inside[v] = True
        out.append(contour(G, inside, arc))
    return out


def contours_incremental(G, P):
    """Contours obtained by splicing each new path into the previous contour
    between its first and last contour neighbours."""
    adj = G.adjacency()
    arc = _base_arc(G, *P.base_pair)
    first = [G.head(arc[-1])] + [G.tail(d) for d in reversed(arc)]
    out = [first]
    cur = first
    for p in P.paths[1:]:
        pset = set(p)
        touch = [k for k, v in enumerate(cur) if adj[v] & pset]
        if not touch:
            out.append(None)
            break
        a, b = touch[0], touch[-1]
        seq = list(p)
        if cur[a] not in adj[seq[0]]:
            seq.reverse()
        cur = cur[:a + 1] + seq + cur[b:]
        out.append(cur)
    return out


def validate_opp(G, P):
    """Check the partition, induced-path and four contour conditions."""
    rep = ValidationReport("ordered path partition")
    adj = G.adjacency()
    count = [0] * G.n
    for p in P.paths:
        for v in p:
            if 0 <= v < G.n:
                count[v] += 1
    for v in range(G.n):
        if count[v] != 1:
            rep.add("partition", v, f"vertex appears in {count[v]} paths")
    if not rep.ok:
        return rep
    for t, p in enumerate(P.paths):
        pset = set(p)
        inner = sum(len(adj[v] & pset) for v in p) // 2
        if any(p[k + 1] not in adj[p[k]] for k in range(len(p) - 1)) or inner != len(p) - 1:
            rep.add("induced_path", t, f"{list(p)} is not an induced path")
    j = P.color
    rj, rj1, rj2 = G.roots[j - 1], G.roots[succ(j) - 1], G.roots[pred(j) - 1]
    if (rj, rj1) != tuple(P.base_pair):
        rep.add("cond1", 0, f"base pair {P.base_pair} != {(rj, rj1)}")
    arc = _base_arc(G, rj, rj1)
    base = [rj] + [G.head(d) for d in arc]
    if list(P.paths[0]) != base and list(P.paths[0]) != base[::-1]:
        rep.add("cond1", 0, f"P0 = {list(P.paths[0])}, expected outer path {base}")
    if list(P.paths[-1]) != [rj2]:
        rep.add("cond1", P.s, f"last path {list(P.paths[-1])} != [{rj2}]")
    inside = [False] * G.n
    for t in range(P.s):
        for v in P.paths[t]:
            inside[v] = True
        for v in P.paths[t]:
            if all(inside[u] for u in adj[v]):
                rep.add("cond2", (t, v), "no neighbour outside V_t")
        C = contour(G, inside, arc)
        if C is None or len(set(C)) != len(C):
            rep.add("cond3", t, f"contour {C} is not a path")
            continue
        nxt = set(P.paths[t + 1])
        for v in C:
            if len(adj[v] & nxt) > 1:
                rep.add("cond4", (t, v), f"{len(adj[v] & nxt)} neighbours in P_{t + 1}")
    return rep


@dataclass(frozen=True)
class ParentAssignment:
    parent_path: tuple  # per path index; -1 for P0
    parent_edge: tuple  # per path index; -1 for P0


def parent_edges(S, P):
    """Parent path (latest earlier adjacent path) and one parent edge per path.

    Among several edges to the parent path the edge whose endpoint comes
    first along ``P_i`` wins, then the endpoint's position along the parent
    path, then the smaller edge id.
    """
    Gs = S.host
    G = Gs.base
    i = P.color
    pos = [0] * G.n
    for p in P.paths:
        for k, v in enumerate(p):
            pos[v] = k
    ppath = [-1]
    pedge = [-1]
    for t in range(1, len(P.paths)):
        cands = []
        for v in P.paths[t]:
            for d in G.rotation[v]:
                w = G.head(d)
                if P.index[w] < t:
                    cands.append((P.index[w], v, w, d))
        if not cands:
            raise ParentEdgeAlarm(f"path {t} has no earlier neighbour")
        j = max(c[0] for c in cands)
        best = min((pos[v], pos[w], d >> 1, d) for jj, v, w, d in cands if jj == j)
        d = best[3]
        # at its endpoint in P_t the edge is incoming colour i+2 or outgoing i or i+1
        ok = S.colors[d ^ 1] == pred(i) or S.colors[d] in (i, succ(i))
        if not ok:
            raise ParentEdgeAlarm(f"parent edge {d >> 1} of path {t} has the wrong colours")
        ppath.append(j)
        pedge.append(d >> 1)
    return ParentAssignment(tuple(ppath), tuple(pedge))


def check_index_monotonicity(S, P):
    """Along every direction of colour ``i+2`` the path index increases,
    along ``i`` and ``i+1`` directions of other edges it decreases, and
    ``i``-``(i+1)``-coloured edges stay inside one path."""
    G = S.host.base
    i = P.color
    pair = {i, succ(i)}
    rep = ValidationReport("index monotonicity")
    for e in range(G.m):
        u, v = G.edges[e]
        if S.is_bidirected(e) and S.edge_colors(e) == pair:
            if P.index[u] != P.index[v]:
                rep.add("equal", e, f"{i}-{succ(i)} edge joins paths {P.index[u]} and {P.index[v]}")
            continue
        for d in (2 * e, 2 * e + 1):
            c = S.colors[d]
            a, b = P.index[G.tail(d)], P.index[G.head(d)]
            if c == pred(i) and not a < b:
                rep.add("increase", e, f"colour {c} goes from index {a} to {b}")
            elif c in pair and not a > b:
                rep.add("decrease", e, f"colour {c} goes from index {a} to {b}")
    return rep
