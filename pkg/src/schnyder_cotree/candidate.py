"""Candidate subgraphs H(G), H°(G*) and runtime checks of their properties."""

from collections import deque
from dataclasses import dataclass

from .errors import CycleInHZero, InconsistentInputs, NoWitness
from .planar import identify_roots
from .report import ValidationReport
from .schnyder import BLUE, GREEN, RED

RULES = ("H1", "H2", "H3", "H4")


@dataclass(frozen=True, eq=False)
class CandidateSubgraph:
    """Spanning subgraph of ``host``; ``tags[e]`` holds the rules admitting
    edge ``e`` (empty when ``e`` is not in the subgraph)."""

    host: object  # EmbeddedPlanarGraph
    tags: tuple
    x: int = None  # merged root vertex, for H° only

    def __contains__(self, e):
        return bool(self.tags[e])

    @property
    def edge_ids(self):
        return [e for e, t in enumerate(self.tags) if t]

    def degrees(self):
        deg = [0] * self.host.n
        for e in self.edge_ids:
            u, v = self.host.edges[e]
            deg[u] += 1
            deg[v] += 1
        return deg

    @property
    def max_degree(self):
        return max(self.degrees())

    def without(self, e):
        tags = list(self.tags)
        tags[e] = frozenset()
        return CandidateSubgraph(self.host, tuple(tags), self.x)

    def with_edge(self, e, tag="manual"):
        tags = list(self.tags)
        tags[e] = frozenset(tags[e] | {tag})
        return CandidateSubgraph(self.host, tuple(tags), self.x)

    def to_json(self):
        return {
            "n": self.host.n,
            "edges": [
                {"id": e, "u": self.host.edges[e][0], "v": self.host.edges[e][1],
                 "rules": sorted(self.tags[e])}
                for e in self.edge_ids
            ],
            "max_degree": self.max_degree,
        }


def _scan(Gs, v, start, stop):
    """Darts at ``v`` clockwise from ``start`` to ``stop``, both included."""
    rot = Gs.rotation[v]
    deg = len(rot)
    p = Gs.rot_pos[start]
    out = []
    for k in range(deg):
        d = rot[(p + k) % deg]
        out.append(d)
        if d == stop:
            break
    return out


def build_H(S, P, parents):
    """Edges admitted by H1 (green-blue), H2 (first incoming blue clockwise
    after the outgoing red edge), H3 (last incoming green clockwise before the
    outgoing red edge) or H4 (red parent edge)."""
    Gs = S.host
    G = Gs.base
    if P.color != GREEN or tuple(P.base_pair) != (G.roots[1], G.roots[2]):
        raise InconsistentInputs("H(G) needs the green-blue path partition")
    if len(P.index) != G.n or len(parents.parent_edge) != len(P.paths):
        raise InconsistentInputs("path partition or parents do not match the wood")
    tags = [set() for _ in range(G.m)]
    for e in range(G.m):
        if S.is_bidirected(e) and S.edge_colors(e) == {GREEN, BLUE}:
            tags[e].add("H1")
    for v in range(G.n):
        e_red = S.outgoing(v, RED)
        e_green = S.outgoing(v, GREEN)
        e_blue = S.outgoing(v, BLUE)
        # incoming blue edges sit clockwise between outgoing red and green
        for d in _scan(Gs, v, e_red, e_green):
            if S.incoming(d) == BLUE:
                tags[d >> 1].add("H2")
                break
        # incoming green edges sit clockwise between outgoing blue and red
        last = None
        for d in _scan(Gs, v, e_blue, e_red):
            if S.incoming(d) == GREEN:
                last = d
        if last is not None:
            tags[last >> 1].add("H3")
    for e in parents.parent_edge:
        if e >= 0 and S.has_color(e, RED):
            tags[e].add("H4")
    return CandidateSubgraph(G, tuple(frozenset(t) for t in tags))


def build_H_dual(Sd, Pd, parents_d):
    """H°(G*): the rules applied to the dual wood, then the dual roots merged.

    Returns ``(H°, H(G^σ*), identified)`` where ``identified`` carries G* and
    the edge map from the suspended dual.
    """
    Hs = build_H(Sd, Pd, parents_d)
    ident = identify_roots(Sd.host)
    Gstar = ident.graph
    tags = [set() for _ in range(Gstar.m)]
    for e, t in enumerate(Hs.tags):
        if t and e in ident.edge_map:
            tags[ident.edge_map[e]] |= t
    return CandidateSubgraph(Gstar, tuple(frozenset(t) for t in tags), ident.x), Hs, ident


def check_max_degree(H, bound=5):
    rep = ValidationReport(f"max degree <= {bound}")
    deg = H.degrees()
    for v, k in enumerate(deg):
        if k > bound:
            inc = []
            for e in H.edge_ids:
                if v in H.host.edges[e]:
                    inc.append(f"{e}:{'/'.join(sorted(H.tags[e]))}")
            rep.add("degree", v, f"degree {k}; edges {', '.join(inc)}")
    return rep


def check_dual_complement(H, Hd, corr):
    """Every edge outside H has its dual in H°, and vice versa.

    ``corr`` maps primal edge ids to edge ids of G* (a dict or sequence).
    """
    rep = ValidationReport("dual complement")
    back = {corr[e]: e for e in range(H.host.m)}
    for e in range(H.host.m):
        if e not in H and corr[e] not in Hd:
            rep.add("primal", e, f"edge {e} and its dual {corr[e]} both missing")
    for e2 in range(Hd.host.m):
        if e2 not in Hd and back[e2] not in H:
            rep.add("dual", e2, f"dual edge {e2} and its primal {back[e2]} both missing")
    return rep


def _find_cycle(n, edge_pairs, ids):
    """A cycle (list of ids) in the given edges, or None."""
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    adj = [[] for _ in range(n)]
    for (u, v), e in zip(edge_pairs, ids):
        ru, rv = find(u), find(v)
        if ru == rv:
            # path u -> v in the forest built so far, plus e
            prev = {u: None}
            queue = deque([u])
            while queue:
                a = queue.popleft()
                for b, f in adj[a]:
                    if b not in prev:
                        prev[b] = (a, f)
                        queue.append(b)
            cyc = [e]
            a = v
            while prev[a] is not None:
                a, f = prev[a]
                cyc.append(f)
            return cyc
        parent[ru] = rv
        adj[u].append((v, e))
        adj[v].append((u, e))
    return None


def h_zero(H, Hd, corr):
    """Edges of H whose duals are not in H°; must form a forest."""
    ids = [e for e in H.edge_ids if corr[e] not in Hd]
    cyc = _find_cycle(H.host.n, [H.host.edges[e] for e in ids], ids)
    if cyc is not None:
        raise CycleInHZero(f"H0 contains the cycle {cyc}", cyc)
    return frozenset(ids)


def cycle_witness(H, Hd, corr, cycle):
    """An edge of ``cycle`` (edge ids of H) whose dual lies in ``Hd``."""
    for e in cycle:
        if e not in H:
            raise InconsistentInputs(f"edge {e} of the cycle is not in H")
    for e in cycle:
        if corr[e] in Hd:
            return e
    raise NoWitness(f"no edge of cycle {list(cycle)} has its dual in the other graph", list(cycle))


def fundamental_cycles(H):
    """Fundamental cycles of H with respect to a BFS spanning forest."""
    G = H.host
    adj = [[] for _ in range(G.n)]
    for e in H.edge_ids:
        u, v = G.edges[e]
        adj[u].append((v, e))
        adj[v].append((u, e))
    parent = [None] * G.n
    depth = [-1] * G.n
    tree = set()
    for r in range(G.n):
        if depth[r] != -1:
            continue
        depth[r] = 0
        queue = deque([r])
        while queue:
            a = queue.popleft()
            for b, e in adj[a]:
                if depth[b] == -1:
                    depth[b] = depth[a] + 1
                    parent[b] = (a, e)
                    tree.add(e)
                    queue.append(b)
    cycles = []
    for e in H.edge_ids:
        if e in tree:
            continue
        u, v = G.edges[e]
        cyc = [e]
        while u != v:
            if depth[u] >= depth[v]:
                u, f = parent[u]
            else:
                v, f = parent[v]
            cyc.append(f)
        cycles.append(cyc)
    return cycles


def check_connected(H):
    G = H.host
    adj = [[] for _ in range(G.n)]
    for e in H.edge_ids:
        u, v = G.edges[e]
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    queue = deque([0])
    while queue:
        a = queue.popleft()
        for b in adj[a]:
            if b not in seen:
                seen.add(b)
                queue.append(b)
    return len(seen) == G.n
