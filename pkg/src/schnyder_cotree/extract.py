"""Tree/co-tree extraction and the end-to-end certified pipeline."""

import heapq
from dataclasses import dataclass, field

from .candidate import (
    build_H, build_H_dual, check_connected, check_dual_complement, check_max_degree,
    cycle_witness, fundamental_cycles, h_zero,
)
from .dual_wood import check_crossing_vertices, completion, dual_wood
from .errors import (
    ComplementAlarm, CrossingAlarm, DegreeAlarm, HNotConnected, InconsistentInputs,
    NotATree, OppAlarm, VerifierAlarm, WoodAlarm,
)
from .opp import check_index_monotonicity, compatible_opp, parent_edges, validate_opp
from .planar import dual_graph, is_spanning_tree, max_degree, suspend
from .schnyder import compute_wood, validate_wood

W_FOREST, W_CANDIDATE, W_OUTSIDE = 0, 1, 2  # weight 2 stands in for infinity


def edge_weights(G, H, H0):
    return [W_FOREST if e in H0 else W_CANDIDATE if e in H else W_OUTSIDE for e in range(G.m)]


def kruskal(G, weights):
    """Minimum spanning tree by sorted edges and union-find; ties by edge id."""
    parent = list(range(G.n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    T = []
    for e in sorted(range(G.m), key=lambda e: (weights[e], e)):
        u, v = G.edges[e]
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            T.append(e)
    return sorted(T)


def prim_weight(G, weights):
    """Total weight of a minimum spanning tree, computed by Prim."""
    adj = [[] for _ in range(G.n)]
    for e, (u, v) in enumerate(G.edges):
        adj[u].append((weights[e], v))
        adj[v].append((weights[e], u))
    seen = [False] * G.n
    heap = [(0, 0)]
    total = 0
    while heap:
        w, v = heapq.heappop(heap)
        if seen[v]:
            continue
        seen[v] = True
        total += w
        for item in adj[v]:
            if not seen[item[1]]:
                heapq.heappush(heap, item)
    return total


def extract_tree(G, H, H0):
    """Minimum spanning tree under weights 0 (H0), 1 (rest of H), inf (rest of G)."""
    if not check_connected(H):
        raise HNotConnected("H(G) does not connect all vertices")
    weights = edge_weights(G, H, H0)
    T = kruskal(G, weights)
    if any(weights[e] == W_OUTSIDE for e in T):
        raise HNotConnected("the spanning tree needs an edge outside H(G)")
    total = sum(weights[e] for e in T)
    if total != prim_weight(G, weights):
        raise VerifierAlarm(f"Kruskal weight {total} differs from Prim")
    return frozenset(T)


def co_tree(G, T, corr=None, dual=None):
    """Duals of the non-tree edges; must be a spanning tree of the dual.

    ``corr`` maps primal edge ids to dual edge ids (identity by default) and
    ``dual`` is the dual graph those ids refer to.
    """
    T = frozenset(T)
    if not is_spanning_tree(G.n, [G.edges[e] for e in T]):
        raise InconsistentInputs("T is not a spanning tree of G")
    if dual is None:
        dual = dual_graph(G, roots=False)
    if corr is None:
        corr = range(G.m)
    C = frozenset(corr[e] for e in range(G.m) if e not in T)
    if not is_spanning_tree(dual.n, [dual.edges[e] for e in C]):
        raise NotATree(f"co-tree of {sorted(T)} is not a spanning tree", sorted(C))
    return C


@dataclass(frozen=True, eq=False)
class SpanningTreePair:
    tree: frozenset
    co_tree: frozenset
    max_deg_tree: int
    max_deg_cotree: int
    h0_in_tree: bool
    certificates: dict = field(default_factory=dict)

    def to_json(self):
        return {
            "tree": sorted(self.tree),
            "co_tree": sorted(self.co_tree),
            "max_deg_tree": self.max_deg_tree,
            "max_deg_cotree": self.max_deg_cotree,
            "h0_in_tree": self.h0_in_tree,
            "certificates": dict(sorted(self.certificates.items())),
        }


@dataclass(eq=False)
class PipelineResult:
    """Every intermediate object of one run, plus the per-claim verdicts."""

    G: object
    Gs: object = None
    S: object = None
    Sd: object = None
    corr: object = None
    completion: object = None
    opp: object = None
    parents: object = None
    opp_dual: object = None
    parents_dual: object = None
    H: object = None
    H_dual: object = None
    H_suspended: object = None
    dual: object = None  # IdentifiedDual: G* with the merged root x
    h0: frozenset = None
    pair: SpanningTreePair = None
    certificates: dict = field(default_factory=dict)
    reports: dict = field(default_factory=dict)

    @property
    def ok(self):
        return all(self.certificates.values())


def _certify(res, name, report, alarm, strict):
    res.reports[name] = report
    res.certificates[name] = report.ok
    if strict and not report.ok:
        raise alarm(str(report), report)


def run_pipeline(G, *, strict=True):
    """Suspend, build both woods, path partitions, H, H°, H0 and the tree pair.

    With ``strict`` the first failed certificate raises its alarm; otherwise
    verdicts are collected in ``certificates`` and the run continues where
    possible.
    """
    res = PipelineResult(G)
    res.Gs = Gs = suspend(G)
    res.S = S = compute_wood(Gs)
    _certify(res, "wood", validate_wood(Gs, S), WoodAlarm, strict)
    res.Sd, res.corr = Sd, corr = dual_wood(S)
    _certify(res, "dual_wood", validate_wood(Sd.host, Sd), WoodAlarm, strict)
    res.completion = completion(Gs, S, Sd, corr)
    _certify(res, "crossings", check_crossing_vertices(res.completion), CrossingAlarm, strict)

    res.opp = P = compatible_opp(S)
    res.parents = parent_edges(S, P)
    res.opp_dual = Pd = compatible_opp(Sd)
    res.parents_dual = parent_edges(Sd, Pd)
    rep = validate_opp(G, P)
    rep.violations += validate_opp(Sd.host.base, Pd).violations
    _certify(res, "opp", rep, OppAlarm, strict)
    rep = check_index_monotonicity(S, P)
    rep.violations += check_index_monotonicity(Sd, Pd).violations
    _certify(res, "monotonicity", rep, OppAlarm, strict)

    res.H = H = build_H(S, P, res.parents)
    res.H_dual, res.H_suspended, res.dual = Hd, _, ident = build_H_dual(Sd, Pd, res.parents_dual)
    emap = [ident.edge_map[e] for e in range(G.m)]
    rep = check_max_degree(H)
    rep.violations += check_max_degree(Hd).violations
    if Hd.degrees()[Hd.x] > 3:
        rep.add("root", Hd.x, f"merged root has degree {Hd.degrees()[Hd.x]}")
    _certify(res, "degree_bound", rep, DegreeAlarm, strict)
    _certify(res, "dual_complement", check_dual_complement(H, Hd, emap), ComplementAlarm, strict)

    try:
        res.h0 = h_zero(H, Hd, emap)
        for cyc in fundamental_cycles(H):
            cycle_witness(H, Hd, emap, cyc)
        res.certificates["cycle_witness"] = True
    except VerifierAlarm:
        res.certificates["cycle_witness"] = False
        if strict:
            raise
    connected = check_connected(H)
    res.certificates["h_connected"] = connected
    if not connected:
        if strict:
            raise HNotConnected("H(G) does not connect all vertices")
        return res
    if res.h0 is None:
        return res

    T = extract_tree(G, H, res.h0)
    C = co_tree(G, T, emap, ident.graph)
    dT = max_degree(G.n, [G.edges[e] for e in T])
    dC = max_degree(ident.graph.n, [ident.graph.edges[e] for e in C])
    checks = {
        "tree_in_H": all(e in H for e in T),
        "h0_in_tree": res.h0 <= T,
        "cotree_in_H_dual": all(e in Hd for e in C),
        "degree_tree": dT <= 5,
        "degree_cotree": dC <= 5,
    }
    res.certificates["theorem"] = all(checks.values())
    res.pair = SpanningTreePair(T, C, dT, dC, checks["h0_in_tree"], dict(res.certificates, **checks))
    if strict and not res.certificates["theorem"]:
        failed = [k for k, v in checks.items() if not v]
        raise DegreeAlarm(f"theorem checks failed: {failed}", res.pair)
    return res


def verify_theorem(G):
    """Run the whole pipeline on ``G`` and return the certified tree pair."""
    return run_pipeline(G, strict=True).pair
