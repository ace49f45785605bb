"""Brute-force references for small instances.

Spanning-tree counts via the matrix-tree theorem, exhaustive spanning tree
and Schnyder wood enumeration, and the best achievable tree/co-tree degree
pair (reported only, never asserted).
"""

from itertools import combinations

from .errors import BadParams, CapExceeded
from .planar import dual_graph, max_degree
from .schnyder import SchnyderWood, validate_wood

WOOD_EDGE_LIMIT = 12


def bareiss_det(M):
    """Exact determinant of an integer matrix by fraction-free elimination."""
    A = [list(row) for row in M]
    n = len(A)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for r in range(k + 1, n):
                if A[r][k]:
                    A[k], A[r] = A[r], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def count_spanning_trees(G):
    """Number of spanning trees: determinant of the Laplacian minus row/column 0."""
    n = G.n
    L = [[0] * n for _ in range(n)]
    for u, v in G.edges:
        L[u][u] += 1
        L[v][v] += 1
        L[u][v] -= 1
        L[v][u] -= 1
    return bareiss_det([row[1:] for row in L[1:]])


def _connected(n, edges, alive):
    adj = [[] for _ in range(n)]
    for e, (u, v) in enumerate(edges):
        if alive[e]:
            adj[u].append(v)
            adj[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        a = stack.pop()
        for b in adj[a]:
            if b not in seen:
                seen.add(b)
                stack.append(b)
    return len(seen) == n


def enumerate_spanning_trees(G, cap):
    """Yield every spanning tree (a frozenset of edge ids) exactly once.

    Include/exclude recursion over edge ids: an edge is included unless it
    closes a cycle, excluded unless that disconnects what remains.
    """
    total = count_spanning_trees(G)
    if total > cap:
        raise CapExceeded(f"{total} spanning trees exceed the cap {cap}")
    n, m, edges = G.n, G.m, G.edges
    alive = [True] * m
    chosen = []
    comp = list(range(n))

    def find(a):
        while comp[a] != a:
            a = comp[a]
        return a

    def rec(e):
        if len(chosen) == n - 1:
            yield frozenset(chosen)
            return
        if e == m:
            return
        u, v = edges[e]
        ru, rv = find(u), find(v)
        if ru != rv:
            comp[ru] = rv
            chosen.append(e)
            yield from rec(e + 1)
            chosen.pop()
            comp[ru] = ru
        alive[e] = False
        if _connected(n, edges, alive):
            yield from rec(e + 1)
        alive[e] = True

    yield from rec(0)


def _vertex_options(Gs, v):
    """Per vertex, every way to pick outgoing darts coloured 1, 2, 3 in
    clockwise order (a root's half-edge is forced to its own colour)."""
    rot = Gs.rotation[v]
    deg = len(rot)
    half = [p for p, d in enumerate(rot) if Gs.is_half(d)]
    out = []
    for trip in combinations(range(deg), 3):
        if half and half[0] not in trip:
            continue
        for shift in range(3):
            p = trip[shift:] + trip[:shift]  # red, green, blue positions
            if half and p[Gs.roots.index(v)] != half[0]:
                continue
            out.append(tuple(rot[q] for q in p))
    return out


def enumerate_woods(Gs, cap):
    """Yield every Schnyder wood of the suspension ``Gs`` exactly once."""
    if Gs.m > WOOD_EDGE_LIMIT:
        raise BadParams(f"wood enumeration is limited to {WOOD_EDGE_LIMIT} edges, got {Gs.m}")
    n = Gs.n
    opts = [_vertex_options(Gs, v) for v in range(n)]
    col = [0] * Gs.dart_count
    found = 0

    def edge_ok(e):
        a, b = col[2 * e], col[2 * e + 1]
        return (a or b) and a != b

    def rec(v):
        nonlocal found
        if v == n:
            S = SchnyderWood(Gs, tuple(col))
            if validate_wood(Gs, S).ok:
                found += 1
                if found > cap:
                    raise CapExceeded(f"more than {cap} Schnyder woods")
                yield S
            return
        for choice in opts[v]:
            for c, d in enumerate(choice, start=1):
                col[d] = c
            good = True
            for d in Gs.rotation[v]:
                if Gs.is_half(d):
                    continue
                if Gs.head(d) <= v and not edge_ok(d >> 1):
                    good = False
                    break
            if good:
                yield from rec(v + 1)
            for d in choice:
                col[d] = 0

    yield from rec(0)


def best_degree_pair(G, cap, dual=None):
    """Best ``(max degree of T, max degree of its co-tree)`` over all spanning
    trees, minimising the larger value, then the sum, then the tree degree."""
    if dual is None:
        dual = dual_graph(G, roots=False)
    best = None
    for T in enumerate_spanning_trees(G, cap):
        a = max_degree(G.n, [G.edges[e] for e in T])
        b = max_degree(dual.n, [dual.edges[e] for e in range(G.m) if e not in T])
        key = (max(a, b), a + b, a)
        if best is None or key < best[0]:
            best = (key, (a, b))
    return best[1]
