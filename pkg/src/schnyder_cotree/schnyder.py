"""Schnyder woods of suspensions: construction, validation, colour trees.

A wood is stored per dart of the suspension: ``colors[d]`` is the colour of
the direction along dart ``d`` or 0 when the edge is not directed that way.
Colours are 1 (red), 2 (green), 3 (blue) with cyclic successor ``succ``.
"""

from collections import deque
from dataclasses import dataclass

from .completion import HALF, STUB, build_skeleton
from .errors import NotThreeConnected, WoodAlarm
from .planar import check_three_connected, suspended_dual
from .report import ValidationReport

RED, GREEN, BLUE = 1, 2, 3
COLOR_NAMES = {RED: "red", GREEN: "green", BLUE: "blue"}


def succ(i):
    return i % 3 + 1


def pred(i):
    return (i + 1) % 3 + 1


@dataclass(frozen=True, eq=False)
class SchnyderWood:
    host: object  # Suspension
    colors: tuple

    def kind(self, e):
        a, b = self.colors[2 * e], self.colors[2 * e + 1]
        if a and b:
            return "bi"
        if a:
            return "uni_uv"
        if b:
            return "uni_vu"
        return "none"

    def is_bidirected(self, e):
        return bool(self.colors[2 * e] and self.colors[2 * e + 1])

    def edge_colors(self, e):
        return {c for c in (self.colors[2 * e], self.colors[2 * e + 1]) if c}

    def has_color(self, e, i):
        return i in self.edge_colors(e)

    def outgoing(self, v, i):
        """Dart leaving ``v`` with colour ``i`` (first found), or None."""
        for d in self.host.rotation[v]:
            if self.colors[d] == i:
                return d
        return None

    def incoming(self, d):
        """Colour of the direction entering ``tail(d)`` along ``twin(d)``."""
        if self.host.is_half(d):
            return 0
        return self.colors[d ^ 1]

    def __eq__(self, other):
        return isinstance(other, SchnyderWood) and self.colors == other.colors

    def __hash__(self):
        return hash(self.colors)


def validate_wood(Gs, S):
    """Check every condition of a Schnyder wood; the report is empty iff all hold."""
    rep = ValidationReport("schnyder wood")
    G = Gs.base
    m = G.m
    col = S.colors
    if len(col) != Gs.dart_count:
        rep.add("shape", None, f"expected {Gs.dart_count} dart colours, got {len(col)}")
        return rep
    for d, c in enumerate(col):
        if c not in (0, 1, 2, 3):
            rep.add("cond1.color", d, f"invalid colour {c}")
    # condition 1
    for e in range(m):
        a, b = col[2 * e], col[2 * e + 1]
        if not a and not b:
            rep.add("cond1.unoriented", e, "edge has no direction")
        elif a and b and a == b:
            rep.add("cond1.bicolor", e, f"bidirected edge with equal colours {a}")
    # condition 2
    for k in range(3):
        c = col[2 * m + k]
        if c != k + 1:
            rep.add("cond2.half_edge", G.roots[k], f"half-edge coloured {c}, expected {k + 1}")
    # condition 3
    for v in range(G.n):
        rot = Gs.rotation[v]
        deg = len(rot)
        outs = {}
        bad = False
        for p, d in enumerate(rot):
            c = col[d]
            if c:
                if c in outs:
                    rep.add("cond3.outgoing", v, f"two outgoing edges of colour {c}")
                    bad = True
                outs[c] = p
        for c in (1, 2, 3):
            if c not in outs:
                rep.add("cond3.outgoing", v, f"no outgoing edge of colour {c}")
                bad = True
        if bad:
            continue
        p1, p2, p3 = outs[1], outs[2], outs[3]
        if not (p2 - p1) % deg < (p3 - p1) % deg:
            rep.add("cond3.order", v, "outgoing red, green, blue not in clockwise order")
            continue
        for p, d in enumerate(rot):
            if Gs.is_half(d):
                continue
            i = col[d ^ 1]
            if not i:
                continue
            start, end = outs[succ(i)], outs[pred(i)]
            if (p - start) % deg > (end - start) % deg:
                rep.add("cond3.sector", v,
                        f"incoming colour {i} on edge {d >> 1} outside its sector")
    # condition 4
    for fid, walk in enumerate(G.faces):
        if fid == G.outer_face:
            continue
        for c in (1, 2, 3):
            if all(col[d] == c for d in walk) or all(col[d ^ 1] == c for d in walk):
                rep.add("cond4.cycle", fid, f"face boundary is a directed cycle of colour {c}")
    return rep


@dataclass(frozen=True)
class ColorTree:
    color: int
    root: int
    parent: tuple  # per vertex: (edge, head) or None for the root

    def path_to_root(self, v):
        path = [v]
        while self.parent[v] is not None:
            v = self.parent[v][1]
            path.append(v)
            if len(path) > len(self.parent) + 1:
                raise WoodAlarm(f"colour {self.color} contains a cycle")
        return path

    def edges(self):
        return [p[0] for p in self.parent if p is not None]


def color_tree(S, i):
    Gs = S.host
    parent = []
    for v in range(Gs.n):
        d = S.outgoing(v, i)
        if d is None:
            raise WoodAlarm(f"vertex {v} has no outgoing colour {i}")
        parent.append(None if Gs.is_half(d) else (d >> 1, Gs.head(d)))
    T = ColorTree(i, Gs.roots[i - 1], tuple(parent))
    for v in range(Gs.n):
        T.path_to_root(v)
    return T


# ---------------------------------------------------------------------------
# construction

def _assign_orientation(skel):
    """Choose the outgoing slot of every free crossing vertex so that every
    primal and dual vertex gets out-degree three (half-edges included).

    This is a bipartite b-matching: crossing ``c`` sends its single outgoing
    edge to one of its four neighbours, and each primal/dual vertex must
    absorb ``degree - 3`` of them.  Solved with Kuhn-style augmenting paths.
    """
    m = skel.primal.m
    nv = skel.n_primal + skel.n_dual
    cap = [0] * nv
    for g in range(nv):
        items = skel.vertex_rot[g]
        cap[g] = len(items) - 3
    # half-edge crossings send their edge to the outer stub; the dual roots'
    # triangle edges point into those crossings
    fixed = {}
    for c in range(m, m + 3):
        fixed[c] = 2
    load = [0] * nv
    assigned = [[] for _ in range(nv)]
    out_slot = [None] * (m + 3)
    for c, s in fixed.items():
        out_slot[c] = s

    def options(c):
        return [(s, skel.slots[c][s]) for s in (0, 2, 1, 3)]

    def augment(c, seen):
        for s, g in options(c):
            if g in seen:
                continue
            seen.add(g)
            if load[g] < cap[g]:
                load[g] += 1
                assigned[g].append(c)
                out_slot[c] = s
                return True
            for c2 in list(assigned[g]):
                if augment(c2, seen):
                    assigned[g].remove(c2)
                    assigned[g].append(c)
                    out_slot[c] = s
                    return True
        return False

    for c in range(m):
        if not augment(c, set()):
            raise NotThreeConnected("no 3-orientation of the completion exists")
    return out_slot


def _propagate_colors(skel, out_slot):
    """Derive the unique colouring compatible with an orientation, starting
    from the root half-edges."""
    nv = skel.n_primal + skel.n_dual
    m = skel.primal.m
    ncross = len(skel.slots)
    col = [[0, 0, 0, 0] for _ in range(ncross)]
    b_half = [0, 0, 0]
    b_ids = [skel.n_primal + b for b in skel.corr.b]
    done_v = [False] * nv
    done_c = [False] * ncross
    queue = deque()

    def set_col(c, s, x):
        if col[c][s] == 0:
            col[c][s] = x
            queue.append(("c", c))
            g = skel.slots[c][s]
            if g != STUB:
                queue.append(("v", g))
        elif col[c][s] != x:
            raise WoodAlarm(f"colour conflict at crossing {c} slot {s}")

    def is_out_item(g, item):
        if item is HALF:
            return True
        c, s = item
        return out_slot[c] != s

    def item_color(g, item):
        if item is HALF:
            return b_half[b_ids.index(g)]
        return col[item[0]][item[1]]

    def do_vertex(g):
        items = skel.vertex_rot[g]
        deg = len(items)
        out_pos = [p for p, it in enumerate(items) if is_out_item(g, it)]
        if len(out_pos) != 3:
            raise WoodAlarm(f"vertex {g} has out-degree {len(out_pos)}")
        anchor = None
        for p, it in enumerate(items):
            x = item_color(g, it)
            if not x:
                continue
            if is_out_item(g, it):
                anchor = (p, x)
            else:
                # incoming colour x lies clockwise after outgoing colour x+1
                q = p
                while True:
                    q = (q - 1) % deg
                    if q in out_pos:
                        break
                anchor = (q, succ(x))
            break
        if anchor is None:
            return False
        p0, x0 = anchor
        k0 = out_pos.index(p0)
        for j in range(3):
            p = out_pos[(k0 + j) % 3]
            x = (x0 - 1 + j) % 3 + 1
            it = items[p]
            if it is HALF:
                idx = b_ids.index(g)
                if b_half[idx] and b_half[idx] != x:
                    raise WoodAlarm(f"half-edge colour conflict at {g}")
                b_half[idx] = x
            else:
                set_col(it[0], it[1], x)
        return True

    def do_cross(c):
        k = out_slot[c]
        known = None
        for s in range(4):
            if col[c][s]:
                known = s
                break
        if known is None:
            return False
        # counterclockwise from slot k+3 the incoming colours increase by one;
        # the outgoing edge repeats the colour of the opposite slot k+2
        seq = [(k + 3) % 4, (k + 2) % 4, (k + 1) % 4]
        if known == k:
            base = col[c][k] - 1  # colour of slot k+2 minus one
        else:
            base = col[c][known] - seq.index(known)
        for j, s in enumerate(seq):
            set_col(c, s, (base - 1 + j) % 3 + 1)
        set_col(c, k, col[c][(k + 2) % 4])
        return True

    for k in range(3):
        set_col(m + k, 0, k + 1)
    for idx in range(3):
        b_half[idx] = idx + 1
        queue.append(("v", b_ids[idx]))
    while queue:
        kind, x = queue.popleft()
        if kind == "c":
            if not done_c[x] and do_cross(x):
                done_c[x] = True
        else:
            if not done_v[x] and do_vertex(x):
                done_v[x] = True
    if not all(done_v) or not all(done_c):
        raise WoodAlarm("colour propagation did not reach the whole completion")
    return col, b_half


def compute_wood(Gs, *, check_connectivity=True, return_dual=False):
    """Schnyder wood of a 3-connected suspension.

    Builds the primal-dual completion, orients it so that every primal and
    dual vertex has out-degree three and every crossing vertex out-degree one,
    and reads the colouring off that orientation.  The result is always
    re-validated.  With ``return_dual`` also returns the dual wood induced by
    the same orientation.
    """
    if check_connectivity and not check_three_connected(Gs.base):
        raise NotThreeConnected("input graph is not 3-connected")
    Gds, corr = suspended_dual(Gs)
    skel = build_skeleton(Gs, Gds, corr)
    out_slot = _assign_orientation(skel)
    col, b_half = _propagate_colors(skel, out_slot)
    m = Gs.m
    colors = [0] * Gs.dart_count
    for e in range(m):
        k = out_slot[e]
        if k != 0:
            colors[2 * e] = col[e][0]
        if k != 2:
            colors[2 * e + 1] = col[e][2]
    for k in range(3):
        colors[2 * m + k] = k + 1
    S = SchnyderWood(Gs, tuple(colors))
    rep = validate_wood(Gs, S)
    if not rep.ok:
        raise WoodAlarm(f"constructed wood is invalid:\n{rep}", rep)
    if not return_dual:
        return S
    dcolors = [0] * Gds.dart_count
    for e in range(m + 3):
        k = out_slot[e]
        if k != 3:
            dcolors[2 * e] = col[e][3]
        if k != 1:
            dcolors[2 * e + 1] = col[e][1]
    for k in range(3):
        dcolors[2 * (m + 3) + k] = b_half[k]
    return S, SchnyderWood(Gds, tuple(dcolors)), corr
