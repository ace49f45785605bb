"""Topology of the primal-dual completion.

The completion superimposes a suspension and its suspended dual and puts a
crossing vertex on every primal/dual pair of crossing (half-)edges.  Crossing
``c`` sits on primal edge ``c`` (or, for ``c = m + k``, on the half-edge at
root ``k``) and on dual edge ``c``.  Its four neighbours, clockwise, are

    slot 0: tail of primal dart 2c       slot 1: face left of that dart
    slot 2: head of primal dart 2c       slot 3: face right of that dart

Slot 2 of a half-edge crossing is the outer stub (``STUB``).  Global vertex
ids: primal ``v`` -> ``v``, dual ``w`` -> ``n + w``, crossing ``c`` ->
``n + n_dual + c``.
"""

from dataclasses import dataclass, replace

from .report import ValidationReport

STUB = -1
HALF = None


@dataclass(frozen=True, eq=False)
class CompletionSkeleton:
    primal: object  # Suspension
    dual: object  # Suspension of the suspended dual
    corr: object
    slots: tuple  # per crossing: 4 global vertex ids (STUB allowed)
    vertex_rot: tuple  # per primal/dual global id: tuple of (crossing, slot) or HALF

    @property
    def n_primal(self):
        return self.primal.n

    @property
    def n_dual(self):
        return self.dual.n

    @property
    def n_cross(self):
        return len(self.slots)

    @property
    def vertex_count(self):
        return self.n_primal + self.n_dual + self.n_cross

    def cross_id(self, c):
        return self.n_primal + self.n_dual + c

    def kind(self, gid):
        if gid < self.n_primal:
            return "primal"
        if gid < self.n_primal + self.n_dual:
            return "dual"
        return "crossing"


def build_skeleton(Gs, Gds, corr):
    n = Gs.n
    m = Gs.m
    G = Gs.base
    Gd = Gds.base
    slots = []
    for c in range(m + 3):
        ru, lu = Gd.edges[c]  # dual dart 2c runs right face -> left face
        if c < m:
            u, v = G.edges[c]
            slots.append((u, n + lu, v, n + ru))
        else:
            slots.append((G.roots[c - m], n + lu, STUB, n + ru))
    vertex_rot = []
    for v in range(n):
        items = []
        for d in Gs.rotation[v]:
            if Gs.is_half(d):
                items.append((m + (d - 2 * m), 0))
            else:
                items.append((d >> 1, 0 if d % 2 == 0 else 2))
        vertex_rot.append(tuple(items))
    md = Gd.m
    for w in range(Gds.n):
        items = []
        for d in Gds.rotation[w]:
            if Gds.is_half(d):
                items.append(HALF)
            else:
                items.append((d >> 1, 3 if d % 2 == 0 else 1))
        vertex_rot.append(tuple(items))
    assert md == m + 3
    return CompletionSkeleton(Gs, Gds, corr, tuple(slots), tuple(vertex_rot))


@dataclass(frozen=True, eq=False)
class Completion:
    """Completion with the orientation and colouring induced by a wood.

    ``outward[c][s]`` is True when the edge between crossing ``c`` and its
    slot-``s`` neighbour is directed away from the crossing; ``color[c][s]`` is
    its colour.  ``b_half_colors`` colours the three dual half-edges.
    """

    skeleton: CompletionSkeleton
    outward: tuple
    color: tuple
    b_half_colors: tuple

    @property
    def vertex_count(self):
        return self.skeleton.vertex_count

    @property
    def edge_count(self):
        return 4 * self.skeleton.n_cross + 3

    def flip(self, c, s):
        """Copy with the direction of one crossing edge reversed (for tests)."""
        outward = [list(o) for o in self.outward]
        outward[c][s] = not outward[c][s]
        return replace(self, outward=tuple(tuple(o) for o in outward))


def check_crossing_vertices(C):
    """Every crossing vertex: one outgoing edge, three incoming edges coloured
    red, green, blue in counterclockwise order."""
    rep = ValidationReport("crossing vertices")
    for c in range(C.skeleton.n_cross):
        outs = [s for s in range(4) if C.outward[c][s]]
        if len(outs) != 1:
            rep.add("cor1.outdegree", c, f"{len(outs)} outgoing edges")
            continue
        k = outs[0]
        ccw = [C.color[c][(k + 3) % 4], C.color[c][(k + 2) % 4], C.color[c][(k + 1) % 4]]
        if 0 in ccw or not (ccw[1] == ccw[0] % 3 + 1 and ccw[2] == ccw[1] % 3 + 1):
            rep.add("cor1.colors", c, f"incoming colours counterclockwise {ccw}")
    return rep
