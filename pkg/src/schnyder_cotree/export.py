"""DOT export and straight-line SVG drawings from Schnyder regions."""

from collections import deque
from fractions import Fraction

from .completion import STUB
from .planar import suspended_dual
from .schnyder import COLOR_NAMES, color_tree


def _q(x):
    return '"' + str(x).replace('"', '\\"') + '"'


def dot_graph(G, name="G"):
    lines = [f"graph {name} {{", "  node [shape=circle, fontsize=10];"]
    for v in range(G.n):
        extra = ", penwidth=2" if G.roots and v in G.roots else ""
        lines.append(f"  {v} [label={_q(v)}{extra}];")
    for e, (u, v) in enumerate(G.edges):
        lines.append(f"  {u} -- {v} [id={_q(f'e{e}')}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dot_wood(S, name="S"):
    """Directions drawn as arrows in their colour; a bidirected edge gets one
    arrow per end with the edge split into its two colours."""
    Gs = S.host
    G = Gs.base
    lines = [f"digraph {name} {{", "  node [shape=circle, fontsize=10];"]
    for v in range(G.n):
        lines.append(f"  {v};")
    for e, (u, v) in enumerate(G.edges):
        a, b = S.colors[2 * e], S.colors[2 * e + 1]
        if a and b:
            # the half next to v belongs to the u -> v direction
            split = f"{COLOR_NAMES[b]};0.5:{COLOR_NAMES[a]}"
            lines.append(f"  {u} -> {v} [dir=both, color={_q(split)}, id={_q(f'e{e}')}];")
        elif a:
            lines.append(f"  {u} -> {v} [color={COLOR_NAMES[a]}, id={_q(f'e{e}')}];")
        elif b:
            lines.append(f"  {v} -> {u} [color={COLOR_NAMES[b]}, id={_q(f'e{e}')}];")
    for k, r in enumerate(G.roots):
        c = S.colors[2 * G.m + k]
        lines.append(f"  half{k} [shape=point, style=invis];")
        lines.append(f"  {r} -> half{k} [color={COLOR_NAMES.get(c, 'black')}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dot_completion(C, name="completion"):
    """Primal vertices as circles, dual vertices as boxes, crossing vertices as
    small diamonds; edges towards dual vertices are dashed."""
    sk = C.skeleton
    lines = [f"digraph {name} {{", "  node [fontsize=9];"]
    for v in range(sk.n_primal):
        lines.append(f"  p{v} [shape=circle, label={_q(v)}];")
    for w in range(sk.n_dual):
        lines.append(f"  d{w} [shape=box, label={_q(w)}];")
    for c in range(sk.n_cross):
        lines.append(f"  x{c} [shape=diamond, width=0.1, height=0.1, label=\"\"];")

    def node(g):
        if g < sk.n_primal:
            return f"p{g}"
        if g < sk.n_primal + sk.n_dual:
            return f"d{g - sk.n_primal}"
        return f"x{g - sk.n_primal - sk.n_dual}"

    stubs = 0
    for c, slots in enumerate(sk.slots):
        for s, g in enumerate(slots):
            if g == STUB:
                lines.append(f"  stub{stubs} [shape=point, style=invis];")
                other = f"stub{stubs}"
                stubs += 1
            else:
                other = node(g)
            style = "dashed" if s in (1, 3) else "solid"
            col = COLOR_NAMES.get(C.color[c][s], "black")
            if C.outward[c][s]:
                lines.append(f"  x{c} -> {other} [color={col}, style={style}];")
            else:
                lines.append(f"  {other} -> x{c} [color={col}, style={style}];")
    for k, b in enumerate(sk.corr.b):
        lines.append(f"  stub{stubs} [shape=point, style=invis];")
        col = COLOR_NAMES.get(C.b_half_colors[k], "black")
        lines.append(f"  d{b} -> stub{stubs} [color={col}, style=dashed];")
        stubs += 1
    lines.append("}")
    return "\n".join(lines) + "\n"


def dot_candidate(H, name="H"):
    G = H.host
    lines = [f"graph {name} {{", "  node [shape=circle, fontsize=10];"]
    for v in range(G.n):
        lines.append(f"  {v};")
    for e, (u, v) in enumerate(G.edges):
        if e in H:
            lines.append(f"  {u} -- {v} [label={_q('/'.join(sorted(H.tags[e])))}];")
        else:
            lines.append(f"  {u} -- {v} [style=dotted, color=gray];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dot_tree_pair(G, dual, pair, name="pair"):
    """Tree edges bold, co-tree edges dashed between dual (box) vertices."""
    lines = [f"graph {name} {{", "  node [fontsize=9];"]
    for v in range(G.n):
        lines.append(f"  p{v} [shape=circle, label={_q(v)}];")
    for w in range(dual.n):
        lines.append(f"  d{w} [shape=box, label={_q(w)}];")
    for e, (u, v) in enumerate(G.edges):
        style = "penwidth=2" if e in pair.tree else "color=gray, style=dotted"
        lines.append(f"  p{u} -- p{v} [{style}];")
    for e in sorted(pair.co_tree):
        u, v = dual.edges[e]
        lines.append(f"  d{u} -- d{v} [style=dashed, color=blue];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_dot(obj, **kw):
    """DOT text for a graph, wood, completion, candidate subgraph or
    ``(G, dual, pair)`` tuple."""
    from .candidate import CandidateSubgraph
    from .completion import Completion
    from .planar import EmbeddedPlanarGraph
    from .schnyder import SchnyderWood

    if isinstance(obj, EmbeddedPlanarGraph):
        return dot_graph(obj, **kw)
    if isinstance(obj, SchnyderWood):
        return dot_wood(obj, **kw)
    if isinstance(obj, Completion):
        return dot_completion(obj, **kw)
    if isinstance(obj, CandidateSubgraph):
        return dot_candidate(obj, **kw)
    if isinstance(obj, tuple) and len(obj) == 3:
        return dot_tree_pair(*obj, **kw)
    raise TypeError(f"cannot export {type(obj).__name__}")


# ---------------------------------------------------------------------------
# face-count drawing

def region_face_counts(S):
    """Per vertex ``v`` and colour ``i``, the number of inner faces in the
    region bounded by the paths ``P_{i+1}(v)``, ``P_{i-1}(v)`` and the rays
    of their roots (the region containing ``b_i``)."""
    Gs = S.host
    G = Gs.base
    Gds, corr = suspended_dual(Gs)
    D = Gds.base
    trees = [color_tree(S, i) for i in (1, 2, 3)]
    adj = [[] for _ in range(D.n)]
    for e in range(G.m):
        u, v = D.edges[e]
        adj[u].append((v, e))
        adj[v].append((u, e))
    inner = set(range(D.n)) - set(corr.b)
    counts = []
    for v in range(G.n):
        path_edges = []
        for T in trees:
            w = v
            es = set()
            while T.parent[w] is not None:
                e, w = T.parent[w]
                es.add(e)
            path_edges.append(es)
        row = []
        for i in range(3):
            blocked = path_edges[(i + 1) % 3] | path_edges[(i + 2) % 3]
            start = corr.b[i]
            seen = {start}
            queue = deque([start])
            while queue:
                a = queue.popleft()
                for b, e in adj[a]:
                    if e not in blocked and b not in seen:
                        seen.add(b)
                        queue.append(b)
            row.append(len(seen & inner))
        counts.append(tuple(row))
    return counts


def schnyder_coordinates(S):
    """Plane points from the face counts: the three counts are barycentric
    weights of a fixed triangle with ``r_i`` at its ``i``-th corner."""
    counts = region_face_counts(S)
    corners = [(Fraction(0), Fraction(0)), (Fraction(1), Fraction(0)),
               (Fraction(1, 2), Fraction(866025, 1000000))]
    pts = []
    for c in counts:
        tot = sum(c) or 1
        x = sum(Fraction(c[k], tot) * corners[k][0] for k in range(3))
        y = sum(Fraction(c[k], tot) * corners[k][1] for k in range(3))
        pts.append((x, y))
    return pts, counts


def _orient(a, b, c):
    v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (v > 0) - (v < 0)


def _on_segment(a, b, p):
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def segments_cross(a, b, c, d):
    """True iff closed segments ab and cd meet other than at a shared endpoint."""
    shared = {a, b} & {c, d}
    if shared:
        if a == b or c == d:
            return True
        # sharing an endpoint: overlap only if collinear and pointing the same way
        p = shared.pop()
        q1 = b if a == p else a
        q2 = d if c == p else c
        if _orient(p, q1, q2) != 0:
            return False
        return (q1[0] - p[0]) * (q2[0] - p[0]) + (q1[1] - p[1]) * (q2[1] - p[1]) > 0
    o1, o2, o3, o4 = _orient(a, b, c), _orient(a, b, d), _orient(c, d, a), _orient(c, d, b)
    if o1 != o2 and o3 != o4:
        return True
    return ((o1 == 0 and _on_segment(a, b, c)) or (o2 == 0 and _on_segment(a, b, d))
            or (o3 == 0 and _on_segment(c, d, a)) or (o4 == 0 and _on_segment(c, d, b)))


def crossing_pairs(G, pts):
    """Edge pairs whose straight segments cross; exact rational arithmetic."""
    bad = []
    for e in range(G.m):
        a, b = (pts[x] for x in G.edges[e])
        for f in range(e + 1, G.m):
            c, d = (pts[x] for x in G.edges[f])
            if segments_cross(a, b, c, d):
                bad.append((e, f))
    return bad


def draw_schnyder(S, size=400, margin=20):
    """SVG text of the face-count drawing, edges coloured by the wood.

    Returns ``(svg, crossings)`` where ``crossings`` lists crossing edge pairs
    (empty for a valid drawing).
    """
    G = S.host.base
    pts, _ = schnyder_coordinates(S)
    bad = crossing_pairs(G, pts)

    def xy(p):
        return (margin + float(p[0]) * size, margin + (1 - float(p[1]) / 0.866025) * size * 0.866025)

    h = int(2 * margin + size * 0.866025)
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size + 2 * margin}" height="{h}">']
    for e, (u, v) in enumerate(G.edges):
        (x1, y1), (x2, y2) = xy(pts[u]), xy(pts[v])
        a, b = S.colors[2 * e], S.colors[2 * e + 1]
        if a and b:
            mx, my = (x1 + x2) / 2, (y1 + y2) / 2
            out.append(f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{mx:.2f}" y2="{my:.2f}" '
                       f'stroke="{COLOR_NAMES[b]}" stroke-width="2"/>')
            out.append(f'<line x1="{mx:.2f}" y1="{my:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" '
                       f'stroke="{COLOR_NAMES[a]}" stroke-width="2"/>')
        else:
            c = COLOR_NAMES.get(a or b, "black")
            out.append(f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" '
                       f'stroke="{c}" stroke-width="2"/>')
    for v, p in enumerate(pts):
        x, y = xy(p)
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="4" fill="black"/>')
        out.append(f'<text x="{x + 5:.2f}" y="{y - 5:.2f}" font-size="10">{v}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n", bad


__all__ = [
    "dot_graph", "dot_wood", "dot_completion", "dot_candidate",
    "dot_tree_pair", "to_dot", "region_face_counts", "schnyder_coordinates",
    "segments_cross", "crossing_pairs", "draw_schnyder",
]
