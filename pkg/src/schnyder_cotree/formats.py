"""Text and binary formats: ``.rot`` rotation files, plantri planar_code,
``.wood`` colourings and JSON."""

import json

from .errors import FormatError, PlanarGraphError
from .planar import build_graph, default_roots
from .schnyder import SchnyderWood

PLANAR_CODE_HEADER = b">>planar_code<<"


# ---------------------------------------------------------------------------
# .rot

def write_rot(G):
    lines = [f"{G.n} {G.m}"]
    for v, nbrs in enumerate(G.neighbor_lists()):
        lines.append(f"{v}: " + " ".join(map(str, nbrs)))
    lines.append("outer: " + " ".join(map(str, G.roots)))
    return "\n".join(lines) + "\n"


def read_rot(text):
    """Parse a ``.rot`` file; structural errors propagate from ``build_graph``."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FormatError("empty .rot input")
    try:
        n, m = (int(x) for x in lines[0].split())
    except ValueError:
        raise FormatError(f"bad header line {lines[0]!r}") from None
    if len(lines) != n + 2:
        raise FormatError(f"expected {n + 2} lines, got {len(lines)}")
    rotation = []
    for v in range(n):
        head, _, rest = lines[1 + v].partition(":")
        try:
            if int(head) != v:
                raise FormatError(f"line {v + 2}: expected vertex {v}, got {head}")
            rotation.append([int(x) for x in rest.split()])
        except ValueError:
            raise FormatError(f"line {v + 2}: not an integer list") from None
    key, _, rest = lines[-1].partition(":")
    if key.strip() != "outer":
        raise FormatError(f"last line must start with 'outer:', got {lines[-1]!r}")
    try:
        roots = tuple(int(x) for x in rest.split())
    except ValueError:
        raise FormatError("roots must be integers") from None
    if len(roots) != 3:
        raise FormatError(f"expected three roots, got {len(roots)}")
    G = build_graph(n, rotation, roots)
    if G.m != m:
        raise FormatError(f"header says {m} edges, rotation lists give {G.m}")
    return G


# ---------------------------------------------------------------------------
# planar_code

def write_planar_code(graphs):
    """Encode graphs in plantri's planar_code (one-byte entries, n < 256)."""
    out = bytearray(PLANAR_CODE_HEADER)
    for G in graphs:
        if G.n >= 256:
            raise FormatError("one-byte planar_code only supports n < 256")
        out.append(G.n)
        for nbrs in G.neighbor_lists():
            out.extend(u + 1 for u in nbrs)
            out.append(0)
    return bytes(out)


def read_planar_code(data):
    """Decode every graph of a planar_code stream; roots are the first three
    vertices on the outer face (face 0).

    Supports the one-byte form and the two-byte form (leading zero byte,
    byte order from a ``le``/``be`` header, little-endian by default).
    """
    if data.startswith(PLANAR_CODE_HEADER):
        pos, order = len(PLANAR_CODE_HEADER), "little"
    elif data.startswith(b">>planar_code le<<"):
        pos, order = len(b">>planar_code le<<"), "little"
    elif data.startswith(b">>planar_code be<<"):
        pos, order = len(b">>planar_code be<<"), "big"
    else:
        raise FormatError("missing >>planar_code<< header")
    graphs = []
    while pos < len(data):
        width = 1
        if data[pos] == 0:
            width = 2
            pos += 1

        def take():
            nonlocal pos
            if pos + width > len(data):
                raise FormatError("truncated planar_code")
            x = int.from_bytes(data[pos:pos + width], order)
            pos += width
            return x

        n = take()
        rotation = []
        for _ in range(n):
            nbrs = []
            while True:
                x = take()
                if x == 0:
                    break
                if x > n:
                    raise FormatError(f"neighbour {x} out of range 1..{n}")
                nbrs.append(x - 1)
            rotation.append(nbrs)
        G = build_graph(n, rotation)
        try:
            G = G.with_roots(default_roots(G))
        except PlanarGraphError as ex:
            raise FormatError(str(ex)) from ex
        graphs.append(G)
    return graphs


# ---------------------------------------------------------------------------
# .wood
#
#   n m
#   u v uni_uv c          one line per edge, in edge id order
#   u v uni_vu c
#   u v bi c_u c_v        c_u colours the direction toward u, c_v toward v
#   half r c              one line per root half-edge

def write_wood(S):
    Gs = S.host
    G = Gs.base
    lines = [f"{G.n} {G.m}"]
    for e, (u, v) in enumerate(G.edges):
        a, b = S.colors[2 * e], S.colors[2 * e + 1]
        kind = S.kind(e)
        if kind == "bi":
            lines.append(f"{u} {v} bi {b} {a}")
        elif kind == "uni_uv":
            lines.append(f"{u} {v} uni_uv {a}")
        elif kind == "uni_vu":
            lines.append(f"{u} {v} uni_vu {b}")
        else:
            lines.append(f"{u} {v} none")
    for k, r in enumerate(G.roots):
        lines.append(f"half {r} {S.colors[2 * G.m + k]}")
    return "\n".join(lines) + "\n"


def read_wood(text, Gs):
    """Parse a ``.wood`` file against the suspension it colours."""
    G = Gs.base
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != [str(G.n), str(G.m)]:
        raise FormatError(f"header must be '{G.n} {G.m}'")
    if len(lines) != G.m + 4:
        raise FormatError(f"expected {G.m + 4} lines, got {len(lines)}")
    col = [0] * Gs.dart_count
    try:
        for e in range(G.m):
            parts = lines[1 + e]
            u, v = int(parts[0]), int(parts[1])
            if (u, v) != tuple(G.edges[e]):
                raise FormatError(f"edge {e} should be {G.edges[e]}, got {(u, v)}")
            kind = parts[2]
            if kind == "bi":
                col[2 * e + 1], col[2 * e] = int(parts[3]), int(parts[4])
            elif kind == "uni_uv":
                col[2 * e] = int(parts[3])
            elif kind == "uni_vu":
                col[2 * e + 1] = int(parts[3])
            elif kind != "none":
                raise FormatError(f"unknown edge kind {kind!r}")
        for k in range(3):
            parts = lines[1 + G.m + k]
            if parts[0] != "half" or int(parts[1]) != G.roots[k]:
                raise FormatError(f"expected 'half {G.roots[k]} <colour>'")
            col[2 * G.m + k] = int(parts[2])
    except (IndexError, ValueError):
        raise FormatError("malformed .wood line") from None
    return SchnyderWood(Gs, tuple(col))


# ---------------------------------------------------------------------------
# JSON

def graph_to_json(G):
    return {"n": G.n, "edges": [list(e) for e in G.edges],
            "rotation": G.neighbor_lists(), "roots": list(G.roots)}


def graph_from_json(obj):
    return build_graph(obj["n"], obj["rotation"], obj["roots"], edges=obj.get("edges"))


def dumps(obj):
    """Stable JSON text: sorted keys, compact separators."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))
