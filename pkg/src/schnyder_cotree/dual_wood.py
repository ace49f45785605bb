"""Dual Schnyder woods and the coloured completion."""

from .completion import STUB, Completion, build_skeleton, check_crossing_vertices  # noqa: F401
from .errors import InvalidWood
from .planar import suspended_dual
from .schnyder import SchnyderWood, pred, succ, validate_wood


def dual_wood(S, corr=None, dual_host=None, *, check=True):
    """Orientation and colouring of the suspended dual induced by ``S``.

    A unidirected ``(i-1)``-coloured (half-)edge gets a bidirected dual coloured
    ``i`` and ``i+1`` with the primal edge pointing to the right of the
    ``i``-direction; an ``i``-``(i+1)``-coloured edge gets a unidirected
    ``(i-1)``-coloured dual pointing to the right of the ``i``-direction.  The
    dual root half-edges carry their root colour.

    Returns ``(dual_wood, corr)``.
    """
    Gs = S.host
    if check:
        rep = validate_wood(Gs, S)
        if not rep.ok:
            raise InvalidWood(str(rep))
    if dual_host is None or corr is None:
        dual_host, corr = suspended_dual(Gs)
    m = Gs.m
    col = S.colors
    dcol = [0] * dual_host.dart_count

    # dual dart 2e runs right -> left of primal dart 2e, so primal dart 2e
    # points to the right of dual dart 2e, and primal dart 2e+1 to the right
    # of dual dart 2e+1
    def primal_darts(e):
        if e < m:
            return col[2 * e], col[2 * e + 1]
        return col[2 * m + (e - m)], 0

    for e in range(m + 3):
        a, b = primal_darts(e)
        if a and b:
            # direction coloured i whose successor colours the other direction
            if b == succ(a):
                i, i_dart = a, 2 * e
            elif a == succ(b):
                i, i_dart = b, 2 * e + 1
            else:
                raise InvalidWood(f"edge {e} has colours {a}, {b}")
            # pointing to the right of i_dart means running along the dual
            # of its twin
            dcol[i_dart ^ 1] = pred(i)
        else:
            c = a or b
            along = 2 * e if a else 2 * e + 1  # the primal direction present
            i = succ(c)
            # primal points right of the i-coloured dual direction
            dcol[along] = i
            dcol[along ^ 1] = succ(i)
    md = dual_host.m
    for k in range(3):
        dcol[2 * md + k] = k + 1
    return SchnyderWood(dual_host, tuple(dcol)), corr


def completion(Gs, S, Sd=None, corr=None):
    """Completion of ``Gs`` with the orientation/colouring induced by ``S``.

    Each subdivided direction inherits its colour from ``S`` or the dual
    wood: an outgoing ``i``-direction of ``v`` makes ``v -> z`` an outgoing
    ``i``-edge, a unidirected incoming one makes ``z -> v`` incoming.
    """
    if Sd is None or corr is None:
        Sd, corr = dual_wood(S)
    skel = build_skeleton(Gs, Sd.host, corr)
    m = Gs.m
    pc = S.colors
    dc = Sd.colors
    outward = []
    color = []
    for c in range(m + 3):
        if c < m:
            p_fwd, p_bwd = pc[2 * c], pc[2 * c + 1]
        else:
            p_fwd, p_bwd = pc[2 * m + (c - m)], 0
        d_fwd, d_bwd = dc[2 * c], dc[2 * c + 1]  # right -> left, left -> right
        o = [False] * 4
        k = [0] * 4
        # slot 0 = tail of the primal dart, slot 2 = its head (or outer stub)
        o[0], k[0] = (False, p_fwd) if p_fwd else (True, p_bwd)
        if c < m:
            o[2], k[2] = (False, p_bwd) if p_bwd else (True, p_fwd)
        else:
            o[2], k[2] = True, p_fwd
        # slot 3 = right face (tail of dual dart 2c), slot 1 = left face
        o[3], k[3] = (False, d_fwd) if d_fwd else (True, d_bwd)
        o[1], k[1] = (False, d_bwd) if d_bwd else (True, d_fwd)
        outward.append(tuple(o))
        color.append(tuple(k))
    md = Sd.host.m
    b_half = tuple(dc[2 * md + k] for k in range(3))
    return Completion(skel, tuple(outward), tuple(color), b_half)


def double_dual_matches(S, S2, m):
    """True iff the dual of the dual wood ``S2`` restricts to ``S``.

    ``S2`` lives on the suspended dual of the suspended dual, whose edge ``e``
    (for ``e < m``) is primal edge ``e`` with dart parity reversed, and whose
    edges ``m..m+2`` replace the primal half-edges.
    """
    for e in range(m):
        if S.colors[2 * e] != S2.colors[2 * e + 1] or S.colors[2 * e + 1] != S2.colors[2 * e]:
            return False
    for k in range(3):
        # the triangle edge crossed by the root's half-edge in the second
        # dual is directed away from the root, like the half-edge itself
        e = m + k
        if S2.colors[2 * e] or S2.colors[2 * e + 1] != S.colors[2 * m + k]:
            return False
    return True
