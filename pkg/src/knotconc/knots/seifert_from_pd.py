"""Seifert's algorithm on a PD diagram.

Route: the orientation-respecting smoothing splits the diagram into
Seifert circles.  If the circles form a coherent nested family the
diagram is a braid closure, we read off the braid word and use the
band-linking computation in :mod:`.braid`.  Otherwise we first apply
Reidemeister-II rewrites (pulling one strand of a defect face across the
other) until the circles are coherent; each rewrite preserves the knot.
The result is cross-checked against the Fox-calculus Alexander
polynomial of the original diagram, so a wrong matrix can never be
returned silently.
"""

from __future__ import annotations

from .braid import seifert_matrix_from_braid
from .diagram import Crossing, Diagram, fox_alexander
from . import seifert as _seifert


class SeifertAlgorithmError(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# rotation system / faces
#
# Slot layout around a crossing, counterclockwise, matching the PD
# convention: sign > 0 -> (ui, oi, uo, oo); sign < 0 -> (ui, oo, uo, oi).
# A half-edge is (crossing index, slot); faces are traced by always
# turning right, which keeps the face interior on the right of the
# direction of travel.
# ---------------------------------------------------------------------------

def _slots(x):
    if x.sign > 0:
        return (x.ui, x.oi, x.uo, x.oo)
    return (x.ui, x.oo, x.uo, x.oi)


def _slot_is_out(x, s):
    # which slots carry arcs leaving the crossing
    if x.sign > 0:
        return s in (2, 3)       # uo, oo
    return s in (1, 2)           # oo, uo


def _faces(crossings):
    """Faces as lists of (arc, induced) where induced is +1 when the face
    traversal runs along the arc's own orientation."""
    # endpoint lookup: arc -> [(ci, slot) at both ends]
    ends = {}
    for ci, x in enumerate(crossings):
        for s, a in enumerate(_slots(x)):
            ends.setdefault(a, []).append((ci, s))
    # half-edge (ci, s) = the end of the arc sitting at crossing ci, slot s
    unused = {(ci, s) for ci, x in enumerate(crossings) for s in range(4)}
    faces = []
    while unused:
        start = min(unused)
        face = []
        cur = start
        while True:
            unused.discard(cur)
            ci, s = cur
            s2 = (s + 1) % 4
            x = crossings[ci]
            a = _slots(x)[s2]
            induced = 1 if _slot_is_out(x, s2) else -1
            # travel arc a to its other end
            e1, e2 = ends[a]
            other = e2 if e1 == (ci, s2) else e1
            face.append((a, induced))
            cur = other
            if cur == start:
                break
        faces.append(face)
    return faces


def _circle_data(crossings):
    """Seifert circles of a crossing list; returns (circles, arc_to_circle,
    crossing_circles) where circles are arc lists in traversal order."""
    nxt = {}
    for x in crossings:
        nxt[x.ui] = x.oo
        nxt[x.oi] = x.uo
    seen = set()
    circles = []
    for a in sorted(nxt):
        if a in seen:
            continue
        cyc = []
        b = a
        while b not in seen:
            seen.add(b)
            cyc.append(b)
            b = nxt[b]
        circles.append(cyc)
    arc_to_circle = {}
    for i, cyc in enumerate(circles):
        for a in cyc:
            arc_to_circle[a] = i
    xc = [(arc_to_circle[x.ui], arc_to_circle[x.oi]) for x in crossings]
    return circles, arc_to_circle, xc


def _defect_pair(crossings):
    """Find (arc1, arc2) on one face, lying on different Seifert circles,
    with the same induced orientation along the face; None if coherent."""
    _, arc_to_circle, _ = _circle_data(crossings)
    for face in _faces(crossings):
        for i in range(len(face)):
            a1, d1 = face[i]
            for j in range(i + 1, len(face)):
                a2, d2 = face[j]
                if a1 == a2:
                    continue
                if d1 == d2 and arc_to_circle[a1] != arc_to_circle[a2]:
                    return a1, a2
    return None


def _replace_end(crossings, arc, at_head, new_arc, skip):
    """Rename one endpoint of `arc`: its incoming (head) or outgoing (tail)
    role, in whichever crossing currently holds it (excluding indices in
    skip)."""
    for ci, x in enumerate(crossings):
        if ci in skip:
            continue
        if at_head:
            if x.ui == arc:
                x.ui = new_arc
                return
            if x.oi == arc:
                x.oi = new_arc
                return
        else:
            if x.uo == arc:
                x.uo = new_arc
                return
            if x.oo == arc:
                x.oo = new_arc
                return
    raise SeifertAlgorithmError("arc endpoint %d not found" % arc)


def _vogel_move(crossings, e1, e2, fresh):
    """Pull arc e1 across the shared face over arc e2 (Reidemeister II).

    Both arcs run the same way around the face, so they are antiparallel
    as seen across it; the two new crossings have opposite signs and
    appear in opposite order along e1 and along e2.  Which of the two
    sign assignments is correct depends on whether the face is traced
    with its interior on the right (bounded faces) or left (the outer
    face), so we try one and fall back to the other if it breaks
    planarity (checked with Euler's formula).
    """
    e1a, e1m, e1b = fresh, fresh + 1, fresh + 2
    e2a, e2m, e2b = fresh + 3, fresh + 4, fresh + 5
    base = len(crossings)
    new_idx = {base, base + 1}
    for (s1, s2) in ((+1, -1), (-1, +1)):
        xp = Crossing(e2m, e2b, e1a, e1m, s1)   # first along e1, last along e2
        xq = Crossing(e2a, e2m, e1m, e1b, s2)   # second along e1, first along e2
        crossings.append(xp)
        crossings.append(xq)
        _replace_end(crossings, e1, False, e1a, new_idx)  # tail keeps e1a
        _replace_end(crossings, e1, True, e1b, new_idx)   # head gets e1b
        _replace_end(crossings, e2, False, e2a, new_idx)
        _replace_end(crossings, e2, True, e2b, new_idx)
        if len(_faces(crossings)) == len(crossings) + 2:
            return fresh + 6
        # undo and try the mirror assignment
        del crossings[base:]
        for old, a, b in ((e1, e1a, e1b), (e2, e2a, e2b)):
            _replace_end(crossings, a, False, old, new_idx)
            _replace_end(crossings, b, True, old, new_idx)
    raise SeifertAlgorithmError("Reidemeister-II rewrite broke planarity")


def _renumber(crossings):
    """Relabel arcs 1..2n in orientation order and return a Diagram."""
    heads = {}
    for x in crossings:
        heads[x.ui] = ("u", x)
        heads[x.oi] = ("o", x)
    tails = {x.uo for x in crossings} | {x.oo for x in crossings}
    if set(heads) != tails or len(heads) != 2 * len(crossings):
        raise SeifertAlgorithmError("inconsistent arcs after rewriting")
    start = min(heads)
    order = []
    a = start
    while True:
        order.append(a)
        role, x = heads[a]
        a = x.uo if role == "u" else x.oo
        if a == start:
            break
    if len(order) != 2 * len(crossings):
        raise SeifertAlgorithmError("rewritten diagram is not a knot")
    label = {a: i + 1 for i, a in enumerate(order)}
    out = [Crossing(label[x.ui], label[x.uo], label[x.oi], label[x.oo], x.sign)
           for x in crossings]
    d = Diagram(out)
    d.validate()
    return d


# ---------------------------------------------------------------------------
# reading a braid word off a coherent diagram
# ---------------------------------------------------------------------------

def _braid_word_from_coherent(diagram):
    circles, _, xc = _circle_data(diagram.crossings)
    k = len(circles)
    # Seifert graph must be a path: order the circles along it
    adj = [set() for _ in range(k)]
    for (ca, cb) in xc:
        if ca == cb:
            raise SeifertAlgorithmError("crossing joins a circle to itself")
        adj[ca].add(cb)
        adj[cb].add(ca)
    ends = [i for i in range(k) if len(adj[i]) == 1]
    if k == 1:
        raise SeifertAlgorithmError("no crossings between distinct circles")
    if len(ends) != 2 or any(len(s) > 2 for s in adj):
        raise SeifertAlgorithmError("Seifert circles not linearly nested")
    order = [ends[0]]
    while len(order) < k:
        nxts = adj[order[-1]] - set(order[-2:-1] or [None])
        nxts = [c for c in nxts if c != (order[-2] if len(order) > 1 else None)]
        if len(nxts) != 1:
            raise SeifertAlgorithmError("Seifert circles not linearly nested")
        order.append(nxts[0])
    strand = {c: i for i, c in enumerate(order)}   # circle -> strand index

    # per-circle cyclic sequence of incident crossings, in traversal order
    arc_cross = {}
    for ci, x in enumerate(diagram.crossings):
        arc_cross[x.ui] = ci     # crossing at the head of each arc
        arc_cross[x.oi] = ci
    cyc_of = []
    for cyc in circles:
        cyc_of.append([arc_cross[a] for a in cyc])

    # merge the cyclic orders into one linear word, strand by strand
    merged = list(cyc_of[order[0]])
    for pos in range(1, k):
        ring = cyc_of[order[pos]]
        anchors = [c for c in ring if c in set(merged)]
        if not anchors:
            raise SeifertAlgorithmError("disconnected annulus")
        # rotate the ring to start at the anchor earliest in `merged`
        first = min(anchors, key=merged.index)
        i0 = ring.index(first)
        ring = ring[i0:] + ring[:i0]
        tail = []
        ins = {}
        cur = None
        for c in ring:
            if c in set(merged):
                idx = merged.index(c)
                if cur is not None and idx <= (merged.index(cur)):
                    raise SeifertAlgorithmError(
                        "incompatible cyclic orders around Seifert circles")
                cur = c
                ins.setdefault(cur, [])
            else:
                if cur is None:
                    tail.append(c)
                else:
                    ins[cur].append(c)
        result = []
        for c in merged:
            result.append(c)
            result.extend(ins.get(c, []))
        result.extend(tail)
        merged = result

    word = []
    for ci in merged:
        ca, cb = xc[ci]
        i = min(strand[ca], strand[cb]) + 1
        sign = diagram.crossings[ci].sign
        word.append(i if sign > 0 else -i)
    return word


_MAX_EXTRA_MOVES = 64


def braid_from_diagram(diagram):
    """Braid word whose closure is the given diagram's knot."""
    if isinstance(diagram, (list, tuple)):
        diagram = Diagram.from_pd(diagram)
    if diagram.n == 0:
        return []
    crossings = [Crossing(x.ui, x.uo, x.oi, x.oo, x.sign)
                 for x in diagram.crossings]
    moves = 0
    while True:
        pair = _defect_pair(crossings)
        if pair is None:
            break
        if moves >= _MAX_EXTRA_MOVES:
            raise SeifertAlgorithmError("braiding did not terminate")
        fresh = 2 * len(diagram.crossings) + 1 + 6 * moves + 10 ** 6
        _vogel_move(crossings, pair[0], pair[1], fresh)
        moves += 1
    coherent = _renumber(crossings) if moves else diagram
    return _braid_word_from_coherent(coherent)


def seifert_matrix_from_diagram(diagram):
    """Seifert matrix of the knot presented by a PD code or Diagram.

    The returned matrix always satisfies det(V - V^T) = 1 and reproduces
    the diagram's Fox-calculus Alexander polynomial (checked).
    """
    if isinstance(diagram, (list, tuple)):
        diagram = Diagram.from_pd(diagram)
    if diagram.n == 0:
        return []
    word = braid_from_diagram(diagram)
    v = seifert_matrix_from_braid(word)
    _seifert.validate_seifert(v)
    want = fox_alexander(diagram)
    got = _seifert.alexander_from_seifert(v)
    if want.canonical() != got.canonical():
        raise SeifertAlgorithmError(
            "Seifert matrix check failed: Alexander %s vs Fox %s"
            % (got, want))
    return v
