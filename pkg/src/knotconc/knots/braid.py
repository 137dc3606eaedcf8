"""Braid words: closures as diagrams, and Seifert matrices read straight
off the word.

A braid word is a list of nonzero integers; letter i (resp. -i) is the
standard generator sigma_i (its inverse) on abs(i), abs(i)+1 of an
s-strand braid.  Positive sigma_i takes strand i over strand i+1.
"""

from .diagram import Crossing, Diagram


def strand_count(word):
    return max(abs(k) for k in word) + 1 if word else 1


def closure_permutation(word, s=None):
    s = s or strand_count(word)
    perm = list(range(s))
    for k in word:
        i = abs(k) - 1
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    return perm


def closure_components(word, s=None):
    s = s or strand_count(word)
    perm = closure_permutation(word, s)
    seen = [False] * s
    comps = 0
    for i in range(s):
        if not seen[i]:
            comps += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
    return comps


def braid_closure_diagram(word):
    """Diagram of the closure of a braid word (must close to a knot)."""
    s = strand_count(word)
    if closure_components(word, s) != 1:
        raise ValueError("braid closure is a link, not a knot")
    if not word:
        return Diagram([])
    # provisional arc ids: current[i] is the arc presently at position i
    fresh = [0]
    current = [None] * s
    init = []
    for i in range(s):
        fresh[0] += 1
        current[i] = fresh[0]
        init.append(fresh[0])
    events = []  # (arc_under_in, arc_under_out, arc_over_in, arc_over_out, sign)
    for k in word:
        i = abs(k) - 1
        a, b = current[i], current[i + 1]  # left, right incoming
        fresh[0] += 1
        c = fresh[0]
        fresh[0] += 1
        d = fresh[0]
        # positive: left strand goes over, landing at position i+1
        if k > 0:
            over_in, over_out = a, d
            under_in, under_out = b, c
        else:
            over_in, over_out = b, c
            under_in, under_out = a, d
        events.append([under_in, under_out, over_in, over_out, 1 if k > 0 else -1])
        current[i], current[i + 1] = c, d
    # closure: bottom arc at position i is identified with top arc there
    alias = {}
    for i in range(s):
        alias[current[i]] = init[i]

    def res(a):
        while a in alias:
            a = alias[a]
        return a

    for ev in events:
        for j in range(4):
            ev[j] = res(ev[j])
    # relabel arcs 1..2n along the orientation
    succ = {}
    for (ui, uo, oi, oo, sg) in events:
        succ[ui] = uo
        succ[oi] = oo
    label = {}
    a = events[0][0]
    for t in range(len(succ)):
        label[a] = t + 1
        a = succ[a]
    if len(label) != 2 * len(word):
        raise ValueError("closure did not form a single cycle")
    crossings = [Crossing(label[ui], label[uo], label[oi], label[oo], sg)
                 for (ui, uo, oi, oo, sg) in events]
    return Diagram(crossings)


def seifert_matrix_from_braid(word):
    """Seifert matrix of the braid closure, from the disc-and-band surface
    of Seifert's algorithm applied to the closed braid.

    Basis: for each pair of consecutive occurrences of generator index i
    (any signs) there is one cycle through the two bands and the two discs
    i, i+1.  Linking numbers follow the standard local rules:

      * a cycle with band signs (e1, e2) self-links -(e1+e2)/2;
      * cycles in the same column sharing a band of sign e contribute
        V[earlier][later] = 1, V[later][earlier] = 0 for e = +1 and
        V[earlier][later] = 0, V[later][earlier] = -1 for e = -1;
      * cycles in adjacent columns link once when their word-position
        intervals interleave; the nonzero entry depends on which interval
        opens first.

    The convention constants were fixed by cross-validation against Fox
    calculus Alexander polynomials and known signatures.
    """
    if not word:
        return tuple()
    if closure_components(word) != 1:
        raise ValueError("braid closure is a link, not a knot")
    cols = {}
    for pos, k in enumerate(word):
        cols.setdefault(abs(k), []).append(pos)
    cycles = []  # (column, pos1, pos2, sign1, sign2)
    for i in sorted(cols):
        ps = cols[i]
        for a, b in zip(ps, ps[1:]):
            cycles.append((i, a, b, _sgn(word[a]), _sgn(word[b])))
    g2 = len(cycles)
    v = [[0] * g2 for _ in range(g2)]
    for idx, (i, p1, p2, e1, e2) in enumerate(cycles):
        v[idx][idx] = -(e1 + e2) // 2
    for ia in range(g2):
        i, p1, p2, e1, e2 = cycles[ia]
        for ib in range(ia + 1, g2):
            j, q1, q2, f1, f2 = cycles[ib]
            if j == i:
                if q1 == p2:  # share the middle band
                    if e2 > 0:
                        v[ia][ib] = 1
                    else:
                        v[ib][ia] = -1
            elif j == i + 1 or j == i - 1:
                lo, hi = (ia, ib) if j == i + 1 else (ib, ia)
                (a1, a2) = (cycles[lo][1], cycles[lo][2])
                (b1, b2) = (cycles[hi][1], cycles[hi][2])
                if a1 < b1 < a2 < b2:
                    v[lo][hi] = 1
                elif b1 < a1 < b2 < a2:
                    v[lo][hi] = -1
    return tuple(tuple(r) for r in v)


def _sgn(k):
    return 1 if k > 0 else -1
