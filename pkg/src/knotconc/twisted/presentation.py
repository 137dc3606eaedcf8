"""Deficiency-one presentations of knot groups.

A Wirtinger presentation has one meridian generator per over-arc and one
relator per crossing, of which any single one is redundant.  We keep
n - 1 relators; the abelianization sends every generator to 1, which
the twisted machinery relies on throughout.
"""


class WirtingerPresentation:
    """Knot group presentation with all generators meridians.

    relators are words: lists of (generator index, +-1) pairs.
    """

    def __init__(self, ngen, relators):
        self.ngen = ngen
        self.relators = [list(r) for r in relators]
        if len(self.relators) != ngen - 1:
            raise ValueError("need exactly n-1 relators")
        for r in self.relators:
            for g, e in r:
                if not 0 <= g < ngen or e not in (1, -1):
                    raise ValueError("bad letter (%r, %r)" % (g, e))

    @classmethod
    def from_diagram(cls, diagram):
        ngen, relators, _ = diagram.wirtinger()
        # one Wirtinger relator is always a consequence of the rest
        return cls(ngen, relators[:-1] if relators else [])

    def exponent_sum(self, word):
        """Image of the word under abelianization (all meridians -> 1)."""
        return sum(e for _, e in word)
