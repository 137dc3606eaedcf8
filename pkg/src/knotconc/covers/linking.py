"""Linking form on H_1(Σ_2) and the characters it induces.

On the double branched cover the linking form is presented by the
inverse of V + V^T: for generator lifts u, w the value is
-u^T (V + V^T)^{-1} w taken mod 1.
"""

from dataclasses import dataclass
from fractions import Fraction

from ..algebra.intmatrix import mat_add, mat_inverse_rational, mat_transpose
from .homology import cover_homology

__all__ = ["LinkingForm", "linking_form", "Character",
           "linking_characters", "cg_signature_residue"]


@dataclass(frozen=True)
class LinkingForm:
    """lk on H_1(Σ_2) = ⊕ Z/factors[i], values in Q/Z.

    `values[i][j]` is lk(g_i, g_j) as a Fraction in [0, 1).
    """
    factors: tuple
    values: tuple

    def evaluate(self, x, y):
        """lk(Σ x_i g_i, Σ y_j g_j) mod 1."""
        total = Fraction(0)
        for i, xi in enumerate(x):
            for j, yj in enumerate(y):
                total += xi * yj * self.values[i][j]
        return total % 1

    def self_linking(self, x):
        return self.evaluate(x, x)


def linking_form(v):
    """Linking form of the double branched cover, from a Seifert matrix."""
    hom = cover_homology(v, 2)
    if not hom.factors:
        return LinkingForm((), ())
    q = mat_add(v, mat_transpose(v))
    qinv = mat_inverse_rational([list(r) for r in q])
    vals = []
    for u in hom.lifts:
        row = []
        for w in hom.lifts:
            s = Fraction(0)
            for i, ui in enumerate(u):
                for j, wj in enumerate(w):
                    s += ui * qinv[i][j] * wj
            row.append((-s) % 1)
        vals.append(tuple(row))
    return LinkingForm(hom.factors, tuple(vals))


def cg_signature_residue(v, x):
    """Self-linking lk(x, x) mod 1 of a class on the double cover."""
    return linking_form(v).self_linking(x)


@dataclass(frozen=True)
class Character:
    """A Z/q-valued character on H_1(Σ_n), given on the generators."""
    q: int
    values: tuple

    def evaluate(self, x):
        return sum(a * b for a, b in zip(self.values, x)) % self.q

    @property
    def is_trivial(self):
        return all(a % self.q == 0 for a in self.values)


def _q_part_generator(form, q):
    """Index of a generator whose q-part generates the q-part of H_1.

    Requires the q-primary part to be cyclic; the largest invariant
    factor always carries it.
    """
    for i in range(len(form.factors) - 1):
        if form.factors[i] % q == 0:
            raise ValueError("q-primary part of H_1 is not cyclic")
    last = len(form.factors) - 1
    if form.factors[last] % q != 0:
        raise ValueError("q does not divide the order of H_1")
    return last


def linking_characters(v, q):
    """Characters χ_i(x) = q·lk(x, i·g), g generating the cyclic q-part.

    Returns the list [χ_1, ..., χ_{q-1}]; χ_i and χ_{q-i}
    yield the same twisted polynomial, so callers usually only need
    i ≤ (q-1)/2.
    """
    form = linking_form(v)
    gi = _q_part_generator(form, q)
    cof = form.factors[gi] // q
    base = []
    for j in range(len(form.factors)):
        val = q * form.values[j][gi] * cof
        if val.denominator != 1:
            raise ArithmeticError("linking value has unexpected denominator")
        base.append(val.numerator % q)
    return [Character(q, tuple((i * b) % q for b in base))
            for i in range(1, q)]
