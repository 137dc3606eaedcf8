"""Formal sums of table knots, e.g. ``2(3_1) + 5(7_2) - 3(8_12) - 9_8``.

Grammar (whitespace ignored):

    expr  := term (('+' | '-') term)*
    term  := [coeff] name | coeff '(' name ')'
    name  := knot table name, optionally suffixed 'r' or '^r' for the
             reverse; a leading '-' on the first term is allowed

A negative coefficient means the mirror image taken with multiplicity
|coeff|.  The reverse suffix transposes the Seifert matrix.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import seifert


class ExpressionError(ValueError):
    pass


@dataclass(frozen=True)
class Term:
    name: str          # table name, without any reverse suffix
    coeff: int         # nonzero; sign = mirror
    reversed_: bool

    def __str__(self):
        nm = self.name + ("^r" if self.reversed_ else "")
        if self.coeff == 1:
            return nm
        if self.coeff == -1:
            return "-" + nm
        return "%d(%s)" % (self.coeff, nm)


_TERM_RE = re.compile(
    r"([+-]?)\s*(\d+)?\s*"          # sign and optional coefficient
    r"(?:\(\s*([^()\s]+?)\s*\)"     # (name)
    r"|((?:\d+[an]?_\d+)|unknot))"  # or bare name like 9_32, 11a_44
    r"\s*(\^?r)?\s*",
    re.IGNORECASE,
)


@dataclass(frozen=True)
class KnotExpression:
    terms: tuple

    def __str__(self):
        if not self.terms:
            return "0"
        out = str(self.terms[0])
        for t in self.terms[1:]:
            s = str(t)
            out += " + " + s if not s.startswith("-") else " - " + s[1:]
        return out

    @staticmethod
    def parse(text):
        text = text.strip()
        if text in ("", "0"):
            return KnotExpression(())
        terms = []
        pos = 0
        first = True
        while pos < len(text):
            m = _TERM_RE.match(text, pos)
            if not m or m.end() == pos:
                raise ExpressionError(
                    "cannot parse knot expression at %r" % text[pos:])
            sign_s, coeff_s, par_name, bare_name, rev_s = m.groups()
            if not first and sign_s == "":
                raise ExpressionError(
                    "missing '+' or '-' before %r" % text[pos:])
            name = par_name if par_name is not None else bare_name
            rev = bool(rev_s)
            # reverse marker may be glued to a parenthesised name: (8_17r)
            if name.lower().endswith("^r"):
                name, rev = name[:-2], True
            elif name.lower().endswith("r") and "_" in name:
                name, rev = name[:-1], True
            coeff = int(coeff_s) if coeff_s else 1
            if coeff == 0:
                raise ExpressionError("zero coefficient for %s" % name)
            if sign_s == "-":
                coeff = -coeff
            terms.append(Term(name, coeff, rev))
            pos = m.end()
            first = False
        return KnotExpression(tuple(terms))

    def names(self):
        return sorted({t.name for t in self.terms})


def resolve_expression(expr, table):
    """Block sum of the transformed Seifert matrices of all terms."""
    if isinstance(expr, str):
        expr = KnotExpression.parse(expr)
    mats = []
    for term in expr.terms:
        entry = table.get(term.name)
        if entry is None:
            raise ExpressionError("unknown knot %r (not in table)" % term.name)
        v = entry.seifert_matrix()
        v = seifert.transform(v, mirror=term.coeff < 0, reversed_=term.reversed_)
        for _ in range(abs(term.coeff)):
            mats.append(v)
    return seifert.connected_sum(*mats)
