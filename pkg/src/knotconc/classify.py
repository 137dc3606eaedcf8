"""Concordance-order classification of sums of prime knots with <= 9 crossings.

The group generated by the 87 elements of E (the prime knots through 9
crossings together with the distinct reverses 8_17^r, 9_32^r and 9_33^r) is
understood well enough to read off the algebraic and topological order of
any integer linear combination.  The change of basis below rewrites such a
combination over a basis whose elements have known orders; the order of the
sum is then the lcm of the component orders.

The topological side rests partly on a conjecture: the linear independence
(in the concordance group) of 9_2-7_4, 8_21-8_18-3_1, 9_23-9_2-3_1,
9_40-8_18-4_1-3_1 and 9_32-9_32^r is unproven.  Reports that touch those
basis elements are flagged conjectural.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .knots.expressions import ExpressionError, KnotExpression

__all__ = ["BasisTable", "BasisSet", "ClassifyReport", "classify", "basis_table"]

INFINITE = "infinite"

# Generators of E, in table order.  The three non-invertible knots
# contribute their reverses as separate generators.
_E_NAMES = (
    ["3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3"]
    + ["7_%d" % i for i in range(1, 8)]
    + ["8_%d" % i for i in range(1, 22)]
    + ["9_%d" % i for i in range(1, 50)]
    + ["8_17^r", "9_32^r", "9_33^r"]
)

_NON_INVERTIBLE = {"8_17", "9_32", "9_33"}

# Basis sets.  Superscript = order in the (A)lgebraic or (T)opological
# concordance group; the set named 1' is algebraically slice but of
# topological order 2 (twice it is slice, once it is not).
_BASIS_SETS = [
    ("C_inf", INFINITE, INFINITE, "internal", [
        "3_1", "5_1", "5_2", "6_2", "7_1", "7_2", "7_3", "7_4", "7_5",
        "7_6", "8_2", "8_4", "8_5", "8_6", "8_7", "8_14", "8_16", "8_19",
        "9_1", "9_3", "9_4", "9_5", "9_6", "9_7", "9_9", "9_10", "9_11",
        "9_13", "9_15", "9_17", "9_18", "9_20", "9_21", "9_22", "9_25",
        "9_26", "9_31", "9_32", "9_35", "9_36", "9_38", "9_43", "9_45",
        "9_47", "9_48", "9_49",
    ]),
    ("C_A^4", 4, INFINITE, "external", ["7_7", "9_34"]),
    ("C_A^2", 2, INFINITE, "internal", [
        "8_1", "8_13", "8_15-7_2-3_1", "9_2-7_4", "9_12-5_2", "9_14",
        "9_16-7_3-3_1", "9_19", "9_28-3_1", "9_30", "9_33",
        "9_42+8_5-3_1", "9_44-4_1",
    ]),
    ("C_A^1", 1, INFINITE, "internal", [
        "8_21-8_18-3_1", "9_8-8_14", "9_23-9_2-3_1", "9_29-9_28+2(3_1)",
        "9_32-9_32^r", "9_33-9_33^r", "9_39+7_2-4_1",
        "9_40-8_18-4_1-3_1",
    ]),
    ("C_A^1'", 1, 2, "internal", ["8_17-8_17^r"]),
    ("C_T^2", 2, 2, "external", ["4_1", "6_3", "8_3", "8_12", "8_17", "8_18"]),
    ("C_T^1", 1, 1, "external", [
        "6_1", "8_8", "8_9", "8_10+3_1", "8_11-3_1", "8_20", "9_24-4_1",
        "9_27", "9_37-4_1", "9_41", "9_46",
    ]),
]

# Basis elements whose independence in the topological concordance group
# is conjectural; any classification touching them is flagged.
_CONJECTURAL = {
    "9_2-7_4", "8_21-8_18-3_1", "9_23-9_2-3_1", "9_40-8_18-4_1-3_1",
    "9_32-9_32^r",
}

# 8_1 and the C_A^4 knots are of infinite order by external tables rather
# than by the twisted-polynomial theorems; noted in provenance only.
_EXTERNAL_SINGLETONS = {"7_7", "9_34", "8_1"}


def _generator_key(term):
    """Coordinate label in E for a single expression term."""
    if term.reversed_ and term.name in _NON_INVERTIBLE:
        return term.name + "^r"
    # every other prime knot through 9 crossings is invertible, so the
    # reverse names the same generator
    return term.name


def _coordinates(expr):
    """Integer coordinate vector of expr over the generators of E.

    Raises ExpressionError when a term lies outside E.
    """
    index = {nm: i for i, nm in enumerate(_E_NAMES)}
    vec = [0] * len(_E_NAMES)
    for term in expr.terms:
        key = _generator_key(term)
        if key not in index:
            raise ExpressionError("%s is not a prime knot with <= 9 crossings"
                                  % key)
        vec[index[key]] += term.coeff
    return vec


@dataclass(frozen=True)
class BasisSet:
    name: str
    algebraic_order: object    # 1, 2, 4 or "infinite"
    topological_order: object
    provenance: str            # "internal" | "external"
    elements: tuple            # of KnotExpression


class BasisTable:
    """The 87-element basis for sums of prime knots through 9 crossings.

    Exposes the named basis sets, the change-of-basis matrix from the
    generators of E to the basis, and exact decomposition of expressions.
    """

    def __init__(self):
        self.sets = []
        exprs = []
        self._orders = []          # (alg, top) per basis element
        self._set_of = []          # set name per basis element
        for name, alg, top, prov, members in _BASIS_SETS:
            parsed = tuple(KnotExpression.parse(m) for m in members)
            self.sets.append(BasisSet(name, alg, top, prov, parsed))
            for e in parsed:
                exprs.append(e)
                self._orders.append((alg, top))
                self._set_of.append(name)
        self.elements = tuple(exprs)
        if len(self.elements) != len(_E_NAMES):
            raise AssertionError("basis size %d != |E| = %d"
                                 % (len(self.elements), len(_E_NAMES)))
        # columns = basis elements in E coordinates
        self.matrix = [_coordinates(e) for e in self.elements]
        self._inverse = _invert_unimodular(self.matrix)

    @property
    def generators(self):
        return _E_NAMES

    def decompose(self, expr):
        """Exact integer coordinates of expr over the basis."""
        if isinstance(expr, str):
            expr = KnotExpression.parse(expr)
        vec = _coordinates(expr)
        n = len(vec)
        # x = M^{-T} v since column j of M holds basis element j over E
        out = []
        for j in range(n):
            s = sum(self._inverse[j][i] * vec[i] for i in range(n))
            if s.denominator != 1:
                raise AssertionError("non-integral change of basis")
            out.append(int(s))
        return out

    def element_order(self, j, coeff, topological=False):
        """Order of coeff * (basis element j) in the relevant group."""
        order = self._orders[j][1 if topological else 0]
        if coeff == 0:
            return 1
        if order == INFINITE:
            return INFINITE
        return order // gcd(coeff, order)

    def set_name(self, j):
        return self._set_of[j]

    def is_conjectural(self, j):
        return str(self.elements[j]).replace(" ", "") in {
            s.replace(" ", "") for s in _CONJECTURAL}


def _invert_unimodular(columns):
    """Inverse of the matrix whose columns are the given vectors.

    Exact Gauss-Jordan over Q; verifies the matrix is invertible (the
    basis must span).  Returns rows of the inverse of M where
    M[i][j] = columns[j][i].
    """
    n = len(columns)
    a = [[Fraction(columns[j][i]) for j in range(n)] for i in range(n)]
    inv = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            raise AssertionError("basis does not span E")
        a[col], a[piv] = a[piv], a[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        d = a[col][col]
        a[col] = [x / d for x in a[col]]
        inv[col] = [x / d for x in inv[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    # the inverse we need acts on E coordinates: x = M^{-1} v, and the
    # matrix M has entries M[i][j] = columns[j][i]; ``inv`` above inverts
    # exactly that matrix, so return it row-wise.
    return inv


@lru_cache(maxsize=1)
def basis_table():
    return BasisTable()


@dataclass
class ClassifyReport:
    expression: KnotExpression
    decomposition: list = field(default_factory=list)
    # entries (coeff, basis KnotExpression, set name)
    algebraic_order: object = 1
    topological_order: object = 1
    conjectural: bool = False
    classified: bool = True
    note: str = ""

    def describe(self):
        lines = ["expression: %s" % self.expression]
        if not self.classified:
            lines.append("classified: no")
            if self.note:
                lines.append("note: %s" % self.note)
            return "\n".join(lines)
        for coeff, elem, set_name in self.decomposition:
            lines.append("component: %+d(%s)  [%s]" % (coeff, elem, set_name))
        lines.append("algebraic order: %s" % self.algebraic_order)
        top = str(self.topological_order)
        if self.conjectural:
            top += " (conjectural)"
        lines.append("topological order: %s" % top)
        return "\n".join(lines)


def _lcm_orders(orders):
    out = 1
    for o in orders:
        if o == INFINITE:
            return INFINITE
        out = out * o // gcd(out, o)
    return out


def classify(expr, table=None):
    """Classify a linear combination of prime knots with <= 9 crossings.

    Returns a ClassifyReport with the exact decomposition over the basis
    and the algebraic and topological concordance orders.  An expression
    containing a knot outside E is reported unclassified (the caller may
    fall back to certification).
    """
    if isinstance(expr, str):
        expr = KnotExpression.parse(expr)
    bt = basis_table()
    try:
        coords = bt.decompose(expr)
    except ExpressionError as exc:
        return ClassifyReport(expression=expr, classified=False,
                              note="not classified by basis: %s" % exc)
    decomposition = []
    alg_orders, top_orders = [], []
    conjectural = False
    for j, c in enumerate(coords):
        if c == 0:
            continue
        decomposition.append((c, bt.elements[j], bt.set_name(j)))
        alg_orders.append(bt.element_order(j, c))
        top_orders.append(bt.element_order(j, c, topological=True))
        if bt.is_conjectural(j):
            conjectural = True
    return ClassifyReport(
        expression=expr,
        decomposition=decomposition,
        algebraic_order=_lcm_orders(alg_orders),
        topological_order=_lcm_orders(top_orders),
        conjectural=conjectural,
    )
