"""Metaboliser enumeration over F_q and the odd-zero-vector search.

A metaboliser of a linking form on (Z_q)^{2m} is a self-annihilating
subspace of dimension m.  We enumerate them as reduced row-echelon
bases, in lexicographic order of (pivot columns, free entries), pruning
on isotropy as rows are added.
"""

from dataclasses import dataclass
from itertools import combinations, product

__all__ = ["metabolisers", "odd_vector_search", "OddVectorResult"]

_RANK_CAP = 8


def _pairing(gram, q, x, y):
    n = len(x)
    return sum(x[i] * gram[i][j] * y[j] for i in range(n)
               for j in range(n)) % q


def metabolisers(gram, q):
    """All isotropic half-rank subspaces of (F_q)^n for the form `gram`.

    `gram` is the n×n symmetric matrix of the (q-scaled) linking form
    over F_q.  Yields tuples of basis rows in reduced row-echelon form;
    n must not exceed the desk-scale rank cap.
    """
    n = len(gram)
    if n > _RANK_CAP:
        raise ValueError("enumeration infeasible: rank %d exceeds cap %d"
                         % (n, _RANK_CAP))
    if n % 2:
        return
    m = n // 2
    if m == 0:
        yield ()
        return
    for pivots in combinations(range(n), m):
        free_cols = [[c for c in range(pivots[r] + 1, n) if c not in pivots]
                     for r in range(m)]

        def fill(rows, r):
            if r == m:
                yield tuple(rows)
                return
            base = [0] * n
            base[pivots[r]] = 1
            for vals in product(range(q), repeat=len(free_cols[r])):
                row = list(base)
                for c, a in zip(free_cols[r], vals):
                    row[c] = a
                if _pairing(gram, q, row, row) != 0:
                    continue
                if any(_pairing(gram, q, row, prev) != 0 for prev in rows):
                    continue
                yield from fill(rows + [tuple(row)], r + 1)

        yield from fill([], 0)


@dataclass(frozen=True)
class OddVectorResult:
    """Outcome of the odd-zero-count search over a metaboliser.

    Either `vector` is a combination of the basis rows with an odd
    number of zero entries, or the basis row-reduces to (I | E) with E
    a permuted diagonal matrix and `diagonal` lists its nonzero
    entries ±a (one per row, in row order).
    """
    vector: tuple = None
    diagonal: tuple = None

    @property
    def found_odd(self):
        return self.vector is not None


def _rref_mod(rows, q):
    rows = [list(r) for r in rows]
    n = len(rows[0])
    piv = 0
    pivots = []
    for col in range(n):
        if piv == len(rows):
            break
        hit = next((r for r in range(piv, len(rows)) if rows[r][col] % q),
                   None)
        if hit is None:
            continue
        rows[piv], rows[hit] = rows[hit], rows[piv]
        inv = pow(rows[piv][col], -1, q)
        rows[piv] = [(x * inv) % q for x in rows[piv]]
        for r in range(len(rows)):
            if r != piv and rows[r][col] % q:
                f = rows[r][col]
                rows[r] = [(a - f * b) % q
                           for a, b in zip(rows[r], rows[piv])]
        pivots.append(col)
        piv += 1
    return rows[:piv], pivots


def odd_vector_search(basis, q):
    """Find a combination of `basis` rows with an odd number of zeros.

    Searches all nontrivial F_q-combinations.  If none exists the basis
    must reduce to (I | E) with E supported on one entry per row and
    column; that diagonal-form witness is returned instead.
    """
    rows = [tuple(r) for r in basis]
    m = len(rows)
    n = len(rows[0])
    if q ** m > 10 ** 7:
        raise ValueError("search infeasible: q^rank too large")
    for coeffs in product(range(q), repeat=m):
        if not any(coeffs):
            continue
        vec = tuple(sum(c * r[j] for c, r in zip(coeffs, rows)) % q
                    for j in range(n))
        if vec.count(0) % 2 == 1:
            return OddVectorResult(vector=vec)
    red, pivots = _rref_mod(rows, q)
    if len(red) != m or pivots != list(range(m)):
        raise ArithmeticError("basis does not reduce to (I | E) form")
    diag = []
    used_cols = set()
    for row in red:
        support = [j for j in range(m, n) if row[j]]
        if len(support) != 1 or support[0] in used_cols:
            raise ArithmeticError(
                "right block is not a permuted diagonal matrix")
        used_cols.add(support[0])
        diag.append(row[support[0]])
    return OddVectorResult(diagonal=tuple(diag))
