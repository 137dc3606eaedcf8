"""Twisted Alexander polynomials from metabelian representations.

The pipeline, for a p-fold branched cover and a character of order q on
its first homology:

  1. a one-dimensional representation of the knot group over F_q sends
     every meridian to a deck eigenvalue a (a = -1 for p = 2);
  2. a twisted 1-cocycle for that representation encodes the character
     -- its values on meridians are solved for as the nullspace of the
     relator conditions mod q;
  3. the cocycle induces a p-dimensional representation of the knot
     group over Q(zeta_q)[t, t^{-1}] whose entries are monomials
     t^k zeta^m;
  4. the twisted polynomial is the determinant of the Fox-derivative
     block matrix with one generator column removed, divided by the
     determinant of (image of that generator) - identity.

Determinants are computed modulo primes ell = 1 (mod q) on a grid of
evaluation points (zeta -> element of order q, t -> interpolation
nodes), reconstructed by Lagrange interpolation in both variables and
CRT-lifted until stable; the result is exact.
"""

from fractions import Fraction

import sympy

from ..algebra.cyclotomic import CyclotomicElem
from ..algebra.laurent import LaurentPoly
from .presentation import WirtingerPresentation
from .trivial import trivial_twisted


# -- cocycles over F_q -------------------------------------------------------

def _nullspace_mod(rows, ncols, q):
    """Basis of the right nullspace of the matrix mod prime q."""
    mat = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][c] % q), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = pow(mat[r][c], -1, q)
        mat[r] = [(x * inv) % q for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] % q:
                f = mat[i][c]
                mat[i] = [(x - f * y) % q for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-mat[i][fc]) % q
        basis.append(tuple(v))
    return basis


def _relator_rows(pres, q, a):
    """Cocycle conditions: one linear equation mod q per relator.

    Walking a relator with prefix scalar s (the image of the prefix under
    meridian -> a), a positive letter g contributes +s to the coefficient
    of z(g) and a negative letter -s*a^{-1} after stepping the prefix.
    """
    ainv = pow(a, -1, q)
    rows = []
    for word in pres.relators:
        row = [0] * pres.ngen
        s = 1
        for g, e in word:
            if e == 1:
                row[g] = (row[g] + s) % q
                s = (s * a) % q
            else:
                s = (s * ainv) % q
                row[g] = (row[g] - s) % q
        rows.append(row)
    return rows


def cocycle_space(pres, q, a):
    """Twisted cocycles mod coboundaries for meridian eigenvalue a.

    Returns a list of representative cocycles (tuples of F_q values, one
    per generator); its length is the multiplicity of the a-eigenspace
    in the F_q homology of the branched cover.
    """
    if a % q in (0, 1):
        raise ValueError("eigenvalue must be nontrivial mod q")
    basis = _nullspace_mod(_relator_rows(pres, q, a), pres.ngen, q)
    # quotient by the coboundary line z(g) = (a-1)c, i.e. the constant
    # vectors: eliminate with the all-ones vector first
    ones = tuple([1] * pres.ngen)
    reps = []
    span = [list(ones)]
    for v in basis:
        cand = list(v)
        for row in span:
            lead = next((i for i, x in enumerate(row) if x % q), None)
            if lead is not None and cand[lead] % q:
                f = (cand[lead] * pow(row[lead], -1, q)) % q
                cand = [(x - f * y) % q for x, y in zip(cand, row)]
        if any(x % q for x in cand):
            span.append(cand)
            reps.append(v)
    return reps


# -- induced representation --------------------------------------------------
#
# A generator image is a p x p monomial matrix, stored as a tuple of rows
# (col, texp, zexp); every nonzero entry is +t^texp zeta^zexp.

def _monomial_image(p, q, eigs, chi, v, e):
    rows = [None] * p
    for j in range(p):
        k, l = divmod(e + j, p)
        m = sum(c * pow(a, -l, q) * x for c, a, x in zip(chi, eigs, v)) % q
        rows[l] = (j, k, m)
    return tuple(rows)


def _mono_mul(A, B, q):
    return tuple((B[c][0], k + B[c][1], (m + B[c][2]) % q)
                 for (c, k, m) in A)


def _mono_identity(p):
    return tuple((l, 0, 0) for l in range(p))


def induced_images(pres, p, q, eigs, cocycles, chi):
    """Images of the meridian generators and their inverses.

    eigs: deck eigenvalues mod q (one per character component);
    cocycles: per component, a cocycle vector over the generators;
    chi: per component, the character coefficient in Z_q.
    """
    images, inverses = [], []
    for g in range(pres.ngen):
        v = [z[g] for z in cocycles]
        images.append(_monomial_image(p, q, eigs, chi, v, 1))
        vinv = [(-pow(a, -1, q) * x) % q for a, x in zip(eigs, v)]
        inverses.append(_monomial_image(p, q, eigs, chi, vinv, -1))
    return images, inverses


def _fox_block_matrix(pres, p, q, images, inverses, drop):
    """Fox-derivative block matrix with the `drop` generator column removed.

    Entries are dicts {(texp, zexp): integer coefficient}.
    """
    keep = [g for g in range(pres.ngen) if g != drop]
    col_of = {g: i for i, g in enumerate(keep)}
    n = len(pres.relators)
    size = n * p
    big = [[{} for _ in range(size)] for _ in range(size)]

    def add(cell, mono, sign):
        for l, (c, k, m) in enumerate(mono):
            d = cell[l][c]
            d[(k, m)] = d.get((k, m), 0) + sign

    for ri, word in enumerate(pres.relators):
        cells = {}
        M = _mono_identity(p)
        for g, e in word:
            if g not in cells:
                cells[g] = [[{} for _ in range(p)] for _ in range(p)]
            if e == 1:
                add(cells[g], M, 1)
                M = _mono_mul(M, images[g], q)
            else:
                M = _mono_mul(M, inverses[g], q)
                add(cells[g], M, -1)
        for g, cell in cells.items():
            if g == drop:
                continue
            ci = col_of[g]
            for l in range(p):
                for c in range(p):
                    d = {km: x for km, x in cell[l][c].items() if x}
                    if d:
                        big[ri * p + l][ci * p + c] = d
    return big


# -- exact determinants by modular interpolation -----------------------------

def _interp_mod(xs, ys, ell):
    """Coefficients of the unique polynomial through (xs, ys) mod ell."""
    n = len(xs)
    dd = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            dd[i] = ((dd[i] - dd[i - 1])
                     * pow(xs[i] - xs[i - j], -1, ell)) % ell
    coeffs = [0] * n
    # Horner expansion of the Newton form
    acc = [0] * n
    for i in range(n - 1, -1, -1):
        new = [0] * n
        new[0] = dd[i]
        for d in range(n - 1):
            new[d + 1] = acc[d]
            new[d] = (new[d] - xs[i] * acc[d]) % ell
        acc = new
    return acc


def _det_mod(matrix, ell):
    mat = [row[:] for row in matrix]
    n = len(mat)
    det = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if mat[i][c] % ell), None)
        if piv is None:
            return 0
        if piv != c:
            mat[c], mat[piv] = mat[piv], mat[c]
            det = -det
        det = (det * mat[c][c]) % ell
        inv = pow(mat[c][c], -1, ell)
        for i in range(c + 1, n):
            if mat[i][c]:
                f = (mat[i][c] * inv) % ell
                mat[i] = [(x - f * y) % ell for x, y in zip(mat[i], mat[c])]
    return det % ell


def _order_q_root(q, ell):
    for x in range(2, ell):
        w = pow(x, (ell - 1) // q, ell)
        if w != 1:
            return w
    raise ArithmeticError


def _symmetric_lift(r, n):
    return r - n if r > n // 2 else r


def _det_laurent(big, q, max_primes=40):
    """Exact determinant of a matrix of {(texp, zexp): coeff} entries.

    Returns a LaurentPoly with CyclotomicElem(q) coefficients.
    """
    size = len(big)
    shifts = []
    degree = 0
    for row in big:
        exps = [k for cell in row for (k, _m) in cell]
        if not exps:
            return LaurentPoly.zero()
        shifts.append(min(exps))
        degree += max(exps) - min(exps)
    total_shift = sum(shifts)
    npts = degree + 1

    residues = None       # [d][zdeg] -> int residue
    modulus = 1
    prev_lift = None
    ell = max(10 ** 6, 4 * q)
    used = 0
    while used < max_primes:
        ell = sympy.nextprime(ell)
        while ell % q != 1:
            ell = sympy.nextprime(ell)
        w = _order_q_root(q, ell)
        tpts = list(range(1, npts + 1))
        # det values on the (zeta, t) grid
        grid = []
        wpow = 1
        zvals = []
        for i in range(1, q):
            wpow = (wpow * w) % ell
            zvals.append(wpow)
            ztab = [pow(wpow, m, ell) for m in range(q)]
            vals = []
            for tp in tpts:
                mat = []
                for r, row in enumerate(big):
                    mrow = []
                    for cell in row:
                        v = 0
                        for (k, m), cf in cell.items():
                            v += cf * pow(tp, k - shifts[r], ell) * ztab[m]
                        mrow.append(v % ell)
                    mat.append(mrow)
                vals.append(_det_mod(mat, ell))
            grid.append(_interp_mod(tpts, vals, ell))
        # per t-degree, interpolate in zeta to power-basis coefficients
        this = []
        for d in range(npts):
            ys = [grid[i][d] for i in range(q - 1)]
            zc = _interp_mod(zvals, ys, ell)
            if any(zc[q - 1:]):
                raise ArithmeticError("zeta-degree overflow")
            this.append(zc[:q - 1])
        if residues is None:
            residues = this
            modulus = ell
        else:
            new = []
            for rrow, trow in zip(residues, this):
                merged = []
                for rr, tt in zip(rrow, trow):
                    x = (rr + modulus
                         * ((tt - rr) * pow(modulus, -1, ell) % ell))
                    merged.append(x)
                new.append(merged)
            modulus *= ell
            residues = new
        used += 1
        lift = tuple(tuple(_symmetric_lift(x, modulus) for x in row)
                     for row in residues)
        if lift == prev_lift:
            out = {}
            for d, row in enumerate(lift):
                if any(row):
                    out[d + total_shift] = CyclotomicElem(
                        q, [Fraction(x) for x in row])
            return LaurentPoly.from_dict(out)
        prev_lift = lift
    raise ArithmeticError("determinant lift did not stabilize")


# -- the twisted polynomial ---------------------------------------------------

class TwistedPoly:
    """A twisted Alexander polynomial over Q(zeta_q)[t, t^{-1}].

    poly has CyclotomicElem coefficients (rationals embedded for the
    trivial character); `reduced` records whether the (t-1) factor of a
    nontrivial character was divided out, per the convention used from
    the infinite-order arguments onward.
    """

    def __init__(self, poly, p, q, chi, reduced):
        self.poly = poly
        self.p = p
        self.q = q
        self.chi = tuple(chi)
        self.reduced = reduced

    def is_trivial_character(self):
        return all(c % self.q == 0 for c in self.chi)

    def conjugate_inverse(self):
        return self.poly.involution()

    def is_symmetric(self):
        return self.poly.associate(self.conjugate_inverse())

    def galois(self, n):
        return TwistedPoly(self.poly.galois(n), self.p, self.q,
                           tuple((n * c) % self.q for c in self.chi),
                           self.reduced)

    def __repr__(self):
        return ("TwistedPoly(p=%d, q=%d, chi=%r, %s)"
                % (self.p, self.q, self.chi, self.poly))


def _as_presentation(source):
    if isinstance(source, WirtingerPresentation):
        return source
    if hasattr(source, "wirtinger"):
        return WirtingerPresentation.from_diagram(source)
    from ..knots.diagram import Diagram
    return WirtingerPresentation.from_diagram(Diagram.from_pd(source))


def _cyclo_one_minus_t(q):
    return LaurentPoly(0, [CyclotomicElem.rational(q, -1),
                           CyclotomicElem.rational(q, 1)])


def twisted_alexander(source, p, q, chi, eigs=None, max_generators=30):
    """Twisted Alexander polynomial of the induced metabelian rep.

    source: PD tuples, a Diagram, or a WirtingerPresentation;
    chi: character index i (the map lk(-, i) mod q, scaled through the
    cocycle) or a tuple of coefficients, one per deck eigenvalue in eigs;
    eigs: deck eigenvalues mod q; defaults to (-1,) for p = 2.

    The result is divided by (t-1) when chi is nontrivial.  For the
    trivial character it equals the Galois-twist product of the ordinary
    Alexander polynomial, computed here through the same determinant.
    """
    pres = _as_presentation(source)
    if pres.ngen > max_generators:
        raise ResourceWarning("presentation size %d exceeds cap %d"
                              % (pres.ngen, max_generators))
    if eigs is None:
        if p != 2:
            raise ValueError("eigs required for p > 2")
        eigs = (q - 1,)
    eigs = tuple(a % q for a in eigs)
    if isinstance(chi, int):
        chi = (chi,)
    chi = tuple(c % q for c in chi)
    if len(chi) != len(eigs):
        raise ValueError("one character coefficient per eigenvalue")
    for a in eigs:
        if pow(a, p, q) != 1 or a == 1:
            raise ValueError("eigenvalue %d not of order %d mod %d"
                             % (a, p, q))

    cocycles = []
    for a in eigs:
        reps = cocycle_space(pres, q, a)
        if not reps:
            raise ValueError("no cocycle for eigenvalue %d mod %d: the "
                             "eigenspace is absent" % (a, q))
        if len(reps) > 1:
            raise ValueError("eigenvalue %d has multiplicity %d; only "
                             "multiplicity one is supported" % (a, len(reps)))
        cocycles.append(reps[0])

    images, inverses = induced_images(pres, p, q, eigs, cocycles, chi)
    nontrivial = any(chi)
    last_err = None
    for drop in range(pres.ngen):
        big = _fox_block_matrix(pres, p, q, images, inverses, drop)
        num = _det_laurent(big, q)
        if num.is_zero():
            last_err = "numerator determinant vanished"
            continue
        if not nontrivial:
            # the Wada quotient carries a 1/(t-1); the convention for the
            # trivial character keeps the polynomial numerator, which is
            # the Galois-twist product of the plain Alexander polynomial
            return TwistedPoly(num, p, q, chi, reduced=False)
        den_cell = [[{} for _ in range(p)] for _ in range(p)]
        for l, (c, k, m) in enumerate(images[drop]):
            den_cell[l][c][(k, m)] = 1
            den_cell[l][l][(0, 0)] = den_cell[l][l].get((0, 0), 0) - 1
        den = _det_laurent(
            [[{km: x for km, x in cell.items() if x} for cell in row]
             for row in den_cell], q)
        if den.is_zero():
            last_err = "denominator determinant vanished"
            continue
        try:
            poly = num.exact_divide(den)
        except ValueError:
            last_err = "inexact Wada quotient"
            continue
        try:
            poly = poly.exact_divide(_cyclo_one_minus_t(q))
        except ValueError:
            last_err = "missing (t-1) factor"
            continue
        return TwistedPoly(poly, p, q, chi, reduced=True)
    raise ArithmeticError("twisted polynomial failed for every generator "
                          "choice: %s" % last_err)


def connected_sum_twisted(parts):
    """Product of twisted polynomials of summands under one character.

    Each additional nontrivial character contributes a (1-t) factor to
    the unreduced polynomial; with every part already reduced, the
    product of reduced parts is the reduced polynomial of the sum, which
    is what this returns.
    """
    if not parts:
        raise ValueError("empty sum")
    p0, q0 = parts[0].p, parts[0].q
    if any(f.p != p0 or f.q != q0 for f in parts):
        raise ValueError("mismatched (p, q)")
    poly = parts[0].poly
    for f in parts[1:]:
        poly = poly * f.poly
    chi = tuple(c for f in parts for c in f.chi)
    return TwistedPoly(poly, p0, q0, chi,
                       reduced=any(f.reduced for f in parts))
