"""Exact linear algebra over the rationals.

Dense routines take matrices as lists of rows of Fractions (or ints) and
are used for the small kernel computations.  The sparse column
elimination is used for the weight-slice rank sweeps, whose matrices are
large but have only a couple of entries per column.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def rref(rows):
    """Reduced row echelon form.  Returns (rows, pivot_columns)."""
    mat = [[Fraction(x) for x in row] for row in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [v * inv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat, pivots


def rank(rows):
    return len(rref(rows)[1])


def nullspace(rows):
    """Basis of the right kernel of the matrix, one vector per free column."""
    if not rows:
        return []
    ncols = len(rows[0])
    mat, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -mat[r][fc]
        basis.append(vec)
    return basis


def row_space_basis(rows):
    """Nonzero rows of the reduced row echelon form."""
    mat, pivots = rref(rows)
    return [mat[i] for i in range(len(pivots))]


def in_span(vectors, target):
    """Whether target lies in the linear span of the given vectors."""
    if all(x == 0 for x in target):
        return True
    if not vectors:
        return False
    return rank(vectors) == rank(list(vectors) + [list(target)])


def span_equal(vecs_a, vecs_b):
    """Whether two families of vectors span the same subspace."""
    ra = rank(vecs_a) if vecs_a else 0
    rb = rank(vecs_b) if vecs_b else 0
    if ra != rb:
        return False
    return rank(list(vecs_a) + list(vecs_b)) == ra if ra else True


def kernel_mod_image(gen_cols, image_cols, dim):
    """Kernel of the map a |-> sum_i a_i * gen_cols[i] into the quotient
    of Q^dim by the span of image_cols.

    Columns are given as vectors of length ``dim``.  Returns a basis of
    coefficient vectors of length len(gen_cols), in reduced row echelon
    form.
    """
    ngen = len(gen_cols)
    if ngen == 0:
        return []
    cols = list(gen_cols) + list(image_cols)
    rows = [[cols[j][i] for j in range(len(cols))] for i in range(dim)]
    projected = [vec[:ngen] for vec in nullspace(rows)]
    return row_space_basis(projected)


def normalize_integer_vector(vec):
    """Scale a rational vector to coprime integers with positive leading
    nonzero entry.  The zero vector is returned unchanged.
    """
    vec = [Fraction(x) for x in vec]
    nonzero = [x for x in vec if x != 0]
    if not nonzero:
        return tuple(int(x) for x in vec)
    mult = 1
    for x in nonzero:
        mult = mult * x.denominator // gcd(mult, x.denominator)
    ints = [int(x * mult) for x in vec]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    ints = [v // g for v in ints]
    lead = next(v for v in ints if v != 0)
    if lead < 0:
        ints = [-v for v in ints]
    return tuple(ints)


def rank_of_columns(columns):
    """Rank of a sparse matrix given as an iterable of columns, each a
    mapping from row index to coefficient.  Pivot columns are kept fully
    reduced against each other, so each incoming column needs one pass.
    """
    pivots = {}
    count = 0
    for col in columns:
        col = {r: Fraction(v) for r, v in col.items() if v != 0}
        for r in sorted(set(col) & set(pivots)):
            f = col.pop(r)
            for rr, vv in pivots[r].items():
                if rr == r:
                    continue
                nv = col.get(rr, Fraction(0)) - f * vv
                if nv:
                    col[rr] = nv
                else:
                    col.pop(rr, None)
        if not col:
            continue
        pr = min(col)
        inv = 1 / col[pr]
        newcol = {r: v * inv for r, v in col.items()}
        for other in pivots.values():
            if pr in other:
                f = other.pop(pr)
                for rr, vv in newcol.items():
                    if rr == pr:
                        continue
                    nv = other.get(rr, Fraction(0)) - f * vv
                    if nv:
                        other[rr] = nv
                    else:
                        other.pop(rr, None)
        pivots[pr] = newcol
        count += 1
    return count
