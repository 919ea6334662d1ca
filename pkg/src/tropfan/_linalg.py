"""Exact integer and rational linear algebra helpers.

Everything here works with Python ints and fractions.Fraction; no floats.
Matrices are lists of row tuples/lists.
"""

from fractions import Fraction
from math import gcd


def vec_gcd(v):
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    return g


def primitive(v):
    """Divide an integer vector by the gcd of its entries (zero stays zero)."""
    g = vec_gcd(v)
    if g <= 1:
        return tuple(v)
    return tuple(x // g for x in v)


def vec_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vec_scale(c, v):
    return tuple(c * x for x in v)


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def is_zero(v):
    return all(x == 0 for x in v)


def hnf_with_transform(mat, ncols):
    """Row-style Hermite normal form with unimodular transform.

    Returns (H, U, rank) with U * mat == H, pivots positive and entries
    above each pivot reduced into [0, pivot).  Zero rows of H sit at the
    bottom.  `mat` is not modified.
    """
    m = len(mat)
    rows = [list(r) for r in mat]
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, m):
            if rows[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        U[r], U[piv] = U[piv], U[r]
        # Euclidean elimination below the pivot.
        for j in range(r + 1, m):
            while rows[j][c] != 0:
                q = rows[r][c] // rows[j][c]
                rows[r] = [a - q * b for a, b in zip(rows[r], rows[j])]
                U[r] = [a - q * b for a, b in zip(U[r], U[j])]
                rows[r], rows[j] = rows[j], rows[r]
                U[r], U[j] = U[j], U[r]
        if rows[r][c] < 0:
            rows[r] = [-a for a in rows[r]]
            U[r] = [-a for a in U[r]]
        for j in range(r):
            q = rows[j][c] // rows[r][c]
            if q:
                rows[j] = [a - q * b for a, b in zip(rows[j], rows[r])]
                U[j] = [a - q * b for a, b in zip(U[j], U[r])]
        r += 1
    return [tuple(row) for row in rows], U, r


def hnf(mat, ncols):
    """Nonzero rows of the row-style Hermite normal form of `mat`."""
    H, _, r = hnf_with_transform(mat, ncols)
    return [tuple(row) for row in H[:r]]


def pivot_columns(H, ncols):
    pivots = []
    for row in H:
        for c in range(ncols):
            if row[c] != 0:
                pivots.append(c)
                break
    return pivots


def express_in_hnf(H, ncols, v):
    """Integer coefficients c with sum(c_i * H_i) == v, or None.

    H must be in row HNF (nonzero rows only).
    """
    v = list(v)
    coeffs = []
    pivots = pivot_columns(H, ncols)
    for row, p in zip(H, pivots):
        if v[p] % row[p] != 0:
            # Might still fail later; the triangular structure makes this exact.
            return None
        q = v[p] // row[p]
        coeffs.append(q)
        if q:
            v = [a - q * b for a, b in zip(v, row)]
    if any(v):
        return None
    return coeffs


def left_kernel(mat, ncols):
    """Basis of {u integer : u * mat == 0} for `mat` with len(mat) rows."""
    H, U, r = hnf_with_transform(mat, ncols)
    return [tuple(row) for row in U[r:]]


def integer_kernel(mat, ncols):
    """Basis of the integer solutions x of mat * x == 0 (x of length ncols).

    The result is a saturated lattice basis (the full integer kernel).
    """
    if not mat:
        return [tuple(1 if i == j else 0 for j in range(ncols)) for i in range(ncols)]
    transpose = [tuple(row[i] for row in mat) for i in range(ncols)]
    return left_kernel(transpose, len(mat))


def solve_integer(rows, ncols, target):
    """One integer solution c of sum(c_i * rows_i) == target, or None."""
    H, U, r = hnf_with_transform(rows, ncols)
    coeffs = express_in_hnf(H[:r], ncols, target)
    if coeffs is None:
        return None
    sol = [0] * len(rows)
    for c, urow in zip(coeffs, U[:r]):
        if c:
            sol = [a + c * b for a, b in zip(sol, urow)]
    return tuple(sol)


def rational_rank(mat):
    """Rank of a matrix with int or Fraction entries."""
    rows = [[Fraction(x) for x in row] for row in mat]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        inv = 1 / prow[c]
        rows[rank] = [x * inv for x in prow]
        for i in range(len(rows)):
            if i != rank and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def rational_solve(mat, rhs):
    """One rational solution x of mat * x == rhs, or None if inconsistent.

    mat is a list of rows; rhs a vector of the same length as mat.
    """
    m = len(mat)
    n = len(mat[0]) if m else 0
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(mat, rhs)]
    pivots = []
    rank = 0
    for c in range(n):
        piv = next((i for i in range(rank, m) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[rank], aug[piv] = aug[piv], aug[rank]
        inv = 1 / aug[rank][c]
        aug[rank] = [x * inv for x in aug[rank]]
        for i in range(m):
            if i != rank and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[rank])]
        pivots.append(c)
        rank += 1
    for i in range(rank, m):
        if aug[i][n] != 0:
            return None
    x = [Fraction(0)] * n
    for row, c in zip(aug[:rank], pivots):
        x[c] = row[n]
    return x


def rational_nullspace(mat, ncols):
    """Basis (rows of Fractions) of the rational kernel of mat."""
    basis = integer_kernel([[int(x) if isinstance(x, int) else x for x in row] for row in mat], ncols) \
        if all(isinstance(x, int) for row in mat for x in row) else None
    if basis is not None:
        return [tuple(Fraction(x) for x in b) for b in basis]
    # Fraction entries: clear denominators row by row.
    cleared = []
    for row in mat:
        fr = [Fraction(x) for x in row]
        den = 1
        for x in fr:
            den = den * x.denominator // gcd(den, x.denominator)
        cleared.append([int(x * den) for x in fr])
    return [tuple(Fraction(x) for x in b) for b in integer_kernel(cleared, ncols)]


def clear_denominators(vec):
    """Scale a rational vector to a primitive integer vector (direction kept)."""
    fr = [Fraction(x) for x in vec]
    den = 1
    for x in fr:
        den = den * x.denominator // gcd(den, x.denominator)
    return primitive([int(x * den) for x in fr])


def is_psd(mat):
    """Exact positive-semidefiniteness of a rational symmetric matrix.

    Symmetric Gaussian pivoting: a symmetric matrix is PSD iff at every
    step the working diagonal is nonnegative and no zero diagonal entry
    has a nonzero row.
    """
    a = [[Fraction(x) for x in row] for row in mat]
    n = len(a)
    for k in range(n):
        if a[k][k] < 0:
            return False
        if a[k][k] == 0:
            if any(a[k][j] != 0 for j in range(k, n)):
                return False
            continue
        for i in range(k + 1, n):
            if a[i][k] != 0:
                f = a[i][k] / a[k][k]
                for j in range(k, n):
                    a[i][j] -= f * a[k][j]
    return True


def lp_feasible(a_eq, b_eq, nvars):
    """Exact feasibility of {x >= 0 : a_eq x = b_eq} via phase-1 simplex.

    Bland's rule guarantees termination.  Entries may be ints or Fractions.
    """
    m = len(a_eq)
    rows = []
    rhs = []
    for row, b in zip(a_eq, b_eq):
        row = [Fraction(x) for x in row]
        b = Fraction(b)
        if b < 0:
            row = [-x for x in row]
            b = -b
        rows.append(row)
        rhs.append(b)
    # Tableau columns: nvars structural + m artificial + rhs.
    total = nvars + m
    tab = []
    for i in range(m):
        art = [Fraction(1) if j == i else Fraction(0) for j in range(m)]
        tab.append(rows[i] + art + [rhs[i]])
    basis = [nvars + i for i in range(m)]
    # Objective: minimize sum of artificials -> reduced cost row.
    cost = [Fraction(0)] * (total + 1)
    for i in range(m):
        for j in range(total + 1):
            cost[j] += tab[i][j]
    while True:
        enter = None
        for j in range(nvars):  # artificials never re-enter
            if cost[j] > 0:
                enter = j
                break
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = tab[i][total] / tab[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            break  # unbounded improving direction cannot happen in phase 1
        piv = tab[leave][enter]
        tab[leave] = [x / piv for x in tab[leave]]
        for i in range(m):
            if i != leave and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [a - f * b for a, b in zip(tab[i], tab[leave])]
        f = cost[enter]
        cost = [a - f * b for a, b in zip(cost, tab[leave])]
        basis[leave] = enter
    return cost[total] == 0
