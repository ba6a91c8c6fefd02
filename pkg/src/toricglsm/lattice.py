"""Exact integer linear algebra: Smith normal form, kernels, saturation.

Everything here works with arbitrary-precision Python ints.  Matrices are
immutable; all operations are pure functions, so concurrent callers need
no synchronization.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix, row-major entries."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative dimensions")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                "entry count %d does not match %dx%d"
                % (len(self.entries), self.rows, self.cols)
            )
        if not all(isinstance(e, int) for e in self.entries):
            raise TypeError("entries must be ints")

    @staticmethod
    def from_rows(rows):
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return IntMatrix(len(rows), ncols, tuple(e for r in rows for e in r))

    @staticmethod
    def identity(n):
        return IntMatrix(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @staticmethod
    def zero(rows, cols):
        return IntMatrix(rows, cols, (0,) * (rows * cols))

    def at(self, i, j):
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j):
        return tuple(self.at(i, j) for i in range(self.rows))

    def to_rows(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self):
        return IntMatrix(
            self.cols, self.rows, tuple(self.at(i, j) for j in range(self.cols) for i in range(self.rows))
        )

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in product")
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                out.append(sum(ri[k] * other.at(k, j) for k in range(self.cols)))
        return IntMatrix(self.rows, other.cols, tuple(out))

    def mul_vec(self, v):
        if len(v) != self.cols:
            raise ValueError("dimension mismatch in matrix-vector product")
        return tuple(sum(self.row(i)[k] * v[k] for k in range(self.cols)) for i in range(self.rows))

    def det(self):
        """Determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = self.to_rows()
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
                a[i][k] = 0
            prev = a[k][k]
        return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class SmithDecomposition:
    """U @ A @ V = D with U, V unimodular and D diagonal, d_1 | d_2 | ..."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    def diagonal(self):
        return tuple(self.D.at(i, i) for i in range(min(self.D.rows, self.D.cols)))

    def rank(self):
        return sum(1 for d in self.diagonal() if d != 0)


def rank(A: IntMatrix) -> int:
    """Rank over Q by fraction-free Gaussian elimination."""
    a = [list(map(Fraction, A.row(i))) for i in range(A.rows)]
    r = 0
    for j in range(A.cols):
        piv = next((i for i in range(r, A.rows) if a[i][j] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(A.rows):
            if i != r and a[i][j] != 0:
                f = a[i][j] / a[r][j]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
    return r


def _pivot(a, t, nr, nc):
    """Smallest-|entry| nonzero pivot in the trailing submatrix, ties by (row, col)."""
    best = None
    for i in range(t, nr):
        for j in range(t, nc):
            if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                best = (i, j)
    return best


def smith_normal_form(A: IntMatrix) -> SmithDecomposition:
    """Smith normal form U*A*V = D, deterministic pivoting."""
    nr, nc = A.rows, A.cols
    a = A.to_rows()
    u = IntMatrix.identity(nr).to_rows()
    v = IntMatrix.identity(nc).to_rows()

    def swap_rows(i, k):
        a[i], a[k] = a[k], a[i]
        u[i], u[k] = u[k], u[i]

    def swap_cols(j, k):
        for r in a:
            r[j], r[k] = r[k], r[j]
        for r in v:
            r[j], r[k] = r[k], r[j]

    def add_row(i, k, q):
        # row_i += q * row_k
        a[i] = [x + q * y for x, y in zip(a[i], a[k])]
        u[i] = [x + q * y for x, y in zip(u[i], u[k])]

    def add_col(j, k, q):
        # col_j += q * col_k
        for r in a:
            r[j] += q * r[k]
        for r in v:
            r[j] += q * r[k]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    nmin = min(nr, nc)
    while t < nmin:
        loc = _pivot(a, t, nr, nc)
        if loc is None:
            break
        if loc[0] != t:
            swap_rows(t, loc[0])
        if loc[1] != t:
            swap_cols(t, loc[1])
        dirty = False
        for i in range(t + 1, nr):
            if a[i][t] != 0:
                q = a[i][t] // a[t][t]
                add_row(i, t, -q)
                if a[i][t] != 0:
                    dirty = True
        for j in range(t + 1, nc):
            if a[t][j] != 0:
                q = a[t][j] // a[t][t]
                add_col(j, t, -q)
                if a[t][j] != 0:
                    dirty = True
        if dirty:
            continue
        # pivot divides everything in its row/column; enforce divisibility
        # into the remaining block before moving on
        bad = None
        for i in range(t + 1, nr):
            for j in range(t + 1, nc):
                if a[i][j] % a[t][t] != 0:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            add_row(t, bad, 1)
            continue
        if a[t][t] < 0:
            negate_row(t)
        t += 1

    return SmithDecomposition(IntMatrix.from_rows(u), IntMatrix.from_rows(a), IntMatrix.from_rows(v))


def integer_kernel(A: IntMatrix):
    """Basis of the lattice {v in Z^cols : A*v = 0}.

    The basis is the set of columns of V (from the SNF of A) whose
    corresponding diagonal entry is zero, in V's column order.  The kernel
    of an integer matrix is automatically saturated.
    """
    snf = smith_normal_form(A)
    r = snf.rank()
    return [snf.V.column(j) for j in range(r, A.cols)]


def saturate(vectors):
    """Basis of span_Q(vectors) intersected with Z^n.

    Double-kernel construction: the saturation of a rational span is the
    integer kernel of any matrix whose rows span its orthogonal complement.
    """
    vecs = [tuple(v) for v in vectors]
    if not vecs:
        return []
    n = len(vecs[0])
    if any(len(v) != n for v in vecs):
        raise ValueError("vectors of mixed lengths")
    perp = integer_kernel(IntMatrix.from_rows(vecs))
    if not perp:
        return [IntMatrix.identity(n).column(j) for j in range(n)]
    return integer_kernel(IntMatrix.from_rows(perp))


def solve_integer(A: IntMatrix, b):
    """Some integer solution x of A*x = b, or None if there is none."""
    if len(b) != A.rows:
        raise ValueError("right-hand side has wrong length")
    snf = smith_normal_form(A)
    c = snf.U.mul_vec(tuple(b))
    w = [0] * A.cols
    diag = snf.diagonal()
    for i in range(A.rows):
        d = diag[i] if i < len(diag) else 0
        if d == 0:
            if c[i] != 0:
                return None
        else:
            if c[i] % d != 0:
                return None
            w[i] = c[i] // d
    return snf.V.mul_vec(tuple(w))
