"""Exact dense linear algebra.

Rank and determinant use fraction-free (Bareiss) elimination to keep
intermediate entries small; nullspace uses plain Gauss-Jordan over a field;
the characteristic polynomial uses Faddeev-LeVerrier, which stays exact over
any ring containing Q.  A separate unit-pivot solver handles systems over the
dual numbers Q[eps]/(eps^2).
"""

from __future__ import annotations

from fractions import Fraction

from .polynomials import UniPoly
from .scalars import DualNumber


class ExactMatrix:
    """Row-major dense matrix over an exact scalar ring."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data):
        self.data = [list(row) for row in data]
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.rows else 0
        for row in self.data:
            if len(row) != self.cols:
                raise ValueError("ragged matrix")

    @classmethod
    def identity(cls, size, one=1, zero=0):
        return cls([[one if i == j else zero for j in range(size)] for i in range(size)])

    @classmethod
    def zeros(cls, rows, cols, zero=0):
        return cls([[zero] * cols for _ in range(rows)])

    def __getitem__(self, ij):
        return self.data[ij[0]][ij[1]]

    def __setitem__(self, ij, v):
        self.data[ij[0]][ij[1]] = v

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.data == other.data

    def copy(self):
        return ExactMatrix(self.data)

    def transpose(self):
        return ExactMatrix([[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def matmul(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                s = 0
                for k in range(self.cols):
                    s = s + self.data[i][k] * other.data[k][j]
                row.append(s)
            out.append(row)
        return ExactMatrix(out)

    def matvec(self, v):
        if self.cols != len(v):
            raise ValueError("shape mismatch")
        out = []
        for i in range(self.rows):
            s = 0
            for k in range(self.cols):
                s = s + self.data[i][k] * v[k]
            out.append(s)
        return out

    def __repr__(self):
        return "ExactMatrix(%d x %d)" % (self.rows, self.cols)


def mat_rank(a: ExactMatrix) -> int:
    """Rank by fraction-free (Bareiss) elimination."""
    m = [row[:] for row in a.data]
    rows, cols = a.rows, a.cols
    rank = 0
    prev = 1
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, rows):
            for j in range(c + 1, cols):
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev
            m[i][c] = 0
        prev = m[r][c]
        r += 1
        rank += 1
        if r == rows:
            break
    return rank


def mat_det(a: ExactMatrix):
    """Determinant by Bareiss elimination (square input)."""
    if a.rows != a.cols:
        raise ValueError("determinant of a non-square matrix")
    n = a.rows
    if n == 0:
        return 1
    m = [row[:] for row in a.data]
    sign = 1
    prev = 1
    for r in range(n - 1):
        if not m[r][r]:
            piv = None
            for i in range(r + 1, n):
                if m[i][r]:
                    piv = i
                    break
            if piv is None:
                return 0
            m[r], m[piv] = m[piv], m[r]
            sign = -sign
        for i in range(r + 1, n):
            for j in range(r + 1, n):
                m[i][j] = (m[r][r] * m[i][j] - m[i][r] * m[r][j]) / prev
            m[i][r] = 0
        prev = m[r][r]
    return m[n - 1][n - 1] if sign > 0 else -m[n - 1][n - 1]


def _rref(data, rows, cols):
    """In-place reduced row echelon form over a field; returns pivot columns."""
    pivots = []
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if data[i][c]:
                piv = i
                break
        if piv is None:
            continue
        data[r], data[piv] = data[piv], data[r]
        lead = data[r][c]
        data[r] = [v / lead for v in data[r]]
        for i in range(rows):
            if i != r and data[i][c]:
                f = data[i][c]
                data[i] = [vi - f * vr for vi, vr in zip(data[i], data[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return pivots


def mat_nullspace(a: ExactMatrix):
    """Basis of the right kernel over a field, one vector per free column."""
    m = [row[:] for row in a.data]
    pivots = _rref(m, a.rows, a.cols)
    pivot_set = set(pivots)
    free = [c for c in range(a.cols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [0] * a.cols
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = -m[r][fc]
        basis.append(v)
    return basis


def mat_solve(a: ExactMatrix, b):
    """One solution of A x = b over a field, or None if inconsistent."""
    m = [row[:] + [bv] for row, bv in zip(a.data, b)]
    pivots = _rref(m, a.rows, a.cols + 1)
    if a.cols in pivots:
        return None
    x = [0] * a.cols
    for r, pc in enumerate(pivots):
        x[pc] = m[r][a.cols]
    return x


def mat_charpoly(a: ExactMatrix) -> UniPoly:
    """Monic characteristic polynomial det(zI - A) via Faddeev-LeVerrier."""
    if a.rows != a.cols:
        raise ValueError("characteristic polynomial of a non-square matrix")
    n = a.rows
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    m = ExactMatrix.zeros(n, n)
    c = 1
    for k in range(1, n + 1):
        # M_k = A (M_{k-1} + c_{n-k+1} I)
        step = ExactMatrix([[m.data[i][j] + (c if i == j else 0) for j in range(n)] for i in range(n)])
        m = a.matmul(step)
        tr = 0
        for i in range(n):
            tr = tr + m.data[i][i]
        c = Fraction(-1, k) * tr
        coeffs[n - k] = c
    return UniPoly(coeffs)


class DualSolveError(Exception):
    """Elimination over Q[eps]/(eps^2) stalled on a non-unit pivot column."""

    def __init__(self, column, message):
        super().__init__(message)
        self.column = column


class DualSolution:
    """Solution set of a dual-number linear system.

    ``status`` is "unique", "parametrized" or "inconsistent".  For the first
    two, the set is particular + span over Q[eps]/(eps^2) of ``basis``.
    """

    def __init__(self, status, particular=None, basis=None):
        self.status = status
        self.particular = particular
        self.basis = basis or []

    def __repr__(self):
        return "DualSolution(%r, free=%d)" % (self.status, len(self.basis))


def _as_dual(v):
    return v if isinstance(v, DualNumber) else DualNumber(v)


def dual_solve(a: ExactMatrix, b) -> DualSolution:
    """Solve A x = b over the dual numbers, pivoting only on units.

    Rows that end up with all non-unit (pure-eps) coefficients are decided
    directly: a unit residue means the system is inconsistent; a nonzero eps
    residue (or eps coefficients that would constrain the free variables)
    cannot be resolved by unit pivots and raises DualSolveError.
    """
    rows, cols = a.rows, a.cols
    m = [[_as_dual(v) for v in row] + [_as_dual(bv)] for row, bv in zip(a.data, b)]
    pivots = []
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if m[i][c].is_unit():
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        lead = m[r][c]
        m[r] = [v / lead for v in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [vi - f * vr for vi, vr in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    # residual rows: every coefficient is a non-unit
    for i in range(r, rows):
        rhs = m[i][cols]
        coeff_nonzero = any(m[i][c] for c in range(cols))
        if rhs.is_unit():
            return DualSolution("inconsistent")
        if coeff_nonzero:
            raise DualSolveError(
                None,
                "non-unit pivot row with residue %s: not solvable by unit pivots" % rhs,
            )
        if rhs:
            return DualSolution("inconsistent")
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    particular = [_as_dual(0)] * cols
    for rr, pc in enumerate(pivots):
        particular[pc] = m[rr][cols]
    basis = []
    for fc in free:
        v = [_as_dual(0)] * cols
        v[fc] = _as_dual(1)
        for rr, pc in enumerate(pivots):
            v[pc] = -m[rr][fc]
        basis.append(v)
    status = "unique" if not free else "parametrized"
    return DualSolution(status, particular, basis)
