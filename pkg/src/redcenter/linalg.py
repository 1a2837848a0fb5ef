"""Sparse exact matrices over Q(zeta_M).

Entries are ``Fraction`` or :class:`~redcenter.cyclo.Cyclo`; rational Cyclo
results are folded back to ``Fraction`` so the cheap path is taken whenever
possible.  Rows are stored as ``{column: value}`` dicts with no explicit zeros.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclo import Cyclo


class ShapeMismatch(ValueError):
    pass


class Singular(ValueError):
    pass


def _simp(x):
    if type(x) is Cyclo and x._rat:
        return x.coeffs[0]
    return x


def _inv(x):
    if type(x) is Cyclo:
        return _simp(x.inv())
    return 1 / Fraction(x)


class Matrix:
    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows=None):
        self.nrows = nrows
        self.ncols = ncols
        self.rows = rows if rows is not None else [dict() for _ in range(nrows)]

    # construction --------------------------------------------------------
    @classmethod
    def zeros(cls, nrows, ncols):
        return cls(nrows, ncols)

    @classmethod
    def identity(cls, n):
        return cls(n, n, [{i: Fraction(1)} for i in range(n)])

    @classmethod
    def scalar(cls, n, c):
        c = _simp(c)
        if not c:
            return cls(n, n)
        return cls(n, n, [{i: c} for i in range(n)])

    @classmethod
    def from_dense(cls, data, ncols=None):
        data = [list(r) for r in data]
        n = len(data)
        m = ncols if ncols is not None else (len(data[0]) if data else 0)
        rows = []
        for r in data:
            if len(r) != m:
                raise ShapeMismatch("ragged dense matrix")
            rows.append({j: _simp(v if isinstance(v, Cyclo) else Fraction(v)) for j, v in enumerate(r) if v})
        return cls(n, m, rows)

    @classmethod
    def from_entries(cls, nrows, ncols, entries):
        """Build from an iterable of (i, j, value), summing duplicates."""
        rows = [dict() for _ in range(nrows)]
        for i, j, v in entries:
            if v:
                r = rows[i]
                r[j] = r[j] + v if j in r else v
        for r in rows:
            for j in [j for j, v in r.items() if not v]:
                del r[j]
            for j, v in r.items():
                r[j] = _simp(v)
        return cls(nrows, ncols, rows)

    @classmethod
    def from_columns(cls, nrows, columns):
        """Columns given as {row: value} dicts."""
        rows = [dict() for _ in range(nrows)]
        for j, col in enumerate(columns):
            for i, v in col.items():
                if v:
                    rows[i][j] = _simp(v)
        return cls(nrows, len(columns), rows)

    @classmethod
    def permutation(cls, perm):
        """Matrix sending basis vector j to basis vector perm[j]."""
        n = len(perm)
        rows = [dict() for _ in range(n)]
        for j, i in enumerate(perm):
            rows[i][j] = Fraction(1)
        return cls(n, n, rows)

    # inspection ----------------------------------------------------------
    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i].get(j, Fraction(0))

    def to_dense(self):
        return [[r.get(j, Fraction(0)) for j in range(self.ncols)] for r in self.rows]

    def column(self, j):
        return {i: r[j] for i, r in enumerate(self.rows) if j in r}

    def columns(self):
        cols = [dict() for _ in range(self.ncols)]
        for i, r in enumerate(self.rows):
            for j, v in r.items():
                cols[j][i] = v
        return cols

    def nnz(self):
        return sum(len(r) for r in self.rows)

    def is_zero(self):
        return not any(self.rows)

    def is_identity(self):
        if self.nrows != self.ncols:
            return False
        return all(len(r) == 1 and r.get(i) == 1 for i, r in enumerate(self.rows))

    def trace(self):
        t = Fraction(0)
        for i, r in enumerate(self.rows):
            if i in r:
                t = t + r[i]
        return _simp(t)

    def __repr__(self):
        if self.nrows * self.ncols <= 64:
            return f"Matrix({self.to_dense()})"
        return f"<Matrix {self.nrows}x{self.ncols}, nnz={self.nnz()}>"

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    __hash__ = None

    # arithmetic ----------------------------------------------------------
    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ShapeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        orows = other.rows
        out = []
        for r in self.rows:
            acc = {}
            for k, a in r.items():
                for j, b in orows[k].items():
                    if j in acc:
                        acc[j] = acc[j] + a * b
                    else:
                        acc[j] = a * b
            out.append({j: _simp(v) for j, v in acc.items() if v})
        return Matrix(self.nrows, other.ncols, out)

    def apply(self, vec: dict) -> dict:
        """Matrix times a sparse column vector {index: value}."""
        out = {}
        for i, r in enumerate(self.rows):
            s = 0
            hit = False
            if len(r) < len(vec):
                for k, a in r.items():
                    if k in vec:
                        s = s + a * vec[k]
                        hit = True
            else:
                for k, b in vec.items():
                    if k in r:
                        s = s + r[k] * b
                        hit = True
            if hit and s:
                out[i] = _simp(s)
        return out

    def _combine(self, other, sign):
        if self.shape != other.shape:
            raise ShapeMismatch(f"cannot add {self.shape} and {other.shape}")
        out = []
        for a, b in zip(self.rows, other.rows):
            r = dict(a)
            for j, v in b.items():
                nv = r[j] + sign * v if j in r else sign * v
                if nv:
                    r[j] = _simp(nv)
                else:
                    r.pop(j, None)
            out.append(r)
        return Matrix(self.nrows, self.ncols, out)

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._combine(other, 1)

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._combine(other, -1)

    def __neg__(self):
        return Matrix(self.nrows, self.ncols, [{j: -v for j, v in r.items()} for r in self.rows])

    def __mul__(self, c):
        if isinstance(c, Matrix):
            return NotImplemented
        c = _simp(c)
        if not c:
            return Matrix(self.nrows, self.ncols)
        return Matrix(self.nrows, self.ncols,
                      [{j: _simp(v * c) for j, v in r.items()} for r in self.rows])

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self * _inv(c)

    @property
    def T(self):
        rows = [dict() for _ in range(self.ncols)]
        for i, r in enumerate(self.rows):
            for j, v in r.items():
                rows[j][i] = v
        return Matrix(self.ncols, self.nrows, rows)

    def map_entries(self, f):
        out = []
        for r in self.rows:
            nr = {}
            for j, v in r.items():
                w = _simp(f(v))
                if w:
                    nr[j] = w
            out.append(nr)
        return Matrix(self.nrows, self.ncols, out)

    def kron(self, other):
        m = other.nrows
        n = other.ncols
        out = []
        for r in self.rows:
            for orow in other.rows:
                nr = {}
                for j, a in r.items():
                    base = j * n
                    for k, b in orow.items():
                        nr[base + k] = _simp(a * b)
                out.append(nr)
        return Matrix(self.nrows * m, self.ncols * n, out)

    def submatrix(self, row_idx, col_idx):
        cmap = {c: k for k, c in enumerate(col_idx)}
        out = []
        for i in row_idx:
            out.append({cmap[j]: v for j, v in self.rows[i].items() if j in cmap})
        return Matrix(len(row_idx), len(col_idx), out)

    def hstack(self, other):
        if self.nrows != other.nrows:
            raise ShapeMismatch("hstack needs equal row counts")
        off = self.ncols
        rows = []
        for a, b in zip(self.rows, other.rows):
            r = dict(a)
            for j, v in b.items():
                r[j + off] = v
            rows.append(r)
        return Matrix(self.nrows, self.ncols + other.ncols, rows)

    def vstack(self, other):
        if self.ncols != other.ncols:
            raise ShapeMismatch("vstack needs equal column counts")
        return Matrix(self.nrows + other.nrows, self.ncols,
                      [dict(r) for r in self.rows] + [dict(r) for r in other.rows])

    # elimination ---------------------------------------------------------
    def rref(self):
        """Reduced row echelon form as (pivot_rows, pivot_columns).

        ``pivot_rows[k]`` is a normalised row whose pivot is
        ``pivot_columns[k]``; pivots are chosen as the leftmost column, so
        the pivot columns index a basis of the column space.
        """
        return _Echelon.from_rows(self.rows).result()

    def rank(self):
        return len(self.rref()[1])

    def nullspace(self):
        """Basis of {x : A x = 0} as sparse dict vectors."""
        rows, pivots = self.rref()
        pivset = set(pivots)
        basis = []
        for f in range(self.ncols):
            if f in pivset:
                continue
            v = {f: Fraction(1)}
            for r, p in zip(rows, pivots):
                if f in r:
                    v[p] = -r[f]
            basis.append(v)
        return basis

    def column_space(self):
        """Matrix whose columns are a basis of the column space."""
        _, pivots = self.rref()
        cols = self.columns()
        return Matrix.from_columns(self.nrows, [cols[p] for p in pivots])

    def solve(self, rhs):
        """Unique X with self @ X = rhs; raises Singular otherwise."""
        if self.nrows != rhs.nrows:
            raise ShapeMismatch("solve needs matching row counts")
        n = self.ncols
        rows, pivots = self.hstack(rhs).rref()
        if pivots[:n] != list(range(n)) or (len(pivots) > n):
            raise Singular("system is singular or inconsistent")
        out = []
        for r in rows[:n]:
            out.append({j - n: v for j, v in r.items() if j >= n})
        return Matrix(n, rhs.ncols, out)

    def inverse(self):
        if self.nrows != self.ncols:
            raise ShapeMismatch("inverse of a non-square matrix")
        return self.solve(Matrix.identity(self.nrows))

    def is_invertible(self):
        return self.nrows == self.ncols and self.rank() == self.nrows


class _Echelon:
    """Incremental reduced echelon form over sparse dict rows."""

    def __init__(self):
        self.piv = {}  # pivot column -> normalised row

    @classmethod
    def from_rows(cls, rows):
        e = cls()
        for r in rows:
            if r:
                e.add(r)
        return e

    def reduce(self, row):
        r = dict(row)
        hits = [c for c in r if c in self.piv]
        for c in hits:
            f = r.get(c)
            if not f:
                continue
            for j, v in self.piv[c].items():
                nv = r[j] - f * v if j in r else -f * v
                if nv:
                    r[j] = _simp(nv)
                else:
                    del r[j]
        return r

    def add(self, row):
        r = self.reduce(row)
        if not r:
            return False
        c = min(r)
        inv = _inv(r[c])
        r = {j: _simp(v * inv) for j, v in r.items()}
        for pc, prow in self.piv.items():
            f = prow.get(c)
            if f:
                for j, v in r.items():
                    nv = prow[j] - f * v if j in prow else -f * v
                    if nv:
                        prow[j] = _simp(nv)
                    else:
                        del prow[j]
        self.piv[c] = r
        return True

    def result(self):
        cols = sorted(self.piv)
        return [self.piv[c] for c in cols], cols


def same_column_space(A: Matrix, B: Matrix) -> bool:
    ra = A.rank()
    return ra == B.rank() and A.hstack(B).rank() == ra


def block_diag(*mats):
    n = sum(m.nrows for m in mats)
    k = sum(m.ncols for m in mats)
    rows = []
    off = 0
    for m in mats:
        for r in m.rows:
            rows.append({j + off: v for j, v in r.items()})
        off += m.ncols
    return Matrix(n, k, rows)


class Embedding:
    """A full-column-rank matrix E viewed as a subspace with coordinates.

    ``coords(M)`` returns X with E X = M for M whose columns lie in the
    column space of E; ``restrict(A)`` is the matrix of A on the subspace.
    """

    def __init__(self, E: Matrix):
        self.E = E
        _, rows = E.T.rref()
        if len(rows) != E.ncols:
            raise Singular("embedding matrix does not have full column rank")
        self.rows = rows
        self._inv = E.submatrix(rows, list(range(E.ncols))).inverse()

    @property
    def dim(self):
        return self.E.ncols

    def coords(self, M: Matrix, check=True) -> Matrix:
        X = self._inv @ M.submatrix(self.rows, list(range(M.ncols)))
        if check and self.E @ X != M:
            raise ValueError("columns do not lie in the subspace")
        return X

    def restrict(self, A: Matrix, check=True) -> Matrix:
        return self.coords(A @ self.E, check=check)
