"""Dense exact matrices over Q(i).

Matrices are immutable.  Real (rational) matrices may additionally be backed by
``flint.fmpq_mat``, which does elimination and products far faster than pure
Python; the reduced row echelon form is unique, so both backends return
identical pivots and kernels.  Gaussian (non-real) matrices always use the pure
Python path.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .scalar import ONE, ZERO, Scalar, as_scalar, format_scalar, parse_scalar

try:  # optional accelerator
    import flint
except ImportError:  # pragma: no cover - exercised only without python-flint
    flint = None

# below this many entries pure Python is as fast as converting
_FLINT_MIN = 36


def _to_fmpq(s: Scalar):
    return flint.fmpq(s.re.numerator, s.re.denominator)


_FZERO = Fraction(0)


def _from_fmpq(q) -> Scalar:
    if not q:
        return ZERO
    # flint keeps fractions reduced with a positive denominator
    return Scalar._make(Fraction(int(q.p), int(q.q), _normalize=False), _FZERO)


class ExactMatrix:
    __slots__ = ("nrows", "ncols", "_rows", "_fl", "_real")

    def __init__(self, rows: Iterable[Iterable] = (), ncols: int | None = None):
        data = tuple(tuple(as_scalar(x) for x in row) for row in rows)
        self.nrows = len(data)
        if ncols is None:
            ncols = len(data[0]) if data else 0
        if any(len(r) != ncols for r in data):
            raise ValueError("ragged matrix rows")
        self.ncols = ncols
        self._rows = data
        self._fl = None
        self._real = None

    @classmethod
    def _from_rows(cls, rows, nrows, ncols, real=None):
        m = object.__new__(cls)
        m.nrows, m.ncols, m._rows, m._fl, m._real = nrows, ncols, rows, None, real
        return m

    @classmethod
    def _from_flint(cls, fl):
        m = object.__new__(cls)
        m.nrows, m.ncols, m._rows, m._fl, m._real = fl.nrows(), fl.ncols(), None, fl, True
        return m

    # construction -------------------------------------------------------------
    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls._from_rows(tuple(tuple(ONE if i == j else ZERO for j in range(n))
                                    for i in range(n)), n, n, True)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "ExactMatrix":
        return cls._from_rows(tuple((ZERO,) * ncols for _ in range(nrows)), nrows, ncols, True)

    @classmethod
    def diagonal(cls, entries: Sequence) -> "ExactMatrix":
        n = len(entries)
        e = [as_scalar(x) for x in entries]
        return cls._from_rows(tuple(tuple(e[i] if i == j else ZERO for j in range(n))
                                    for i in range(n)), n, n)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], nrows: int | None = None) -> "ExactMatrix":
        if not cols:
            return cls.zeros(nrows or 0, 0)
        return cls([[c[i] for c in cols] for i in range(len(cols[0]))])

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> "ExactMatrix":
        """Matrix unit E_ij."""
        return cls([[1 if (a, b) == (i, j) else 0 for b in range(n)] for a in range(n)])

    # access -------------------------------------------------------------------
    @property
    def rows(self) -> tuple:
        if self._rows is None:
            self._rows = tuple(tuple(_from_fmpq(q) for q in row) for row in self._fl.table())
        return self._rows

    def is_real(self) -> bool:
        if self._real is None:
            self._real = all(not x.im for row in self.rows for x in row)
        return self._real

    def _flint(self):
        if self._fl is None:
            self._fl = flint.fmpq_mat(self.nrows, self.ncols,
                                      [_to_fmpq(x) for row in self.rows for x in row])
        return self._fl

    def _use_flint(self, *others) -> bool:
        if flint is None:
            return False
        mats = (self,) + others
        if not all(m.is_real() for m in mats):
            return False
        return any(m._fl is not None for m in mats) or \
            max(m.nrows * m.ncols for m in mats) >= _FLINT_MIN

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def row(self, i: int) -> tuple:
        return self.rows[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    # arithmetic ---------------------------------------------------------------
    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch in addition")
        if self._fl is not None and other._fl is not None:
            return ExactMatrix._from_flint(self._fl + other._fl)
        return ExactMatrix._from_rows(tuple(tuple(a + b for a, b in zip(r, s))
                                            for r, s in zip(self.rows, other.rows)),
                                      self.nrows, self.ncols)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch in subtraction")
        if self._fl is not None and other._fl is not None:
            return ExactMatrix._from_flint(self._fl - other._fl)
        return ExactMatrix._from_rows(tuple(tuple(a - b for a, b in zip(r, s))
                                            for r, s in zip(self.rows, other.rows)),
                                      self.nrows, self.ncols)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "ExactMatrix":
        c = as_scalar(c)
        if self._fl is not None and c.is_real():
            return ExactMatrix._from_flint(self._fl * _to_fmpq(c))
        return ExactMatrix._from_rows(tuple(tuple(x * c for x in r) for r in self.rows),
                                      self.nrows, self.ncols)

    def __matmul__(self, other):
        if isinstance(other, ExactMatrix):
            if self.ncols != other.nrows:
                raise ValueError("shape mismatch in product")
            if self._use_flint(other):
                return ExactMatrix._from_flint(self._flint() * other._flint())
            cols = list(zip(*other.rows)) if other.nrows else [()] * other.ncols
            out = []
            for r in self.rows:
                nz = [(k, a) for k, a in enumerate(r) if a]
                row = []
                for c in cols:
                    s = ZERO
                    for k, a in nz:
                        b = c[k]
                        if b:
                            s = s + a * b
                    row.append(s)
                out.append(tuple(row))
            return ExactMatrix._from_rows(tuple(out), self.nrows, other.ncols)
        return self.apply(other)

    def __mul__(self, c):
        if isinstance(c, ExactMatrix):
            return self @ c
        return self.scale(c)

    __rmul__ = scale

    def apply(self, v: Sequence) -> tuple:
        """Matrix times column vector."""
        v = [as_scalar(x) for x in v]
        if len(v) != self.ncols:
            raise ValueError("vector length mismatch")
        out = []
        for r in self.rows:
            s = ZERO
            for a, b in zip(r, v):
                if a and b:
                    s = s + a * b
            out.append(s)
        return tuple(out)

    def transpose(self) -> "ExactMatrix":
        if self._fl is not None:
            return ExactMatrix._from_flint(self._fl.transpose())
        return ExactMatrix._from_rows(tuple(zip(*self.rows)) if self.nrows else
                                      tuple(() for _ in range(self.ncols)),
                                      self.ncols, self.nrows, self._real)

    T = property(transpose)

    def __pow__(self, n: int) -> "ExactMatrix":
        if not self.is_square():
            raise ValueError("power of a non-square matrix")
        result, base = ExactMatrix.identity(self.nrows), self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def trace(self) -> Scalar:
        s = ZERO
        for i in range(min(self.nrows, self.ncols)):
            s = s + self.rows[i][i]
        return s

    def commutator(self, other: "ExactMatrix") -> "ExactMatrix":
        return self @ other - other @ self

    def is_zero(self) -> bool:
        if self._fl is not None:
            return all(not q for q in self._fl.entries())
        return all(not x for r in self.rows for x in r)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.shape != other.shape:
            return False
        if self._fl is not None and other._fl is not None:
            return self._fl == other._fl
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def is_scalar_matrix(self):
        """Return the scalar c if self == c*I, else None."""
        if not self.is_square():
            return None
        if self.nrows == 0:
            return ZERO
        c = self.rows[0][0]
        for i, r in enumerate(self.rows):
            for j, x in enumerate(r):
                if x != (c if i == j else ZERO):
                    return None
        return c

    def block_diag(self, other: "ExactMatrix") -> "ExactMatrix":
        n = self.ncols + other.ncols
        rows = [tuple(r) + (ZERO,) * other.ncols for r in self.rows]
        rows += [(ZERO,) * self.ncols + tuple(r) for r in other.rows]
        return ExactMatrix._from_rows(tuple(rows), self.nrows + other.nrows, n)

    def kron(self, other: "ExactMatrix") -> "ExactMatrix":
        rows = []
        for r in self.rows:
            for s in other.rows:
                rows.append(tuple(a * b for a in r for b in s))
        return ExactMatrix._from_rows(tuple(rows), self.nrows * other.nrows,
                                      self.ncols * other.ncols)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "ExactMatrix":
        return ExactMatrix([[self.rows[i][j] for j in cols] for i in rows])

    @staticmethod
    def vstack(mats: Sequence["ExactMatrix"], ncols: int | None = None) -> "ExactMatrix":
        mats = [m for m in mats if m.nrows]
        if not mats:
            return ExactMatrix.zeros(0, ncols or 0)
        if mats[0]._use_flint(*mats[1:]):
            entries = []
            for m in mats:
                entries.extend(m._flint().entries())
            return ExactMatrix._from_flint(flint.fmpq_mat(len(entries) // mats[0].ncols,
                                                          mats[0].ncols, entries))
        rows = []
        for m in mats:
            rows.extend(m.rows)
        return ExactMatrix._from_rows(tuple(rows), len(rows), mats[0].ncols)

    def reshape(self, nrows: int, ncols: int) -> "ExactMatrix":
        """Row-major reshape."""
        if nrows * ncols != self.nrows * self.ncols:
            raise ValueError("reshape changes the number of entries")
        if self._fl is not None:
            return ExactMatrix._from_flint(flint.fmpq_mat(nrows, ncols, self._fl.entries()))
        flat = [x for r in self.rows for x in r]
        rows = tuple(tuple(flat[i * ncols:(i + 1) * ncols]) for i in range(nrows))
        return ExactMatrix._from_rows(rows, nrows, ncols, self._real)

    @staticmethod
    def stack_flat(mats: Sequence["ExactMatrix"], width: int) -> "ExactMatrix":
        """One row per matrix, holding its row-major entries."""
        if not mats:
            return ExactMatrix.zeros(0, width)
        if mats[0]._use_flint(*mats[1:]):
            entries = []
            for m in mats:
                entries.extend(m._flint().entries())
            return ExactMatrix._from_flint(flint.fmpq_mat(len(mats), width, entries))
        return ExactMatrix._from_rows(tuple(tuple(x for r in m.rows for x in r) for m in mats),
                                      len(mats), width)

    @staticmethod
    def hstack(mats: Sequence["ExactMatrix"], nrows: int | None = None) -> "ExactMatrix":
        mats = [m for m in mats if m.ncols]
        if not mats:
            return ExactMatrix.zeros(nrows or 0, 0)
        return ExactMatrix.vstack([m.transpose() for m in mats]).transpose()

    # elimination --------------------------------------------------------------
    def rref(self, backend: str = "auto"):
        """Reduced row echelon form and pivot columns (column order)."""
        if backend == "flint" or (backend == "auto" and self._use_flint()):
            if self.nrows == 0 or self.ncols == 0:
                return ExactMatrix.zeros(self.nrows, self.ncols), ()
            R, rank = self._flint().rref()
            Rm = ExactMatrix._from_flint(R)
            table = R.table()
            pivots = []
            for i in range(rank):
                row = table[i]
                pivots.append(next(j for j, q in enumerate(row) if q))
            return Rm, tuple(pivots)
        return self._rref_python()

    def _rref_python(self):
        m = [list(r) for r in self.rows]
        nr, nc = self.nrows, self.ncols
        pivots = []
        pr = 0
        for col in range(nc):
            if pr >= nr:
                break
            sel = next((i for i in range(pr, nr) if m[i][col]), None)
            if sel is None:
                continue
            m[pr], m[sel] = m[sel], m[pr]
            inv = ONE / m[pr][col]
            prow = [x * inv for x in m[pr]]
            m[pr] = prow
            nzc = [j for j in range(col, nc) if prow[j]]
            for i in range(nr):
                if i != pr:
                    f = m[i][col]
                    if f:
                        ri = m[i]
                        for j in nzc:
                            ri[j] = ri[j] - f * prow[j]
            pivots.append(col)
            pr += 1
        return ExactMatrix._from_rows(tuple(tuple(r) for r in m), nr, nc), tuple(pivots)

    def rank(self, backend: str = "auto") -> int:
        if backend != "python" and self._use_flint() and self.nrows and self.ncols:
            return self._flint().rank()
        return len(self.rref(backend)[1])

    def kernel(self, backend: str = "auto") -> list:
        """Basis of the right null space, one vector per free column."""
        R, pivots = self.rref(backend)
        pivset = set(pivots)
        basis = []
        rows = R.rows
        for f in range(self.ncols):
            if f in pivset:
                continue
            v = [ZERO] * self.ncols
            v[f] = ONE
            for i, p in enumerate(pivots):
                x = rows[i][f]
                if x:
                    v[p] = -x
            basis.append(tuple(v))
        return basis

    def kernel_matrix(self, backend: str = "auto") -> "ExactMatrix":
        """Kernel basis as the columns of an ncols x nullity matrix."""
        if backend != "python" and self._use_flint() and self.nrows:
            R, rank = self._flint().rref()
            n = self.ncols
            table = R.table()
            pivots = [next(j for j, q in enumerate(table[i]) if q) for i in range(rank)]
            free = [j for j in range(n) if j not in set(pivots)]
            K = flint.fmpq_mat(n, len(free))
            for c, f in enumerate(free):
                K[f, c] = 1
                for i, p in enumerate(pivots):
                    x = table[i][f]
                    if x:
                        K[p, c] = -x
            return ExactMatrix._from_flint(K)
        return ExactMatrix.from_columns(self.kernel(backend), self.ncols)

    def row_space(self, backend: str = "auto") -> "ExactMatrix":
        """Canonical basis (nonzero RREF rows) of the row span."""
        R, pivots = self.rref(backend)
        return R.submatrix(range(len(pivots)), range(self.ncols)) if pivots else \
            ExactMatrix.zeros(0, self.ncols)

    def inverse(self) -> "ExactMatrix":
        if not self.is_square():
            raise ValueError("inverse of a non-square matrix")
        if self._use_flint():
            return ExactMatrix._from_flint(self._flint().inv())
        n = self.nrows
        aug = ExactMatrix([list(r) + [1 if i == j else 0 for j in range(n)]
                           for i, r in enumerate(self.rows)])
        R, piv = aug.rref("python")
        if tuple(piv[:n]) != tuple(range(n)):
            raise ZeroDivisionError("singular matrix")
        return R.submatrix(range(n), range(n, 2 * n))

    def det(self) -> Scalar:
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        if self._use_flint():
            return _from_fmpq(self._flint().det())
        m = [list(r) for r in self.rows]
        n = self.nrows
        d = ONE
        for c in range(n):
            p = next((i for i in range(c, n) if m[i][c]), None)
            if p is None:
                return ZERO
            if p != c:
                m[c], m[p] = m[p], m[c]
                d = -d
            d = d * m[c][c]
            inv = ONE / m[c][c]
            for i in range(c + 1, n):
                f = m[i][c] * inv
                if f:
                    for j in range(c, n):
                        m[i][j] = m[i][j] - f * m[c][j]
        return d

    # serialization ------------------------------------------------------------
    def to_json(self) -> list:
        return [[format_scalar(x) for x in r] for r in self.rows]

    @classmethod
    def from_json(cls, data) -> "ExactMatrix":
        if not isinstance(data, list) or any(not isinstance(r, list) for r in data):
            raise ValueError("matrix JSON must be a list of rows")
        return cls([[parse_scalar(x) if isinstance(x, str) else x for x in r] for r in data])

    def __repr__(self):
        return "ExactMatrix(" + repr(self.to_json()) + ")"

    def pretty(self) -> str:
        cells = self.to_json()
        w = max((len(c) for r in cells for c in r), default=1)
        return "\n".join("[" + " ".join(c.rjust(w) for c in r) + "]" for r in cells)


def matrix_kernel(M: ExactMatrix) -> list:
    return M.kernel()


def span_matrix(vectors: Sequence[Sequence], dim: int) -> ExactMatrix:
    """Canonical row-basis of the span of the given vectors."""
    if not vectors:
        return ExactMatrix.zeros(0, dim)
    return ExactMatrix(vectors).row_space()


def same_span(a: Sequence[Sequence], b: Sequence[Sequence], dim: int) -> bool:
    return span_matrix(a, dim) == span_matrix(b, dim)


def solve_common_kernel(blocks: Sequence[ExactMatrix], ncols: int) -> list:
    """Null space of several stacked coefficient matrices."""
    return ExactMatrix.vstack(list(blocks), ncols).kernel() if blocks else \
        [tuple(ONE if i == j else ZERO for i in range(ncols)) for j in range(ncols)]
