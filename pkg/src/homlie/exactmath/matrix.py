"""Dense exact matrices and Gaussian elimination."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from ..errors import DimensionError, FieldMismatchError
from .field import FieldSpec, Raw, Scalar

Vector = tuple


def rref_rows(field: FieldSpec, rows: Sequence[Sequence[Raw]], ncols: int):
    """Reduced row-echelon form of raw rows; returns (nonzero rows, pivot columns).

    The input is not modified.
    """
    p = field.p
    a = [list(r) for r in rows]
    pivots = []
    r = 0
    nrows = len(a)
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if a[i][c]:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        row = a[r]
        if p:
            inv = pow(row[c], -1, p)
            row = [(x * inv) % p for x in row]
        else:
            inv = 1 / Fraction(row[c])
            row = [x * inv for x in row]
        a[r] = row
        for i in range(nrows):
            if i != r:
                f = a[i][c]
                if f:
                    other = a[i]
                    if p:
                        a[i] = [(x - f * y) % p for x, y in zip(other, row)]
                    else:
                        a[i] = [x - f * y for x, y in zip(other, row)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return [tuple(x) for x in a[:r]], pivots


def kernel_rows(field: FieldSpec, rows: Sequence[Sequence[Raw]], ncols: int) -> list[tuple]:
    """A basis (unreduced) of {v : rows . v = 0}, one vector per free column."""
    red, pivots = rref_rows(field, rows, ncols)
    pivset = set(pivots)
    zero, one = field.zero, field.one
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [zero] * ncols
        v[free] = one
        for row, pc in zip(red, pivots):
            if row[free]:
                v[pc] = field.neg(row[free])
        basis.append(tuple(v))
    return basis


def dot(field: FieldSpec, u: Sequence[Raw], v: Sequence[Raw]) -> Raw:
    s = sum(a * b for a, b in zip(u, v))
    return s % field.p if field.p else s


def vec_add(field: FieldSpec, u, v) -> Vector:
    if field.p:
        p = field.p
        return tuple((a + b) % p for a, b in zip(u, v))
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(field: FieldSpec, u, v) -> Vector:
    if field.p:
        p = field.p
        return tuple((a - b) % p for a, b in zip(u, v))
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(field: FieldSpec, c: Raw, v) -> Vector:
    if field.p:
        p = field.p
        return tuple((c * a) % p for a in v)
    return tuple(c * a for a in v)


def vec_comb(field: FieldSpec, coeffs, vectors, n: int) -> Vector:
    """sum_k coeffs[k] * vectors[k] (all vectors of length n)."""
    acc = [0] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for i, x in enumerate(v):
                if x:
                    acc[i] += c * x
    if field.p:
        return tuple(x % field.p for x in acc)
    return tuple(field(x) for x in acc)


def is_zero_vector(v) -> bool:
    return not any(v)


def unit_vector(field: FieldSpec, n: int, i: int) -> Vector:
    v = [field.zero] * n
    v[i] = field.one
    return tuple(v)


@dataclass(frozen=True)
class Matrix:
    """Immutable dense matrix of raw field elements (row-major).

    Column ``j`` is the image of the j-th basis vector when the matrix is
    read as a linear map.
    """

    field: FieldSpec
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0 or len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"{len(self.entries)} entries do not fill a {self.rows}x{self.cols} matrix"
            )

    # construction ----------------------------------------------------------

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence], cols: int | None = None) -> Matrix:
        rows = list(rows)
        if cols is None:
            cols = len(rows[0]) if rows else 0
        entries = []
        for r in rows:
            if len(r) != cols:
                raise DimensionError("ragged rows")
            entries.extend(field(x) for x in r)
        return cls(field, len(rows), cols, tuple(entries))

    @classmethod
    def from_scalars(cls, rows: Sequence[Sequence[Scalar]]) -> Matrix:
        fields = {s.field for r in rows for s in r}
        if len(fields) > 1:
            raise FieldMismatchError(f"mixed fields in matrix: {sorted(map(str, fields))}")
        if not fields:
            raise DimensionError("cannot infer the field of an empty matrix")
        return cls.from_rows(fields.pop(), [[s.value for s in r] for r in rows])

    @classmethod
    def from_columns(cls, field: FieldSpec, columns: Sequence[Sequence], rows: int | None = None) -> Matrix:
        columns = list(columns)
        if rows is None:
            rows = len(columns[0]) if columns else 0
        return cls.from_rows(field, [[c[i] for c in columns] for i in range(rows)], len(columns))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> Matrix:
        z, o = field.zero, field.one
        return cls(field, n, n, tuple(o if i == j else z for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int | None = None) -> Matrix:
        cols = rows if cols is None else cols
        return cls(field, rows, cols, (field.zero,) * (rows * cols))

    @classmethod
    def diagonal(cls, field: FieldSpec, diag: Sequence) -> Matrix:
        n = len(diag)
        z = field.zero
        return cls(field, n, n, tuple(field(diag[i]) if i == j else z for i in range(n) for j in range(n)))

    @classmethod
    def unit(cls, field: FieldSpec, n: int, i: int, j: int) -> Matrix:
        """The matrix unit E_ij (a single 1 in row i, column j)."""
        entries = [field.zero] * (n * n)
        entries[i * n + j] = field.one
        return cls(field, n, n, tuple(entries))

    # access ----------------------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def scalar(self, i: int, j: int) -> Scalar:
        return Scalar(self.field, self[i, j])

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> Vector:
        return self.entries[j::self.cols] if self.cols else ()

    def to_rows(self) -> list[Vector]:
        return [self.row(i) for i in range(self.rows)]

    def columns(self) -> list[Vector]:
        return [self.col(j) for j in range(self.cols)]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return not any(self.entries)

    def to_strings(self) -> list[list[str]]:
        f = self.field.format_element
        return [[f(x) for x in self.row(i)] for i in range(self.rows)]

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(r) + "]" for r in self.to_strings()) + "]"

    # algebra ---------------------------------------------------------------

    def _check(self, other: Matrix):
        if other.field != self.field:
            raise FieldMismatchError(f"{self.field} vs {other.field}")

    def transpose(self) -> Matrix:
        return Matrix(self.field, self.cols, self.rows,
                      tuple(x for j in range(self.cols) for x in self.col(j)))

    @property
    def T(self) -> Matrix:
        return self.transpose()

    def apply(self, v: Sequence[Raw]) -> Vector:
        if len(v) != self.cols:
            raise DimensionError(f"vector of length {len(v)} for a {self.rows}x{self.cols} matrix")
        f = self.field
        return tuple(dot(f, self.row(i), v) for i in range(self.rows))

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return self.apply(other)
        self._check(other)
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        f = self.field
        ocols = other.columns()
        entries = tuple(dot(f, self.row(i), c) for i in range(self.rows) for c in ocols)
        return Matrix(f, self.rows, other.cols, entries)

    def __add__(self, other: Matrix) -> Matrix:
        self._check(other)
        if self.shape != other.shape:
            raise DimensionError(f"shape {self.shape} vs {other.shape}")
        return Matrix(self.field, self.rows, self.cols, vec_add(self.field, self.entries, other.entries))

    def __sub__(self, other: Matrix) -> Matrix:
        self._check(other)
        if self.shape != other.shape:
            raise DimensionError(f"shape {self.shape} vs {other.shape}")
        return Matrix(self.field, self.rows, self.cols, vec_sub(self.field, self.entries, other.entries))

    def __neg__(self) -> Matrix:
        return self.scale(self.field.neg(self.field.one))

    def scale(self, c) -> Matrix:
        return Matrix(self.field, self.rows, self.cols, vec_scale(self.field, self.field(c), self.entries))

    def power(self, k: int) -> Matrix:
        if not self.is_square:
            raise DimensionError("power of a non-square matrix")
        if k < 0:
            return self.inverse().power(-k)
        result = Matrix.identity(self.field, self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def trace(self) -> Raw:
        if not self.is_square:
            raise DimensionError("trace of a non-square matrix")
        s = sum(self[i, i] for i in range(self.rows))
        return self.field(s)

    def rank(self) -> int:
        return len(rref_rows(self.field, self.to_rows(), self.cols)[1])

    def det(self) -> Raw:
        if not self.is_square:
            raise DimensionError("determinant of a non-square matrix")
        f = self.field
        a = [list(r) for r in self.to_rows()]
        n = self.rows
        det = f.one
        for c in range(n):
            piv = next((i for i in range(c, n) if a[i][c]), None)
            if piv is None:
                return f.zero
            if piv != c:
                a[c], a[piv] = a[piv], a[c]
                det = f.neg(det)
            det = f.mul(det, a[c][c])
            inv = f.inv(a[c][c])
            for i in range(c + 1, n):
                if a[i][c]:
                    factor = f.mul(a[i][c], inv)
                    a[i] = [f.sub(x, f.mul(factor, y)) for x, y in zip(a[i], a[c])]
        return det

    def is_invertible(self) -> bool:
        return self.is_square and self.rank() == self.rows

    def inverse(self) -> Matrix:
        if not self.is_square:
            raise DimensionError("inverse of a non-square matrix")
        n = self.rows
        f = self.field
        aug = [list(self.row(i)) + list(unit_vector(f, n, i)) for i in range(n)]
        red, pivots = rref_rows(f, aug, 2 * n)
        if pivots[:n] != list(range(n)) or len(red) < n:
            raise ZeroDivisionError("matrix is singular")
        return Matrix(f, n, n, tuple(x for r in red for x in r[n:]))

    def block_diag(self, other: Matrix) -> Matrix:
        self._check(other)
        z = self.field.zero
        rows = [list(self.row(i)) + [z] * other.cols for i in range(self.rows)]
        rows += [[z] * self.cols + list(other.row(i)) for i in range(other.rows)]
        return Matrix(self.field, self.rows + other.rows, self.cols + other.cols,
                      tuple(x for r in rows for x in r))


def rref(m: Matrix) -> tuple[Matrix, int]:
    """Unique reduced row-echelon form (zero rows dropped) and the rank."""
    red, pivots = rref_rows(m.field, m.to_rows(), m.cols)
    return Matrix(m.field, len(red), m.cols, tuple(x for r in red for x in r)), len(pivots)


def solve(m: Matrix, b: Sequence) -> Vector | None:
    """Some x with m x = b, or None when the system is inconsistent."""
    if len(b) != m.rows:
        raise DimensionError(f"right-hand side of length {len(b)} for {m.rows} rows")
    f = m.field
    b = [f(x) for x in b]
    aug = [list(m.row(i)) + [b[i]] for i in range(m.rows)]
    red, pivots = rref_rows(f, aug, m.cols + 1)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [f.zero] * m.cols
    for row, pc in zip(red, pivots):
        x[pc] = row[-1]
    return tuple(x)


def stack(mats: Iterable[Matrix]) -> Matrix:
    """Vertical concatenation."""
    mats = list(mats)
    f = mats[0].field
    cols = mats[0].cols
    for m in mats:
        if m.field != f:
            raise FieldMismatchError("mixed fields in stack")
        if m.cols != cols:
            raise DimensionError("column counts differ in stack")
    return Matrix(f, sum(m.rows for m in mats), cols, tuple(x for m in mats for x in m.entries))
