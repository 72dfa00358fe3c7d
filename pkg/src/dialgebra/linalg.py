"""Exact dense linear algebra over the rationals.

Scalars are :class:`fractions.Fraction`, which always stores a reduced
numerator over a positive denominator. Matrices are immutable and row-major.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction
QVector = tuple  # tuple[Fraction, ...]

_RATIONAL_RE = re.compile(r"^\s*(-?\d+)(?:/(\d+))?\s*$")


class ShapeMismatch(ValueError):
    pass


class SingularMatrix(ArithmeticError):
    pass


def parse_rational(text) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` (optional leading minus) into a Fraction.

    Integers and Fractions are passed through. Anything else, including a
    zero denominator, raises ``ValueError``.
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"not a rational: {text!r}")
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational: {text!r}")
    num, den = m.groups()
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


def as_vector(values: Iterable) -> QVector:
    return tuple(Fraction(v) for v in values)


def is_zero_vector(v: Sequence[Fraction]) -> bool:
    return all(x == 0 for x in v)


class QMatrix:
    """Immutable rows x cols matrix of Fractions."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        entries = tuple(Fraction(x) for x in entries)
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise ShapeMismatch(f"{len(entries)} entries for a {rows}x{cols} matrix")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("QMatrix is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "QMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ShapeMismatch("ragged rows")
        return cls(len(rows), cols, (x for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> "QMatrix":
        if rows is None:
            rows = len(columns[0]) if columns else 0
        if any(len(c) != rows for c in columns):
            raise ShapeMismatch("ragged columns")
        return cls(rows, len(columns), (columns[j][i] for i in range(rows) for j in range(len(columns))))

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "QMatrix":
        cols = rows if cols is None else cols
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls(n, n, (1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def diag(cls, *values) -> "QMatrix":
        n = len(values)
        return cls(n, n, (values[i] if i == j else 0 for i in range(n) for j in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, idx):
        i, j = idx
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(idx)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> QVector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> QVector:
        return self.entries[j::self.cols] if self.cols else ()

    def tolist(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "QMatrix":
        return QMatrix.from_rows([self.column(j) for j in range(self.cols)], self.rows)

    def vectorize(self) -> QVector:
        """Column-major stacking of the entries."""
        return tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows))

    @classmethod
    def unvectorize(cls, v: Sequence, rows: int, cols: int | None = None) -> "QMatrix":
        cols = rows if cols is None else cols
        if len(v) != rows * cols:
            raise ShapeMismatch(f"vector of length {len(v)} cannot fill {rows}x{cols}")
        return cls(rows, cols, (v[j * rows + i] for i in range(rows) for j in range(cols)))

    def is_zero(self) -> bool:
        return is_zero_vector(self.entries)

    def __eq__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = ", ".join("[" + ", ".join(format_rational(x) for x in self.row(i)) + "]" for i in range(self.rows))
        return f"QMatrix([{body}])"

    def __add__(self, other):
        return matadd(self, other)

    def __sub__(self, other):
        return matadd(self, scalar_mul(-1, other))

    def __neg__(self):
        return scalar_mul(-1, self)

    def __mul__(self, scalar):
        if isinstance(scalar, QMatrix):
            return NotImplemented
        return scalar_mul(scalar, self)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, QMatrix):
            return matmul(self, other)
        return matvec(self, other)


def matmul(a: QMatrix, b: QMatrix) -> QMatrix:
    if a.cols != b.rows:
        raise ShapeMismatch(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    bcols = [b.column(j) for j in range(b.cols)]
    out = []
    for i in range(a.rows):
        r = a.row(i)
        out.extend(sum((x * y for x, y in zip(r, c) if x and y), Fraction(0)) for c in bcols)
    return QMatrix(a.rows, b.cols, out)


def matvec(a: QMatrix, v: Sequence) -> QVector:
    if a.cols != len(v):
        raise ShapeMismatch(f"cannot apply {a.rows}x{a.cols} matrix to vector of length {len(v)}")
    return tuple(sum((x * Fraction(y) for x, y in zip(a.row(i), v) if x and y), Fraction(0))
                 for i in range(a.rows))


def matadd(a: QMatrix, b: QMatrix) -> QMatrix:
    if a.shape != b.shape:
        raise ShapeMismatch(f"cannot add {a.shape} and {b.shape}")
    return QMatrix(a.rows, a.cols, (x + y for x, y in zip(a.entries, b.entries)))


def scalar_mul(c, a: QMatrix) -> QMatrix:
    c = Fraction(c)
    return QMatrix(a.rows, a.cols, (c * x for x in a.entries))


def _rref_rows(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    # Gauss-Jordan in place on a list of row lists
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        pivot_row = rows[r]
        for i in range(nrows):
            f = rows[i][c]
            if i != r and f != 0:
                rows[i] = [x - f * y for x, y in zip(rows[i], pivot_row)]
        pivots.append(c)
        r += 1
    return rows, pivots


def rref(m: QMatrix) -> tuple[QMatrix, tuple[int, ...], int]:
    """Reduced row-echelon form, pivot columns and rank of ``m``."""
    rows, pivots = _rref_rows(m.tolist(), m.cols)
    return QMatrix(m.rows, m.cols, (x for r in rows for x in r)), tuple(pivots), len(pivots)


def rank(m: QMatrix) -> int:
    return rref(m)[2]


def nullspace(m: QMatrix) -> list[QVector]:
    """Canonical kernel basis: one vector per free column, in column order.

    Each vector has a 1 in its free column, 0 in the other free columns, and
    the pivot entries forced by the reduced row-echelon form.
    """
    reduced, pivots, r = rref(m)
    pivot_set = set(pivots)
    basis = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for row_idx, pc in enumerate(pivots):
            v[pc] = -reduced[row_idx, f]
        basis.append(tuple(v))
    return basis


def invert(m: QMatrix) -> QMatrix:
    if m.rows != m.cols:
        raise ShapeMismatch(f"cannot invert a {m.rows}x{m.cols} matrix")
    n = m.rows
    aug = [list(m.row(i)) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    rows, pivots = _rref_rows(aug, 2 * n)
    if len(pivots) < n or pivots[n - 1] >= n:
        raise SingularMatrix("matrix is singular")
    return QMatrix(n, n, (x for r in rows for x in r[n:]))


def solve(m: QMatrix, b: Sequence) -> QVector | None:
    """One solution of ``m x = b`` (free variables set to 0), or None."""
    if len(b) != m.rows:
        raise ShapeMismatch("right-hand side has the wrong length")
    aug = [list(m.row(i)) + [Fraction(b[i])] for i in range(m.rows)]
    rows, pivots = _rref_rows(aug, m.cols + 1)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [Fraction(0)] * m.cols
    for i, pc in enumerate(pivots):
        x[pc] = rows[i][m.cols]
    return tuple(x)


def span_rref(vectors: Sequence[Sequence], length: int) -> QMatrix:
    """Nonzero rows of the RREF of the stacked vectors: a canonical subspace key."""
    if not vectors:
        return QMatrix(0, length, ())
    reduced, _, r = rref(QMatrix.from_rows(vectors, length))
    return QMatrix(r, length, reduced.entries[: r * length])
