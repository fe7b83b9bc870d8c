"""
Dense exact integer matrices and Smith normal form.

Entries are Python integers, so intermediate values never wrap. The
reduction in SmithReduction is the single elimination routine behind
every kernel, cokernel, membership and homology computation; the Smith
form itself and determinants come from sympy over ZZ.
"""

import logging
import operator

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import smith_normal_decomp

_logger = logging.getLogger(__name__)


class IntMatrix:
    """An immutable rows x cols matrix of integers stored row-major."""

    def __init__(self, entries, cols: int = None):
        """
        Args:
            entries: iterable of rows, each an iterable of integers.
            cols: column count, required when there are no rows.
        Raises:
            ValueError: If rows have different lengths.
        """
        data = tuple(tuple(int(x) for x in row) for row in entries)
        if data:
            width = len(data[0])
            if any(len(row) != width for row in data):
                raise ValueError("All rows of an IntMatrix must have the same length")
            if cols is not None and cols != width:
                raise ValueError(f"Declared {cols} columns but rows have {width}")
        else:
            width = 0 if cols is None else int(cols)
        self._data = data
        self.rows = len(data)
        self.cols = width

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls([[0] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def diagonal(cls, values, rows: int = None, cols: int = None) -> "IntMatrix":
        values = list(values)
        rows = len(values) if rows is None else rows
        cols = len(values) if cols is None else cols
        out = [[0] * cols for _ in range(rows)]
        for i, value in enumerate(values):
            out[i][i] = value
        return cls(out, cols)

    @classmethod
    def from_columns(cls, columns, rows: int) -> "IntMatrix":
        columns = [list(c) for c in columns]
        if not columns:
            return cls([[] for _ in range(rows)], 0)
        return cls([list(r) for r in zip(*columns)], len(columns))

    @property
    def entries(self) -> tuple:
        return self._data

    def row(self, i: int) -> tuple:
        return self._data[i]

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self._data)

    def columns(self) -> list:
        return [self.column(j) for j in range(self.cols)]

    def tolist(self) -> list:
        return [list(row) for row in self._data]

    def __getitem__(self, index):
        i, j = index
        return self._data[i][j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return False
        return self.rows == other.rows and self.cols == other.cols and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._data))

    def __repr__(self) -> str:
        return f"IntMatrix({self.tolist()!r})"

    def is_zero(self) -> bool:
        return not any(any(row) for row in self._data)

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_columns(self._data, self.cols)

    def __neg__(self) -> "IntMatrix":
        return IntMatrix([[-x for x in row] for row in self._data], self.cols)

    def _check_same_shape(self, other: "IntMatrix"):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError(
                f"Shape mismatch: {self.rows}x{self.cols} against {other.rows}x{other.cols}"
            )

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_same_shape(other)
        return IntMatrix(
            [list(map(operator.add, a, b)) for a, b in zip(self._data, other._data)], self.cols
        )

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_same_shape(other)
        return IntMatrix(
            [list(map(operator.sub, a, b)) for a, b in zip(self._data, other._data)], self.cols
        )

    def scale(self, k: int) -> "IntMatrix":
        return IntMatrix([[k * x for x in row] for row in self._data], self.cols)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(
                f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        out = []
        other_rows = other._data
        for row in self._data:
            acc = [0] * other.cols
            for k, x in enumerate(row):
                if x:
                    acc = [a + x * b for a, b in zip(acc, other_rows[k])]
            out.append(acc)
        return IntMatrix(out, other.cols)

    def apply(self, vector) -> list:
        """Return the integer product of this matrix with a column vector."""
        vector = list(vector)
        if len(vector) != self.cols:
            raise ValueError(f"Vector of length {len(vector)} against {self.cols} columns")
        return [sum(map(operator.mul, row, vector)) for row in self._data]

    @staticmethod
    def hstack(blocks, rows: int) -> "IntMatrix":
        out = [[] for _ in range(rows)]
        for block in blocks:
            if block.rows != rows:
                raise ValueError("hstack blocks must share the row count")
            for i in range(rows):
                out[i].extend(block._data[i])
        return IntMatrix(out, sum(b.cols for b in blocks))

    @staticmethod
    def vstack(blocks, cols: int) -> "IntMatrix":
        out = []
        for block in blocks:
            if block.cols != cols:
                raise ValueError("vstack blocks must share the column count")
            out.extend(block._data)
        return IntMatrix(out, cols)

    @staticmethod
    def block_diagonal(blocks) -> "IntMatrix":
        blocks = list(blocks)
        cols = sum(b.cols for b in blocks)
        out = []
        offset = 0
        for block in blocks:
            for row in block._data:
                full = [0] * cols
                full[offset:offset + block.cols] = row
                out.append(full)
            offset += block.cols
        return IntMatrix(out, cols)

    def to_domain_matrix(self) -> DomainMatrix:
        return _domain_matrix(self._data, self.rows, self.cols)

    def determinant(self) -> int:
        """Determinant of a square matrix, computed over ZZ by sympy."""
        if self.rows != self.cols:
            raise ValueError("Determinant of a non-square matrix")
        if not self.rows:
            return 1
        return int(self.to_domain_matrix().det())


def _domain_matrix(rows, nrows: int, ncols: int) -> DomainMatrix:
    return DomainMatrix([[ZZ(x) for x in row] for row in rows], (nrows, ncols), ZZ)


def _int_rows(m: DomainMatrix) -> list:
    return [[int(x) for x in row] for row in m.to_list()]


def _unimodular_inverse(m: DomainMatrix) -> list:
    det = int(m.det())
    if det not in (1, -1):
        raise ArithmeticError(f"Transform has determinant {det}, expected a unit")
    if m.shape == (1, 1):
        return [[det]]
    return [[det * x for x in row] for row in _int_rows(m.adjugate())]


def _axpy(target: list, source: list, q: int) -> list:
    return [t + q * s for t, s in zip(target, source)]


def _combine(coefficients, vectors) -> list:
    out = [0] * len(vectors[0])
    for c, vector in zip(coefficients, vectors):
        if c:
            out = _axpy(out, vector, c)
    return out


def _identity_rows(n: int) -> list:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


class SmithReduction:
    """
    Reduction of an integer matrix to Smith normal form.

    Unit pivots are cleared directly. The block that is left without a unit
    entry goes to sympy's smith_normal_decomp, whose unimodular transforms
    are folded into the ones accumulated so far.

    With track_left the row operations are accumulated in `left` (U, row-major)
    and, with track_inverses, U^-1 is kept as a list of columns. With
    track_right the column operations are accumulated in `right_columns`
    (columns of V) and, with track_inverses, V^-1 is kept row-major.
    On completion U·m·V = diag(d_1, ..., d_rank, 0, ...).
    """

    def __init__(self, matrix, rows: int = None, cols: int = None, track_left=False,
                 track_right=False, track_inverses=False):
        if isinstance(matrix, IntMatrix):
            rows, cols = matrix.rows, matrix.cols
            self.a = matrix.tolist()
        else:
            self.a = [list(r) for r in matrix]
            rows = len(self.a) if rows is None else rows
            cols = (len(self.a[0]) if self.a else 0) if cols is None else cols
        self.nrows = rows
        self.ncols = cols
        self.left = _identity_rows(rows) if track_left else None
        self.left_inverse_columns = _identity_rows(rows) if track_left and track_inverses else None
        self.right_columns = _identity_rows(cols) if track_right else None
        self.right_inverse = _identity_rows(cols) if track_right and track_inverses else None
        self.rank = 0
        self._done = False

    def run(self) -> "SmithReduction":
        if self._done:
            return self
        t = 0
        limit = min(self.nrows, self.ncols)
        while t < limit:
            pivot = self._find_unit(t)
            if pivot is None:
                break
            i, j = pivot
            if i != t:
                self._swap_rows(t, i)
            if j != t:
                self._swap_columns(t, j)
            self._clear_unit(t)
            t += 1
        self.rank = t
        self._reduce_block(t)
        self._done = True
        return self

    def diagonal(self) -> list:
        """Non-zero diagonal entries d_1 | d_2 | ... of the reduced matrix."""
        return [self.a[i][i] for i in range(self.rank)]

    def _find_unit(self, t: int):
        for i in range(t, self.nrows):
            row = self.a[i]
            for unit in (1, -1):
                try:
                    return i, row.index(unit, t)
                except ValueError:
                    pass
        return None

    def _clear_unit(self, t: int):
        a = self.a
        p = a[t][t]
        for i in range(t + 1, self.nrows):
            x = a[i][t]
            if x:
                self._add_row(i, t, -x * p)
        row_t = a[t]
        for j in range(t + 1, self.ncols):
            x = row_t[j]
            if x:
                self._add_column(j, t, -x * p, (t,))
        if p < 0:
            self._negate_row(t)

    def _reduce_block(self, t: int):
        rows, cols = self.nrows - t, self.ncols - t
        if not rows or not cols:
            return
        block = [row[t:] for row in self.a[t:]]
        if not any(any(row) for row in block):
            return
        _logger.debug("Smith form of a %sx%s block after %s unit pivots", rows, cols, t)
        smf, s, v = smith_normal_decomp(_domain_matrix(block, rows, cols))
        for k, row in enumerate(_int_rows(smf)):
            self.a[t + k][t:] = row
        self.rank = t + sum(1 for k in range(min(rows, cols)) if self.a[t + k][t + k])
        if self.left is not None:
            old = self.left[t:]
            self.left[t:] = [_combine(row, old) for row in _int_rows(s)]
            if self.left_inverse_columns is not None:
                s_inverse = _unimodular_inverse(s)
                old = self.left_inverse_columns[t:]
                self.left_inverse_columns[t:] = [_combine(c, old) for c in zip(*s_inverse)]
        if self.right_columns is not None:
            old = self.right_columns[t:]
            self.right_columns[t:] = [_combine(c, old) for c in zip(*_int_rows(v))]
            if self.right_inverse is not None:
                old = self.right_inverse[t:]
                self.right_inverse[t:] = [_combine(row, old) for row in _unimodular_inverse(v)]

    def _swap_rows(self, i: int, k: int):
        self.a[i], self.a[k] = self.a[k], self.a[i]
        if self.left is not None:
            self.left[i], self.left[k] = self.left[k], self.left[i]
        if self.left_inverse_columns is not None:
            cols = self.left_inverse_columns
            cols[i], cols[k] = cols[k], cols[i]

    def _add_row(self, target: int, source: int, q: int):
        # row_target += q * row_source
        self.a[target] = _axpy(self.a[target], self.a[source], q)
        if self.left is not None:
            self.left[target] = _axpy(self.left[target], self.left[source], q)
        if self.left_inverse_columns is not None:
            cols = self.left_inverse_columns
            cols[source] = _axpy(cols[source], cols[target], -q)

    def _negate_row(self, i: int):
        self.a[i] = [-x for x in self.a[i]]
        if self.left is not None:
            self.left[i] = [-x for x in self.left[i]]
        if self.left_inverse_columns is not None:
            self.left_inverse_columns[i] = [-x for x in self.left_inverse_columns[i]]

    def _swap_columns(self, j: int, k: int):
        for row in self.a:
            row[j], row[k] = row[k], row[j]
        if self.right_columns is not None:
            cols = self.right_columns
            cols[j], cols[k] = cols[k], cols[j]
        if self.right_inverse is not None:
            inv = self.right_inverse
            inv[j], inv[k] = inv[k], inv[j]

    def _add_column(self, target: int, source: int, q: int, rows):
        # col_target += q * col_source; only `rows` can hold a non-zero in col_source
        a = self.a
        for i in rows:
            x = a[i][source]
            if x:
                a[i][target] += q * x
        if self.right_columns is not None:
            cols = self.right_columns
            cols[target] = _axpy(cols[target], cols[source], q)
        if self.right_inverse is not None:
            inv = self.right_inverse
            inv[source] = _axpy(inv[source], inv[target], -q)


def snf(m: IntMatrix) -> tuple:
    """
    Smith normal form of an integer matrix.
    Args:
        m (IntMatrix): any integer matrix.
    Returns:
        tuple[IntMatrix, IntMatrix, IntMatrix]: (u, d, v) with u·m·v = d, u and v
        unimodular, d diagonal with d_1 | d_2 | ... and zeros last.
    """
    reduction = SmithReduction(m, track_left=True, track_right=True).run()
    u = IntMatrix(reduction.left, m.rows)
    d = IntMatrix(reduction.a, m.cols)
    v = IntMatrix.from_columns(reduction.right_columns, m.cols)
    return u, d, v
