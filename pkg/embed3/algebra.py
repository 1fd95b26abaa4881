# -*- coding: utf-8 -*-
"""
Exact linear algebra over prime fields GF(p) and the rationals.

All matroid computations in embed3 reduce to rank computations on labelled matrices.
Entries are Python integers (GF(p), normalised to ``0 <= x < p``) or
:class:`fractions.Fraction` instances (rationals). There is no floating point anywhere
in this module.

Row reduction always picks the leftmost column with a nonzero entry and, within that
column, the lowest row index, so that every derived object (pivot columns, null space
bases, certificates) is reproducible across runs.

"""
import re
import logging
from collections import namedtuple
from fractions import Fraction

logger = logging.getLogger(__name__)

MAX_PRIME = 2 ** 31

RowReduction = namedtuple('RowReduction', ['rank', 'rref', 'pivot_cols'])


def is_prime(n):
    """
    Deterministic Miller-Rabin test, exact for all ``n < 3 215 031 751``.

    :param int n: Number to test.
    :returns: ``True`` if ``n`` is prime.
    :rtype: bool
    """
    if n < 2:
        return False
    for q in (2, 3, 5, 7):
        if n % q == 0:
            return n == q

    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    for a in (2, 3, 5, 7):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Field:
    """
    Tag for the field matrices live over: a prime field GF(p) or the rationals.

    :param int p: Characteristic of the prime field or ``None`` for the rationals.
    :raises ValueError: if ``p`` is not a prime between 2 and 2**31.
    """

    _field_re = re.compile(r'^(?:gf|f)\(?(\d+)\)?$')

    def __init__(self, p=None):
        if p is not None:
            p = int(p)
            if not 2 <= p <= MAX_PRIME or not is_prime(p):
                raise ValueError(f'{p} is not a prime between 2 and 2**31')
        self.p = p

    @classmethod
    def prime(cls, p):
        return cls(p)

    @classmethod
    def rational(cls):
        return cls(None)

    @classmethod
    def parse(cls, text):
        """
        Parses a field name as accepted by the command line: 'gf2', 'gf3', 'gf(7)',
        'f5', 'rational', 'q' or 'qq'.

        :param str text: Field name.
        :returns: Parsed field.
        :rtype: Field
        :raises ValueError: for unknown names.
        """
        name = str(text).strip().lower().replace(' ', '')
        if name in ('rational', 'rationals', 'q', 'qq'):
            return cls.rational()
        match = cls._field_re.match(name)
        if not match:
            raise ValueError(f'Unknown field "{text}"')
        return cls.prime(int(match.group(1)))

    @property
    def is_rational(self):
        return self.p is None

    @property
    def characteristic(self):
        return 0 if self.p is None else self.p

    @property
    def name(self):
        if self.p is None:
            return 'rational'
        elif self.p < 10:
            return f'gf{self.p}'
        else:
            return f'gf({self.p})'

    @property
    def zero(self):
        return Fraction(0) if self.p is None else 0

    @property
    def one(self):
        return Fraction(1) if self.p is None else 1

    def element(self, value):
        """
        Converts an integer, fraction or 'p/q' string into an element of this field.

        :raises ValueError: if a denominator is divisible by the characteristic.
        """
        if isinstance(value, str):
            value = Fraction(value.strip())
        if self.p is None:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ValueError(f'{value} has no image in GF({self.p})')
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return int(value) % self.p

    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p is None else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p is None else a * b % self.p

    def neg(self, a):
        return -a if self.p is None else -a % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError('Cannot invert zero')
        return 1 / a if self.p is None else pow(a, -1, self.p)

    def to_plain(self, a):
        """Returns an int for integral values and a 'p/q' string otherwise."""
        if isinstance(a, Fraction) and a.denominator != 1:
            return f'{a.numerator}/{a.denominator}'
        return int(a)

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(('Field', self.p))

    def __repr__(self):
        return f'<Field {self.name}>'


GF2 = Field(2)
GF3 = Field(3)
GF5 = Field(5)
QQ = Field(None)


class ExactMatrix:
    """
    A matrix over a :class:`Field` with labelled rows and columns.

    Instances are immutable: rows are stored as tuples and all operations return new
    matrices.

    :param Field field: Field of all entries.
    :param rows: Iterable of rows, each an iterable of entries convertible by
        :meth:`Field.element`.
    :param row_labels: Duplicate-free row labels, defaults to ``0, 1, ...``.
    :param col_labels: Duplicate-free column labels, defaults to ``0, 1, ...``.
    :param int ncols: Number of columns. Only required if there are no rows and no
        column labels.
    """

    def __init__(self, field, rows, row_labels=None, col_labels=None, ncols=None):

        self.field = field
        self.rows = tuple(tuple(field.element(x) for x in row) for row in rows)

        if col_labels is not None:
            col_labels = tuple(col_labels)
            ncols = len(col_labels)
        elif ncols is None:
            ncols = len(self.rows[0]) if self.rows else 0

        if row_labels is None:
            row_labels = tuple(range(len(self.rows)))
        if col_labels is None:
            col_labels = tuple(range(ncols))

        self.row_labels = tuple(row_labels)
        self.col_labels = col_labels

        if len(self.row_labels) != len(self.rows):
            raise ValueError('Number of row labels does not match number of rows')
        if any(len(row) != ncols for row in self.rows):
            raise ValueError('All rows must have one entry per column')
        if len(set(self.row_labels)) != len(self.row_labels):
            raise ValueError('Row labels must be unique')
        if len(set(self.col_labels)) != len(self.col_labels):
            raise ValueError('Column labels must be unique')

        self._col_index = {label: j for j, label in enumerate(self.col_labels)}

    @classmethod
    def zeros(cls, field, row_labels, col_labels):
        row_labels = tuple(row_labels)
        col_labels = tuple(col_labels)
        rows = [[0] * len(col_labels) for _ in row_labels]
        return cls(field, rows, row_labels, col_labels)

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.col_labels)

    @property
    def shape(self):
        return self.nrows, self.ncols

    def col_index(self, label):
        return self._col_index[label]

    def entry(self, row_label, col_label):
        return self.rows[self.row_labels.index(row_label)][self._col_index[col_label]]

    def column(self, label):
        j = self._col_index[label]
        return tuple(row[j] for row in self.rows)

    def columns(self, labels):
        """Returns the column submatrix on ``labels``, in the given order."""
        labels = tuple(labels)
        idx = [self._col_index[label] for label in labels]
        rows = [[row[j] for j in idx] for row in self.rows]
        return ExactMatrix(self.field, rows, self.row_labels, labels)

    def transpose(self):
        rows = [self.column(label) for label in self.col_labels]
        return ExactMatrix(self.field, rows, self.col_labels, self.row_labels,
                           ncols=self.nrows)

    def stack(self, other):
        """Stacks ``other`` below this matrix. Rows are relabelled 0, 1, ..."""
        if other.col_labels != self.col_labels or other.field != self.field:
            raise ValueError('Can only stack matrices with equal columns and fields')
        return ExactMatrix(self.field, self.rows + other.rows, col_labels=self.col_labels)

    def over(self, field):
        """Maps all entries into another field."""
        return ExactMatrix(field, self.rows, self.row_labels, self.col_labels)

    def support(self):
        """Returns the 0/1 pattern of this matrix over GF(2)."""
        rows = [[0 if x == 0 else 1 for x in row] for row in self.rows]
        return ExactMatrix(GF2, rows, self.row_labels, self.col_labels)

    def dot_row(self, vector):
        """Returns ``self · vector`` for a vector indexed like the columns."""
        f = self.field
        out = []
        for row in self.rows:
            acc = f.zero
            for a, b in zip(row, vector):
                if a != 0 and b != 0:
                    acc = f.add(acc, f.mul(a, b))
            out.append(acc)
        return tuple(out)

    def __eq__(self, other):
        return (isinstance(other, ExactMatrix) and self.field == other.field
                and self.row_labels == other.row_labels
                and self.col_labels == other.col_labels
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.field, self.row_labels, self.col_labels, self.rows))

    def __repr__(self):
        return f'<ExactMatrix {self.nrows}x{self.ncols} over {self.field.name}>'


# ==== row reduction =====================================================================

def _rref_generic(field, rows, ncols):

    rows = [list(row) for row in rows]
    pivots = []
    r = 0

    for c in range(ncols):
        if r == len(rows):
            break
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]

        inv = field.inv(rows[r][c])
        rows[r] = [field.mul(x, inv) for x in rows[r]]

        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [field.sub(x, field.mul(factor, y))
                           for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1

    return rows, pivots


def _rref_gf2(rows, ncols):
    # rows packed as integers, bit j is column j
    packed = [sum(1 << j for j, x in enumerate(row) if x) for row in rows]
    pivots = []
    r = 0

    for c in range(ncols):
        if r == len(packed):
            break
        bit = 1 << c
        pivot = next((i for i in range(r, len(packed)) if packed[i] & bit), None)
        if pivot is None:
            continue
        packed[r], packed[pivot] = packed[pivot], packed[r]
        for i in range(len(packed)):
            if i != r and packed[i] & bit:
                packed[i] ^= packed[r]
        pivots.append(c)
        r += 1

    unpacked = [[(word >> j) & 1 for j in range(ncols)] for word in packed]
    return unpacked, pivots


def rank_and_rref(m, fast=True):
    """
    Computes rank, reduced row echelon form and pivot columns of ``m``.

    The rref has the shape of ``m`` with zero rows at the bottom and rows labelled
    ``0, 1, ...``.

    :param ExactMatrix m: Input matrix.
    :param bool fast: Use the bit-packed GF(2) path if ``m`` lives over GF(2). Both
        paths return identical results.
    :returns: ``(rank, rref, pivot_cols)`` where ``pivot_cols`` are column labels.
    :rtype: RowReduction
    """
    if fast and m.field.p == 2:
        rows, pivots = _rref_gf2(m.rows, m.ncols)
    else:
        rows, pivots = _rref_generic(m.field, m.rows, m.ncols)

    rref = ExactMatrix(m.field, rows, col_labels=m.col_labels)
    return RowReduction(len(pivots), rref, tuple(m.col_labels[c] for c in pivots))


def rank(m):
    return rank_and_rref(m).rank


def null_space_basis(m):
    """
    Returns a basis of ``{x : m·x = 0}`` as the rows of a matrix whose columns carry
    the column labels of ``m``. There is one basis vector per free column of the rref,
    in column order, with entry 1 at that column.

    :param ExactMatrix m: Input matrix.
    :rtype: ExactMatrix
    """
    f = m.field
    rk, rref, pivot_labels = rank_and_rref(m)
    pivot_idx = [m.col_index(label) for label in pivot_labels]
    pivot_set = set(pivot_idx)

    basis = []
    for j in range(m.ncols):
        if j in pivot_set:
            continue
        vec = [f.zero] * m.ncols
        vec[j] = f.one
        for i, pc in enumerate(pivot_idx):
            vec[pc] = f.neg(rref.rows[i][j])
        basis.append(vec)

    return ExactMatrix(f, basis, col_labels=m.col_labels)


def orthogonal_complement(rows):
    """
    Returns a basis of ``{y : y·r = 0 for all rows r}`` with respect to the standard
    bilinear form. Dimensions of the row space and its complement add up to the number
    of columns.

    :param ExactMatrix rows: Matrix whose rows span the subspace.
    :rtype: ExactMatrix
    """
    return null_space_basis(rows)


def row_space_basis(m):
    """Returns the nonzero rows of the rref of ``m``."""
    rk, rref, _ = rank_and_rref(m)
    return ExactMatrix(m.field, rref.rows[:rk], col_labels=m.col_labels)


def same_row_space(a, b):
    """
    Checks if two matrices with equal columns span the same row space.

    :rtype: bool
    """
    if a.col_labels != b.col_labels:
        b = b.columns(a.col_labels)
    ra = rank(a)
    return ra == rank(b) and rank(a.stack(b)) == ra
