#!/usr/bin/env python3

# Copyright (c) 2000-2026, Board of Trustees of Leland Stanford Jr. University
#
# Redistribution and use in source and binary forms, with or without
# modification, are permitted provided that the following conditions are met:
#
# 1. Redistributions of source code must retain the above copyright notice,
# this list of conditions and the following disclaimer.
#
# 2. Redistributions in binary form must reproduce the above copyright notice,
# this list of conditions and the following disclaimer in the documentation
# and/or other materials provided with the distribution.
#
# 3. Neither the name of the copyright holder nor the names of its contributors
# may be used to endorse or promote products derived from this software without
# specific prior written permission.
#
# THIS SOFTWARE IS PROVIDED BY THE COPYRIGHT HOLDERS AND CONTRIBUTORS "AS IS"
# AND ANY EXPRESS OR IMPLIED WARRANTIES, INCLUDING, BUT NOT LIMITED TO, THE
# IMPLIED WARRANTIES OF MERCHANTABILITY AND FITNESS FOR A PARTICULAR PURPOSE
# ARE DISCLAIMED. IN NO EVENT SHALL THE COPYRIGHT HOLDER OR CONTRIBUTORS BE
# LIABLE FOR ANY DIRECT, INDIRECT, INCIDENTAL, SPECIAL, EXEMPLARY, OR
# CONSEQUENTIAL DAMAGES (INCLUDING, BUT NOT LIMITED TO, PROCUREMENT OF
# SUBSTITUTE GOODS OR SERVICES; LOSS OF USE, DATA, OR PROFITS; OR BUSINESS
# INTERRUPTION) HOWEVER CAUSED AND ON ANY THEORY OF LIABILITY, WHETHER IN
# CONTRACT, STRICT LIABILITY, OR TORT (INCLUDING NEGLIGENCE OR OTHERWISE)
# ARISING IN ANY WAY OUT OF THE USE OF THIS SOFTWARE, EVEN IF ADVISED OF THE
# POSSIBILITY OF SUCH DAMAGE.

"""
Exact scalars over Q and Q(sqrt 2), and exact linear algebra over Q.
"""

from fractions import Fraction
from functools import reduce
from math import gcd
import logging

logger = logging.getLogger(__name__)


def rational(x):
    """
    Coerces an int, a Fraction or a string such as '3/4' to a Fraction.
    Floats are refused.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError(f'not a rational number: {x!r}')
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except ValueError as ve:
            raise ValueError(f'not a rational number: {x!r}') from ve
    if isinstance(x, QSqrt2) and x.is_rational():
        return x.a
    raise TypeError(f'not a rational number: {x!r}')


def rational_str(x):
    return str(rational(x))


def _lcm(a, b):
    return a * b // gcd(a, b)


class QSqrt2(object):

    __slots__ = ('_a', '_b')

    @staticmethod
    def coerce(x):
        if isinstance(x, QSqrt2):
            return x
        return QSqrt2(rational(x))

    @staticmethod
    def from_json(obj):
        return QSqrt2(obj['a'], obj['b'])

    def __init__(self, a=0, b=0):
        super().__init__()
        self._a = rational(a)
        self._b = rational(b)

    @property
    def a(self):
        return self._a

    @property
    def b(self):
        return self._b

    def conjugate(self):
        return QSqrt2(self._a, -self._b)

    def norm(self):
        return self._a * self._a - 2 * self._b * self._b

    def is_rational(self):
        return self._b == 0

    def is_zero(self):
        return self._a == 0 and self._b == 0

    def to_json(self):
        return {'a': rational_str(self._a), 'b': rational_str(self._b)}

    def __add__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return QSqrt2(self._a + other._a, self._b + other._b)

    __radd__ = __add__

    def __sub__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return QSqrt2(self._a - other._a, self._b - other._b)

    def __rsub__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return q2_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return q2_mul(self, q2_inv(other))

    def __rtruediv__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return q2_mul(other, q2_inv(self))

    def __neg__(self):
        return QSqrt2(-self._a, -self._b)

    def __pos__(self):
        return self

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return self._a == other._a and self._b == other._b

    def __hash__(self):
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b))

    def __repr__(self):
        return f'QSqrt2({self._a}, {self._b})'

    def __str__(self):
        if self._b == 0:
            return str(self._a)
        b = f'{self._b}*sqrt2'
        if self._a == 0:
            return b
        return f'{self._a}{"+" if self._b > 0 else ""}{b}'


def _lift(x):
    if isinstance(x, QSqrt2):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return QSqrt2(x)
    return NotImplemented


SQRT2 = QSqrt2(0, 1)


def q2_mul(x, y):
    x, y = QSqrt2.coerce(x), QSqrt2.coerce(y)
    return QSqrt2(x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a)


def q2_inv(x):
    x = QSqrt2.coerce(x)
    if x.is_zero():
        raise ZeroDivisionError('inverse of zero in Q(sqrt2)')
    n = x.norm()
    return QSqrt2(x.a / n, -x.b / n)


class ExactMatrix(object):

    @staticmethod
    def from_rows(rows):
        rows = [tuple(rational(x) for x in row) for row in rows]
        ncols = len(rows[0]) if rows else 0
        return ExactMatrix(rows, len(rows), ncols)

    @staticmethod
    def from_columns(columns):
        columns = list(columns)
        if not columns:
            return ExactMatrix([], 0, 0)
        return ExactMatrix.from_rows(zip(*columns))

    @staticmethod
    def from_sparse(nrows, ncols, entries):
        rows = [[Fraction(0)] * ncols for _ in range(nrows)]
        for (r, c), x in entries.items():
            rows[r][c] = rational(x)
        return ExactMatrix(rows, nrows, ncols)

    @staticmethod
    def zeros(nrows, ncols=None):
        ncols = nrows if ncols is None else ncols
        return ExactMatrix([[Fraction(0)] * ncols for _ in range(nrows)], nrows, ncols)

    @staticmethod
    def identity(size):
        return ExactMatrix.from_sparse(size, size, {(i, i): 1 for i in range(size)})

    @staticmethod
    def block_diagonal(blocks):
        blocks = list(blocks)
        size = sum(block.shape[0] for block in blocks)
        entries = dict()
        offset = 0
        for block in blocks:
            for (r, c), x in block.sparse().items():
                entries[(offset + r, offset + c)] = x
            offset += block.shape[0]
        return ExactMatrix.from_sparse(size, size, entries)

    @staticmethod
    def vstack(matrices):
        matrices = list(matrices)
        ncols = {m.shape[1] for m in matrices}
        if len(ncols) > 1:
            raise ValueError(f'cannot stack matrices with column counts {sorted(ncols)}')
        rows = [row for m in matrices for row in m.to_rows()]
        return ExactMatrix(rows, len(rows), ncols.pop() if ncols else 0)

    def __init__(self, rows, nrows, ncols):
        super().__init__()
        self._rows = tuple(tuple(row) for row in rows)
        self._shape = (nrows, ncols)
        if any(len(row) != ncols for row in self._rows) or len(self._rows) != nrows:
            raise ValueError(f'inconsistent dimensions for a {nrows}x{ncols} matrix')

    @property
    def shape(self):
        return self._shape

    def row(self, i):
        return self._rows[i]

    def column(self, j):
        return tuple(row[j] for row in self._rows)

    def to_rows(self):
        return [list(row) for row in self._rows]

    def sparse(self):
        return {(r, c): x for r, row in enumerate(self._rows) for c, x in enumerate(row) if x != 0}

    def transpose(self):
        nrows, ncols = self._shape
        return ExactMatrix([self.column(j) for j in range(ncols)], ncols, nrows)

    def submatrix(self, row_indices, col_indices=None):
        col_indices = row_indices if col_indices is None else col_indices
        return ExactMatrix([[self._rows[r][c] for c in col_indices] for r in row_indices],
                           len(row_indices),
                           len(col_indices))

    def is_square(self):
        return self._shape[0] == self._shape[1]

    def is_symmetric(self):
        n = self._shape[0]
        return self.is_square() and all(self._rows[i][j] == self._rows[j][i] for i in range(n) for j in range(i + 1, n))

    def is_zero(self):
        return all(x == 0 for row in self._rows for x in row)

    def apply(self, vector):
        vector = [rational(x) for x in vector]
        if len(vector) != self._shape[1]:
            raise ValueError(f'vector of length {len(vector)} against {self._shape[1]} columns')
        return [sum((a * b for a, b in zip(row, vector)), Fraction(0)) for row in self._rows]

    def quadratic_form(self, vector):
        vector = [rational(x) for x in vector]
        return sum((a * b for a, b in zip(vector, self.apply(vector))), Fraction(0))

    def to_json(self):
        return [[rational_str(x) for x in row] for row in self._rows]

    def __matmul__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self._shape[1] != other._shape[0]:
            raise ValueError(f'cannot multiply {self._shape} by {other._shape}')
        cols = [other.column(j) for j in range(other._shape[1])]
        return ExactMatrix([[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols] for row in self._rows],
                           self._shape[0],
                           other._shape[1])

    def __add__(self, other):
        self._check_same_shape(other)
        return ExactMatrix([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self._rows, other._rows)], *self._shape)

    def __sub__(self, other):
        self._check_same_shape(other)
        return ExactMatrix([[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self._rows, other._rows)], *self._shape)

    def __mul__(self, scalar):
        scalar = rational(scalar)
        return ExactMatrix([[scalar * a for a in row] for row in self._rows], *self._shape)

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def __getitem__(self, key):
        r, c = key
        return self._rows[r][c]

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self._shape == other._shape and self._rows == other._rows

    def __hash__(self):
        return hash((self._shape, self._rows))

    def __repr__(self):
        return f'ExactMatrix({self.to_json()!r})'

    def _check_same_shape(self, other):
        if not isinstance(other, ExactMatrix) or self._shape != other._shape:
            raise ValueError(f'shape mismatch: {self._shape} and {getattr(other, "shape", None)}')


def _integer_rows(matrix):
    ret = list()
    for row in matrix.to_rows():
        denominator = reduce(_lcm, (x.denominator for x in row), 1)
        ret.append([int(x * denominator) for x in row])
    return ret


def _bareiss(matrix):
    """
    Fraction-free elimination on integer-scaled rows. Returns (rank, last
    pivot, number of row swaps, pivot columns).
    """
    rows = _integer_rows(matrix)
    nrows, ncols = matrix.shape
    prev = 1
    rank = 0
    swaps = 0
    pivot_cols = list()
    for col in range(ncols):
        if rank == nrows:
            break
        pivot = next((r for r in range(rank, nrows) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        if pivot != rank:
            rows[rank], rows[pivot] = rows[pivot], rows[rank]
            swaps += 1
        pk = rows[rank][col]
        for r in range(rank + 1, nrows):
            factor = rows[r][col]
            rows[r] = [(rows[r][c] * pk - factor * rows[rank][c]) // prev for c in range(ncols)]
        prev = pk
        pivot_cols.append(col)
        rank += 1
    return rank, prev, swaps, pivot_cols


def exact_rank(matrix):
    return _bareiss(matrix)[0]


def exact_determinant(matrix):
    if not matrix.is_square():
        raise ValueError(f'determinant of a non-square {matrix.shape} matrix')
    n = matrix.shape[0]
    if n == 0:
        return Fraction(1)
    rank, last, swaps, _ = _bareiss(matrix)
    if rank < n:
        return Fraction(0)
    scale = reduce(lambda acc, x: acc * x, (reduce(_lcm, (x.denominator for x in row), 1) for row in matrix.to_rows()), 1)
    return Fraction((-1) ** swaps * last, scale)


def rref(matrix):
    """
    Reduced row echelon form. Returns (reduced matrix, pivot columns); the
    pivot in each column is the first nonzero entry at or below the current
    row.
    """
    rows = matrix.to_rows()
    nrows, ncols = matrix.shape
    pivots = list()
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        pivot = next((i for i in range(r, nrows) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][col]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][col] != 0:
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    return ExactMatrix(rows, nrows, ncols), pivots


def exact_kernel(matrix):
    """
    Basis of the right null space, one vector per non-pivot column, each
    scaled to coprime integers with a positive free entry.
    """
    reduced, pivots = rref(matrix)
    ncols = matrix.shape[1]
    ret = list()
    for free in (c for c in range(ncols) if c not in pivots):
        vector = [Fraction(0)] * ncols
        vector[free] = Fraction(1)
        for i, pc in enumerate(pivots):
            vector[pc] = -reduced[i, free]
        ret.append(_primitive(vector))
    return ret


def _primitive(vector):
    denominator = reduce(_lcm, (x.denominator for x in vector), 1)
    ints = [int(x * denominator) for x in vector]
    g = reduce(gcd, ints, 0) or 1
    return [Fraction(x, g) for x in ints]


def inverse(matrix):
    if not matrix.is_square():
        raise ValueError(f'inverse of a non-square {matrix.shape} matrix')
    n = matrix.shape[0]
    augmented = ExactMatrix([list(matrix.row(i)) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)], n, 2 * n)
    reduced, pivots = rref(augmented)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ValueError('matrix is singular')
    return ExactMatrix([reduced.row(i)[n:] for i in range(n)], n, n)


def solve(matrix, vector):
    return inverse(matrix).apply(vector)


class PsdCertificate(object):
    """
    Outcome of psd_certificate: either the positive semidefinite verdict
    or a witness vector v with v^T M v < 0.
    """

    def __init__(self, witness=None, value=None):
        super().__init__()
        self._witness = None if witness is None else tuple(witness)
        self._value = value

    def get_value(self):
        return self._value

    def get_witness(self):
        return self._witness

    def is_positive_semidefinite(self):
        return self._witness is None

    def to_json(self):
        if self.is_positive_semidefinite():
            return {'psd': True}
        return {'psd': False,
                'witness': [rational_str(x) for x in self._witness],
                'value': rational_str(self._value)}

    def __bool__(self):
        return self.is_positive_semidefinite()

    def __repr__(self):
        if self.is_positive_semidefinite():
            return 'POSITIVE_SEMIDEFINITE'
        return f'PsdCertificate(witness={[str(x) for x in self._witness]}, value={self._value})'


POSITIVE_SEMIDEFINITE = PsdCertificate()


def psd_certificate(matrix):
    """
    Rational LDL^T with symmetric pivoting in index order. Each live index k
    carries a vector u_k with S[k][l] = u_k^T M u_l for the current Schur
    complement S, so a negative pivot, or a zero-diagonal pair with a
    nonzero coupling, yields a witness in the original coordinates.
    """
    if not matrix.is_symmetric():
        raise ValueError('psd_certificate requires a symmetric matrix')
    n = matrix.shape[0]
    schur = matrix.to_rows()
    basis = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    live = list(range(n))
    while live:
        negative = next((k for k in live if schur[k][k] < 0), None)
        if negative is not None:
            return _witness(matrix, basis[negative])
        k = next((k for k in live if schur[k][k] > 0), None)
        if k is None:
            coupled = next(((i, j) for i in live for j in live if i < j and schur[i][j] != 0), None)
            if coupled is None:
                return POSITIVE_SEMIDEFINITE
            i, j = coupled
            sign = 1 if schur[i][j] > 0 else -1
            return _witness(matrix, [a - sign * b for a, b in zip(basis[i], basis[j])])
        live.remove(k)
        d = schur[k][k]
        for l in live:
            factor = schur[k][l] / d
            if factor != 0:
                basis[l] = [a - factor * b for a, b in zip(basis[l], basis[k])]
        for l in live:
            for m in live:
                schur[l][m] -= schur[l][k] * schur[k][m] / d
    return POSITIVE_SEMIDEFINITE


def _witness(matrix, vector):
    vector = _primitive(vector)
    value = matrix.quadratic_form(vector)
    logger.debug('psd witness %s with value %s', vector, value)
    return PsdCertificate(vector, value)


class RationalEchelon(object):
    """
    Incrementally maintained reduced echelon basis of sparse rational
    vectors (dicts from sortable keys to Fractions). Each stored row
    remembers the combination of labelled input vectors it came from.
    """

    def __init__(self):
        super().__init__()
        self._rows = list()
        self._labels = list()

    def add(self, vector, label=None):
        """
        Adds the vector if it is independent of the current span; returns
        whether it was added.
        """
        label = len(self._labels) if label is None else label
        residual, combination = self._reduce(vector)
        if not residual:
            return False
        combination = {k: -v for k, v in combination.items()}
        combination[label] = combination.get(label, Fraction(0)) + 1
        pivot = min(residual)
        pv = residual[pivot]
        residual = {k: v / pv for k, v in residual.items()}
        combination = {k: v / pv for k, v in combination.items() if v != 0}
        for i, (row, comb, rp) in enumerate(self._rows):
            factor = row.get(pivot)
            if factor:
                self._rows[i] = (_axpy(row, residual, -factor),
                                 _axpy(comb, combination, -factor),
                                 rp)
        self._rows.append((residual, combination, pivot))
        self._labels.append(label)
        return True

    def contains(self, vector):
        return not self._reduce(vector)[0]

    def decompose(self, vector):
        """
        Expresses the vector as a combination of the labelled inputs;
        raises ValueError if it is outside the span.
        """
        residual, combination = self._reduce(vector)
        if residual:
            raise ValueError('vector is not in the span')
        return {k: v for k, v in combination.items() if v != 0}

    def get_labels(self):
        return list(self._labels)

    def reduce(self, vector):
        return self._reduce(vector)[0]

    def __len__(self):
        return len(self._rows)

    def _reduce(self, vector):
        residual = {k: rational(v) for k, v in vector.items() if v != 0}
        combination = dict()
        for row, comb, pivot in self._rows:
            factor = residual.get(pivot)
            if factor:
                residual = _axpy(residual, row, -factor)
                combination = _axpy(combination, comb, factor)
        return residual, combination


def _axpy(y, x, a):
    ret = dict(y)
    for k, v in x.items():
        s = ret.get(k, Fraction(0)) + a * v
        if s == 0:
            ret.pop(k, None)
        else:
            ret[k] = s
    return ret
