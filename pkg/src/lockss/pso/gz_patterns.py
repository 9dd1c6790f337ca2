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
Gelfand-Zetlin patterns for the gl(n|n) chain used by the Fock modules.

A pattern of rank n has rows 1..2n. Row r holds (r+1)//2 labels
m(-k,r), ..., m(-1,r) followed by r//2 labels m(1,r), ..., m(r//2,r);
row 2n is the top row. Patterns serialize as lists of rows, top row last.
"""

import itertools
import logging

from lockss.pso.exact_math import rational
from lockss.pso.graded_algebra import WeightVector, check_mode, check_rank, mode_range, vacuum_weight
from lockss.pso.util import Verdict

logger = logging.getLogger(__name__)


def rho(i):
    check_mode(i)
    return 2 * i if i > 0 else -2 * i - 1


def rho_inverse(r):
    if isinstance(r, bool) or not isinstance(r, int) or r < 1:
        raise ValueError(f'invalid row index: {r!r}')
    return r // 2 if r % 2 == 0 else -(r + 1) // 2


def _count_positive(values):
    return sum(1 for x in values if x > 0)


def _is_weakly_decreasing(values):
    return all(a >= b for a, b in zip(values, values[1:]))


class TopRow(object):
    """
    The labels m(k,2n), k in [-n, n]*, written 'm(-n),...,m(-1);m(1),...,m(n)'.
    """

    @staticmethod
    def parse(text):
        neg, sep, pos = str(text).replace(' ', '').partition(';')
        if not sep:
            raise ValueError(f'top row must have the form NEG;POS: {text!r}')
        try:
            return TopRow([int(x) for x in neg.split(',')], [int(x) for x in pos.split(',')])
        except ValueError as ve:
            raise ValueError(f'invalid top row: {text!r}') from ve

    def __init__(self, neg, pos):
        super().__init__()
        self._neg = tuple(int(x) for x in neg)
        self._pos = tuple(int(x) for x in pos)
        if len(self._neg) != len(self._pos) or len(self._neg) < 1:
            raise ValueError(f'top row parts must have the same positive length: {self}')

    def condition_1(self):
        if any(x < 0 for x in self.values()):
            return Verdict.failure(f'top row {self} has a negative label', condition=1)
        if not _is_weakly_decreasing(self._neg) or not _is_weakly_decreasing(self._pos):
            return Verdict.failure(f'top row {self} is not weakly decreasing on each side', condition=1)
        if self._neg[-1] < _count_positive(self._pos):
            return Verdict.failure(f'top row {self}: m(-1) is less than the number of positive m(i)', condition=1)
        return Verdict.success()

    def get_neg(self):
        return self._neg

    def get_pos(self):
        return self._pos

    def get_rank(self):
        return len(self._neg)

    def m(self, i):
        n = self.get_rank()
        if check_mode(i) < 0:
            if -i > n:
                raise ValueError(f'no label m({i}) in rank {n}')
            return self._neg[n + i]
        if i > n:
            raise ValueError(f'no label m({i}) in rank {n}')
        return self._pos[i - 1]

    def total(self):
        return sum(self.values())

    def values(self):
        return self._neg + self._pos

    def with_added(self, k, delta=1):
        neg, pos = list(self._neg), list(self._pos)
        n = self.get_rank()
        if check_mode(k) < 0:
            neg[n + k] += delta
        else:
            pos[k - 1] += delta
        return TopRow(neg, pos)

    def to_json(self):
        return str(self)

    def __eq__(self, other):
        if not isinstance(other, TopRow):
            return NotImplemented
        return (self._neg, self._pos) == (other._neg, other._pos)

    def __hash__(self):
        return hash((self._neg, self._pos))

    def __lt__(self, other):
        return self.values() < other.values()

    def __repr__(self):
        return f'TopRow({self})'

    def __str__(self):
        return f'{",".join(map(str, self._neg))};{",".join(map(str, self._pos))}'


class GZPattern(object):

    @staticmethod
    def from_json(rows):
        return GZPattern(rows)

    @staticmethod
    def zero(n):
        return GZPattern([[0] * r for r in range(1, 2 * check_rank(n) + 1)])

    def __init__(self, rows):
        super().__init__()
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        if len(rows) < 2 or len(rows) % 2:
            raise ValueError(f'a pattern needs an even, positive number of rows, got {len(rows)}')
        for r, row in enumerate(rows, start=1):
            if len(row) != r:
                raise ValueError(f'row {r} must have {r} entries, got {len(row)}')
        self._rows = rows

    def get_rank(self):
        return len(self._rows) // 2

    def m(self, i, r):
        neg, pos = self.neg(r), self.pos(r)
        if check_mode(i) < 0:
            if -i > len(neg):
                raise ValueError(f'no label m({i},{r})')
            return neg[len(neg) + i]
        if i > len(pos):
            raise ValueError(f'no label m({i},{r})')
        return pos[i - 1]

    def neg(self, r):
        return self.row(r)[:(r + 1) // 2]

    def pos(self, r):
        return self.row(r)[(r + 1) // 2:]

    def row(self, r):
        if not 1 <= r <= len(self._rows):
            raise ValueError(f'no row {r} in a pattern of rank {self.get_rank()}')
        return self._rows[r - 1]

    def row_sum(self, r):
        return 0 if r == 0 else sum(self.row(r))

    def rows(self):
        return list(self._rows)

    def top(self):
        n = self.get_rank()
        return TopRow(self.neg(2 * n), self.pos(2 * n))

    def to_json(self):
        return [list(row) for row in self._rows]

    def __eq__(self, other):
        if not isinstance(other, GZPattern):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __lt__(self, other):
        return self._rows[::-1] < other._rows[::-1]

    def __repr__(self):
        return f'GZPattern({self.to_json()})'


def _fail(condition, r, i=None):
    details = {'condition': condition, 'row': r}
    message = f'condition {condition} fails at row {r}'
    if i is not None:
        details['index'] = i
        message += f', index {i}'
    return Verdict.failure(message, **details)


def validate_finite(pattern):
    """
    Checks the branching conditions of a finite pattern. Condition 0 is
    nonnegativity, conditions 1 to 7 are the classical list, and condition 8
    is the containment m(-1,2s+1) >= #{i in [1,s] : m(i,2s) > 0} between
    rows 2s+1 and 2s.
    """
    n = pattern.get_rank()
    m = pattern.m
    for r in range(1, 2 * n + 1):
        if any(x < 0 for x in pattern.row(r)):
            return _fail(0, r)
    top = pattern.top()
    neg, pos = top.get_neg(), top.get_pos()
    for q in range(n - 1):
        if neg[q] < neg[q + 1]:
            return _fail(1, 2 * n, -(n - q))
        if pos[q] < pos[q + 1]:
            return _fail(1, 2 * n, q + 1)
    if neg[-1] < _count_positive(pos):
        return _fail(1, 2 * n, -1)
    for s in range(1, n + 1):
        for i in range(1, s + 1):
            if m(-i, 2 * s) - m(-i, 2 * s - 1) not in (0, 1):
                return _fail(2, 2 * s, -i)
    for s in range(1, n):
        for i in range(1, s + 1):
            if m(i, 2 * s) - m(i, 2 * s + 1) not in (0, 1):
                return _fail(3, 2 * s, i)
    for s in range(1, n + 1):
        if m(-1, 2 * s) < _count_positive(pattern.pos(2 * s)):
            return _fail(4, 2 * s)
    for s in range(2, n + 1):
        if m(-1, 2 * s - 1) < _count_positive(pattern.pos(2 * s - 1)):
            return _fail(5, 2 * s - 1)
    for s in range(2, n + 1):
        for i in range(1, s):
            if not m(i, 2 * s) >= m(i, 2 * s - 1) >= m(i + 1, 2 * s):
                return _fail(6, 2 * s - 1, i)
    for s in range(1, n):
        for i in range(1, s + 1):
            if not m(-i - 1, 2 * s + 1) >= m(-i, 2 * s) >= m(-i, 2 * s + 1):
                return _fail(7, 2 * s, -i)
    for s in range(1, n):
        if m(-1, 2 * s + 1) < _count_positive(pattern.pos(2 * s)):
            return _fail(8, 2 * s + 1)
    return Verdict.success()


def _rows_below(row, r):
    """
    All admissible rows r-1 under row r, in lexicographic order.
    """
    half = (r + 1) // 2
    neg, pos = row[:half], row[half:]
    if r % 2 == 0:
        neg_choices = [[x for x in (v - 1, v) if x >= 0] for v in neg]
        pos_choices = [range(pos[i + 1], pos[i] + 1) for i in range(len(pos) - 1)]
        for new_neg in itertools.product(*neg_choices):
            for new_pos in itertools.product(*pos_choices):
                if len(new_pos) == 0 or new_neg[-1] >= _count_positive(new_pos):
                    yield new_neg + new_pos
    else:
        neg_choices = [range(neg[q + 1], neg[q] + 1) for q in range(len(neg) - 1)]
        pos_choices = [(v, v + 1) for v in pos]
        for new_neg in itertools.product(*neg_choices):
            for new_pos in itertools.product(*pos_choices):
                count = _count_positive(new_pos)
                if new_neg[-1] >= count and neg[-1] >= count:
                    yield new_neg + new_pos


def _descend(rows):
    r = len(rows[0]) - len(rows) + 1
    if r == 1:
        yield rows
        return
    for below in _rows_below(rows[-1], r):
        yield from _descend(rows + [below])


def enumerate_patterns(top):
    """
    All valid patterns with the given top row, generated top-down with the
    entries of each row in lexicographic order.
    """
    verdict = top.condition_1()
    if not verdict:
        raise ValueError(f'invalid top row {top}: {verdict.get_message()}')
    ret = [GZPattern(rows[::-1]) for rows in _descend([top.values()])]
    logger.debug('top row %s: %d patterns', top, len(ret))
    return ret


def _partitions(total, length, largest=None):
    """
    Weakly decreasing tuples of nonnegative integers of the given length
    and sum, largest part first, in lexicographic order.
    """
    largest = total if largest is None else min(largest, total)
    if length == 0:
        if total == 0:
            yield ()
        return
    for first in range(0, largest + 1):
        if first * length < total:
            continue
        for rest in _partitions(total - first, length - 1, first):
            yield (first,) + rest


def valid_tops(n, level, cutoff=None):
    """
    Top rows of rank n with label total equal to level that satisfy
    condition 1 and, when a cutoff is given, m(-n,2n) <= cutoff.
    """
    check_rank(n)
    ret = list()
    for neg_total in range(level + 1):
        for neg in _partitions(neg_total, n):
            for pos in _partitions(level - neg_total, n):
                top = TopRow(neg, pos)
                if not top.condition_1():
                    continue
                if cutoff is not None and neg[0] > cutoff:
                    continue
                ret.append(top)
    return sorted(ret)


def pattern_weight(pattern, p):
    """
    Vacuum weight plus (|row r| - |row r-1|) on epsilon(rho_inverse(r)) for
    every row r.
    """
    n = pattern.get_rank()
    offsets = {rho_inverse(r): pattern.row_sum(r) - pattern.row_sum(r - 1) for r in range(1, 2 * n + 1)}
    return vacuum_weight(n, p) + WeightVector(offsets)


def creation_pattern(i, n):
    """
    The pattern of c(i,+): rows rho(i)..2n of the form 1 0 ... 0, lower rows
    zero.
    """
    check_rank(n)
    start = rho(i)
    if start > 2 * n:
        raise ValueError(f'mode {i} is outside rank {n}')
    return GZPattern([[1 if (r >= start and c == 0) else 0 for c in range(r)] for r in range(1, 2 * n + 1)])


def tensor_branch(top):
    """
    Top rows of the summands of the tensor product with the standard
    module: one label raised by one, keeping only those satisfying
    condition 1.
    """
    return [branch for branch in (top.with_added(k) for k in mode_range(top.get_rank())) if branch.condition_1()]


def _stable_nu(top):
    neg = list(top.get_neg())
    if any(top.get_pos()) or not _is_weakly_decreasing(neg):
        return None
    while neg and neg[-1] == 0:
        neg.pop()
    return tuple(neg)


def _is_nu_row(pattern, r, nu):
    neg = pattern.neg(r)
    return len(nu) <= len(neg) and neg == nu + (0,) * (len(neg) - len(nu)) and not any(pattern.pos(r))


def stability_index(pattern):
    """
    Smallest row index s such that rows s..2n all read [nu;0] for a single
    partition nu, or None.
    """
    nu = _stable_nu(pattern.top())
    if nu is None:
        return None
    s = 2 * pattern.get_rank()
    while s > 1 and _is_nu_row(pattern, s - 1, nu):
        s -= 1
    return s


def phi_extend(pattern):
    """
    Rank n+1 pattern obtained by repeating a top row [nu;0] as rows 2n+1
    and 2n+2.
    """
    n = pattern.get_rank()
    top = pattern.top()
    if any(top.get_pos()):
        raise ValueError(f'top row {top} has a nonzero positive part')
    neg = top.get_neg() + (0,)
    return GZPattern(pattern.rows() + [neg + (0,) * n, neg + (0,) * (n + 1)])


class InfiniteGZPattern(object):
    """
    Row-stable pattern of infinite rank: rows 1..2s of the body, then row
    [nu;0] repeated forever.
    """

    @staticmethod
    def from_json(obj):
        return InfiniteGZPattern(obj['stability'], obj['nu'], GZPattern(obj['body']))

    def __init__(self, stability, nu, body):
        super().__init__()
        if isinstance(stability, bool) or not isinstance(stability, int) or stability < 2 or stability % 2:
            raise ValueError(f'stability index must be a positive even integer: {stability!r}')
        if body.get_rank() != stability // 2:
            raise ValueError(f'body of rank {body.get_rank()} does not match stability index {stability}')
        nu = [int(x) for x in nu]
        while nu and nu[-1] == 0:
            nu.pop()
        self._stability = stability
        self._nu = tuple(nu)
        self._body = body

    def get_body(self):
        return self._body

    def get_nu(self):
        return self._nu

    def get_stability(self):
        return self._stability

    def normalized(self):
        body, s = self._body, self._stability // 2
        while s >= 2 and len(self._nu) <= s - 1:
            lower = GZPattern(body.rows()[:2 * s - 2])
            if not _is_nu_row(lower, 2 * s - 2, self._nu) or phi_extend(lower) != body:
                break
            body, s = lower, s - 1
        return InfiniteGZPattern(2 * s, self._nu, body)

    def to_json(self):
        return {'stability': self._stability, 'nu': list(self._nu), 'body': self._body.to_json()}

    def _key(self):
        normal = self.normalized()
        return (normal._stability, normal._nu, normal._body)

    def __eq__(self, other):
        if not isinstance(other, InfiniteGZPattern):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f'InfiniteGZPattern({self.to_json()})'


def phi_to_infinite(pattern):
    nu = _stable_nu(pattern.top())
    if nu is None:
        raise ValueError(f'top row {pattern.top()} is not of the form [nu;0]')
    return InfiniteGZPattern(2 * pattern.get_rank(), nu, pattern).normalized()


def phi_from_infinite(pattern, two_s):
    if isinstance(two_s, bool) or not isinstance(two_s, int) or two_s < 2 or two_s % 2:
        raise ValueError(f'row index must be a positive even integer: {two_s!r}')
    normal = pattern.normalized()
    if two_s < normal.get_stability():
        raise ValueError(f'pattern is not stable with respect to row {two_s} (stability index {normal.get_stability()})')
    body = normal.get_body()
    while body.get_rank() < two_s // 2:
        body = phi_extend(body)
    return body


def branching_check(pattern, up_to):
    """
    The infinite-rank branching conditions for r in [1, up_to], evaluated on
    a finite pattern of rank at least up_to + 1. Conditions 1 to 6 are the
    classical infinite list; condition 7 is the containment between rows
    2r+1 and 2r.
    """
    if pattern.get_rank() < up_to + 1:
        raise ValueError(f'conditions up to r={up_to} need rank {up_to + 1}, got {pattern.get_rank()}')
    m = pattern.m
    for r in range(1, 2 * pattern.get_rank() + 1):
        if any(x < 0 for x in pattern.row(r)):
            return _fail(0, r)
    checks = [
        (1, lambda r: next((-i for i in range(1, r + 1) if m(-i, 2 * r) - m(-i, 2 * r - 1) not in (0, 1)), None)),
        (2, lambda r: next((i for i in range(1, r + 1) if m(i, 2 * r) - m(i, 2 * r + 1) not in (0, 1)), None)),
        (3, lambda r: -1 if m(-1, 2 * r) < _count_positive(pattern.pos(2 * r)) else None),
        (4, lambda r: -1 if m(-1, 2 * r + 1) < _count_positive(pattern.pos(2 * r + 1)) else None),
        (5, lambda r: next((i for i in range(1, r + 1) if not m(i, 2 * r + 2) >= m(i, 2 * r + 1) >= m(i + 1, 2 * r + 2)), None)),
        (6, lambda r: next((-i for i in range(1, r + 1) if not m(-i - 1, 2 * r + 1) >= m(-i, 2 * r) >= m(-i, 2 * r + 1)), None)),
        (7, lambda r: -1 if m(-1, 2 * r + 1) < _count_positive(pattern.pos(2 * r)) else None),
    ]
    for condition, check in checks:
        for r in range(1, up_to + 1):
            index = check(r)
            if index is not None:
                return _fail(condition, r, index)
    return Verdict.success()


def validate_infinite(pattern, p):
    nu = pattern.get_nu()
    if any(x <= 0 for x in nu) or not _is_weakly_decreasing(nu):
        return Verdict.failure(f'nu {list(nu)} is not a partition', condition='nu')
    body = pattern.get_body()
    s = body.get_rank()
    if not _is_nu_row(body, 2 * s, nu):
        return Verdict.failure(f'row {2 * s} is not [nu;0]', condition='stability')
    if nu and nu[0] > rational(p):
        return Verdict.failure(f'nu_1 = {nu[0]} exceeds p = {p}', condition='cutoff')
    return branching_check(phi_extend(body), s)


def count_basis(n, p, level, cutoff=True):
    """
    Number of valid patterns of rank n with top-row total level, grouped
    by weight; with cutoff, only tops with m(-n,2n) <= p.
    """
    p = rational(p)
    ret = dict()
    for top in valid_tops(n, level, cutoff=p if cutoff else None):
        for pattern in enumerate_patterns(top):
            weight = pattern_weight(pattern, p)
            ret[weight] = ret.get(weight, 0) + 1
    return ret
