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
The Fock module of order p, level by level.

Level L is spanned by the creation words of length L. Words are grouped by
weight and each weight block gets its Gram matrix; the radical of the form
is the maximal submodule, so the rank of a block is the dimension of the
corresponding weight space of the irreducible quotient. Quotient vectors are
written in the coordinates of representative words (the pivot columns of
the Gram matrix), which keeps every number rational.
"""

from collections import Counter
import itertools
import logging

from lockss.pso.exact_math import ExactMatrix, exact_kernel, exact_rank, inverse, psd_certificate, rational, rational_str, rref
from lockss.pso.graded_algebra import MINUS, PLUS, WeightVector, check_mode, check_rank, mode_grade, mode_range, parse_sign, vacuum_weight
from lockss.pso.gz_patterns import count_basis
from lockss.pso.parastat_engine import FockEngine, FockVector, commutation_sign, order_p
from lockss.pso.util import Verdict

logger = logging.getLogger(__name__)


def word_weight(word, n, p):
    check_rank(n)
    for i in word:
        if abs(check_mode(i)) > n:
            raise ValueError(f'mode {i} is outside [-{n}, {n}]*')
    return vacuum_weight(n, p) + WeightVector(Counter(word))


class LevelBlock(object):

    def __init__(self, n, p, level, weight, words, gram):
        super().__init__()
        self._n = n
        self._p = p
        self._level = level
        self._weight = weight
        self._words = list(words)
        self._gram = gram
        _, pivots = rref(gram)
        self._rank = len(pivots)
        self._representatives = [self._words[c] for c in pivots]
        self._rep_gram = gram.submatrix(pivots)
        self._rep_inverse = inverse(self._rep_gram)
        self._radical = exact_kernel(gram)

    def coordinates(self, products):
        """
        Coordinates of a quotient vector from its inner products with the
        representative words.
        """
        return self._rep_inverse.apply(products)

    def get_gram(self):
        return self._gram

    def get_level(self):
        return self._level

    def get_n(self):
        return self._n

    def get_p(self):
        return self._p

    def get_radical(self):
        return list(self._radical)

    def get_rank(self):
        return self._rank

    def get_rep_gram(self):
        return self._rep_gram

    def get_representatives(self):
        return list(self._representatives)

    def get_weight(self):
        return self._weight

    def get_words(self):
        return list(self._words)

    def to_json(self):
        return {'weight': self._weight.to_json(),
                'words': [list(w) for w in self._words],
                'rank': self._rank,
                'radicalDim': len(self._radical)}


def build_level(n, p, level, engine=None):
    """
    All weight blocks of the given level, sorted by weight. Words are
    enumerated in lexicographic order.
    """
    check_rank(n)
    p = order_p(p)
    if isinstance(level, bool) or not isinstance(level, int) or level < 0:
        raise ValueError(f'invalid level: {level!r}')
    engine = engine or FockEngine(p, n)
    by_weight = dict()
    for word in itertools.product(mode_range(n), repeat=level):
        by_weight.setdefault(word_weight(word, n, p), []).append(word)
    ret = [LevelBlock(n, p, level, weight, words, engine.gram_matrix(words))
           for weight, words in sorted(by_weight.items())]
    logger.debug('n=%d p=%s L=%d: %d words in %d blocks', n, p, level, sum(len(b.get_words()) for b in ret), len(ret))
    return ret


class ModuleSnapshot(object):
    """
    Levels 0..max_level of the quotient module. Level coordinates
    concatenate the representative coordinates of the blocks in weight
    order.
    """

    def __init__(self, n, p, max_level):
        super().__init__()
        self._n = check_rank(n)
        self._p = order_p(p)
        if isinstance(max_level, bool) or not isinstance(max_level, int) or max_level < 0:
            raise ValueError(f'invalid maximum level: {max_level!r}')
        self._max_level = max_level
        self._engine = FockEngine(self._p, n)
        logger.info('building levels 0..%d for n=%d p=%s (about %d words at the top level)', max_level, n, self._p, (2 * n) ** max_level)
        self._levels = [build_level(n, self._p, level, self._engine) for level in range(max_level + 1)]

    def coordinates(self, level, v):
        ret = list()
        for block in self.get_blocks(level):
            ret.extend(block.coordinates([self._engine.inner_product(rep, v) for rep in block.get_representatives()]))
        return ret

    def dimension(self, level):
        return sum(block.get_rank() for block in self.get_blocks(level))

    def dimension_table(self):
        """
        {(level, weight): rank} over the blocks of nonzero rank.
        """
        return {(level, block.get_weight()): block.get_rank()
                for level in range(self._max_level + 1)
                for block in self._levels[level]
                if block.get_rank() > 0}

    def get_block(self, level, weight):
        for block in self.get_blocks(level):
            if block.get_weight() == weight:
                return block
        return None

    def get_blocks(self, level):
        if not 0 <= level <= self._max_level:
            raise ValueError(f'level {level} is outside [0, {self._max_level}]')
        return list(self._levels[level])

    def get_engine(self):
        return self._engine

    def get_max_level(self):
        return self._max_level

    def get_n(self):
        return self._n

    def get_p(self):
        return self._p

    def gram(self, level):
        return ExactMatrix.block_diagonal(block.get_rep_gram() for block in self.get_blocks(level))

    def representatives(self, level):
        return [rep for block in self.get_blocks(level) for rep in block.get_representatives()]

    def to_json(self):
        return {'n': self._n,
                'p': rational_str(self._p),
                'levels': [{'L': level, 'blocks': [block.to_json() for block in blocks]}
                           for level, blocks in enumerate(self._levels)]}


def dimension_table(n, p, max_level):
    return ModuleSnapshot(n, p, max_level).dimension_table()


def _action_matrix(snapshot, source, target, act):
    columns = [snapshot.coordinates(target, act(FockVector.from_word(rep))) for rep in snapshot.representatives(source)]
    entries = {(r, c): x for c, column in enumerate(columns) for r, x in enumerate(column) if x}
    return ExactMatrix.from_sparse(snapshot.dimension(target), len(columns), entries)


def _check_target(snapshot, level, target):
    if not 0 <= level <= snapshot.get_max_level():
        raise ValueError(f'level {level} is outside [0, {snapshot.get_max_level()}]')
    if not 0 <= target <= snapshot.get_max_level():
        raise ValueError(f'target level {target} is outside [0, {snapshot.get_max_level()}]')


def generator_action(i, sign, snapshot, level):
    """
    Matrix of c(i,sign) from level L to level L+1 (sign +) or L-1 (sign -),
    in representative coordinates: column c is the image of the c-th
    representative of the source level.
    """
    sign = parse_sign(sign)
    if abs(check_mode(i)) > snapshot.get_n():
        raise ValueError(f'mode {i} is outside [-{snapshot.get_n()}, {snapshot.get_n()}]*')
    target = level + sign
    _check_target(snapshot, level, target)
    engine = snapshot.get_engine()
    return _action_matrix(snapshot, level, target, lambda v: engine.apply_generator(i, sign, v))


def pair_action(j, xi, k, eta, snapshot, level):
    """
    Matrix of [[c(j,xi), c(k,eta)]] from level L to level L+xi+eta.
    """
    xi, eta = parse_sign(xi), parse_sign(eta)
    target = level + xi + eta
    _check_target(snapshot, level, target)
    engine = snapshot.get_engine()
    return _action_matrix(snapshot, level, target, lambda v: engine.pair_apply(j, xi, k, eta, v))


def adjointness_check(snapshot):
    """
    G(L+1) A(i,+) = A(i,-)^T G(L) for every mode and every pair of
    consecutive levels.
    """
    for level in range(snapshot.get_max_level()):
        lower, upper = snapshot.gram(level), snapshot.gram(level + 1)
        for i in mode_range(snapshot.get_n()):
            raising = generator_action(i, PLUS, snapshot, level)
            lowering = generator_action(i, MINUS, snapshot, level + 1)
            if upper @ raising != lowering.transpose() @ lower:
                return Verdict.failure(f'c({i},+) and c({i},-) are not adjoint between levels {level} and {level + 1}',
                                       mode=i, level=level)
    return Verdict.success(levels=snapshot.get_max_level())


def commutation_check(snapshot, max_level=None):
    """
    A(j,-) A(k,+) - s A(k,+) A(j,-) equals the action of [[c(j,-), c(k,+)]]
    on every level below the top, s being the commutation sign of j and k.
    """
    top = snapshot.get_max_level() - 1 if max_level is None else max_level
    modes = mode_range(snapshot.get_n())
    for level in range(top + 1):
        for j, k in itertools.product(modes, repeat=2):
            lhs = generator_action(j, MINUS, snapshot, level + 1) @ generator_action(k, PLUS, snapshot, level)
            if level > 0:
                reverse = generator_action(k, PLUS, snapshot, level - 1) @ generator_action(j, MINUS, snapshot, level)
                lhs = lhs - reverse * commutation_sign(j, k)
            if lhs != pair_action(j, MINUS, k, PLUS, snapshot, level):
                return Verdict.failure(f'[[c({j},-), c({k},+)]] does not match at level {level}', modes=[j, k], level=level)
    return Verdict.success(levels=top)


def lowest_weight_check(n, p):
    """
    The vacuum is annihilated by every c(j,-), has norm 1, and carries the
    eigenvalue -p/2 (j < 0) or p/2 (j > 0) of h(j) = 1/2 [[c(j,+), c(j,-)]];
    [[c(j,-), c(k,+)]] acts on it as p delta(j,k).
    """
    p = order_p(p)
    engine = FockEngine(p, n)
    vacuum = FockVector.vacuum()
    if engine.inner_product(vacuum, vacuum) != 1:
        return Verdict.failure('vacuum norm is not 1')
    eigenvalues = dict()
    for j in mode_range(n):
        if engine.apply_annihilation(j, vacuum):
            return Verdict.failure(f'c({j},-) does not annihilate the vacuum', mode=j)
        image = engine.pair_apply(j, PLUS, j, MINUS, vacuum) * rational('1/2')
        expected = -p / 2 if j < 0 else p / 2
        if image != vacuum * expected:
            return Verdict.failure(f'h({j}) does not act on the vacuum by {rational_str(expected)}', mode=j)
        eigenvalues[str(j)] = rational_str(expected)
        for k in mode_range(n):
            if engine.pair_apply(j, MINUS, k, PLUS, vacuum) != vacuum * (p if j == k else 0):
                return Verdict.failure(f'[[c({j},-), c({k},+)]] does not act on the vacuum by p delta', modes=[j, k])
    return Verdict.success(eigenvalues=eigenvalues)


def irreducibility_probe(n, p, max_level, snapshot=None):
    """
    On each level 1..max_level: the images of c(i,+) span the level, and
    no nonzero quotient vector is killed by every c(i,-).
    """
    if isinstance(max_level, bool) or not isinstance(max_level, int) or max_level < 1:
        raise ValueError(f'maximum level must be at least 1: {max_level!r}')
    snapshot = snapshot or ModuleSnapshot(n, p, max_level)
    modes = mode_range(n)
    for level in range(1, max_level + 1):
        dim = snapshot.dimension(level)
        if dim == 0:
            continue
        raising = ExactMatrix.vstack(generator_action(i, PLUS, snapshot, level - 1).transpose() for i in modes)
        if exact_rank(raising) != dim:
            return Verdict.failure(f'level {level} is not spanned by creation from level {level - 1}', level=level)
        lowering = ExactMatrix.vstack(generator_action(i, MINUS, snapshot, level) for i in modes)
        kernel = exact_kernel(lowering)
        if kernel:
            return Verdict.failure(f'singular vector at level {level}',
                                   level=level,
                                   vector=[rational_str(x) for x in kernel[0]])
    return Verdict.success(levels=max_level)


def infinite_action(i, sign, v, p, truncation=None):
    """
    c(i,sign) on a finitely supported vector of the infinite-rank module,
    computed in the rank max(|i|, max |mode|) + 1 truncation unless one is
    given.
    """
    v = v if isinstance(v, FockVector) else FockVector.from_word(v)
    rank = _truncation(truncation, check_mode(i), *v.modes())
    return FockEngine(p, rank).apply_generator(i, sign, v)


def infinite_inner_product(v1, v2, p, truncation=None):
    v1 = v1 if isinstance(v1, FockVector) else FockVector.from_word(v1)
    v2 = v2 if isinstance(v2, FockVector) else FockVector.from_word(v2)
    rank = _truncation(truncation, *v1.modes(), *v2.modes())
    return FockEngine(p, rank).inner_product(v1, v2)


def _truncation(truncation, *modes):
    minimal = max([1] + [abs(i) for i in modes])
    if truncation is None:
        return minimal + 1
    if check_rank(truncation) < minimal:
        raise ValueError(f'truncation rank {truncation} does not contain mode {minimal}')
    return truncation


def _creation_generators(n):
    ret = [((i,), mode_grade(i)) for i in mode_range(n)]
    for j, k in itertools.combinations_with_replacement(mode_range(n), 2):
        if not j == k < 0:
            ret.append(((j, k), mode_grade(j) + mode_grade(k)))
    return ret


def induced_dimension(n, p, level):
    """
    Weight multiplicities of the induced module at the given level: ordered
    monomials in the creation generators c(i,+) (level 1) and
    [[c(j,+), c(k,+)]] (level 2), each generator of odd grade used at most
    once.
    """
    check_rank(n)
    states = {(): 1}
    for modes, grade in _creation_generators(n):
        bound = 1 if grade.dot(grade) else level // len(modes)
        updated = dict()
        for key, count in states.items():
            for power in range(bound + 1):
                if len(key) + power * len(modes) > level:
                    break
                new_key = tuple(sorted(key + modes * power))
                updated[new_key] = updated.get(new_key, 0) + count
        states = updated
    return {word_weight(key, n, p): count for key, count in states.items() if len(key) == level}


def _require_integer_order(p):
    p = order_p(p)
    if p.denominator != 1:
        raise ValueError(f'certification needs a positive integer order, got {p}')
    return p


def basis_theorem_check(snapshot):
    """
    Compares the rank of every weight block with the number of patterns
    of that weight whose top row satisfies m(-n,2n) <= p.
    """
    p = _require_integer_order(snapshot.get_p())
    table = snapshot.dimension_table()
    for level in range(snapshot.get_max_level() + 1):
        patterns = count_basis(snapshot.get_n(), p, level)
        ranks = {weight: rank for (lvl, weight), rank in table.items() if lvl == level}
        for weight in sorted(set(patterns) | set(ranks)):
            if patterns.get(weight, 0) != ranks.get(weight, 0):
                return Verdict.failure(f'dimension mismatch at level {level}, weight {weight}',
                                       level=level,
                                       weight=weight.to_json(),
                                       rank=ranks.get(weight, 0),
                                       patterns=patterns.get(weight, 0))
    return Verdict.success(levels=snapshot.get_max_level())


def radical_dimension_check(snapshot):
    """
    The dimension of the maximal submodule in each weight (induced
    dimension minus rank) equals the number of patterns cut off by
    m(-n,2n) <= p.
    """
    n, p = snapshot.get_n(), _require_integer_order(snapshot.get_p())
    for level in range(snapshot.get_max_level() + 1):
        induced = induced_dimension(n, p, level)
        uncut = count_basis(n, p, level, cutoff=False)
        cut = count_basis(n, p, level)
        for weight in sorted(set(induced) | set(uncut)):
            block = snapshot.get_block(level, weight)
            submodule = induced.get(weight, 0) - (block.get_rank() if block else 0)
            if submodule != uncut.get(weight, 0) - cut.get(weight, 0):
                return Verdict.failure(f'submodule dimension mismatch at level {level}, weight {weight}',
                                       level=level,
                                       weight=weight.to_json(),
                                       submodule=submodule)
    return Verdict.success(levels=snapshot.get_max_level())


def unitarity_check(snapshot):
    _require_integer_order(snapshot.get_p())
    for level in range(snapshot.get_max_level() + 1):
        for block in snapshot.get_blocks(level):
            certificate = psd_certificate(block.get_gram())
            if not certificate:
                return Verdict.failure(f'Gram matrix at level {level}, weight {block.get_weight()} is not positive semidefinite',
                                       level=level,
                                       weight=block.get_weight().to_json(),
                                       certificate=certificate.to_json())
    return Verdict.success(levels=snapshot.get_max_level())
