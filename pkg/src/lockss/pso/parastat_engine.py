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
Creation words and the contravariant form of the induced Fock module.

A word (i1, ..., iL) stands for c(i1,+) ... c(iL,+)|0>, so creation
operators act by prepending. Annihilation operators and pair elements are
pushed through a word one letter at a time using the graded commutation
rule and the triple brackets of the matrix realization; every coefficient
stays in Q.
"""

from fractions import Fraction
from functools import lru_cache, reduce
import logging

from lockss.pso.exact_math import ExactMatrix, rational, rational_str
from lockss.pso.graded_algebra import EVEN, MINUS, PLUS, check_mode, check_rank, generator, generator_expansion, graded_bracket, mode_grade, parse_sign

logger = logging.getLogger(__name__)


def word_grade(word):
    return reduce(lambda acc, i: acc + mode_grade(i), word, EVEN)


def commutation_sign(j, k):
    """
    (-1)^(a.b) for the grades of modes j and k: +1 for two parafermions,
    -1 otherwise.
    """
    return mode_grade(j).sign(mode_grade(k))


def order_p(p):
    p = rational(p)
    if p <= 0:
        raise ValueError(f'order p must be positive: {p}')
    return p


@lru_cache(maxsize=None)
def _triple_constants(j, xi, k, eta, l, epsilon, rank):
    x = graded_bracket(graded_bracket(generator(j, xi).embed(rank), generator(k, eta)), generator(l, epsilon))
    return generator_expansion(x)


def triple_constants(j, xi, k, eta, l, epsilon, rank=None):
    """
    [[[[c(j,xi), c(k,eta)]], c(l,epsilon)]] expanded on single generators,
    as a sorted tuple of (mode, sign, coefficient), computed with matrices
    of the given rank (default: the smallest rank containing the modes).
    """
    modes = (check_mode(j), check_mode(k), check_mode(l))
    minimal = max(abs(i) for i in modes)
    rank = minimal if rank is None else check_rank(rank)
    if rank < minimal:
        raise ValueError(f'modes {modes} do not fit in rank {rank}')
    return _triple_constants(j, parse_sign(xi), k, parse_sign(eta), l, parse_sign(epsilon), rank)


def _check_word(word):
    return tuple(check_mode(i) for i in word)


def _accumulate(target, source, scale=1, prefix=()):
    for word, coeff in source.items():
        word = prefix + word
        value = target.get(word, 0) + scale * coeff
        if value:
            target[word] = value
        else:
            target.pop(word, None)
    return target


class FockVector(object):

    @staticmethod
    def vacuum():
        return FockVector({(): 1})

    @staticmethod
    def from_word(word, coeff=1):
        return FockVector({tuple(word): coeff})

    @staticmethod
    def from_json(obj):
        return FockVector({tuple(term['word']): term['coeff'] for term in obj})

    def __init__(self, terms=None):
        super().__init__()
        self._terms = dict()
        for word, coeff in (terms or dict()).items():
            coeff = rational(coeff)
            if coeff:
                word = _check_word(word)
                self._terms[word] = self._terms.get(word, Fraction(0)) + coeff
        self._terms = {w: c for w, c in self._terms.items() if c}

    def coefficient(self, word):
        return self._terms.get(tuple(word), Fraction(0))

    def is_zero(self):
        return not self._terms

    def modes(self):
        return sorted({i for word in self._terms for i in word})

    def terms(self):
        return dict(self._terms)

    def to_json(self):
        return [{'word': list(word), 'coeff': rational_str(self._terms[word])} for word in self.words()]

    def words(self):
        return sorted(self._terms, key=lambda w: (len(w), w))

    def __add__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        return FockVector(_accumulate(dict(self._terms), other._terms))

    def __sub__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        return FockVector(_accumulate(dict(self._terms), other._terms, -1))

    def __neg__(self):
        return self * -1

    def __mul__(self, scalar):
        scalar = rational(scalar)
        return FockVector({w: scalar * c for w, c in self._terms.items()})

    __rmul__ = __mul__

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        return f'FockVector({", ".join(f"{c}*{list(w)}" for w, c in ((w, self._terms[w]) for w in self.words())) or "0"})'


def _as_vector(v):
    if isinstance(v, FockVector):
        return v
    return FockVector.from_word(v)


def dagger_word(word):
    """
    Adjoint of c(i1,+) ... c(iL,+) as an operator string (leftmost first):
    c(iL,-) ... c(i1,-).
    """
    return tuple((i, MINUS) for i in reversed(_check_word(word)))


class FockEngine(object):
    """
    Evaluates operators on the induced module at order p. Memo tables are
    per instance; an engine is meant to be used from a single thread.
    """

    def __init__(self, p, rank=None):
        super().__init__()
        self._p = order_p(p)
        self._rank = None if rank is None else check_rank(rank)
        self._annihilate_memo = dict()
        self._pair_memo = dict()
        self._lower_memo = dict()

    def get_p(self):
        return self._p

    def get_rank(self):
        return self._rank

    def apply_annihilation(self, l, v):
        self._check_modes(l)
        ret = dict()
        for word, coeff in _as_vector(v).terms().items():
            self._check_modes(*word)
            _accumulate(ret, self._annihilate_word(l, word), coeff)
        return FockVector(ret)

    def apply_creation(self, i, v):
        self._check_modes(i)
        v = _as_vector(v)
        self._check_modes(*v.modes())
        return FockVector({(i,) + word: coeff for word, coeff in v.terms().items()})

    def apply_generator(self, i, sign, v):
        if parse_sign(sign) == PLUS:
            return self.apply_creation(i, v)
        return self.apply_annihilation(i, v)

    def apply_operator(self, operators, v):
        """
        Applies an operator string [(mode, sign), ...], rightmost first.
        """
        v = _as_vector(v)
        for i, sign in reversed(list(operators)):
            v = self.apply_generator(i, sign, v)
        return v

    def gram_matrix(self, words):
        words = [_check_word(w) for w in words]
        return ExactMatrix.from_rows([[self._word_product(w1, w2) for w2 in words] for w1 in words])

    def inner_product(self, v1, v2):
        v1, v2 = _as_vector(v1), _as_vector(v2)
        self._check_modes(*v1.modes(), *v2.modes())
        ret = Fraction(0)
        for w1, c1 in v1.terms().items():
            for w2, c2 in v2.terms().items():
                ret += c1 * c2 * self._word_product(w1, w2)
        return ret

    def pair_apply(self, j, xi, k, eta, v):
        self._check_modes(j, k)
        xi, eta = parse_sign(xi), parse_sign(eta)
        ret = dict()
        for word, coeff in _as_vector(v).terms().items():
            self._check_modes(*word)
            _accumulate(ret, self._pair_word(j, xi, k, eta, word), coeff)
        return FockVector(ret)

    def _annihilate_word(self, l, word):
        key = (l, word)
        ret = self._annihilate_memo.get(key)
        if ret is None:
            ret = dict()
            if word:
                k, rest = word[0], word[1:]
                # c(l,-) c(k,+) = [[c(l,-), c(k,+)]] + s c(k,+) c(l,-)
                _accumulate(ret, self._pair_word(l, MINUS, k, PLUS, rest))
                _accumulate(ret, self._annihilate_word(l, rest), commutation_sign(l, k), (k,))
            self._annihilate_memo[key] = ret
        return ret

    def _pair_vacuum(self, j, xi, k, eta):
        s = commutation_sign(j, k)
        if (xi, eta) == (MINUS, PLUS):
            return {(): self._p} if j == k else dict()
        if (xi, eta) == (PLUS, MINUS):
            return {(): -s * self._p} if j == k else dict()
        if (xi, eta) == (MINUS, MINUS):
            return dict()
        return _accumulate({(j, k): 1}, {(k, j): 1}, -s)

    def _pair_word(self, j, xi, k, eta, word):
        key = (j, xi, k, eta, word)
        ret = self._pair_memo.get(key)
        if ret is None:
            if not word:
                ret = self._pair_vacuum(j, xi, k, eta)
            else:
                i, rest = word[0], word[1:]
                ret = dict()
                # P c(i,+) = [[P, c(i,+)]] + (-1)^((a_j+a_k).a_i) c(i,+) P
                for mode, sign, coeff in triple_constants(j, xi, k, eta, i, PLUS, self._rank):
                    if sign == PLUS:
                        _accumulate(ret, {(mode,) + rest: coeff})
                    else:
                        _accumulate(ret, self._annihilate_word(mode, rest), coeff)
                s = (mode_grade(j) + mode_grade(k)).sign(mode_grade(i))
                _accumulate(ret, self._pair_word(j, xi, k, eta, rest), s, (i,))
            self._pair_memo[key] = ret
        return ret

    def _word_product(self, w1, w2):
        """
        <w1|w2>: the vacuum coefficient of c(iL,-) ... c(i1,-) w2 for
        w1 = (i1, ..., iL).
        """
        key = (w1, w2)
        ret = self._lower_memo.get(key)
        if ret is None:
            if not w1:
                ret = Fraction(1) if not w2 else Fraction(0)
            else:
                ret = Fraction(0)
                for word, coeff in self._annihilate_word(w1[0], w2).items():
                    ret += coeff * self._word_product(w1[1:], word)
            self._lower_memo[key] = ret
        return ret

    def _check_modes(self, *modes):
        for i in modes:
            check_mode(i)
            if self._rank is not None and abs(i) > self._rank:
                raise ValueError(f'mode {i} is outside [-{self._rank}, {self._rank}]*')


def apply_creation(i, v):
    check_mode(i)
    return FockVector({(i,) + word: coeff for word, coeff in _as_vector(v).terms().items()})


def apply_annihilation(l, v, p):
    return FockEngine(p).apply_annihilation(l, v)


def pair_apply(j, xi, k, eta, v, p):
    return FockEngine(p).pair_apply(j, xi, k, eta, v)


def inner_product(v1, v2, p):
    return FockEngine(p).inner_product(v1, v2)


def gram_matrix(words, p):
    return FockEngine(p).gram_matrix(words)
