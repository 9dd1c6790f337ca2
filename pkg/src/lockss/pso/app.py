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

import csv
import importlib.resources
import io
import json
import logging
from pathlib import Path

import tabulate
import xdg

from lockss.pso.exact_math import rational_str
from lockss.pso.fock_space import ModuleSnapshot, basis_theorem_check, infinite_action, lowest_weight_check, unitarity_check
from lockss.pso.graded_algebra import FAMILIES, PARABOSON_FAMILY, PARAFERMION_FAMILY, RELATIVE_PARABOSON, WeightVector, adjoint_weight, axiom_check, block_space_dim, bracket_closure_dim, canonical_basis, check_rank, gl_relation_check, parse_sign, relation_check, sign_str, structure_constants
from lockss.pso.gz_patterns import TopRow, count_basis, enumerate_patterns, pattern_weight, phi_from_infinite, phi_to_infinite, stability_index
from lockss.pso.parastat_engine import FockVector, order_p
import lockss.pso.resources
from lockss.pso.util import _load_and_validate, _path, _validate_instance

logger = logging.getLogger(__name__)


class Report(object):
    """
    Result of a command: a JSON document, its tabular rendering, and the
    verification outcome.
    """

    SCHEMA_VERSION = 1

    def __init__(self, command, document, headers, rows, ok=True, failure=None):
        super().__init__()
        self._command = command
        self._document = {'schema': Report.SCHEMA_VERSION, 'command': command, 'ok': ok, **document}
        self._headers = list(headers)
        self._rows = [list(row) for row in rows]
        self._ok = ok
        self._failure = failure

    def get_command(self):
        return self._command

    def get_document(self):
        return self._document

    def get_failure(self):
        return self._failure

    def get_headers(self):
        return list(self._headers)

    def get_rows(self):
        return [list(row) for row in self._rows]

    def is_ok(self):
        return self._ok

    def render(self, fmt):
        if fmt == 'json':
            return json.dumps(self._document, sort_keys=True, indent=2) + '\n'
        if fmt == 'csv':
            f = io.StringIO()
            writer = csv.writer(f, lineterminator='\n')
            writer.writerow(self._headers)
            writer.writerows([[str(x) for x in row] for row in self._rows])
            return f.getvalue()
        return tabulate.tabulate(self._rows, headers=self._headers, tablefmt=fmt) + '\n'


class PsoApp(object):

    XDG_CONFIG_DIR = xdg.xdg_config_home().joinpath(__package__)

    USR_CONFIG_DIR = Path('/usr/local/share', __package__)

    ETC_CONFIG_DIR = Path('/etc', __package__)

    CONFIG_DIRS = [XDG_CONFIG_DIR, USR_CONFIG_DIR, ETC_CONFIG_DIR]

    SETTINGS = 'settings.yaml'

    SETTINGS_SCHEMA = 'settings-schema.json'

    REPORT_SCHEMA = 'report-schema.json'

    DEFAULT_SETTINGS = {
        'max-rank': 4,
        'max-level': 4,
        'random-triples': 200,
        'seed': 0,
    }

    @staticmethod
    def _default_files(file_str):
        return [dir_path.joinpath(file_str) for dir_path in PsoApp.CONFIG_DIRS]

    @staticmethod
    def _select_file(file_str, preselected=None):
        if preselected:
            preselected = _path(preselected)
            if not preselected.is_file():
                raise FileNotFoundError(str(preselected))
            return preselected
        choices = PsoApp._default_files(file_str)
        ret = next(filter(Path.is_file, choices), None)
        if ret is None:
            raise FileNotFoundError(' or '.join(map(str, choices)))
        return ret

    def __init__(self):
        super().__init__()
        self._report_schema = None
        self._settings = None

    # Returns a Report of the canonical basis, closure data and structure constants
    def algebra(self, n):
        self._check_rank_bound(n)
        basis = canonical_basis(n)
        closure = bracket_closure_dim(n)
        block = block_space_dim(n)
        expected = 4 * n * (2 * n + 1)
        ok = closure == expected == block
        rows = [[name, str(x.get_grade()), str(adjoint_weight(x, n))] for name, x in basis]
        document = {
            'n': n,
            'basis': [{'name': name, 'grade': x.get_grade().to_json(), 'element': x.to_json()} for name, x in basis],
            'closureDimension': closure,
            'blockSpaceDimension': block,
            'structureConstants': structure_constants(n),
        }
        failure = None if ok else f'closure dimension {closure}, block space dimension {block}, expected {expected}'
        return self._report('algebra', document, ['Basis element', 'Grade', 'Weight'], rows, ok, failure)

    def default_settings_files(self):
        return PsoApp._default_files(PsoApp.SETTINGS)

    # Returns a Report of the Fock module levels and, unless exploring, of the certification checks
    def fock(self, n, p, level=None, weight=None, explore=False):
        check_rank(n)
        p = order_p(p)
        if not explore and p.denominator != 1:
            raise ValueError(f'certification needs a positive integer order, got {p}; use --explore')
        level = self.get_setting('max-level') if level is None else level
        logger.info('about %d words at level %d', (2 * n) ** level, level)
        snapshot = ModuleSnapshot(n, p, level)
        wanted = None if weight is None else WeightVector.parse(weight)
        levels = list()
        rows = list()
        for lvl in range(level + 1):
            blocks = [b for b in snapshot.get_blocks(lvl) if wanted is None or b.get_weight() == wanted]
            levels.append({'L': lvl, 'blocks': [b.to_json() for b in blocks]})
            rows.extend([lvl, str(b.get_weight()), len(b.get_words()), b.get_rank(), len(b.get_radical())] for b in blocks)
        document = {'n': n, 'p': rational_str(p), 'levels': levels, 'explore': explore}
        ok, failure = True, None
        if not explore:
            checks = {'lowestWeight': lowest_weight_check(n, p),
                      'basisTheorem': basis_theorem_check(snapshot),
                      'unitarity': unitarity_check(snapshot)}
            document['checks'] = {name: v.to_json() for name, v in checks.items()}
            failed = [(name, v) for name, v in checks.items() if not v]
            if failed:
                ok = False
                name, verdict = failed[0]
                failure = f'{name}: {verdict.get_message()} {json.dumps(verdict.get_details(), sort_keys=True)}'
        return self._report('fock', document, ['L', 'Weight', 'Words', 'Rank', 'Radical'], rows, ok, failure)

    def get_setting(self, key):
        self.load_settings()
        return self._settings[key]

    # Returns a Report comparing c(i,sign) on a word across truncation ranks
    def infinite(self, i, sign, word, p, truncations=None):
        sign = parse_sign(sign)
        p = order_p(p)
        v = FockVector.from_word(word)
        minimal = max([abs(i)] + [abs(m) for m in word])
        truncations = truncations or [minimal + 1, minimal + 2, minimal + 3]
        results = [(t, infinite_action(i, sign, v, p, truncation=t)) for t in truncations]
        independent = all(r == results[0][1] for t, r in results)
        rows = [[t, list(w), c] for t, r in results for w, c in ((w, r.coefficient(w)) for w in r.words())]
        document = {
            'mode': i,
            'sign': sign_str(sign),
            'word': list(word),
            'p': rational_str(p),
            'results': [{'truncation': t, 'vector': r.to_json()} for t, r in results],
            'independent': independent,
        }
        failure = None if independent else f'results differ across truncations {truncations}'
        return self._report('infinite', document, ['Truncation', 'Word', 'Coefficient'], rows, independent, failure)

    def load_settings(self, settings_path=None):
        if self._settings is None:
            try:
                path = self.select_settings(settings_path)
            except FileNotFoundError:
                if settings_path:
                    raise
                path = None
            loaded = dict()
            if path is not None:
                with importlib.resources.path(lockss.pso.resources, PsoApp.SETTINGS_SCHEMA) as settings_schema_path:
                    loaded = _load_and_validate(settings_schema_path, path)
                logger.debug('settings loaded from %s', path)
            self._settings = {**PsoApp.DEFAULT_SETTINGS, **{k: v for k, v in loaded.items() if k != 'kind'}}

    # Returns a Report of the patterns of one top row, or of the pattern counts per weight
    def patterns(self, top=None, n=None, p=None, level=None, weight=None):
        p = order_p(1 if p is None else p)
        wanted = None if weight is None else WeightVector.parse(weight)
        if top is not None:
            top = TopRow.parse(top)
            entries = list()
            for pattern in enumerate_patterns(top):
                w = pattern_weight(pattern, p)
                if wanted is not None and w != wanted:
                    continue
                stability = stability_index(pattern)
                round_trip = None
                if stability is not None:
                    round_trip = phi_from_infinite(phi_to_infinite(pattern), 2 * pattern.get_rank()) == pattern
                entries.append((pattern, w, stability, round_trip))
            ok = all(rt is not False for _, _, _, rt in entries)
            document = {
                'top': str(top),
                'p': rational_str(p),
                'count': len(entries),
                'patterns': [{'rows': pattern.to_json(), 'weight': w.to_json(), 'stability': s, 'roundTrip': rt}
                             for pattern, w, s, rt in entries],
            }
            rows = [[json.dumps(pattern.to_json()), str(w), s, rt] for pattern, w, s, rt in entries]
            failure = None if ok else 'stable pattern does not round-trip through infinite rank'
            return self._report('patterns', document, ['Pattern', 'Weight', 'Stability', 'Round trip'], rows, ok, failure)
        if n is None or level is None:
            raise ValueError('either a top row or a rank and a level are required')
        check_rank(n)
        counts = count_basis(n, p, level)
        items = sorted((w, c) for w, c in counts.items() if wanted is None or w == wanted)
        document = {
            'n': n,
            'p': rational_str(p),
            'L': level,
            'total': sum(c for _, c in items),
            'counts': [{'weight': w.to_json(), 'count': c} for w, c in items],
        }
        return self._report('patterns', document, ['Weight', 'Count'], [[str(w), c] for w, c in items])

    def select_settings(self, preselected=None):
        return PsoApp._select_file(PsoApp.SETTINGS, preselected)

    # Returns a Report of the axiom suite and the four relation families
    def verify(self, n, seed=None, require_pass=()):
        self._check_rank_bound(n)
        seed = self.get_setting('seed') if seed is None else seed
        samples = None if n == 1 else self.get_setting('random-triples')
        axioms = axiom_check(n, samples=samples, seed=seed)
        gl = gl_relation_check(n)
        must_pass = {PARAFERMION_FAMILY, PARABOSON_FAMILY, RELATIVE_PARABOSON, *require_pass}
        failures = list()
        if not axioms:
            failures.append(f'axioms: {axioms.get_message()}')
        if not gl:
            failures.append(f'gl relations: {gl.get_message()}')
        families = list()
        rows = list()
        for family in FAMILIES:
            report = relation_check(family, n)
            expected = 'pass' if family in must_pass else 'fail'
            as_expected = report.is_ok() == (expected == 'pass')
            if not as_expected:
                counterexample = report.get_counterexample()
                detail = json.dumps(counterexample, sort_keys=True) if counterexample else 'no failing instance'
                failures.append(f'{family} relations: expected {expected}, {report.get_failed()} failed; {detail}')
            families.append({**report.to_json(), 'expected': expected, 'asExpected': as_expected})
            rows.append([family, report.get_passed(), report.get_failed(), expected, 'ok' if as_expected else 'UNEXPECTED'])
        document = {
            'n': n,
            'seed': seed,
            'axioms': axioms.to_json(),
            'glRelations': gl.to_json(),
            'families': families,
        }
        return self._report('verify', document, ['Family', 'Passed', 'Failed', 'Expected', 'Status'], rows,
                            not failures, failures[0] if failures else None)

    def _check_rank_bound(self, n):
        bound = self.get_setting('max-rank')
        if check_rank(n) > bound:
            raise ValueError(f'rank {n} exceeds the configured bound {bound}')

    def _report(self, command, document, headers, rows, ok=True, failure=None):
        ret = Report(command, document, headers, rows, ok, failure)
        if self._report_schema is None:
            with importlib.resources.path(lockss.pso.resources, PsoApp.REPORT_SCHEMA) as report_schema_path:
                with report_schema_path.open('r') as f:
                    self._report_schema = json.load(f)
        _validate_instance(self._report_schema, ret.get_document())
        return ret
