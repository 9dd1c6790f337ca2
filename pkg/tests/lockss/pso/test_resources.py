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

import importlib.resources
import io
import json
from pathlib import Path
import re
import tempfile
import unittest

import jsonschema
import yaml

from lockss.pso.app import PsoApp
import lockss.pso.resources
from lockss.pso.util import _load_and_validate


def _load_schema(name):
    with importlib.resources.path(lockss.pso.resources, name) as path:
        with path.open('r') as f:
            return json.load(f)


class TestSettingsSchema(unittest.TestCase):

    def setUp(self):
        self.schema = _load_schema(PsoApp.SETTINGS_SCHEMA)

    def test_minimal(self):
        jsonschema.validate(yaml.safe_load(io.StringIO('''\
---
kind: Settings
''')),
                            self.schema)

    def test_full(self):
        jsonschema.validate(yaml.safe_load(io.StringIO('''\
---
kind: Settings
max-rank: 3
max-level: 5
random-triples: 500
seed: 42
''')),
                            self.schema)

    def test_invalid_kind(self):
        self.assertRaisesRegex(jsonschema.ValidationError,
                               re.compile(r'''^'Settings' was expected'''),
                               jsonschema.validate,
                               yaml.safe_load(io.StringIO('''\
---
kind: InvalidKind
''')),
                               self.schema)

    def test_no_kind(self):
        self.assertRaisesRegex(jsonschema.ValidationError,
                               re.compile(r'''^'kind' is a required property'''),
                               jsonschema.validate,
                               yaml.safe_load(io.StringIO('''\
---
# kind intentionally omitted
max-rank: 3
''')),
                               self.schema)

    def test_zero_rank(self):
        self.assertRaisesRegex(jsonschema.ValidationError,
                               re.compile(r'''^0 is less than the minimum of 1'''),
                               jsonschema.validate,
                               yaml.safe_load(io.StringIO('''\
---
kind: Settings
max-rank: 0
''')),
                               self.schema)

    def test_non_integer_level(self):
        self.assertRaisesRegex(jsonschema.ValidationError,
                               re.compile(r'''^'four' is not of type 'integer\''''),
                               jsonschema.validate,
                               yaml.safe_load(io.StringIO('''\
---
kind: Settings
max-level: four
''')),
                               self.schema)

    def test_unknown_setting(self):
        self.assertRaisesRegex(jsonschema.ValidationError,
                               re.compile(r'''^Additional properties are not allowed \('max-order' was unexpected\)'''),
                               jsonschema.validate,
                               yaml.safe_load(io.StringIO('''\
---
kind: Settings
max-order: 3
''')),
                               self.schema)


class TestReportSchema(unittest.TestCase):

    def setUp(self):
        self.schema = _load_schema(PsoApp.REPORT_SCHEMA)

    def test_fock_report(self):
        jsonschema.validate({'schema': 1,
                             'command': 'fock',
                             'ok': True,
                             'n': 1,
                             'p': '3/2',
                             'levels': [{'L': 0, 'blocks': [{'weight': {'-1': '-3/4', '1': '3/4'},
                                                             'words': [[]],
                                                             'rank': 1,
                                                             'radicalDim': 0}]}]},
                            self.schema)

    def test_unknown_command(self):
        self.assertRaisesRegex(jsonschema.ValidationError,
                               re.compile(r'''^'plot' is not one of'''),
                               jsonschema.validate,
                               {'schema': 1, 'command': 'plot', 'ok': True},
                               self.schema)

    def test_float_order(self):
        self.assertRaisesRegex(jsonschema.ValidationError,
                               re.compile(r'''^'1\.5' does not match'''),
                               jsonschema.validate,
                               {'schema': 1, 'command': 'fock', 'ok': True, 'p': '1.5'},
                               self.schema)

    def test_zero_mode_in_word(self):
        self.assertRaisesRegex(jsonschema.ValidationError,
                               re.compile(r'''^0 should not be valid under'''),
                               jsonschema.validate,
                               {'schema': 1,
                                'command': 'infinite',
                                'ok': True,
                                'results': [{'truncation': 2, 'vector': [{'word': [1, 0], 'coeff': '1'}]}]},
                               self.schema)

    def test_no_ok(self):
        self.assertRaisesRegex(jsonschema.ValidationError,
                               re.compile(r'''^'ok' is a required property'''),
                               jsonschema.validate,
                               {'schema': 1, 'command': 'verify'},
                               self.schema)


class TestLoadAndValidate(unittest.TestCase):

    def setUp(self):
        self.tempdir = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.tempdir.cleanup()

    def load(self, text):
        path = Path(self.tempdir.name, 'settings.yaml')
        path.write_text(text)
        with importlib.resources.path(lockss.pso.resources, PsoApp.SETTINGS_SCHEMA) as schema_path:
            return _load_and_validate(schema_path, path)

    def test_single_document(self):
        self.assertEqual({'kind': 'Settings', 'seed': 3}, self.load('---\nkind: Settings\nseed: 3\n'))

    def test_invalid_document(self):
        self.assertRaisesRegex(ValueError,
                               re.compile(r'''^'Settings' was expected'''),
                               self.load,
                               '---\nkind: Plugin\n')

    def test_several_documents(self):
        self.assertRaises(yaml.YAMLError, self.load, '---\nkind: Settings\n---\nkind: Settings\n')
