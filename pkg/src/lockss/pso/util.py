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

from pathlib import Path, PurePath
import json

import jsonschema
import jsonschema.exceptions
import yaml


def _load_and_validate(schema_path, instance_path):
    with schema_path.open('r') as f:
        schema = json.load(f)
    with instance_path.open('r') as f:
        ret = yaml.safe_load(f)
    _validate_instance(schema, ret)
    return ret


def _validate_instance(schema, instance):
    try:
        jsonschema.validate(instance, schema)
    except jsonschema.exceptions.ValidationError as validation_exception:
        raise ValueError(validation_exception.message) from validation_exception


def _path(purepath_or_string):
    if not issubclass(type(purepath_or_string), PurePath):
        purepath_or_string = Path(purepath_or_string)
    return purepath_or_string.expanduser().resolve()


class Verdict(object):
    """
    Pass/fail outcome of a check, with a message and JSON-ready details
    (for failures, the first counterexample).
    """

    @staticmethod
    def success(message='pass', **details):
        return Verdict(True, message, details)

    @staticmethod
    def failure(message, **details):
        return Verdict(False, message, details)

    def __init__(self, passed, message, details=None):
        super().__init__()
        self._passed = bool(passed)
        self._message = message
        self._details = dict(details or {})

    def get_details(self):
        return dict(self._details)

    def get_message(self):
        return self._message

    def is_passed(self):
        return self._passed

    def to_json(self):
        return {'passed': self._passed, 'message': self._message, **self._details}

    def __bool__(self):
        return self._passed

    def __repr__(self):
        return f'Verdict({self._passed}, {self._message!r})'
