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

import argparse
import logging
from pathlib import Path
import sys

import rich_argparse
import tabulate

import lockss.pso
from lockss.pso.app import PsoApp
from lockss.pso.graded_algebra import FAMILIES
from lockss.pso.util import _path


def _int_list(text):
    return [int(x) for x in text.split(',') if x.strip()]


class PsoCli(object):

    PROG = 'pso'

    EXIT_OK = 0

    EXIT_FAILURE = 1

    FORMATS = ['json', 'csv'] + tabulate.tabulate_formats

    def __init__(self):
        super().__init__()
        self._app = PsoApp()
        self._args = None
        self._parser = None
        self._subparsers = None

    def run(self, argv=None):
        self._make_parser()
        self._args = self._parser.parse_args(argv)
        if self._args.debug_cli:
            print(self._args)
        logging.basicConfig(level=max(logging.DEBUG, logging.WARNING - 10 * self._args.verbose),
                            format='%(levelname)s %(name)s: %(message)s',
                            stream=sys.stderr)
        if 'fun' not in self._args:
            self._parser.error('a command is required')
        return self._args.fun() or PsoCli.EXIT_OK

    def _algebra(self):
        return self._emit(lambda: self._app.algebra(self._args.rank))

    def _copyright(self):
        print(lockss.pso.__copyright__)

    def _emit(self, make_report):
        try:
            self._app.load_settings(self._args.settings)
            report = make_report()
        except FileNotFoundError as fnfe:
            self._parser.error(f'settings file not found: {fnfe}')
        except ValueError as ve:
            self._parser.error(str(ve))
        text = report.render(self._args.format)
        if self._args.out:
            _path(self._args.out).write_text(text)
        else:
            sys.stdout.write(text)
        if not report.is_ok():
            print(f'{PsoCli.PROG}: {report.get_command()} failed: {report.get_failure()}', file=sys.stderr)
            return PsoCli.EXIT_FAILURE
        return PsoCli.EXIT_OK

    def _fock(self):
        return self._emit(lambda: self._app.fock(self._args.rank,
                                                 self._args.order,
                                                 level=self._args.level,
                                                 weight=self._args.weight,
                                                 explore=self._args.explore))

    def _infinite(self):
        return self._emit(lambda: self._app.infinite(self._args.mode,
                                                     self._args.sign,
                                                     self._args.word,
                                                     self._args.order,
                                                     truncations=self._args.truncations))

    def _license(self):
        print(lockss.pso.__license__)

    def _make_option_debug_cli(self, container):
        container.add_argument('--debug-cli',
                               action='store_true',
                               help='print the result of parsing command line arguments')

    def _make_option_format(self, container):
        container.add_argument('--format', '-f',
                               metavar='FMT',
                               choices=PsoCli.FORMATS,
                               default='json',
                               help='set output format to %(metavar)s: json, csv or a tabular format (default: %(default)s; choices: %(choices)s)')

    def _make_option_level(self, container, help_str):
        container.add_argument('--level', '-L',
                               metavar='L',
                               type=int,
                               help=help_str)

    def _make_option_order(self, container):
        container.add_argument('--order', '-p',
                               metavar='P',
                               default='1',
                               help='set the order of the Fock module to %(metavar)s, an integer or a fraction such as 3/2 (default: %(default)s)')

    def _make_option_out(self, container):
        container.add_argument('--out', '-o',
                               metavar='PATH',
                               type=Path,
                               help='write output to %(metavar)s (default: standard output)')

    def _make_option_rank(self, container, required=True):
        container.add_argument('--rank', '-n',
                               metavar='N',
                               type=int,
                               required=required,
                               help='set the rank to %(metavar)s, for pso(2N+1|2N)')

    def _make_option_seed(self, container):
        container.add_argument('--seed',
                               metavar='SEED',
                               type=int,
                               help='seed the random triples of the axiom suite with %(metavar)s (default: from settings, otherwise 0)')

    def _make_option_settings(self, container):
        container.add_argument('--settings', '-s',
                               metavar='FILE',
                               type=Path,
                               help=f'load settings from %(metavar)s (default: {" or ".join(map(str, self._app.default_settings_files()))}, otherwise built-in defaults)')

    def _make_option_verbose(self, container):
        container.add_argument('--verbose', '-v',
                               action='count',
                               default=0,
                               help='log more to standard error (repeat for more detail)')

    def _make_option_weight(self, container):
        container.add_argument('--weight',
                               metavar='WEIGHT',
                               help="only report weight %(metavar)s, written 'i:c,...' (e.g. '-1:-1/2,1:3/2')")

    def _make_options_output(self, container):
        group = container.add_argument_group(title='output options')
        self._make_option_format(group)
        self._make_option_out(group)
        self._make_option_settings(group)

    def _make_parser(self):
        for cls in [rich_argparse.RichHelpFormatter]:
            cls.styles.update({
                'argparse.args': f'bold {cls.styles["argparse.args"]}',
                'argparse.groups': f'bold {cls.styles["argparse.groups"]}',
                'argparse.metavar': f'bold {cls.styles["argparse.metavar"]}',
                'argparse.prog': f'bold {cls.styles["argparse.prog"]}',
            })
        self._parser = argparse.ArgumentParser(prog=PsoCli.PROG,
                                               formatter_class=rich_argparse.RichHelpFormatter)
        self._subparsers = self._parser.add_subparsers(title='commands',
                                                       description="Add --help to see the command's own help message.",
                                                       # With subparsers, metavar is also used as the heading of the column of subcommands
                                                       metavar='COMMAND',
                                                       # With subparsers, help is used as the heading of the column of subcommand descriptions
                                                       help='DESCRIPTION')
        self._make_option_debug_cli(self._parser)
        self._make_option_verbose(self._parser)
        self._make_parser_algebra(self._subparsers)
        self._make_parser_copyright(self._subparsers)
        self._make_parser_fock(self._subparsers)
        self._make_parser_infinite(self._subparsers)
        self._make_parser_license(self._subparsers)
        self._make_parser_patterns(self._subparsers)
        self._make_parser_usage(self._subparsers)
        self._make_parser_verify(self._subparsers)
        self._make_parser_version(self._subparsers)

    def _make_parser_algebra(self, container):
        parser = container.add_parser('algebra',
                                      description='Dump the canonical basis, closure dimension and structure constants of pso(2n+1|2n).',
                                      help='dump basis and structure constants',
                                      formatter_class=self._parser.formatter_class)
        parser.set_defaults(fun=self._algebra)
        self._make_option_rank(parser)
        self._make_options_output(parser)

    def _make_parser_copyright(self, container):
        parser = container.add_parser('copyright',
                                      description='Show copyright and exit.',
                                      help='show copyright and exit',
                                      formatter_class=self._parser.formatter_class)
        parser.set_defaults(fun=self._copyright)

    def _make_parser_fock(self, container):
        parser = container.add_parser('fock',
                                      description='Build the Fock module level by level and certify it against the pattern basis.',
                                      help='build and certify the Fock module',
                                      formatter_class=self._parser.formatter_class)
        parser.set_defaults(fun=self._fock)
        self._make_option_rank(parser)
        self._make_option_order(parser)
        self._make_option_level(parser, 'build levels 0 to %(metavar)s (default: max-level setting, otherwise 4)')
        self._make_option_weight(parser)
        parser.add_argument('--explore',
                            action='store_true',
                            help='allow any positive rational order and skip the certification checks')
        self._make_options_output(parser)

    def _make_parser_infinite(self, container):
        parser = container.add_parser('infinite',
                                      description='Apply a generator to a word of the infinite-rank Fock module at several truncations.',
                                      help='act on the infinite-rank Fock module',
                                      formatter_class=self._parser.formatter_class)
        parser.set_defaults(fun=self._infinite)
        parser.add_argument('--mode', '-i',
                            metavar='I',
                            type=int,
                            required=True,
                            help='apply the generator of mode %(metavar)s')
        parser.add_argument('--sign',
                            choices=['+', '-', 'plus', 'minus'],
                            default='+',
                            help='apply the creation (+) or annihilation (-) generator (default: %(default)s)')
        parser.add_argument('--word',
                            metavar='MODES',
                            type=_int_list,
                            default=list(),
                            help='act on the creation word %(metavar)s, comma-separated, e.g. --word=-1,2 (default: the vacuum)')
        self._make_option_order(parser)
        parser.add_argument('--truncations',
                            metavar='RANKS',
                            type=_int_list,
                            help='compare the truncations of ranks %(metavar)s, comma-separated (default: the three smallest admissible ranks)')
        self._make_options_output(parser)

    def _make_parser_license(self, container):
        parser = container.add_parser('license',
                                      description='Show license and exit.',
                                      help='show license and exit',
                                      formatter_class=self._parser.formatter_class)
        parser.set_defaults(fun=self._license)

    def _make_parser_patterns(self, container):
        parser = container.add_parser('patterns',
                                      description='Enumerate the patterns of a top row, or count the patterns of a level per weight.',
                                      help='enumerate or count patterns',
                                      formatter_class=self._parser.formatter_class)
        parser.set_defaults(fun=self._patterns)
        parser.add_argument('--top', '-t',
                            metavar='ROW',
                            help="enumerate the patterns with top row %(metavar)s, written 'm(-n),...,m(-1);m(1),...,m(n)' (e.g. '1,0;0,0')")
        self._make_option_rank(parser, required=False)
        self._make_option_order(parser)
        self._make_option_level(parser, 'count the patterns whose top row sums to %(metavar)s')
        self._make_option_weight(parser)
        self._make_options_output(parser)

    def _make_parser_usage(self, container):
        parser = container.add_parser('usage',
                                      description='Show detailed usage and exit.',
                                      help='show detailed usage and exit',
                                      formatter_class=self._parser.formatter_class)
        parser.set_defaults(fun=self._usage)

    def _make_parser_verify(self, container):
        parser = container.add_parser('verify',
                                      description='Check the algebra axioms, the gl(n|n) relations and the four families of triple relations.',
                                      help='verify axioms and triple relations',
                                      formatter_class=self._parser.formatter_class)
        parser.set_defaults(fun=self._verify)
        self._make_option_rank(parser)
        self._make_option_seed(parser)
        parser.add_argument('--require-pass',
                            metavar='FAMILY',
                            choices=FAMILIES,
                            action='append',
                            default=list(),
                            help='also require relation family %(metavar)s to pass (choices: %(choices)s)')
        self._make_options_output(parser)

    def _make_parser_version(self, container):
        parser = container.add_parser('version',
                                      description='Show version and exit.',
                                      help='show version and exit',
                                      formatter_class=self._parser.formatter_class)
        parser.set_defaults(fun=self._version)

    def _patterns(self):
        return self._emit(lambda: self._app.patterns(top=self._args.top,
                                                     n=self._args.rank,
                                                     p=self._args.order,
                                                     level=self._args.level,
                                                     weight=self._args.weight))

    def _usage(self):
        self._parser.print_usage()
        print()
        uniq = set()
        for cmd, par in self._subparsers.choices.items():
            if par not in uniq:
                uniq.add(par)
                for s in par.format_usage().split('\n'):
                    usage = 'usage: '
                    print(f'{" " * len(usage)}{s[len(usage):]}' if s.startswith(usage) else s)

    def _verify(self):
        return self._emit(lambda: self._app.verify(self._args.rank,
                                                   seed=self._args.seed,
                                                   require_pass=self._args.require_pass))

    def _version(self):
        print(lockss.pso.__version__)

def main():
    sys.exit(PsoCli().run())
