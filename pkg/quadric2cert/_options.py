# -*- coding: UTF-8 -*-
#
# copyright: 2020-2022, Frederico Martins
# author: Frederico Martins <http://github.com/fscm>
# license: SPDX-License-Identifier: MIT

"""Command-line parsing module.

This module is based on the `argparse` command-line parsing library.

The following is a simple usage example::

    >>> from ._options import Options
    >>> o = Options(name='my_prog', version='1.0.0')
    >>> for opt in o.all:
    ...     print(opt, o.all[opt], type(o.all[opt]))

The module contains the following public classes:
    - Options -- The main entry point for command-line parsing. As the
        example above shows, the Options() class is used to parse the
        arguments.

All other classes in this module are considered implementation details.
"""

from argparse import (
    Action,
    ArgumentDefaultsHelpFormatter,
    ArgumentParser,
    ArgumentTypeError,
    Namespace)
from os import environ
from typing import Any, Optional
from . import (
    DEFAULT_HEIGHT,
    DEFAULT_MAX_BITS,
    DEFAULT_OUTPUT,
    DEFAULT_POINTS,
    DEFAULT_SEED,
    DEFAULT_THREADS)


__all__ = ['Options']


COMMANDS = ('approximate', 'witt', 'heights', 'gen-points', 'verify', 'bench')


class _EnvDefault(Action):
    """Environment values action.

    This class extends `argparse.Action` to define the argument values
    from the Environment.

    Args:
        env_var (str): Name of the environment variable.
        required (bool, optional): If the argument is required. Defaults
            to False.
        default (Any, optional): Default argument value. Defaults to
            `None`.
        **kwargs: Arbitrary keyword arguments.
    """

    def __init__(
            self,
            env_var: str,
            required: Optional[bool] = False,
            default: Optional[Any] = None,
            **kwargs) -> None:
        if not env_var:
            raise ValueError('env_var is required for environment actions')
        default = environ.get(env_var, default)
        if required and default:
            required = False
        super().__init__(default=default, required=required, **kwargs)

    def __call__(
            self,
            parser: ArgumentParser,
            namespace: Namespace,
            values: list[str],
            option_string: Optional[str] = None) -> None:
        setattr(namespace, self.dest, values)  # pragma: no cover


def _positive(value: str) -> int:
    """Positive integer argument type."""
    try:
        number = int(value)
    except ValueError as error:
        raise ArgumentTypeError(f'not an integer: {value!r}') from error
    if number < 1:
        raise ArgumentTypeError(f'must be positive: {value!r}')
    return number


class Options:
    """Command-line options parser.

    Args:
        name (str): The program name.
        version (str): The version.
        parser (ArgumentParser, optional): Parser to be used instead of
            a new one. Defaults to `None`.

    This class uses the `argparse.ArgumentParser` to parse and validate
    the command-line options. Every subcommand reads its input from
    `--input` and writes JSON to `--output` (`-` is the standard stream).
    """

    __slots__ = ('_all',)

    def __init__(
            self,
            name: str,
            version: str,
            parser: ArgumentParser = None) -> None:
        if parser is None:
            parser = ArgumentParser(
                prog=name,
                formatter_class=ArgumentDefaultsHelpFormatter,
                add_help=True,
                allow_abbrev=False)
        parser.register('action', 'environment', _EnvDefault)
        mutually_exclusive = \
            parser.add_mutually_exclusive_group(required=False)
        mutually_exclusive.add_argument(
            '--debug',
            action='store_true',
            help='debug mode')
        mutually_exclusive.add_argument(
            '-q',
            '--quiet',
            action='store_true',
            help='quiet mode')
        parser.add_argument(
            '--log-file',
            action='store',
            nargs='?',
            default=None,
            type=str,
            help='log file (standard error when omitted)')
        parser.add_argument(
            '-v',
            '--version',
            action='version',
            version=version)
        common = ArgumentParser(add_help=False, allow_abbrev=False)
        common.register('action', 'environment', _EnvDefault)
        common.add_argument(
            '-i',
            '--input',
            action='store',
            default=DEFAULT_OUTPUT,
            type=str,
            help='input JSON file (- for standard input)')
        common.add_argument(
            '-o',
            '--output',
            action='store',
            default=DEFAULT_OUTPUT,
            type=str,
            help='output JSON file (- for standard output)')
        common.add_argument(
            '--max-bits',
            action='environment',
            env_var='QUADRIC2CERT_MAX_BITS',
            default=DEFAULT_MAX_BITS,
            type=_positive,
            help=(
                'precision cap of certified comparisons (can also be set '
                'using the QUADRIC2CERT_MAX_BITS environment variable)'))
        common.add_argument(
            '--threads',
            action='environment',
            env_var='QUADRIC2CERT_THREADS',
            default=DEFAULT_THREADS,
            type=_positive,
            help=(
                'enumeration worker threads (can also be set using the '
                'QUADRIC2CERT_THREADS environment variable)'))
        solver = ArgumentParser(add_help=False, allow_abbrev=False)
        solver.add_argument(
            '--best',
            action='store_true',
            help='minimise |q(alpha phi - upsilon)| instead of the twisted norm')
        solver.add_argument(
            '--profile',
            action='store',
            default='adelic',
            choices=['adelic', 'euclidean'],
            help='constants used by the thresholds')
        commands = parser.add_subparsers(dest='command', metavar='command')
        commands.required = True
        for command, parents, text in (
                ('approximate', [common, solver], 'solve an instance and print its certificate'),
                ('witt', [common], 'print the Witt decomposition of q'),
                ('heights', [common], 'print H(E), H(q), H(1,q) and the first minimum of E'),
                ('gen-points', [common], 'print rational points of q = 1'),
                ('verify', [common], 're-check a certificate against its instance'),
                ('bench', [common, solver], 'solve a corpus and tabulate the bounds')):
            subparser = commands.add_parser(
                command,
                parents=parents,
                formatter_class=ArgumentDefaultsHelpFormatter,
                allow_abbrev=False,
                help=text)
            if command == 'gen-points':
                subparser.add_argument(
                    '--seed',
                    action='store',
                    default=DEFAULT_SEED,
                    type=int,
                    help='seed of the parameter sampler')
                subparser.add_argument(
                    '--points',
                    action='store',
                    default=DEFAULT_POINTS,
                    type=_positive,
                    help='number of points')
                subparser.add_argument(
                    '--height',
                    action='store',
                    default=DEFAULT_HEIGHT,
                    type=_positive,
                    help='largest parameter coordinate')
            elif command == 'verify':
                subparser.add_argument(
                    '-c',
                    '--certificate',
                    action='store',
                    required=True,
                    type=str,
                    help='certificate JSON file')
            elif command == 'bench':
                subparser.add_argument(
                    '--prefix',
                    action='store',
                    default='bench',
                    type=str,
                    help='prefix of the CSV and xlsx tables')
        self._all = vars(parser.parse_args())

    @property
    def all(self) -> dict[str, Any]:
        """Dict: all options."""
        return self._all
