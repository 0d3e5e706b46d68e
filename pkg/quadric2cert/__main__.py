# -*- coding: UTF-8 -*-
#
# copyright: 2020-2022, Frederico Martins
# author: Frederico Martins <http://github.com/fscm>
# license: SPDX-License-Identifier: MIT

"""quadric2cert

This module runs the subcommands of the tool and maps its errors to exit
codes.
"""

import sys
from typing import Any
from progress.bar import Bar
from . import (
    __author__,
    __license__,
    __project__,
    __version__,
    DEFAULT_DELTA,
    EXIT_BUDGET,
    EXIT_NO_SOLUTION,
    EXIT_OK,
    EXIT_PARSE,
    EXIT_REJECTED,
    EXIT_UNDECIDABLE)
from ._dirichlet import (
    Approximator,
    BudgetBelowThreshold,
    DirichletException,
    NoSolutionExists,
    Profile,
    Settings,
    TwistError)
from ._exactnum import Quadric2CertException, UndecidableComparison
from ._instance import (
    InstanceException,
    load_certificate,
    load_corpus,
    load_instance,
    read_json,
    write_json)
from ._logger import Level, Logger
from ._options import Options
from ._witt import extended_index, rational_points, witt_index
from ._xlsx import Xlsx


def _settings(options: dict[str, Any]) -> Settings:
    return Settings(
        max_bits=options['max_bits'],
        threads=options['threads'],
        delta=DEFAULT_DELTA,
        best=options.get('best', False),
        profile=Profile(options.get('profile', 'adelic')))


def _bench(approximator: Approximator, options: dict[str, Any], logger: Logger) -> int:
    corpus = load_corpus(read_json(options['input']))
    rows = []
    for instance in Bar('Solving   ').iter(corpus):
        row = {'name': instance.name, 'dim': instance.dim}
        try:
            row.update(approximator.solve(instance).summary())
        except DirichletException as error:
            logger.warning('bench instance failed', name=instance.name, error=error)
            row['error'] = str(error)
        rows.append(row)
    write_json(rows, options['output'])
    xlsx = Xlsx(
        author=__project__,
        comments=f'Created with {__project__} version {__version__}',
        logger=logger)
    xlsx.save_csv(rows, f'{options["prefix"]}.csv')
    xlsx.save_bench(rows, f'{options["prefix"]}.xlsx')
    return EXIT_OK


def run(options: dict[str, Any], logger: Logger) -> int:
    """Run one subcommand.

    Args:
        options (dict): Parsed command-line options.
        logger (Logger): Logger to use.

    Returns:
        int: the exit status.
    """
    approximator = Approximator(_settings(options), logger)
    command = options['command']
    if command == 'bench':
        return _bench(approximator, options, logger)
    instance = load_instance(read_json(options['input']))
    if command == 'approximate':
        certificate = approximator.solve(instance)
        write_json(certificate.to_json(), options['output'])
        return EXIT_OK if certificate.accepted else EXIT_REJECTED
    if command == 'witt':
        report = witt_index(instance.q)
        write_json(
            {**report.to_json(), 'extended_index': extended_index(report), 'verified': report.verify()},
            options['output'])
        return EXIT_OK
    if command == 'heights':
        heights = approximator.heights(instance)
        write_json({key: value.describe() for key, value in heights.items()}, options['output'])
        return EXIT_OK
    if command == 'gen-points':
        points = rational_points(
            instance.q, options['points'], options['seed'], options['height'])
        write_json([point.to_json() for point in points], options['output'])
        return EXIT_OK
    record = load_certificate(read_json(options['certificate']))
    report = approximator.verify(instance, record.upsilon, record.phi, record.parameters)
    write_json(report.to_json(), options['output'])
    if report.accepted:
        return EXIT_OK
    return EXIT_UNDECIDABLE if report.undecidable else EXIT_REJECTED


def main() -> int:
    """main method"""
    options = Options(name=__project__, version=__version__)
    logger = Logger(
        name=__project__,
        file=options.all['log_file'],
        **({'level': Level.NONE} if options.all['quiet'] else (
            {'level': Level.DEBUG} if options.all['debug'] else {})))
    logger.debug(
        f'{__project__} version {__version__} by {__author__} under {__license__} license')
    logger.debug('options', **{key: value for key, value in options.all.items() if value is not None})
    try:
        return run(options.all, logger)
    except NoSolutionExists as error:
        logger.error(str(error))
        return EXIT_NO_SOLUTION
    except BudgetBelowThreshold as error:
        logger.error(str(error))
        return EXIT_BUDGET
    except (InstanceException, TwistError) as error:
        logger.error(str(error))
        return EXIT_PARSE
    except UndecidableComparison as error:
        logger.error(str(error))
        return EXIT_UNDECIDABLE
    except Quadric2CertException as error:
        logger.error(str(error))
        logger.debug(repr(error))
        return EXIT_NO_SOLUTION


if __name__ == '__main__':
    sys.exit(main())
