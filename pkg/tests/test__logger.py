# -*- coding: UTF-8 -*-
#
# copyright: 2020-2022, Frederico Martins
# author: Frederico Martins <http://github.com/fscm>
# license: SPDX-License-Identifier: MIT

"""Tests for the Logger module."""

import logging
import pytest
from . import __project__

MODULE = '_logger'
logger = __import__('{0}.{1}'.format(__project__, MODULE), fromlist=[''])


@pytest.fixture
def make_logger():
    """Builds loggers and detaches their handlers afterwards."""
    built = []

    def _make(**kwargs):
        kwargs.setdefault('name', __project__)
        instance = logger.Logger(**kwargs)
        built.append(instance)
        return instance

    yield _make
    for instance in built:
        for handler in instance.handlers[:]:
            handler.close()
            instance.remove_handler(handler)


def _fake_fail_setupterm() -> None:
    """Simulates a terminal that cannot be initialised.

    Raises:
        Exception: Always.
    """
    raise Exception('no terminal')


def test__logger_ok_default(make_logger):
    """test__logger_ok_default

    Test the default verbosity and destination.
    """
    l = make_logger()
    assert l.level == logger.Level.INFO
    assert l.file is None
    assert l.name == __project__


def test__logger_ok_file_properties(make_logger, tmp_path):
    """test__logger_ok_file_properties

    Test the properties of a file logger.

    Args:
        tmp_path (pathlib.Path): Temporary directory.
    """
    file_name = str(tmp_path / 'run.log')
    l = make_logger(level=logger.Level.DEBUG, file=file_name, color=False)
    assert l.file == file_name
    assert l.level == logger.Level.DEBUG
    assert isinstance(l.handlers[-1], logging.FileHandler)


def test__logger_ok_level_setter(make_logger, caplog):
    """test__logger_ok_level_setter

    Test that lowering the verbosity drops records.

    Args:
        caplog (_pytest.logging.LogCaptureFixture): Log capture.
    """
    caplog.set_level(logging.DEBUG)
    l = make_logger(level=logger.Level.DEBUG)
    l.level = logger.Level.WARNING
    caplog.clear()
    l.info('dropped')
    l.warning('kept')
    assert l.level == logger.Level.WARNING
    assert [record.message for record in caplog.records] == ['kept']


@pytest.mark.parametrize('attribute', ['name', 'file'])
def test__logger_fail_read_only(make_logger, attribute):
    """test__logger_fail_read_only

    Test that name and file cannot be reassigned.

    Args:
        attribute (str): Property name.
    """
    l = make_logger()
    with pytest.raises(AttributeError):
        setattr(l, attribute, 'other')


def test__logger_ok_levels(make_logger, caplog):
    """test__logger_ok_levels

    Test that every level method emits a record at its level.

    Args:
        caplog (_pytest.logging.LogCaptureFixture): Log capture.
    """
    caplog.set_level(logging.DEBUG)
    l = make_logger(level=logger.Level.DEBUG, color=False)
    caplog.clear()
    for method in ('debug', 'info', 'warning', 'error', 'critical'):
        getattr(l, method)(method)
    assert [(record.levelname.lower(), record.message) for record in caplog.records] == [
        (method, method) for method in ('debug', 'info', 'warning', 'error', 'critical')]


def test__logger_ok_context(make_logger, caplog):
    """test__logger_ok_context

    Test that the keyword context is appended as sorted pairs.

    Args:
        caplog (_pytest.logging.LogCaptureFixture): Log capture.
    """
    caplog.set_level(logging.DEBUG)
    l = make_logger(level=logger.Level.DEBUG, color=False)
    caplog.clear()
    l.info('solved', phi='5', nodes=12)
    l.log(logger.Level.ERROR, 'rejected')
    assert [record.message for record in caplog.records] == [
        'solved nodes=12 phi=5', 'rejected']


def test__logger_ok_none_level(make_logger, caplog):
    """test__logger_ok_none_level

    Test that the NONE level silences every record.

    Args:
        caplog (_pytest.logging.LogCaptureFixture): Log capture.
    """
    l = make_logger(level=logger.Level.NONE, color=False)
    caplog.clear()
    l.critical('silenced')
    assert not caplog.records


def test__logger_ok_file_output(make_logger, tmp_path):
    """test__logger_ok_file_output

    Test the line written to a log file.

    Args:
        tmp_path (pathlib.Path): Temporary directory.
    """
    file_name = tmp_path / 'run.log'
    l = make_logger(name=f'{__project__}.file', file=str(file_name))
    l.warning('budget', T='10')
    for handler in l.handlers:
        handler.flush()
    assert file_name.read_text(encoding='utf-8') == '[WARNING ] budget T=10\n'


@pytest.mark.parametrize('isatty,setupterm,expected', [
    (True, None, True),
    (True, _fake_fail_setupterm, False),
    (False, None, False)])
def test__logger__terminal_has_colors(mocker, isatty, setupterm, expected):
    """test__logger__terminal_has_colors

    Test the colour detection of standard error.

    Args:
        mocker (pytest_mock.plugin.MockerFixture): Mocker.
        isatty (bool): Whether standard error is a terminal.
        setupterm (Callable, optional): Replacement of `setupterm`.
        expected (bool): Expected answer.
    """
    if logger.curses is None:
        pytest.skip('curses is not available')
    mocker.patch(f'{__project__}.{MODULE}.stderr.isatty', return_value=isatty)
    if setupterm is None:
        mocker.patch(f'{__project__}.{MODULE}.curses.setupterm', return_value=None)
    else:
        mocker.patch(f'{__project__}.{MODULE}.curses.setupterm', new=setupterm)
    mocker.patch(f'{__project__}.{MODULE}.curses.tigetnum', return_value=256)
    assert logger._terminal_has_colors() is expected  # pylint: disable=protected-access
