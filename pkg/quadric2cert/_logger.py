# -*- coding: UTF-8 -*-
#
# copyright: 2020-2022, Frederico Martins
# author: Frederico Martins <http://github.com/fscm>
# license: SPDX-License-Identifier: MIT

"""Logger module.

Diagnostics of a run (thresholds, search radii, verification outcome)
are written to standard error, since standard output carries the JSON
documents, or appended to a log file. Each record is a single line: the
level, the message and the keyword context as sorted `key=value` pairs.

    >>> from ._logger import Logger, Level
    >>> log = Logger(name='quadric2cert', level=Level.DEBUG)
    >>> log.info('solved', phi='5', nodes=12)
    [INFO    ] solved nodes=12 phi=5

Public classes:

* Level -- Verbosity levels, `NONE` silences everything.
* Logger -- Wrapper around a `logging.Logger` with keyword context.
"""

import logging
from enum import IntEnum, unique
from sys import stderr
from typing import Any, Optional

try:
    import curses
except ImportError:
    curses = None


__all__ = [
    'Level',
    'Logger']


@unique
class Level(IntEnum):
    """Verbosity levels, mapped onto the `logging` ones."""
    DEBUG: int = logging.DEBUG
    INFO: int = logging.INFO
    WARNING: int = logging.WARNING
    ERROR: int = logging.ERROR
    CRITICAL: int = logging.CRITICAL
    NONE: int = logging.CRITICAL + 10


# curses colour numbers per record level
_PALETTE: dict[int, int] = {
    logging.DEBUG: 7,
    logging.INFO: 2,
    logging.WARNING: 3,
    logging.ERROR: 1,
    logging.CRITICAL: 1}


def _terminal_has_colors() -> bool:
    """Tells whether standard error is a terminal with colours.

    Returns:
        bool: True when colour escapes can be used.
    """
    if curses is None or not (hasattr(stderr, 'isatty') and stderr.isatty()):
        return False
    try:
        curses.setupterm()
        return curses.tigetnum('colors') > 0
    except Exception:  # pylint: disable=broad-except
        return False


def _render(msg: str, context: dict[str, Any]) -> str:
    """Message followed by its sorted `key=value` context."""
    pairs = ' '.join(f'{key}={context[key]}' for key in sorted(context))
    return f'{msg} {pairs}' if pairs else msg


class _LineFormatter(logging.Formatter):
    """One line per record, `[LEVEL   ] message`, optionally coloured.

    Args:
        color (bool, optional): Colour the line when the terminal allows
            it. Defaults to True.
    """

    __slots__ = ('_escapes', '_reset')

    def __init__(self, color: Optional[bool] = True) -> None:
        super().__init__(fmt=None)
        self._escapes: dict[int, str] = {}
        self._reset = ''
        if not (color and _terminal_has_colors()):
            return
        setaf = curses.tigetstr('setaf') or curses.tigetstr('setf') or ''
        for levelno, number in _PALETTE.items():
            self._escapes[levelno] = str(curses.tparm(setaf, number), 'ascii')
        self._reset = str(curses.tigetstr('sgr0'), 'ascii')

    def formatMessage(self, record: logging.LogRecord) -> str:
        escape = self._escapes.get(record.levelno, '')
        reset = self._reset if escape else ''
        return f'{escape}[{record.levelname:<8}] {record.message}{reset}'


class Logger:
    """Named logger with keyword context.

    Args:
        name (str): Name of the underlying `logging.Logger`.
        level (Level, optional): Verbosity. Defaults to Level.INFO.
        file (str, optional): Append records to this file instead of
            standard error. Defaults to None.
        color (bool, optional): Colour records on a terminal. Never used
            with a file. Defaults to True.
    """

    __slots__ = (
        '_file',
        '_handler',
        '_level',
        '_logger',
        '_name')

    def __init__(
            self,
            name: str,
            level: Optional[Level] = Level.INFO,
            file: Optional[str] = None,
            color: Optional[bool] = True) -> None:
        self._name = name
        self._file = file
        self._level = level
        if file:
            self._handler = logging.FileHandler(filename=file, mode='a', delay=True)
        else:
            self._handler = logging.StreamHandler(stderr)
        self._handler.setFormatter(_LineFormatter(color=color and not file))
        self._logger = logging.getLogger(name)
        self._logger.setLevel(level.value)
        self._logger.addHandler(self._handler)

    @property
    def file(self) -> Optional[str]:
        """str: log file, None for standard error."""
        return self._file

    @property
    def handlers(self) -> list[logging.Handler]:
        """list[logging.Handler]: handlers of the underlying logger."""
        return self._logger.handlers

    @property
    def level(self) -> Level:
        """Level: current verbosity."""
        return self._level

    @level.setter
    def level(self, level: Level) -> None:
        self._level = level
        self._logger.setLevel(level.value)

    @property
    def name(self) -> str:
        """str: logger name."""
        return self._name

    def log(self, level: Level, msg: str, **context: Any) -> None:
        """Emits `msg` with its context at the given level.

        Args:
            level (Level): Record level.
            msg (str): Message.
            **context: Values appended as `key=value`.
        """
        if self._logger.isEnabledFor(level.value):
            self._logger.log(level.value, _render(msg, context))

    def debug(self, msg: str, **context: Any) -> None:
        """Debug record, see `log`."""
        self.log(Level.DEBUG, msg, **context)

    def info(self, msg: str, **context: Any) -> None:
        """Info record, see `log`."""
        self.log(Level.INFO, msg, **context)

    def warning(self, msg: str, **context: Any) -> None:
        """Warning record, see `log`."""
        self.log(Level.WARNING, msg, **context)

    def error(self, msg: str, **context: Any) -> None:
        """Error record, see `log`."""
        self.log(Level.ERROR, msg, **context)

    def critical(self, msg: str, **context: Any) -> None:
        """Critical record, see `log`."""
        self.log(Level.CRITICAL, msg, **context)

    def remove_handler(self, handler: logging.Handler) -> None:
        """Detaches a handler from the underlying logger.

        Args:
            handler (logging.Handler): The handler.
        """
        self._logger.removeHandler(handler)


del IntEnum, unique
