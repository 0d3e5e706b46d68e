# -*- coding: UTF-8 -*-
#
# copyright: 2020-2022, Frederico Martins
# author: Frederico Martins <http://github.com/fscm>
# license: SPDX-License-Identifier: MIT

"""Bench tables writer.

This module writes the rows of a bench run into an xlsx workbook and a
CSV file.

The following is a simple usage example::

  >>> from ._xlsx import Xlsx
  >>> x = Xlsx()
  >>> x.save_bench([], 'bench.xlsx')
  >>> x.save_csv([], 'bench.csv')

The module contains the following public classes:
  - Xlsx -- The main entry point. As the example above shows, the
    Xlsx() class can be used to save bench rows to xlsx and CSV files.

All other classes in this module are considered implementation details.
"""

from csv import DictWriter
from datetime import datetime
from typing import Any, Final, Optional, Sequence, TypeVar
import xlsxwriter


__all__ = [
    'BENCH_COLUMNS',
    'Xlsx']


Logger = TypeVar('Logger')

BENCH_COLUMNS: Final[tuple[str, ...]] = (
    'name',
    'dim',
    'threshold',
    'T',
    'phi',
    'bound',
    'observed',
    'ratio',
    'accepted',
    'error')

_HEADERS: Final[dict[str, str]] = {
    'name': 'Instance',
    'dim': 'Dimension',
    'threshold': 'Threshold',
    'T': 'Budget T',
    'phi': 'phi',
    'bound': 'Proven Bound',
    'observed': 'Observed |q(alpha phi - upsilon)| / phi',
    'ratio': 'Ratio',
    'accepted': 'Accepted',
    'error': 'Error'}


class Xlsx:
    """Bench tables writer.

    Args:
      author (str, optional): The document author. Defaults to None.
      comments (str, optional): Document comments. Defaults to None.
      logger (_logger.Logger, optional): Logger to use. Defaults to
        None.
    """

    __slots__ = (
        '_author',
        '_comments',
        '_logger')

    def __init__(
            self,
            author: Optional[str] = None,
            comments: Optional[str] = None,
            logger: Optional[Logger] = None) -> None:
        self._author = author
        self._comments = comments
        self._logger = logger

    def _populate_worksheet(
            self,
            workbook: xlsxwriter.workbook.Workbook,
            worksheet: xlsxwriter.worksheet.Worksheet,
            rows: Sequence[dict[str, Any]]) -> None:
        """Populates a worksheet with the bench rows.

        Args:
          workbook (xlsxwriter.workbook.Workbook): Workbook to which
            the worksheet belongs to.
          worksheet (xlsxwriter.worksheet.Worksheet): Worksheet to
            write into.
          rows (Sequence[dict]): rows to populate the worksheet with.
        """
        worksheet_format_bold = workbook.add_format({'bold': True})
        worksheet_format_default = workbook.add_format(
            {'align': 'left', 'valign': 'vcenter'})
        worksheet_format_ratio = workbook.add_format(
            {'num_format': '0.000000', 'align': 'left', 'valign': 'vcenter'})
        worksheet.set_row(0, 25)
        worksheet.write_row(
            0, 0, [_HEADERS[column] for column in BENCH_COLUMNS], worksheet_format_bold)
        worksheet.freeze_panes(1, 0)
        for worksheet_row, row in enumerate(rows, start=1):
            worksheet.set_row(worksheet_row, 25)
            for column, key in enumerate(BENCH_COLUMNS):
                value = row.get(key)
                if value is None:
                    continue
                if isinstance(value, bool):
                    worksheet.write_boolean(
                        worksheet_row, column, value, worksheet_format_default)
                elif isinstance(value, (int, float)):
                    worksheet.write_number(
                        worksheet_row,
                        column,
                        value,
                        worksheet_format_ratio if key == 'ratio' else worksheet_format_default)
                else:
                    worksheet.write_string(
                        worksheet_row, column, str(value), worksheet_format_default)

    def save_bench(self, rows: Sequence[dict[str, Any]], to_file: str) -> None:
        """Writes the bench rows to an xlsx workbook.

        Args:
          rows (Sequence[dict]): bench rows.
          to_file (str): file to write to.
        """
        if self._logger:
            self._logger.info('saving workbook', file=to_file, rows=len(rows))
        workbook = xlsxwriter.Workbook(to_file, {'constant_memory': True})
        workbook.set_properties({
            'title': 'Approximation Bench',
            'subject': 'observed against proven approximation bounds',
            'author': self._author,
            'created': datetime.utcnow().replace(microsecond=0),
            'comments': self._comments})
        worksheet = workbook.add_worksheet('bench')
        self._populate_worksheet(workbook, worksheet, rows)
        workbook.close()

    def save_csv(self, rows: Sequence[dict[str, Any]], to_file: str) -> None:
        """Writes the bench rows to a CSV file.

        Args:
          rows (Sequence[dict]): bench rows.
          to_file (str): file to write to.
        """
        if self._logger:
            self._logger.info('saving csv', file=to_file, rows=len(rows))
        with open(to_file, 'w', newline='', encoding='utf-8') as handle:
            writer = DictWriter(handle, fieldnames=BENCH_COLUMNS, extrasaction='ignore')
            writer.writeheader()
            for row in rows:
                writer.writerow({key: row.get(key) for key in BENCH_COLUMNS})
