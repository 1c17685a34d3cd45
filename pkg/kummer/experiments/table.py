"""The module contains the table the experiments emit and its CSV output."""

import csv
import io
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import TYPE_CHECKING

from kummer.conf import settings
from kummer.experiments.exceptions import UnknownFigure

if TYPE_CHECKING:
    from pathlib import Path
    from typing import IO, Any

    from typing_extensions import Self

    from kummer.experiments.types import Cell, Row

FAILED = 'FAILED'

SKIP = 'SKIP'

MARKERS = (FAILED, SKIP)


class FigureId(Enum):
    """The class enumerates the figures the harness regenerates."""

    F1 = 'fig1'
    F2 = 'fig2'
    F3 = 'fig3'
    F4 = 'fig4'
    F5 = 'fig5'
    F6 = 'fig6'
    F7 = 'fig7'
    F8 = 'fig8'

    @classmethod
    def parse(cls: type['Self'], name: 'str | FigureId') -> 'FigureId':
        """Returns the figure designated by the name (e.g., fig1 or F1)."""

        if isinstance(name, FigureId):
            return name

        key = name.strip().lower()
        if key.startswith('f') and not key.startswith('fig'):
            key = f'fig{key[1:]}'

        try:
            return cls(key)
        except ValueError as exc:
            msg = f"Unknown figure '{name}'"
            raise UnknownFigure(msg) from exc


@dataclass
class FigureTable:
    """The class represents the data behind a figure: named columns and
    the rows conforming to them. Besides numbers, a cell may hold
    the SKIP or FAILED marker, and -inf where a precision is unbounded.
    The columns listed in labels hold one of their own labels instead.
    """

    figure_id: FigureId
    columns: tuple[str, ...]
    labels: dict[str, tuple[str, ...]] = field(default_factory=dict)
    rows: list['Row'] = field(default_factory=list)
    metadata: dict[str, 'Any'] = field(default_factory=dict)

    def add_row(self: 'Self', *values: 'Cell') -> None:
        """Appends a row, checking it against the columns."""

        if len(values) != len(self.columns):
            msg = f'expected {len(self.columns)} values, got {len(values)}'
            raise ValueError(msg)

        for name, value in zip(self.columns, values, strict=True):
            if isinstance(value, str) and value not in self.labels.get(name, MARKERS):
                msg = f"unknown label {value!r} in the column '{name}'"
                raise ValueError(msg)

            if isinstance(value, float) and (math.isnan(value) or value == math.inf):
                msg = f'{value!r} is not allowed in a table'
                raise ValueError(msg)

        self.rows.append(tuple(values))

    def column(self: 'Self', name: str) -> list['Cell']:
        """Returns the values of the column."""

        index = self.columns.index(name)
        return [row[index] for row in self.rows]

    def _format(self: 'Self', value: 'Cell') -> str:
        if isinstance(value, float):
            return format(value, settings.CSV_FLOAT_FORMAT)

        return str(value)

    def write_csv(self: 'Self', stream: 'IO[str]') -> None:
        """Writes the header and the rows to the stream."""

        writer = csv.writer(stream, lineterminator='\n')
        writer.writerow(self.columns)
        for row in self.rows:
            writer.writerow([self._format(value) for value in row])

    def to_csv(self: 'Self') -> str:
        """Returns the table as CSV text."""

        buffer = io.StringIO()
        self.write_csv(buffer)
        return buffer.getvalue()

    def save(self: 'Self', path: 'Path') -> None:
        """Writes the table to the file as UTF-8 CSV."""

        with path.open('w', encoding='utf-8', newline='') as stream:
            self.write_csv(stream)
