"""
The package contains the harness regenerating the data behind
the precision, efficiency and overflow studies as CSV tables.
"""

__all__ = (
    'FIGURES',
    'FigureId',
    'FigureTable',
    'build_figure',
)

from kummer.experiments.figures import FIGURES, build_figure
from kummer.experiments.table import FigureId, FigureTable
