"""The module contains types intended for use in the experiments only."""

from collections.abc import Sequence

Cell = float | int | str

Grid = Sequence[float]

Row = tuple[Cell, ...]
