"""
The module contains the exception classes related to
the experiment harness.
"""


class InvalidOverride(Exception):
    """
    Raised when a grid override is given to a figure that
    does not take it.
    """


class UnknownFigure(Exception):
    """Raised when an unknown figure id is requested."""
