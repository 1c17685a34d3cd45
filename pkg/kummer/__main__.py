"""Invokes the command line when Kummer is run as python -m kummer."""

from kummer.cli import main

main()
