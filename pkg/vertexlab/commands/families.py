# The MIT License (MIT)
# Copyright © 2024 vertexlab developers

# Permission is hereby granted, free of charge, to any person obtaining a copy of this software and associated
# documentation files (the “Software”), to deal in the Software without restriction, including without limitation
# the rights to use, copy, modify, merge, publish, distribute, sublicense, and/or sell copies of the Software,
# and to permit persons to whom the Software is furnished to do so, subject to the following conditions:

# The above copyright notice and this permission notice shall be included in all copies or substantial portions of
# the Software.

# THE SOFTWARE IS PROVIDED “AS IS”, WITHOUT WARRANTY OF ANY KIND, EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO
# THE WARRANTIES OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL
# THE AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY, WHETHER IN AN ACTION
# OF CONTRACT, TORT OR OTHERWISE, ARISING FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER
# DEALINGS IN THE SOFTWARE.

import argparse

from rich import print
from rich.table import Table

import vertexlab
from vertexlab.config import Config
from vertexlab.constructions.registry import FAMILIES


class FamiliesCommand:
    """
    Executes the ``families`` command, which lists the registered curve families with the
    ambient surface, the deck motion of their quotient and the parameters each one reads.

    Example usage:
    >>> vertexlab families
    """

    @staticmethod
    def run(cli: "vertexlab.cli"):
        r"""List families."""
        table = Table(title="Curve families")
        table.add_column("NAME", style="bold white", no_wrap=True)
        table.add_column("AMBIENT")
        table.add_column("DECK")
        table.add_column("PARAMS")
        table.add_column("SUMMARY")
        for family in FAMILIES.values():
            table.add_row(family.name, family.ambient, family.deck, " ".join(family.params), family.summary)
        print(table)

    @staticmethod
    def check_config(config: "Config"):
        pass

    @staticmethod
    def add_args(parser: argparse.ArgumentParser):
        families_parser = parser.add_parser("families", help="""List the curve families.""")
        vertexlab.logging.add_args(families_parser)
