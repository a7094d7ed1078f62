"""Pinned reference values for the reproduction subcommands.

expected.json is generated by tools/gen_expected.py, which re-derives
every entry from standalone formulas (it does not call into the library's
main code paths), so `milnor repro` genuinely diffs two routes.
"""

import json
from importlib import resources


def load_expected():
    with resources.files(__package__).joinpath("expected.json").open(
            encoding="utf-8") as fh:
        return json.load(fh)
