import math
from enum import Enum
from typing import Sequence

import rich_click as click


class CounterplayType(click.ParamType):
    """Base class for counterplay custom types."""
    pass


# --- NUMBERS ---
class PositiveFloatType(CounterplayType):
    """Finite float > 0, optionally capped by `max_value` (inclusive)."""
    name = "positive_float"

    def __init__(self, max_value: float | None = None):
        self.max_value = max_value

    def convert(self, value, param, ctx):
        try:
            number = float(value)
        except (TypeError, ValueError):
            self.fail(f"'{value}' is not a number.", param, ctx)
        if not math.isfinite(number) or number <= 0:
            self.fail(f"'{value}' must be a finite number > 0.", param, ctx)
        if self.max_value is not None and number > self.max_value:
            self.fail(f"'{value}' must be <= {self.max_value:g}.", param, ctx)
        return number


class SeedType(CounterplayType):
    """Non-negative integer seed."""
    name = "seed"

    def convert(self, value, param, ctx):
        try:
            seed = int(value)
        except (TypeError, ValueError):
            self.fail(f"'{value}' is not a valid seed (expected a non-negative integer).", param, ctx)
        if seed < 0:
            self.fail(f"Seed must be >= 0, got {seed}.", param, ctx)
        return seed


# --- FOLDS: a count or a split file ---
class FoldsType(CounterplayType):
    """
    Accepts either a fold count (integer >= 2) or a path to a fold CSV.
    Returns an int or the path string.
    """
    name = "folds"

    def convert(self, value, param, ctx):
        if isinstance(value, int):
            count = value
        elif isinstance(value, str) and value.strip().isdigit():
            count = int(value)
        else:
            return str(value)
        if count < 2:
            self.fail(f"Fold count must be >= 2, got {count}.", param, ctx)
        return count


class PathType(click.Path):
    """File or directory path. Existence is checked by the command so it can report IO errors itself."""

    def __init__(self, exists: bool = False, dir_okay: bool = True, file_okay: bool = True):
        super().__init__(exists=exists, dir_okay=dir_okay, file_okay=file_okay, readable=True)


def Choice(options: Sequence[str], case_sensitive: bool = False) -> click.Choice:
    """Enum-like choice helper."""
    return click.Choice(list(options), case_sensitive=case_sensitive)


def EnumChoice(enum_cls: type[Enum], case_sensitive: bool = False) -> click.Choice:
    """Choice helper derived from a Python Enum."""
    values = [e.value for e in enum_cls]
    return click.Choice(values, case_sensitive=case_sensitive)


# --- PRACTICAL ALIASES ---
INT = click.INT
FLOAT = click.FLOAT
STRING = click.STRING
POSITIVE = PositiveFloatType()
RATE = PositiveFloatType(max_value=1.0)
SEED = SeedType()
FOLDS = FoldsType()
PATH = PathType()
