from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from counterplay.core.errors import ConfigurationError, ValidationError
from counterplay.rating.elo import VALID_OUTCOMES, MatchRecord


@dataclass
class Dataset:
    """Player roster plus match columns.

    Matches are stored column-wise (`first`, `second`, `outcome`) so training
    loops and splits stay cheap; `matches` gives the row view.
    """

    player_names: list[str]
    first: np.ndarray
    second: np.ndarray
    outcome: np.ndarray

    def __post_init__(self):
        self.first = np.asarray(self.first, dtype=np.int64)
        self.second = np.asarray(self.second, dtype=np.int64)
        self.outcome = np.asarray(self.outcome, dtype=float)
        if not (len(self.first) == len(self.second) == len(self.outcome)):
            raise ValidationError("Match columns must have the same length.")
        n = len(self.player_names)
        if len(self.first) and (
            min(self.first.min(), self.second.min()) < 0 or max(self.first.max(), self.second.max()) >= n
        ):
            raise ValidationError(f"Match ids must lie in 0..{n - 1}.")
        if len(self.outcome) and not np.isin(self.outcome, VALID_OUTCOMES).all():
            raise ValidationError("Outcomes must be 0, 0.5 or 1.")
        mirrors = self.first == self.second
        if np.any(self.outcome[mirrors] != 0.5):
            raise ValidationError("Mirror matches must have outcome 0.5.")

    @classmethod
    def from_matches(cls, player_names: list[str], matches: Iterable[MatchRecord]) -> "Dataset":
        rows = [(m.i, m.j, m.outcome) for m in matches]
        if not rows:
            return cls(list(player_names), np.empty(0), np.empty(0), np.empty(0))
        first, second, outcome = zip(*rows)
        return cls(list(player_names), np.array(first), np.array(second), np.array(outcome))

    @property
    def n_players(self) -> int:
        return len(self.player_names)

    def __len__(self) -> int:
        return len(self.outcome)

    @property
    def matches(self) -> list[MatchRecord]:
        return list(self.iter_matches())

    def iter_matches(self) -> Iterator[MatchRecord]:
        for i, j, o in zip(self.first.tolist(), self.second.tolist(), self.outcome.tolist()):
            yield MatchRecord(i, j, o)

    def subset(self, indices: np.ndarray) -> "Dataset":
        """Matches at `indices`, same roster."""
        return Dataset(self.player_names, self.first[indices], self.second[indices], self.outcome[indices])


@dataclass
class FoldSplit:
    """Fold index per match."""

    k: int
    assignment: np.ndarray

    def __post_init__(self):
        self.assignment = np.asarray(self.assignment, dtype=np.int64)
        if self.k < 2:
            raise ConfigurationError(f"Number of folds must be >= 2, got {self.k}.")
        if len(self.assignment) and (self.assignment.min() < 0 or self.assignment.max() >= self.k):
            raise ValidationError(f"Fold indices must lie in 0..{self.k - 1}.")
        sizes = self.sizes()
        empty = [f for f, size in enumerate(sizes) if size == 0]
        if empty:
            raise ConfigurationError(f"Fold(s) {empty} are empty.")

    def __len__(self) -> int:
        return len(self.assignment)

    def sizes(self) -> list[int]:
        return np.bincount(self.assignment, minlength=self.k).tolist()

    def train_indices(self, fold: int) -> np.ndarray:
        return np.flatnonzero(self.assignment != fold)

    def test_indices(self, fold: int) -> np.ndarray:
        return np.flatnonzero(self.assignment == fold)


def make_folds(dataset: Dataset, k: int, seed: int) -> FoldSplit:
    """Seeded uniform assignment of matches to `k` folds; sizes differ by at most one."""
    n = len(dataset)
    if k < 2:
        raise ConfigurationError(f"Number of folds must be >= 2, got {k}.")
    if n == 0:
        raise ConfigurationError("Cannot split an empty dataset.")
    if k > n:
        raise ConfigurationError(f"Cannot split {n} matches into {k} folds.")
    rng = np.random.default_rng(seed)
    assignment = np.empty(n, dtype=np.int64)
    assignment[rng.permutation(n)] = np.arange(n) % k
    return FoldSplit(k=k, assignment=assignment)
