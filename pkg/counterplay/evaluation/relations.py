"""Win-rate tables and thresholded strength relations.

A win rate inside the closed band [0.499, 0.501] means equal strength;
above it the row player is stronger, below it weaker. Pairs that never met
have an Unknown ground-truth relation and are left out of the accuracy.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Callable

import numpy as np

from counterplay.core.errors import UndefinedResultError, ValidationError
from counterplay.datasets.records import Dataset

EQUAL_LOW = 0.499
EQUAL_HIGH = 0.501


class Relation(IntEnum):
    WEAKER = -1
    EQUAL = 0
    STRONGER = 1
    UNKNOWN = 2


@dataclass
class WinRateTable:
    """wins[i, j]: score of i against j (ties count 0.5); counts[i, j]: games played."""

    wins: np.ndarray
    counts: np.ndarray

    @property
    def n_players(self) -> int:
        return self.wins.shape[0]

    def winrate(self, i: int, j: int) -> float | None:
        if self.counts[i, j] == 0:
            return None
        return float(self.wins[i, j] / self.counts[i, j])

    def rates(self) -> np.ndarray:
        """Win-rate matrix with NaN where the pair never met."""
        with np.errstate(invalid="ignore", divide="ignore"):
            return np.where(self.counts > 0, self.wins / np.maximum(self.counts, 1), np.nan)


@dataclass
class RelationMatrix:
    rel: np.ndarray

    @property
    def n_players(self) -> int:
        return self.rel.shape[0]

    def __getitem__(self, pair: tuple[int, int]) -> Relation:
        return Relation(int(self.rel[pair]))

    def is_antisymmetric(self) -> bool:
        rel = self.rel.astype(np.int64)
        known = (rel != Relation.UNKNOWN) & (rel.T != Relation.UNKNOWN)
        mirrored = np.where(known, rel == -rel.T, rel == rel.T)
        return bool(mirrored.all() and np.all(np.diag(rel) == Relation.EQUAL))


def empirical_win_rates(matches: Dataset, n_players: int | None = None) -> WinRateTable:
    n = matches.n_players if n_players is None else n_players
    wins = np.zeros((n, n))
    counts = np.zeros((n, n), dtype=np.int64)
    first, second, outcome = matches.first, matches.second, matches.outcome
    np.add.at(wins, (first, second), outcome)
    np.add.at(wins, (second, first), 1.0 - outcome)
    np.add.at(counts, (first, second), 1)
    np.add.at(counts, (second, first), 1)
    return WinRateTable(wins=wins, counts=counts)


def relation_from_winrate(w: float) -> Relation:
    if not 0.0 <= w <= 1.0:
        raise ValidationError(f"Win rate must lie in [0, 1], got {w}.")
    if w > EQUAL_HIGH:
        return Relation.STRONGER
    if w < EQUAL_LOW:
        return Relation.WEAKER
    return Relation.EQUAL


def relations_from_probabilities(probs: np.ndarray) -> RelationMatrix:
    """Vectorised `relation_from_winrate` over a square matrix; NaN entries become Unknown."""
    probs = np.asarray(probs, dtype=float)
    rel = np.full(probs.shape, Relation.EQUAL, dtype=np.int8)
    rel[probs > EQUAL_HIGH] = Relation.STRONGER
    rel[probs < EQUAL_LOW] = Relation.WEAKER
    rel[np.isnan(probs)] = Relation.UNKNOWN
    np.fill_diagonal(rel, Relation.EQUAL)
    return RelationMatrix(rel)


def ground_truth_relations(matches: Dataset, n_players: int | None = None) -> RelationMatrix:
    return relations_from_probabilities(empirical_win_rates(matches, n_players).rates())


def predicted_relations(predictor: Callable[[int, int], float], n_players: int) -> RelationMatrix:
    rel = np.full((n_players, n_players), Relation.EQUAL, dtype=np.int8)
    for i in range(n_players):
        for j in range(n_players):
            if i != j:
                rel[i, j] = relation_from_winrate(predictor(i, j))
    return RelationMatrix(rel)


def relation_accuracy(truth: RelationMatrix, predicted: RelationMatrix) -> float:
    """Percentage of known off-diagonal ordered pairs where the prediction matches."""
    if truth.rel.shape != predicted.rel.shape:
        raise ValidationError(f"Relation matrices differ in shape: {truth.rel.shape} vs {predicted.rel.shape}.")
    comparable = truth.rel != Relation.UNKNOWN
    np.fill_diagonal(comparable, False)
    total = int(comparable.sum())
    if total == 0:
        raise UndefinedResultError("No comparable player pairs: every off-diagonal ground-truth relation is Unknown.")
    hits = int((truth.rel[comparable] == predicted.rel[comparable]).sum())
    return 100.0 * hits / total
