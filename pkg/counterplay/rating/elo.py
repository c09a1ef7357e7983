"""Bradley-Terry / Elo primitives shared by every rating model.

Ratings live on the usual Elo scale (400 points per decade of strength) as raw
floats. A rating of ``r`` corresponds to a Bradley-Terry strength of
``10 ** (r / 400)``, so `expected_score` and `bt_win_prob` describe the same
model.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from counterplay.core.errors import ConfigurationError, PlayerLookupError, ValidationError

logger = logging.getLogger(__name__)

ELO_SCALE = 400.0
# Natural-log slope of the logistic curve on the Elo scale.
LOGISTIC_SCALE = math.log(10.0) / ELO_SCALE
DEFAULT_INITIAL_RATING = 1000.0
VALID_OUTCOMES = (0.0, 0.5, 1.0)


def validate_outcome(value: float) -> float:
    """Return `value` as a float if it is exactly 0, 0.5 or 1."""
    try:
        outcome = float(value)
    except (TypeError, ValueError):
        raise ValidationError(f"Outcome {value!r} is not a number.") from None
    if outcome not in VALID_OUTCOMES:
        raise ValidationError(f"Outcome {value!r} must be one of 0, 0.5 or 1.")
    return outcome


@dataclass(frozen=True)
class MatchRecord:
    """One observed game. `outcome` is the result for player `i`."""

    i: int
    j: int
    outcome: float

    def __post_init__(self):
        if self.i < 0 or self.j < 0:
            raise ValidationError(f"Player ids must be non-negative, got ({self.i}, {self.j}).")
        object.__setattr__(self, "outcome", validate_outcome(self.outcome))
        if self.i == self.j and self.outcome != 0.5:
            raise ValidationError(f"Mirror match ({self.i}, {self.j}) must have outcome 0.5.")

    @property
    def is_mirror(self) -> bool:
        return self.i == self.j


@dataclass(frozen=True)
class EloConfig:
    initial_rating: float = DEFAULT_INITIAL_RATING
    k_factor: float = 16.0

    def __post_init__(self):
        if not math.isfinite(self.initial_rating):
            raise ConfigurationError("initial_rating must be finite.")
        if not self.k_factor > 0:
            raise ConfigurationError(f"k_factor must be > 0, got {self.k_factor}.")


@dataclass
class RatingTable:
    """Dense rating table indexed by PlayerId."""

    ratings: np.ndarray

    def __post_init__(self):
        self.ratings = np.ascontiguousarray(self.ratings, dtype=float)

    @classmethod
    def init(cls, n_players: int, initial_rating: float = DEFAULT_INITIAL_RATING) -> "RatingTable":
        if n_players < 1:
            raise ConfigurationError(f"n_players must be >= 1, got {n_players}.")
        return cls(np.full(n_players, float(initial_rating)))

    def __len__(self) -> int:
        return len(self.ratings)

    def __getitem__(self, player: int) -> float:
        return float(self.ratings[check_player(player, len(self.ratings))])

    def copy(self) -> "RatingTable":
        return RatingTable(self.ratings.copy())

    def total(self) -> float:
        return float(self.ratings.sum())

    def ranked(self) -> list[tuple[int, float]]:
        """Players sorted by rating, strongest first. Ties keep id order."""
        order = np.argsort(-self.ratings, kind="stable")
        return [(int(p), float(self.ratings[p])) for p in order]


@dataclass(frozen=True)
class EloStep:
    """Result of `elo_update`: the new table plus the quantities used."""

    table: RatingTable
    expected: float
    residual: float


def check_player(player: int, n_players: int) -> int:
    if not 0 <= player < n_players:
        raise PlayerLookupError(f"Unknown player id {player} (table holds {n_players} players).")
    return int(player)


def bt_win_prob(gamma_i: float, gamma_j: float) -> float:
    """Bradley-Terry probability that a player of strength `gamma_i` beats `gamma_j`."""
    if not (gamma_i > 0 and gamma_j > 0):
        raise ValidationError(f"Strengths must be positive, got ({gamma_i}, {gamma_j}).")
    return gamma_i / (gamma_i + gamma_j)


def expected_score(r_i: float, r_j: float) -> float:
    """Elo win expectation of `r_i` against `r_j`."""
    if not (math.isfinite(r_i) and math.isfinite(r_j)):
        raise ValidationError(f"Ratings must be finite, got ({r_i}, {r_j}).")
    return 1.0 / (1.0 + 10.0 ** ((r_j - r_i) / ELO_SCALE))


def expected_score_matrix(ratings: np.ndarray) -> np.ndarray:
    """N×N matrix whose (i, j) entry is expected_score(ratings[i], ratings[j])."""
    ratings = np.asarray(ratings, dtype=float)
    diff = ratings[np.newaxis, :] - ratings[:, np.newaxis]
    return 1.0 / (1.0 + np.power(10.0, diff / ELO_SCALE))


def elo_update(ratings: RatingTable, match: MatchRecord, k: float, *, inplace: bool = False) -> EloStep:
    """Apply one Elo update for `match` with factor `k`.

    The two rating changes are equal and opposite, so the table total is
    preserved. With ``inplace=True`` the given table is modified and returned;
    otherwise a new table is returned and the input is left untouched.
    """
    if not k > 0:
        raise ConfigurationError(f"k must be > 0, got {k}.")
    n = len(ratings)
    i = check_player(match.i, n)
    j = check_player(match.j, n)

    table = ratings if inplace else ratings.copy()
    values = table.ratings
    expected = expected_score(float(values[i]), float(values[j]))
    residual = match.outcome - expected
    delta = k * residual
    # Sequential so a mirror match nets out to zero.
    values[i] += delta
    values[j] -= delta
    return EloStep(table=table, expected=expected, residual=residual)
