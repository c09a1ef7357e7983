"""Elo Residual Counter Category (Elo-RCC) online learner.

Each match runs four steps, in order:

1. Elo update of both ratings with factor ``eta_r``.
2. Sample a counter category for each player from their distribution and move
   the counter-table cell ``t[c_i, c_j]`` toward the residual win value
   (outcome minus the pre-update expected score). ``t`` stays antisymmetric.
3. Move each player's expected residual against the opponent's sampled
   category toward the residual seen from that player's side.
4. For both players pick the category whose counter-table row is closest (L1)
   to the player's expected residuals and nudge the player's category
   distribution toward that one-hot vector.

Prediction uses the most probable category of each player:
``clamp(expected_score(r_i, r_j) + t[best_i, best_j], 0, 1)``.

The step itself runs in `counterplay.rating.kernels`.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

import numpy as np

from counterplay.core.errors import ConfigurationError, ValidationError
from counterplay.rating import kernels
from counterplay.rating.elo import (
    DEFAULT_INITIAL_RATING,
    ELO_SCALE,
    MatchRecord,
    RatingTable,
    check_player,
    expected_score_matrix,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RccConfig:
    m: int = 81
    eta_r: float = 0.1
    eta_t: float = 0.00025
    eta_c: float = 0.01
    initial_rating: float = DEFAULT_INITIAL_RATING

    def __post_init__(self):
        if int(self.m) != self.m or self.m < 1:
            raise ConfigurationError(f"m must be a positive integer, got {self.m}.")
        if not self.eta_r > 0:
            raise ConfigurationError(f"eta_r must be > 0, got {self.eta_r}.")
        # Table and residual steps must stay convex to keep entries in [-1, 1].
        if not 0 < self.eta_t <= 1:
            raise ConfigurationError(f"eta_t must be in (0, 1], got {self.eta_t}.")
        if not 0 < self.eta_c <= 1:
            raise ConfigurationError(f"eta_c must be in (0, 1], got {self.eta_c}.")
        if not math.isfinite(self.initial_rating):
            raise ConfigurationError("initial_rating must be finite.")


@dataclass
class RccState:
    """Complete Elo-RCC model state.

    ratings   (N,)   Elo points
    table     (M, M) counter table, antisymmetric with a zero diagonal
    residuals (N, M) expected residual of each player against each category
    dists     (N, M) category distribution of each player (rows on the simplex)

    `distances` (N, M) caches the L1 distance from each player's residual row
    to each counter-table row and is kept current by every update. Code that
    edits `table` or `residuals` directly must call `refresh_distances`.
    """

    ratings: RatingTable
    table: np.ndarray
    residuals: np.ndarray
    dists: np.ndarray
    config: RccConfig
    distances: np.ndarray | None = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        n, m = len(self.ratings), self.config.m
        shapes = {"table": (m, m), "residuals": (n, m), "dists": (n, m)}
        for name, shape in shapes.items():
            value = np.ascontiguousarray(getattr(self, name), dtype=float)
            if value.shape != shape:
                raise ValidationError(f"Elo-RCC '{name}' must have shape {shape}, got {value.shape}.")
            setattr(self, name, value)
        if self.distances is None:
            self.refresh_distances()

    def refresh_distances(self) -> None:
        self.distances = kernels.rcc_distances(self.table, self.residuals)

    @property
    def n_players(self) -> int:
        return len(self.ratings)

    @property
    def m(self) -> int:
        return self.config.m

    def copy(self) -> "RccState":
        return RccState(
            ratings=self.ratings.copy(),
            table=self.table.copy(),
            residuals=self.residuals.copy(),
            dists=self.dists.copy(),
            config=self.config,
            distances=self.distances.copy(),
        )


def init_state(n_players: int, config: RccConfig) -> RccState:
    if n_players < 1:
        raise ConfigurationError(f"n_players must be >= 1, got {n_players}.")
    m = config.m
    return RccState(
        ratings=RatingTable.init(n_players, config.initial_rating),
        table=np.zeros((m, m)),
        residuals=np.zeros((n_players, m)),
        dists=np.full((n_players, m), 1.0 / m),
        config=config,
        distances=np.zeros((n_players, m)),
    )


def residual_win_value(outcome: float, expected: float) -> float:
    return outcome - expected


def sample_category(state: RccState, p: int, rng: np.random.Generator) -> int:
    """Draw a category for player `p` from its distribution (inverse CDF, one uniform per draw)."""
    p = check_player(p, state.n_players)
    return int(kernels.sample_row(state.dists[p], rng.random()))


def best_category(state: RccState, p: int) -> int:
    """Most probable category of player `p`; ties go to the lowest index."""
    p = check_player(p, state.n_players)
    return int(np.argmax(state.dists[p]))


def best_categories(state: RccState) -> np.ndarray:
    return np.argmax(state.dists, axis=1)


def observe(state: RccState, i: int, j: int, outcome: float, rng: np.random.Generator) -> float:
    """Run the four Elo-RCC steps for one match in place. Returns the residual used.

    Draws two uniforms from `rng` (player i's category first), exactly as
    `observe_all` does per match.
    """
    n = state.n_players
    i = check_player(i, n)
    j = check_player(j, n)
    u = rng.random(2)
    config = state.config
    return float(
        kernels.rcc_step(
            state.ratings.ratings, state.table, state.residuals, state.dists, state.distances,
            i, j, float(outcome), u[0], u[1],
            config.eta_r, config.eta_t, config.eta_c,
        )
    )


def observe_all(
    state: RccState, first: np.ndarray, second: np.ndarray, outcome: np.ndarray, rng: np.random.Generator
) -> None:
    """Run `observe` for every match of the columns, in order. Ids must be valid."""
    first = np.ascontiguousarray(first, dtype=np.int64)
    second = np.ascontiguousarray(second, dtype=np.int64)
    outcome = np.ascontiguousarray(outcome, dtype=float)
    uniforms = rng.random((len(first), 2))
    config = state.config
    kernels.rcc_observe_all(
        state.ratings.ratings, state.table, state.residuals, state.dists, state.distances,
        first, second, outcome, uniforms,
        config.eta_r, config.eta_t, config.eta_c,
    )


def process_match(state: RccState, match: MatchRecord, rng: np.random.Generator) -> RccState:
    """Apply one match to `state` in place and return it."""
    n = state.n_players
    observe(state, check_player(match.i, n), check_player(match.j, n), match.outcome, rng)
    return state


def win_prob_matrix(state: RccState) -> np.ndarray:
    best = best_categories(state)
    combined = expected_score_matrix(state.ratings.ratings) + state.table[np.ix_(best, best)]
    return np.clip(combined, 0.0, 1.0)


def predict_win_prob(state: RccState, i: int, j: int) -> float:
    n = state.n_players
    i = check_player(i, n)
    j = check_player(j, n)
    ratings = state.ratings.ratings
    expected = 1.0 / (1.0 + 10.0 ** ((ratings[j] - ratings[i]) / ELO_SCALE))
    adjustment = state.table[best_category(state, i), best_category(state, j)]
    return float(min(1.0, max(0.0, expected + adjustment)))


def category_members(state: RccState) -> dict[int, list[int]]:
    """Players grouped by their best category. Only occupied categories appear."""
    members: dict[int, list[int]] = {}
    for player, category in enumerate(best_categories(state).tolist()):
        members.setdefault(category, []).append(player)
    return dict(sorted(members.items()))


def counter_relations(state: RccState, min_advantage: float = 0.0) -> list[tuple[int, int, float]]:
    """Category pairs (a, b) where a has a positive residual advantage over b.

    Sorted by advantage, largest first. Each unordered pair appears once.
    """
    a_idx, b_idx = np.nonzero(state.table > min_advantage)
    pairs = [(int(a), int(b), float(state.table[a, b])) for a, b in zip(a_idx, b_idx)]
    pairs.sort(key=lambda item: (-item[2], item[0], item[1]))
    return pairs
