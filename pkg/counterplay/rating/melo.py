"""mElo2: Elo plus one cyclic component.

Each player carries an Elo rating and a 2-vector ``c``. The win probability is

    sigmoid(ln(10) / 400 * (r_i - r_j) + c_i^T Ω c_j),   Ω = [[0, 1], [-1, 0]]

so the rating part matches `expected_score` exactly and the pairing term is
antisymmetric in (i, j).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from counterplay.core.errors import ConfigurationError
from counterplay.rating import kernels
from counterplay.rating.elo import DEFAULT_INITIAL_RATING, LOGISTIC_SCALE, MatchRecord, check_player

OMEGA = np.array([[0.0, 1.0], [-1.0, 0.0]])
CYC_INIT_SPREAD = 0.1


@dataclass(frozen=True)
class MEloConfig:
    k: float = 16.0
    k_c: float = 0.1
    initial_rating: float = DEFAULT_INITIAL_RATING

    def __post_init__(self):
        if not self.k > 0:
            raise ConfigurationError(f"k must be > 0, got {self.k}.")
        if not self.k_c > 0:
            raise ConfigurationError(f"k_c must be > 0, got {self.k_c}.")
        if not math.isfinite(self.initial_rating):
            raise ConfigurationError("initial_rating must be finite.")


@dataclass
class MEloState:
    ratings: np.ndarray
    cyc: np.ndarray
    config: MEloConfig

    def __post_init__(self):
        self.ratings = np.ascontiguousarray(self.ratings, dtype=float)
        self.cyc = np.ascontiguousarray(self.cyc, dtype=float)

    @property
    def n_players(self) -> int:
        return len(self.ratings)

    def copy(self) -> "MEloState":
        return MEloState(self.ratings.copy(), self.cyc.copy(), self.config)


def init_melo(n_players: int, config: MEloConfig, rng: np.random.Generator) -> MEloState:
    """Fresh state; cyclic vectors drawn uniformly from [-0.1, 0.1].

    All-zero vectors are a fixed point of the cyclic update, hence the noise.
    """
    if n_players < 1:
        raise ConfigurationError(f"n_players must be >= 1, got {n_players}.")
    return MEloState(
        ratings=np.full(n_players, float(config.initial_rating)),
        cyc=rng.uniform(-CYC_INIT_SPREAD, CYC_INIT_SPREAD, size=(n_players, 2)),
        config=config,
    )


def _sigmoid(x: float) -> float:
    if x >= 0:
        return 1.0 / (1.0 + math.exp(-x))
    z = math.exp(x)
    return z / (1.0 + z)


def _logit(state: MEloState, i: int, j: int) -> float:
    c_i = state.cyc[i]
    c_j = state.cyc[j]
    pairing = c_i[0] * c_j[1] - c_i[1] * c_j[0]
    return LOGISTIC_SCALE * (state.ratings[i] - state.ratings[j]) + pairing


def melo_predict(state: MEloState, i: int, j: int) -> float:
    n = state.n_players
    return _sigmoid(float(_logit(state, check_player(i, n), check_player(j, n))))


def win_prob_matrix(state: MEloState) -> np.ndarray:
    ratings = state.ratings
    logits = LOGISTIC_SCALE * (ratings[:, np.newaxis] - ratings[np.newaxis, :])
    logits = logits + state.cyc @ OMEGA @ state.cyc.T
    # Logistic via tanh keeps exp() from overflowing on large logits.
    return 0.5 * (1.0 + np.tanh(0.5 * logits))


def observe(state: MEloState, i: int, j: int, outcome: float, k: float, k_c: float) -> float:
    """One gradient step on the match log-likelihood, in place. Returns the error.

    c_i moves by k_c·δ·Ω c_j and c_j by -k_c·δ·Ω c_i, both from the
    pre-update vectors.
    """
    n = state.n_players
    return float(
        kernels.melo_step(
            state.ratings, state.cyc, check_player(i, n), check_player(j, n), float(outcome), float(k), float(k_c)
        )
    )


def observe_all(state: MEloState, first: np.ndarray, second: np.ndarray, outcome: np.ndarray) -> None:
    """Run `observe` for every match of the columns, in order. Ids must be valid."""
    config = state.config
    kernels.melo_observe_all(
        state.ratings,
        state.cyc,
        np.ascontiguousarray(first, dtype=np.int64),
        np.ascontiguousarray(second, dtype=np.int64),
        np.ascontiguousarray(outcome, dtype=float),
        config.k,
        config.k_c,
    )


def melo_update(state: MEloState, match: MatchRecord, k: float, k_c: float) -> MEloState:
    """Apply one match to `state` in place and return it."""
    if not (k > 0 and k_c > 0):
        raise ConfigurationError(f"k and k_c must be > 0, got ({k}, {k_c}).")
    n = state.n_players
    observe(state, check_player(match.i, n), check_player(match.j, n), match.outcome, k, k_c)
    return state
