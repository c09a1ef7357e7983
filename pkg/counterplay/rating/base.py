"""Uniform model interface over Elo, Elo-RCC and mElo2.

The evaluation harness and the commands only talk to `RatingModel`; the
per-algorithm modules stay purely functional.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Protocol

import numpy as np

from counterplay.core.errors import ConfigurationError
from counterplay.rating import kernels, melo, rcc
from counterplay.rating.elo import (
    EloConfig,
    RatingTable,
    check_player,
    expected_score,
    expected_score_matrix,
)


class ModelKind(str, Enum):
    ELO = "elo"
    ELO_RCC = "elo-rcc"
    MELO2 = "melo2"


class RatingModel(Protocol):
    kind: ModelKind

    @property
    def n_players(self) -> int: ...

    def observe(self, i: int, j: int, outcome: float) -> None: ...

    def observe_many(self, first: np.ndarray, second: np.ndarray, outcome: np.ndarray) -> None:
        """Same as calling `observe` for each match in order. Ids must already be valid."""
        ...

    def win_prob(self, i: int, j: int) -> float: ...

    def win_prob_matrix(self) -> np.ndarray: ...

    def ratings(self) -> np.ndarray: ...


@dataclass(frozen=True)
class ModelSpec:
    """A model kind plus its hyperparameters, e.g. ModelSpec("elo-rcc", {"m": 81})."""

    kind: ModelKind
    params: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        try:
            object.__setattr__(self, "kind", ModelKind(self.kind))
        except ValueError:
            choices = ", ".join(k.value for k in ModelKind)
            raise ConfigurationError(f"Unknown model '{self.kind}'. Choose one of: {choices}.") from None
        # Build the config once so bad hyperparameters fail here, not mid-run.
        self.config()

    def config(self):
        params = dict(self.params)
        try:
            if self.kind is ModelKind.ELO:
                return EloConfig(**params)
            if self.kind is ModelKind.ELO_RCC:
                return rcc.RccConfig(**params)
            return melo.MEloConfig(**params)
        except TypeError as exc:
            raise ConfigurationError(f"Invalid parameters for model '{self.kind.value}': {exc}") from None

    @property
    def label(self) -> str:
        """Short hyperparameter tag used in report tables (the M/K column)."""
        config = self.config()
        if self.kind is ModelKind.ELO:
            return f"K={config.k_factor:g}"
        if self.kind is ModelKind.ELO_RCC:
            return f"M={config.m}"
        return f"K={config.k:g}"


class EloModel:
    kind = ModelKind.ELO

    def __init__(self, table: RatingTable, config: EloConfig):
        self.table = table
        self.config = config

    @property
    def n_players(self) -> int:
        return len(self.table)

    def observe(self, i: int, j: int, outcome: float) -> None:
        n = self.n_players
        i, j = check_player(i, n), check_player(j, n)
        kernels.elo_step(self.table.ratings, i, j, float(outcome), self.config.k_factor)

    def observe_many(self, first: np.ndarray, second: np.ndarray, outcome: np.ndarray) -> None:
        kernels.elo_observe_all(
            self.table.ratings,
            np.ascontiguousarray(first, dtype=np.int64),
            np.ascontiguousarray(second, dtype=np.int64),
            np.ascontiguousarray(outcome, dtype=float),
            self.config.k_factor,
        )

    def win_prob(self, i: int, j: int) -> float:
        n = self.n_players
        return expected_score(self.table[check_player(i, n)], self.table[check_player(j, n)])

    def win_prob_matrix(self) -> np.ndarray:
        return expected_score_matrix(self.table.ratings)

    def ratings(self) -> np.ndarray:
        return self.table.ratings


class EloRccModel:
    kind = ModelKind.ELO_RCC

    def __init__(self, state: rcc.RccState, rng: np.random.Generator):
        self.state = state
        self.rng = rng

    @property
    def n_players(self) -> int:
        return self.state.n_players

    def observe(self, i: int, j: int, outcome: float) -> None:
        rcc.observe(self.state, i, j, outcome, self.rng)

    def observe_many(self, first: np.ndarray, second: np.ndarray, outcome: np.ndarray) -> None:
        rcc.observe_all(self.state, first, second, outcome, self.rng)

    def win_prob(self, i: int, j: int) -> float:
        return rcc.predict_win_prob(self.state, i, j)

    def win_prob_matrix(self) -> np.ndarray:
        return rcc.win_prob_matrix(self.state)

    def ratings(self) -> np.ndarray:
        return self.state.ratings.ratings


class MEloModel:
    kind = ModelKind.MELO2

    def __init__(self, state: melo.MEloState):
        self.state = state

    @property
    def n_players(self) -> int:
        return self.state.n_players

    def observe(self, i: int, j: int, outcome: float) -> None:
        config = self.state.config
        melo.observe(self.state, i, j, outcome, config.k, config.k_c)

    def observe_many(self, first: np.ndarray, second: np.ndarray, outcome: np.ndarray) -> None:
        melo.observe_all(self.state, first, second, outcome)

    def win_prob(self, i: int, j: int) -> float:
        return melo.melo_predict(self.state, i, j)

    def win_prob_matrix(self) -> np.ndarray:
        return melo.win_prob_matrix(self.state)

    def ratings(self) -> np.ndarray:
        return self.state.ratings


def build_model(spec: ModelSpec, n_players: int, rng: np.random.Generator) -> RatingModel:
    """Create a fresh model for `n_players`. `rng` feeds category sampling / mElo2 init."""
    config = spec.config()
    if spec.kind is ModelKind.ELO:
        return EloModel(RatingTable.init(n_players, config.initial_rating), config)
    if spec.kind is ModelKind.ELO_RCC:
        return EloRccModel(rcc.init_state(n_players, config), rng)
    return MEloModel(melo.init_melo(n_players, config, rng))
