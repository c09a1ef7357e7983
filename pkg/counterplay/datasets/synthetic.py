"""Synthetic match generators.

Rock-Paper-Scissors: three players, both strategies drawn uniformly.

Advanced Combination Game (ACG): a team is three distinct elements from
1..20 (1140 teams). Its score is the element sum and its category is
``score % 3`` (0 rock, 1 paper, 2 scissors). A team gets +60 against the
category it beats, and P(a beats b) = s_a² / (s_a² + s_b²) on the effective
scores.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from counterplay.core.errors import ConfigurationError, ValidationError
from counterplay.datasets.records import Dataset

logger = logging.getLogger(__name__)

RPS_NAMES = ["rock", "paper", "scissors"]
ROCK, PAPER, SCISSORS = 0, 1, 2

ACG_POOL = range(1, 21)
ACG_TEAM_SIZE = 3
ACG_BONUS = 60
ACG_CATEGORIES = 3


def rps_outcome(a: int, b: int) -> float:
    """Result for strategy `a` against `b`: 1 win, 0 loss, 0.5 mirror."""
    if a == b:
        return 0.5
    # Each strategy beats the one before it in rock, paper, scissors order.
    return 1.0 if (a - b) % 3 == 1 else 0.0


_RPS_OUTCOMES = np.array([[rps_outcome(a, b) for b in range(3)] for a in range(3)])


def _check_size(n_matches: int) -> None:
    if n_matches < 1:
        raise ConfigurationError(f"n_matches must be >= 1, got {n_matches}.")


def gen_rps(n_matches: int, seed: int) -> Dataset:
    _check_size(n_matches)
    rng = np.random.default_rng(seed)
    first = rng.integers(0, 3, size=n_matches)
    second = rng.integers(0, 3, size=n_matches)
    logger.debug("Generated %d RPS matches (seed=%d)", n_matches, seed)
    return Dataset(list(RPS_NAMES), first, second, _RPS_OUTCOMES[first, second])


@dataclass(frozen=True)
class AcgTeam:
    elements: tuple[int, int, int]

    def __post_init__(self):
        elements = tuple(sorted(self.elements))
        if len(set(elements)) != ACG_TEAM_SIZE or not all(e in ACG_POOL for e in elements):
            raise ValidationError(f"A team needs {ACG_TEAM_SIZE} distinct elements in 1..20, got {self.elements}.")
        object.__setattr__(self, "elements", elements)

    @property
    def score(self) -> int:
        return sum(self.elements)

    @property
    def category(self) -> int:
        return self.score % ACG_CATEGORIES

    @property
    def name(self) -> str:
        return "-".join(str(e) for e in self.elements)


def beaten_category(category: int) -> int:
    """Category that `category` receives the bonus against (0 beats 2, 1 beats 0, 2 beats 1)."""
    return (category + 2) % ACG_CATEGORIES


@lru_cache(maxsize=1)
def acg_enumerate_teams() -> tuple[AcgTeam, ...]:
    return tuple(AcgTeam(combo) for combo in itertools.combinations(ACG_POOL, ACG_TEAM_SIZE))


def acg_effective_score(team: AcgTeam, opponent_category: int) -> int:
    if opponent_category not in range(ACG_CATEGORIES):
        raise ValidationError(f"Category must be 0, 1 or 2, got {opponent_category}.")
    if opponent_category == beaten_category(team.category):
        return team.score + ACG_BONUS
    return team.score


def acg_win_prob(team_a: AcgTeam, team_b: AcgTeam) -> float:
    s_a = acg_effective_score(team_a, team_b.category) ** 2
    s_b = acg_effective_score(team_b, team_a.category) ** 2
    return s_a / (s_a + s_b)


@lru_cache(maxsize=1)
def acg_win_prob_matrix() -> np.ndarray:
    """1140×1140 matrix of acg_win_prob over the enumerated teams."""
    teams = acg_enumerate_teams()
    scores = np.array([t.score for t in teams], dtype=float)
    categories = np.array([t.category for t in teams])
    bonus_a = categories[np.newaxis, :] == (categories[:, np.newaxis] + 2) % ACG_CATEGORIES
    effective = scores[:, np.newaxis] + ACG_BONUS * bonus_a
    s_a = effective**2
    s_b = s_a.T
    matrix = s_a / (s_a + s_b)
    matrix.setflags(write=False)
    return matrix


def gen_acg(n_matches: int, seed: int) -> Dataset:
    """Uniformly sampled team pairs with outcomes drawn from acg_win_prob.

    Drawing the same team twice is a mirror match and scores 0.5.
    """
    _check_size(n_matches)
    teams = acg_enumerate_teams()
    probs = acg_win_prob_matrix()
    rng = np.random.default_rng(seed)
    first = rng.integers(0, len(teams), size=n_matches)
    second = rng.integers(0, len(teams), size=n_matches)
    draws = rng.random(n_matches)
    outcome = (draws < probs[first, second]).astype(float)
    outcome[first == second] = 0.5
    logger.debug("Generated %d ACG matches (seed=%d)", n_matches, seed)
    return Dataset([t.name for t in teams], first, second, outcome)


GENERATORS = {
    "rps": gen_rps,
    "acg": gen_acg,
}


def generate(name: str, n_matches: int, seed: int) -> Dataset:
    try:
        generator = GENERATORS[name]
    except KeyError:
        raise ConfigurationError(f"Unknown generator '{name}'. Choose one of: {', '.join(GENERATORS)}.") from None
    return generator(n_matches, seed)
