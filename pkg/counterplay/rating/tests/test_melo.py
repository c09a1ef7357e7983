import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from counterplay.core.errors import ConfigurationError, PlayerLookupError
from counterplay.rating import melo
from counterplay.rating.elo import MatchRecord, expected_score, expected_score_matrix


def state_with(ratings, cyc, **params):
    return melo.MEloState(np.array(ratings, dtype=float), np.array(cyc, dtype=float), melo.MEloConfig(**params))


def test_identical_cyclic_vectors_cancel():
    state = state_with([1000, 1000], [[0.3, -0.2], [0.3, -0.2]])
    assert melo.melo_predict(state, 0, 1) == pytest.approx(0.5)


def test_pairing_term():
    state = state_with([1000, 1000], [[1, 0], [0, 1]])
    assert melo.melo_predict(state, 0, 1) == pytest.approx(1 / (1 + math.exp(-1)))
    assert melo.melo_predict(state, 1, 0) == pytest.approx(1 / (1 + math.exp(1)))


def test_rating_part_matches_elo_scale():
    state = state_with([1400, 1000], [[0, 0], [0, 0]])
    assert melo.melo_predict(state, 0, 1) == pytest.approx(expected_score(1400, 1000))


def test_update_at_predicted_probability_changes_nothing():
    state = state_with([1000, 1000], [[0.1, 0.05], [0.1, 0.05]])
    before = state.copy()
    melo.melo_update(state, MatchRecord(0, 1, 0.5), k=16, k_c=0.1)
    np.testing.assert_allclose(state.ratings, before.ratings)
    np.testing.assert_allclose(state.cyc, before.cyc)


def test_update_with_zero_cyclic_vectors():
    state = state_with([1000, 1000], [[0, 0], [0, 0]])
    melo.melo_update(state, MatchRecord(0, 1, 1), k=16, k_c=0.1)
    assert state.ratings.tolist() == [1008.0, 992.0]
    assert not state.cyc.any()


def test_cyclic_step_raises_winner_probability():
    state = state_with([1000, 1000], [[0.05, 0.02], [-0.03, 0.04]])
    before = melo.melo_predict(state, 0, 1)
    for _ in range(5):
        melo.observe(state, 0, 1, 1.0, k=1e-9, k_c=0.5)
    # Ratings barely move, so any gain comes from the cyclic term.
    assert melo.melo_predict(state, 0, 1) > before


def test_learns_a_cycle():
    state = melo.init_melo(3, melo.MEloConfig(k=16, k_c=0.5), np.random.default_rng(1))
    rng = np.random.default_rng(2)
    beats = {(0, 2), (1, 0), (2, 1)}
    for _ in range(3000):
        i, j = rng.choice(3, size=2, replace=False).tolist()
        melo.observe(state, i, j, 1.0 if (i, j) in beats else 0.0, 16, 0.5)
    probs = melo.win_prob_matrix(state)
    for i, j in beats:
        assert probs[i, j] > 0.5


def test_init_melo_draws_small_vectors():
    state = melo.init_melo(50, melo.MEloConfig(), np.random.default_rng(0))
    assert state.cyc.shape == (50, 2)
    assert np.abs(state.cyc).max() <= melo.CYC_INIT_SPREAD
    assert state.ratings.tolist() == [1000.0] * 50
    again = melo.init_melo(50, melo.MEloConfig(), np.random.default_rng(0))
    np.testing.assert_array_equal(state.cyc, again.cyc)


@settings(max_examples=50)
@given(st.integers(0, 2**32 - 1))
def test_win_prob_matrix_matches_scalar_and_is_complementary(seed):
    rng = np.random.default_rng(seed)
    state = state_with(rng.uniform(800, 1200, size=4), rng.uniform(-1, 1, size=(4, 2)))
    probs = melo.win_prob_matrix(state)
    for i in range(4):
        for j in range(4):
            assert probs[i, j] == pytest.approx(melo.melo_predict(state, i, j), abs=1e-12)
    np.testing.assert_allclose(probs + probs.T, 1.0, atol=1e-12)


melo_matches_st = st.lists(
    st.tuples(st.integers(0, 4), st.integers(0, 4), st.sampled_from([0.0, 0.5, 1.0])),
    min_size=1,
    max_size=200,
)


@settings(max_examples=50, deadline=None)
@given(melo_matches_st, st.integers(0, 2**32 - 1))
def test_rating_total_is_conserved_after_every_update(matches, seed):
    state = melo.init_melo(5, melo.MEloConfig(k=32, k_c=0.5), np.random.default_rng(seed))
    for i, j, outcome in matches:
        if i == j:
            outcome = 0.5
        melo.melo_update(state, MatchRecord(i, j, outcome), k=32, k_c=0.5)
        assert state.ratings.sum() == pytest.approx(5000.0, abs=1e-9)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.floats(-2000, 4000), min_size=1, max_size=8))
def test_zero_cyclic_vectors_reduce_to_elo(ratings):
    state = state_with(ratings, np.zeros((len(ratings), 2)))
    np.testing.assert_allclose(melo.win_prob_matrix(state), expected_score_matrix(ratings), rtol=0, atol=1e-12)


def test_errors():
    state = state_with([1000, 1000], [[0, 0], [0, 0]])
    with pytest.raises(PlayerLookupError):
        melo.melo_update(state, MatchRecord(0, 2, 1), k=16, k_c=0.1)
    with pytest.raises(ConfigurationError):
        melo.melo_update(state, MatchRecord(0, 1, 1), k=0, k_c=0.1)
    with pytest.raises(ConfigurationError):
        melo.MEloConfig(k_c=-1)
