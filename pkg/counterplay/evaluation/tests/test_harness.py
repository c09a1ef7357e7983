import numpy as np
import pytest

from counterplay.core.errors import ConfigurationError
from counterplay.datasets.records import Dataset, FoldSplit, make_folds
from counterplay.datasets.synthetic import gen_rps
from counterplay.evaluation.harness import epoch_order, run_cv, train_model
from counterplay.rating.base import ModelSpec


@pytest.fixture
def ladder():
    """0 always beats 1 and 2, 1 always beats 2."""
    rows = [(0, 1, 1.0), (1, 2, 1.0), (2, 0, 0.0)] * 100
    first, second, outcome = zip(*rows)
    return Dataset(["top", "mid", "low"], first, second, outcome)


def test_epoch_order_is_a_seeded_permutation():
    order = epoch_order(50, seed=3, fold=1, epoch=0)
    assert sorted(order.tolist()) == list(range(50))
    np.testing.assert_array_equal(order, epoch_order(50, seed=3, fold=1, epoch=0))
    assert not np.array_equal(order, epoch_order(50, seed=3, fold=1, epoch=1))


def test_train_model_orders_a_transitive_ladder(ladder):
    model = train_model(ModelSpec("elo", {"k_factor": 16.0}), ladder, epochs=3, seed=0)
    ratings = model.ratings()
    assert ratings[0] > ratings[1] > ratings[2]


def test_train_model_is_deterministic():
    dataset = gen_rps(300, seed=1)
    spec = ModelSpec("elo-rcc", {"m": 3})
    a = train_model(spec, dataset, epochs=2, seed=5)
    b = train_model(spec, dataset, epochs=2, seed=5)
    np.testing.assert_array_equal(a.state.dists, b.state.dists)
    np.testing.assert_array_equal(a.state.table, b.state.table)


def test_train_model_rejects_bad_input(ladder):
    with pytest.raises(ConfigurationError):
        train_model(ModelSpec("elo"), ladder, epochs=0, seed=0)
    with pytest.raises(ConfigurationError):
        train_model(ModelSpec("elo"), ladder.subset(np.array([], dtype=np.int64)), epochs=1, seed=0)


def test_run_cv_on_transitive_ladder(ladder):
    folds = make_folds(ladder, 3, seed=0)
    report = run_cv(ladder, folds, ModelSpec("elo", {"k_factor": 16.0}), epochs=3, seed=0)
    assert report.per_fold_train == [100.0, 100.0, 100.0]
    assert report.per_fold_test == [100.0, 100.0, 100.0]
    assert report.mean_test == 100.0
    assert report.std_test == 0.0
    assert report.label == "K=16"
    assert report.meta == {"epochs": 3, "folds": 3, "seed": 0, "params": {"k_factor": 16.0}}


def test_run_cv_reports_every_fold():
    dataset = gen_rps(600, seed=2)
    folds = make_folds(dataset, 4, seed=2)
    seen = []
    report = run_cv(dataset, folds, ModelSpec("melo2"), epochs=1, seed=2, on_fold=seen.append)
    assert [r.fold for r in seen] == [0, 1, 2, 3]
    assert len(report.per_fold_test) == 4
    assert all(0.0 <= acc <= 100.0 for acc in report.per_fold_train + report.per_fold_test)


def test_run_cv_is_reproducible():
    dataset = gen_rps(600, seed=3)
    folds = make_folds(dataset, 3, seed=3)
    spec = ModelSpec("elo-rcc", {"m": 9})
    first = run_cv(dataset, folds, spec, epochs=2, seed=11)
    second = run_cv(dataset, folds, spec, epochs=2, seed=11)
    assert first.to_json() == second.to_json()


@pytest.mark.integration
def test_parallel_folds_match_sequential():
    dataset = gen_rps(600, seed=4)
    folds = make_folds(dataset, 3, seed=4)
    spec = ModelSpec("elo-rcc", {"m": 3})
    sequential = run_cv(dataset, folds, spec, epochs=2, seed=1, jobs=1)
    parallel = run_cv(dataset, folds, spec, epochs=2, seed=1, jobs=3)
    assert parallel.to_json() == sequential.to_json()


def test_run_cv_checks_split_size(ladder):
    folds = FoldSplit(k=2, assignment=np.array([0, 1, 0, 1]))
    with pytest.raises(ConfigurationError):
        run_cv(ladder, folds, ModelSpec("elo"), epochs=1, seed=0)
