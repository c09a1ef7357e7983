"""Cross-validated strength-relation accuracy.

For each fold the model is trained on the other folds for a number of epochs
(one pass over the training matches per epoch, in a fresh seeded order each
time). Train accuracy compares the model's predicted relations with the
ground truth of the training matches; test accuracy with the ground truth of
the held-out fold.

Random streams are numpy generators seeded with ``[stream, seed, fold, ...]``
so every fold is reproducible on its own and folds can run in any order or in
parallel.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable

import numpy as np

from counterplay.core.errors import ConfigurationError
from counterplay.datasets.records import Dataset, FoldSplit
from counterplay.evaluation.relations import ground_truth_relations, relation_accuracy, relations_from_probabilities
from counterplay.evaluation.report import AccuracyReport
from counterplay.rating.base import ModelSpec, RatingModel, build_model

logger = logging.getLogger(__name__)

SHUFFLE_STREAM = 1
MODEL_STREAM = 2


@dataclass(frozen=True)
class FoldResult:
    fold: int
    train_accuracy: float
    test_accuracy: float


def epoch_order(n_matches: int, seed: int, fold: int, epoch: int) -> np.ndarray:
    return np.random.default_rng([SHUFFLE_STREAM, seed, fold, epoch]).permutation(n_matches)


def train_model(spec: ModelSpec, dataset: Dataset, epochs: int, seed: int, fold: int = 0) -> RatingModel:
    """Fresh model trained online on `dataset` for `epochs` shuffled passes.

    Each pass hands the shuffled match columns to `observe_many`, which is
    equivalent to observing the matches one by one in that order.
    """
    if epochs < 1:
        raise ConfigurationError(f"epochs must be >= 1, got {epochs}.")
    if len(dataset) == 0:
        raise ConfigurationError("Training split is empty.")
    model = build_model(spec, dataset.n_players, np.random.default_rng([MODEL_STREAM, seed, fold]))
    # Dataset already guarantees every id lies in 0..n_players-1.
    for epoch in range(epochs):
        order = epoch_order(len(dataset), seed, fold, epoch)
        model.observe_many(dataset.first[order], dataset.second[order], dataset.outcome[order])
        logger.debug("fold %d: epoch %d/%d done", fold, epoch + 1, epochs)
    return model


def evaluate_fold(
    dataset: Dataset, folds: FoldSplit, spec: ModelSpec, epochs: int, seed: int, fold: int
) -> FoldResult:
    train = dataset.subset(folds.train_indices(fold))
    test = dataset.subset(folds.test_indices(fold))
    if len(train) == 0:
        raise ConfigurationError(f"Training split for fold {fold} is empty.")
    model = train_model(spec, train, epochs, seed, fold)
    predicted = relations_from_probabilities(model.win_prob_matrix())
    result = FoldResult(
        fold=fold,
        train_accuracy=relation_accuracy(ground_truth_relations(train), predicted),
        test_accuracy=relation_accuracy(ground_truth_relations(test), predicted),
    )
    logger.info(
        "fold %d: train %.2f%% test %.2f%% (%s %s)",
        fold,
        result.train_accuracy,
        result.test_accuracy,
        spec.kind.value,
        spec.label,
    )
    return result


def _evaluate_fold_args(args: tuple) -> FoldResult:
    return evaluate_fold(*args)


def run_cv(
    dataset: Dataset,
    folds: FoldSplit,
    spec: ModelSpec,
    epochs: int,
    seed: int,
    jobs: int = 1,
    on_fold: Callable[[FoldResult], None] | None = None,
) -> AccuracyReport:
    """Run k-fold cross-validation and aggregate per-fold accuracies.

    With ``jobs > 1`` folds run in a process pool; the report is identical
    to a sequential run.
    """
    if len(folds) != len(dataset):
        raise ConfigurationError(f"Fold split covers {len(folds)} matches but the dataset has {len(dataset)}.")
    if epochs < 1:
        raise ConfigurationError(f"epochs must be >= 1, got {epochs}.")
    tasks = [(dataset, folds, spec, epochs, seed, fold) for fold in range(folds.k)]

    results: list[FoldResult] = []
    if jobs > 1 and folds.k > 1:
        with ProcessPoolExecutor(max_workers=min(jobs, folds.k)) as pool:
            for result in pool.map(_evaluate_fold_args, tasks):
                results.append(result)
                if on_fold is not None:
                    on_fold(result)
    else:
        for task in tasks:
            result = evaluate_fold(*task)
            results.append(result)
            if on_fold is not None:
                on_fold(result)

    return AccuracyReport(
        per_fold_train=[r.train_accuracy for r in results],
        per_fold_test=[r.test_accuracy for r in results],
        model=spec.kind.value,
        label=spec.label,
        meta={"epochs": epochs, "folds": folds.k, "seed": seed, "params": dict(sorted(spec.params.items()))},
    )
