from counterplay.evaluation.harness import run_cv, train_model
from counterplay.evaluation.relations import (
    Relation,
    RelationMatrix,
    WinRateTable,
    empirical_win_rates,
    ground_truth_relations,
    predicted_relations,
    relation_accuracy,
    relation_from_winrate,
)
from counterplay.evaluation.report import AccuracyReport

__all__ = [
    "AccuracyReport",
    "Relation",
    "RelationMatrix",
    "WinRateTable",
    "empirical_win_rates",
    "ground_truth_relations",
    "predicted_relations",
    "relation_accuracy",
    "relation_from_winrate",
    "run_cv",
    "train_model",
]
