from counterplay.rating.base import ModelKind, ModelSpec, RatingModel, build_model
from counterplay.rating.elo import MatchRecord, RatingTable, bt_win_prob, elo_update, expected_score

__all__ = [
    "MatchRecord",
    "ModelKind",
    "ModelSpec",
    "RatingModel",
    "RatingTable",
    "bt_win_prob",
    "build_model",
    "elo_update",
    "expected_score",
]
