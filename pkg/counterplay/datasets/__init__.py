from counterplay.datasets.io import load_folds, load_matches, save_folds, save_matches
from counterplay.datasets.records import Dataset, FoldSplit, make_folds
from counterplay.datasets.synthetic import gen_acg, gen_rps, generate

__all__ = [
    "Dataset",
    "FoldSplit",
    "gen_acg",
    "gen_rps",
    "generate",
    "load_folds",
    "load_matches",
    "make_folds",
    "save_folds",
    "save_matches",
]
