import os

from counterplay.cli.decorators import command, option, seed_option
from counterplay.core.errors import DatasetIOError
from counterplay.datasets.io import load_matches, save_folds
from counterplay.datasets.records import make_folds


class SplitCommand:
    """Assign every match of a dataset to one of k folds and save the assignment."""

    def __init__(self, ctx):
        self.ctx = ctx

    def run(self, dataset_path: str, players_path: str | None, k: int, seed: int, out: str) -> None:
        if not os.path.isfile(dataset_path):
            raise DatasetIOError(f"Dataset file not found: '{dataset_path}'.")
        dataset = load_matches(dataset_path, players_path)
        split = make_folds(dataset, k, seed)
        save_folds(split, out)
        sizes = ", ".join(str(size) for size in split.sizes())
        self.ctx.ui.success(f"{len(split)} matches split into {split.k} folds ({sizes}) in {out}")


@command(name="split", help="Create a k-fold assignment file for a match dataset.")
@option("--dataset", "dataset_path", type="path", required=True, help="Match CSV to split.")
@option("--players", "players_path", type="path", default=None, help="Roster CSV fixing the player ids.")
@option("--k", type="int", default=5, help="Number of folds.")
@seed_option()
@option("--out", type="path", required=True, help="Fold CSV to write.")
def split_command(ctx, dataset_path, players_path, k, seed, out):
    SplitCommand(ctx).run(dataset_path, players_path, k, seed, out)
