"""Options and helpers shared by the train and evaluate commands."""

import os

from counterplay.cli.decorators import option, seed_option
from counterplay.conf.runconfig import RunConfig, load_config_file
from counterplay.core import types as cptypes
from counterplay.core.errors import ConfigurationError, DatasetIOError
from counterplay.datasets.io import load_folds, load_matches
from counterplay.datasets.records import Dataset, FoldSplit, make_folds
from counterplay.datasets.synthetic import generate
from counterplay.rating.base import ModelKind


def run_config_options(f):
    """Stack the RunConfig flags on a command. Every flag defaults to None so the config file can fill it."""
    decorators = [
        option("--config", "config_path", type="path", default=None,
               help="JSON config file keyed by run-config field names (defaults to COUNTERPLAY_CONFIG)."),
        option("--model", type=cptypes.EnumChoice(ModelKind), default=None, help="Rating model."),
        option("--k", "k", type="positive", default=None, help="Elo / mElo2 rating learning rate."),
        option("--k-c", "k_c", type="positive", default=None, help="mElo2 cyclic-vector learning rate."),
        option("--m", "m", type="int", default=None, help="Elo-RCC number of counter categories."),
        option("--eta-r", "eta_r", type="positive", default=None, help="Elo-RCC rating learning rate."),
        option("--eta-t", "eta_t", type="rate", default=None, help="Elo-RCC counter-table learning rate."),
        option("--eta-c", "eta_c", type="rate", default=None, help="Elo-RCC category learning rate."),
        option("--initial-rating", "initial_rating", type="float", default=None, help="Starting rating."),
        option("--dataset", "dataset", type="path", default=None, help="Match CSV."),
        option("--players", "players_path", type="path", default=None, help="Roster CSV fixing the player ids."),
        option("--generator", default=None, help="Generate the dataset instead (rps or acg)."),
        option("--n", "n_matches", type="int", default=None, help="Matches to generate with --generator."),
        option("--epochs", type="int", default=None, help="Training passes over the data."),
        seed_option(default=None),
    ]
    for decorator in reversed(decorators):
        f = decorator(f)
    return f


def build_run_config(settings, config_path: str | None, flags: dict) -> RunConfig:
    """Resolve flags > config file > defaults. COUNTERPLAY_CONFIG names the default config file.

    The `--k` flag sets `k_factor` for Elo and `k` for mElo2, depending on the
    model the flags and file settle on.
    """
    if config_path is None:
        config_path = getattr(settings, "CONFIG", None)
    file_values = load_config_file(config_path)
    flags = dict(flags)
    k = flags.pop("k", None)
    if k is not None:
        model = flags.get("model") or file_values.get("model") or RunConfig.model
        flags["k_factor" if model == ModelKind.ELO.value else "k"] = k
    if "jobs" in flags and flags["jobs"] is None and "jobs" not in file_values:
        flags["jobs"] = settings.jobs
    return RunConfig.resolve(flags, file_values)


def split_folds_flag(folds) -> dict:
    """`--folds` takes a count or a fold file path; map it to RunConfig fields."""
    if folds is None:
        return {}
    if isinstance(folds, int):
        return {"folds": folds}
    return {"folds_path": folds}


def resolve_dataset(config: RunConfig) -> Dataset:
    if config.dataset is not None:
        if config.generator is not None:
            raise ConfigurationError("Pass either a dataset file or a generator, not both.")
        if not os.path.isfile(config.dataset):
            raise DatasetIOError(f"Dataset file not found: '{config.dataset}'.")
        return load_matches(config.dataset, config.players_path)
    return generate(config.generator, config.n_matches, config.seed)


def resolve_folds(config: RunConfig, dataset: Dataset) -> FoldSplit:
    if config.folds_path is not None:
        if not os.path.isfile(config.folds_path):
            raise DatasetIOError(f"Fold file not found: '{config.folds_path}'.")
        return load_folds(config.folds_path, n_matches=len(dataset))
    return make_folds(dataset, config.folds, config.seed)
