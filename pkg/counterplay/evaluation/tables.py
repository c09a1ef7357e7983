"""Reproduction of the accuracy tables for the models implemented here.

Table ``t1`` compares Elo (K=16), mElo2, Elo with a small K (0.1) and
Elo-RCC with 81 categories; table ``t2`` runs Elo-RCC with 3, 9 and 27
categories. Rows cover the generated Rock-Paper-Scissors and Advanced
Combination datasets plus any external datasets whose files are supplied.
"""

from __future__ import annotations

import logging
import os
import re
from dataclasses import dataclass
from typing import Callable

from counterplay.core.errors import ConfigurationError
from counterplay.datasets.io import load_folds, load_matches
from counterplay.datasets.records import Dataset, FoldSplit, make_folds
from counterplay.datasets.synthetic import generate
from counterplay.evaluation.harness import run_cv
from counterplay.evaluation.report import AccuracyReport, reports_to_csv, write_text
from counterplay.rating.base import ModelSpec

logger = logging.getLogger(__name__)

ELO_SMALL_K = 0.1

TABLES: dict[str, list[ModelSpec]] = {
    "t1": [
        ModelSpec("elo", {"k_factor": 16.0}),
        ModelSpec("melo2", {"k": 16.0, "k_c": 0.1}),
        ModelSpec("elo", {"k_factor": ELO_SMALL_K}),
        ModelSpec("elo-rcc", {"m": 81}),
    ],
    "t2": [ModelSpec("elo-rcc", {"m": m}) for m in (3, 9, 27)],
}

SYNTHETIC_DATASETS = ("rps", "acg")
EXTERNAL_DATASETS = ("aoe2", "hearthstone")


@dataclass
class DatasetSource:
    name: str
    dataset: Dataset
    folds: FoldSplit


def synthetic_sources(n_matches: int, seed: int, k: int) -> list[DatasetSource]:
    sources = []
    for name in SYNTHETIC_DATASETS:
        dataset = generate(name, n_matches, seed)
        sources.append(DatasetSource(name, dataset, make_folds(dataset, k, seed)))
    return sources


def external_source(name: str, matches_path: str, folds_path: str | None, k: int, seed: int) -> DatasetSource:
    dataset = load_matches(matches_path)
    if folds_path is not None:
        folds = load_folds(folds_path, n_matches=len(dataset))
    else:
        folds = make_folds(dataset, k, seed)
    return DatasetSource(name, dataset, folds)


def table_models(table: str) -> list[ModelSpec]:
    try:
        return TABLES[table]
    except KeyError:
        raise ConfigurationError(f"Unknown table '{table}'. Choose one of: {', '.join(TABLES)}.") from None


def _cell_filename(table: str, report: AccuracyReport) -> str:
    slug = re.sub(r"[^A-Za-z0-9.]+", "_", f"{table}_{report.dataset}_{report.model}_{report.label}")
    return f"{slug.strip('_')}.json"


def reproduce_table(
    table: str,
    sources: list[DatasetSource],
    epochs: int,
    seed: int,
    out_dir: str,
    jobs: int = 1,
    on_cell: Callable[[AccuracyReport], None] | None = None,
) -> tuple[list[AccuracyReport], str]:
    """Evaluate every (dataset, model) cell of `table` and write `<out_dir>/<table>.csv`.

    Each cell's full report is also written as JSON next to the table.
    Returns the reports and the CSV path.
    """
    models = table_models(table)
    os.makedirs(out_dir, exist_ok=True)
    reports: list[AccuracyReport] = []
    for source in sources:
        for spec in models:
            logger.info("%s: %s %s on %s", table, spec.kind.value, spec.label, source.name)
            report = run_cv(source.dataset, source.folds, spec, epochs, seed, jobs=jobs)
            report.dataset = source.name
            write_text(os.path.join(out_dir, _cell_filename(table, report)), report.to_json())
            reports.append(report)
            if on_cell is not None:
                on_cell(report)
    csv_path = os.path.join(out_dir, f"{table}.csv")
    write_text(csv_path, reports_to_csv(reports))
    return reports, csv_path
