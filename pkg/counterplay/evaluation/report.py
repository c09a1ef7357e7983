from __future__ import annotations

import io
import json
import os
from dataclasses import dataclass, field
from typing import Any

import numpy as np
import pandas as pd

from counterplay.core.errors import DatasetIOError

REPORT_COLUMNS = ["dataset", "model", "M/K", "train_mean", "train_std", "test_mean", "test_std"]


@dataclass
class AccuracyReport:
    """Per-fold accuracies (percent) with population mean/std across folds."""

    per_fold_train: list[float]
    per_fold_test: list[float]
    dataset: str = ""
    model: str = ""
    label: str = ""
    meta: dict[str, Any] = field(default_factory=dict)

    @property
    def mean_train(self) -> float:
        return float(np.mean(self.per_fold_train))

    @property
    def std_train(self) -> float:
        return float(np.std(self.per_fold_train))

    @property
    def mean_test(self) -> float:
        return float(np.mean(self.per_fold_test))

    @property
    def std_test(self) -> float:
        return float(np.std(self.per_fold_test))

    def row(self) -> dict[str, Any]:
        return {
            "dataset": self.dataset,
            "model": self.model,
            "M/K": self.label,
            "train_mean": round(self.mean_train, 4),
            "train_std": round(self.std_train, 4),
            "test_mean": round(self.mean_test, 4),
            "test_std": round(self.std_test, 4),
        }

    def to_document(self) -> dict[str, Any]:
        return {
            **self.row(),
            "per_fold_train": list(self.per_fold_train),
            "per_fold_test": list(self.per_fold_test),
            "meta": dict(self.meta),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_document(), indent=2, sort_keys=True) + "\n"

    def to_csv_row(self, header: bool = False) -> str:
        return reports_to_csv([self], header=header)

    @classmethod
    def from_document(cls, doc: dict[str, Any]) -> "AccuracyReport":
        return cls(
            per_fold_train=[float(v) for v in doc["per_fold_train"]],
            per_fold_test=[float(v) for v in doc["per_fold_test"]],
            dataset=doc.get("dataset", ""),
            model=doc.get("model", ""),
            label=doc.get("M/K", ""),
            meta=dict(doc.get("meta", {})),
        )


def reports_to_csv(reports: list[AccuracyReport], header: bool = True) -> str:
    frame = pd.DataFrame([r.row() for r in reports], columns=REPORT_COLUMNS)
    buffer = io.StringIO()
    frame.to_csv(buffer, index=False, header=header, lineterminator="\n")
    return buffer.getvalue()


def write_text(path: str | os.PathLike, text: str) -> None:
    """Write `text` to `path` atomically (temp file + rename)."""
    path = str(path)
    tmp_path = f"{path}.tmp"
    try:
        with open(tmp_path, "w", encoding="utf-8", newline="") as f:
            f.write(text)
        os.replace(tmp_path, path)
    except OSError as exc:
        raise DatasetIOError(f"Unable to write '{path}': {exc.strerror or exc}") from None
