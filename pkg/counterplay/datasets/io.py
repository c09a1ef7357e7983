"""CSV files for matches, rosters and fold splits.

Match CSV (UTF-8)::

    player_i,player_j,outcome
    Aztecs,Britons,1

Roster CSV: ``player_id,name``. Fold CSV: ``match_index,fold``.

Without a roster, ids are assigned in first-seen order while reading the
match file (player_i before player_j on each row).
"""

from __future__ import annotations

import json
import logging
import os
from pathlib import Path
from typing import Any

import numpy as np
import pandas as pd

from counterplay.core.errors import DatasetIOError, RecordParseError, ValidationError
from counterplay.datasets.records import Dataset, FoldSplit

logger = logging.getLogger(__name__)

MATCH_COLUMNS = ["player_i", "player_j", "outcome"]
ROSTER_COLUMNS = ["player_id", "name"]
FOLD_COLUMNS = ["match_index", "fold"]

OUTCOME_TOKENS = {"0": 0.0, "0.0": 0.0, "0.5": 0.5, "1": 1.0, "1.0": 1.0}
OUTCOME_TEXT = {0.0: "0", 0.5: "0.5", 1.0: "1"}

# Data rows start on line 2 of a file with a header.
FIRST_DATA_LINE = 2


def _read_frame(path: str, expected: str) -> pd.DataFrame:
    """Read every column as text, indexed by the file line each row came from.

    Blank lines are kept while parsing so the index stays aligned with the
    file, then dropped.
    """
    if not os.path.isfile(path):
        raise DatasetIOError(f"File not found: '{path}'.")
    try:
        frame = pd.read_csv(path, dtype=str, keep_default_na=False, skip_blank_lines=False, encoding="utf-8")
    except pd.errors.ParserError as exc:
        raise RecordParseError(str(exc), path=path) from None
    except pd.errors.EmptyDataError:
        raise RecordParseError(f"empty file, expected {expected}", line=1, path=path) from None
    except UnicodeDecodeError as exc:
        raise RecordParseError(f"not UTF-8 ({exc.reason})", path=path) from None
    except OSError as exc:
        raise DatasetIOError(f"Unable to read '{path}': {exc.strerror or exc}") from None
    # Short rows and blank lines come back as NaN.
    frame = frame.fillna("")
    frame.index = pd.RangeIndex(FIRST_DATA_LINE, FIRST_DATA_LINE + len(frame))
    blank = frame.apply(lambda column: column.str.strip() == "").all(axis=1)
    return frame[~blank]


def _read_csv(path: str | os.PathLike, columns: list[str]) -> pd.DataFrame:
    path = str(path)
    frame = _read_frame(path, f"header '{','.join(columns)}'")
    if list(frame.columns) != columns:
        raise RecordParseError(
            f"expected header '{','.join(columns)}', got '{','.join(map(str, frame.columns))}'", line=1, path=path
        )
    return frame


def _write_csv(frame: pd.DataFrame, path: str | os.PathLike) -> None:
    path = str(path)
    tmp_path = f"{path}.tmp"
    try:
        frame.to_csv(tmp_path, index=False, lineterminator="\n", encoding="utf-8")
        os.replace(tmp_path, path)
    except OSError as exc:
        raise DatasetIOError(f"Unable to write '{path}': {exc.strerror or exc}") from None


def parse_outcome(token: str, line: int, path: str | None = None) -> float:
    value = OUTCOME_TOKENS.get(token.strip())
    if value is None:
        raise RecordParseError(f"outcome '{token}' must be one of 0, 0.5 or 1", line=line, path=path)
    return value


def load_roster(path: str | os.PathLike) -> list[str]:
    frame = _read_csv(path, ROSTER_COLUMNS)
    names: list[str] = []
    for offset, (line, player_id, name) in enumerate(zip(frame.index, frame["player_id"], frame["name"])):
        if player_id.strip() != str(offset):
            raise RecordParseError(f"player ids must be dense and ordered, expected {offset}", line=line, path=str(path))
        names.append(name)
    if len(set(names)) != len(names):
        raise ValidationError(f"Roster '{path}' contains duplicate names.")
    return names


def save_roster(names: list[str], path: str | os.PathLike) -> None:
    _write_csv(pd.DataFrame({"player_id": range(len(names)), "name": names}), path)


def load_matches(path: str | os.PathLike, name_map_path: str | os.PathLike | None = None) -> Dataset:
    """Read a match CSV into a Dataset with dense ids.

    With `name_map_path` the roster fixes the ids (and may list players that
    never appear in a match); an unknown name is then a parse error.
    """
    frame = _read_csv(path, MATCH_COLUMNS)
    path = str(path)
    fixed_roster = name_map_path is not None
    names = load_roster(name_map_path) if fixed_roster else []
    ids = {name: idx for idx, name in enumerate(names)}

    def lookup(name: str, line: int) -> int:
        if not name:
            raise RecordParseError("empty player name", line=line, path=path)
        if name not in ids:
            if fixed_roster:
                raise RecordParseError(f"player '{name}' is not in the roster", line=line, path=path)
            ids[name] = len(names)
            names.append(name)
        return ids[name]

    n = len(frame)
    first = np.empty(n, dtype=np.int64)
    second = np.empty(n, dtype=np.int64)
    outcome = np.empty(n, dtype=float)
    rows = zip(frame.index.tolist(), frame["player_i"].tolist(), frame["player_j"].tolist(), frame["outcome"].tolist())
    for row, (line, name_i, name_j, token) in enumerate(rows):
        first[row] = lookup(name_i, line)
        second[row] = lookup(name_j, line)
        outcome[row] = parse_outcome(token, line, path)
        if first[row] == second[row] and outcome[row] != 0.5:
            raise RecordParseError("mirror match must have outcome 0.5", line=line, path=path)
    logger.info("Loaded %d matches between %d players from %s", n, len(names), path)
    return Dataset(names, first, second, outcome)


def save_matches(dataset: Dataset, path: str | os.PathLike) -> None:
    names = np.asarray(dataset.player_names, dtype=object)
    frame = pd.DataFrame(
        {
            "player_i": names[dataset.first],
            "player_j": names[dataset.second],
            "outcome": [OUTCOME_TEXT[o] for o in dataset.outcome.tolist()],
        },
        columns=MATCH_COLUMNS,
    )
    _write_csv(frame, path)


def save_folds(split: FoldSplit, path: str | os.PathLike) -> None:
    _write_csv(pd.DataFrame({"match_index": np.arange(len(split)), "fold": split.assignment}), path)


def load_folds(path: str | os.PathLike, n_matches: int | None = None) -> FoldSplit:
    frame = _read_csv(path, FOLD_COLUMNS)
    path = str(path)
    assignment = np.empty(len(frame), dtype=np.int64)
    rows = zip(frame.index.tolist(), frame["match_index"].tolist(), frame["fold"].tolist())
    for row, (line, index, fold) in enumerate(rows):
        if index.strip() != str(row):
            raise RecordParseError(f"match_index must run 0..n-1 in order, expected {row}", line=line, path=path)
        try:
            assignment[row] = int(fold)
        except ValueError:
            raise RecordParseError(f"fold '{fold}' is not an integer", line=line, path=path) from None
        if assignment[row] < 0:
            raise RecordParseError(f"fold '{fold}' is negative", line=line, path=path)
    if n_matches is not None and len(assignment) != n_matches:
        raise ValidationError(f"Fold file '{path}' covers {len(assignment)} matches, dataset has {n_matches}.")
    k = int(assignment.max()) + 1 if len(assignment) else 0
    return FoldSplit(k=k, assignment=assignment)


def write_metadata(path: str | os.PathLike, metadata: dict[str, Any]) -> None:
    path = str(path)
    try:
        with open(path, "w", encoding="utf-8") as f:
            json.dump(metadata, f, indent=2, sort_keys=True)
            f.write("\n")
    except OSError as exc:
        raise DatasetIOError(f"Unable to write '{path}': {exc.strerror or exc}") from None


def sidecar_path(path: str | os.PathLike, suffix: str) -> Path:
    """`rps.csv` -> `rps.<suffix>` next to it (e.g. `rps.meta.json`, `rps.players.csv`)."""
    path = Path(path)
    return path.with_name(f"{path.stem}.{suffix}")


def convert_export(
    path: str | os.PathLike,
    first_column: str,
    second_column: str,
    winner_column: str,
) -> Dataset:
    """Best-effort adapter for external match exports (e.g. civilization or deck logs).

    Each row names two players and the winner; the winner column holds the
    name of the winning player, or an empty value / ``draw`` / ``tie`` for a
    draw. Rows whose winner matches neither player are rejected.
    """
    path = str(path)
    frame = _read_frame(path, "a header row")
    missing = [c for c in (first_column, second_column, winner_column) if c not in frame.columns]
    if missing:
        raise RecordParseError(f"missing column(s) {', '.join(missing)}", line=1, path=path)

    names: list[str] = []
    ids: dict[str, int] = {}
    rows = []
    for line, a, b, winner in zip(
        frame.index.tolist(),
        frame[first_column].tolist(),
        frame[second_column].tolist(),
        frame[winner_column].tolist(),
    ):
        for name in (a, b):
            if not name:
                raise RecordParseError("empty player name", line=line, path=path)
            if name not in ids:
                ids[name] = len(names)
                names.append(name)
        token = winner.strip()
        if token.lower() in ("", "draw", "tie") or a == b:
            outcome = 0.5
        elif token == a:
            outcome = 1.0
        elif token == b:
            outcome = 0.0
        else:
            raise RecordParseError(f"winner '{winner}' is neither '{a}' nor '{b}'", line=line, path=path)
        rows.append((ids[a], ids[b], outcome))
    if not rows:
        return Dataset(names, np.empty(0), np.empty(0), np.empty(0))
    first, second, outcome = zip(*rows)
    return Dataset(names, np.array(first), np.array(second), np.array(outcome))
