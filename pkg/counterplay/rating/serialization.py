"""Versioned JSON documents for trained model states.

Document layout (all arrays as nested lists of floats)::

    {
      "schema_version": 1,
      "model": "elo-rcc",
      "config": {...},
      "player_names": [...],
      "ratings": [...],
      "table": [[...]], "residuals": [[...]], "dists": [[...]]   # elo-rcc
      "cyc": [[...]]                                             # melo2
    }

Python's float repr is exact, so a save/load round trip reproduces every
array bit for bit.
"""

from __future__ import annotations

import dataclasses
import json
import logging
import os
from typing import Any

import numpy as np

from counterplay.core.errors import DatasetIOError, RecordParseError, SchemaVersionError
from counterplay.rating import melo, rcc
from counterplay.rating.base import EloModel, EloRccModel, MEloModel, ModelKind, RatingModel
from counterplay.rating.elo import EloConfig, RatingTable

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1


def model_to_document(model: RatingModel, player_names: list[str] | None = None) -> dict[str, Any]:
    doc: dict[str, Any] = {"schema_version": SCHEMA_VERSION, "model": model.kind.value}
    if isinstance(model, EloModel):
        doc["config"] = dataclasses.asdict(model.config)
        doc["ratings"] = model.table.ratings.tolist()
    elif isinstance(model, EloRccModel):
        state = model.state
        doc["config"] = dataclasses.asdict(state.config)
        doc["ratings"] = state.ratings.ratings.tolist()
        doc["table"] = state.table.tolist()
        doc["residuals"] = state.residuals.tolist()
        doc["dists"] = state.dists.tolist()
    elif isinstance(model, MEloModel):
        doc["config"] = dataclasses.asdict(model.state.config)
        doc["ratings"] = model.state.ratings.tolist()
        doc["cyc"] = model.state.cyc.tolist()
    else:
        raise SchemaVersionError(f"Cannot serialize model of type {type(model).__name__}.")
    doc["player_names"] = list(player_names) if player_names is not None else None
    return doc


def _array(doc: dict[str, Any], key: str, ndim: int) -> np.ndarray:
    if key not in doc:
        raise RecordParseError(f"State document is missing '{key}'.")
    try:
        value = np.asarray(doc[key], dtype=float)
    except (TypeError, ValueError) as exc:
        raise RecordParseError(f"State field '{key}' is not numeric: {exc}") from None
    if value.ndim != ndim:
        raise RecordParseError(f"State field '{key}' must have {ndim} dimension(s), got {value.ndim}.")
    return value


def model_from_document(
    doc: dict[str, Any], rng: np.random.Generator | None = None
) -> tuple[RatingModel, list[str] | None]:
    """Rebuild a model from `doc`. Returns the model and the stored player names."""
    if not isinstance(doc, dict):
        raise RecordParseError("State document must be a JSON object.")
    version = doc.get("schema_version")
    if version != SCHEMA_VERSION:
        raise SchemaVersionError(
            f"Unsupported state schema_version {version!r} (this build reads version {SCHEMA_VERSION})."
        )
    try:
        kind = ModelKind(doc.get("model"))
    except ValueError:
        raise SchemaVersionError(f"Unknown model kind {doc.get('model')!r} in state document.") from None

    config_fields = doc.get("config") or {}
    ratings = _array(doc, "ratings", 1)
    try:
        if kind is ModelKind.ELO:
            model: RatingModel = EloModel(RatingTable(ratings), EloConfig(**config_fields))
        elif kind is ModelKind.ELO_RCC:
            config = rcc.RccConfig(**config_fields)
            arrays = {name: _array(doc, name, 2) for name in ("table", "residuals", "dists")}
            _check_rcc_shapes(arrays, len(ratings), config.m)
            state = rcc.RccState(ratings=RatingTable(ratings), config=config, **arrays)
            model = EloRccModel(state, rng if rng is not None else np.random.default_rng(0))
        else:
            state = melo.MEloState(ratings, _array(doc, "cyc", 2), melo.MEloConfig(**config_fields))
            if state.cyc.shape != (len(ratings), 2):
                raise RecordParseError(f"mElo2 'cyc' must have shape ({len(ratings)}, 2).")
            model = MEloModel(state)
    except TypeError as exc:
        raise RecordParseError(f"Invalid config in state document: {exc}") from None
    names = doc.get("player_names")
    if names is not None and len(names) != model.n_players:
        raise RecordParseError(f"player_names has {len(names)} entries for {model.n_players} players.")
    return model, names


def _check_rcc_shapes(arrays: dict[str, np.ndarray], n: int, m: int) -> None:
    expected = {"table": (m, m), "residuals": (n, m), "dists": (n, m)}
    for name, shape in expected.items():
        if arrays[name].shape != shape:
            raise RecordParseError(f"Elo-RCC '{name}' must have shape {shape}, got {arrays[name].shape}.")


def save_state(path: str, model: RatingModel, player_names: list[str] | None = None) -> None:
    doc = model_to_document(model, player_names)
    tmp_path = f"{path}.tmp"
    try:
        with open(tmp_path, "w", encoding="utf-8") as f:
            json.dump(doc, f, indent=2)
            f.write("\n")
        os.replace(tmp_path, path)
    except OSError as exc:
        raise DatasetIOError(f"Unable to write state file '{path}': {exc.strerror or exc}") from None
    logger.info("Saved %s state for %d players to %s", model.kind.value, model.n_players, path)


def load_state(path: str, rng: np.random.Generator | None = None) -> tuple[RatingModel, list[str] | None]:
    try:
        with open(path, "r", encoding="utf-8") as f:
            doc = json.load(f)
    except OSError as exc:
        raise DatasetIOError(f"Unable to read state file '{path}': {exc.strerror or exc}") from None
    except json.JSONDecodeError as exc:
        raise RecordParseError(f"not valid JSON ({exc.msg})", line=exc.lineno, path=path) from None
    return model_from_document(doc, rng)
