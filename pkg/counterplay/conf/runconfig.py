"""Run configuration for the train / evaluate commands.

Values are resolved with the precedence: command-line flags, then the config
file (a JSON object keyed by RunConfig field names), then the defaults below.
"""

from __future__ import annotations

import dataclasses
import json
import os
from dataclasses import dataclass, field
from typing import Any

from counterplay.core.errors import ConfigurationError, DatasetIOError
from counterplay.rating.base import ModelKind, ModelSpec

DEFAULT_EPOCHS = 100
DEFAULT_FOLDS = 5

# Hyperparameters each model reads, and their defaults.
MODEL_DEFAULTS: dict[ModelKind, dict[str, Any]] = {
    ModelKind.ELO: {"k_factor": 16.0, "initial_rating": 1000.0},
    ModelKind.ELO_RCC: {"m": 81, "eta_r": 0.1, "eta_t": 0.00025, "eta_c": 0.01, "initial_rating": 1000.0},
    ModelKind.MELO2: {"k": 16.0, "k_c": 0.1, "initial_rating": 1000.0},
}


@dataclass
class RunConfig:
    model: str = ModelKind.ELO_RCC.value
    k_factor: float | None = None
    k: float | None = None
    k_c: float | None = None
    m: int | None = None
    eta_r: float | None = None
    eta_t: float | None = None
    eta_c: float | None = None
    initial_rating: float | None = None
    epochs: int = DEFAULT_EPOCHS
    folds: int = DEFAULT_FOLDS
    seed: int = 0
    dataset: str | None = None
    folds_path: str | None = None
    players_path: str | None = None
    generator: str | None = None
    n_matches: int = 100_000
    jobs: int = 1
    extra: dict[str, Any] = field(default_factory=dict, repr=False)

    @classmethod
    def field_names(cls) -> list[str]:
        return [f.name for f in dataclasses.fields(cls) if f.name != "extra"]

    @classmethod
    def resolve(
        cls,
        flags: dict[str, Any],
        file_values: dict[str, Any] | None = None,
    ) -> "RunConfig":
        """Merge defaults < file values < flags (flags set to None are treated as absent)."""
        known = set(cls.field_names())
        values: dict[str, Any] = {}
        for source in (file_values or {}, flags):
            unknown = sorted(set(source) - known)
            if unknown:
                raise ConfigurationError(f"Unknown config key(s): {', '.join(unknown)}.")
            values.update({k: v for k, v in source.items() if v is not None})
        config = cls(**values)
        config.validate()
        return config

    def validate(self) -> None:
        try:
            kind = ModelKind(self.model)
        except ValueError:
            choices = ", ".join(k.value for k in ModelKind)
            raise ConfigurationError(f"Unknown model '{self.model}'. Choose one of: {choices}.") from None
        for name in ("epochs", "n_matches", "jobs"):
            if int(getattr(self, name)) < 1:
                raise ConfigurationError(f"{name} must be >= 1, got {getattr(self, name)}.")
        if self.folds < 2:
            raise ConfigurationError(f"folds must be >= 2, got {self.folds}.")
        if self.seed < 0:
            raise ConfigurationError(f"seed must be >= 0, got {self.seed}.")
        if self.dataset is None and self.generator is None:
            raise ConfigurationError("No dataset: pass a match file (--dataset) or a generator (--generator).")
        foreign = [
            name
            for kind_, params in MODEL_DEFAULTS.items()
            if kind_ is not kind
            for name in params
            if name not in MODEL_DEFAULTS[kind] and getattr(self, name) is not None
        ]
        if foreign:
            raise ConfigurationError(
                f"Parameter(s) {', '.join(sorted(set(foreign)))} do not apply to model '{kind.value}'."
            )
        # Builds the model config, so out-of-range hyperparameters fail here.
        self.model_spec()

    def model_spec(self) -> ModelSpec:
        kind = ModelKind(self.model)
        params = dict(MODEL_DEFAULTS[kind])
        for name, default in params.items():
            value = getattr(self, name)
            if value is None:
                continue
            try:
                number = float(value)
            except (TypeError, ValueError):
                raise ConfigurationError(f"{name} must be a number, got {value!r}.") from None
            if isinstance(default, int):
                if not number.is_integer():
                    raise ConfigurationError(f"{name} must be an integer, got {value}.")
                params[name] = int(number)
            else:
                params[name] = number
        return ModelSpec(kind, params)

    def to_document(self) -> dict[str, Any]:
        return {name: getattr(self, name) for name in self.field_names()}


def load_config_file(path: str | os.PathLike | None) -> dict[str, Any]:
    """Read a JSON config document. A missing `path` argument means no file."""
    if path is None:
        return {}
    path = str(path)
    try:
        with open(path, "r", encoding="utf-8") as f:
            values = json.load(f)
    except OSError as exc:
        raise DatasetIOError(f"Unable to read config file '{path}': {exc.strerror or exc}") from None
    except json.JSONDecodeError as exc:
        raise ConfigurationError(f"Config file '{path}' is not valid JSON: {exc.msg} (line {exc.lineno}).") from None
    if not isinstance(values, dict):
        raise ConfigurationError(f"Config file '{path}' must contain a JSON object.")
    return values
