import logging
import os
from typing import Dict

from rich.console import Console
from rich.logging import RichHandler

LOGGER_NAME = "counterplay"
ENV_PREFIX = "COUNTERPLAY_"


class Settings:
    """
    Process-wide settings read from the environment.

    `.env` and `.env.local` in the working directory are loaded first (`.env`
    never overrides an existing variable, `.env.local` always does). Attribute
    access maps to `COUNTERPLAY_<NAME>` variables, e.g. `settings.THEME` reads
    `COUNTERPLAY_THEME`.
    """

    DEFAULTS = {
        "THEME": "default",
        "CONFIG": None,
        "JOBS": "1",
    }

    def __init__(self):
        self._env_loaded = False
        self.debug_enabled = False
        # Load environment files early so COUNTERPLAY_DEBUG is known before any command runs.
        self._load_env()

    def _load_env(self) -> Dict[str, str]:
        """Lightweight .env loader to populate os.environ."""
        if self._env_loaded:
            return {}
        loaded = {}
        for env_file in (".env", ".env.local"):
            env_path = os.path.join(os.getcwd(), env_file)
            if not os.path.exists(env_path):
                continue
            with open(env_path, "r", encoding="utf-8") as f:
                for line in f:
                    stripped = line.strip()
                    if not stripped or stripped.startswith("#") or "=" not in stripped:
                        continue
                    key, value = stripped.split("=", 1)
                    key = key.strip()
                    value = value.strip().strip('"').strip("'")
                    loaded[key] = value
                    if env_file == ".env.local":
                        os.environ[key] = value
                    else:
                        os.environ.setdefault(key, value)
        self.debug_enabled = self._get_bool_env(f"{ENV_PREFIX}DEBUG", default=False)
        self._env_loaded = True
        return loaded

    def _get_bool_env(self, key: str, default: bool = False) -> bool:
        val = os.environ.get(key)
        if val is None:
            return default
        return str(val).lower() in ("1", "true", "yes", "on")

    @property
    def jobs(self) -> int:
        """Default worker count for fold parallelism (COUNTERPLAY_JOBS, at least 1)."""
        try:
            return max(1, int(self.JOBS))
        except (TypeError, ValueError):
            return 1

    def __getattr__(self, name):
        if not name.isupper():
            raise AttributeError(name)
        value = os.environ.get(f"{ENV_PREFIX}{name}")
        if value is not None:
            return value
        if name in self.DEFAULTS:
            return self.DEFAULTS[name]
        raise AttributeError(f"Setting '{name}' is not defined (set {ENV_PREFIX}{name}).")


def configure_logging(verbose: bool = False, quiet: bool = False, debug: bool = False) -> logging.Logger:
    """
    Route the `counterplay` logger through a Rich handler on stderr.

    Level: DEBUG with `debug`, ERROR with `quiet`, INFO with `verbose`, WARNING otherwise.
    """
    if debug:
        level = logging.DEBUG
    elif quiet:
        level = logging.ERROR
    elif verbose:
        level = logging.INFO
    else:
        level = logging.WARNING

    logger = logging.getLogger(LOGGER_NAME)
    for handler in list(logger.handlers):
        if getattr(handler, "_counterplay", False):
            logger.removeHandler(handler)
    handler = RichHandler(console=Console(stderr=True), show_path=debug, rich_tracebacks=debug)
    handler._counterplay = True
    handler.setFormatter(logging.Formatter("%(message)s"))
    logger.addHandler(handler)
    logger.setLevel(level)
    logger.propagate = False
    return logger


# Singleton exported
settings = Settings()
