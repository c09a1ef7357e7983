import traceback
from functools import wraps
from typing import Any

import rich_click as click

from counterplay.core.context import CounterplayContext
from counterplay.core.errors import CounterplayError, exit_code_for


def command(name=None, **kwargs):
    """
    Wrapper around click.command that automatically injects the counterplay
    context and turns counterplay errors into a diagnostic plus exit code
    (1 for validation/config errors, 2 for IO errors).
    """
    def decorator(f):
        @click.command(name=name, **kwargs)
        @click.pass_context
        @wraps(f)
        def wrapper(click_ctx, *args, **kwargs):
            # Magic transformation: Click Context -> counterplay Context
            cp_ctx = CounterplayContext(click_ctx)
            try:
                return f(cp_ctx, *args, **kwargs)
            except (CounterplayError, OSError) as exc:
                if cp_ctx.debug:
                    traceback.print_exc()
                cp_ctx.ui.error(str(exc))
                click_ctx.exit(exit_code_for(exc))
        return wrapper
    return decorator


def argument(*args, **kwargs):
    """
    Thin wrapper that resolves known counterplay type aliases (e.g. "seed") before delegating to Click.
    """
    if "type" in kwargs:
        kwargs["type"] = _resolve_type_alias(kwargs["type"])
    return click.argument(*args, **kwargs)


def option(*args, **kwargs):
    """
    Wrapper over click.option that:
    - Resolves string type aliases to counterplay/core/types.
    - Automatically enables show_default when a default is provided and no value was supplied.
    """
    if "type" in kwargs:
        kwargs["type"] = _resolve_type_alias(kwargs["type"])

    if "show_default" not in kwargs and "default" in kwargs and not kwargs.get("is_flag"):
        kwargs["show_default"] = True

    return click.option(*args, **kwargs)


def seed_option(default: int | None = 0, **kwargs):
    """The `--seed` option every command accepts."""
    kwargs.setdefault("help", "Seed for every random stream of the run.")
    return option("--seed", type="seed", default=default, **kwargs)


def _resolve_type_alias(type_hint: Any):
    """
    Translate short string aliases to counterplay core types to keep decorators ergonomic.
    """
    if not isinstance(type_hint, str):
        return type_hint

    from counterplay.core import types as cptypes

    alias = type_hint.lower().strip()
    if alias == "int":
        return click.INT
    if alias == "float":
        return click.FLOAT
    if alias in ("str", "string"):
        return click.STRING
    if alias in ("path", "filepath"):
        return cptypes.PATH
    if alias == "seed":
        return cptypes.SEED
    if alias == "folds":
        return cptypes.FOLDS
    if alias == "positive":
        return cptypes.POSITIVE
    if alias == "rate":
        return cptypes.RATE

    # Unknown alias, leave untouched so Click can handle or error
    return type_hint
