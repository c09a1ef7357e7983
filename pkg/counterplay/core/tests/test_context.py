from types import SimpleNamespace

import counterplay.conf
from counterplay.conf import settings as settings_singleton
from counterplay.core.context import CounterplayContext
from counterplay.ui.console import CounterplayConsole


def test_context_exposes_settings_singleton_lazily() -> None:
    ctx = CounterplayContext(SimpleNamespace(obj=None))
    assert ctx.settings is settings_singleton
    # Cached on the context instance
    assert ctx.settings is settings_singleton


def test_context_carries_console_and_logger() -> None:
    ctx = CounterplayContext(SimpleNamespace(obj=None))
    assert isinstance(ctx.ui, CounterplayConsole)
    assert ctx.logger.name == "counterplay.cli"


def test_debug_follows_settings(monkeypatch) -> None:
    monkeypatch.setattr(counterplay.conf, "settings", SimpleNamespace(debug_enabled=True, THEME="default"))
    ctx = CounterplayContext(SimpleNamespace(obj=None))
    assert ctx.debug is True
