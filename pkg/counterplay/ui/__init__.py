from counterplay.ui.console import CounterplayConsole

__all__ = ["CounterplayConsole"]
