import logging

from counterplay.ui.console import CounterplayConsole


class CounterplayContext:
    """
    The counterplay context that travels from command to command.
    It contains the settings, the UI engine and the package logger.
    """
    def __init__(self, click_ctx):
        self.click_ctx = click_ctx
        # Instantiation of the complete UI engine
        self.ui = CounterplayConsole()
        self.logger = logging.getLogger("counterplay.cli")

        # Settings are exposed lazily so tests can swap the singleton.
        self._settings = None

    @property
    def settings(self):
        """
        Lazily expose the settings singleton (`counterplay.conf.settings`).
        """
        if self._settings is None:
            from counterplay.conf import settings as settings_singleton

            self._settings = settings_singleton
        return self._settings

    @property
    def debug(self) -> bool:
        return bool(getattr(self.settings, "debug_enabled", False))
