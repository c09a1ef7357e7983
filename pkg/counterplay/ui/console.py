from typing import Any, List, Sequence

from rich.console import Console
from rich.markup import escape
from rich.panel import Panel
from rich.table import Table
from rich.text import Text

from counterplay.ui.theme import advantage_style, resolve_theme


class CounterplayConsole:
    """
    High-level console wrapper for counterplay commands.

    Provides convenient methods for common UI operations using Rich components.
    """

    def __init__(self, theme: str | None = None, console: Console | None = None):
        """
        Create a counterplay console.

        If `theme` is not provided, the `THEME` setting (COUNTERPLAY_THEME) is used,
        falling back to the default theme when settings are unavailable or invalid.
        """
        theme_name = theme
        if theme_name is None:
            try:
                from counterplay.conf import settings as cp_settings

                theme_name = getattr(cp_settings, "THEME", "default")
            except Exception:
                theme_name = "default"

        self._theme_name = str(theme_name) if theme_name is not None else "default"
        self._theme = resolve_theme(self._theme_name)
        if console is not None:
            console.push_theme(self._theme)
            self._console = console
        else:
            self._console = Console(theme=self._theme)

    def write(self, text: str, style: str = None):
        """Display plain text."""
        self._console.print(text, style=style)

    def raw(self, text: str):
        """Print text as-is (no markup, no highlighting); used for CSV/JSON output."""
        self._console.print(text, markup=False, highlight=False, soft_wrap=True, end="")

    # --- MESSAGE BLOCKS ---

    def header(self, title: str, subtitle: str = None):
        """Display a styled large header."""
        content = Text(subtitle, style="secondary") if subtitle else None
        self._console.print(Panel(
            content or "",
            title=f"[header]{title.upper()}[/]",
            border_style="primary",
            expand=False,
            padding=(1, 2)
        ))
        self._console.print()  # Spacer

    def success(self, msg: str):
        """Display a success message."""
        self._console.print(f"[success]✔[/] {escape(msg)}", soft_wrap=True)

    def error(self, msg: str):
        """Display an error message."""
        self._console.print(f"[error]✖[/] {escape(msg)}", highlight=False, soft_wrap=True)

    def warning(self, msg: str):
        """Display a warning message."""
        self._console.print(f"[warning]⚠[/] {escape(msg)}", soft_wrap=True)

    def info(self, msg: str):
        """Display an info message."""
        self._console.print(f"[info]ℹ[/] {escape(msg)}", soft_wrap=True)

    # --- COMPLEX COMPONENTS ---

    def table(self, columns: List[str], rows: List[List[Any]], title: str = None):
        """
        Create and display a formatted table automatically.
        Usage: ui.table(["Player", "Rating"], [["rock", "1000.0"]])
        """
        table = Table(title=title, header_style="secondary", border_style="primary")

        for col in columns:
            table.add_column(col)

        for row in rows:
            # Convert everything to string to avoid Rich errors
            table.add_row(*[str(r) for r in row])

        self._console.print(table)
        self._console.print()

    def matrix(self, labels: Sequence[str], values, title: str = None, fmt: str = "{:+.4f}"):
        """Display a square matrix with row and column labels, coloured by sign."""
        rows = [
            [labels[r], *[f"[{advantage_style(v)}]{fmt.format(v)}[/]" for v in values[r]]]
            for r in range(len(labels))
        ]
        self.table(["", *labels], rows, title=title)

    # --- LOADER / SPINNER ---

    def spinner(self, message: str = "Working..."):
        """
        Context manager to display a spinner during a long operation.
        Usage: with ctx.ui.spinner("Evaluating..."): ...
        """
        return self._console.status(f"[bold]{message}[/]", spinner="dots12")

    @property
    def console(self) -> Console:
        return self._console

    @property
    def theme_name(self) -> str:
        """Return the selected theme name (after normalization)."""
        return self._theme_name

    @property
    def theme(self):
        """Return the resolved Rich Theme instance."""
        return self._theme
