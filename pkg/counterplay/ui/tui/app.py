from textual.app import App, ComposeResult
from textual.binding import Binding
from textual.containers import Horizontal
from textual.widgets import DataTable, Footer, Header

from counterplay.rating import rcc
from counterplay.rating.base import EloRccModel, RatingModel


class RatingBrowserApp(App):
    """
    Interactive browser for a trained model: ratings on the left and, for
    Elo-RCC models, the counter table on the right.
    """

    CSS = """
    Screen {
        background: $surface;
    }
    #ratings {
        width: 2fr;
    }
    #counters {
        width: 3fr;
    }
    """

    BINDINGS = [
        Binding("q", "quit", "Quit", show=True),
        Binding("d", "toggle_dark", "Dark Theme"),
    ]

    def __init__(self, model: RatingModel, player_names: list[str], title: str = "counterplay", **kwargs):
        super().__init__(**kwargs)
        self.model = model
        self.player_names = player_names
        self.title = title

    def compose(self) -> ComposeResult:
        yield Header(show_clock=True)
        with Horizontal():
            yield DataTable(id="ratings", zebra_stripes=True)
            if isinstance(self.model, EloRccModel):
                yield DataTable(id="counters")
        yield Footer()

    def on_mount(self) -> None:
        ratings = self.query_one("#ratings", DataTable)
        for row in rating_rows(self.model, self.player_names):
            if not ratings.columns:
                ratings.add_columns(*row.keys())
            ratings.add_row(*row.values())

        if isinstance(self.model, EloRccModel):
            table = self.model.state.table
            counters = self.query_one("#counters", DataTable)
            counters.add_columns("", *[str(c) for c in range(len(table))])
            for a, values in enumerate(table.tolist()):
                counters.add_row(str(a), *[f"{v:+.4f}" for v in values])

    def action_toggle_dark(self) -> None:
        """Toggle between light and dark mode."""
        self.theme = "textual-light" if self.theme == "textual-dark" else "textual-dark"


def rating_rows(model: RatingModel, player_names: list[str]) -> list[dict[str, str]]:
    """Ratings sorted strongest first, with the best category for Elo-RCC models."""
    ratings = model.ratings()
    order = sorted(range(len(ratings)), key=lambda p: (-ratings[p], p))
    best = rcc.best_categories(model.state).tolist() if isinstance(model, EloRccModel) else None
    rows = []
    for rank, player in enumerate(order, start=1):
        row = {"#": str(rank), "player": player_names[player], "rating": f"{ratings[player]:.3f}"}
        if best is not None:
            row["category"] = str(best[player])
        rows.append(row)
    return rows
