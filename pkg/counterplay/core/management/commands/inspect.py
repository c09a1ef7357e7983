import numpy as np

from counterplay.cli.decorators import argument, command, option, seed_option
from counterplay.rating import rcc
from counterplay.rating.base import EloRccModel, MEloModel
from counterplay.rating.serialization import load_state

TOP_COUNTERS = 10


class InspectCommand:
    """Print a trained model: ratings, best categories and the counter table."""

    def __init__(self, ctx):
        self.ctx = ctx

    def run(self, state_path: str, top: int | None, occupied: bool, tui: bool) -> None:
        model, names = load_state(state_path)
        names = names or [str(p) for p in range(model.n_players)]

        if tui:
            from counterplay.ui.tui.app import RatingBrowserApp

            RatingBrowserApp(model, names, title=f"counterplay: {state_path}").run()
            return

        self.ctx.ui.header(model.kind.value, f"{model.n_players} players from {state_path}")
        self._ratings(model, names, top)
        if isinstance(model, EloRccModel):
            self._counters(model.state, occupied)

    def _ratings(self, model, names: list[str], top: int | None) -> None:
        ratings = model.ratings()
        order = sorted(range(len(ratings)), key=lambda p: (-ratings[p], p))
        if top is not None:
            order = order[:top]

        columns = ["#", "Player", "Rating"]
        if isinstance(model, EloRccModel):
            columns += ["Best category", "Weight"]
            best = rcc.best_categories(model.state)
        elif isinstance(model, MEloModel):
            columns += ["Cyclic vector"]

        rows = []
        for rank, p in enumerate(order, start=1):
            row = [rank, names[p], f"{ratings[p]:.3f}"]
            if isinstance(model, EloRccModel):
                row += [int(best[p]), f"{model.state.dists[p, best[p]]:.4f}"]
            elif isinstance(model, MEloModel):
                c = model.state.cyc[p]
                row += [f"({c[0]:+.4f}, {c[1]:+.4f})"]
            rows.append(row)
        self.ctx.ui.table(columns, rows, title="Ratings")

    def _counters(self, state: rcc.RccState, occupied: bool) -> None:
        members = rcc.category_members(state)
        categories = list(range(state.m))
        if occupied:
            categories = list(members)
            self.ctx.ui.info(f"Showing the {len(categories)} occupied of {state.m} categories.")
        sub = state.table[np.ix_(categories, categories)]
        self.ctx.ui.matrix([str(c) for c in categories], sub.tolist(), title="Counter table")

        self.ctx.ui.table(
            ["Category", "Players"],
            [[c, len(players)] for c, players in members.items()],
            title="Category occupancy",
        )

        relations = rcc.counter_relations(state)[:TOP_COUNTERS]
        if relations:
            self.ctx.ui.table(
                ["Category", "Counters", "Advantage"],
                [[a, b, f"{v:+.4f}"] for a, b, v in relations],
                title="Strongest counters",
            )
        else:
            self.ctx.ui.info("Counter table is all zeros.")


@command(name="inspect", help="Print a trained model state: ratings, best categories and the counter table.")
@argument("state_path", type="path")
@option("--top", type="int", default=None, help="Only show the N highest rated players.")
@option("--occupied", is_flag=True, help="Restrict the counter table to categories that hold a player.")
@option("--tui", is_flag=True, help="Browse the state in an interactive terminal app.")
@seed_option(help="Accepted for a uniform command surface; inspection is not random.")
def inspect_command(ctx, state_path, top, occupied, tui, seed):
    InspectCommand(ctx).run(state_path, top, occupied, tui)
