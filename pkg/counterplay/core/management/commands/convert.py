from counterplay.cli.decorators import argument, command, option, seed_option
from counterplay.datasets.io import convert_export, save_matches, save_roster, sidecar_path


class ConvertCommand:
    """Turn an external match export into the match CSV schema plus a roster."""

    def __init__(self, ctx):
        self.ctx = ctx

    def run(self, source: str, first: str, second: str, winner: str, out: str) -> None:
        dataset = convert_export(source, first, second, winner)
        save_matches(dataset, out)
        save_roster(dataset.player_names, sidecar_path(out, "players.csv"))
        draws = int((dataset.outcome == 0.5).sum())
        self.ctx.ui.success(
            f"Converted {len(dataset)} matches ({draws} draws) between {dataset.n_players} players to {out}"
        )


@command(name="convert", help="Convert an external match export (one row per match) to the match CSV schema.")
@argument("source", type="path")
@option("--first", default="player_a", help="Column holding the first player.")
@option("--second", default="player_b", help="Column holding the second player.")
@option("--winner", default="winner", help="Column holding the winner's name (empty, draw or tie for a draw).")
@seed_option(help="Accepted for a uniform command surface; conversion is not random.")
@option("--out", type="path", required=True, help="Match CSV to write.")
def convert_command(ctx, source, first, second, winner, seed, out):
    ConvertCommand(ctx).run(source, first, second, winner, out)
