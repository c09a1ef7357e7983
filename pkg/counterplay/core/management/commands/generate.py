import logging

from counterplay.cli.decorators import argument, command, option, seed_option
from counterplay.datasets.io import save_matches, save_roster, sidecar_path, write_metadata
from counterplay.datasets.synthetic import GENERATORS, generate

logger = logging.getLogger(__name__)


class GenerateCommand:
    """Write a synthetic match dataset with its roster and metadata sidecars."""

    def __init__(self, ctx):
        self.ctx = ctx

    def run(self, generator: str, n_matches: int, seed: int, out: str) -> None:
        with self.ctx.ui.spinner(f"Generating {n_matches} {generator} matches..."):
            dataset = generate(generator, n_matches, seed)

        save_matches(dataset, out)
        roster = sidecar_path(out, "players.csv")
        save_roster(dataset.player_names, roster)
        meta = sidecar_path(out, "meta.json")
        write_metadata(
            meta,
            {
                "generator": generator,
                "n_matches": n_matches,
                "seed": seed,
                "n_players": dataset.n_players,
                "players_file": roster.name,
            },
        )
        logger.info("Wrote %s, %s and %s", out, roster, meta)
        self.ctx.ui.success(f"{len(dataset)} matches between {dataset.n_players} players written to {out}")


@command(name="generate", help=f"Generate a synthetic match dataset ({' | '.join(GENERATORS)}).")
@argument("generator", type="str")
@option("--n", "n_matches", type="int", default=100_000, help="Number of matches.")
@seed_option()
@option("--out", type="path", required=True, help="Match CSV to write.")
def generate_command(ctx, generator, n_matches, seed, out):
    GenerateCommand(ctx).run(generator, n_matches, seed, out)
