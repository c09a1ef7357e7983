import logging
import os

from counterplay.cli.decorators import argument, command, option, seed_option
from counterplay.conf.runconfig import DEFAULT_EPOCHS, DEFAULT_FOLDS
from counterplay.core import types as cptypes
from counterplay.evaluation.report import AccuracyReport
from counterplay.evaluation.tables import TABLES, external_source, reproduce_table, synthetic_sources

logger = logging.getLogger(__name__)


class ReproduceCommand:
    """Evaluate every (dataset, model) cell of an accuracy table and write it as CSV."""

    def __init__(self, ctx):
        self.ctx = ctx

    def run(
        self,
        table: str,
        out_dir: str,
        n_matches: int,
        epochs: int,
        folds: int,
        seed: int,
        jobs: int | None,
        external: dict[str, tuple[str | None, str | None]],
    ) -> None:
        jobs = jobs if jobs is not None else self.ctx.settings.jobs
        with self.ctx.ui.spinner(f"Generating {n_matches} matches per synthetic dataset..."):
            sources = synthetic_sources(n_matches, seed, folds)

        for name, (matches_path, folds_path) in external.items():
            if matches_path is None:
                self.ctx.ui.info(f"No {name} match file supplied; skipping {name}.")
                continue
            if not os.path.isfile(matches_path):
                self.ctx.ui.warning(f"{name} match file '{matches_path}' not found; skipping {name}.")
                continue
            sources.append(external_source(name, matches_path, folds_path, folds, seed))

        def on_cell(report: AccuracyReport) -> None:
            row = report.row()
            logger.info(
                "%s %s %s: train %s +- %s, test %s +- %s",
                row["dataset"], row["model"], row["M/K"],
                row["train_mean"], row["train_std"], row["test_mean"], row["test_std"],
            )

        with self.ctx.ui.spinner(f"Reproducing {table} ({len(sources)} datasets x {len(TABLES[table])} models)..."):
            reports, csv_path = reproduce_table(table, sources, epochs, seed, out_dir, jobs=jobs, on_cell=on_cell)

        rows = [list(report.row().values()) for report in reports]
        self.ctx.ui.table(list(reports[0].row()), rows, title=f"{table}: relation accuracy (%)")
        self.ctx.ui.success(f"Table written to {csv_path}")


@command(name="reproduce", help="Reproduce an accuracy table (t1: baselines vs Elo-RCC, t2: small category counts).")
@argument("table", type=cptypes.Choice(sorted(TABLES)))
@option("--out-dir", type="path", default="results", help="Directory receiving the table CSV and per-cell JSON.")
@option("--n", "n_matches", type="int", default=100_000, help="Matches per synthetic dataset.")
@option("--epochs", type="int", default=DEFAULT_EPOCHS, help="Training passes per fold.")
@option("--folds", type="int", default=DEFAULT_FOLDS, help="Folds per dataset.")
@seed_option()
@option("--jobs", type="int", default=None, help="Folds evaluated in parallel (defaults to COUNTERPLAY_JOBS).")
@option("--aoe2", "aoe2_path", type="path", default=None, help="Civilization match CSV.")
@option("--aoe2-folds", type="path", default=None, help="Fold CSV for the civilization matches.")
@option("--hearthstone", "hearthstone_path", type="path", default=None, help="Deck match CSV.")
@option("--hearthstone-folds", type="path", default=None, help="Fold CSV for the deck matches.")
def reproduce_command(
    ctx, table, out_dir, n_matches, epochs, folds, seed, jobs,
    aoe2_path, aoe2_folds, hearthstone_path, hearthstone_folds,
):
    external = {
        "aoe2": (aoe2_path, aoe2_folds),
        "hearthstone": (hearthstone_path, hearthstone_folds),
    }
    ReproduceCommand(ctx).run(table, out_dir, n_matches, epochs, folds, seed, jobs, external)
