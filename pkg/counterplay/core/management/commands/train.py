import logging

from counterplay.cli.decorators import command, option
from counterplay.core.management.common import build_run_config, resolve_dataset, run_config_options
from counterplay.evaluation.harness import train_model
from counterplay.rating.serialization import save_state

logger = logging.getLogger(__name__)

TOP_PLAYERS = 10


class TrainCommand:
    """Fit a model on a whole dataset and save its state document."""

    def __init__(self, ctx):
        self.ctx = ctx

    def run(self, config_path: str | None, out: str, **flags) -> None:
        config = build_run_config(self.ctx.settings, config_path, flags)
        dataset = resolve_dataset(config)
        spec = config.model_spec()
        logger.info("Training %s (%s) on %d matches for %d epochs", spec.kind.value, spec.label, len(dataset), config.epochs)

        with self.ctx.ui.spinner(f"Training {spec.kind.value} for {config.epochs} epochs..."):
            model = train_model(spec, dataset, config.epochs, config.seed)
        save_state(out, model, dataset.player_names)

        ratings = model.ratings()
        order = sorted(range(len(ratings)), key=lambda p: (-ratings[p], p))[:TOP_PLAYERS]
        self.ctx.ui.table(
            ["#", "Player", "Rating"],
            [[rank, dataset.player_names[p], f"{ratings[p]:.3f}"] for rank, p in enumerate(order, start=1)],
            title=f"{spec.kind.value} {spec.label}",
        )
        self.ctx.ui.success(f"State saved to {out}")


@command(name="train", help="Train a rating model on a full dataset and save its state.")
@run_config_options
@option("--out", type="path", required=True, help="State document (JSON) to write.")
def train_command(ctx, config_path, out, **flags):
    TrainCommand(ctx).run(config_path, out, **flags)
