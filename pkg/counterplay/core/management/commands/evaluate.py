import logging
import os

from counterplay.cli.decorators import command, option
from counterplay.core import types as cptypes
from counterplay.core.management.common import (
    build_run_config,
    resolve_dataset,
    resolve_folds,
    run_config_options,
    split_folds_flag,
)
from counterplay.evaluation.harness import FoldResult, run_cv
from counterplay.evaluation.report import AccuracyReport, reports_to_csv, write_text

logger = logging.getLogger(__name__)


class EvaluateCommand:
    """Cross-validate one model on one dataset and report relation accuracies."""

    def __init__(self, ctx):
        self.ctx = ctx

    def run(self, config_path: str | None, folds, jobs: int | None, out: str | None, output_format: str, **flags):
        flags.update(split_folds_flag(folds))
        flags["jobs"] = jobs
        config = build_run_config(self.ctx.settings, config_path, flags)
        dataset = resolve_dataset(config)
        split = resolve_folds(config, dataset)
        spec = config.model_spec()

        def on_fold(result: FoldResult) -> None:
            logger.info("fold %d done: train %.2f%%, test %.2f%%", result.fold, result.train_accuracy, result.test_accuracy)

        with self.ctx.ui.spinner(f"Evaluating {spec.kind.value} {spec.label} on {split.k} folds..."):
            report = run_cv(dataset, split, spec, config.epochs, config.seed, jobs=config.jobs, on_fold=on_fold)
        report.dataset = self._dataset_name(config)
        report.meta["config"] = config.to_document()

        if out is not None:
            text = reports_to_csv([report]) if out.lower().endswith(".csv") else report.to_json()
            write_text(out, text)
        self._emit(report, output_format)
        if out is not None:
            self.ctx.ui.success(f"Report written to {out}")

    def _dataset_name(self, config) -> str:
        if config.dataset is not None:
            return os.path.splitext(os.path.basename(config.dataset))[0]
        return config.generator

    def _emit(self, report: AccuracyReport, output_format: str) -> None:
        if output_format == "json":
            self.ctx.ui.raw(report.to_json())
        elif output_format == "csv":
            self.ctx.ui.raw(reports_to_csv([report]))
        else:
            row = report.row()
            self.ctx.ui.table(list(row), [list(row.values())], title="Relation accuracy (%)")


@command(name="evaluate", help="Cross-validate a rating model and report pairwise-relation accuracy.")
@run_config_options
@option("--folds", type="folds", default=None, help="Number of folds, or a fold CSV written by `split`.")
@option("--jobs", type="int", default=None, help="Folds evaluated in parallel (defaults to COUNTERPLAY_JOBS).")
@option("--out", type="path", default=None, help="Report file; .csv writes a table row, anything else JSON.")
@option(
    "--format", "output_format", type=cptypes.Choice(("table", "json", "csv")), default="table",
    help="Report format on stdout.",
)
def evaluate_command(ctx, config_path, folds, jobs, out, output_format, **flags):
    EvaluateCommand(ctx).run(config_path, folds, jobs, out, output_format, **flags)
