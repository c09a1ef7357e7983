import sys

import rich_click as click

from counterplay.core.management.commands.convert import convert_command
from counterplay.core.management.commands.evaluate import evaluate_command
from counterplay.core.management.commands.generate import generate_command
from counterplay.core.management.commands.inspect import inspect_command
from counterplay.core.management.commands.reproduce import reproduce_command
from counterplay.core.management.commands.split import split_command
from counterplay.core.management.commands.train import train_command

COMMANDS = {
    "generate": generate_command,
    "split": split_command,
    "convert": convert_command,
    "train": train_command,
    "evaluate": evaluate_command,
    "reproduce": reproduce_command,
    "inspect": inspect_command,
}


@click.group(invoke_without_command=True)
@click.option("--quiet", is_flag=True, help="Only log errors.")
@click.option("--verbose", is_flag=True, help="Log progress (per fold, per table cell).")
@click.version_option(package_name="counterplay")
@click.pass_context
def cli(ctx, quiet, verbose):
    """Ratings that learn who counters whom."""
    from counterplay.conf import configure_logging, settings

    configure_logging(verbose=verbose, quiet=quiet, debug=settings.debug_enabled)
    if ctx.invoked_subcommand is None:
        click.echo(ctx.get_help())


for name, cmd in COMMANDS.items():
    cli.add_command(cmd, name=name)


class CounterplayUtility:
    def __init__(self, argv=None):
        self.argv = argv or sys.argv[:]

    def execute(self):
        cli.main(args=self.argv[1:], prog_name="counterplay")


def execute_from_command_line(argv=None):
    utility = CounterplayUtility(argv)
    utility.execute()
