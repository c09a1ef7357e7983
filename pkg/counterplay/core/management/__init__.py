from counterplay.core.management.utility import cli, execute_from_command_line

__all__ = ["cli", "execute_from_command_line"]
