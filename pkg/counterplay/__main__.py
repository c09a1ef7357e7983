import sys

from counterplay.core.management import execute_from_command_line


def main():
    """Entry point of the `counterplay` command."""
    execute_from_command_line(sys.argv)


if __name__ == "__main__":
    main()
