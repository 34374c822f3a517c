"""
Command-line entry point: ``python -m apps.certify <command> ...``.
"""

import os
import sys

import django
from django.core.management import call_command, get_commands, load_command_class
from django.core.management.base import CommandError

from apps.core.exceptions import EX_USAGE

COMMANDS = ("certify", "order", "kronecker", "building", "selftest")


def _usage(prog):
    return f"usage: {prog} {{{','.join(COMMANDS)}}} ..."


def cli_main(argv=None):
    """
    Run one subcommand and return its exit status.
    """
    argv = list(sys.argv if argv is None else argv)
    prog = os.path.basename(argv[0]) if argv else "rigidity"
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "config.settings")
    django.setup()
    if len(argv) < 2 or argv[1] not in COMMANDS:
        sys.stderr.write(_usage(prog) + "\n")
        return EX_USAGE
    name = argv[1]
    command = load_command_class(get_commands()[name], name)
    try:
        call_command(command, *argv[2:])
    except CommandError as exc:
        sys.stderr.write(f"{name}: {exc}\n")
        # argparse usage errors carry the default returncode 1
        return EX_USAGE if exc.returncode == 1 else exc.returncode
    except SystemExit as exc:
        # --help
        return exc.code or 0
    return command.exit_status
