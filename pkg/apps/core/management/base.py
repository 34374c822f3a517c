"""
Shared plumbing for the rigidity management commands.
"""

import json
import logging
import sys

from django.core.management.base import BaseCommand, CommandError

from apps.core.exceptions import EX_OK, MalformedInput, RigidityError
from apps.core.serializers import render_json


class RigidityCommand(BaseCommand):
    """
    Base command: JSON in from files, sorted JSON out on stdout, domain
    errors turned into CommandError carrying the matching exit status.

    ``exit_status`` holds the status of a run that completed normally (for
    instance 1 for an infinite verdict).
    """

    requires_system_checks = []
    exit_status = EX_OK

    def read_json(self, path, label="input"):
        """
        Parse a JSON file; "-" reads standard input.
        """
        try:
            if path == "-":
                return json.load(sys.stdin)
            with open(path, encoding="utf-8") as handle:
                return json.load(handle)
        except OSError as exc:
            raise MalformedInput(f"{label}: cannot read {path}: {exc.strerror}") from exc
        except json.JSONDecodeError as exc:
            raise MalformedInput(
                f"{label}: malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
            ) from exc

    def emit(self, data):
        self.stdout.write(render_json(data))

    def write_text(self, path, text):
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
        self.stderr.write(f"wrote {path}")

    def execute(self, *args, **options):
        self.exit_status = EX_OK
        if options.get("verbosity", 1) >= 2:
            logging.getLogger("apps").setLevel(logging.DEBUG)
        try:
            return super().execute(*args, **options)
        except RigidityError as exc:
            raise CommandError(str(exc), returncode=exc.exit_code) from exc

    def run_from_argv(self, argv):
        super().run_from_argv(argv)
        if self.exit_status:
            sys.exit(self.exit_status)
