from apps.core.exceptions import EX_INFINITE
from apps.core.management.base import RigidityCommand

from ...services import order_request


class Command(RigidityCommand):
    help = "Order of a single invertible matrix"

    def add_arguments(self, parser):
        parser.add_argument("input", help="matrix JSON file, or - for stdin")
        parser.add_argument(
            "--check", action="store_true", help="compare with the brute-force power search"
        )
        parser.add_argument("--cap", type=int, help="brute-force cap (default BRUTE_FORCE_CAP)")

    def handle(self, *args, **options):
        _, payload, agrees = order_request(
            self.read_json(options["input"]), check=options["check"], cap=options["cap"]
        )
        self.emit(payload)
        if agrees is False:
            self.stderr.write("brute-force order disagrees")
            self.exit_status = EX_INFINITE
