from apps.core.exceptions import EX_INFINITE
from apps.core.management.base import RigidityCommand

from ...services import kronecker_request, membership_request


class Command(RigidityCommand):
    help = (
        "Monic integer polynomials of a degree with every root on the unit circle, "
        'or a membership test for one polynomial such as "X^3 - 2X + 5"'
    )

    def add_arguments(self, parser):
        parser.add_argument("degree", help="degree, or a polynomial in X")
        parser.add_argument(
            "--method", choices=["products", "bounds", "both"], default="products"
        )

    def handle(self, *args, **options):
        target = options["degree"].strip()
        if not target.lstrip("+").isdigit():
            self.emit(membership_request(target))
            return
        payload, agree = kronecker_request(int(target), options["method"])
        self.emit(payload)
        if not agree:
            self.stderr.write("products and bounds enumerations disagree")
            self.exit_status = EX_INFINITE
