from apps.core.exceptions import EX_INCONCLUSIVE, EX_INFINITE
from apps.core.management.base import RigidityCommand

from ...export import ball_to_dot
from ...services import ball_request, fixed_point_request


class Command(RigidityCommand):
    help = "Balls in the lattice building of GL_d over Q_p, and fixed-vertex search"

    def add_arguments(self, parser):
        actions = parser.add_subparsers(dest="action", required=True)

        ball = actions.add_parser("ball", help="ball around the standard lattice class")
        ball.add_argument("-p", type=int, required=True, help="prime")
        ball.add_argument("-d", type=int, required=True, help="lattice rank")
        ball.add_argument("-r", type=int, required=True, help="radius")
        ball.add_argument("--dot", metavar="PATH", help="write the ball as graphviz dot")
        ball.add_argument(
            "--json", action="store_true", help="print every vertex and edge, not a summary"
        )

        fix = actions.add_parser("fix", help="vertices fixed by rational generators")
        fix.add_argument("input", help="generator-set JSON file over Q, or - for stdin")
        fix.add_argument("-p", type=int, required=True, help="prime")
        fix.add_argument("-r", type=int, required=True, help="search radius")

    def handle(self, *args, **options):
        if options["action"] == "ball":
            self.handle_ball(options)
        else:
            self.handle_fix(options)

    def handle_ball(self, options):
        b, payload = ball_request(options["p"], options["d"], options["r"], full=options["json"])
        if options["dot"]:
            self.write_text(options["dot"], ball_to_dot(b))
        self.emit(payload)

    def handle_fix(self, options):
        report, payload = fixed_point_request(
            self.read_json(options["input"]), options["p"], options["r"]
        )
        self.emit(payload)
        if report.type_rotation:
            self.exit_status = EX_INFINITE
        elif not report.found:
            self.exit_status = EX_INCONCLUSIVE
