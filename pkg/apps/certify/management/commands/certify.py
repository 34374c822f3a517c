from apps.core.exceptions import MalformedInput
from apps.core.management.base import RigidityCommand
from apps.grouporder.export import cayley_to_dot

from ...services import certify_request


class Command(RigidityCommand):
    help = "Certify finiteness of the matrix group generated by the matrices in a JSON file"

    def add_arguments(self, parser):
        parser.add_argument("input", help="generator-set JSON file, or - for stdin")
        parser.add_argument("--cap", type=int, help="closure cap (default CLOSURE_CAP)")
        parser.add_argument(
            "--cayley", action="store_true", help="include the Cayley edge list when finite"
        )
        parser.add_argument("--dot", metavar="PATH", help="write the Cayley graph as graphviz dot")
        parser.add_argument("--form", metavar="PATH", help="rational form JSON to check for invariance")
        parser.add_argument(
            "--word-length", type=int, help="longest word searched for a witness"
        )
        parser.add_argument(
            "--persist", action="store_true", help="store the run in the database"
        )

    def handle(self, *args, **options):
        data = self.read_json(options["input"])
        if options["form"]:
            if not isinstance(data, dict):
                raise MalformedInput("input: expected a JSON object")
            form = self.read_json(options["form"], label="form")
            if isinstance(form, dict):
                form = form.get("rows")
            data = {**data, "form": form}
        with_cayley = options["cayley"] or bool(options["dot"])
        certificate, payload, run = certify_request(
            data,
            cap=options["cap"],
            with_cayley=with_cayley,
            persist=options["persist"],
            word_length=options["word_length"],
        )
        if options["dot"]:
            if certificate.closure is not None and certificate.closure.is_finite:
                self.write_text(options["dot"], cayley_to_dot(certificate.closure))
            else:
                self.stderr.write(f"no Cayley graph: verdict {certificate.verdict.value}")
        if run is not None:
            self.stderr.write(f"stored run {run.pk}")
        self.emit(payload)
        self.exit_status = certificate.exit_code
