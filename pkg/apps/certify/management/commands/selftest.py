from apps.core.conf import rigidity_setting
from apps.core.exceptions import EX_INFINITE
from apps.core.management.base import RigidityCommand

from ...selftest import SUITES, run_selftest


class Command(RigidityCommand):
    help = "Run the oracle-equivalence and invariant suites"

    def add_arguments(self, parser):
        parser.add_argument("--samples", type=int, help="samples per case (default SELFTEST_SAMPLES)")
        parser.add_argument("--seed", type=int, help="random seed (default SELFTEST_SEED)")
        parser.add_argument(
            "--suite", action="append", choices=sorted(SUITES), help="run only this suite (repeatable)"
        )

    def handle(self, *args, **options):
        samples = options["samples"] or rigidity_setting("SELFTEST_SAMPLES")
        seed = options["seed"] if options["seed"] is not None else rigidity_setting("SELFTEST_SEED")
        results = run_selftest(samples, seed, options["suite"])
        passed = all(result.passed for result in results.values())
        self.emit(
            {
                "schema": rigidity_setting("SCHEMA_VERSION"),
                "samples": samples,
                "seed": seed,
                "passed": passed,
                "suites": {name: result.as_dict() for name, result in results.items()},
            }
        )
        if not passed:
            self.exit_status = EX_INFINITE
