import json

import pytest

from apps.certify.cli import cli_main
from apps.certify.models import CertificationRun

ROTATION = {"field": "Q", "dim": 2, "generators": [[["0", "-1"], ["1", "0"]]]}
SHEAR = {"field": "Q", "dim": 2, "generators": [[["1", "1"], ["0", "1"]]]}
REFLECTIONS = {
    "field": "Q",
    "dim": 2,
    "generators": [[["-1", "0"], ["0", "1"]], [["-1", "1"], ["0", "1"]]],
}


def run(*args):
    return cli_main(["rigidity", *[str(arg) for arg in args]])


def output(capsys):
    captured = capsys.readouterr()
    return json.loads(captured.out), captured.err


class TestCertifyCommand:
    """Test the certify command."""

    def test_finite(self, write_json, capsys):
        """Test a finite group exits 0."""
        assert run("certify", write_json(ROTATION)) == 0
        data, _ = output(capsys)
        assert data["verdict"] == "finite"
        assert data["order"] == 4
        assert data["schema"] == 1

    def test_infinite(self, write_json, capsys):
        """Test an infinite group exits 1."""
        assert run("certify", write_json(SHEAR)) == 1
        data, _ = output(capsys)
        assert data["verdict"] == "infinite"
        assert data["witness"]["kind"] == "non_torsion_element"

    def test_inconclusive(self, write_json, capsys):
        """Test a capped closure exits 2."""
        code = run("certify", write_json(REFLECTIONS), "--cap", 50, "--word-length", 1)
        assert code == 2
        data, _ = output(capsys)
        assert data["verdict"] == "inconclusive"

    def test_word_witness(self, write_json, capsys):
        """Test the default short-word search."""
        assert run("certify", write_json(REFLECTIONS)) == 1
        data, _ = output(capsys)
        assert data["witness"]["word"] == ["g0", "g1"]

    def test_cayley_dot(self, write_json, tmp_path, capsys):
        """Test the Cayley graph export."""
        path = tmp_path / "cayley.gv"
        assert run("certify", write_json(ROTATION), "--dot", path) == 0
        data, err = output(capsys)
        assert len(data["closure"]["cayley"]) == 8
        assert path.read_text().count("->") == 8
        assert "wrote" in err

    def test_form_file(self, write_json, capsys):
        """Test a form read from its own file."""
        form = write_json({"rows": [["1", "0"], ["0", "1"]]}, name="form.json")
        assert run("certify", write_json(ROTATION), "--form", form) == 0
        data, _ = output(capsys)
        assert data["form"]["holds"] is True

    @pytest.mark.django_db
    def test_persist(self, write_json, capsys):
        """Test storing the run."""
        assert run("certify", write_json(ROTATION), "--persist") == 0
        _, err = output(capsys)
        assert CertificationRun.objects.count() == 1
        assert "stored run" in err

    def test_malformed_json(self, tmp_path, capsys):
        """Test that a broken JSON file exits 64."""
        path = tmp_path / "broken.json"
        path.write_text("{not json", encoding="utf-8")
        assert run("certify", path) == 64
        assert capsys.readouterr().err.startswith("certify: input: malformed JSON")

    def test_missing_file(self, tmp_path, capsys):
        """Test an unreadable input file."""
        assert run("certify", tmp_path / "absent.json") == 64
        assert "cannot read" in capsys.readouterr().err

    def test_bad_scalar(self, write_json, capsys):
        """Test that the diagnostic names the offending entry."""
        data = {"field": "Q", "dim": 1, "generators": [[["1/0"]]]}
        assert run("certify", write_json(data)) == 64
        assert "generators[0][0][0]" in capsys.readouterr().err

    def test_precondition_violation(self, write_json, capsys):
        """Test that a composite characteristic exits 65."""
        data = {"field": ["Fp", 4], "dim": 1, "generators": [[["1"]]]}
        assert run("certify", write_json(data)) == 65
        assert "not a prime" in capsys.readouterr().err

    def test_singular_generator(self, write_json):
        """Test that a singular generator exits 65."""
        data = {"field": "Q", "dim": 2, "generators": [[["1", "1"], ["1", "1"]]]}
        assert run("certify", write_json(data)) == 65

    def test_bad_option(self, write_json):
        """Test an option value argparse refuses."""
        assert run("certify", write_json(ROTATION), "--cap", "many") == 64

    def test_zero_cap(self, write_json, capsys):
        """Test that --cap 0 is a usage error."""
        assert run("certify", write_json(ROTATION), "--cap", 0) == 64
        assert "cap" in capsys.readouterr().err


class TestOrderCommand:
    """Test the order command."""

    def test_order(self, write_json, capsys):
        """Test the order of a quarter turn."""
        data = {"field": "Q", "dim": 2, "rows": [["0", "-1"], ["1", "0"]]}
        assert run("order", write_json(data)) == 0
        result, _ = output(capsys)
        assert result["order"] == 4

    def test_check(self, write_json, capsys):
        """Test agreement with the brute-force search over F_2."""
        data = {"field": ["Fp", 2], "dim": 2, "rows": [["0", "1"], ["1", "1"]]}
        assert run("order", write_json(data), "--check") == 0
        result, _ = output(capsys)
        assert result["order"] == 3
        assert result["extension_degree"] == 2
        assert result["check"] == {"cap": 5000, "brute_force_order": 3, "agrees": True}

    def test_check_infinite(self, write_json, capsys):
        """Test the brute-force cap on an element of infinite order."""
        data = {"field": "Q", "dim": 2, "rows": [["1", "1"], ["0", "1"]]}
        assert run("order", write_json(data), "--check", "--cap", 20) == 0
        result, _ = output(capsys)
        assert result["order"] == "infinite"
        assert result["check"]["brute_force_order"] == "cap_exceeded"

    def test_check_zero_cap(self, write_json):
        """Test that --check with --cap 0 is a usage error."""
        data = {"field": "Q", "dim": 2, "rows": [["0", "-1"], ["1", "0"]]}
        assert run("order", write_json(data), "--check", "--cap", 0) == 64


class TestKroneckerCommand:
    """Test the kronecker command."""

    def test_degree(self, capsys):
        """Test the degree-3 set."""
        assert run("kronecker", 3) == 0
        data, _ = output(capsys)
        assert data["count"] == 10

    def test_both_methods(self, capsys):
        """Test that both enumerations agree at degree 2."""
        assert run("kronecker", 2, "--method", "both") == 0
        data, _ = output(capsys)
        assert data["count"] == 6
        assert data["agree"] is True

    def test_membership(self, capsys):
        """Test a polynomial given as text."""
        assert run("kronecker", "X^2 - 2") == 0
        data, _ = output(capsys)
        assert data["kronecker"] is False

    def test_degree_out_of_range(self, capsys):
        """Test that a degree beyond the enumeration limit exits 65."""
        assert run("kronecker", 9) == 65
        assert capsys.readouterr().err.startswith("kronecker: degree must be between")

    def test_bad_method(self):
        """Test an unknown method name."""
        assert run("kronecker", 2, "--method", "guess") == 64


class TestBuildingCommand:
    """Test the building command."""

    def test_ball_summary(self, capsys):
        """Test the ball summary."""
        assert run("building", "ball", "-p", 2, "-d", 2, "-r", 2) == 0
        data, _ = output(capsys)
        assert data["vertex_count"] == 10
        assert data["edge_count"] == 9

    def test_ball_json_and_dot(self, tmp_path, capsys):
        """Test the full listing and dot export."""
        path = tmp_path / "ball.dot"
        assert run("building", "ball", "-p", 2, "-d", 3, "-r", 1, "--json", "--dot", path) == 0
        data, _ = output(capsys)
        assert len(data["vertices"]) == 15
        assert len(data["edges"]) == 35
        assert path.read_text().startswith("graph building {")

    def test_ball_not_prime(self):
        """Test a composite p."""
        assert run("building", "ball", "-p", 4, "-d", 2, "-r", 1) == 65

    def test_missing_action(self):
        """Test that a subcommand action is required."""
        assert run("building") == 64

    def test_fix_found(self, write_json, capsys):
        """Test a rotation with fixed vertices."""
        assert run("building", "fix", write_json(ROTATION), "-p", 2, "-r", 1) == 0
        data, _ = output(capsys)
        assert len(data["fixed"]) == 2

    def test_fix_type_rotation(self, write_json, capsys):
        """Test generators that rotate types."""
        data = {"field": "Q", "dim": 2, "generators": [[["2", "0"], ["0", "1"]]]}
        assert run("building", "fix", write_json(data), "-p", 2, "-r", 1) == 1
        report, _ = output(capsys)
        assert report["type_rotation"] is True

    def test_fix_inconclusive(self, write_json, capsys):
        """Test a translation with no fixed vertex in the ball."""
        data = {"field": "Q", "dim": 2, "generators": [[["4", "0"], ["0", "1"]]]}
        assert run("building", "fix", write_json(data), "-p", 2, "-r", 1) == 2
        report, _ = output(capsys)
        assert report["fixed"] == []
        assert report["boundary_escape"] is True


class TestSelftestCommand:
    """Test the selftest command."""

    def test_single_suite(self, capsys):
        """Test one fast suite."""
        assert run("selftest", "--samples", 1, "--seed", 3, "--suite", "closure") == 0
        data, _ = output(capsys)
        assert data["passed"] is True
        assert list(data["suites"]) == ["closure"]
        assert data["seed"] == 3

    def test_unknown_suite(self):
        """Test an unknown suite name."""
        assert run("selftest", "--suite", "everything") == 64


class TestDispatch:
    """Test subcommand dispatch."""

    def test_no_command(self, capsys):
        """Test a missing subcommand."""
        assert cli_main(["rigidity"]) == 64
        assert capsys.readouterr().err.startswith("usage: rigidity")

    def test_unknown_command(self):
        """Test an unknown subcommand."""
        assert run("migrate") == 64

    def test_help(self, capsys):
        """Test that --help exits 0."""
        assert run("order", "--help") == 0
        assert "--check" in capsys.readouterr().out
