"""End-to-end CLI behavior: output text, JSON schema, exit codes, determinism."""

import json

import pytest

from monowit.cli import main

SESSION = """\
ring n=8
ideal I = x1^4, x2^7, x3^5, x1^3*x4^2, x2^4*x4^2, x3*x4^2, x4^5, x4^2*x8^2, x1*x8^8
"""

SIX_VAR = """\
ring n=6
ideal I = x1*x3^5, x2*x5^3, x2*x4^4, x1^5*x4^2, x1*x6^8
"""

PATH_GRAPH = """\
ring vars=t1,t2,t3
clutter C = {t1,t2},{t2,t3}
"""

SYM = "sym S = n:3 exps:1,3,3\n"


@pytest.fixture
def problem(tmp_path):
    def write(text):
        path = tmp_path / "problem.txt"
        path.write_text(text)
        return str(path)

    return write


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestAssprimes:
    def test_session_golden(self, problem, capsys):
        code, out, _ = run(capsys, ["assprimes", problem(SESSION)])
        assert code == 0
        assert out == "P_0 = (x1, x2, x3, x4)\nP_1 = (x1, x2, x3, x4, x8)\n"

    def test_deterministic_output(self, problem, capsys):
        path = problem(SESSION)
        _, first, _ = run(capsys, ["assprimes", path])
        _, second, _ = run(capsys, ["assprimes", path])
        assert first == second

    def test_deterministic_json(self, problem, capsys):
        path = problem(SESSION)
        _, first, _ = run(capsys, ["decompose", path, "--format", "json"])
        _, second, _ = run(capsys, ["decompose", path, "--format", "json"])
        assert first == second


class TestDecompose:
    def test_session_components(self, problem, capsys):
        code, out, _ = run(capsys, ["decompose", problem(SESSION)])
        assert code == 0
        assert "  Q_0 = (x1, x2^7, x3^5, x4^2)" in out
        assert "  Q_1 = (x1^3, x2^4, x3, x4^5, x8^2)" in out
        assert "  Q_2 = (x1^4, x2^7, x3^5, x4^2, x8^8)" in out
        assert "  P_1 = (x1, x2, x3, x4, x8)" in out

    def test_json_schema(self, problem, capsys):
        code, out, _ = run(capsys, ["decompose", problem(SESSION), "--format", "json"])
        assert code == 0
        doc = json.loads(out)
        assert set(doc) == {
            "ring", "ideal", "components", "associated_primes", "witness", "verified",
        }
        assert doc["ring"]["n"] == 8
        assert {"x1": 1, "x2": 7, "x3": 5, "x4": 2} in doc["components"]
        assert ["x1", "x2", "x3", "x4"] in doc["associated_primes"]
        assert doc["witness"] is None and doc["verified"] is None


class TestWitness:
    def test_session_with_offsets(self, problem, capsys):
        code, out, _ = run(capsys, [
            "witness", problem(SESSION), "--prime", "x1,x2,x3,x4",
            "--offset", "x5=5", "--offset", "x6=5",
            "--offset", "x7=2", "--offset", "x8=5",
        ])
        assert code == 0
        assert "v = x2^6*x3^4*x4*x5^5*x6^5*x7^2*x8^13" in out
        assert out.rstrip().endswith("VERIFIED")

    def test_second_prime_by_index_needs_component(self, problem, capsys):
        code, out, err = run(capsys, ["witness", problem(SESSION), "--prime", "1"])
        assert code == 1
        assert "Q_0 = (x1^3, x2^4, x3, x4^5, x8^2)" in out
        assert "--component" in err

    def test_second_prime_with_component(self, problem, capsys):
        code, out, _ = run(capsys, [
            "witness", problem(SESSION), "--prime", "1", "--component", "0",
            "--offset", "x5=2", "--offset", "x7=8",
        ])
        assert code == 0
        assert "v = x1^2*x2^3*x4^4*x5^2*x7^8*x8" in out

    def test_list_mode(self, problem, capsys):
        code, out, _ = run(capsys, ["witness", problem(SESSION), "--list"])
        assert code == 0
        assert "P_0 = (x1, x2, x3, x4)" in out
        assert "  Q_0 = (x1, x2^7, x3^5, x4^2)" in out

    def test_seeded_offsets_reproduce(self, problem, capsys):
        path = problem(SESSION)
        args = ["witness", path, "--prime", "0", "--seed", "12"]
        code, first, _ = run(capsys, args)
        assert code == 0 and "VERIFIED" in first
        _, second, _ = run(capsys, args)
        assert first == second

    def test_seed_and_offset_conflict(self, problem, capsys):
        code, _, err = run(capsys, [
            "witness", problem(SESSION), "--prime", "0",
            "--seed", "1", "--offset", "x5=1",
        ])
        assert code == 1 and "mutually exclusive" in err

    def test_json_includes_witness(self, problem, capsys):
        code, out, _ = run(capsys, [
            "witness", problem(SESSION), "--prime", "0", "--format", "json",
        ])
        assert code == 0
        doc = json.loads(out)
        assert doc["verified"] is True
        assert doc["witness"] == {"x2": 6, "x3": 4, "x4": 1, "x8": 8}

    def test_unknown_prime(self, problem, capsys):
        code, _, err = run(capsys, ["witness", problem(SESSION), "--prime", "x5"])
        assert code == 1 and "not an associated prime" in err

    def test_offset_on_prime_variable(self, problem, capsys):
        code, _, err = run(capsys, [
            "witness", problem(SESSION), "--prime", "0", "--offset", "x1=1",
        ])
        assert code == 1 and "prime variable" in err


class TestVerify:
    def test_failing_candidate_exits_two(self, problem, capsys):
        code, out, _ = run(capsys, [
            "verify", problem(SIX_VAR), "--prime", "x1,x2", "--v", "x3^5*x5^2",
        ])
        assert code == 2
        assert out.rstrip().endswith("FAILED")

    def test_passing_candidates(self, problem, capsys):
        path = problem(SIX_VAR)
        for candidate in ("x3^5*x4^4", "x3^5*x5^3", "x6^8*x4^4", "x6^8*x5^3"):
            code, out, _ = run(capsys, [
                "verify", path, "--prime", "x1,x2", "--v", candidate,
            ])
            assert code == 0
            assert "(I : " in out and "VERIFIED" in out

    def test_bad_monomial_is_usage_error(self, problem, capsys):
        code, _, err = run(capsys, [
            "verify", problem(SIX_VAR), "--prime", "x1,x2", "--v", "x1^0",
        ])
        assert code == 1 and "positive" in err


class TestColon:
    def test_session_colon(self, problem, capsys):
        code, out, _ = run(capsys, [
            "colon", problem(SESSION),
            "--v", "x2^6*x3^4*x4*x5^5*x6^5*x7^2*x8^13",
        ])
        assert code == 0
        assert out == "(I : x2^6*x3^4*x4*x5^5*x6^5*x7^2*x8^13) = (x1, x2, x3, x4)\n"


class TestBorel:
    def test_positive_with_witness(self, problem, capsys):
        text = "ring n=2\nideal I = x1^2, x1*x2\n"
        code, out, _ = run(capsys, [
            "borel", problem(text), "--prime", "x1",
        ])
        assert code == 0
        assert "Borel type: yes" in out
        assert "P_0 = (x1)" in out
        assert "v = x2" in out and "VERIFIED" in out

    def test_negative_certificate(self, problem, capsys):
        text = "ring n=2\nideal I = x2\n"
        code, out, _ = run(capsys, ["borel", problem(text)])
        assert code == 0
        assert "Borel type: no" in out
        assert "certificate: u = x2, i = x2, j = x1" in out

    def test_witness_request_on_non_borel_ideal(self, problem, capsys):
        text = "ring n=2\nideal I = x2\n"
        code, _, err = run(capsys, ["borel", problem(text), "--prime", "x2"])
        assert code == 1 and "not of Borel type" in err


class TestUniqueness:
    def test_six_var_not_unique(self, problem, capsys):
        code, out, _ = run(capsys, [
            "uniqueness", problem(SIX_VAR), "--prime", "x1,x2",
        ])
        assert code == 0
        assert "unique: no" in out
        assert "v1 = " in out and "v2 = " in out
        assert "VERIFIED" in out

    def test_unique_case(self, problem, capsys):
        text = "ring n=2\nideal I = x1^2, x2^3\n"
        code, out, _ = run(capsys, [
            "uniqueness", problem(text), "--prime", "x1,x2",
        ])
        assert code == 0
        assert "unique: yes" in out and "v1 = x1*x2^2" in out


class TestClutterBase:
    def test_path_graph(self, problem, capsys):
        code, out, _ = run(capsys, [
            "clutter-base", problem(PATH_GRAPH), "--prime", "t2",
        ])
        assert code == 0
        assert "A = (t1, t3)" in out
        assert "v = t1*t3" in out
        assert "VERIFIED" in out

    def test_non_cover_prime(self, problem, capsys):
        code, _, err = run(capsys, [
            "clutter-base", problem(PATH_GRAPH), "--prime", "t1",
        ])
        assert code == 1 and "not an associated prime" in err


class TestSymgen:
    def test_generators(self, problem, capsys):
        code, out, _ = run(capsys, ["symgen", problem(SYM)])
        assert code == 0
        assert out == "I = (x1^3*x2^3*x3, x1^3*x2*x3^3, x1*x2^3*x3^3)\n"

    def test_with_witness(self, problem, capsys):
        code, out, _ = run(capsys, [
            "symgen", problem(SYM), "--prime", "x1,x2",
            "--value-index", "1", "--b", "3",
        ])
        assert code == 0
        assert "P = (x1, x2)" in out
        assert "v = x1^2*x2^2*x3^3" in out
        assert "VERIFIED" in out


class TestErrorPaths:
    def test_missing_file(self, capsys):
        code, _, err = run(capsys, ["assprimes", "/nonexistent/problem.txt"])
        assert code == 1 and "cannot read" in err

    def test_parse_error_in_file(self, problem, capsys):
        code, _, err = run(capsys, ["assprimes", problem("ring n=2\nideal I = y\n")])
        assert code == 1 and "unknown variable" in err

    def test_missing_stanza(self, problem, capsys):
        code, _, err = run(capsys, ["assprimes", problem("ring n=2\n")])
        assert code == 1 and "declares no ideal" in err

    def test_usage_error_maps_to_one(self, capsys):
        assert main([]) == 1
        capsys.readouterr()
        assert main(["witness"]) == 1
        capsys.readouterr()

    def test_help_exits_zero(self, capsys):
        assert main(["--help"]) == 0
        capsys.readouterr()
