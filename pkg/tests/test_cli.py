import json

import pytest

from gencluster.cli import main

from conftest import seed_path

WORKED = str(seed_path("rank2_generalized_trivial.json"))
A2 = str(seed_path("a2_trivial.json"))


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestMutateCommand:
    def test_worked_example(self, capsys):
        code, out, _ = run_cli(capsys, "mutate", "--seed", WORKED, "--word", "1")
        assert code == 0
        assert "x1 = (x2^2 + 2*x2 + 1)/x1" in out

    def test_involution_word(self, capsys):
        code, out, _ = run_cli(capsys, "mutate", "--seed", WORKED, "--word", "1 1")
        _, base, _ = run_cli(capsys, "mutate", "--seed", WORKED, "--word", "")
        assert code == 0
        assert out == base

    def test_epsilon_flag(self, capsys):
        _, plus, _ = run_cli(capsys, "mutate", "--seed", WORKED, "--word", "1 2", "--epsilon", "+1")
        _, minus, _ = run_cli(capsys, "mutate", "--seed", WORKED, "--word", "1 2", "--epsilon", "-1")
        assert plus == minus

    def test_bad_direction_exits_2(self, capsys):
        for word in ("0", "3"):
            code, _, err = run_cli(capsys, "mutate", "--seed", WORKED, "--word", word)
            assert code == 2
            assert "out of range" in err

    def test_json_format(self, capsys):
        code, out, _ = run_cli(capsys, "mutate", "--seed", WORKED, "--word", "1", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["x"][0] == "(x2^2 + 2*x2 + 1)/x1"

    def test_missing_file_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "mutate", "--seed", "no-such-file.json", "--word", "1")
        assert code == 2
        assert err


class TestOrbitCommand:
    def test_a2_unlabeled(self, capsys):
        code, out, _ = run_cli(
            capsys, "orbit", "--seed", A2, "--mode", "unlabeled", "--max-depth", "10"
        )
        assert code == 0
        assert "nodes: 5" in out
        assert "closed: true" in out

    def test_depth_zero(self, capsys):
        code, out, _ = run_cli(capsys, "orbit", "--seed", A2, "--max-depth", "0")
        assert code == 0
        assert "nodes: 1" in out
        assert "closed: false" in out

    def test_dot_format(self, capsys):
        code, out, _ = run_cli(
            capsys, "orbit", "--seed", A2, "--mode", "unlabeled", "--format", "dot"
        )
        assert code == 0
        assert out.startswith("digraph exchange {")

    def test_csv_format(self, capsys):
        code, out, _ = run_cli(capsys, "orbit", "--seed", A2, "--format", "csv")
        assert code == 0
        assert out.splitlines()[0] == "source,direction,target"


class TestFpolyCommand:
    def test_initial_rows(self, capsys):
        code, out, _ = run_cli(capsys, "fpoly", "--seed", A2, "--word", "")
        assert code == 0
        assert "t=0 i=1  F = 1  c = (1, 0)  g = (1, 0)" in out

    def test_worked_row(self, capsys):
        code, out, _ = run_cli(capsys, "fpoly", "--seed", WORKED, "--word", "1")
        assert code == 0
        assert "F = u1^2 + 2*u1 + 1" in out
        assert "c = (-1, 0)" in out
        assert "g = (-1, 2)" in out

    def test_csv(self, capsys):
        code, out, _ = run_cli(capsys, "fpoly", "--seed", WORKED, "--word", "1", "--format", "csv")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "t,i,F,c,g"
        assert len(lines) == 5


class TestVerifyCommand:
    def test_involution_passes(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--seed", WORKED, "--suite", "involution", "--budget", "2"
        )
        assert code == 0
        assert out.splitlines()[-1].startswith("PASS suite=involution")

    def test_separation_passes(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--seed", WORKED, "--suite", "separation", "--budget", "2"
        )
        assert code == 0

    def test_unknown_suite_rejected_by_argparse(self, capsys):
        with pytest.raises(SystemExit):
            main(["verify", "--seed", WORKED, "--suite", "bogus"])


class TestDeterminism:
    def test_orbit_byte_identical(self, capsys):
        args = ("orbit", "--seed", WORKED, "--max-depth", "12", "--format", "dot")
        _, first, _ = run_cli(capsys, *args)
        _, second, _ = run_cli(capsys, *args)
        assert first == second

    def test_fpoly_byte_identical(self, capsys):
        args = ("fpoly", "--seed", WORKED, "--word", "1 2 1", "--format", "csv")
        _, first, _ = run_cli(capsys, *args)
        _, second, _ = run_cli(capsys, *args)
        assert first == second
