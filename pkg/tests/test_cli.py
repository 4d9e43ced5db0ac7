import subprocess
import sys

import pytest

from groupeq.cli import main
from groupeq.groups import cyclic_group


@pytest.fixture()
def z2_path(group_file):
    return group_file(cyclic_group(2))


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_group_validate(capsys, z2_path):
    code, out = run(capsys, "group", "validate", z2_path)
    assert code == 0
    assert out == "GROUP z2\nORDER 2\nGENERATORS a\n"


def test_group_validate_bad_file(capsys, tmp_path):
    bad = tmp_path / "bad.grp"
    bad.write_text("group x\nelements e\n")
    code, out = run(capsys, "group", "validate", str(bad))
    assert code == 3
    assert out.startswith("ERROR")


def test_group_validate_missing_file(capsys):
    code, out = run(capsys, "group", "validate", "/nonexistent.grp")
    assert code == 3


def test_eq_solve_both(capsys, z2_path):
    code, out = run(
        capsys, "eq", "solve", "--group", z2_path, "--arity", "1",
        "--method", "both", "a x1",
    )
    assert code == 0
    assert out == "MEMBER true\nWITNESS x1=a\n"


def test_eq_solve_dfa_negative(capsys, z2_path):
    code, out = run(
        capsys, "eq", "solve", "--group", z2_path, "--arity", "1",
        "--method", "dfa", "a",
    )
    assert code == 1
    assert out == "MEMBER false\n"


def test_eq_solve_brute_witness(capsys, z2_path):
    code, out = run(
        capsys, "eq", "solve", "--group", z2_path, "--arity", "2",
        "--method", "brute", "x1 x2",
    )
    assert code == 0
    assert "WITNESS x1=e x2=e" in out


def test_eq_solve_syntax_error(capsys, z2_path):
    code, out = run(
        capsys, "eq", "solve", "--group", z2_path, "--arity", "0",
        "--method", "dfa", "x1",
    )
    assert code == 3
    assert out.startswith("ERROR")


def test_eq_build_dfa_table(capsys, z2_path):
    code, out = run(
        capsys, "eq", "build-dfa", "--group", z2_path, "--arity", "1",
        "--format", "table",
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "STATES 4"
    assert lines[1] == "ACCEPTING 3"
    assert lines[2] == "state\ta\tx1\tx1^-1\taccepting"
    assert len(lines) == 3 + 4


def test_eq_build_dfa_minimize_and_output(capsys, tmp_path, z2_path):
    out_path = tmp_path / "dfa.dot"
    code, out = run(
        capsys, "eq", "build-dfa", "--group", z2_path, "--arity", "0",
        "--minimize", "--format", "dot", "-o", str(out_path),
    )
    assert code == 0
    assert "STATES 2" in out
    text = out_path.read_text()
    assert text.startswith("digraph dfa {")
    assert "doublecircle" in text


def test_eq_build_dfa_limit(capsys, z2_path):
    code, out = run(
        capsys, "eq", "build-dfa", "--group", z2_path, "--arity", "1",
        "--limit", "2",
    )
    assert code == 2
    assert out.startswith("ERROR")


def test_eq_enumerate(capsys, z2_path):
    code, out = run(
        capsys, "eq", "enumerate", "--group", z2_path, "--arity", "1",
        "--maxlen", "1",
    )
    assert code == 0
    assert out == "\nx1\nx1^-1\n"


def test_eq_dovetail_free(capsys):
    code, out = run(
        capsys, "eq", "dovetail", "--oracle", "free:1", "--arity", "1",
        "--max-steps", "8", "x1 x1 a^-1 a^-1",
    )
    assert code == 0
    assert out == "SOLVED m=4\nWITNESS x1 a\n"


def test_eq_dovetail_group(capsys, z2_path):
    code, out = run(
        capsys, "eq", "dovetail", "--oracle", f"group:{z2_path}", "--arity", "1",
        "--max-steps", "8", "a x1",
    )
    assert code == 0
    assert out.startswith("SOLVED m=2\nWITNESS x1 a")


def test_eq_dovetail_exhausted(capsys):
    code, out = run(
        capsys, "eq", "dovetail", "--oracle", "free:2", "--arity", "1",
        "--max-steps", "3", "a",
    )
    assert code == 2
    assert out == "EXHAUSTED m=3\n"


def test_eq_dovetail_bad_oracle(capsys):
    code, out = run(
        capsys, "eq", "dovetail", "--oracle", "magic:1", "--arity", "1",
        "--max-steps", "3", "a",
    )
    assert code == 3


def test_cfl_pump_auto_witness(capsys):
    code, out = run(
        capsys, "cfl", "pump", "--set", "integers", "--p", "2",
        "--auto-witness", "--tmax", "2",
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert "WITNESS-MULTIPLIER 10" in lines
    assert "WORD a^20 b^10" in lines
    assert lines[-1] == "REFUTED p=2"


def test_cfl_pump_word_not_refuted(capsys):
    code, out = run(
        capsys, "cfl", "pump", "--set", "all", "--p", "2", "--word", "aabb",
    )
    assert code == 1
    assert out.strip().split("\n")[-1] == "NOT-REFUTED"


def test_cfl_pump_list_set(capsys):
    code, out = run(
        capsys, "cfl", "pump", "--set", "list:1/1", "--p", "1",
        "--word", "aabb", "--tmax", "2",
    )
    assert code == 0
    assert out.strip().split("\n")[-1] == "REFUTED p=1"


def test_cfl_pump_input_errors(capsys):
    code, _ = run(capsys, "cfl", "pump", "--set", "integers", "--p", "2")
    assert code == 3
    code, _ = run(
        capsys, "cfl", "pump", "--set", "list:", "--p", "2", "--word", "ab"
    )
    assert code == 3
    code, _ = run(
        capsys, "cfl", "pump", "--set", "integers", "--p", "2", "--word", "ba"
    )
    assert code == 3


def test_cfl_demo_z(capsys):
    code, out = run(capsys, "cfl", "demo-z", "--max-m", "6", "--max-n", "3")
    assert code == 0
    lines = out.strip().split("\n")
    assert "PAIR 6 3" in lines
    assert "PAIR 5 3" not in lines
    assert lines[-1] == "CROSSCHECK OK"
    assert lines[-2] == "COUNT 11"


def test_bad_arguments_exit_3(capsys):
    assert main(["eq", "solve", "--arity", "1", "equation"]) == 3
    assert main(["nonsense"]) == 3


def test_outputs_deterministic(capsys, z2_path):
    argv = ["eq", "build-dfa", "--group", z2_path, "--arity", "1", "--format", "dot"]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "groupeq", "cfl", "demo-z", "--max-m", "2", "--max-n", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "CROSSCHECK OK" in proc.stdout
