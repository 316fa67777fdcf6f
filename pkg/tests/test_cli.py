import io
import json
import subprocess
import sys

from bideriv import Polynomial
from bideriv.cli import main, polynomial_from_payload, polynomial_payload
from conftest import F5, var


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_cli_stdin(capsys, monkeypatch, stdin_text, *argv):
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin_text))
    return run_cli(capsys, *argv)


# ----------------------------------------------------------------------
# happy paths
# ----------------------------------------------------------------------


def test_circ_text(capsys):
    code, out, err = run_cli(capsys, "circ", "-n", "2", "x1^2+x2^2", "x1*x2")
    assert code == 0 and out == "4*x1*x2\n" and err == ""


def test_circ_json_payload_round_trips(capsys):
    code, out, _ = run_cli(capsys, "circ", "-n", "2", "--json", "x1^2+x2^2", "x1*x2")
    assert code == 0
    result = json.loads(out)
    assert result["status"] == "ok" and result["diagnostics"] == []
    f = polynomial_from_payload(result["payload"])
    assert f == 4 * var(2, 1) * var(2, 2)


def test_grad_lists_components(capsys):
    code, out, _ = run_cli(capsys, "grad", "-n", "2", "x1^2*x2")
    assert code == 0
    assert out == "d/dx1: 2*x1*x2\nd/dx2: x1^2\n"


def test_bracket_command(capsys):
    code, out, _ = run_cli(capsys, "bracket", "-n", "2", "x1^2", "x1*x2")
    assert code == 0
    assert out == "d/dx1: -2*x2\nd/dx2: 2*x1\n"


def test_assoc_and_jacobi(capsys):
    code, out, _ = run_cli(capsys, "assoc", "-n", "1", "x1^3", "x1^2", "x1")
    assert code == 0 and out == "12*x1^2\n"
    code, out, _ = run_cli(capsys, "jacobi", "-n", "1", "x1^2", "x1^2", "x1^2")
    assert code == 0 and out == "48*x1^2\n"


def test_xi_matrix_output(capsys):
    code, out, _ = run_cli(capsys, "xi", "-n", "2", "x1^2")
    assert code == 0 and out == "4 0\n0 0\n"


def test_xi_inv_reads_stdin(capsys, monkeypatch):
    matrix = json.dumps({"n": 2, "entries": [["1", "0"], ["0", "1"]]})
    code, out, _ = run_cli_stdin(capsys, monkeypatch, matrix, "xi-inv", "-n", "2")
    assert code == 0 and out == "1/4*x1^2 + 1/4*x2^2\n"


def test_jordan_defect_command(capsys):
    code, out, _ = run_cli(capsys, "jordan-defect", "-n", "1", "x1^3", "x1")
    assert code == 0 and out == "108*x1^4\n"


def test_bimodule_defect_three_lines(capsys):
    code, out, _ = run_cli(capsys, "bimodule-defect", "-n", "1", "x1^2", "x1^2", "x1^3")
    assert code == 0
    assert out == "r1: 0\nr2: 0\nr3: 96*x1^3\n"


def test_decompose_command(capsys):
    code, out, _ = run_cli(capsys, "decompose", "-n", "2", "x1^2 + x1*x2 + 3")
    assert code == 0
    assert out == "(2,0): x1^2\n(1,1): x1*x2\n(0,0): 3\n"


def test_peirce_command(capsys):
    code, out, _ = run_cli(capsys, "peirce", "-n", "2")
    assert code == 0
    assert out == "(2,0): x1^2\n(1,1): x1*x2\n(0,2): x2^2\n"


def test_reduce_command(capsys):
    code, out, _ = run_cli(capsys, "reduce", "-n", "2", "5*x1^2*x2 + x1")
    assert code == 0 and out == "10\n"


def test_closure_command(capsys):
    code, out, _ = run_cli(capsys, "closure", "-n", "2", "-k", "2", "x1*x2")
    assert code == 0
    assert out == "dimension: 3 of 3\nx1^2\nx1*x2\nx2^2\n"


def test_simple_command(capsys):
    code, out, _ = run_cli(capsys, "simple", "-n", "2", "-k", "3", "--seeds", "2")
    assert code == 0
    assert out.startswith("simple: yes\ndimension: 4\n")


def test_aut_check_positive(capsys, monkeypatch):
    matrix = json.dumps({"n": 2, "entries": [["3/5", "-4/5"], ["4/5", "3/5"]]})
    code, out, _ = run_cli_stdin(capsys, monkeypatch, matrix, "aut-check", "-n", "2")
    assert code == 0 and out.startswith("automorphism: yes")


def test_aut_check_negative_exit_one(capsys, monkeypatch):
    matrix = json.dumps({"n": 2, "entries": [["2", "0"], ["0", "1"]]})
    code, out, _ = run_cli_stdin(capsys, monkeypatch, matrix, "aut-check", "-n", "2")
    assert code == 1 and out.startswith("automorphism: no")
    assert "witness" in out


def test_aut1_accepts_sign_flip(capsys):
    code, out, _ = run_cli(capsys, "aut1", "--", "-1", "5")
    assert code == 0 and out.startswith("automorphism: yes")
    code, out, _ = run_cli(capsys, "aut1", "2", "0")
    assert code == 1 and out.startswith("automorphism: no")


def test_field_flag(capsys):
    code, out, _ = run_cli(capsys, "circ", "-n", "1", "--field", "fp:5", "x1^3", "x1^4")
    # 3x^2 * 4x^3 = 12 x^5 = 2 x^5 mod 5
    assert code == 0 and out == "2*x1^5\n"


# ----------------------------------------------------------------------
# errors and exit codes
# ----------------------------------------------------------------------


def test_parse_error_exit_two(capsys):
    code, out, err = run_cli(capsys, "circ", "-n", "2", "2x1", "x2")
    assert code == 2 and out == "" and err.startswith("error:")


def test_parse_error_json_mode(capsys):
    code, out, _ = run_cli(capsys, "circ", "-n", "2", "--json", "2x1", "x2")
    assert code == 2
    result = json.loads(out)
    assert result["status"] == "error"
    assert result["payload"]["error"] == "ParseError"
    assert result["payload"]["offset"] == 1


def test_char_p_reduce_exit_three(capsys):
    code, _, err = run_cli(capsys, "reduce", "-n", "1", "--field", "fp:5", "x1")
    assert code == 3 and "characteristic 0" in err


def test_degree_guard_exit_three(capsys):
    code, _, err = run_cli(capsys, "circ", "-n", "2", "(x1+x2)^20", "x1")
    assert code == 3 and "guard" in err


def test_domain_error_exit_one(capsys):
    code, _, err = run_cli(capsys, "xi", "-n", "2", "x1^3")
    assert code == 1 and "degree 2" in err


def test_bad_matrix_json_exit_two(capsys, monkeypatch):
    code, _, err = run_cli_stdin(capsys, monkeypatch, "{oops", "aut-check", "-n", "2")
    assert code == 2


def test_matrix_dimension_mismatch_exit_three(capsys, monkeypatch):
    matrix = json.dumps({"n": 3, "entries": [[str(v) for v in row] for row in
                                             [[1, 0, 0], [0, 1, 0], [0, 0, 1]]]})
    code, _, err = run_cli_stdin(capsys, monkeypatch, matrix, "aut-check", "-n", "2")
    assert code == 3


# ----------------------------------------------------------------------
# determinism and the module entry point
# ----------------------------------------------------------------------


def test_byte_identical_reruns(capsys):
    outputs = []
    for _ in range(2):
        code, out, _ = run_cli(capsys, "decompose", "-n", "3", "--json",
                               "x1*x2*x3 + 2*x1^3 - 1/2*x3")
        assert code == 0
        outputs.append(out.encode())
    assert outputs[0] == outputs[1]

    outputs = []
    for _ in range(2):
        code, out, _ = run_cli(capsys, "simple", "-n", "2", "-k", "2", "--json")
        assert code == 0
        outputs.append(out.encode())
    assert outputs[0] == outputs[1]


def test_module_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "bideriv", "circ", "-n", "2", "x1", "x1+x2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "1\n"


def test_payload_round_trip_includes_field():
    f = Polynomial(2, {(1, 0): 1, (0, 1): -1}, F5)
    assert polynomial_from_payload(polynomial_payload(f)) == f
    g = Polynomial(3, {(2, 1, 0): "3/4"})
    assert polynomial_from_payload(polynomial_payload(g)) == g
