import json

import pytest

from app import EXIT_OK, EXIT_USAGE, main


@pytest.fixture
def run(clean_env, tmp_path, capsys):
    def invoke(*argv):
        code = main(["--cache-dir", str(tmp_path / "cache"), *argv])
        captured = capsys.readouterr()
        return code, captured.out, captured.err
    return invoke


def test_dims_csv(run):
    code, out, _ = run("--format", "csv", "dims", "--grading", "1,0", "--grading", "1,2", "--no-basis")
    assert code == EXIT_OK
    assert out.strip().splitlines() == ["d,b,dim", "1,0,5", "1,2,9"]


def test_theta_writes_cache_files(run, tmp_path):
    out_dir = tmp_path / "out"
    code, out, _ = run("--no-cache", "theta", "--kind", "gradient", "--index", "1", "-N", "4", "-o", str(out_dir))
    assert code == EXIT_OK
    assert sorted(p.name for p in out_dir.iterdir()) == ["grad_1_1.N4.series", "grad_1_2.N4.series"]
    header = (out_dir / "grad_1_1.N4.series").read_text(encoding="utf-8").splitlines()[0]
    assert header.startswith("TAUT1 grad_1_1 N=4 floor=")
    assert len(out.strip().splitlines()) == 2


def test_eval_json(run):
    code, out, _ = run("eval", "--expr", "T(l1, l2, 1)")
    assert code == EXIT_OK
    assert json.loads(out)['expression'] == "T(l1, l2, 1)"


def test_syntax_errors_show_a_caret(run):
    code, _, err = run("eval", "--expr", "p12 +")
    assert code == EXIT_USAGE
    assert "syntax error at position 5" in err
    assert err.rstrip().endswith("^")


def test_expression_file(run, tmp_path):
    path = tmp_path / "sextic.expr"
    path.write_text("C1_6  # the universal sextic\n", encoding="utf-8")
    code, out, _ = run("--format", "csv", "valuate", "--expr-file", str(path))
    assert code == EXIT_OK
    assert len(out.strip().splitlines()) == 11


def test_divisor_from_flags(run):
    code, out, _ = run("divisor", "--d", "1,1,1,1,1,1")
    assert code == EXIT_OK
    data = json.loads(out)
    assert (data['j'], data['k']) == ("6", "3")


def test_divisor_missing_file(run, tmp_path):
    code, _, err = run("divisor", "--json", str(tmp_path / "none.json"))
    assert code == EXIT_USAGE
    assert "File not found" in err


def test_nu_coefficients_as_csv(run):
    code, out, _ = run("--format", "csv", "nu", "--expr", "I5*C1_6", "-N", "4", "--coeff", "1,1,1")
    assert code == EXIT_OK
    assert len(out.strip().splitlines()) == 8


def test_verify_suite(run):
    code, out, _ = run("verify", "--suite", "divisors", "-N", "4")
    assert code == EXIT_OK
    assert json.loads(out)['passed']


@pytest.mark.parametrize("argv", [
    (),
    ("dims", "--grading", "1"),
    ("nu", "--expr", "C1_6", "--coeff", "1,2"),
    ("nu", "--expr", "C1_6", "--reduce", "-1"),
    ("verify", "--suite", "everything"),
])
def test_usage_errors(run, argv):
    code, _, _ = run(*argv)
    assert code == EXIT_USAGE


def test_help_exits_cleanly(run):
    code, out, _ = run("--help")
    assert code == EXIT_OK
    assert "theta" in out
