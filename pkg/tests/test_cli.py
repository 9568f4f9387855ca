import json
import subprocess
import sys

import pytest

from movsurf.cli import InputError, main, parse_spec

EX2 = "case=tensor\nm=1\nn=1\nx1=s*t+u*v\nx2=s*v\nx3=u*t\nx4=s*v+u*t+u*v\n"
EX1 = "case=triangular\nn=3\nx1=s^3\nx2=t^3\nx3=u^3\nx4=s^3+t^3+u^3\n"


@pytest.fixture
def write(tmp_path):
    def _write(text, name="surf.txt"):
        p = tmp_path / name
        p.write_text(text, encoding="utf-8")
        return str(p)
    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_spec():
    spec = parse_spec("# comment\n" + EX2)
    assert spec.degrees == (1, 1) and spec.polys["x2"] == "s*v"
    for bad in ("case=tensor\nm=x\nn=1\n", "case=blob\nn=1\n", "case=tensor\nn=1\n",
                "case=tensor\nm=1\nn=1\nq=3\n", "nonsense\n"):
        with pytest.raises(InputError):
            parse_spec(bad)


def test_matrices_headers(capsys, write):
    code, out, _ = run(capsys, "matrices", "--input", write(EX2), "--which", "MS", "--d", "2")
    assert code == 0 and out.splitlines()[1] == "9 x 9"
    code, out, _ = run(capsys, "matrices", "--input", write(EX1), "--which", "MP")
    assert code == 0 and out.splitlines()[1] == "21 x 24"


def test_matrices_json(capsys, write):
    code, out, _ = run(capsys, "matrices", "--input", write(EX2), "--json")
    data = json.loads(out)
    assert data["shape"] == [4, 4] and data["columns"][0] == "x1|1"


def test_malformed_degree_exit_code(capsys, write):
    code, _, err = run(capsys, "matrices", "--input", write("case=tensor\nm=one\nn=1\n"))
    assert code == 2 and "m must be an integer" in err
    code, _, err = run(capsys, "matrices", "--input",
                       write(EX2.replace("x4=s*v+u*t+u*v", "x4=s^2*t")))
    assert code == 2 and "bidegree" in err


def test_spaces(capsys, write):
    assert "dimension 24" in run(capsys, "spaces", "--input", write(EX2), "--d", "2", "--sigma", "1,1")[1]
    assert "dimension 7" in run(capsys, "spaces", "--input", write(EX2), "--d", "1", "--sigma", "1,1")[1]
    out = run(capsys, "spaces", "--input", write(EX1), "--d", "1", "--sigma", "0")[1]
    assert "dimension 1" in out and "-X1 - X2 - X3 + X4" in out


@pytest.mark.parametrize("engine", ["koszul", "dixon"])
def test_resultant_common_root(capsys, write, engine):
    f = write("case=tensor\nm=1\nn=1\nf1=s*t\nf2=s*v\nf3=u*t\n")
    code, out, _ = run(capsys, "resultant", "--input", f, "--engine", engine)
    assert code == 0 and out.splitlines()[-1] == "resultant: 0"


def test_resultant_engines_agree(capsys, write):
    f = write("case=tensor\nm=1\nn=2\nf1=s*t^2-3*u*v^2+2*s*t*v\nf2=u*t^2+s*v^2-u*t*v\n"
              "f3=4*s*t*v-u*v^2+s*t^2\n")
    a = run(capsys, "resultant", "--input", f, "--engine", "koszul")[1].splitlines()[-1]
    b = run(capsys, "resultant", "--input", f, "--engine", "dixon")[1].splitlines()[-1]
    assert a.lstrip("resultant: -") == b.lstrip("resultant: -")


def test_resultant_macaulay_unit_and_engine_mismatch(capsys, write):
    f = write("case=triangular\nn=1\nf1=s\nf2=t\nf3=u\n")
    out = run(capsys, "resultant", "--input", f, "--engine", "macaulay")[1]
    assert out.splitlines()[-1] in ("resultant: 1", "resultant: -1")
    assert run(capsys, "resultant", "--input", f, "--engine", "dixon")[0] == 2


def test_implicitize(capsys, write):
    code, out, _ = run(capsys, "implicitize", "--input", write(EX2), "--method", "mq")
    assert code == 0
    assert "F = X1*X2 + X1*X3 - X1*X4 + X2^2 + 3*X2*X3 - 2*X2*X4 + X3^2 - 2*X3*X4 + X4^2" in out


def test_implicitize_base_points(capsys, write):
    f = write("case=tensor\nm=1\nn=1\nx1=s*t\nx2=s*v\nx3=u*t\nx4=s*t+s*v\n")
    code, _, err = run(capsys, "implicitize", "--input", f, "--method", "res")
    assert code == 1 and "base points detected" in err


def test_verify_suite_and_determinism(capsys):
    args = ("verify", "--identity", "conj-61", "--m", "1", "--n", "1", "--trials", "5", "--seed", "7")
    code, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code == code2 == 0 and out1 == out2
    assert "summary: 5/5 checks passed" in out1


def test_verify_json_mirrors_text(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "dim-formula", "--trials", "2", "--json")
    data = json.loads(out)
    assert code == 0 and data["passed"] and len(data["checks"]) == 2


def test_verify_failure_exit_code(capsys, write):
    # cubic onto plane has Res = 1 but a rank-deficient MP: the dimension check fails
    f = write(EX1)
    code, out, _ = run(capsys, "verify", "--identity", "dim-formula", "--input", f)
    assert code == 1 and "result: FAIL" in out


def test_verify_rejects_wrong_case(capsys):
    assert run(capsys, "verify", "--identity", "conj-62", "--case", "tensor")[0] == 2
    assert run(capsys, "verify", "--identity", "bogus")[0] == 2


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "movsurf", "verify", "--identity", "conj-61",
                        "--trials", "1"], capture_output=True, text=True)
    assert p.returncode == 0 and "result: PASS" in p.stdout
