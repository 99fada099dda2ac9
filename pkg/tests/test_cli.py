import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from bstirling import catalog
from bstirling.cli import run
from bstirling.egf import EgfSeries
from bstirling.potential import PotentialPolynomial
from bstirling.stirling import Kind, StirlingTriangle, classical_second, triangle_from_series


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_triangle_csv_is_classical_second_kind():
    code, out, _ = invoke("triangle", "--series", "E", "--kind", "second", "--nmax", "5", "--format", "csv")
    assert code == 0
    rows = [line.split(",") for line in out.splitlines()]
    S = classical_second(5)
    for n, row in enumerate(rows):
        assert int(row[0]) == n
        assert [int(v) for v in row[1:]] == list(S.rows[n])


def test_triangle_markdown_and_methods_agree():
    _, md, _ = invoke("triangle", "--series", "geom", "--nmax", "4")
    assert md.splitlines()[0].startswith("| n\\k |")
    assert "| 4 |" in md.replace("  ", " ")
    _, a, _ = invoke("triangle", "--series", "cosh", "--kind", "first", "--nmax", "8", "--format", "json")
    _, b, _ = invoke("triangle", "--series", "cosh", "--kind", "first", "--nmax", "8", "--format", "json",
                     "--method", "recursive")
    assert a == b


def test_triangle_json_round_trip():
    _, out, _ = invoke("triangle", "--series", "Blambda(1/2)", "--kind", "first", "--nmax", "6", "--format", "json")
    tri = StirlingTriangle.from_dict(json.loads(out))
    assert tri == triangle_from_series(catalog.series("Blambda(1/2)", 6), Kind.FIRST, 6)


def test_series_file(tmp_path):
    path = tmp_path / "b.json"
    path.write_text(json.dumps(EgfSeries([1, 2, 0, 1]).to_dict()))
    code, out, _ = invoke("triangle", "--series-file", str(path), "--format", "json")
    assert code == 0
    assert StirlingTriangle.from_dict(json.loads(out)).nmax == 3
    path.write_text("{not json")
    assert invoke("triangle", "--series-file", str(path))[0] == 2


def test_potential_command():
    code, out, _ = invoke("potential", "--series", "I", "--n", "3", "--at", "3", "--at", "1/2")
    assert code == 0
    assert "P_3(3) = 6" in out
    _, out, _ = invoke("potential", "--series", "Blambda(1/3)", "--n", "2", "--format", "json")
    p = PotentialPolynomial.from_dict(json.loads(out))
    assert p.monomial == (0, Fraction(-1, 3), 1)


def test_bell_command():
    assert invoke("bell", "--partial", "3", "2", "--args", "2,3")[1].endswith("= 18\n")
    _, out, _ = invoke("bell", "--complete", "4", "--args", "1,1,1,1", "--format", "json")
    assert json.loads(out)["value"] == "15"
    assert invoke("bell", "--partial", "3", "0", "--args", "1")[0] == 1
    assert invoke("bell", "--complete", "3", "--args", "1,x")[0] == 2


def test_prob_command():
    _, out, _ = invoke("prob", "--dist", "finite:0:1/2,1:1/2", "--moment", "2", "2")
    assert "= 3/2" in out
    _, out, _ = invoke("prob", "--dist", "poisson:1", "--mgf", "--order", "5", "--format", "csv")
    assert [line.split(",")[1] for line in out.splitlines()] == ["1", "1", "2", "5", "15", "52"]
    _, out, _ = invoke("prob", "--dist", "poisson:1", "--triangle", "4", "--format", "json")
    assert json.loads(out)["rows"][2][1] == "2"
    assert invoke("prob", "--dist", "finite:0:1/2,1:1/3", "--mgf")[0] == 1


def test_verify_single_identity():
    code, out, _ = invoke("verify", "--identity", "eq42", "--lambda", "1/2", "--order", "12")
    assert code == 0
    assert out.splitlines()[0].startswith("PASS eq42 ")
    assert "circ(Clambda,Blambda)=E" in out


def test_verify_eq39_prints_note():
    code, out, _ = invoke("verify", "--identity", "eq39", "--order", "8")
    assert code == 0
    assert any(line.startswith("NOTE eq39") for line in out.splitlines())


def test_verify_family_and_json():
    code, out, _ = invoke("verify", "--family", "restricted", "--nmax", "7", "--order", "8", "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report and all(r["status"] == "PASS" for r in report)


def test_verify_rejects_small_order():
    assert invoke("verify", "--order", "4")[0] == 2


def test_parse_command_errors():
    code, _, err = invoke("parse", "--series", "circ(E,")
    assert code == 2
    assert "offset 8" in err
    code, _, err = invoke("parse", "--series", "circ(E,foo)")
    assert code == 2 and "foo" in err
    assert invoke("parse", "--series", "Blambda(0)", "--coeffs")[0] == 1


def test_parse_command_canonical():
    code, out, _ = invoke("parse", "--series", " circ( E , E ) ", "--coeffs", "--order", "4", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["canonical"] == "circ(E,E)"
    assert EgfSeries.from_dict(data["series"]).coeffs == (1, 1, 2, 5, 15)


def test_usage_errors_exit_two(capsys):
    assert invoke("triangle", "--series", "E", "--bogus")[0] == 2
    assert invoke("triangle", "--ser", "E")[0] == 2  # no abbreviations
    assert invoke("triangle", "--series", "E", "--format", "xml")[0] == 2
    assert invoke("triangle", "--order", "3")[0] == 2
    assert invoke()[0] == 2


def test_domain_errors_exit_one():
    code, _, err = invoke("triangle", "--series", "custom(1,1)", "--order", "1", "--nmax", "3")
    assert code == 1 and "OrderTooSmall" in err


def test_order_cap(monkeypatch):
    monkeypatch.setenv("BSTIRLING_MAX_ORDER", "10")
    assert invoke("triangle", "--series", "E", "--order", "11")[0] == 2
    assert invoke("triangle", "--series", "E", "--order", "10")[0] == 0
    monkeypatch.setenv("BSTIRLING_MAX_ORDER", "ten")
    assert invoke("triangle", "--series", "E")[0] == 2


def test_out_file(tmp_path):
    target = tmp_path / "t.csv"
    code, out, _ = invoke("triangle", "--series", "E", "--nmax", "3", "--format", "csv", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text().splitlines()[3] == "3,0,1,3,1"


def test_identical_invocations_are_byte_identical():
    argv = [sys.executable, "-m", "bstirling", "triangle", "--series", "circ(cosh,Blambda(1/3))",
            "--kind", "first", "--nmax", "7", "--format", "json"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second and first


@pytest.mark.parametrize("argv", [
    ["triangle", "--series", "E", "--nmax", "4", "--format", "json"],
    ["potential", "--series", "geom", "--n", "3", "--format", "json"],
    ["bell", "--complete", "3", "--args", "1,2", "--format", "json"],
    ["prob", "--dist", "poisson:2", "--moment", "1", "3", "--format", "json"],
    ["parse", "--series", "E", "--format", "json"],
    ["verify", "--identity", "eq6", "--order", "8", "--format", "json"],
])
def test_json_outputs_are_valid(argv):
    code, out, _ = invoke(*argv)
    assert code == 0
    json.loads(out)
