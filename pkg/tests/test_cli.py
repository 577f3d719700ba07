import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from nichols_lie.cli import main
from nichols_lie.errors import ConstraintError
from nichols_lie.presets import ROWS, RowPreset, row_diagram_count

DATA = Path(__file__).parent / "data"


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_analyze_row1_order5():
    code, out = run("analyze", "--row", "1", "--order", "5")
    assert code == 0
    assert "type: A2" in out


def test_analyze_row6():
    code, out = run("analyze", "--row", "6", "--order", "3")
    assert code == 0 and "type: 0" in out


def test_matrix_input_equals_preset():
    _, a = run("analyze", "--matrix", "z3,z3^2;1,z3", "--json")
    _, b = run("analyze", "--row", "1", "--json")
    da, db = json.loads(a), json.loads(b)
    for k in ("type", "cartan", "degrees", "witnesses", "condition11"):
        assert da[k] == db[k]


def test_json_matrix_and_diagram_inputs():
    _, a = run("analyze", "--matrix", '{"matrix": [["z3","z3^2"],["1","z3"]]}', "--json")
    _, b = run("analyze", "--matrix", '{"diagram": {"q11":"z3","edge":"z3^2","q22":"z3"}}', "--json")
    assert json.loads(a)["type"] == json.loads(b)["type"] == "A2"


@pytest.mark.parametrize("row", sorted(ROWS))
def test_presets_round_trip_through_matrix_text(row):
    for d in range(1, row_diagram_count(row) + 1):
        q = RowPreset(row, d).matrix()
        text = ";".join(",".join(r) for r in q.literals())
        _, a = run("analyze", f"--matrix={text}", "--json")
        _, b = run("analyze", "--row", str(row), "--diagram", str(d), "--json")
        da, db = json.loads(a), json.loads(b)
        assert da["type"] == db["type"]
        assert da["degrees"] == db["degrees"]


def test_roots_row16():
    code, out = run("roots", "--row", "16", "--order", "7", "--json")
    data = json.loads(out)
    assert code == 0 and len(data["roots"]) == 12
    assert data["roots"][0] == {"vec": [1, 0], "cartan": True, "order": 14, "word": "1"}
    assert len(data["orbit"]) == 2


def test_roots_text():
    code, out = run("roots", "--row", "7")
    assert code == 0 and "5 positive roots" in out and "orbit (5 diagrams)" in out


def test_hilbert_factorization_message():
    code, out = run("hilbert", "--row", "1", "--order", "3", "--truncate", "10",
                    "--check-factorization")
    assert code == 0
    assert out.rstrip().endswith("H_L = H_B·H_A: OK")


def test_hilbert_json():
    code, out = run("hilbert", "--row", "2", "--truncate", "4", "--json", "--check-factorization")
    data = json.loads(out)
    assert data["factorization"] is True
    assert [0, 0, 1] in data["H_B"]


def test_coproduct_row1():
    code, out = run("coproduct", "--row", "1", "--order", "3", "--word", "12", "--power", "3",
                    "--left-degree", "3,0")
    assert code == 0
    q = RowPreset(1, 1, 3).matrix()
    expected = (1 - q[1, 1] ** 2) ** 3  # q^-1 = z3^2
    assert f"111 (x) 222 : {expected.literal()}" in out


def test_coproduct_json_and_approx():
    code, out = run("coproduct", "--row", "3", "--word", "112", "--json")
    terms = json.loads(out)
    assert {"left": "11", "right": "2", "coeff": "3"} in terms
    code, out = run("coproduct", "--row", "3", "--word", "12", "--approx")
    assert "~" in out


def test_exit_codes():
    assert run("analyze", "--matrix", "z3,z3^;1,z3")[0] == 2
    assert run("analyze", "--matrix", "1,z3;1,z3")[0] == 2
    assert run("analyze", "--matrix", "z5,z5^3;1,z5")[0] == 3
    assert run("coproduct", "--row", "10", "--word", "11212", "--power", "4", "--budget", "100")[0] == 4
    assert run("analyze", "--row", "2", "--order", "2")[0] == 5
    assert run("analyze", "--row", "16", "--order", "5")[0] == 5
    assert run("analyze", "--row", "4", "--order", "4")[0] == 5
    assert run("analyze", "--row", "17")[0] == 5
    assert run("analyze", "--row", "2", "--diagram", "3")[0] == 5
    assert run("coproduct", "--row", "1", "--word", "1x")[0] == 2
    assert run("analyze", "--matrix", "{bad json")[0] == 2


def test_constraint_message_names_the_constraint():
    with pytest.raises(ConstraintError, match="q != \\+-1"):
        RowPreset(2, 1, 2)
    with pytest.raises(ConstraintError, match="primitive"):
        RowPreset(1, 1, 6, 2)


def test_row13_discrepancy_is_flagged():
    code, out = run("analyze", "--row", "13")
    assert code == 0
    assert "quoted-only ['3a1+a2']" in out and "computed-only ['3a1+2a2']" in out
    _, out16 = run("analyze", "--row", "16", "--diagram", "2")
    assert "differ" not in out16


def test_table_matches_golden_file():
    code, out = run("table")
    assert code == 0
    assert out == (DATA / "table.txt").read_text()
    lines = out.splitlines()[1:]
    assert len(lines) == 16
    for line in lines:
        cells = [c.strip() for c in line.split("|")]
        assert cells[-1] == cells[-2]


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "nichols_lie", "analyze", "--row", "3"],
        capture_output=True, text=True, check=False,
    )
    assert res.returncode == 0 and "type: B2" in res.stdout
