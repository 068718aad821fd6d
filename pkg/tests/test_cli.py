import json
import subprocess
import sys

import pytest

from splength.cli import main

S3 = "< a, b | a^2, b^2, (a b)^3 >"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_tcost_and_triangulate(capsys):
    assert run(capsys, "tcost", "< x, y | x y x^-1 y^-1 >")[:2] == (0, "2\n")
    code, out, _ = run(capsys, "triangulate", "< x | x^5 >")
    assert code == 0
    assert run(capsys, "tcost", out.strip())[1] == "3\n"


def test_presentation_from_file_and_stdin(tmp_path, capsys, monkeypatch):
    f = tmp_path / "g.txt"
    f.write_text("< x | x^9 >\n")
    assert run(capsys, "tcost", str(f))[1] == "7\n"
    monkeypatch.setattr(sys, "stdin", __import__("io").StringIO("< x | x^4 >"))
    assert run(capsys, "tcost", "-")[1] == "2\n"


def test_simplify_budget_warning(capsys):
    code, out, err = run(capsys, "simplify", "< a, b, c | a b c^-1, c c >", "--budget", "1:40")
    assert code == 0 and out.startswith("<")
    code, _, err = run(capsys, "simplify", "< a | a^2 >", "--budget", "oops")
    assert code == 2 and "--budget" in err


def test_subgroups_round_trip_into_rewrite(tmp_path, capsys):
    code, out, _ = run(capsys, "subgroups", S3, "--max-index", "3")
    assert code == 0
    tables = [json.loads(line) for line in out.splitlines()]
    assert sorted(t["index"] for t in tables) == [1, 2, 3]
    index3 = next(line for line in out.splitlines() if json.loads(line)["index"] == 3)
    path = tmp_path / "t.json"
    path.write_text(index3)
    code, out, _ = run(capsys, "rewrite", S3, "--table", str(path), "--simplify")
    assert code == 0
    code, cost, _ = run(capsys, "tcost", out.strip())
    assert int(cost) <= 3 * 2


def test_subgroups_formats(capsys):
    out = run(capsys, "subgroups", "< x | x^6 >", "--max-index", "6", "--format", "json")[1]
    assert sorted(t["index"] for t in json.loads(out)) == [1, 2, 3, 6]
    out = run(capsys, "subgroups", "< x | x^6 >", "--max-index", "2", "--format", "csv")[1]
    assert out.splitlines()[0] == "index,table"


def test_rewrite_by_subgroup(capsys):
    code, out, _ = run(capsys, "rewrite", S3, "--subgroup", "a")
    assert code == 0
    assert run(capsys, "tcost", out.strip())[0] == 0


def test_rewrite_errors(capsys):
    assert run(capsys, "rewrite", S3)[0] == 2
    bad = '{"index":2,"ngens":2,"action":[[2,2,1,1],[1,1,2,2]]}'
    code, _, err = run(capsys, "rewrite", S3, "--table", bad)
    assert code == 2 and "not a coset table" in err
    code, _, err = run(capsys, "rewrite", "< a, b | >", "--subgroup", "a", "--max-cosets", "20")
    assert code == 1 and "capacity" in err


def test_stable_outputs(capsys):
    code, out, err = run(capsys, "stable", "< x | x^6 >", "--max-index", "3")
    assert code == 0
    assert out.splitlines()[0] == "index,raw_cost,simplified_cost,ratio,ratio_decimal,table"
    assert "upper bound" in err
    obj = json.loads(run(capsys, "stable", "< x | x^6 >", "--max-index", "3", "--format", "json")[1])
    assert obj["best"]["ratio"] == "0" and "upper bound" in obj["note"]


def test_bad_inputs_exit_2(capsys):
    assert run(capsys, "tcost", "< x | y >")[0] == 2
    assert run(capsys, "family", "lamplighter", "--m", "1")[0] == 2
    assert run(capsys, "lll", "1,2;2,4")[0] == 2
    assert run(capsys, "contract", "--sub", "1,0;0,1", "--layout", "nope")[0] == 2
    with pytest.raises(SystemExit):
        main(["stable", "< x | >", "--max-index", "0"])


def test_family_sweep(capsys):
    code, out, err = run(capsys, "family", "surface", "--grid", "g=2;d=1..100")
    assert code == 0
    assert out.splitlines()[-1] == "surface,2,100,100,402,402/100,4.02,402/100,4.02"
    assert "4.02" in err
    obj = json.loads(run(capsys, "family", "figure8", "--m", "50", "--n", "50", "--format", "json")[1])
    assert obj["min"]["ratio"] == "15406/2500"


def test_lll_and_contract(capsys):
    out = run(capsys, "lll", "3,-1;1,4")[1]
    assert "covolume=13" in out and "certificate=ok" in out
    assert run(capsys, "contract", "--sub", "3,-1;1,4")[1] == "total=39 interior=15 boundary=24\n"
    csv = run(capsys, "contract", "--sub", "3,-1;1,4", "--sweep", "1..2")[1]
    assert csv.splitlines()[1] == "1,39,15,24,24/39"


def test_abelianize(capsys):
    out = run(capsys, "abelianize", "< x | x^9 >", "--no-2-torsion")[1]
    assert "torsion_order=9" in out and "torsion_floor=2" in out and "caveat" not in out
    assert "caveat=" in run(capsys, "abelianize", "< x | x^9 >")[1]


def test_out_file(tmp_path, capsys):
    target = tmp_path / "o.txt"
    assert run(capsys, "tcost", "< x | x^5 >", "--out", str(target)) == (0, "", "")
    assert target.read_text() == "3\n"


def test_console_script():
    res = subprocess.run(["splength", "tcost", "< a, b | a b a^-1 b^-1 >"], capture_output=True, text=True)
    if res.returncode != 0 and "not found" in res.stderr:
        pytest.skip("console script not installed")
    assert res.stdout == "2\n"
    res = subprocess.run([sys.executable, "-m", "splength.cli", "--version"], capture_output=True, text=True)
    assert res.returncode == 0 and "0.1.0" in res.stdout
