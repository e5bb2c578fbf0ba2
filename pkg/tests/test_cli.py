import csv
import io
import json
import subprocess
import sys

import pytest

from systoles.cli import dumps, main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_classify_v0_exact():
    code, out = run("classify", "--surface", "s11", "--alpha", "1", "--beta", "1", "--exact")
    rec = json.loads(out)
    assert code == 0
    assert rec["systole_count"] == 3 and rec["systole_value"] == 3
    assert rec["backend"] == "exact" and rec["in_delta1"] is True


def test_classify_sphere_two_systole():
    _, out = run("classify", "--surface", "s04", "--alpha", "1/2", "--beta", "1", "--exact")
    assert json.loads(out)["two_systole_value"] == 34


def test_classify_rational_string():
    _, out = run("classify", "--surface", "s11", "--alpha", "2", "--beta", "3", "--exact")
    assert json.loads(out)["systole_value"] == "7/3"


def test_classify_float_backend_and_digits():
    _, out = run("classify", "--surface", "s11", "--alpha", "0.9", "--beta", "1.3")
    rec = json.loads(out)
    assert rec["backend"] == "float" and rec["tolerance"] == 1e-9
    assert '"alpha": 0.90000000000000002' in out


def test_classify_log_coords():
    _, out = run("classify", "--surface", "s11", "--alpha", "0", "--beta", "0", "--log-coords")
    assert json.loads(out)["systole_count"] == 3


def test_exit_codes(capsys):
    assert run("classify", "--surface", "s11", "--alpha", "0", "--beta", "1")[0] == 2
    assert run("classify", "--surface", "s11", "--alpha", "x", "--beta", "1")[0] == 2
    assert run("classify", "--surface", "s33", "--alpha", "1", "--beta", "1")[0] == 2
    assert run("classify", "--surface", "s11", "--alpha", "1", "--beta", "1", "--log-coords", "--exact")[0] == 2
    assert run("classify", "--surface", "s11")[0] == 2
    code, _ = run("classify", "--surface", "s11", "--alpha", "1.0", "--beta", "1.000000005")
    assert code == 3
    assert "--exact" in capsys.readouterr().err
    assert run("act", "--surface", "s11", "--alpha", "1", "--beta", "1", "--word", "S Q")[0] == 2


def _values(out):
    return [r["value"] for r in csv.DictReader(io.StringIO(out))]


def test_enumerate_examples():
    code, out = run("enumerate", "--surface", "s11", "--alpha", "1", "--beta", "1", "--count", "7")
    assert code == 0 and _values(out) == ["3", "3", "3", "6", "6", "6", "15"]
    _, out = run("enumerate", "--surface", "s11", "--alpha", "1", "--beta", "1", "--count", "1")
    (row,) = csv.DictReader(io.StringIO(out))
    assert float(row["length"]) == pytest.approx(1.9248473002384139, abs=1e-15)
    _, out = run("enumerate", "--surface", "s04", "--alpha", "1/2", "--beta", "1", "--count", "4")
    assert _values(out) == ["7", "7", "7", "34"]


def test_act_examples():
    _, out = run("act", "--surface", "s11", "--alpha", "1", "--beta", "1", "--word", "S T")
    assert json.loads(out)["point"] == {"alpha": 1, "beta": 1}
    _, out = run("act", "--surface", "s11", "--alpha", "1", "--beta", "1", "--word", "T")
    assert json.loads(out)["point"] == {"alpha": "1/2", "beta": "1/2"}
    _, out = run("act", "--surface", "s04", "--alpha", "3/7", "--beta", "5", "--word", "S S")
    assert json.loads(out)["point"] == {"alpha": "3/7", "beta": 5}


def test_determinism():
    argv = ("classify", "--surface", "s04", "--alpha", "0.37", "--beta", "2.9")
    assert run(*argv) == run(*argv)
    argv = ("enumerate", "--surface", "s11", "--alpha", "0.37", "--beta", "2.9", "--count", "50")
    assert run(*argv) == run(*argv)


def test_timings_are_opt_in():
    _, out = run("classify", "--surface", "s11", "--alpha", "1", "--beta", "1")
    assert "timings" not in json.loads(out)
    _, out = run("classify", "--surface", "s11", "--alpha", "1", "--beta", "1", "--timings")
    assert "total_s" in json.loads(out)["timings"]


def test_plot_writes_svg_and_csv(tmp_path):
    target = tmp_path / "g.svg"
    code, out = run("plot", "--surface", "s11", "--figure", "gamma", "--depth", "0", "--samples", "3",
                    "--out", str(target))
    assert code == 0 and target.read_text().startswith("<?xml")
    rows = list(csv.DictReader(open(tmp_path / "g.csv")))
    assert [float(r["A"]) for r in rows] == pytest.approx([0, 0.6931471805599453, 1.3862943611198906])
    assert [float(r["B"]) for r in rows] == [0, 0, 0]
    first = target.read_bytes()
    run("plot", "--surface", "s11", "--figure", "gamma", "--depth", "0", "--samples", "3", "--out", str(target))
    assert target.read_bytes() == first


def test_plot_delta_and_io_error(tmp_path):
    code, out = run("plot", "--surface", "s04", "--figure", "delta", "--depth", "1", "--out", str(tmp_path / "d.svg"))
    assert code == 0 and json.loads(out)["markers"] > 0
    code, _ = run("plot", "--surface", "s04", "--figure", "gamma", "--depth", "1", "--out",
                  str(tmp_path / "missing" / "d.svg"))
    assert code == 4
    assert run("plot", "--surface", "s04", "--figure", "gamma", "--bounds", "1,0,0,1", "--out",
               str(tmp_path / "x.svg"))[0] == 2


def test_dumps_formatting():
    from fractions import Fraction

    assert dumps({"a": Fraction(7, 3), "b": 0.1, "c": [1, True]}) == '{\n  "a": "7/3",\n  "b": 0.10000000000000001,\n  "c": [1, true]\n}'


def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "systoles.cli", "act", "--surface", "s11", "--alpha", "1",
                        "--beta", "1", "--word", "T"], capture_output=True, text=True)
    assert r.returncode == 0 and '"1/2"' in r.stdout
