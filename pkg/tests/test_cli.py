import json
import subprocess
import sys
import textwrap

import pytest

from eqhodge import cli
from eqhodge.errors import InconsistentData

SURFACE = """
[surface]
n = 1
A = ["0", "1"]
B = ["0", "1"]
"""

Z2_COVER = """
[cover]
type = "abstract"
genus = 0
[cover.group]
kind = "cyclic"
order = 2
[[cover.branch]]
point = "1"
inertia = 1
[[cover.branch]]
point = "2"
inertia = 1
"""


def write(tmp_path, text, name="job.toml"):
    p = tmp_path / name
    p.write_text(textwrap.dedent(text))
    return str(p)


def run_ok(*argv):
    code, out = cli.run(list(argv))
    assert code == 0, out
    return json.loads(out)


def test_analyze(tmp_path):
    out = run_ok("analyze", write(tmp_path, SURFACE))
    s = out["surface"]
    assert (s["d_E"], s["c_E"], s["mu"]) == (12, 5, 7)
    assert sorted(f["kodaira"] for f in s["fibers"]) == ["I1", "II", "IIIstar"]


def test_mwbound(tmp_path):
    out = run_ok("mwbound", write(tmp_path, "epsilon = 2\n" + SURFACE + Z2_COVER))
    mw = out["mwbound"]
    assert (mw["rank_bound_dim"], mw["pal_bound"], mw["M"]) == (4, 6, [1, 3])
    assert list(mw) == ["M", "rank_bound_dim", "pal_bound", "epsilon", "per_isotypic",
                        "pal_bound_plus_variant", "discrepancy_note"]


def test_engine(tmp_path):
    out = run_ok("engine", write(tmp_path, "[bundle]\nweierstrass_n = 1\np = 1\nq = 1\n"))
    sel = out["selected"]
    assert (sel["a"], sel["b"], sel["c"], sel["delta"]) == (10, -2, 2, 0)
    assert out["euler_characteristics"]["K_P(2W')"]["cG"] == 20
    out = run_ok("engine", write(tmp_path, "[bundle]\nweierstrass_n = 3\nsingular = true\n"))
    assert out["table"]["1,1"]["delta"] == 1 and out["table"]["1,1"]["a"] == 30


def test_basechange_and_hodge(tmp_path):
    cfg = write(tmp_path, SURFACE + Z2_COVER)
    bc = run_ok("basechange", cfg)["basechange"]
    assert bc["hypothesis"] == "smooth_branch" and bc["tjurina"]["mult"] == [7, 7]
    h = run_ok("hodge", cfg, "--check")
    assert h["resolved"]["1,1"]["module"]["mult"] == [10, 10]
    assert h["weierstrass_model_h11"]["module"]["mult"] == [3, 3]
    assert "two-path H^{1,1}" in h["checks"]


def test_oracle(tmp_path):
    out = run_ok("oracle", write(tmp_path, '[cover]\ntype = "superelliptic"\nm = 3\nf = ["0", "-1", "1"]\n'))
    assert out["agree"] and out["oracle"] == [0, 1, 0] and out["h0_K_plus_dual"] == [0, 1, 1]


@pytest.mark.parametrize("cmd", ["analyze", "basechange", "hodge", "mwbound"])
def test_json_round_trip(tmp_path, cmd):
    _, text = cli.run([cmd, write(tmp_path, SURFACE + Z2_COVER)])
    assert json.dumps(json.loads(text), indent=2, ensure_ascii=False) == text


def test_infinite_valuation_serialised(tmp_path):
    cfg = write(tmp_path, '[surface]\nn = 1\nA = []\nB = ["-1", "0", "0", "0", "0", "1"]\n'
                          'allow_isotrivial = true\n')
    out = run_ok("analyze", cfg)
    assert all(f["vA"] == "inf" for f in out["surface"]["fibers"])


def test_text_output(tmp_path):
    code, text = cli.run(["analyze", write(tmp_path, 'output = "text"\n' + SURFACE)])
    assert code == 0 and "mu: 7" in text
    code, text = cli.run(["analyze", write(tmp_path, 'output = "text"\n' + SURFACE), "--json"])
    assert json.loads(text)["surface"]["mu"] == 7


@pytest.mark.parametrize("body,cmd,code", [
    ("this is = = not toml", "analyze", 2),
    ("[cover]\ntype = 'abstract'\n", "analyze", 2),
    (SURFACE + "[cover]\ntype = 'weird'\n", "basechange", 2),
    ("output = 'xml'\n" + SURFACE, "analyze", 2),
    ('[surface]\nn = 1\nA = ["0","0","0","0","1"]\nB = ["0","0","0","0","0","0","1"]\n', "analyze", 3),
    (SURFACE + Z2_COVER.replace('point = "1"', 'point = "0"'), "mwbound", 3),
    ('[surface]\nn = 1\nA = []\nB = ["-1", "0", "0", "0", "0", "1"]\n', "analyze", 3),
    ("[bundle]\nweierstrass_n = 1\np = 1\n", "engine", 2),
])
def test_exit_codes(tmp_path, body, cmd, code):
    got, text = cli.run([cmd, write(tmp_path, body)])
    assert got == code, text
    assert json.loads(text)["error"]["exit_code"] == code


def test_semistable_branch_blocks_mwbound(tmp_path):
    cover = Z2_COVER.replace('point = "1"', 'point = "-27/4"')
    got, text = cli.run(["mwbound", write(tmp_path, SURFACE + cover)])
    assert got == 3
    h = run_ok("hodge", write(tmp_path, SURFACE + cover))
    assert h["weierstrass_model_h11"]["module"] is None
    assert h["resolved"]["1,1"]["module"]["dimension"] == 20


def test_nonminimal_suggests_n(tmp_path):
    got, text = cli.run(["analyze", write(tmp_path, SURFACE.replace("n = 1", "n = 2"))])
    assert got == 3
    assert json.loads(text)["error"]["violations"][0]["suggested_n"] == 1


def test_missing_file():
    assert cli.run(["analyze", "/nonexistent/job.toml"])[0] == 2


def test_internal_error_code(tmp_path, monkeypatch):
    def boom(cfg):
        raise InconsistentData("forced")

    monkeypatch.setitem(cli.COMMANDS, "analyze", boom)
    assert cli.run(["analyze", write(tmp_path, SURFACE)])[0] == 4


def test_module_entry_point(tmp_path):
    cfg = write(tmp_path, SURFACE)
    proc = subprocess.run([sys.executable, "-m", "eqhodge", "analyze", cfg],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["surface"]["c_E"] == 5
