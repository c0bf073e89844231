import io
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rainbowconn.cli import RunReport, main, parse_report, run, tables_text
from rainbowconn.graph_core import Graph, cycle_graph
from rainbowconn.graphio import to_graph6, write_graph


def _run(argv):
    out = io.StringIO()
    rep = run(argv, out)
    return rep, out.getvalue()


@pytest.fixture
def c7(tmp_path):
    p = tmp_path / "c7.txt"
    write_graph(cycle_graph(7), p)
    return p


def test_compute_and_verify_round_trip(c7, tmp_path):
    wdir = tmp_path / "w"
    rep, text = _run(["compute", str(c7), "--param", "rvc", "--param", "strc", "--emit-witness", str(wdir)])
    assert rep.exit_code == 0
    values = {line["param"]: int(line["value"]) for line in rep.lines}
    assert values == {"RVC": 3, "STRC": 6}
    assert parse_report(text).lines == rep.lines
    rep, _ = _run(["verify", str(c7), str(wdir / "rvc.col"), "--param", "rvc"])
    assert rep.exit_code == 0 and rep.lines[0]["palette"] == "3"


def test_compute_all_on_graph6(tmp_path):
    p = tmp_path / "g.g6"
    p.write_text(to_graph6(cycle_graph(5)) + "\n")
    rep, _ = _run(["compute", str(p), "--param", "all"])
    assert [line["value"] for line in rep.lines] == ["3", "3", "1", "1", "3", "3"]


def test_verify_reports_violation(c7, tmp_path):
    bad = tmp_path / "bad.col"
    bad.write_text("k 3\n" + "".join(f"v {i} 1\n" for i in range(1, 8)))
    rep, _ = _run(["verify", str(c7), str(bad), "--param", "rvc"])
    assert rep.exit_code == 1 and rep.lines[0]["verified"] == "no"
    assert (rep.lines[0]["u"], rep.lines[0]["v"]) == ("1", "4")


def test_verify_kind_mismatch_is_input_error(c7, tmp_path):
    col = tmp_path / "e.col"
    col.write_text("k 1\ne 1 2 1\n")
    rep, _ = _run(["verify", str(c7), str(col), "--param", "rvc"])
    assert rep.exit_code == 2


def test_budget_exit_code(c7):
    rep, _ = _run(["compute", str(c7), "--param", "trc", "--max-nodes", "0"])
    assert rep.exit_code == 3 and rep.lines[0]["value"] == "-"


def test_input_errors(tmp_path):
    rep, _ = _run(["compute", str(tmp_path / "missing.txt"), "--param", "rc"])
    assert rep.exit_code == 2
    p = tmp_path / "dis.txt"
    write_graph(Graph(4, [(0, 1), (2, 3)]), p)
    rep, _ = _run(["compute", str(p), "--param", "rc"])
    assert rep.exit_code == 2
    rep, _ = _run(["compute", str(p), "--param", "xyz"])
    assert rep.exit_code == 2
    assert main(["compute"]) == 2


def test_gen_family_and_construction(tmp_path):
    out = tmp_path / "w6.txt"
    rep, _ = _run(["gen", "--family", "wheel", "--n", "6", "-o", str(out), "--colourings", str(tmp_path / "cols")])
    assert rep.exit_code == 0 and rep.lines[0] == {"graph": "wheel(6)", "n": "7", "m": "12"}
    assert len(list((tmp_path / "cols").glob("*.col"))) == 6
    fig = tmp_path / "f.txt"
    rep, _ = _run(["gen", "--construction", "figure1c", "-o", str(fig), "--colourings", str(tmp_path / "fc")])
    assert rep.exit_code == 0 and (tmp_path / "f_G.txt").exists()
    assert any(line.get("palette") == "14" for line in rep.lines)
    rep, _ = _run(["verify", str(fig), str(tmp_path / "fc" / "figure_strc.col"), "--param", "strc"])
    assert rep.exit_code == 0


def test_gen_rejects_bad_requests():
    assert _run(["gen", "--construction", "Gabm", "--a", "5", "--b", "5"])[0].exit_code == 2
    assert _run(["gen"])[0].exit_code == 2
    assert _run(["gen", "--family", "complete_bipartite", "--n", "3"])[0].exit_code == 2


def test_tables():
    text = tables_text()
    assert "srvc 3:0 4:1 5:1 6:2 7:3 8:3 9:3 10:4 11:6 12:5 13:7 14:7 15:8" in text
    assert "cycle,trc,6,5" in text and "wheel,strc,6,3" in text


def test_scan_command():
    rep, _ = _run(["scan", "--invariants", "--max-n", "4"])
    assert rep.exit_code == 0 and rep.lines[-1]["violations"] == "0"
    rep, _ = _run(["scan", "--nonmonotone", "srvc", "--max-n", "4"])
    assert rep.exit_code == 0 and rep.lines[0]["found"] == "no"


@given(st.lists(st.dictionaries(st.from_regex(r"[a-z_]{1,8}", fullmatch=True),
                                st.text(alphabet="ab c'=\"-", max_size=6), max_size=4), max_size=4),
       st.integers(0, 3))
def test_report_format_round_trips(lines, code):
    rep = RunReport("compute 'x y'", [dict(d) for d in lines], code)
    back = parse_report(rep.format())
    assert (back.command, back.lines, back.exit_code) == (rep.command, rep.lines, rep.exit_code)


def test_console_entry_point(c7):
    proc = subprocess.run([sys.executable, "-m", "rainbowconn.cli", "compute", str(c7), "--param", "src"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "value=4" in proc.stdout
