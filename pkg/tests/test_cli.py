from __future__ import annotations

import json

import pytest

from rayleigh import catalog, mtr
from rayleigh.cli import main
from rayleigh.isomorphism import is_isomorphic
from rayleigh.matroid import dual

JLINE = "2=7/10,3=7/10,4=7/10,5=1,6=1,7=1"


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:  # argparse rejects before dispatch
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def test_negcorr_on_s8_exits_violated(capsys):
    code, out, _ = run(capsys, "check", "catalog:s8", "--property", "negcorr", "--json")
    assert code == 1
    d = json.loads(out)
    assert d["verdict"] == "VIOLATED" and d["witnesses"] == [{"pair": ["1", "8"], "value": "-16"}]
    assert d["runtime_ms"] is None


def test_text_report_mentions_witness(capsys):
    code, out, _ = run(capsys, "check", "catalog:s8", "--property", "negcorr")
    assert code == 1 and "VIOLATED" in out and "-16" in out


def test_delta_symbolic_and_at_a_point(capsys):
    code, out, _ = run(capsys, "delta", "catalog:jprime", "-e", "1", "-f", "8", "--at", JLINE)
    assert code == 0 and out.strip() == "-280041/1000000"
    code, out, _ = run(capsys, "delta", "catalog:uniform(2,4)", "-e", "1", "-f", "2")
    assert out.strip() == "y_3^2 + y_3 * y_4 + y_4^2"


@pytest.mark.parametrize("argv", [
    ["delta", "catalog:jprime", "-e", "1", "-f", "8", "--at", "2=0.7"],
    ["delta", "catalog:jprime", "-e", "1", "-f", "8", "--at", "99=1"],
    ["check", "catalog:k4", "--property", "rayleigh-sample"],
    ["check", "catalog:k4", "--property", "nonsense"],
    ["info", "catalog:nope"],
    ["info", "/nonexistent/file.mtr"],
    ["op", "2sum", "catalog:k4"],
    ["op", "expand", "catalog:k4"],
    ["graph", "conductance", "catalog:s8", "-a", "1", "-b", "2"],
])
def test_usage_errors_exit_3(capsys, argv):
    assert run(capsys, *argv)[0] == 3


def test_parse_error_reports_line(capsys, tmp_path):
    p = tmp_path / "bad.mtr"
    p.write_text("name x\nelements 1 2 3\nbases\n1 2\n1 4\n")
    code, _, err = run(capsys, "info", str(p))
    assert code == 3 and "line 5" in err


def test_info_json(capsys):
    code, out, _ = run(capsys, "info", "catalog:f7", "--json")
    d = json.loads(out)
    assert code == 0 and d["rank"] == 3 and d["bases"] == 28


def test_catalog_round_trips(capsys, tmp_path):
    code, out, _ = run(capsys, "catalog", "s8")
    assert code == 0
    assert mtr.parse_document(out).matroid == catalog.get("s8")
    code, out, _ = run(capsys, "catalog", "k4", "--graph")
    assert mtr.parse_document(out).graph.edges == catalog.get_graph("k4").edges
    code, out, _ = run(capsys, "catalog")
    assert code == 0 and "jprime" in out


def test_op_dual_and_minors(capsys, tmp_path):
    code, out, _ = run(capsys, "op", "dual", "catalog:f7")
    assert code == 0 and mtr.parse_document(out).matroid == dual(catalog.get("f7"))
    p = tmp_path / "f7.mtr"
    p.write_text(out)
    code, out, _ = run(capsys, "op", "dual", str(p))
    assert is_isomorphic(mtr.parse_document(out).matroid, catalog.get("f7")) is not None
    code, out, _ = run(capsys, "op", "contract", "catalog:f7", "--set", "1")
    assert mtr.parse_document(out).matroid.rank == 2
    code, out, _ = run(capsys, "op", "expand", "catalog:uniform(1,2)", "--mult", "1=2")
    assert len(mtr.parse_document(out).matroid.bases) == 3


def test_op_two_sum(capsys, tmp_path):
    a, b = tmp_path / "a.mtr", tmp_path / "b.mtr"
    a.write_text(mtr.dump_matroid(catalog.get("g(2,3)")))
    b.write_text(mtr.dump_matroid(catalog.get("uniform(1,2)")))
    code, out, _ = run(capsys, "op", "2sum", str(a), str(b), "--g1", "g", "--g2", "1")
    assert code == 0 and len(mtr.parse_document(out).matroid.bases) == 20


def test_graph_commands(capsys):
    code, out, _ = run(capsys, "graph", "conductance", "catalog:k4", "-a", "1", "-b", "2")
    assert code == 0 and out.strip() == "2"
    code, out, _ = run(capsys, "graph", "certificate", "catalog:k4", "-e", "12", "-f", "34", "--json")
    d = json.loads(out)
    assert code == 0 and d["verified"] is True
    code, out2, _ = run(capsys, "graph", "certificate", "catalog:k4", "-e", "12", "-f", "34",
                        "--reverse", "12", "--json")
    assert json.loads(out2)["P"] != d["P"] and json.loads(out2)["verified"]


def test_rz_violation_and_sampling_exit_codes(capsys):
    code, out, _ = run(capsys, "check", "catalog:f7", "--property", "rz", "--m", "3", "--json")
    assert code == 1 and "12 * x^2 + 12 * x + 4" in out
    code, _, _ = run(capsys, "check", "catalog:p7prime", "--property", "rayleigh-sample",
                     "--samples", "200", "--seed", "1")
    assert code == 2
    code, out, _ = run(capsys, "check", "catalog:jprime", "--property", "rayleigh-sample",
                       "--samples", "5", "--seed", "1", "--inject", JLINE, "--json")
    assert code == 1 and json.loads(out)["witnesses"][0]["value"] == "-280041/1000000"
    code, out, _ = run(capsys, "check", "catalog:uniform(2,4)", "--property", "rayleigh-coeff",
                       "--json", "--timing")
    assert code == 0 and json.loads(out)["runtime_ms"] >= 0


def test_sampling_output_is_reproducible(capsys):
    argv = ["check", "catalog:k4", "--property", "triple", "--mode", "STRONG", "--samples", "30",
            "--seed", "4", "--json"]
    assert run(capsys, *argv) == run(capsys, *argv)
