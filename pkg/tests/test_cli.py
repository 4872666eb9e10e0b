import io
import json
import logging

import pandas as pd
import pytest

from commands.cli import run
from core.edge_list import parse_edge_list
from systems.solver import solve

P6 = "6\n0 1\n1 2\n2 3\n3 4\n4 5\n"
P3 = "3\n0 1\n1 2\n"


def invoke(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdin=io.StringIO(stdin), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


class TestSolve:
    def test_p6_from_stdin(self):
        code, out, _ = invoke("solve", "--variant", "pid", stdin=P6)
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "variant=pid optimum=4"
        assert lines[1] == "witness=" + solve(parse_edge_list(P6)).witness.format()

    def test_graph_file(self, tmp_path):
        path = tmp_path / "p3.txt"
        path.write_text(P3)
        code, out, _ = invoke("solve", str(path))
        assert code == 0
        assert out.splitlines() == ["variant=pid optimum=2", "witness=0,2,0"]

    def test_missing_file(self, tmp_path):
        code, _, err = invoke("solve", str(tmp_path / "absent.txt"))
        assert code == 1
        assert err.startswith("error:")

    def test_json_witness_round_trips_through_verify(self):
        code, out, _ = invoke("solve", "--spec", "cycle:7", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload['schema'] == 1
        assert payload['variant'] == "pid"
        assert payload['optimum'] == 4
        assert payload['nodes_explored'] > 0
        labeling = ",".join(str(x) for x in payload['witness'])
        assert invoke("verify", "--spec", "cycle:7", "--labeling", labeling)[:2] == (0, "VALID\n")

    def test_all_optima_text(self):
        code, out, _ = invoke("solve", "--all", stdin=P3)
        assert code == 0
        assert out.splitlines()[2:] == ["optima=2 truncated=false", "0,2,0", "1,0,1"]

    def test_all_optima_json_truncated(self):
        code, out, _ = invoke("solve", "--spec", "cycle:4", "--all", "--cap", "1", "--format", "json")
        payload = json.loads(out)
        assert code == 0
        assert payload['optima'] == [[0, 1, 0, 1]]
        assert payload['truncated'] is True

    def test_other_variant(self):
        code, out, _ = invoke("solve", "--spec", "cycle:4", "--variant", "roman")
        assert out.startswith("variant=roman optimum=3")

    def test_degree_order(self):
        code, out, _ = invoke("solve", "--spec", "star:4", "--order", "degree")
        assert code == 0
        assert out.splitlines()[0] == "variant=pid optimum=2"

    def test_size_guard(self):
        code, _, err = invoke("solve", "--spec", "empty:25")
        assert code == 3
        assert "guard" in err
        assert invoke("solve", "--spec", "empty:25", "--force")[0] == 0

    def test_max_vertices_flag(self):
        assert invoke("solve", "--spec", "path:6", "--max-vertices", "5")[0] == 3

    def test_stats_go_to_stderr(self):
        code, out, err = invoke("solve", "--spec", "path:5", "--stats")
        assert code == 0
        assert "calls=" in err
        assert "calls=" not in out

    def test_parse_error_names_line(self):
        code, _, err = invoke("solve", stdin="2\n0 0\n")
        assert code == 1
        assert "line 2" in err

    def test_non_ascii_vertex_count_exits_one(self):
        code, _, err = invoke("solve", stdin="\u00b3\n")
        assert code == 1
        assert "line 1" in err


class TestVerify:
    def test_valid(self):
        assert invoke("verify", "--variant", "pid", "--labeling", "1,0,1", stdin=P3)[:2] == (0, "VALID\n")

    def test_invalid_lists_violations(self):
        code, out, _ = invoke("verify", "--labeling", "0,0,1", stdin=P3)
        assert code == 4
        assert out.splitlines() == ["INVALID", "vertex=0 neighbor_sum=0", "vertex=1 neighbor_sum=1"]

    def test_size_mismatch(self):
        assert invoke("verify", "--labeling", "1,1", stdin=P3)[0] == 1

    def test_label_two_under_domination(self):
        assert invoke("verify", "--variant", "domination", "--labeling", "0,2,0", stdin=P3)[0] == 1


class TestGenerateAndFormula:
    def test_generate_cycle(self):
        code, out, _ = invoke("generate", "--family", "cycle", "--n", "4")
        assert code == 0
        assert out == "4\n0 1\n0 3\n1 2\n2 3\n"

    def test_generate_spec_product(self):
        code, out, _ = invoke("generate", "--spec", "path:2*path:4")
        graph = parse_edge_list(out)
        assert (graph.n, graph.edge_count) == (8, 10)

    def test_generate_multipartite(self):
        code, out, _ = invoke("generate", "--family", "multipartite", "--parts", "2,1")
        assert out == "3\n0 1\n0 2\n"

    @pytest.mark.parametrize(
        "argv",
        [
            ("generate", "--family", "rook", "--n", "3"),
            ("generate", "--family", "multipartite"),
            ("generate", "--family", "path"),
            ("generate",),
            ("generate", "--family", "cycle", "--n", "2"),
        ],
    )
    def test_generate_bad_arguments(self, argv):
        assert invoke(*argv)[0] == 1

    def test_generate_gadget_matches_realize(self):
        code, out, _ = invoke("generate", "--a", "5", "--b", "5")
        assert code == 0
        realized = invoke("realize", "--a", "5", "--b", "5")[1]
        assert out == "".join(line for line in realized.splitlines(True) if not line.startswith("# construction"))
        assert parse_edge_list(out).n == 10

    def test_generate_induced_gadget(self):
        code, out, _ = invoke("generate", "--a", "3", "--b", "4", "--induced")
        assert code == 0
        assert parse_edge_list(out).n == 9

    @pytest.mark.parametrize(
        "argv",
        [
            ("generate", "--a", "5"),
            ("generate", "--family", "path", "--n", "3", "--a", "5", "--b", "5"),
        ],
    )
    def test_generate_gadget_bad_arguments(self, argv):
        assert invoke(*argv)[0] == 1

    def test_formula_path(self):
        code, out, _ = invoke("formula", "--family", "path", "--n", "9")
        assert code == 0
        assert out == "value=5 source=Thm 2.3: ceil((n+1)/2)\n"

    def test_formula_ladder_with_witness(self):
        code, out, _ = invoke("formula", "--family", "ladder", "--n", "3", "--witness", "--format", "json")
        payload = json.loads(out)
        assert payload['schema'] == 1
        assert payload['value'] == 4
        assert payload['witness'] == [1, 0, 0, 0, 1, 2]
        assert payload['source'].startswith("Thm 4.3")

    def test_formula_rook(self):
        code, out, _ = invoke("formula", "--family", "rook", "--m", "2", "--n", "3")
        assert out.startswith("value=4 ")

    def test_formula_unsupported(self):
        code, _, err = invoke("formula", "--spec", "path:3*path:3")
        assert code == 2
        assert err.startswith("error: no closed form")


class TestRealize:
    def test_induced_gadget(self):
        code, out, _ = invoke("realize", "--a", "3", "--b", "4", "--induced")
        assert code == 0
        assert "# induced 0,1,2,3,4,5,6\n" in out
        graph = parse_edge_list(out)
        assert graph.n == 9
        assert graph.names[7] == "u"

    def test_roman_gadget(self):
        code, out, _ = invoke("realize", "--a", "5", "--b", "5")
        graph = parse_edge_list(out)
        assert code == 0
        assert graph.n == 10
        assert "# name 9 u" in out

    def test_explicit_p(self):
        code, out, _ = invoke("realize", "--a", "3", "--b", "4", "--p", "2")
        assert parse_edge_list(out).n == 5

    def test_stated_even_diagonal_unsupported(self):
        code, _, err = invoke("realize", "--a", "4", "--b", "4", "--layout", "stated")
        assert code == 2
        assert "a = b even" in err

    def test_out_of_range_pair(self):
        assert invoke("realize", "--a", "9", "--b", "4")[0] == 2


class TestProfile:
    def test_text(self):
        code, out, _ = invoke("profile", "--spec", "path:6")
        assert code == 0
        assert out.splitlines() == ["domination=2", "italian=4", "roman=4", "pid=4", "chain=ok"]

    def test_json(self):
        code, out, _ = invoke("profile", "--format", "json", stdin=P3)
        payload = json.loads(out)
        assert payload == {'schema': 1, 'domination': 1, 'italian': 2, 'roman': 2, 'pid': 2, 'chain': True}


class TestTable:
    def test_paths(self):
        code, out, _ = invoke("table", "paths", "--max", "6")
        assert code == 0
        assert "PASS" in out and "FAIL" not in out
        assert "path:6" in out

    def test_csv_export(self, tmp_path):
        target = tmp_path / "cycles.csv"
        code, _, _ = invoke("table", "cycles", "--max", "7", "--csv", str(target))
        frame = pd.read_csv(target)
        assert code == 0
        assert list(frame.columns) == ['instance', 'n', 'formula', 'solver', 'source', 'status']
        assert len(frame) == 5
        assert (frame['formula'] == frame['solver']).all()

    @pytest.mark.parametrize("sweep, maximum", [("structure", "7"), ("roman", "3"), ("italian-p2pn", "4")])
    def test_other_sweeps_pass(self, sweep, maximum):
        code, out, _ = invoke("table", sweep, "--max", maximum)
        assert code == 0, out

    def test_unknown_sweep(self):
        assert invoke("table", "grids")[0] == 1

    def test_record_and_history(self, tmp_path):
        db = str(tmp_path / "ledger.db")
        code, _, err = invoke("table", "p2pn", "--max", "3", "--record", "--db", db)
        assert code == 0
        assert "recorded run 1" in err
        code, out, _ = invoke("history", "--db", db)
        assert code == 0
        assert out.startswith("run=1 sweep=p2pn rows=3 status=PASS")


class TestUsage:
    @pytest.mark.parametrize(
        "argv", [(), ("frobnicate",), ("solve", "--bogus"), ("solve", "--variant", "total"), ("history", "--limit", "x")]
    )
    def test_usage_errors_exit_one(self, argv):
        code, _, err = invoke(*argv)
        assert code == 1
        assert err.startswith("error:")


def test_safe_stream_handler_writes_records():
    from main import SafeStreamHandler

    stream = io.StringIO()
    handler = SafeStreamHandler(stream)
    handler.setFormatter(logging.Formatter('%(levelname)s %(message)s'))
    logger = logging.getLogger("pidom.test")
    logger.addHandler(handler)
    try:
        logger.warning("guard overridden")
    finally:
        logger.removeHandler(handler)
    assert stream.getvalue() == "WARNING guard overridden\n"


def test_safe_stream_handler_falls_back_to_ascii():
    from main import SafeStreamHandler

    raw = io.BytesIO()
    stream = io.TextIOWrapper(raw, encoding='ascii', newline='\n')
    handler = SafeStreamHandler(stream)
    handler.setFormatter(logging.Formatter('%(message)s'))
    record = logging.LogRecord("pidom.test", logging.INFO, __file__, 0, "vertex \u00fc named", None, None)
    handler.emit(record)
    assert raw.getvalue() == b"vertex ? named\n"
