import io
import json

import pytest

from arcurv import dump_edge_list, gen_cocktail, gen_hamming, gen_paley, load_edge_list
from arcurv.cli import EXIT_ASSERTION, EXIT_INPUT, EXIT_OK, main
from arcurv.report import report_from_dict, report_to_dict, verify_graph


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def h23_file(tmp_path):
    path = tmp_path / "h23.txt"
    path.write_text(dump_edge_list(gen_hamming(2, 3)))
    return str(path)


class TestGen:
    def test_emits_loadable_edge_list(self, capsys):
        code, out, _ = run(capsys, "gen", "hamming", "2", "3")
        assert code == EXIT_OK
        assert load_edge_list(out) == gen_hamming(2, 3)

    def test_unknown_family(self, capsys):
        code, _, err = run(capsys, "gen", "moebius")
        assert code == EXIT_INPUT and "unknown family" in err

    def test_wrong_arity(self, capsys):
        code, _, err = run(capsys, "gen", "paley")
        assert code == EXIT_INPUT and "argument" in err

    def test_invalid_paley_modulus(self, capsys):
        code, _, err = run(capsys, "gen", "paley", "12")
        assert code == EXIT_INPUT and err.startswith("error:")

    def test_size_cap_flag(self, capsys):
        code, _, err = run(capsys, "--size-cap", "10", "gen", "hamming", "2", "4")
        assert code == EXIT_INPUT and "cap" in err


class TestParams:
    def test_text(self, capsys, h23_file):
        code, out, _ = run(capsys, "params", h23_file)
        assert code == EXIT_OK and out.strip() == "(9,4,1,2)"

    def test_json(self, capsys, h23_file):
        code, out, _ = run(capsys, "--format", "json", "params", h23_file)
        assert code == EXIT_OK
        assert json.loads(out) == {"n": 9, "d": 4, "alpha": 1, "beta": 2, "girth": 3}

    def test_stdin(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO(dump_edge_list(gen_cocktail(3))))
        code, out, _ = run(capsys, "params", "-")
        assert code == EXIT_OK and out.strip() == "(6,4,2,4)"

    def test_violation_exit_code(self, capsys, tmp_path):
        path = tmp_path / "path.txt"
        path.write_text("3 2\n0 1\n1 2\n")
        code, out, _ = run(capsys, "params", str(path))
        assert code == EXIT_INPUT and "violation" in out

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "params", "/nonexistent/graph.txt")
        assert code == EXIT_INPUT and err.startswith("error:")


class TestCurvature:
    def test_single_edge(self, capsys, h23_file):
        code, out, _ = run(capsys, "curvature", h23_file, "--edge", "0", "1")
        assert code == EXIT_OK and out.strip() == "0 1 3/4"

    def test_all_csv(self, capsys, h23_file):
        code, out, _ = run(capsys, "--format", "csv", "curvature", h23_file, "--all")
        lines = out.strip().splitlines()
        assert code == EXIT_OK
        assert lines[0] == "u,v,kappa"
        assert len(lines) == 1 + gen_hamming(2, 3).num_edges()
        assert all(line.endswith(",3/4") for line in lines[1:])

    def test_all_json(self, capsys, h23_file):
        code, out, _ = run(capsys, "--format", "json", "curvature", h23_file, "--all")
        rows = json.loads(out)
        assert code == EXIT_OK
        assert {r["kappa"] for r in rows} == {"3/4"}

    def test_idleness_flag(self, capsys, h23_file):
        code, out, _ = run(capsys, "curvature", h23_file, "--edge", "0", "1", "--p", "1")
        assert code == EXIT_OK and out.strip() == "0 1 0"

    def test_requires_edge_or_all(self, capsys, h23_file):
        code, _, err = run(capsys, "curvature", h23_file)
        assert code == EXIT_INPUT and "--all" in err

    def test_non_edge(self, capsys, h23_file):
        code, _, err = run(capsys, "curvature", h23_file, "--edge", "0", "4")
        assert code == EXIT_INPUT and err.startswith("error:")

    def test_threads_flag(self, capsys, h23_file):
        code1, out1, _ = run(capsys, "curvature", h23_file, "--all")
        code4, out4, _ = run(capsys, "--threads", "4", "curvature", h23_file, "--all")
        assert code1 == code4 == EXIT_OK and out1 == out4


class TestVerify:
    def test_h23_passes(self, capsys, h23_file):
        code, out, _ = run(capsys, "verify", h23_file)
        assert code == EXIT_OK
        assert "PASS" in out

    def test_json_round_trip(self, capsys, h23_file):
        code, out, _ = run(capsys, "--format", "json", "verify", h23_file)
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["overall_pass"] is True
        report = verify_graph(gen_hamming(2, 3), graph_id=h23_file)
        assert report_from_dict(report_to_dict(report)) == report

    def test_csv(self, capsys, h23_file):
        code, out, _ = run(capsys, "--format", "csv", "verify", h23_file)
        lines = out.strip().splitlines()
        assert code == EXIT_OK and lines[0] == "u,v,kappa,passed"

    def test_paley13(self, capsys, tmp_path):
        path = tmp_path / "paley13.txt"
        path.write_text(dump_edge_list(gen_paley(13)))
        code, out, _ = run(capsys, "verify", str(path))
        assert code == EXIT_OK and "PASS" in out


class TestHgraph:
    def test_text(self, capsys, h23_file):
        code, out, _ = run(capsys, "hgraph", h23_file, "--edge", "0", "1")
        assert code == EXIT_OK
        assert "pi0 cost: 2/5" in out
        assert "kappa lower bound: 3/4" in out

    def test_json(self, capsys, h23_file):
        code, out, _ = run(capsys, "--format", "json", "hgraph", h23_file, "--edge", "0", "1")
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload["regular"] is True and payload["degree"] == 1
        assert set(payload["edge_classes"]) == {str(i) for i in range(1, 9)}
        assert payload["pi0_cost"] == "2/5"

    def test_girth4_input_rejected(self, capsys, tmp_path):
        from arcurv import gen_hypercube

        path = tmp_path / "q3.txt"
        path.write_text(dump_edge_list(gen_hypercube(3)))
        code, _, err = run(capsys, "hgraph", str(path), "--edge", "0", "1")
        assert code == EXIT_INPUT and err.startswith("error:")


class TestSpectrumDiameterSearch:
    def test_spectrum_text(self, capsys, h23_file):
        code, out, _ = run(capsys, "spectrum", h23_file)
        values = [float(line) for line in out.splitlines() if not line.startswith("#")]
        assert code == EXIT_OK
        assert abs(values[-1] - 4.0) < 1e-8 and abs(values[-2] - 1.0) < 1e-8

    def test_spectrum_json(self, capsys, h23_file):
        code, out, _ = run(capsys, "--format", "json", "spectrum", h23_file)
        payload = json.loads(out)
        assert code == EXIT_OK and len(payload["eigenvalues"]) == 9

    def test_diameter(self, capsys, h23_file):
        code, out, _ = run(capsys, "diameter", h23_file)
        assert code == EXIT_OK and out.strip() == "2"

    def test_search_finds_cube_parameters(self, capsys):
        code, out, _ = run(capsys, "search", "8", "3", "0", "2")
        assert code == EXIT_OK
        from arcurv import detect_amply_params

        g = load_edge_list(out)
        assert detect_amply_params(g).as_tuple() == (8, 3, 0, 2)

    def test_search_none(self, capsys):
        code, out, _ = run(capsys, "search", "5", "3", "0", "2")
        assert code == EXIT_OK and out.strip() == "none"

    def test_search_beta_none(self, capsys):
        code, out, _ = run(capsys, "search", "4", "3", "2", "none")
        assert code == EXIT_OK
        g = load_edge_list(out)
        assert g.num_edges() == 6  # K4


def test_gen_params_pipe(capsys, monkeypatch):
    code, out, _ = run(capsys, "gen", "shrikhande")
    assert code == EXIT_OK
    monkeypatch.setattr("sys.stdin", io.StringIO(out))
    code, out, _ = run(capsys, "params", "-")
    assert code == EXIT_OK and out.strip() == "(16,6,2,2)"
