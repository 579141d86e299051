import io
import json
import sys

from sgchrom.cli import EXIT_INCONCLUSIVE, EXIT_MATH_FAIL, EXIT_OK, EXIT_USAGE, main
from sgchrom.catalog import build
from sgchrom.core import format_graph_text


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_graph(tmp_path, name, graph):
    path = tmp_path / name
    path.write_text(format_graph_text(graph), encoding="utf-8")
    return str(path)


class TestChiC:
    def test_petersen_file(self, tmp_path, capsys):
        path = write_graph(tmp_path, "petersen.sg", build("PETERSEN").graph)
        code, out, _ = run_cli(capsys, "chi-c", path, "--q-max", "3")
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc["schema"] == 1
        assert doc["chi_c"] == {"num": 10, "den": 3}
        assert doc["q_max"] == 3
        assert len(doc["witness"]) == 10

    def test_round_trip_emit_to_stdin(self, capsys, monkeypatch):
        code, out, _ = run_cli(capsys, "catalog", "emit", "T")
        assert code == EXIT_OK
        monkeypatch.setattr(sys, "stdin", io.StringIO(out))
        code, out2, _ = run_cli(capsys, "chi-c", "-")
        assert code == EXIT_OK
        assert json.loads(out2)["chi_c"] == {"num": 10, "den": 3}

    def test_ceiling_exhausted_is_math_fail(self, tmp_path, capsys):
        path = write_graph(tmp_path, "digon.sg", build("DIGON").graph)
        code, out, _ = run_cli(capsys, "chi-c", path, "--ceiling", "3/1")
        assert code == EXIT_MATH_FAIL

    def test_deadline_inconclusive(self, tmp_path, capsys):
        from sgchrom.catalog import apply_indicator, hajos_graph

        path = write_graph(tmp_path, "big.sg", apply_indicator(hajos_graph(1)))
        code, out, _ = run_cli(capsys, "chi-c", path, "--q-max", "3", "--deadline-s", "0.05")
        assert code == EXIT_INCONCLUSIVE
        assert json.loads(out)["status"] == "inconclusive"


class TestCheckHom:
    def test_found_and_not_found(self, tmp_path, capsys):
        path = write_graph(tmp_path, "k4.sg", build("K4_MINUS").graph)
        code, out, _ = run_cli(capsys, "check-hom", path, "8", "2")
        assert code == EXIT_OK and json.loads(out)["found"] is True
        code, out, _ = run_cli(capsys, "check-hom", path, "10", "3")
        assert code == EXIT_OK and json.loads(out)["found"] is False


class TestVerifyColoring:
    def test_valid_labels(self, tmp_path, capsys):
        ng = build("H1")
        gpath = write_graph(tmp_path, "h1.sg", ng.graph)
        cpath = tmp_path / "h1.coloring"
        lines = [
            f"{i} {ng.golden_labels[name]}" for i, name in enumerate(ng.vertex_names)
        ]
        cpath.write_text("\n".join(lines) + "\n", encoding="utf-8")
        code, out, _ = run_cli(capsys, "verify-coloring", gpath, str(cpath))
        assert code == EXIT_OK and json.loads(out)["valid"] is True

    def test_invalid_coloring_fails(self, tmp_path, capsys):
        g = build("DIGON").graph
        gpath = write_graph(tmp_path, "digon.sg", g)
        cpath = tmp_path / "bad.coloring"
        cpath.write_text("0 1\n1 1\n", encoding="utf-8")
        code, out, _ = run_cli(capsys, "verify-coloring", gpath, str(cpath))
        assert code == EXIT_MATH_FAIL and json.loads(out)["valid"] is False


class TestCatalog:
    def test_list(self, capsys):
        code, out, _ = run_cli(capsys, "catalog", "list")
        assert code == EXIT_OK
        doc = json.loads(out)
        names = {row["name"] for row in doc["graphs"]}
        assert {"T", "T_PLUS", "PETERSEN", "DIGON", "EIGHT_V_4"} <= names

    def test_emit_parses_back(self, capsys):
        from sgchrom.core import parse_graph_text

        code, out, _ = run_cli(capsys, "emit", "CUBE_NEG")
        assert code == EXIT_OK
        assert parse_graph_text(out) == build("CUBE_NEG").graph

    def test_unknown_name_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "emit", "NOPE")
        assert code == EXIT_USAGE


class TestLemmaAndCampaign:
    def test_verify_lemma(self, capsys):
        code, out, _ = run_cli(capsys, "verify-lemma", "OBS_K2")
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc["passed"] is True and doc["cases_checked"] == 20

    def test_campaign_negative_cycles(self, capsys):
        code, out, _ = run_cli(capsys, "campaign", "NEGATIVE_CYCLES", "--n-max", "4")
        assert code == EXIT_OK
        assert json.loads(out)["passed"] is True

    def test_failing_campaign_exit_code_and_witnesses(self, tmp_path, capsys):
        code, out, _ = run_cli(
            capsys,
            "campaign",
            "SMALL_CRITICAL",
            "--emit-witnesses",
            str(tmp_path / "wit"),
        )
        assert code == EXIT_MATH_FAIL  # the expected-but-colorable chord class
        assert (tmp_path / "wit").exists()


class TestCriticalCheck:
    def test_digon(self, tmp_path, capsys):
        path = write_graph(tmp_path, "digon.sg", build("DIGON").graph)
        code, out, _ = run_cli(capsys, "critical-check", path, "10", "3")
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc["critical"] is True
        assert len(doc["per_edge"]) == 2
        assert all(row["colorable_without"] for row in doc["per_edge"])


class TestTextFormatFlag:
    def test_text_output(self, tmp_path, capsys):
        path = write_graph(tmp_path, "t.sg", build("T").graph)
        code, out, _ = run_cli(capsys, "--format", "text", "chi-c", path)
        assert code == EXIT_OK
        assert "chi_c:" in out and "schema: 1" in out


class TestUsage:
    def test_no_command(self, capsys):
        assert run_cli(capsys)[0] == EXIT_USAGE

    def test_malformed_graph_reports_line(self, tmp_path, capsys):
        path = tmp_path / "bad.sg"
        path.write_text("2 1\n0 1 ?\n", encoding="utf-8")
        code, _, err = run_cli(capsys, "chi-c", str(path))
        assert code == EXIT_USAGE
        assert "line 2" in err
