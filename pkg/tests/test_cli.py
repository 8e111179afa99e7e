"""Command-line surface: JSON/TSV output, exit codes, and subcommands."""

import json

from lexdom.cli import EXIT_CAP, EXIT_DOMAIN, EXIT_OK, EXIT_PARSE, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == EXIT_OK, err
    return json.loads(out)


class TestSolve:
    def test_family_input(self, capsys):
        body = run_json(capsys, "solve", "--param", "gamma", "--family", "path:4")
        assert body["command"] == "solve"
        assert body["results"]["value"] == 2
        assert body["results"]["witness"]["kind"] == "set"

    def test_g6_input(self, capsys):
        body = run_json(capsys, "solve", "--param", "gamma_R", "--g6", "Ch")
        assert body["results"]["value"] == 3
        assert body["results"]["witness"]["kind"] == "assignment"

    def test_edge_list_file(self, capsys, data_dir):
        body = run_json(capsys, "solve", "--param", "gamma_Rp",
                        "--in", str(data_dir / "fig2.edges"))
        assert body["results"]["value"] == 9

    def test_g6_file(self, capsys, tmp_path):
        path = tmp_path / "g.g6"
        path.write_bytes(b"Cs\n")
        body = run_json(capsys, "solve", "--param", "gamma", "--in", str(path))
        assert body["results"]["value"] == 1

    def test_canonical_json_stable(self, capsys):
        argv = ("solve", "--param", "gamma", "--family", "cycle:5")
        first = run_json(capsys, *argv)
        second = run_json(capsys, *argv)
        first.pop("timing_ms")
        second.pop("timing_ms")
        assert first == second

    def test_tsv(self, capsys):
        code, out, _ = run(capsys, "solve", "--param", "gamma", "--family", "path:4",
                           "--format", "tsv")
        assert code == EXIT_OK
        lines = dict(line.split("\t") for line in out.strip().splitlines())
        assert lines["value"] == "2"


class TestPredict:
    def test_exact(self, capsys):
        body = run_json(capsys, "predict", "--param", "gamma_Rp",
                        "--familyG", "complete:3", "--familyH", "path:3")
        assert body["results"]["exact"] == 2
        assert body["results"]["provenance"]

    def test_interval(self, capsys):
        body = run_json(capsys, "predict", "--param", "gamma_Rp",
                        "--familyG", "cycle:5", "--familyH", "path:3")
        assert body["results"]["lo"] <= body["results"]["hi"]
        assert "exact" not in body["results"]


class TestProduct:
    def test_product(self, capsys):
        body = run_json(capsys, "product", "--familyG", "complete:2",
                        "--familyH", "complete:2", "--edge-list")
        assert body["results"]["order"] == 4
        assert body["results"]["edges"] == 6
        assert body["results"]["edge_list"].startswith("4 6")


class TestWitness:
    def test_witness(self, capsys):
        body = run_json(capsys, "witness", "--theorem", "PR_EXACT_ECD",
                        "--familyG", "path:4", "--familyH", "complete:3")
        assert body["results"]["validated"] is True
        assert body["results"]["witness"]["kind"] == "assignment"

    def test_refusal_exit_code(self, capsys):
        code, _, err = run(capsys, "witness", "--theorem", "PR_COR_EOD",
                           "--familyG", "cycle:5", "--familyH", "complete:2")
        assert code == EXIT_DOMAIN
        assert "error" in err


class TestVerify:
    def test_verify_ok(self, capsys, tmp_path, data_dir):
        gs = tmp_path / "gs.g6"
        hs = tmp_path / "hs.g6"
        gs.write_text("Ch\n")   # P4
        hs.write_text("A_\n@\n")  # K2, K1
        code, out, _ = run(capsys, "verify", "--gs", str(gs), "--hs", str(hs))
        assert code == EXIT_OK
        body = json.loads(out)
        assert body["results"]["failed"] == 0
        assert body["results"]["pairs"] == 2

    def test_verify_claim_filter(self, capsys, tmp_path):
        gs = tmp_path / "gs.g6"
        hs = tmp_path / "hs.g6"
        gs.write_text("Ch\n")
        hs.write_text("A_\n")
        code, out, _ = run(capsys, "verify", "--gs", str(gs), "--hs", str(hs),
                           "--claims", "GAMMA_LEX,ROMAN_LEX")
        assert code == EXIT_OK
        body = json.loads(out)
        assert set(body["results"]["totals"]) == {"GAMMA_LEX", "ROMAN_LEX"}


class TestGen:
    def test_gen(self, capsys, tmp_path):
        out_file = tmp_path / "out.g6"
        body = run_json(capsys, "gen", "--family", "corona(cycle:3,2)",
                        "--out", str(out_file))
        assert body["results"]["order"] == 9
        assert out_file.read_text().strip() == body["results"]["graph6"]


class TestExitCodes:
    def test_parse_error(self, capsys):
        code, _, err = run(capsys, "solve", "--param", "gamma", "--g6", "\x01bad")
        assert code == EXIT_PARSE and "error" in err

    def test_missing_input(self, capsys):
        code, _, _ = run(capsys, "solve", "--param", "gamma")
        assert code == EXIT_PARSE

    def test_conflicting_inputs(self, capsys):
        code, _, _ = run(capsys, "solve", "--param", "gamma",
                         "--g6", "Cs", "--family", "path:3")
        assert code == EXIT_PARSE

    def test_domain_error(self, capsys):
        code, _, _ = run(capsys, "solve", "--param", "gamma_t",
                         "--family", "union(path:2,empty:1)")
        assert code == EXIT_DOMAIN

    def test_cap_error(self, capsys):
        code, _, _ = run(capsys, "solve", "--param", "gamma",
                         "--family", "path:30", "--max-n", "10")
        assert code == EXIT_CAP

    def test_env_cap(self, capsys, monkeypatch):
        monkeypatch.setenv("LEXDOM_MAX_N", "5")
        code, _, _ = run(capsys, "solve", "--param", "gamma", "--family", "path:8")
        assert code == EXIT_CAP

    def test_missing_file(self, capsys, tmp_path):
        code, _, _ = run(capsys, "solve", "--param", "gamma",
                         "--in", str(tmp_path / "none.g6"))
        assert code == EXIT_PARSE
