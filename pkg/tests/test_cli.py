import json

from semivar.cli import main


class TestCheck:
    def test_holds(self, capsys):
        assert main(["check", "--variety", "P", "--id", "ab = aab"]) == 0
        assert "holds" in capsys.readouterr().out

    def test_fails(self, capsys):
        assert main(["check", "--variety", "RZ", "--id", "ab = ba"]) == 1
        assert "FAILS" in capsys.readouterr().out

    def test_zero_reduced_with_patterns(self, capsys):
        code = main(
            ["check", "--variety", "ZR", "--patterns", "aa", "--id", "abab = baba"]
        )
        assert code == 0

    def test_identity_file(self, tmp_path, capsys):
        f = tmp_path / "ids.txt"
        f.write_text("# commutations\nab = ba\naabb = bbaa\n")
        assert main(["check", "--variety", "COM", "--file", str(f)]) == 0
        out = capsys.readouterr().out
        assert out.count("holds") == 2

    def test_json_report(self, tmp_path):
        out = tmp_path / "r.json"
        main(["check", "--variety", "SL", "--id", "ab = ba", "--json", str(out)])
        payload = json.loads(out.read_text())
        assert payload["checks"][0]["status"] == "pass"

    def test_parse_error_exit_2(self, capsys):
        assert main(["check", "--variety", "P", "--id", "ab == ba"]) == 2
        assert "error:" in capsys.readouterr().err

    def test_missing_identities(self):
        assert main(["check", "--variety", "P"]) == 2


class TestReplay:
    def test_full_run(self, tmp_path, capsys):
        out = tmp_path / "replay.json"
        assert main(["replay", "--u", "aaabb", "--v", "bbaaa", "--json", str(out)]) == 0
        payload = json.loads(out.read_text())
        assert payload["lambda"] == [3, 2, 1, 1]
        assert payload["carrier_size"] == 420
        assert payload["ok"] is True
        assert "replay ok: True" in capsys.readouterr().out

    def test_trivial_identity_rejected(self, capsys):
        assert main(["replay", "--u", "aab", "--v", "aab"]) == 2
        assert "trivial" in capsys.readouterr().err

    def test_flat_multiplicities_rejected(self, capsys):
        assert main(["replay", "--u", "aabb", "--v", "bbaa"]) == 2
        assert "strictly decrease" in capsys.readouterr().err


class TestVerifyPaper:
    def test_quick_profile_artifacts(self, tmp_path, capsys):
        json_out = tmp_path / "report.json"
        csv_out = tmp_path / "report.csv"
        figures = tmp_path / "figs"
        code = main(
            [
                "verify-paper",
                "--profile",
                "quick",
                "--json",
                str(json_out),
                "--csv",
                str(csv_out),
                "--figures",
                str(figures),
            ]
        )
        assert code == 0
        payload = json.loads(json_out.read_text())
        assert payload["suite"] == "verify:quick"
        assert all(c["status"] == "pass" for c in payload["checks"])
        assert {"id", "status", "millis"} <= set(payload["checks"][0].keys())
        header = csv_out.read_text().splitlines()[0]
        assert header == "id,status,millis,witness"
        for name in ("suite-summary.png", "n5.png", "m3.png"):
            assert (figures / name).stat().st_size > 0
        out = capsys.readouterr().out
        assert "checks passed" in out

    def test_budget_env_override(self, tmp_path, monkeypatch):
        monkeypatch.setenv("VLL_BUDGET", "quick")
        json_out = tmp_path / "r.json"
        assert main(["verify-paper", "--profile", "full", "--json", str(json_out)]) == 0
        assert json.loads(json_out.read_text())["suite"] == "verify:quick"

    def test_unknown_profile(self, monkeypatch, capsys):
        monkeypatch.setenv("VLL_BUDGET", "enormous")
        assert main(["verify-paper"]) == 2

    def test_check_ids_stable_across_runs(self, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        main(["verify-paper", "--profile", "quick", "--json", str(a)])
        main(["verify-paper", "--profile", "quick", "--json", str(b)])
        strip = lambda p: [
            {k: v for k, v in c.items() if k != "millis"}
            for c in json.loads(p.read_text())["checks"]
        ]
        assert strip(a) == strip(b)


class TestLattice:
    def test_catalog_classify(self, tmp_path, capsys):
        csv_out = tmp_path / "n5.csv"
        fig = tmp_path / "n5.png"
        code = main(
            [
                "lattice",
                "--name",
                "N5",
                "--classify",
                "--congruences",
                "--csv",
                str(csv_out),
                "--figure",
                str(fig),
            ]
        )
        assert code == 0
        out = capsys.readouterr().out
        assert "c: " in out and "mod" in out
        assert "0-distributive: True" in out
        assert "congruences:" in out
        assert fig.stat().st_size > 0
        rows = csv_out.read_text().splitlines()
        assert rows[0].startswith("element,modular")
        assert len(rows) == 6

    def test_lattice_file(self, tmp_path, capsys):
        f = tmp_path / "pent.lat"
        f.write_text("n 5\n0 < 1\n1 < 2\n2 < 4\n0 < 3\n3 < 4\n")
        assert main(["lattice", "--file", str(f), "--classify"]) == 0

    def test_rejects_non_lattice_file(self, tmp_path, capsys):
        f = tmp_path / "bow.lat"
        f.write_text("n 4\n0 < 2\n0 < 3\n1 < 2\n1 < 3\n")
        assert main(["lattice", "--file", str(f)]) == 2
        assert "bound" in capsys.readouterr().err

    def test_needs_source(self):
        assert main(["lattice", "--classify"]) == 2


class TestGset:
    def test_enumerate(self, tmp_path, capsys):
        out = tmp_path / "g.json"
        code = main(["gset", "--lambda", "2,1", "--enumerate", "--json", str(out)])
        assert code == 0
        payload = json.loads(out.read_text())
        assert payload["carrier_size"] == 3
        assert payload["congruence_count"] == 5
        assert "congruences: 5" in capsys.readouterr().out

    def test_acceptance_lambda(self, capsys):
        assert main(["gset", "--lambda", "3,2,1,1"]) == 0
        assert "carrier 420" in capsys.readouterr().out

    def test_bad_partition(self):
        assert main(["gset", "--lambda", "1,2"]) == 2


class TestSapir:
    def test_families_printed(self, tmp_path, capsys):
        out = tmp_path / "s.json"
        assert main(["sapir", "--r", "2", "--basis", "aa", "--json", str(out)]) == 0
        text = capsys.readouterr().out
        assert "bcd = bcccd" in text
        assert "bbbbbbcccccc = ccccccbbbbbb" in text  # x0 expanded to the 6th power
        payload = json.loads(out.read_text())
        assert len(payload["identities"]) == 4

    def test_verbal_flag(self, capsys):
        assert main(["sapir", "--r", "2", "--basis", "aa", "--verbal", "a"]) == 0
        assert "bab = babbabbab" in capsys.readouterr().out


class TestDeriveRefute:
    def test_derive_inline_axiom(self, capsys):
        code = main(["derive", "--axiom", "ab = aab", "--id", "ab = aaab"])
        assert code == 0
        assert "proved" in capsys.readouterr().out

    def test_derive_system_file(self, tmp_path, capsys):
        f = tmp_path / "sys.txt"
        f.write_text("label: squares\naba = abba\n")
        assert main(["derive", "--system", str(f), "--id", "aba = abbbba"]) == 0

    def test_derive_unknown_exit(self):
        assert main(["derive", "--axiom", "ab = aab", "--id", "ab = ba"]) == 1

    def test_refute_hit(self, capsys):
        assert main(["refute", "--model", "RZ2", "--id", "ab = ba"]) == 0
        assert "refuted" in capsys.readouterr().out

    def test_refute_miss(self, capsys):
        assert main(["refute", "--model", "Zr(2)", "--id", "aa = aaaa"]) == 1
        assert "no refutation" in capsys.readouterr().out

    def test_refute_table_file(self, tmp_path):
        f = tmp_path / "rz2.tab"
        f.write_text("2\n0 1\n0 1\n")
        assert main(["refute", "--table", str(f), "--id", "ab = ba"]) == 0

    def test_refute_needs_model(self):
        assert main(["refute", "--id", "ab = ba"]) == 2
