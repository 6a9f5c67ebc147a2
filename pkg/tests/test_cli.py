import json
import subprocess
import sys


def run_cli(*args: str):
    return subprocess.run(
        [sys.executable, "-m", "toricrank.cli", *args],
        capture_output=True,
        text=True,
    )


class TestAnalyze:
    def test_kmn_33(self):
        res = run_cli("analyze", "--kmn", "3", "3")
        assert res.returncode == 0
        assert "mu: 9" in res.stdout
        assert "height: 4" in res.stdout
        assert "bar: 9" in res.stdout
        assert "ara_G: 9" in res.stdout

    def test_json_output(self, tmp_path):
        out = tmp_path / "rep.json"
        res = run_cli("analyze", "--kn", "4", "--json", str(out))
        assert res.returncode == 0
        payload = json.loads(out.read_text())
        assert payload["schema"] == 1
        assert payload["mu"] == 2
        assert payload["complete_intersection"] is True

    def test_byte_identical(self):
        a = run_cli("analyze", "--kmn", "2", "3")
        b = run_cli("analyze", "--kmn", "2", "3")
        assert a.stdout == b.stdout

    def test_file_input(self, tmp_path):
        p = tmp_path / "g.txt"
        p.write_text("1 2\n2 3\n3 4\n1 4\n")
        res = run_cli("analyze", str(p))
        assert res.returncode == 0
        assert "mu: 1" in res.stdout


class TestVerbs:
    def test_circuits_k4(self):
        res = run_cli("circuits", "--kn", "4")
        assert res.returncode == 0
        assert "circuits: 3" in res.stdout
        assert "x12*x34 - x14*x23" in res.stdout

    def test_cycles_c6(self):
        res = run_cli("cycles", "--cycle", "6")
        assert res.returncode == 0
        assert "even cycles: 1" in res.stdout

    def test_fibers(self):
        res = run_cli("fibers", "--kn", "4", "--degree", "1,1,1,1")
        assert res.returncode == 0
        assert "fiber size: 3" in res.stdout
        assert "x12*x34" in res.stdout
        assert "x13*x24" in res.stdout
        assert "x14*x23" in res.stdout

    def test_generators(self):
        res = run_cli("generators", "--kmn", "3", "3")
        assert res.returncode == 0
        assert "mu: 9 (exact)" in res.stdout
        assert res.stdout.count("[indispensable]") == 9

    def test_complex_json(self):
        res = run_cli("complex", "--kn", "4")
        assert res.returncode == 0
        payload = json.loads(res.stdout)
        assert payload["schema"] == 1
        assert len(payload["vertices"]) == 3
        assert payload["delta"]["0,1"]["value"] == 2
        assert payload["delta"]["omega"]["value"] == 1


class TestSelftest:
    def test_kn6(self):
        res = run_cli("selftest", "--kn", "6")
        assert res.returncode == 0
        assert "selftest: PASS" in res.stdout
        assert "FAIL" not in res.stdout

    def test_kmn(self):
        res = run_cli("selftest", "--kmn", "2", "3", "--seed", "5")
        assert res.returncode == 0
        assert "selftest: PASS" in res.stdout


class TestErrors:
    def test_usage_error_exit_2(self):
        res = run_cli("analyze")
        assert res.returncode == 2

    def test_unknown_verb_exit_2(self):
        res = run_cli("frobnicate", "--kn", "4")
        assert res.returncode == 2

    def test_missing_file_exit_1(self):
        res = run_cli("analyze", "/nonexistent/graph.txt")
        assert res.returncode == 1
        assert res.stderr

    def test_bad_degree_exit_1(self):
        res = run_cli("fibers", "--kn", "4", "--degree", "1,1")
        assert res.returncode == 1
        assert "degree vector" in res.stderr

    def test_two_sources_exit_2(self):
        res = run_cli("analyze", "--kn", "4", "--cycle", "5")
        assert res.returncode == 2

    def test_domain_error_exit_1(self, tmp_path):
        p = tmp_path / "bad.txt"
        p.write_text("1 1\n")
        res = run_cli("analyze", str(p))
        assert res.returncode == 1
        assert "line 1" in res.stderr
