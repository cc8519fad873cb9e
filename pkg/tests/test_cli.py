import subprocess
import sys

import pytest

from eqarbor import equitable_tree_coloring, gen_random, read_coloring, read_graph, verify, write_coloring, write_graph
from eqarbor.cli import main
from helpers import complete, cycle

K5_DOC = write_graph(complete(5))
C6_DOC = write_graph(cycle(6))


def run(argv, stdin_text=None, monkeypatch=None, capsys=None):
    if stdin_text is not None:
        import io

        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin_text))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


class TestColor:
    def test_k5(self, tmp_path, capsys):
        p = tmp_path / "k5.gr"
        p.write_text(K5_DOC)
        code, out, err = run(["color", str(p)], capsys=capsys)
        assert code == 0
        assert out == "s 3 5\nclass 0: 0 1\nclass 1: 2 3\nclass 2: 4\n"

    def test_out_of_scope_exit2(self, tmp_path, capsys):
        p = tmp_path / "c6.gr"
        p.write_text(C6_DOC)
        code, out, err = run(["color", str(p)], capsys=capsys)
        assert code == 2 and out == ""
        assert "out of scope" in err

    def test_stdin_dash(self, monkeypatch, capsys):
        code, out, _ = run(["color", "-"], stdin_text=K5_DOC, monkeypatch=monkeypatch, capsys=capsys)
        assert code == 0 and out.startswith("s 3 5\n")

    def test_output_file(self, tmp_path, capsys):
        p = tmp_path / "k5.gr"
        p.write_text(K5_DOC)
        outp = tmp_path / "coloring.txt"
        code, out, err = run(["color", str(p), "-o", str(outp)], capsys=capsys)
        assert code == 0 and out == ""
        assert read_coloring(outp.read_text()).n == 5

    def test_parse_error_exit1(self, tmp_path, capsys):
        p = tmp_path / "bad.gr"
        p.write_text("p 3 1\ne 0 9\n")
        code, _, err = run(["color", str(p)], capsys=capsys)
        assert code == 1 and "error" in err

    def test_missing_file_exit1(self, capsys):
        code, _, err = run(["color", "/nonexistent/file.gr"], capsys=capsys)
        assert code == 1 and "error" in err


class TestVerifyCommand:
    def test_pipeline_ok(self, tmp_path, capsys):
        g = gen_random(14, 5)
        gp = tmp_path / "g.gr"
        gp.write_text(write_graph(g))
        cp = tmp_path / "c.txt"
        cp.write_text(write_coloring(equitable_tree_coloring(g)))
        code, out, _ = run(["verify", str(gp), str(cp), "--strict"], capsys=capsys)
        assert code == 0 and out.startswith("ok yes\n")

    def test_tampered_coloring_fails(self, tmp_path, capsys):
        g = complete(4)
        gp = tmp_path / "g.gr"
        gp.write_text(write_graph(g))
        cp = tmp_path / "c.txt"
        cp.write_text("s 2 4\nclass 0: 0 1 2\nclass 1: 3\n")
        code, out, _ = run(["verify", str(gp), str(cp)], capsys=capsys)
        assert code == 1 and out.startswith("ok no\n")
        assert "NotForest" in out

    def test_order_mismatch(self, tmp_path, capsys):
        gp = tmp_path / "g.gr"
        gp.write_text(write_graph(complete(4)))
        cp = tmp_path / "c.txt"
        cp.write_text("s 1 5\nclass 0: 0 1 2 3 4\n")
        code, _, err = run(["verify", str(gp), str(cp)], capsys=capsys)
        assert code == 1 and "error" in err


class TestOracleCommand:
    def test_k5(self, tmp_path, capsys):
        p = tmp_path / "k5.gr"
        p.write_text(K5_DOC)
        code, out, _ = run(["oracle", str(p)], capsys=capsys)
        assert code == 0 and out == "a_eq 3\ngamma 3\n"

    def test_with_k(self, tmp_path, capsys):
        p = tmp_path / "k5.gr"
        p.write_text(K5_DOC)
        code, out, _ = run(["oracle", str(p), "--k", "2"], capsys=capsys)
        assert code == 0 and out.endswith("exists_2 no\n")

    def test_cap_exceeded_exit3(self, tmp_path, capsys):
        g = gen_random(14, 0)
        p = tmp_path / "g.gr"
        p.write_text(write_graph(g))
        code, _, err = run(["oracle", str(p)], capsys=capsys)
        assert code == 3 and "cap" in err


class TestSweepCommand:
    def test_n4_regime_only(self, capsys):
        code, out, _ = run(["sweep", "--n", "4", "--regime-only"], capsys=capsys)
        assert code == 0
        assert out == "SWEEP n=4 tested=64 regime=54 failures=0\n"

    def test_n5_full(self, capsys):
        code, out, _ = run(["sweep", "--n", "5"], capsys=capsys)
        assert code == 0 and "failures=0" in out

    def test_cap_exit3(self, capsys):
        code, _, err = run(["sweep", "--n", "9"], capsys=capsys)
        assert code == 3


class TestGenCommand:
    def test_deterministic_and_parseable(self, capsys):
        code, out1, _ = run(["gen", "--n", "16", "--seed", "7"], capsys=capsys)
        assert code == 0
        code, out2, _ = run(["gen", "--n", "16", "--seed", "7"], capsys=capsys)
        assert out1 == out2
        g = read_graph(out1)
        assert g.n == 16 and max(r.bit_count() for r in g.adj) >= 8

    def test_pipeline_color_verify(self, tmp_path, capsys):
        code, doc, _ = run(["gen", "--n", "20", "--seed", "3"], capsys=capsys)
        g = read_graph(doc)
        coloring = equitable_tree_coloring(g)
        assert verify(g, coloring, strict_linear=True).ok

    def test_pipeline_fuzz(self, tmp_path, capsys):
        # gen | color | verify --strict exits 0 across seeds and orders
        for seed in range(25):
            n = 8 + 3 * seed
            gp = tmp_path / f"g{seed}.gr"
            cp = tmp_path / f"c{seed}.txt"
            code, _, _ = run(["gen", "--n", str(n), "--seed", str(seed), "-o", str(gp)], capsys=capsys)
            assert code == 0
            code, _, _ = run(["color", str(gp), "-o", str(cp)], capsys=capsys)
            assert code == 0
            code, out, _ = run(["verify", str(gp), str(cp), "--strict"], capsys=capsys)
            assert code == 0, out

    def test_tiny_rejected(self, capsys):
        code, _, err = run(["gen", "--n", "1", "--seed", "0"], capsys=capsys)
        assert code == 64


class TestUsage:
    def test_unknown_command(self, capsys):
        assert run(["bogus"], capsys=capsys)[0] == 64

    def test_missing_required(self, capsys):
        assert run(["sweep"], capsys=capsys)[0] == 64

    def test_bad_flag_value(self, capsys):
        assert run(["sweep", "--n", "x"], capsys=capsys)[0] == 64

    def test_no_command(self, capsys):
        assert run([], capsys=capsys)[0] == 64


class TestConsoleScript:
    def test_module_entry(self):
        proc = subprocess.run(
            [sys.executable, "-m", "eqarbor.cli", "sweep", "--n", "3", "--regime-only"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout == "SWEEP n=3 tested=8 regime=4 failures=0\n"
