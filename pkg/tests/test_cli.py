# -*- coding: utf-8 -*-
"""
命令行测试：输出内容、结构化格式与退出码
"""

import json

import pytest

from main import run, EXIT_INPUT, EXIT_NON_ORIENTABLE, EXIT_CAP
from data_platform.models import GenusPolynomial, RotationSystem, parse_poly
from capability_platform.engine import PartialDualEngine
from components.reference_checks import _anchor_checks


@pytest.fixture(autouse=True)
def clean_env(monkeypatch, tmp_path):
    """隔离环境变量与工作目录中的配置文件"""
    monkeypatch.delenv("PD_THREADS", raising=False)
    monkeypatch.chdir(tmp_path)


def _run(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out.strip(), captured.err


class TestEval:
    """eval 命令"""

    def test_pde(self, capsys):
        code, out, _ = _run(capsys, "eval", "--rotation", "(a,b,c,d,-b,-a,c,d)")
        assert code == 0
        assert out == "4z^2 + 12z^4"

    def test_pdg(self, capsys):
        code, out, _ = _run(capsys, "eval", "--pdg", "--rotation",
                            "(a,c,h,c,b,h,b,a,d,g,e,f,e,d,g,f)")
        assert code == 0
        assert out == "48z + 160z^2 + 48z^3"

    def test_pdg_non_orientable(self, capsys):
        code, out, err = _run(capsys, "eval", "--pdg", "--rotation", "(a,-a)")
        assert code == EXIT_NON_ORIENTABLE
        assert out == ""
        assert "a" in err

    def test_parse_error_names_label(self, capsys):
        code, _, err = _run(capsys, "eval", "--rotation", "(a,b,a)")
        assert code == EXIT_INPUT
        assert "b" in err

    def test_structured_matches_text(self, capsys):
        _, text, _ = _run(capsys, "eval", "--rotation", "(a,b,c,d,-b,-a,c,d)")
        _, out, _ = _run(capsys, "eval", "--rotation", "(a,b,c,d,-b,-a,c,d)",
                         "--format", "structured")
        data = json.loads(out)
        assert data["polynomial"] == {"2": 4, "4": 12}
        assert GenusPolynomial.from_dict(data["polynomial"]) == parse_poly(text)
        assert data["meta"]["interpolating"] is False
        assert data["input"] == "(a,b,c,d,-b,-a,c,d)"

    def test_graph_file(self, capsys, tmp_path):
        path = tmp_path / "graph.txt"
        path.write_text("v0: x a a\nv1: x b -b\n", encoding="utf-8")
        expected = PartialDualEngine().pde_direct(RotationSystem.parse(path.read_text()))
        code, out, _ = _run(capsys, "eval", "--graph", str(path))
        assert code == 0
        assert parse_poly(out) == expected
        code, out, _ = _run(capsys, "eval", "--graph", str(path), "--via-bouquet")
        assert parse_poly(out) == expected

    def test_graph_file_both_ends_marked(self, capsys, tmp_path):
        path = tmp_path / "marked.txt"
        path.write_text("v0: -x a a\nv1: -x b b\n", encoding="utf-8")
        expected = PartialDualEngine().pde_direct(RotationSystem.parse("v0: x a a\nv1: x b b"))
        code, out, _ = _run(capsys, "eval", "--graph", str(path))
        assert code == 0
        assert parse_poly(out) == expected

    def test_missing_graph_file(self, capsys, tmp_path):
        code, _, _ = _run(capsys, "eval", "--graph", str(tmp_path / "none.txt"))
        assert code == EXIT_INPUT

    def test_input_required(self):
        with pytest.raises(SystemExit) as exc:
            run(["eval"])
        assert exc.value.code == 2


class TestBouquetCommands:
    """seq / factor / dual"""

    def test_seq(self, capsys):
        code, out, _ = _run(capsys, "seq", "--rotation",
                            "(a,b,-a,c,b,i,i,d,e,c,f,g,h,d,j,-j,h,-e,g,f)")
        assert code == 0
        assert out == "(-4, -1, -0, 0, 1, 2, 2, 2, 3, 5)"

    def test_seq_table(self, capsys):
        code, out, _ = _run(capsys, "seq", "--table", "--rotation", "(a,b,-a,b)")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "(-1, 1)"
        assert "alpha" in lines[1]

    def test_factor(self, capsys):
        code, out, _ = _run(capsys, "factor", "--rotation", "(a,a,b,b,c,c)")
        assert code == 0
        assert out.splitlines() == ["(a, a)", "(b, b)", "(c, c)"]

    def test_dual(self, capsys):
        code, out, _ = _run(capsys, "dual", "--rotation", "(a,a)", "--subset", "a")
        assert code == 0
        assert out == "v0: a\nv1: a"

    def test_dual_unknown_label(self, capsys):
        code, _, err = _run(capsys, "dual", "--rotation", "(a,a)", "--subset", "z")
        assert code == EXIT_INPUT
        assert "z" in err


class TestCensusCommands:
    """enumerate / search / table"""

    def test_enumerate_prime(self, capsys):
        code, out, _ = _run(capsys, "enumerate", "--edges", "3", "--prime",
                            "--format", "structured")
        assert code == 0
        data = json.loads(out)
        assert data["meta"]["count"] == 10
        assert data["polynomial"] is None

    def test_enumerate_text(self, capsys):
        code, out, _ = _run(capsys, "enumerate", "--edges", "1")
        assert code == 0
        assert out.splitlines()[0] == "共 2 个类"

    def test_enumerate_cap(self, capsys):
        code, _, _ = _run(capsys, "enumerate", "--edges", "7")
        assert code == EXIT_CAP

    def test_negative_edges(self):
        with pytest.raises(SystemExit) as exc:
            run(["enumerate", "--edges", "-1"])
        assert exc.value.code == 2

    def test_search_single_coefficient(self, capsys):
        code, out, _ = _run(capsys, "search", "--conjecture", "3.1", "--max-edges", "3")
        assert code == 0
        assert "共 1 个类" in out
        assert "(1, 2, 3, 1, 2, 3)" in out
        assert "8z" in out

    def test_table(self, capsys):
        code, out, _ = _run(capsys, "table", "--all-edges", "2", "--orientable-edges", "2")
        assert code == 0
        assert "2 + 2z^2" in out

    def test_threads_give_identical_output(self, capsys, monkeypatch):
        _, single, _ = _run(capsys, "enumerate", "--edges", "3", "--format", "structured")
        monkeypatch.setenv("PD_THREADS", "2")
        _, parallel, _ = _run(capsys, "enumerate", "--edges", "3", "--format", "structured")
        assert single == parallel


class TestOutputAndConfig:
    """--out 与 --config"""

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "result.json"
        code, out, err = _run(capsys, "eval", "--rotation", "(a,-a)",
                              "--format", "structured", "--out", str(target))
        assert code == 0
        assert out == ""
        assert "已保存" in err
        assert json.loads(target.read_text(encoding="utf-8"))["polynomial"] == {"1": 2}

    def test_config_cap(self, capsys, tmp_path):
        path = tmp_path / "small.yaml"
        path.write_text("census:\n  max_edges: 2\n", encoding="utf-8")
        code, _, _ = _run(capsys, "enumerate", "--edges", "3", "--config", str(path))
        assert code == EXIT_CAP

    def test_missing_config(self, capsys, tmp_path):
        code, _, _ = _run(capsys, "enumerate", "--edges", "1",
                          "--config", str(tmp_path / "absent.yaml"))
        assert code == EXIT_INPUT


class TestReferenceAnchors:
    """verify-paper 的构造锚点"""

    def test_anchor_checks_pass(self):
        checks = _anchor_checks(None)
        assert [c.name for c in checks] == ["f(1,1)=2", "f(1,-1)=1", "f(1,2,1,2)=1"]
        assert all(c.passed for c in checks)
