import json

import pytest

from avgconn.cli import main
from avgconn.core import from_graph6, to_graph6
from avgconn.families import fan, mobius_ladder, star


def run_cli(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io
        import sys

        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture()
def g6_file(tmp_path):
    def write(g, name="g.g6"):
        p = tmp_path / name
        p.write_text(to_graph6(g) + "\n")
        return str(p)

    return write


class TestCompute:
    def test_average_fan6(self, capsys, g6_file):
        code, out, _ = run_cli(capsys, "compute", g6_file(fan(6)), "--average")
        assert code == 0
        assert json.loads(out)["average"] == {"num": 11, "den": 5}

    def test_potential_star(self, capsys, g6_file):
        code, out, _ = run_cli(capsys, "compute", g6_file(star(4)), "--potential")
        assert code == 0
        assert json.loads(out)["value"] == 6

    def test_directed_triangle(self, capsys, monkeypatch):
        code, out, _ = run_cli(
            capsys,
            "compute",
            "--directed",
            "--average",
            stdin="3 3\n0 1\n1 2\n2 0\n",
            monkeypatch=monkeypatch,
        )
        assert code == 0
        assert json.loads(out)["average"] == {"num": 1, "den": 1}

    def test_orientation_hex(self, capsys, g6_file, monkeypatch):
        from avgconn.core import bits_to_hex
        from avgconn.families import snake_orientation

        o = snake_orientation(3)
        code, out, _ = run_cli(
            capsys,
            "compute",
            g6_file(o.graph),
            "--average",
            "--orientation",
            bits_to_hex(o.bits),
        )
        assert code == 0
        assert json.loads(out)["average"] == {"num": 6, "den": 5}

    def test_pairs_table(self, capsys, g6_file):
        code, out, _ = run_cli(capsys, "compute", g6_file(fan(4)), "--pairs")
        js = json.loads(out)
        assert len(js["pairs"]) == 6

    def test_edgelist_autodetect(self, capsys, monkeypatch):
        code, out, _ = run_cli(
            capsys,
            "compute",
            "--average",
            stdin="3 3\n0 1\n1 2\n0 2\n",
            monkeypatch=monkeypatch,
        )
        assert code == 0
        assert json.loads(out)["average"] == {"num": 2, "den": 1}

    def test_parse_error_exit_2(self, capsys, monkeypatch):
        code, _, err = run_cli(
            capsys, "compute", "--average", stdin="@!bad", monkeypatch=monkeypatch
        )
        assert code == 2
        assert "parse error" in err


class TestSearch:
    def test_k4_exhaustive(self, capsys, monkeypatch):
        code, out, _ = run_cli(
            capsys,
            "search",
            "--method",
            "exhaustive",
            stdin="C~\n",
            monkeypatch=monkeypatch,
        )
        js = json.loads(out)
        assert js["best_average"] == {"num": 4, "den": 3}
        assert js["certified"] is True

    def test_star5(self, capsys, g6_file):
        code, out, _ = run_cli(
            capsys, "search", g6_file(star(5)), "--method", "exhaustive"
        )
        assert json.loads(out)["best_average"] == {"num": 2, "den": 5}

    def test_ml8_bnb_certify(self, capsys, g6_file):
        code, out, _ = run_cli(
            capsys,
            "search",
            g6_file(mobius_ladder(8)),
            "--method",
            "bnb",
            "--certify",
        )
        js = json.loads(out)
        assert js["best_average"] == {"num": 9, "den": 7}
        assert js["certify_ok"] is True

    def test_thread_invariance_byte_identical(self, capsys, g6_file):
        path = g6_file(mobius_ladder(6))
        _, out1, _ = run_cli(capsys, "search", path, "--method", "exhaustive", "--threads", "1")
        _, out2, _ = run_cli(capsys, "search", path, "--method", "exhaustive", "--threads", "4")
        assert out1 == out2

    def test_local_deterministic(self, capsys, g6_file):
        path = g6_file(mobius_ladder(6))
        _, out1, _ = run_cli(capsys, "search", path, "--method", "local", "--seed", "3")
        _, out2, _ = run_cli(capsys, "search", path, "--method", "local", "--seed", "3")
        assert out1 == out2

    def test_cap_exit_4(self, capsys, g6_file):
        code, _, err = run_cli(
            capsys,
            "search",
            g6_file(mobius_ladder(8)),
            "--method",
            "exhaustive",
            "--max-edges",
            "5",
        )
        assert code == 4
        assert "cap" in err

    def test_local_disconnected_warns(self, capsys, monkeypatch):
        from avgconn.core import Graph

        g = Graph(4, [(0, 1), (2, 3)])
        code, out, err = run_cli(
            capsys,
            "search",
            "--method",
            "local",
            stdin=to_graph6(g) + "\n",
            monkeypatch=monkeypatch,
        )
        assert code == 0
        assert "warning" in err


class TestGenerateTransformVerify:
    def test_generate_hst(self, capsys):
        code, out, _ = run_cli(capsys, "generate", "h_st", "--s", "5", "--t", "3")
        js = json.loads(out)
        assert js["n"] == 30
        assert from_graph6(js["graph6"]).n == 30

    def test_generate_orientation(self, capsys):
        code, out, _ = run_cli(capsys, "generate", "snake", "--n", "3", "--orient")
        js = json.loads(out)
        assert "orientation" in js

    def test_generate_missing_param_exit_3(self, capsys):
        code, _, err = run_cli(capsys, "generate", "h_st", "--s", "5")
        assert code == 3

    def test_generate_two_tree_orientation(self, capsys):
        code, out, _ = run_cli(
            capsys, "generate", "two_tree_random", "--n", "7", "--seed", "5", "--orient"
        )
        js = json.loads(out)
        assert js["params"]["seed"] == 5 and "orientation" in js

    def test_generate_no_orientation_exit_3(self, capsys):
        code, _, _ = run_cli(capsys, "generate", "complete", "--n", "4", "--orient")
        assert code == 3

    def test_transform_inflate(self, capsys, monkeypatch):
        code, out, _ = run_cli(
            capsys, "transform", "inflate", stdin="C~\n", monkeypatch=monkeypatch
        )
        js = json.loads(out)
        assert js["n"] == 12 and len(js["corner_map"]) == 12

    def test_transform_inflate_precondition_exit_3(self, capsys, monkeypatch):
        code, _, err = run_cli(
            capsys, "transform", "inflate", stdin="Cr\n", monkeypatch=monkeypatch
        )
        assert code == 3

    def test_transform_dual(self, capsys, g6_file):
        code, out, _ = run_cli(capsys, "transform", "dual", g6_file(fan(6)))
        js = json.loads(out)
        assert len(js["faces"]) == 4
        assert len(js["outer_edges"]) == 6

    def test_verify_with_search(self, capsys, g6_file):
        code, out, _ = run_cli(
            capsys,
            "verify",
            "odd_regular_upper",
            g6_file(mobius_ladder(8)),
            "--search",
            "bnb",
        )
        js = json.loads(out)
        assert js["holds"] is True and js["tight"] is True

    def test_verify_value_only(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "two_tree_lower", "--n", "4", "--computed", "13/12"
        )
        js = json.loads(out)
        assert js["holds"] is True and js["tight"] is True

    def test_verify_needs_value(self, capsys):
        code, _, err = run_cli(capsys, "verify", "general_upper", "--n", "5")
        assert code == 3


class TestTable1:
    def test_small_orders(self, capsys):
        code, out, _ = run_cli(capsys, "table1", "--max-order", "5")
        js = json.loads(out)
        mins = {row["n"]: row["min"] for row in js["rows"]}
        assert mins == {
            3: {"num": 1, "den": 1},
            4: {"num": 13, "den": 12},
            5: {"num": 23, "den": 20},
        }
        assert all(row["fan_unique"] for row in js["rows"])

    def test_human_rendering(self, capsys):
        code, out, _ = run_cli(capsys, "table1", "--max-order", "4", "--human")
        assert "13/12" in out and "~1.083333" in out

    def test_range_validated(self, capsys):
        code, _, _ = run_cli(capsys, "table1", "--max-order", "2")
        assert code == 3


class TestRepro:
    def test_single_criterion(self, capsys):
        code, out, _ = run_cli(capsys, "repro", "--criteria", "2")
        assert code == 0
        assert "PASS criterion-2" in out
        assert "1/1 criteria passed" in out
