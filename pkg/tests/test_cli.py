"""Command-line verbs: happy paths, negative answers, witnesses, error
handling, and byte-identical reruns."""

import io

import pytest

from fvsat.cli import run
from fvsat.c1p import gen_interval_point_family, interval_point_digraph
from fvsat.digraph import Digraph, format_edge_list, read_edge_list
from fvsat.flowgraph import gen_reducible
from fvsat.reduction import parse_mapping, to_mnae
from fvsat.sat import Formula, clause, format_dimacs, gen_3sat, parse_dimacs

TRIANGLE_EDGES = "p dg 3 3\n1 2\n2 3\n3 1\n"
LOOP_EDGES = "p dg 3 3\n1 2\n2 3\n3 2\n"
STAR_EDGES = "p dg 3 4\n1 2\n1 3\n2 3\n3 2\n"
BIDI_K3_EDGES = "p dg 3 6\n1 2\n1 3\n2 1\n2 3\n3 1\n3 2\n"
ONE_CLAUSE = "p cnf 3 1\n1 -2 3 0\n"
MONO_CLAUSE = "p cnf 3 1\n1 2 3 0\n"
TRIANGLE_MATRIX = "3 3\n010\n001\n100\n"
BAD_MATRIX = "3 3\n110\n011\n101\n"


@pytest.fixture
def dump(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return write


def out_of(capsys):
    captured = capsys.readouterr()
    return captured.out, captured.err


class TestReduce:
    def test_stdout_carries_everything(self, dump, capsys):
        code = run(["reduce", "--in", dump("c.cnf", ONE_CLAUSE)])
        out, err = out_of(capsys)
        assert code == 0 and err == ""
        assert out.startswith("p cnf 21 18\n")
        assert "var 1 alpha 1 beta 2 a 3 b 4 c 5" in out
        assert out.endswith("D=8\n")

    def test_files_round_trip(self, dump, tmp_path, capsys):
        out_path = tmp_path / "f.cnf"
        map_path = tmp_path / "f.map"
        code = run(["reduce", "--in", dump("c.cnf", ONE_CLAUSE),
                    "--out", str(out_path), "--map", str(map_path)])
        out, _ = out_of(capsys)
        assert code == 0
        assert out == "D=8\n"
        f, vm = to_mnae(parse_dimacs(ONE_CLAUSE))
        assert parse_dimacs(out_path.read_text()) == f
        parsed = parse_mapping(map_path.read_text())
        assert parsed.z == vm.z
        assert parsed.var_groups == vm.var_groups
        assert parsed.clause_pairs == vm.clause_pairs

    def test_repeated_literals_normalized_first(self, dump, capsys):
        code = run(["reduce", "--in", dump("r.cnf", "p cnf 2 1\n1 1 2 0\n")])
        out, _ = out_of(capsys)
        assert code == 0
        assert out.startswith("p cnf 26 24\n")

    def test_malformed_input(self, dump, capsys):
        code = run(["reduce", "--in", dump("bad.cnf", "p cnf 3 1\n1 2 0\n")])
        _, err = out_of(capsys)
        assert code == 2
        assert err.startswith("error:")


class TestRepgraph:
    def test_edge_list(self, dump, capsys):
        code = run(["repgraph", "--in", dump("m.cnf", MONO_CLAUSE)])
        out, _ = out_of(capsys)
        assert code == 0
        assert out == TRIANGLE_EDGES

    def test_dot(self, dump, capsys):
        code = run(["repgraph", "--dot", "--in", dump("m.cnf", MONO_CLAUSE)])
        out, _ = out_of(capsys)
        assert code == 0
        assert out.startswith("digraph")
        assert "1 -> 2;" in out

    def test_stdin(self, dump, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO(MONO_CLAUSE))
        assert run(["repgraph", "--in", "-"]) == 0
        out, _ = out_of(capsys)
        assert out == TRIANGLE_EDGES

    def test_non_monotone_rejected(self, dump, capsys):
        code = run(["repgraph", "--in", dump("c.cnf", ONE_CLAUSE)])
        _, err = out_of(capsys)
        assert code == 2 and err.startswith("error:")


class TestSolve:
    def test_mfvs(self, dump, capsys):
        code = run(["solve", "mfvs", "--in", dump("g.dg", TRIANGLE_EDGES)])
        out, _ = out_of(capsys)
        assert code == 0
        assert out == "value 1\nwitness 1\n"

    def test_amfvs_negative(self, dump, capsys):
        k4 = Digraph(4, [(u, v) for u in range(1, 5)
                         for v in range(1, 5) if u != v])
        code = run(["solve", "amfvs", "--in",
                    dump("k4.dg", format_edge_list(k4))])
        out, _ = out_of(capsys)
        assert code == 1
        assert out == "value none\n"

    def test_min_ones_standard(self, dump, capsys):
        code = run(["solve", "min-ones", "--in", dump("m.cnf", MONO_CLAUSE)])
        out, _ = out_of(capsys)
        assert code == 0
        assert out == "value 1\nwitness 1\n"

    def test_min_ones_nae_unsat(self, dump, capsys):
        une = Formula(var_count=3, clauses=tuple(
            clause(1, s2 * 2, s3 * 3) for s2 in (1, -1) for s3 in (1, -1)))
        code = run(["solve", "min-ones", "--mode", "nae",
                    "--in", dump("u.cnf", format_dimacs(une))])
        out, _ = out_of(capsys)
        assert code == 1
        assert out == "value 4\nwitness none\n"

    def test_guard(self, dump, capsys):
        code = run(["solve", "mfvs", "--guard", "2",
                    "--in", dump("g.dg", TRIANGLE_EDGES)])
        _, err = out_of(capsys)
        assert code == 3
        assert err.startswith("guard exceeded:")

    def test_wrong_input_format(self, dump, capsys):
        code = run(["solve", "min-ones", "--in",
                    dump("g.dg", TRIANGLE_EDGES)])
        _, err = out_of(capsys)
        assert code == 2 and err.startswith("error:")


class TestCheck:
    def test_3c_true(self, dump, capsys):
        assert run(["check", "3c", "--in", dump("g.dg", TRIANGLE_EDGES)]) == 0
        assert out_of(capsys)[0] == "result true\n"

    def test_3c_false(self, dump, capsys):
        four = "p dg 4 4\n1 2\n2 3\n3 4\n4 1\n"
        assert run(["check", "3c", "--in", dump("g.dg", four)]) == 1
        assert out_of(capsys)[0] == "result false\n"

    def test_3c_limit(self, dump, capsys):
        code = run(["check", "3c", "--limit", "2",
                    "--in", dump("g.dg", BIDI_K3_EDGES)])
        _, err = out_of(capsys)
        assert code == 3
        assert err.startswith("cycle limit exceeded:")

    def test_s3c(self, dump, capsys):
        assert run(["check", "s3c", "--in", dump("m.cnf", MONO_CLAUSE)]) == 0
        assert out_of(capsys)[0] == "result true\n"
        two = "p cnf 4 2\n1 2 3 0\n2 1 4 0\n"
        assert run(["check", "s3c", "--in", dump("t.cnf", two)]) == 1
        assert out_of(capsys)[0] == "result false\n"

    def test_lr(self, dump, capsys):
        path = dump("g.dg", TRIANGLE_EDGES)
        assert run(["check", "lr", "--in", path,
                    "--order", "1 2 3", "--right", "1,2"]) == 0
        assert out_of(capsys)[0] == "result true\n"
        assert run(["check", "lr", "--in", path, "--order", "1 2 3"]) == 1
        assert out_of(capsys)[0] == "result false\n"

    def test_lr_needs_order(self, dump, capsys):
        code = run(["check", "lr", "--in", dump("g.dg", TRIANGLE_EDGES)])
        _, err = out_of(capsys)
        assert code == 2
        assert "check lr needs --order" in err

    def test_lr_bad_order(self, dump, capsys):
        code = run(["check", "lr", "--in", dump("g.dg", TRIANGLE_EDGES),
                    "--order", "1 2"])
        _, err = out_of(capsys)
        assert code == 2
        assert "not a permutation" in err

    def test_flow_reducible(self, dump, capsys):
        assert run(["check", "flow-reducible",
                    "--in", dump("l.dg", LOOP_EDGES)]) == 0
        assert out_of(capsys)[0] == "result true\n"
        assert run(["check", "flow-reducible",
                    "--in", dump("s.dg", STAR_EDGES)]) == 1
        assert out_of(capsys)[0] == "result false\nwitness 2 1\n"

    def test_c1p_matrix(self, dump, capsys):
        assert run(["check", "c1p",
                    "--in", dump("m.mat", TRIANGLE_MATRIX)]) == 0
        assert out_of(capsys)[0] == "result true\norder 0 1 2\n"
        assert run(["check", "c1p", "--in", dump("b.mat", BAD_MATRIX)]) == 1
        assert out_of(capsys)[0] == "result false\nwitness 0 1 2\n"

    def test_c1p_edge_list(self, dump, capsys):
        assert run(["check", "c1p",
                    "--in", dump("g.dg", TRIANGLE_EDGES)]) == 0
        assert out_of(capsys)[0] == "result true\norder 0 1 2\n"


class TestFlow:
    def test_analyze_reducible(self, dump, capsys):
        code = run(["flow", "analyze", "--in", dump("l.dg", LOOP_EDGES)])
        out, _ = out_of(capsys)
        assert code == 0
        assert out == ("source 1\n"
                       "reducible true\n"
                       "heads 2\n"
                       "pstar 2 3\n"
                       "pstar 1 2\n"
                       "vertex\tpo\tsn\thn\n"
                       "1\t1\t1\t1\n"
                       "2\t2\t2\t1\n"
                       "3\t3\t3\t2\n"
                       "reduction-order 3 2 1\n")

    def test_analyze_irreducible(self, dump, capsys):
        code = run(["flow", "analyze", "--in", dump("s.dg", STAR_EDGES)])
        out, _ = out_of(capsys)
        assert code == 1
        assert "reducible false\n" in out
        assert "failure 2 1\n" in out
        assert "pstar 2 1 3\n" in out
        assert "2\t2\t-\t1\n" in out
        assert "reduction-order" not in out

    def test_check(self, dump, capsys):
        assert run(["flow", "check", "--in", dump("l.dg", LOOP_EDGES)]) == 0
        assert out_of(capsys)[0] == "result true\n"
        assert run(["flow", "check", "--in", dump("s.dg", STAR_EDGES)]) == 1
        assert out_of(capsys)[0] == "result false\nwitness 2 1\n"

    def test_lr_order(self, dump, capsys):
        assert run(["flow", "lr-order", "--in", dump("l.dg", LOOP_EDGES)]) == 0
        assert out_of(capsys)[0] == "order 2 3 1\nsides R L L\nright 2\n"
        assert run(["flow", "lr-order", "--in", dump("s.dg", STAR_EDGES)]) == 1
        assert out_of(capsys)[0] == "result false\nwitness 2 1\n"

    def test_dot(self, dump, capsys):
        code = run(["flow", "analyze", "--dot",
                    "--in", dump("l.dg", LOOP_EDGES)])
        out, _ = out_of(capsys)
        assert code == 0
        assert out.startswith("digraph")
        assert "3 -> 2 [style=dashed, penwidth=2];" in out

    def test_unreachable_vertex(self, dump, capsys):
        code = run(["flow", "analyze",
                    "--in", dump("u.dg", "p dg 2 0\n")])
        _, err = out_of(capsys)
        assert code == 2 and err.startswith("error:")

    def test_other_source(self, dump, capsys):
        text = "p dg 3 3\n2 1\n1 3\n3 1\n"
        code = run(["flow", "check", "--source", "2",
                    "--in", dump("g.dg", text)])
        assert code == 0
        assert out_of(capsys)[0] == "result true\n"


class TestC1P:
    def test_good_order_matrix(self, dump, capsys):
        assert run(["c1p", "--in", dump("m.mat", TRIANGLE_MATRIX)]) == 0
        assert out_of(capsys)[0] == "order 0 1 2\n"

    def test_good_order_edges_labeled_by_vertex(self, dump, capsys):
        assert run(["c1p", "good-order",
                    "--in", dump("g.dg", TRIANGLE_EDGES)]) == 0
        assert out_of(capsys)[0] == "order 1 2 3\n"

    def test_good_order_witness(self, dump, capsys):
        assert run(["c1p", "--in", dump("b.mat", BAD_MATRIX)]) == 1
        assert out_of(capsys)[0] == "witness 0 1 2\n"

    def test_lr_order_matrix(self, dump, capsys):
        assert run(["c1p", "lr-order",
                    "--in", dump("m.mat", TRIANGLE_MATRIX)]) == 0
        assert out_of(capsys)[0] == "order 1 2 3\nsides R R L\nright 1 2\n"

    def test_lr_order_witness(self, dump, capsys):
        bad = Digraph(4, [(1, 2), (1, 3), (2, 3), (2, 4), (3, 2), (3, 4)])
        assert run(["c1p", "lr-order",
                    "--in", dump("g.dg", format_edge_list(bad))]) == 1
        assert out_of(capsys)[0] == "witness 1 2 3\n"


class TestGen:
    def test_3sat(self, dump, capsys):
        code = run(["gen", "3sat", "--seed", "1",
                    "--vars", "4", "--clauses", "3"])
        out, _ = out_of(capsys)
        assert code == 0
        assert parse_dimacs(out) == gen_3sat(1, 4, 3)

    def test_3sat_monotone(self, capsys):
        code = run(["gen", "3sat", "--seed", "5", "--monotone"])
        out, _ = out_of(capsys)
        assert code == 0
        f = parse_dimacs(out)
        assert f == gen_3sat(5, 4, 4, monotone=True)
        assert all(lit.positive for cl in f.clauses for lit in cl.literals)

    def test_reducible(self, capsys):
        code = run(["gen", "reducible", "--seed", "2",
                    "--vertices", "6", "--extra", "4"])
        out, _ = out_of(capsys)
        assert code == 0
        assert read_edge_list(out) == gen_reducible(2, 6, 4)

    def test_ipd_listing(self, capsys):
        code = run(["gen", "ipd", "--seed", "3", "--count", "4"])
        out, _ = out_of(capsys)
        assert code == 0
        fam = gen_interval_point_family(3, 4)
        lines = out.splitlines()
        assert len(lines) == 4
        lo, hi = fam.intervals[0]
        assert lines[0] == f"v 1 interval {lo} {hi} point {fam.points[0]}"

    def test_ipd_graph(self, capsys):
        code = run(["gen", "ipd", "--seed", "3", "--count", "4", "--graph"])
        out, _ = out_of(capsys)
        assert code == 0
        expected = interval_point_digraph(gen_interval_point_family(3, 4))
        assert read_edge_list(out) == expected


class TestUsage:
    def test_unknown_verb(self, capsys):
        assert run(["frobnicate"]) == 2

    def test_no_verb(self, capsys):
        assert run([]) == 2

    def test_missing_input_flag(self, capsys):
        assert run(["repgraph"]) == 2

    def test_missing_file(self, capsys):
        code = run(["repgraph", "--in", "/nonexistent/nowhere.cnf"])
        _, err = out_of(capsys)
        assert code == 2 and err.startswith("error:")

    def test_help_exits_zero(self, capsys):
        assert run(["--help"]) == 0


class TestDeterminism:
    CASES = None

    def commands(self, dump):
        if TestDeterminism.CASES is None:
            k4 = Digraph(4, [(u, v) for u in range(1, 5)
                             for v in range(1, 5) if u != v])
            TestDeterminism.CASES = [
                ["reduce", "--in", dump("c.cnf", ONE_CLAUSE)],
                ["repgraph", "--in", dump("m.cnf", MONO_CLAUSE)],
                ["repgraph", "--dot", "--in", dump("m2.cnf", MONO_CLAUSE)],
                ["solve", "mfvs", "--in", dump("t.dg", TRIANGLE_EDGES)],
                ["solve", "amfvs", "--in",
                 dump("k4.dg", format_edge_list(k4))],
                ["solve", "min-ones", "--mode", "nae",
                 "--in", dump("m3.cnf", MONO_CLAUSE)],
                ["check", "3c", "--in", dump("t2.dg", TRIANGLE_EDGES)],
                ["check", "s3c", "--in", dump("m4.cnf", MONO_CLAUSE)],
                ["check", "lr", "--in", dump("t3.dg", TRIANGLE_EDGES),
                 "--order", "1 2 3", "--right", "1 2"],
                ["check", "flow-reducible", "--in", dump("l.dg", LOOP_EDGES)],
                ["check", "c1p", "--in", dump("mm.mat", TRIANGLE_MATRIX)],
                ["flow", "analyze", "--in", dump("l2.dg", LOOP_EDGES)],
                ["flow", "analyze", "--in", dump("s.dg", STAR_EDGES)],
                ["flow", "lr-order", "--in", dump("l3.dg", LOOP_EDGES)],
                ["c1p", "--in", dump("mm2.mat", TRIANGLE_MATRIX)],
                ["c1p", "lr-order", "--in", dump("mm3.mat", TRIANGLE_MATRIX)],
                ["gen", "3sat", "--seed", "9"],
                ["gen", "reducible", "--seed", "9"],
                ["gen", "ipd", "--seed", "9"],
            ]
        return TestDeterminism.CASES

    def test_reruns_are_byte_identical(self, dump, capsys):
        for argv in self.commands(dump):
            first_code = run(argv)
            first = out_of(capsys)
            second_code = run(argv)
            second = out_of(capsys)
            assert first_code == second_code, argv
            assert first == second, argv
