import json

import pytest

from gaugedecomp.cli import main, parse_group, parse_space
from gaugedecomp import LieGroup, Sphere

SPEC = '{"n":4,"q":3,"xi":[1,0]}'


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestParsing:

    def test_group_names(self):
        assert parse_group("SU2") == LieGroup("SU", 2)
        assert parse_group("SU(2)") == LieGroup("SU", 2)
        assert parse_group("Sp3") == LieGroup("Sp", 3)
        assert parse_group("Spin7") == LieGroup("Spin", 7)
        assert parse_group("G2") == LieGroup("G2", 2)
        assert parse_group("E8") == LieGroup("E8", 8)

    def test_space_names(self):
        assert parse_space("sphere:3") == Sphere(3)
        assert parse_space("SU5") == LieGroup("SU", 5)


class TestEquivalent:

    def test_equivalent_verdict(self, capsys):
        code, out, _ = run(
            capsys, "equivalent", "--group", "SU2", "--spec", SPEC,
            "--k", "5,7", "--k2", "1,0", "--json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["verdict"] == "Equivalent"
        assert payload["reason"]

    def test_not_equivalent_verdict(self, capsys):
        code, out, _ = run(
            capsys, "equivalent", "--group", "SU2", "--spec", SPEC,
            "--k", "2,6", "--k2", "3,9", "--json",
        )
        assert code == 0
        assert json.loads(out)["verdict"] == "NotEquivalent"


class TestOrbitReduce:

    def test_example(self, capsys):
        code, out, _ = run(
            capsys, "orbit-reduce", "--m", "12", "--x", "6,4", "--json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["canonical"] == [2, 0]
        assert payload["det"] in (1, -1)
        assert payload["gcd"] == 2


class TestTables:

    def test_lookup_sphere(self, capsys):
        code, out, _ = run(capsys, "tables", "--lookup", "sphere:3,6", "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["group"] == {"free": 0, "torsion": [12]}
        assert "Toda" in payload["citation"]

    def test_lookup_absent(self, capsys):
        code, out, _ = run(capsys, "tables", "--lookup", "SU3,9", "--json")
        assert code == 0
        assert json.loads(out)["group"] == "Unknown"

    def test_list_runs(self, capsys):
        code, out, _ = run(capsys, "tables", "--json")
        assert code == 0
        assert json.loads(out)["count"] > 100


class TestDecompose:

    def test_pretty_output(self, capsys):
        code, out, _ = run(
            capsys, "decompose", "--group", "SU2", "--spec", SPEC, "--k", "5,7"
        )
        assert code == 0
        assert out.strip() == (
            "G^1(S^4) x Omega^4 SU(2) x Omega^3 SU(2) x Map*(Y_F, SU(2))"
        )

    def test_pointed(self, capsys):
        code, out, _ = run(
            capsys, "decompose", "--group", "SU2", "--spec", SPEC, "--pointed"
        )
        assert code == 0
        assert out.strip() == (
            "Omega^4 SU(2)^2 x Omega^3 SU(2) x Map*(Y_F, SU(2))"
        )

    def test_spec_file(self, capsys, tmp_path):
        path = tmp_path / "m.json"
        path.write_text(SPEC)
        code, out, _ = run(
            capsys, "decompose", "--group", "SU2", "--spec", str(path),
            "--k", "5,7",
        )
        assert code == 0


class TestEchelon:

    def test_mixed(self, capsys):
        code, out, _ = run(
            capsys, "echelon", "[[2,6],[4,0]]", "--m", "0,12", "--json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["echelon"] == [[2, 6], [0, 0]]
        assert payload["det"] in (1, -1)

    def test_integer_default(self, capsys):
        code, out, _ = run(capsys, "echelon", "[[2,4],[3,5]]", "--json")
        assert code == 0
        assert json.loads(out)["echelon"] == [[1, 1], [0, 2]]


class TestPi:

    def test_j0(self, capsys):
        code, out, _ = run(
            capsys, "pi", "--group", "SU2", "--spec", SPEC, "--j", "0", "--json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["known"] == {"free": 1, "torsion": [2, 2]}
        assert payload["symbolic"] == []


class TestExitCodes:

    def test_malformed_spec_is_parse_error(self, capsys):
        code, _, err = run(
            capsys, "classify", "--group", "SU2", "--spec", '{"n":4,"q":3,'
        )
        assert code == 2
        assert "line" in err and "column" in err

    def test_unsupported_decompose_is_domain_error(self, capsys):
        code, _, err = run(
            capsys, "decompose", "--group", "SU2",
            "--spec", '{"n":4,"q":3,"xi":[2,2]}', "--k", "1,0",
        )
        assert code == 1
        assert "gcd" in err

    def test_missing_table_names_key(self, capsys):
        code, _, err = run(
            capsys, "decompose", "--group", "SU6",
            "--spec", '{"n":6,"q":5,"xi":[1,2]}', "--k", "1,0",
        )
        assert code == 1
        assert "pi_11(S^6)" in err

    def test_classify_reports_unsupported_case(self, capsys):
        code, out, _ = run(
            capsys, "classify", "--group", "SU2",
            "--spec", '{"n":4,"q":3,"xi":[2,2]}', "--json",
        )
        assert code == 0
        assert json.loads(out)["case"] == "Unsupported"

    def test_bad_group_is_parse_error(self, capsys):
        code, _, err = run(
            capsys, "classify", "--group", "SO3", "--spec", SPEC
        )
        assert code == 2


class TestDeterminism:

    def test_repeated_runs_identical(self, capsys):
        argv = [
            "classify", "--group", "SU5",
            "--spec", '{"n":6,"q":3,"xi":[0,0]}', "--json",
        ]
        outputs = set()
        for _ in range(3):
            code, out, _ = run(capsys, *argv)
            assert code == 0
            outputs.add(out)
        assert len(outputs) == 1

    def test_user_tables_flag(self, capsys, tmp_path):
        path = tmp_path / "t.json"
        path.write_text(json.dumps({
            "connecting_orders": [
                {"lie": {"family": "SU", "rank": 5}, "n": 6, "order": 60,
                 "citation": "user supplied"}
            ]
        }))
        code, out, _ = run(
            capsys, "decompose", "--group", "SU5",
            "--spec", '{"n":6,"q":3,"xi":[0,0]}', "--k", "30,90",
            "--tables", str(path),
        )
        assert code == 0
        assert out.strip().startswith("G^30(S^6)")


class TestCrossProcess:

    def test_byte_identical_across_processes(self):
        import subprocess
        import sys

        argv = [
            sys.executable, "-m", "gaugedecomp.cli", "decompose",
            "--group", "SU2", "--spec", SPEC, "--k", "5,7", "--json",
        ]
        runs = [
            subprocess.run(argv, capture_output=True, check=True).stdout
            for _ in range(2)
        ]
        assert runs[0] == runs[1]
        assert b"G^1(S^4)" in runs[0]
