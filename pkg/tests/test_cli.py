import json

import pytest

from biquandles import cli
from biquandles.cli import (EXIT_INCONSISTENT, EXIT_INPUT, EXIT_NEGATIVE,
                            EXIT_OK, main, parse_module_text)
from biquandles.errors import BiquandleError

from conftest import Z2Z2_MATRIX


@pytest.fixture
def z2z2_file(tmp_path):
    path = tmp_path / "z2z2.bq"
    path.write_text(Z2Z2_MATRIX)
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCheck:
    def test_published_table_passes(self, capsys, z2z2_file):
        code, out, _ = run(capsys, "check", z2z2_file)
        assert code == EXIT_OK
        assert out == "order 4: biquandle\n"

    def test_corrupted_table_fails(self, capsys, tmp_path):
        path = tmp_path / "bad.bq"
        path.write_text("2\n2 1 1 1\n2 2 2 2\n1 1 1 1\n2 2 2 2\n")
        code, out, _ = run(capsys, "check", str(path))
        assert code == EXIT_NEGATIVE
        assert "not a biquandle" in out
        assert "4.ii" in out

    def test_malformed_file(self, capsys, tmp_path):
        path = tmp_path / "garbled.bq"
        path.write_text("not a matrix\n")
        code, _, err = run(capsys, "check", str(path))
        assert code == EXIT_INPUT
        assert "error:" in err

    def test_json_mode(self, capsys, z2z2_file):
        code, out, _ = run(capsys, "check", z2z2_file, "--json")
        payload = json.loads(out)
        assert payload["schema"] == "biquandles-cli/check/1"
        assert payload["passed"] is True


class TestAlexander:
    def test_z3_matrix(self, capsys):
        code, out, _ = run(capsys, "alexander", "--zn", "3", "2", "1")
        assert code == EXIT_OK
        assert out.splitlines()[1] == "3 2 1 2 2 2"

    def test_trivial_z2(self, capsys):
        code, out, _ = run(capsys, "alexander", "--zn", "2", "1", "1")
        assert out == "2\n1 1 1 1\n2 2 2 2\n1 1 1 1\n2 2 2 2\n"

    def test_pipes_into_check(self, capsys, tmp_path):
        code, out, _ = run(capsys, "alexander", "--zn", "8", "3", "5")
        path = tmp_path / "alex.bq"
        path.write_text(out)
        code2, out2, _ = run(capsys, "check", str(path))
        assert code2 == EXIT_OK and "biquandle" in out2

    def test_module_file(self, capsys, tmp_path):
        path = tmp_path / "mod.txt"
        path.write_text("3 1\n2\n1\n")
        code, out, _ = run(capsys, "alexander", "--mod", str(path))
        assert code == EXIT_OK
        # canonical (lexicographic) order for file input: zero first
        assert out.splitlines()[0] == "3"

    def test_invalid_module(self, capsys):
        code, _, err = run(capsys, "alexander", "--zn", "4", "2", "1")
        assert code == EXIT_INPUT and "error" in err

    def test_missing_module(self, capsys):
        code, _, err = run(capsys, "alexander")
        assert code == EXIT_INPUT


class TestSwitch:
    def test_published_example(self, capsys):
        code, out, err = run(capsys, "switch", "2", "2",
                             "--A", "0 1;1 1", "--B", "1 1;0 1", "--c", "1 1")
        assert code == EXIT_OK
        assert out == Z2Z2_MATRIX
        assert "switch condition: holds" in err
        assert "axioms: pass" in err

    def test_degenerate_identity(self, capsys):
        code, _, err = run(capsys, "switch", "2", "2",
                           "--A", "1 0;0 1", "--B", "1 0;0 1")
        assert code == EXIT_INPUT
        assert "not invertible" in err

    def test_json(self, capsys):
        code, out, _ = run(capsys, "switch", "2", "2", "--A", "0 1;1 1",
                           "--B", "1 1;0 1", "--c", "1 1", "--json")
        payload = json.loads(out)
        assert payload["axioms_passed"] is True
        assert payload["switch_condition_holds"] is True


class TestIso:
    def test_z8_swapped_pair_non_isomorphic(self, capsys):
        code, out, _ = run(capsys, "iso", "--zn", "8", "3", "5",
                           "--zn", "8", "5", "3", "--method", "both")
        assert code == EXIT_NEGATIVE
        assert out.strip() == "non-isomorphic"

    def test_self_pair_witness(self, capsys):
        code, out, _ = run(capsys, "iso", "--zn", "8", "3", "5",
                           "--zn", "8", "3", "5", "--method", "both")
        assert code == EXIT_OK
        assert "isomorphic" in out
        assert "brute witness: 1 2 3 4 5 6 7 8" in out
        assert "permutation: 1 2 3 4 5 6 7 8" in out

    def test_single_method(self, capsys):
        code, out, _ = run(capsys, "iso", "--zn", "5", "2", "3",
                           "--zn", "5", "2", "3", "--method", "structural")
        assert code == EXIT_OK

    def test_json_verdicts_match_text(self, capsys):
        code, out, _ = run(capsys, "iso", "--zn", "8", "3", "5",
                           "--zn", "8", "5", "3", "--json")
        payload = json.loads(out)
        assert code == EXIT_NEGATIVE
        assert payload["isomorphic"] is False
        assert payload["methods"]["brute"]["isomorphic"] is False
        assert payload["methods"]["structural"]["isomorphic"] is False

    def test_json_witness_payload(self, capsys):
        code, out, _ = run(capsys, "iso", "--zn", "8", "3", "5",
                           "--zn", "8", "3", "5", "--json")
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload["methods"]["brute"]["witness"] == list(range(1, 9))
        structural = payload["methods"]["structural"]["witness"]
        assert structural["permutation"] == list(range(1, 9))
        assert structural["rep_map"] == [[[0], [0]], [[1], [1]]]

    def test_disagreement_exit_code(self, capsys, monkeypatch):
        # force an artificial verdict conflict to exercise the alarm path
        monkeypatch.setattr(cli, "structural_iso",
                            lambda a, b: (None, None))

        class FakeStats:
            candidates = 0
            prunes = {}
            work = 0

        monkeypatch.setattr(
            cli, "brute_force_iso",
            lambda a, b: (tuple(range(1, a.n + 1)), FakeStats()))
        monkeypatch.setattr(cli, "structural_iso",
                            lambda a, b: (None, FakeStats()))
        code, out, _ = run(capsys, "iso", "--zn", "3", "2", "1",
                           "--zn", "3", "2", "1", "--method", "both")
        assert code == EXIT_INCONSISTENT
        assert "INTERNAL INCONSISTENCY" in out

    def test_needs_two_modules(self, capsys):
        code, _, err = run(capsys, "iso", "--zn", "3", "2", "1")
        assert code == EXIT_INPUT


class TestCount:
    def test_unknot(self, capsys, z2z2_file):
        code, out, _ = run(capsys, "count", "--gauss", "",
                           "--target", z2z2_file)
        assert code == EXIT_OK and out.strip() == "4"

    def test_kink(self, capsys, z2z2_file):
        code, out, _ = run(capsys, "count", "--gauss", "O1+,U1+",
                           "--target", z2z2_file)
        assert out.strip() == "4"

    def test_kishino_from_file(self, capsys, z2z2_file, tmp_path):
        path = tmp_path / "kish.gauss"
        path.write_text("# classic kishino\nO1+,U2-,U1+,O2-,U3-,O4+,O3-,U4+\n")
        code, out, _ = run(capsys, "count", "--gauss-file", str(path),
                           "--target", z2z2_file)
        assert out.strip() == "16"

    def test_gauss_flag_accepts_file_path(self, capsys, z2z2_file, tmp_path):
        path = tmp_path / "kink.gauss"
        path.write_text("O1+,U1+\n")
        code, out, _ = run(capsys, "count", "--gauss", str(path),
                           "--target", z2z2_file)
        assert out.strip() == "4"

    def test_bad_code(self, capsys, z2z2_file):
        code, _, err = run(capsys, "count", "--gauss", "O1+,U1-",
                           "--target", z2z2_file)
        assert code == EXIT_INPUT

    def test_json(self, capsys, z2z2_file):
        code, out, _ = run(capsys, "count", "--gauss", "", "--json",
                           "--target", z2z2_file)
        payload = json.loads(out)
        assert payload["count"] == 4 and payload["semi_arcs"] == 1


class TestOrbits:
    def test_z8_listing(self, capsys):
        code, out, _ = run(capsys, "orbits", "--zn", "8", "3", "5")
        assert code == EXIT_OK
        assert "(1-st) submodule: {0, 2, 4, 6}" in out
        assert "transversal: {0, 1}" in out
        assert "s-orbit of transversal: {0, 1, 3}" in out

    def test_z3_zero_transversal(self, capsys):
        code, out, _ = run(capsys, "orbits", "--zn", "3", "2", "1")
        assert "transversal: {0}" in out

    def test_z8_53_fixture(self, capsys):
        # frozen listing for the swapped-parameter module
        code, out, _ = run(capsys, "orbits", "--zn", "8", "5", "3")
        assert "(1-st) submodule: {0, 2, 4, 6}" in out
        assert "Ker(1-s): {0, 2, 4, 6}" in out
        assert "s-orbit of transversal: {0, 1, 5}" in out


class TestEnumerate:
    def test_order_one(self, capsys):
        code, out, _ = run(capsys, "enumerate", "1")
        assert code == EXIT_OK
        assert "biquandles of order 1: 1" in out

    def test_order_two(self, capsys):
        code, out, _ = run(capsys, "enumerate", "2")
        assert "biquandles of order 2: 2" in out
        assert "isomorphism classes: 2" in out

    def test_order_four_needs_flag(self, capsys):
        code, _, err = run(capsys, "enumerate", "4")
        assert code == EXIT_INPUT


class TestDeterminism:
    def test_byte_stable_outputs(self, capsys):
        outputs = set()
        for _ in range(3):
            _, out, _ = run(capsys, "iso", "--zn", "8", "3", "5",
                            "--zn", "8", "5", "3", "--json")
            outputs.add(out)
        assert len(outputs) == 1


class TestModuleFileParsing:
    def test_matrix_form(self):
        mod = parse_module_text("# comment\n2 2\n0 1\n1 1\n1 1\n1 0\n")
        assert mod.m == 2 and mod.k == 2

    def test_bad_head(self):
        with pytest.raises(BiquandleError):
            parse_module_text("3\n2\n1\n")

    def test_bad_row_count(self):
        with pytest.raises(BiquandleError):
            parse_module_text("3 1\n2\n")
