import json

import pytest

from twistgroups.cli import run


def out(capsys):
    return capsys.readouterr().out


class TestClassify:
    def test_json_document(self, capsys):
        code = run(["classify", "--form", "ab", "--k", "3", "--i", "1",
                    "--torus", "--json"])
        assert code == 0
        doc = json.loads(out(capsys))
        assert doc["group"] == "Z2xZ"
        assert doc["relation"] == "infinite_index"
        assert doc["full_group"] == "SL2Z"

    def test_human_sentences(self, capsys):
        assert run(["classify", "--form", "ab", "--k", "0", "--i", "0"]) == 0
        assert out(capsys).strip() == \
            "G = ⟨T_a⟩ ≅ ℤ, infinite index in ⟨T_a,T_b⟩ ≅ ℤ²"
        assert run(["classify", "--form", "ba", "--k", "1", "--i", "3"]) == 0
        assert out(capsys).strip() == "G = ⟨T_a,T_b⟩ ≅ F₂"

    def test_torus_flag_outside_i1_is_usage_error(self, capsys):
        code = run(["classify", "--form", "ab", "--k", "1", "--i", "2",
                    "--torus"])
        assert code == 2

    def test_json_byte_exact(self, capsys):
        # golden: stable serialization of a finite-index verdict
        run(["classify", "--form", "ab", "--k", "5", "--i", "0",
             "--no-certificates", "--json"])
        assert out(capsys) == (
            '{\n'
            '  "group": "Z2",\n'
            '  "relation": {\n'
            '    "finite_index": 5\n'
            '  },\n'
            '  "full_group": "Z2"\n'
            '}\n'
        )


class TestEq:
    def test_equal_exit_zero(self, capsys):
        assert run(["eq", "--i", "0", "--", "ab", "ba"]) == 0
        assert out(capsys).strip() == "equal"

    def test_unequal_exit_one(self, capsys):
        assert run(["eq", "--i", "2", "--", "ab", "ba"]) == 1
        assert out(capsys).strip() == "not equal"

    def test_braid_relation_nontorus(self):
        assert run(["eq", "--i", "1", "--", "(ab)^3", "(ba)^3"]) == 0

    def test_malformed_word_exit_two(self, capsys):
        assert run(["eq", "--i", "0", "--", "a(", "b"]) == 2


class TestReduceAndRep:
    def test_reduce(self, capsys):
        assert run(["reduce", "--", "abBA ab"]) == 0
        assert out(capsys).strip() == "ab"

    def test_reduce_to_empty(self, capsys):
        assert run(["reduce", "--json", "--", "aA"]) == 0
        assert json.loads(out(capsys)) == {"reduced": "", "length": 0}

    def test_rep_sl2(self, capsys):
        assert run(["rep", "--rep", "sl2", "--", "(ab)^6"]) == 0
        assert out(capsys) == "[1, 0]\n[0, 1]\n"

    def test_rep_burau(self, capsys):
        assert run(["rep", "--rep", "burau", "--", "aba"]) == 0
        assert out(capsys) == "[0, -t]\n[-t^2, 0]\n"

    def test_rep_exponent(self, capsys):
        assert run(["rep", "--rep", "exponent", "--", "(ab)^3"]) == 0
        assert out(capsys).strip() == "(3, 3)"


class TestMemberAndIndex:
    def test_member_true(self, capsys):
        assert run(["member", "--gen", "a", "--gen", "ab", "--", "b"]) == 0
        assert out(capsys).strip() == "member"

    def test_member_false(self, capsys):
        assert run(["member", "--gen", "a", "--gen", "abab", "--", "b"]) == 1

    def test_index(self, capsys):
        assert run(["index", "--gen", "a^2", "--gen", "b", "--gen", "abA"]) == 0
        assert out(capsys) == "index: 2\nrank: 3\n"

    def test_index_dump_golden(self, capsys):
        assert run(["index", "--gen", "a", "--gen", "abab", "--dump"]) == 0
        assert out(capsys) == (
            "index: infinite\n"
            "rank: 2\n"
            "0 --a--> 0\n"
            "0 --b--> 1\n"
            "1 --a--> 2\n"
            "2 --b--> 0\n"
        )


class TestWitnessAndConj:
    def test_witness(self, capsys):
        assert run(["witness", "--form", "ab", "--k", "4"]) == 0
        assert out(capsys).splitlines()[0] == "X Y X^-1"

    def test_no_witness_exit_one(self, capsys):
        assert run(["witness", "--form", "ab", "--k", "3"]) == 1

    def test_conj(self, capsys):
        assert run(["conj", "--form", "ba", "--k", "-2", "--dir", "by_X"]) == 0
        assert out(capsys).strip() == "a^-1ba"


class TestTorus:
    def test_intersect(self, capsys):
        assert run(["torus", "intersect", "--", "1,0", "1,2"]) == 0
        assert out(capsys).strip() == "2"

    def test_twist(self, capsys):
        assert run(["torus", "twist", "--n", "2", "--", "1,0", "0,1"]) == 0
        assert out(capsys).strip() == "2,1"

    def test_matrix(self, capsys):
        assert run(["torus", "matrix", "--", "1,0"]) == 0
        assert out(capsys) == "[1, 1]\n[0, 1]\n"

    def test_bad_curve_exit_two(self, capsys):
        assert run(["torus", "intersect", "--", "1;0", "0,1"]) == 2
        assert run(["torus", "intersect", "--", "2,4", "0,1"]) == 2


class TestVerify:
    def test_named_suite(self, capsys):
        assert run(["verify", "--suite", "lemma-conjugation", "--kmax", "9"]) == 0
        lines = out(capsys).splitlines()
        assert lines[-1] == "suite lemma-conjugation: 72/72 checks passed"
        assert all(line.startswith("PASS") for line in lines[:-1])

    def test_unknown_suite_exit_two(self, capsys):
        assert run(["verify", "--suite", "nope"]) == 2

    def test_json_mode(self, capsys):
        assert run(["verify", "--suite", "chain-relation", "--json"]) == 0
        doc = json.loads(out(capsys))
        assert doc["passed"] is True


class TestUsage:
    def test_missing_subcommand(self, capsys):
        assert run([]) == 2

    def test_unknown_flag(self, capsys):
        assert run(["classify", "--form", "ab", "--k", "1", "--i", "1",
                    "--frobnicate"]) == 2

    def test_deterministic_output(self, capsys):
        args = ["classify", "--form", "ab", "--k", "4", "--i", "1", "--json"]
        run(args)
        first = out(capsys)
        run(args)
        assert out(capsys) == first
