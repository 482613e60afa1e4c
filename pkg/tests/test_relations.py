"""The relation DSL: grammar, classification, and error offsets."""

import pytest

from clzeta.oracle.relations import RelationSyntaxError, parse_relations


class TestParsing:
    def test_commutator(self):
        system = parse_relations("A*B - B*A")
        assert len(system.relations) == 1
        rel = system.relations[0]
        assert rel.kind == "b_linear"
        assert [t.coeff for t in rel.terms] == [1, -1]
        assert rel.terms[0].word.linear_split() == (1, 0)
        assert rel.terms[1].word.linear_split() == (0, 1)

    def test_two_relations_both_linear(self):
        system = parse_relations("A*B - B*A, A^2*B")
        assert len(system.relations) == 2
        assert all(r.kind == "b_linear" for r in system.relations)
        assert system.relations[1].terms[0].word.linear_split() == (2, 0)

    def test_a_only(self):
        system = parse_relations("A^3 - A")
        assert system.relations[0].kind == "a_only"
        assert system.max_a_power() == 3

    def test_general_detection(self):
        assert parse_relations("A*B*A*B").relations[0].kind == "general"
        assert parse_relations("B^2 - A").relations[0].kind == "general"
        assert parse_relations("A*B - 1").relations[0].kind == "b_linear"

    def test_coefficients_and_constants(self):
        system = parse_relations("2*A*B - 3*B*A + 1")
        rel = system.relations[0]
        assert [t.coeff for t in rel.terms] == [2, -3, 1]
        assert rel.terms[2].word is None

    def test_leading_minus_and_merging(self):
        system = parse_relations("-A*A*B")
        term = system.relations[0].terms[0]
        assert term.coeff == -1
        assert term.word.factors == (("A", 2), ("B", 1))
        assert term.word.linear_split() == (2, 0)

    def test_whitespace_insensitive(self):
        assert parse_relations(" A * B - B * A ") == parse_relations("A*B-B*A")

    def test_empty_system(self):
        assert parse_relations("").relations == ()
        assert parse_relations("").is_b_linear()


class TestErrors:
    def test_double_star_offset(self):
        with pytest.raises(RelationSyntaxError) as err:
            parse_relations("A**B")
        assert err.value.offset == 2

    def test_unknown_generator(self):
        with pytest.raises(RelationSyntaxError) as err:
            parse_relations("A*C")
        assert "unknown generator" in str(err.value)
        assert err.value.offset == 2

    def test_zero_exponent(self):
        with pytest.raises(RelationSyntaxError):
            parse_relations("A^0")

    def test_trailing_junk(self):
        with pytest.raises(RelationSyntaxError):
            parse_relations("A*B )")

    def test_dangling_operator(self):
        with pytest.raises(RelationSyntaxError):
            parse_relations("A*B -")


class TestRoundTrip:
    def test_str_reparses(self):
        for text in ("A*B - B*A", "A^2*B", "2*A*B - 3*B*A + 1", "-A^2 + B"):
            system = parse_relations(text)
            assert parse_relations(str(system)) == system
