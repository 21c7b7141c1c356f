"""This module contains the tests for the helper functions and standardized messages in `dglie/statements.py`."""

import pytest
import logging

# `conftest.py` fixtures are imported automatically
from dglie.statements import *

log = logging.getLogger(__name__)


def test_format_list_for_stdout_with_list():
    """Test pretty printing a list by adding a line break between each item."""
    assert format_list_for_stdout(['a', 'b', 'c']) == "a\nb\nc"


def test_format_list_for_stdout_with_generator():
    """Test pretty printing a sequence created by a generator object, with items that aren't strings."""
    assert format_list_for_stdout(number for number in range(3)) == "0\n1\n2"


def test_format_list_for_stdout_with_dict():
    """Test pretty printing a dict as `key: value` lines."""
    assert format_list_for_stdout({'jacobi': 'PASS', 'antisymmetry': 'FAIL'}) == "jacobi: PASS\nantisymmetry: FAIL"


def test_format_tuple_for_witness():
    """Test the parenthesized form used for basis tuples in report witnesses."""
    assert format_tuple_for_witness(('e', 'f', 'h')) == "(e,f,h)"
    assert format_tuple_for_witness([]) == "()"


def test_spec_file_parse_error_statement():
    """Test that parse errors name the line and the column."""
    statement = spec_file_parse_error_statement("Expecting value", 3, 14)
    assert "line 3 column 14" in statement
    assert statement.endswith("Expecting value")


@pytest.mark.parametrize(
    "statement",
    [
        unknown_generator_statement('q'),
        duplicate_generator_statement('e'),
        inhomogeneous_value_statement('e', 1, 0),
        mismatched_ambient_statement('sl2', 'heis3'),
        degree_out_of_range_statement("cochain degree", 4, 3),
        one_sided_grading_statement([-1, 0, 1]),
        positive_degree_statement('b', 1),
        not_a_derivation_statement("(h,e)"),
        failed_axioms_statement(['jacobi']),
        nilpotency_class_statement(7, 6),
        declared_class_mismatch_statement(3, 2),
        not_unipotent_statement('a'),
        not_a_cocycle_statement("point (x_1=1)"),
        lambda_incompatible_statement("a"),
        invalid_point_derivation_statement('a', 'b'),
        antipode_recursion_statement('x*'),
        invalid_rational_statement("1/0"),
        check_outcome_statement('jacobi', True),
        check_outcome_statement('jacobi', False, "(e,f,h)"),
        construction_complete_statement("the spec `sl2`", "3 generators"),
        ungraded_required_statement('ce_coboundary'),
        even_self_bracket_statement('e'),
    ],
)
def test_statements_are_sentences(statement):
    """Test that every standardized message is a full sentence ending in a period, apart from the parse error, which ends with the decoder message."""
    assert statement[0].isupper()
    assert statement.endswith(".")


def test_check_outcome_statement_names_witness():
    """Test that a failed check's log statement carries the witness."""
    assert "(e,f,h)" in check_outcome_statement('jacobi', False, "(e,f,h)")
    assert "(e,f,h)" not in check_outcome_statement('jacobi', True, "(e,f,h)")
