"""Tests the `VerificationReport` table that every check returns."""

import pytest
import logging
import pandas as pd
from pandas.testing import assert_frame_equal

# `conftest.py` fixtures are imported automatically
from dglie.reports import *

log = logging.getLogger(__name__)


@pytest.fixture
def mixed_report():
    """Creates a report with two passing checks around a failing one.

    Yields:
        VerificationReport: the rows `bracket_degree`, `jacobi`, and `antisymmetry`
    """
    report = VerificationReport("mixed")
    report.add("bracket_degree", True)
    report.add("jacobi", False, "(e,f,h) residual -h")
    report.add("antisymmetry", True, "ignored")
    yield report


def test_empty_report_passes():
    """Tests that a report without rows passes and renders as the empty string."""
    report = VerificationReport()
    assert report.passed()
    assert report.render() == ""


def test_outcome_and_witness(mixed_report):
    """Tests reading back outcomes and witnesses; passing rows never keep a witness."""
    assert not mixed_report.passed()
    assert not mixed_report
    assert mixed_report.failures() == ["jacobi"]
    assert mixed_report.witness("jacobi") == "(e,f,h) residual -h"
    assert mixed_report.witness("antisymmetry") is None
    assert mixed_report.outcome("bracket_degree") is True
    assert mixed_report.outcome("leibniz") is None


def test_failure_without_witness():
    """Tests that a failure recorded without a witness still renders one."""
    report = VerificationReport().add("unit_coalgebra", False)
    assert report.witness("unit_coalgebra") == "unspecified"


def test_render(mixed_report):
    """Tests the line-oriented text form, in insertion order with a trailing newline."""
    assert mixed_report.render() == "bracket_degree: PASS\njacobi: FAIL [witness: (e,f,h) residual -h]\nantisymmetry: PASS\n"


def test_extend_with_prefix(mixed_report):
    """Tests appending the rows of another report under a prefix."""
    report = VerificationReport("outer").add("hopf_axioms", True)
    report.extend(mixed_report, prefix="tangent_")
    assert [row['check'] for row in report.rows] == ["hopf_axioms", "tangent_bracket_degree", "tangent_jacobi", "tangent_antisymmetry"]
    assert report.failures() == ["tangent_jacobi"]


def test_to_dataframe(mixed_report):
    """Tests the dataframe form of a report."""
    expected = pd.DataFrame(
        [
            ["bracket_degree", True, None],
            ["jacobi", False, "(e,f,h) residual -h"],
            ["antisymmetry", True, None],
        ],
        columns=['check', 'passed', 'witness'],
    )
    expected['passed'] = expected['passed'].astype('boolean')
    expected['witness'] = expected['witness'].astype('string')
    assert_frame_equal(mixed_report.to_dataframe(), expected)
