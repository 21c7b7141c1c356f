"""Tests the `dglie` command line through click's test runner."""

import pytest
import logging
from click.testing import CliRunner

# `conftest.py` fixtures are imported automatically
from conftest import corpus_text
from dglie.app import CORPUS_DIRECTORY
from dglie.cli import *

log = logging.getLogger(__name__)


@pytest.fixture
def runner():
    """Creates a click test runner.

    Yields:
        CliRunner: a runner whose output includes standard error
    """
    yield CliRunner()


def corpus_path(file_name):
    return str(CORPUS_DIRECTORY / file_name)


#Section: Validate and Format
def test_validate_sl2(runner):
    """Tests that `sl2` validates with exit code zero."""
    result = runner.invoke(cli, ['validate', corpus_path("sl2.spec")])
    log.info(f"`dglie validate sl2.spec` printed\n{result.output}")
    assert result.exit_code == EXIT_SUCCESS
    assert "jacobi: PASS" in result.output
    assert "FAIL" not in result.output


def test_validate_broken_sl2(runner):
    """Tests that the broken `sl2` fails Jacobi with a triple as witness."""
    result = runner.invoke(cli, ['validate', corpus_path("sl2-broken.spec")])
    assert result.exit_code == EXIT_FAILURE
    assert "jacobi: FAIL [witness: (e,f,h)" in result.output
    assert "antisymmetry: PASS" in result.output


@pytest.mark.parametrize('file_name', ["aff1-broken.spec", "heis3-broken.spec"])
def test_validate_broken_corpus(runner, file_name):
    """Tests that the other broken corpus files fail validation."""
    result = runner.invoke(cli, ['validate', corpus_path(file_name)])
    assert result.exit_code == EXIT_FAILURE
    assert "jacobi: FAIL" in result.output


def test_validate_unparseable_file(runner, tmp_path):
    """Tests that a spec file with a zero denominator exits with code two and a location."""
    path = tmp_path / "zero.spec"
    path.write_text(corpus_text("sl2.spec").replace('"1"', '"1/0"'), encoding='utf-8')
    result = runner.invoke(cli, ['validate', str(path)])
    assert result.exit_code == EXIT_PARSE_ERROR
    assert "Parsing the spec file failed at line 3" in result.output


def test_format_round_trip(runner):
    """Tests that formatting a canonical file prints it unchanged."""
    result = runner.invoke(cli, ['format', corpus_path("heis3-ext.spec")])
    assert result.exit_code == EXIT_SUCCESS
    assert result.output == corpus_text("heis3-ext.spec")


#Section: Constructions
@pytest.mark.slow
def test_integrate_abelian_extension(runner):
    """Tests that integrating `ab-ext` recovers its differential."""
    result = runner.invoke(cli, ['integrate', corpus_path("ab-ext.spec"), '--weight', '3'])
    log.info(f"`dglie integrate ab-ext.spec` printed\n{result.output}")
    assert result.exit_code == EXIT_SUCCESS
    assert "delta_Q == partial: PASS" in result.output
    assert "Q_squared: PASS" in result.output
    assert "extended_inner_translation: PASS" in result.output


@pytest.mark.slow
@pytest.mark.parametrize('file_name', ["heis3-ext.spec", "two-term.spec", "tangent-plane.spec", "tangent-heis3.spec"])
def test_integrate_corpus(runner, file_name):
    """Tests that the corpus pairs integrate at their own truncation weight and differentiate back."""
    result = runner.invoke(cli, ['integrate', corpus_path(file_name)])
    log.info(f"`dglie integrate {file_name}` printed\n{result.output}")
    assert result.exit_code == EXIT_SUCCESS
    assert "delta_Q == partial: PASS" in result.output
    assert "FAIL" not in result.output


def test_integrate_rejects_sl2(runner):
    """Tests that an algebra whose degree-zero part isn't nilpotent can't be integrated."""
    result = runner.invoke(cli, ['integrate', corpus_path("sl2.spec")])
    assert result.exit_code == EXIT_FAILURE


def test_ce_sl2(runner):
    """Tests the Chevalley-Eilenberg group of `sl2`."""
    result = runner.invoke(cli, ['ce', corpus_path("sl2.spec"), '--weight', '3'])
    assert result.exit_code == EXIT_SUCCESS
    assert "hopf_axioms: PASS" in result.output
    assert "Q_squared: PASS" in result.output


def test_vanest_with_derivation(runner):
    """Tests the van Est round trip of the grading derivation of `heis3`."""
    result = runner.invoke(cli, ['vanest', corpus_path("heis3.spec"), '--derivation', corpus_path("heis3-grading.derivation")])
    assert result.exit_code == EXIT_SUCCESS
    assert result.output == "derivation: PASS\ncocycle: PASS\nround_trip: PASS\n"


def test_vanest_inner_derivations(runner):
    """Tests the van Est round trip of the nonzero inner derivations of `heis3`."""
    result = runner.invoke(cli, ['vanest', corpus_path("heis3.spec")])
    assert result.exit_code == EXIT_SUCCESS
    assert "ad_x_round_trip: PASS" in result.output
    assert "ad_y_round_trip: PASS" in result.output
    assert "ad_z_" not in result.output


def test_vanest_rejects_sl2(runner):
    """Tests that `vanest` needs a nilpotent algebra."""
    result = runner.invoke(cli, ['vanest', corpus_path("sl2.spec")])
    assert result.exit_code == EXIT_FAILURE


#Section: Property Suites
@pytest.mark.parametrize('file_name, suite, last_row', [
    ("aff1.spec", 'dgla', "differential_leibniz: PASS"),
    ("sl2.spec", 'pbw', "pbw_dimension_2: PASS"),
    ("aff1.spec", 'enveloping', "antipode: PASS"),
    ("heis3.spec", 'group', "bracket_reversal: PASS"),
])
def test_check_suites(runner, file_name, suite, last_row):
    """Tests the property suites on algebras that satisfy them."""
    result = runner.invoke(cli, ['check', corpus_path(file_name), '--suite', suite, '--weight', '2'])
    assert result.exit_code == EXIT_SUCCESS
    assert last_row in result.output


@pytest.mark.slow
def test_check_translations(runner):
    """Tests the translation suite on the Heisenberg group."""
    result = runner.invoke(cli, ['check', corpus_path("heis3.spec"), '--suite', 'translations', '--weight', '2'])
    assert result.exit_code == EXIT_SUCCESS
    assert "mc_cocycle: PASS" in result.output


def test_check_group_rejects_aff1(runner):
    """Tests that the group suite refuses a non-nilpotent algebra."""
    result = runner.invoke(cli, ['check', corpus_path("aff1.spec"), '--suite', 'group'])
    assert result.exit_code == EXIT_FAILURE


def test_check_requires_suite(runner):
    """Tests that click rejects a missing or unknown suite."""
    assert runner.invoke(cli, ['check', corpus_path("sl2.spec")]).exit_code == 2
    assert runner.invoke(cli, ['check', corpus_path("sl2.spec"), '--suite', 'everything']).exit_code == 2
