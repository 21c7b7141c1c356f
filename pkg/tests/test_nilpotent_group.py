"""Tests the Dynkin coefficients, the polynomial group models, group cochains, and the van Est maps."""

import pytest
import logging
from fractions import Fraction
from hypothesis import given, settings
from hypothesis.strategies import integers, lists
from sympy import Matrix, Rational, eye, zeros, QQ

# `conftest.py` fixtures are imported automatically
from dglie.app import CORPUS_DIRECTORY
from dglie.grading import *
from dglie.dgla import DGLASpec
from dglie.spec_files import load_derivation
from dglie.nilpotent_group import *

log = logging.getLogger(__name__)

UPPER_TRIANGLE = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


@pytest.fixture(scope='module')
def filiform():
    """Creates the four-dimensional filiform Lie algebra.

    Yields:
        DGLASpec: `[e1,e2]=e3` and `[e1,e3]=e4`, of class three
    """
    yield DGLASpec.from_names(
        "filiform4",
        [('e1', 0), ('e2', 0), ('e3', 0), ('e4', 0)],
        brackets=[('e1', 'e2', [('e3', 1)]), ('e1', 'e3', [('e4', 1)])],
    )


@pytest.fixture(scope='module')
def grading_derivation(heis3):
    """Loads the grading derivation of `heis3` from the corpus.

    Yields:
        GradedLinearMap: `x -> x`, `y -> y`, `z -> 2z`
    """
    yield load_derivation(CORPUS_DIRECTORY / "heis3-grading.derivation", heis3)


def strictly_upper_triangular(entries):
    """Returns the 4x4 strictly upper-triangular matrix with the given entries, read row by row."""
    matrix = zeros(4, 4)
    for (row, column), entry in zip(UPPER_TRIANGLE, entries):
        matrix[row, column] = Rational(entry)
    return matrix


def nilpotent_exp(N):
    total = eye(4)
    term = eye(4)
    for k in range(1, 4):
        term = term * N / k
        total += term
    return total


def unipotent_log(M):
    N = M - eye(4)
    total = zeros(4, 4)
    power = eye(4)
    for k in range(1, 4):
        power = power * N
        total += Rational((-1) ** (k + 1), k) * power
    return total


#Section: Dynkin Coefficients
def test_dynkin_table_low_orders():
    """Tests the first- and second-order rows of the Dynkin table."""
    df = dynkin_coefficient_table()
    coefficients = {word: coefficient for word, coefficient in zip(df['word'], df['coefficient'])}
    assert list(df.columns) == ['order', 'word', 'coefficient']
    assert coefficients['X'] == 1
    assert coefficients['Y'] == 1
    assert 'XX' not in coefficients
    # [X,Y] and [Y,X] together give ½[X,Y]
    assert coefficients['XY'] - coefficients['YX'] == Fraction(1, 2)


@settings(deadline=None, max_examples=25)
@given(lists(integers(-3, 3), min_size=6, max_size=6), lists(integers(-3, 3), min_size=6, max_size=6))
def test_dynkin_series_matches_matrix_logarithm(first, second):
    """Tests the Dynkin series against `log(exp A exp B)` for strictly upper-triangular matrices."""
    letters = {'X': strictly_upper_triangular(first), 'Y': strictly_upper_triangular(second)}
    nested = {}
    def nested_bracket(word):
        if word not in nested:
            if len(word) == 1:
                nested[word] = letters[word]
            else:
                left, right = letters[word[0]], nested_bracket(word[1:])
                nested[word] = left * right - right * left
        return nested[word]

    series = zeros(4, 4)
    for record in dynkin_coefficient_table().itertuples(index=False):
        series += Rational(record.coefficient.numerator, record.coefficient.denominator) * nested_bracket(record.word)
    assert series == unipotent_log(nilpotent_exp(letters['X']) * nilpotent_exp(letters['Y']))


#Section: Nilpotency Class
def test_lower_central_series_class(heis3, aff1, sl2, filiform):
    """Tests the class of nilpotent algebras and the rejection of the others."""
    assert lower_central_series_class(DGLASpec.from_names("line", [('a', 0)])) == 1
    assert lower_central_series_class(heis3) == 2
    assert lower_central_series_class(filiform) == 3
    with pytest.raises(ValueError):
        lower_central_series_class(filiform, max_class=2)
    with pytest.raises(ValueError):
        lower_central_series_class(sl2)
    with pytest.raises(ValueError):
        lower_central_series_class(aff1)


def test_group_model_rejections(sl2, ab_ext):
    """Tests that the group model refuses graded, non-nilpotent, and misdeclared algebras."""
    with pytest.raises(ValueError):
        NilpotentGroupModel(sl2)
    with pytest.raises(ValueError):
        NilpotentGroupModel(ab_ext)
    misdeclared = DGLASpec.from_names("heis3", [('x', 0), ('y', 0), ('z', 0)], brackets=[('x', 'y', [('z', 1)])], nilpotency_class=3)
    with pytest.raises(ValueError):
        NilpotentGroupModel(misdeclared)


#Section: Group Law
def test_heisenberg_product(heis3_group):
    """Tests that the Heisenberg product adds half the bracket to the central coordinate."""
    model = heis3_group
    x1, y1, z1 = (model.coordinate(1, index) for index in range(3))
    x2, y2, z2 = (model.coordinate(2, index) for index in range(3))
    product = model.bch(model.point(1), model.point(2))
    assert product[0] == x1 + x2
    assert product[1] == y1 + y2
    assert product[2] == z1 + z2 + (x1 * y2 - y1 * x2) * QQ(1, 2)


def test_ad_exp(heis3_group):
    """Tests the adjoint action of a point on `x`."""
    model = heis3_group
    columns = model.ad_exp(model.point(1))
    assert columns[0] == {0: model.ring.one, 2: -model.coordinate(1, 1)}
    assert columns[2] == {2: model.ring.one}


def test_right_invariant_vector_fields(heis3_group):
    """Tests `X^R` for `x` and `y` on the Heisenberg group."""
    model = heis3_group
    assert model.right_invariant_vf(0) == {0: model.ring.one, 2: model.coordinate(1, 1) * QQ(1, 2)}
    assert model.right_invariant_vf(1) == {1: model.ring.one, 2: model.coordinate(1, 0) * QQ(-1, 2)}


def test_evaluate(heis3_group):
    """Tests exact evaluation with missing coordinates set to zero."""
    model = heis3_group
    polynomial = model.coordinate(1, 0) * 2 + model.coordinate(1, 1) + 1
    assert model.evaluate(polynomial, {model.position(1, 0): Fraction(3, 2)}) == 4
    assert model.at_identity({0: polynomial}) == {0: Fraction(1)}


@pytest.mark.dependency()
def test_heisenberg_group_law(heis3_group):
    """Tests the group law of the Heisenberg group."""
    report = check_group_law(heis3_group)
    assert report.passed()
    assert [row['check'] for row in report.rows] == ['bch_inverse', 'bch_associativity', 'ad_homomorphism', 'bracket_reversal']


@pytest.mark.slow
def test_filiform_group_law(filiform):
    """Tests the group law of a class-three group, where the third-order Dynkin terms matter."""
    assert check_group_law(NilpotentGroupModel(filiform)).passed()


#Section: Group Cochains
def test_group_cochain_degree(heis3_group):
    """Tests that cochains above the supported degree are refused."""
    with pytest.raises(ValueError):
        GroupCochain(heis3_group, 3, {})
    with pytest.raises(ValueError):
        group_coboundary(GroupCochain(heis3_group, 2, {}))


def test_coboundary_of_constant(heis3_group):
    """Tests the coboundary of a constant 0-cochain and that applying it twice gives zero."""
    model = heis3_group
    central = GroupCochain(model, 0, model.constant_vector({2: Fraction(1)}))
    assert group_coboundary(central).values == {}
    c = GroupCochain(model, 0, model.constant_vector({0: Fraction(1)}))
    dc = group_coboundary(c)
    assert dc.values == {2: -model.coordinate(1, 1)}
    assert group_coboundary(dc).values == {}


#Section: Van Est Maps
@pytest.mark.dependency(depends=['test_heisenberg_group_law'])
def test_van_est_round_trip(heis3_group, grading_derivation):
    """Tests that integrating the grading derivation gives a cocycle whose derivative is the derivation."""
    xi = van_est_integrate(heis3_group, grading_derivation)
    assert cocycle_failure(xi) is None
    assert van_est_differentiate(heis3_group, xi) == grading_derivation


def test_van_est_of_zero(heis3_group, heis3):
    """Tests that the zero derivation integrates to the zero cocycle."""
    xi = van_est_integrate(heis3_group, GradedLinearMap.zero(heis3.basis))
    assert xi.values == {}
    assert van_est_differentiate(heis3_group, xi).is_zero()


def test_van_est_rejects_non_derivation(heis3_group, heis3):
    """Tests that a map scaling only `x` isn't integrated."""
    delta = GradedLinearMap.from_names(heis3.basis, 0, {'x': [('x', 1)]})
    with pytest.raises(ValueError):
        van_est_integrate(heis3_group, delta)


def test_van_est_rejects_non_cocycle(heis3_group):
    """Tests that the identity cochain `g -> g` isn't differentiated."""
    with pytest.raises(ValueError):
        van_est_differentiate(heis3_group, GroupCochain(heis3_group, 1, heis3_group.point(1)))
