"""Tests PBW normal forms and the Hopf structure of enveloping algebras."""

import pytest
import logging
from fractions import Fraction
from hypothesis import given, settings
from hypothesis.strategies import lists, sampled_from

# `conftest.py` fixtures are imported automatically
from dglie.grading import *
from dglie.dgla import DGLASpec
from dglie.enveloping_algebra import *

log = logging.getLogger(__name__)


@pytest.fixture(scope='module')
def odd_square():
    """Creates the enveloping algebra of the GLA with an odd `u` squaring to `w`.

    Yields:
        EnvelopingAlgebra: `U` of `u` in degree one and `w` in degree two with `[u,u]=w`
    """
    spec = DGLASpec.from_names("odd-square", [('u', 1), ('w', 2)], brackets=[('u', 'u', [('w', 1)])])
    yield EnvelopingAlgebra(spec)


@pytest.fixture(scope='module')
def odd_pair():
    """Creates the enveloping algebra of two odd generators with zero bracket.

    Yields:
        EnvelopingAlgebra: the exterior algebra on `u` and `v`
    """
    spec = DGLASpec.from_names("odd-pair", [('u', 1), ('v', 1)])
    yield EnvelopingAlgebra(spec)


def product_of_vectors(algebra):
    """Returns the product on dicts of PBW monomials for `convolve()`."""
    def multiply(first, second):
        result = {}
        for left, left_coefficient in first.items():
            for right, right_coefficient in second.items():
                add_to_vector(result, algebra.normal_form(left + right), left_coefficient * right_coefficient)
        return result
    return multiply


#Section: Normal Forms
def test_pbw_monomials(sl2_enveloping_algebra):
    """Tests which words are already in normal form."""
    assert sl2_enveloping_algebra.is_pbw_monomial(())
    assert sl2_enveloping_algebra.is_pbw_monomial((0, 0, 1))
    assert not sl2_enveloping_algebra.is_pbw_monomial((1, 0))


def test_normal_form_of_inversion(sl2_enveloping_algebra):
    """Tests that `fe` rewrites to `ef - h` and `he` to `eh + 2e`."""
    assert sl2_enveloping_algebra.normal_form((1, 0)) == {(0, 1): Fraction(1), (2,): Fraction(-1)}
    assert sl2_enveloping_algebra.normal_form((2, 0)) == {(0, 2): Fraction(1), (0,): Fraction(2)}


def test_normal_form_of_repeated_odd_letter(odd_square, odd_pair):
    """Tests that `uu` rewrites to half the bracket `[u,u]`."""
    assert odd_square.normal_form((0, 0)) == {(1,): Fraction(1, 2)}
    assert odd_pair.normal_form((0, 0)) == {}
    assert odd_pair.normal_form((1, 0)) == {(0, 1): Fraction(-1)}


def test_monomials(sl2_enveloping_algebra, odd_square):
    """Tests the PBW monomial counts, which skip repeated odd letters."""
    assert len(sl2_enveloping_algebra.monomials(2)) == 10
    assert len(sl2_enveloping_algebra.monomials(2, min_weight=2)) == 6
    assert odd_square.monomials(2) == [(), (0,), (1,), (0, 1), (1, 1)]


def test_pbw_normal_form_by_names(sl2_enveloping_algebra):
    """Tests that words may be given by generator names."""
    assert pbw_normal_form(sl2_enveloping_algebra, ['f', 'e']) == pbw_normal_form(sl2_enveloping_algebra, [1, 0])
    assert pbw_normal_form(sl2_enveloping_algebra, ['f', 'e']).render() == "-h + e*f"
    assert pbw_normal_form(sl2_enveloping_algebra, [], coeff=3) == 3


def test_normal_forms_survive_cache_eviction(sl2, monkeypatch):
    """Tests that the normal form cache stays within its bound and evicted words are rewritten again correctly."""
    monkeypatch.setattr('dglie.enveloping_algebra.CACHE_SIZE', 2)
    algebra = EnvelopingAlgebra(sl2)
    assert algebra.normal_form((2, 1, 0)) == algebra.normal_form((2, 1, 0))
    assert algebra.normal_form((1, 0)) == {(0, 1): Fraction(1), (2,): Fraction(-1)}
    assert algebra.normal_form((2, 0)) == {(0, 2): Fraction(1), (0,): Fraction(2)}
    assert algebra.normal_form((1, 0)) == {(0, 1): Fraction(1), (2,): Fraction(-1)}
    cache = algebra._normal_forms.cache_info()
    assert cache.maxsize == 2
    assert cache.currsize <= 2


#Section: Products
def test_commutator_is_bracket(sl2_enveloping_algebra):
    """Tests that `ef - fe = h` in `U(sl2)`."""
    e = UEAElement.from_word(sl2_enveloping_algebra, ['e'])
    f = UEAElement.from_word(sl2_enveloping_algebra, ['f'])
    h = UEAElement.from_word(sl2_enveloping_algebra, ['h'])
    assert e * f - f * e == h


def test_unit(sl2_enveloping_algebra):
    """Tests that the empty word is the unit."""
    one = UEAElement.from_word(sl2_enveloping_algebra, [])
    element = UEAElement.from_word(sl2_enveloping_algebra, ['h', 'f', 'e'])
    assert one == 1
    assert one * element == element
    assert element * one == element


def test_truncated_element(sl2_enveloping_algebra):
    """Tests that monomials longer than the truncation weight are dropped."""
    element = UEAElement(sl2_enveloping_algebra, {(0, 1): 1, (0,): 1}, truncation_weight=1)
    assert element.terms == {(0,): Fraction(1)}


def test_mismatched_algebras(sl2_enveloping_algebra, aff1):
    """Tests that elements of different enveloping algebras can't be combined."""
    with pytest.raises(TypeError):
        UEAElement.from_word(sl2_enveloping_algebra, ['e']) + UEAElement.from_word(EnvelopingAlgebra(aff1), ['a'])


@settings(deadline=None, max_examples=30)
@given(
    lists(sampled_from(['e', 'f', 'h']), max_size=2),
    lists(sampled_from(['e', 'f', 'h']), max_size=2),
    lists(sampled_from(['e', 'f', 'h']), max_size=2),
)
def test_associativity(sl2_enveloping_algebra, first, second, third):
    """Tests that normalizing products of words is associative."""
    a, b, c = (UEAElement.from_word(sl2_enveloping_algebra, word) for word in (first, second, third))
    assert (a * b) * c == a * (b * c)
    assert (a * b) * c == UEAElement.from_word(sl2_enveloping_algebra, first + second + third)


#Section: Hopf Structure
def test_coproduct_of_generator(sl2_enveloping_algebra):
    """Tests that generators are primitive."""
    e = UEAElement.from_word(sl2_enveloping_algebra, ['e'])
    assert uea_coproduct(e) == {((), (0,)): Fraction(1), ((0,), ()): Fraction(1)}


def test_coproduct_of_product(sl2_enveloping_algebra):
    """Tests the four splittings of `ef`."""
    assert monomial_coproduct(sl2_enveloping_algebra, (0, 1)) == {
        ((), (0, 1)): Fraction(1),
        ((0,), (1,)): Fraction(1),
        ((1,), (0,)): Fraction(1),
        ((0, 1), ()): Fraction(1),
    }


def test_coproduct_of_odd_product(odd_pair):
    """Tests that moving `v` past `u` in the coproduct of `uv` costs a sign."""
    coproduct = monomial_coproduct(odd_pair, (0, 1))
    assert coproduct[((1,), (0,))] == -1
    assert coproduct[((0,), (1,))] == 1


def test_counit(sl2_enveloping_algebra):
    """Tests that the counit picks out the constant term."""
    assert uea_counit(UEAElement.from_word(sl2_enveloping_algebra, [])) == 1
    assert uea_counit(UEAElement.from_word(sl2_enveloping_algebra, ['h'])) == 0
    assert uea_counit(UEAElement.from_word(sl2_enveloping_algebra, ['f', 'e'])) == 0


def test_antipode(sl2_enveloping_algebra):
    """Tests that the antipode negates generators and reverses products."""
    e = UEAElement.from_word(sl2_enveloping_algebra, ['e'])
    f = UEAElement.from_word(sl2_enveloping_algebra, ['f'])
    assert uea_antipode(e) == -e
    assert uea_antipode(e * f) == f * e
    assert uea_antipode(e * f) == uea_antipode(f) * uea_antipode(e)


def test_antipode_convolution(sl2_enveloping_algebra):
    """Tests that the convolution of the antipode with the identity is the unit times the counit."""
    algebra = sl2_enveloping_algebra
    convolution = convolve(
        lambda key: monomial_antipode(algebra, key),
        lambda key: {key: Fraction(1)},
        lambda key: monomial_coproduct(algebra, key),
        product_of_vectors(algebra),
        algebra.word_degree,
    )
    assert convolution(()) == {(): Fraction(1)}
    for monomial in algebra.monomials(3, min_weight=1):
        assert convolution(monomial) == {}


def test_antipode_convolution_on_odd_generators(odd_pair):
    """Tests the antipode axiom when the coproduct carries signs."""
    convolution = convolve(
        lambda key: monomial_antipode(odd_pair, key),
        lambda key: {key: Fraction(1)},
        lambda key: monomial_coproduct(odd_pair, key),
        product_of_vectors(odd_pair),
        odd_pair.word_degree,
    )
    assert convolution((0, 1)) == {}


#Section: PBW Dimension
@pytest.mark.slow
def test_pbw_dimension_report(sl2_enveloping_algebra):
    """Tests that the filtered dimensions of `U(sl2)` match the polynomial algebra on three generators up to weight three."""
    report = pbw_dimension_report(sl2_enveloping_algebra, 3)
    assert report.passed()
    assert [row['check'] for row in report.rows] == ['pbw_dimension_0', 'pbw_dimension_1', 'pbw_dimension_2', 'pbw_dimension_3']


def test_pbw_dimension_report_with_odd_generators(odd_square):
    """Tests the PBW dimension comparison when odd generators square to a bracket."""
    assert pbw_dimension_report(odd_square, 3).passed()


def test_pbw_dimension_report_detects_jacobi_failure(sl2_broken):
    """Tests that a bracket breaking the Jacobi identity loses dimension once relations of length three appear."""
    report = pbw_dimension_report(EnvelopingAlgebra(sl2_broken), 3)
    log.info(f"The broken `sl2` PBW report is\n{report.render()}")
    assert report.failures() == ['pbw_dimension_3']
    assert report.outcome('pbw_dimension_2')
