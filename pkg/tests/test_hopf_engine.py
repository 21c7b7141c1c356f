"""Tests the truncated Hopf algebras, their axioms, and the translation and Maurer-Cartan calculus on them."""

import pytest
import logging
from fractions import Fraction

# `conftest.py` fixtures are imported automatically
from dglie.app import CACHE_SIZE
from dglie.grading import *
from dglie.dgla import DGLASpec
from dglie.hopf_engine import *

log = logging.getLogger(__name__)

X = ((0, 1),)
Y = ((1, 1),)
Z = ((2, 1),)
XY = ((0, 1), (1, 1))
XZ = ((0, 1), (2, 1))


@pytest.fixture(scope='module')
def heisenberg_functions():
    """Creates the functions on the unipotent upper-triangular 3x3 matrices in matrix-entry coordinates.

    Yields:
        FunctionHopf: `x`, `y`, and `z` in degree zero with `Δz = z⊗1 + 1⊗z + x⊗y`, truncated at weight three
    """
    coordinates = GradedBasis([('x', 0), ('y', 0), ('z', 0)])
    coproducts = {
        0: {(X, ()): 1, ((), X): 1},
        1: {(Y, ()): 1, ((), Y): 1},
        2: {(Z, ()): 1, ((), Z): 1, (X, Y): 1},
    }
    H = FunctionHopf("heisenberg", coordinates, coproducts, 3)
    log.info(f"`heisenberg_functions()` yields {H}.")
    yield H


@pytest.fixture(scope='module')
def plane_functions():
    """Creates the functions on the additive group of the plane.

    Yields:
        FunctionHopf: primitive coordinates `s` and `t`, truncated at weight three
    """
    coordinates = GradedBasis([('s', 0), ('t', 0)])
    coproducts = {index: {(((index, 1),), ()): 1, ((), ((index, 1),)): 1} for index in range(2)}
    yield FunctionHopf("plane", coordinates, coproducts, 3, cocommutative=True)


@pytest.fixture(scope='module')
def odd_pair_hopf():
    """Creates the enveloping Hopf algebra of two odd generators with zero bracket.

    Yields:
        EnvelopingHopf: `U` of `u` and `v` in degree one
    """
    yield EnvelopingHopf(DGLASpec.from_names("odd-pair", [('u', 1), ('v', 1)]), 3)


class WrongSignAntipode(EnvelopingHopf):
    """An enveloping algebra whose antipode fixes the generators instead of negating them."""
    def _antipode_of_basis(self, key):
        if len(key) == 1:
            return {key: Fraction(1)}
        return super()._antipode_of_basis(key)


#Section: Hopf Algebras
def test_computed_antipode(heisenberg_functions):
    """Tests that the antipode solved on the coordinates is `S(z) = xy - z`."""
    assert heisenberg_functions.generator_antipodes[0] == {X: Fraction(-1)}
    assert heisenberg_functions.generator_antipodes[2] == {Z: Fraction(-1), XY: Fraction(1)}


def test_truncated_product(heisenberg_functions):
    """Tests that products above the truncation weight vanish."""
    assert heisenberg_functions.product(X, Y) == {XY: Fraction(1)}
    assert heisenberg_functions.product(XY, ((2, 2),)) == {}


def test_coproduct_of_monomial(heisenberg_functions):
    """Tests that the coproduct extends multiplicatively to `xz`."""
    coproduct = heisenberg_functions.coproduct(((0, 1), (2, 1)))
    assert coproduct[(((0, 1), (2, 1)), ())] == 1
    assert coproduct[(X, Z)] == 1
    assert coproduct[(Z, X)] == 1
    assert coproduct[(((0, 2),), Y)] == 1
    assert coproduct[(X, XY)] == 1


def test_generator_axioms(heisenberg_functions, plane_functions):
    """Tests the axioms checked on coordinates."""
    assert check_generator_axioms(heisenberg_functions).passed()
    assert check_generator_axioms(plane_functions).passed()


def test_invalid_coproduct():
    """Tests that a coproduct without the unit terms is rejected."""
    coordinates = GradedBasis([('t', 0)])
    with pytest.raises(ValueError):
        FunctionHopf("broken", coordinates, {0: {(((0, 1),), ()): 1}}, 2)



def test_structure_map_caches_are_bounded(heisenberg_functions):
    """Tests that the memoized coproducts and antipodes of a function Hopf algebra are capped."""
    H = heisenberg_functions
    for key in H.basis():
        H.coproduct(key)
        H.antipode(key)
    for cache in (H._products, H._coproducts, H._antipodes):
        assert cache.cache_info().maxsize == CACHE_SIZE
        assert cache.cache_info().currsize <= CACHE_SIZE


def test_cochain_values_survive_cache_eviction(heisenberg_functions, monkeypatch):
    """Tests that a cochain whose memo holds one key still evaluates the same after eviction."""
    monkeypatch.setattr('dglie.hopf_engine.CACHE_SIZE', 1)
    H = heisenberg_functions
    v = basis_point_derivation(H, Y)
    c = Cochain(H, 0, 0, lambda key: {(): v.value(key)} if v.value(key) else {})
    dc = cochain_differential(Bicomodule(H), c)
    assert dc(Z) == {(X,): Fraction(1)}
    assert dc(Y) == {}
    assert dc(Z) == {(X,): Fraction(1)}
    assert dc._values.cache_info().maxsize == 1

@pytest.mark.dependency()
def test_function_hopf_axioms(heisenberg_functions):
    """Tests every Hopf axiom on the Heisenberg functions up to weight three."""
    report = check_hopf_axioms(heisenberg_functions)
    assert report.passed()
    assert [row['check'] for row in report.rows] == ['unit', 'associativity', 'counit', 'coassociativity', 'bialgebra', 'unit_coalgebra', 'antipode', 'antipode_involution']


@pytest.mark.slow
@pytest.mark.dependency()
def test_enveloping_hopf_axioms(sl2_enveloping_hopf):
    """Tests every Hopf axiom on `U(sl2)` up to weight four."""
    report = check_hopf_axioms(sl2_enveloping_hopf)
    assert report.passed()
    assert report.outcome('antipode_involution') is True


def test_wrong_sign_antipode(sl2):
    """Tests that an antipode fixing the generators fails with the generator as witness."""
    report = check_hopf_axioms(WrongSignAntipode(sl2, 2))
    assert not report.passed()
    assert 'antipode' in report.failures()
    assert 'unit' not in report.failures()
    assert report.witness('antipode') == "e residual 2*e"


#Section: Tensor Helpers
def test_transpose_odd_factors(odd_pair_hopf):
    """Tests that exchanging two odd factors costs a sign."""
    assert transpose_factors(odd_pair_hopf, {((0,), (1,)): Fraction(1)}, [1, 0]) == {((1,), (0,)): Fraction(-1)}


def test_apply_odd_map_on_second_factor(odd_pair_hopf):
    """Tests that an odd map passing an odd factor costs a sign."""
    swap = lambda key: {((1,),): Fraction(1)}
    assert apply_on_factor(odd_pair_hopf, {((0,), (0,)): Fraction(1)}, 1, swap, 1) == {((0,), (1,)): Fraction(-1)}
    assert apply_on_factor(odd_pair_hopf, {((0,), (0,)): Fraction(1)}, 0, swap, 1) == {((1,), (0,)): Fraction(1)}


def test_iterated_coproduct(heisenberg_functions):
    """Tests the iterated coproduct, including the counit as the zeroth power."""
    assert iterated_coproduct(heisenberg_functions, {X: Fraction(1)}, 0) == {}
    assert iterated_coproduct(heisenberg_functions, {(): Fraction(1)}, 0) == {(): Fraction(1)}
    assert iterated_coproduct(heisenberg_functions, {X: Fraction(1)}, 2) == {(X, ()): Fraction(1), ((), X): Fraction(1)}
    assert len(iterated_coproduct(heisenberg_functions, {Z: Fraction(1)}, 3)) == 6


#Section: Convolution
def test_antipode_is_convolution_inverse(heisenberg_functions):
    """Tests `S ⋆ id = id ⋆ S = η∘ε`."""
    H = heisenberg_functions
    assert maps_agree(H, convolve_maps(H, antipode_map(H), identity_map(H)), unit_counit_map(H)) == (True, None)
    assert maps_agree(H, convolve_maps(H, identity_map(H), antipode_map(H)), unit_counit_map(H)) == (True, None)


def test_adjoint_coaction(heisenberg_functions):
    """Tests that the adjoint coaction of `z` is `z⊗1 + y⊗x - x⊗y`."""
    assert adjoint_coaction(heisenberg_functions, Z) == {(Z, ()): Fraction(1), (Y, X): Fraction(1), (X, Y): Fraction(-1)}


#Section: Point Derivations and Translations
def test_point_derivation_degree(odd_pair_hopf):
    """Tests that a point derivation must be homogeneous."""
    with pytest.raises(ValueError):
        PointDerivation(odd_pair_hopf, 0, {(0,): 1})
    assert basis_point_derivation(odd_pair_hopf, (0,)).degree == -1


def test_left_translation(heisenberg_functions):
    """Tests that the left translation of `∂_y` is `∂_y + x∂_z` and returns to `∂_y` at the unit."""
    H = heisenberg_functions
    v = basis_point_derivation(H, Y)
    vL = left_translate(H, v)
    assert vL(X) == {}
    assert vL(Y) == {(): Fraction(1)}
    assert vL(Z) == {X: Fraction(1)}
    assert value_at_unit(H, vL) == v
    assert is_left_invariant(H, vL) == (True, None)
    passed, witness = is_right_invariant(H, vL)
    assert not passed
    assert witness.startswith("z residual")


def test_right_translation(heisenberg_functions):
    """Tests that the right translation of `∂_y` is `∂_y`."""
    H = heisenberg_functions
    vR = right_translate(H, basis_point_derivation(H, Y))
    assert vR(Z) == {}
    assert is_right_invariant(H, vR) == (True, None)
    assert is_derivation(H, vR.as_map()) == (True, None)


def test_invalid_point_derivation(heisenberg_functions):
    """Tests that translating a functional which isn't a point derivation fails."""
    with pytest.raises(ValueError):
        left_translate(heisenberg_functions, PointDerivation(heisenberg_functions, 0, {XY: 1}))


def test_identity_isnt_derivation(heisenberg_functions):
    """Tests that the identity map fails the Leibniz comparison."""
    passed, witness = is_derivation(heisenberg_functions, identity_map(heisenberg_functions))
    assert not passed
    assert witness is not None


def test_tangent_bracket(heisenberg_functions):
    """Tests that the bracket of the tangent Lie algebra is `[∂_x, ∂_y] = ∂_z`."""
    H = heisenberg_functions
    bracket = tangent_bracket(H, basis_point_derivation(H, X), basis_point_derivation(H, Y))
    assert bracket == PointDerivation(H, 0, {Z: 1})


def test_multiplicative_derivations(heisenberg_functions):
    """Tests that the difference of the translations is multiplicative while a translation alone isn't."""
    H = heisenberg_functions
    v = basis_point_derivation(H, Y)
    vL = left_translate(H, v)
    exact = right_translate(H, v) - vL
    assert exact(Z) == {X: Fraction(-1)}
    assert is_multiplicative(H, exact) == (True, None)
    assert is_multiplicative(H, HopfDerivation(H, 0, {})) == (True, None)
    passed, witness = is_multiplicative(H, vL)
    assert not passed
    assert witness.startswith("compatibility")


#Section: Maurer-Cartan Calculus
def test_maurer_cartan_of_inner_derivation(heisenberg_functions):
    """Tests the Maurer-Cartan form of `-x∂_z`, which is point-derivation valued and a group cocycle."""
    H = heisenberg_functions
    v = basis_point_derivation(H, Y)
    exact = right_translate(H, v) - left_translate(H, v)
    xi = mc_right(H, exact)
    assert xi(Z) == {X: Fraction(-1)}
    assert xi(((0, 1), (2, 1))) == {}
    assert is_point_derivation_valued(H, xi) == (True, None)
    assert is_group_one_cocycle(H, xi) == (True, None)
    assert maps_agree(H, mc_right_inverse(H, xi), exact.as_map(), leak=1) == (True, None)


def test_left_maurer_cartan_round_trip(heisenberg_functions):
    """Tests that `S ⋆ X` agrees with `X ⋆ S` on `z` and that `id ⋆ ξ` recovers `X`."""
    H = heisenberg_functions
    v = basis_point_derivation(H, Y)
    exact = right_translate(H, v) - left_translate(H, v)
    xi = mc_left(H, exact)
    assert xi(Z) == {X: Fraction(-1)}
    assert maps_agree(H, mc_left_inverse(H, xi), exact.as_map(), leak=1) == (True, None)


def test_cochain_degree_range(heisenberg_functions):
    """Tests that cofaces are refused above the supported cochain degree or outside the index range."""
    H = heisenberg_functions
    standard = Bicomodule(H)
    with pytest.raises(ValueError):
        coface(standard, Cochain(H, 3, 0, lambda key: {}), 0)
    with pytest.raises(ValueError):
        coface(standard, Cochain(H, 0, 0, lambda key: {}), 2)


def test_coface_of_point_derivation(heisenberg_functions):
    """Tests that the differential of a 0-cochain is the difference of its translations."""
    H = heisenberg_functions
    v = basis_point_derivation(H, Y)
    c = Cochain(H, 0, 0, lambda key: {(): v.value(key)} if v.value(key) else {})
    dc = cochain_differential(Bicomodule(H), c)
    assert dc(Z) == {(X,): Fraction(1)}
    assert dc(Y) == {}


def test_cochain_differential_in_exponential_coordinates(heis3_pair):
    """Tests the differential of a 0-cochain where the coproduct of `z*` carries half the bracket, and that it squares to zero."""
    H = heis3_pair.function_hopf()
    v = basis_point_derivation(H, X)
    c = Cochain(H, 0, 0, lambda key: {(): v.value(key)} if v.value(key) else {})
    standard = Bicomodule(H)
    dc = cochain_differential(standard, c)
    assert dc(Z) == {(Y,): Fraction(-1)}
    assert dc(XZ) == {(XY,): Fraction(-1)}
    square = cochain_differential(standard, dc)
    assert square(XZ) == {}
    assert cochains_agree(H, square, Cochain(H, 2, 0, lambda key: {}), leak=1) == (True, None)


@pytest.mark.slow
def test_mc_interchange_on_abelian_enveloping_algebra():
    """Tests the interchange of the Maurer-Cartan intertwiner with the cofaces on `U` of the abelian plane."""
    H = EnvelopingHopf(DGLASpec.from_names("plane", [('a', 0), ('b', 0)]), 3)
    v = basis_point_derivation(H, (0,))
    c = Cochain(H, 0, 0, lambda key: {(): v.value(key)} if v.value(key) else {})
    report = check_mc_interchange(H, c)
    assert report.passed()
    assert report.failures() == []
    assert [row['check'] for row in report.rows] == ['interchange_0', 'interchange_1']


@pytest.mark.slow
def test_translation_calculus_on_plane(plane_functions):
    """Tests the translation calculus on the additive plane."""
    assert check_translation_calculus(plane_functions).passed()


@pytest.mark.slow
@pytest.mark.dependency(depends=['test_function_hopf_axioms'])
def test_translation_calculus_on_heisenberg_group(heisenberg_functions):
    """Tests the translation calculus on the Heisenberg functions."""
    report = check_translation_calculus(heisenberg_functions)
    assert report.passed()
    assert 'mc_cocycle' in [row['check'] for row in report.rows]


@pytest.mark.slow
def test_translation_calculus_in_exponential_coordinates(heis3_pair):
    """Tests the translation calculus on the Heisenberg group in exponential coordinates, where truncated coproducts drop terms of total weight above three."""
    report = check_translation_calculus(heis3_pair.function_hopf())
    log.info(f"The translation calculus in exponential coordinates is\n{report.render()}")
    assert report.passed()
    assert report.outcome('coface_squared')
    assert report.outcome('interchange_1')
