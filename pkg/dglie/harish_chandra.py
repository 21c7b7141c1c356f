"""Harish-Chandra pairs and the integration of DGLAs to DG Lie groups.

A pair couples the enveloping algebra of the whole DGLA with the polynomial group of its degree-zero part. A function on the resulting group is stored by its values `f(s, g)` on the fiber PBW monomials `s`, each value a polynomial in the first coordinate copy of the group model; values on other elements of `U(𝔤)` follow by rewriting into PBW form and differentiating along right-invariant vector fields.
"""
import logging
from collections import Counter
from fractions import Fraction
from itertools import combinations
from math import factorial
from sympy import QQ

from .app import *
from .statements import *
from .grading import *
from .dgla import DGLASpec, check_dgla, extended_dgla, isomorphic_by_names
from .enveloping_algebra import EnvelopingAlgebra, monomial_coproduct
from .hopf_engine import *
from .nilpotent_group import *
from .reports import VerificationReport

log = logging.getLogger(__name__)


#Section: Harish-Chandra Pairs
class HarishChandraPair:
    """The pair `(G_0, U(𝔤))` of a DGLA whose degree-zero part is nilpotent and acts unipotently.

    The basis is reordered so the fiber generators, those of nonzero degree, come first; PBW monomials then split as a fiber part followed by degree-zero letters. In formal mode every generator counts as fiber and the group is a point.

    Attributes:
        self.source_spec (DGLASpec): the algebra as given
        self.spec (DGLASpec): the algebra over the reordered basis
        self.truncation_weight (int): the weight bound W
        self.formal (bool): whether the degree-zero part is treated formally
        self.m (int): the number of fiber generators
        self.g0 (DGLASpec): the degree-zero subalgebra, empty in formal mode
        self.model (NilpotentGroupModel): the polynomial group of `self.g0`
        self.algebra (EnvelopingAlgebra): the enveloping algebra of `self.spec`
        self.bracket (PolynomialBracket): the bracket of `self.spec` on polynomial vectors
        self.alpha (dict): the matrix of `α(g) = exp(ad_g)` on the whole algebra at the generic point
        self.alpha_inverse (dict): the matrix of `α(g)^{-1}`
        self.coordinates (GradedBasis): the coordinate functions, `x*` of degree `−|x|` for each generator `x`

    Methods:
        embed: Moves a vector of `self.g0` into the indexing of `self.spec`.
        alpha_at: The matrix of `α` at a polynomial point.
        differentiate: Applies the differential to a polynomial vector.
        fiber_monomials: Lists the fiber PBW monomials up to a weight.
        function_hopf: The truncated Hopf algebra of functions on the group.
    """
    def __init__(self, spec, truncation_weight=DEFAULT_TRUNCATION_WEIGHT, formal=False):
        """The constructor method for `HarishChandraPair`, which builds the group model and the exponential action.

        Args:
            spec (DGLASpec): the algebra; it must pass `check_dgla()`
            truncation_weight (int, optional): the weight bound; default is `DEFAULT_TRUNCATION_WEIGHT`
            formal (bool, optional): whether to treat every generator as fiber; default is `False`

        Raises:
            ValueError: the algebra fails the DGLA axioms, its degree-zero part isn't nilpotent, or that part doesn't act nilpotently on the whole algebra
        """
        log.info(f"Starting `HarishChandraPair()` for {spec.name} with W={truncation_weight}{' in formal mode' if formal else ''}.")
        report = check_dgla(spec)
        if not report.passed():
            message = failed_axioms_statement(report.failures())
            log.error(message)
            raise ValueError(message)
        self.source_spec = spec
        self.truncation_weight = truncation_weight
        self.formal = formal
        if formal:
            fiber, base = list(spec.basis.names), []
        else:
            fiber = [name for name, degree in spec.basis if degree != 0]
            base = [name for name, degree in spec.basis if degree == 0]
        self.spec = spec.reordered(fiber + base)
        self.m = len(fiber)
        if base:
            self.g0 = self.spec.subalgebra(base, name=f"{spec.name}_0")
            self.g0.nilpotency_class = spec.nilpotency_class
        else:
            self.g0 = DGLASpec(GradedBasis([], label=f"{spec.name}_0"), name=f"{spec.name}_0")
        self.model = NilpotentGroupModel(self.g0)
        self.algebra = EnvelopingAlgebra(self.spec)
        self.bracket = PolynomialBracket(self.spec)
        self.coordinates = GradedBasis([(f"{name}*", -degree) for name, degree in self.spec.basis], label=f"O({spec.name})")
        self._require_unipotent(base)
        generic = self.model.point(1)
        self.alpha = self.alpha_at(generic)
        self.alpha_inverse = self.alpha_at(self.model.inverse(generic))
        self._hopf = None
        log.info(construction_complete_statement(f"the Harish-Chandra pair of {spec.name}", f"{self.m} fiber and {len(base)} degree-zero generators"))


    def __repr__(self):
        return f"HarishChandraPair({self.spec.name}, W={self.truncation_weight}, formal={self.formal})"


    def _require_unipotent(self, base):
        size = len(self.spec.basis)
        ring = self.model.ring
        generic = self.embed(self.model.point(1))
        for index in range(size):
            _, terminated = exponential_series(lambda vector: self.bracket(generic, vector), {index: ring.one}, size)
            if not terminated:
                culprit = "+".join(base)
                for position, name in enumerate(base):
                    generator = {self.m + position: ring.one}
                    _, alone = exponential_series(lambda vector: self.bracket(generator, vector), {index: ring.one}, size)
                    if not alone:
                        culprit = name
                        break
                message = not_unipotent_statement(culprit)
                log.error(message)
                raise ValueError(message)


    def embed(self, vector):
        return {self.m + index: entry for index, entry in vector.items()}


    def alpha_at(self, point):
        """The matrix of `exp(ad_X)` on the whole algebra for a polynomial point `X` of the group."""
        return self.model.ad_exp(self.embed(point), on=self.bracket)


    def differentiate(self, vector):
        """Applies the differential of `self.spec` to a polynomial vector."""
        result = {}
        for index, entry in vector.items():
            add_polynomial_vector(result, self.model.constant_vector(self.spec.differential.image(index)), entry)
        return result


    def fiber_monomials(self, max_weight=None):
        """Lists the PBW monomials in fiber letters with weight at most `max_weight`, defaulting to W."""
        max_weight = self.truncation_weight if max_weight is None else max_weight
        return [monomial for monomial in self.algebra.monomials(max_weight) if all(letter < self.m for letter in monomial)]


    def check_pair(self):
        """Checks that `α` acts by automorphisms, differentiates to `ad`, and is a homomorphism.

        Returns:
            VerificationReport: the rows `alpha_automorphism`, `alpha_differential`, and `alpha_homomorphism`
        """
        log.info(f"Starting `check_pair()` for {self.spec.name}.")
        model = self.model
        names = self.spec.basis.names
        size = len(names)
        report = VerificationReport(f"check_pair({self.spec.name})")

        witness = None
        for i, j in combinations(range(size), 2):
            left = apply_polynomial_matrix(self.alpha, self.bracket({i: model.ring.one}, {j: model.ring.one}))
            add_polynomial_vector(left, self.bracket(self.alpha.get(i, {}), self.alpha.get(j, {})), QQ(-1))
            if left:
                witness = f"{format_tuple_for_witness((names[i], names[j]))} {polynomial_witness(model, left, self.spec.basis)}"
                break
        report.add("alpha_automorphism", witness is None, witness)

        witness = None
        for k in range(size):
            linear = model.linear_part(self.alpha.get(k, {}))
            for j in range(model.dimension):
                expected = self.spec.bracket_of_basis(self.m + j, k)
                if linear.get(j, {}) != expected:
                    witness = f"{format_tuple_for_witness((model.basis.names[j], names[k]))}: {render_vector(self.spec.basis, linear.get(j, {}))} vs {render_vector(self.spec.basis, expected)}"
                    break
            if witness:
                break
        report.add("alpha_differential", witness is None, witness)

        witness = None
        product_matrix = self.alpha_at(model.bch(model.point(1), model.point(2)))
        composed = compose_polynomial_matrices(self.alpha, self.alpha_at(model.point(2)))
        for k in range(size):
            residual = add_polynomial_vector(dict(product_matrix.get(k, {})), composed.get(k, {}), QQ(-1))
            if residual:
                witness = f"column {names[k]}: {polynomial_witness(model, residual, self.spec.basis)}"
                break
        report.add("alpha_homomorphism", witness is None, witness)
        return report


    def function_hopf(self):
        """Returns the truncated Hopf algebra of functions on the group, built once per pair.

        Returns:
            FunctionHopf: the algebra over `self.coordinates`

        Raises:
            ValueError: the computed coproduct fails an axiom on some coordinate
        """
        if self._hopf is None:
            log.info(f"Starting `function_hopf()` for {self.spec.name}.")
            coproducts = {}
            for index in range(len(self.coordinates)):
                coproducts[index] = tensor_to_coordinates(self, h_comultiply(HFunction.coordinate(self, index)))
            self._hopf = FunctionHopf(f"O({self.spec.name})", self.coordinates, coproducts, self.truncation_weight, cocommutative=self.spec.is_abelian())
        return self._hopf


class HFunction:
    """A function on the group of a Harish-Chandra pair, given by its values on fiber PBW monomials.

    Attributes:
        self.pair (HarishChandraPair): the pair
        self.values (dict): fiber PBW monomial to a polynomial in the first coordinate copy
        self.degree (int or None): the degree when homogeneous
    """
    def __init__(self, pair, values, degree=None):
        self.pair = pair
        self.degree = degree
        self.values = {tuple(monomial): value for monomial, value in values.items() if value and len(monomial) <= pair.truncation_weight}


    @classmethod
    def coordinate(cls, pair, index):
        """The coordinate function dual to a generator of `pair.spec`."""
        ring = pair.model.ring
        if index < pair.m:
            return cls(pair, {(index,): ring.one}, -pair.spec.basis.degrees[index])
        return cls(pair, {(): pair.model.coordinate(1, index - pair.m)}, 0)


    @classmethod
    def unit(cls, pair):
        return cls(pair, {(): pair.model.ring.one}, 0)


    @classmethod
    def from_polynomial(cls, pair, polynomial):
        """A function pulled back from the degree-zero group."""
        return cls(pair, {(): polynomial}, 0)


    def value(self, monomial):
        return self.values.get(tuple(monomial), self.pair.model.ring.zero)


    def __eq__(self, other):
        if not isinstance(other, HFunction):
            return NotImplemented
        return self.values == other.values


    def __add__(self, other):
        values = dict(self.values)
        add_polynomial_vector(values, other.values)
        return HFunction(self.pair, values, self.degree if self.degree == other.degree else None)


    def __neg__(self):
        return HFunction(self.pair, scale_polynomial_vector(self.values, QQ(-1)), self.degree)


    def __sub__(self, other):
        return self + (-other)


    def scaled(self, coefficient):
        return HFunction(self.pair, scale_polynomial_vector(self.values, to_domain_rational(coefficient)), self.degree)


    def truncated(self):
        """Drops the terms whose total weight, fiber length plus polynomial degree, exceeds W."""
        values = {}
        for monomial, value in self.values.items():
            kept = truncate_polynomial(value, self.pair.truncation_weight - len(monomial))
            if kept:
                values[monomial] = kept
        return HFunction(self.pair, values, self.degree)


    def __repr__(self):
        if not self.values:
            return "HFunction(0)"
        names = self.pair.spec.basis.names
        pieces = [f"[{'*'.join(names[letter] for letter in monomial) or '1'}]: {value}" for monomial, value in sorted(self.values.items(), key=lambda item: (len(item[0]), item[0]))]
        return "HFunction(" + "; ".join(pieces) + ")"


def truncate_polynomial(polynomial, max_degree):
    """Keeps the terms of total degree at most `max_degree`."""
    if max_degree < 0:
        return polynomial.ring.zero
    terms = {monomial: coefficient for monomial, coefficient in polynomial.items() if sum(monomial) <= max_degree}
    return polynomial.ring.from_dict(terms) if terms else polynomial.ring.zero


def pairing_constant(algebra, monomial):
    """The value of the coordinate monomial `β^s` on the PBW monomial `s`: the factorials of the multiplicities times the Koszul signs of the letter pairs."""
    degrees = [algebra.basis.degrees[letter] for letter in monomial]
    constant = 1
    for count in Counter(monomial).values():
        constant *= factorial(count)
    for i, j in combinations(range(len(monomial)), 2):
        constant *= koszul_sign(degrees[i], degrees[j])
    return Fraction(constant)


#Section: Structure Maps on Functions
def reduce_evaluate(f, u):
    """Evaluates a function on an element of `U(𝔤)`.

    The element is rewritten in PBW form; each monomial splits as a fiber part `s` followed by degree-zero letters `Y_1 … Y_k`, and contributes `Y_k^R(…Y_1^R(f(s)))`.

    The trailing letters act through `+Y^R`, not `−Y^R`: with `right_invariant_vf` generating left multiplication, this is the sign under which `h_multiply` and `h_comultiply` satisfy the Hopf axioms.

    Args:
        f (HFunction): the function
        u (tuple or dict): a word of generator indices, or PBW monomials with `Fraction` coefficients

    Returns:
        PolyElement: the value as a polynomial in the first coordinate copy
    """
    pair = f.pair
    model = pair.model
    terms = u if isinstance(u, dict) else pair.algebra.normal_form(tuple(u))
    result = model.ring.zero
    for monomial, coefficient in terms.items():
        split = next((position for position, letter in enumerate(monomial) if letter >= pair.m), len(monomial))
        value = f.values.get(monomial[:split])
        if value is None:
            continue
        for letter in monomial[split:]:
            value = model.apply_vector_field(model.right_invariant_vf(letter - pair.m), value)
            if not value:
                break
        if value:
            result += value * to_domain_rational(coefficient)
    return result


def h_multiply(f1, f2):
    """Multiplies two functions through the coproduct of `U(𝔤)`.

    Args:
        f1 (HFunction): the left factor
        f2 (HFunction): the right factor

    Returns:
        HFunction: the product, truncated at weight W
    """
    pair = f1.pair
    algebra = pair.algebra
    ring = pair.model.ring
    values = {}
    for monomial in pair.fiber_monomials():
        total = ring.zero
        for (left, right), sign in monomial_coproduct(algebra, monomial).items():
            first = f1.values.get(left)
            second = f2.values.get(right)
            if first is None or second is None:
                continue
            coefficient = sign * koszul_sign(algebra.word_degree(left), algebra.word_degree(right))
            total += first * second * to_domain_rational(coefficient)
        values[monomial] = total
    degree = f1.degree + f2.degree if f1.degree is not None and f2.degree is not None else None
    return HFunction(pair, values, degree).truncated()


def _alpha_expansion(pair, word):
    """Expands `α(g_1)` applied letter by letter to a word, as `(word, polynomial coefficient)` pairs."""
    expansion = [((), pair.model.ring.one)]
    for letter in word:
        expansion = [(prefix + (target,), coefficient * entry) for prefix, coefficient in expansion for target, entry in pair.alpha.get(letter, {}).items()]
    return expansion


def h_comultiply(f):
    """Computes the coproduct of a function as its values on pairs of fiber monomials.

    The value at `(s_1, g_1; s_2, g_2)` is `f(s_1 · α(g_1)(s_2), g_1 g_2)`, a polynomial in the first two coordinate copies, truncated so each term has total weight at most W.

    Args:
        f (HFunction): the function

    Returns:
        dict: `(s_1, s_2)` to a polynomial in the first two coordinate copies
    """
    pair = f.pair
    model = pair.model
    algebra = pair.algebra
    W = pair.truncation_weight
    product_point = model.bch(model.point(1), model.point(2))
    fiber = pair.fiber_monomials()
    result = {}
    for first in fiber:
        for second in fiber:
            budget = W - len(first) - len(second)
            if budget < 0:
                continue
            if f.degree is not None and algebra.word_degree(first) + algebra.word_degree(second) != -f.degree:
                continue
            total = model.ring.zero
            for images, coefficient in _alpha_expansion(pair, second):
                value = reduce_evaluate(f, algebra.normal_form(first + images))
                if value:
                    total += coefficient * model.substitute(value, {1: product_point})
            total = truncate_polynomial(total, budget)
            if total:
                result[(first, second)] = total
    return result


def _coordinate_key(pair, monomial, exponents, point=1):
    """The coordinate monomial `β^s x^e` for a fiber monomial and the exponents of one coordinate copy."""
    key = sorted(Counter(monomial).items())
    for index in range(pair.model.dimension):
        exponent = exponents[pair.model.position(point, index)]
        if exponent:
            key.append((pair.m + index, exponent))
    return tuple(key)


def to_coordinates(f):
    """Writes a function as an element of the function Hopf algebra, `Σ_s f(s)/c_s β^s`.

    Args:
        f (HFunction): the function

    Returns:
        dict: coordinate monomial to `Fraction`
    """
    pair = f.pair
    result = {}
    for monomial, value in f.values.items():
        constant = pairing_constant(pair.algebra, monomial)
        for exponents, coefficient in value.items():
            add_to_vector(result, {_coordinate_key(pair, monomial, exponents): from_domain_rational(coefficient) / constant})
    return result


def from_coordinates(pair, element, degree=None):
    """Reads an element of the function Hopf algebra back as a function.

    Args:
        pair (HarishChandraPair): the pair
        element (dict): coordinate monomial to `Fraction`
        degree (int, optional): the degree, when known; default is `None`

    Returns:
        HFunction: the function
    """
    model = pair.model
    ngens = len(model.ring.gens)
    values = {}
    for key, coefficient in element.items():
        monomial = []
        exponents = [0] * ngens
        for index, exponent in key:
            if index < pair.m:
                monomial.extend([index] * exponent)
            else:
                exponents[model.position(1, index - pair.m)] = exponent
        monomial = tuple(monomial)
        term = model.ring.from_dict({tuple(exponents): to_domain_rational(coefficient * pairing_constant(pair.algebra, monomial))})
        values[monomial] = values.get(monomial, model.ring.zero) + term
    return HFunction(pair, values, degree)


def tensor_to_coordinates(pair, tensor):
    """Writes the output of `h_comultiply()` as a 2-tensor of coordinate monomials, with coefficient `(−1)^{|s_1||s_2|} F(s_1, s_2)/(c_{s_1} c_{s_2})`."""
    algebra = pair.algebra
    result = {}
    for (first, second), value in tensor.items():
        scale = Fraction(koszul_sign(algebra.word_degree(first), algebra.word_degree(second))) / (pairing_constant(algebra, first) * pairing_constant(algebra, second))
        for exponents, coefficient in value.items():
            key = (_coordinate_key(pair, first, exponents, 1), _coordinate_key(pair, second, exponents, 2))
            add_to_vector(result, {key: from_domain_rational(coefficient) * scale})
    return result


def h_antipode(f):
    """Applies the antipode through the coordinate form of the function."""
    H = f.pair.function_hopf()
    return from_coordinates(f.pair, H.apply_antipode(to_coordinates(f)), f.degree)


#Section: DG Harish-Chandra Pairs
class DGHCP:
    """A Harish-Chandra pair with the degree-one cocycle `λ` that twists the differential along the group.

    Attributes:
        self.pair (HarishChandraPair): the pair
        self.lam (dict): generator index of `pair.spec` to a polynomial in the first coordinate copy
    """
    def __init__(self, pair, lam=None):
        self.pair = pair
        self.lam = build_lambda(pair) if lam is None else lam


    def __repr__(self):
        return f"DGHCP({self.pair.spec.name}: λ = {render_polynomial_vector(self.pair.spec.basis, self.lam)})"


def build_lambda(pair):
    """Builds `λ(exp W) = −Σ_k ad_W^k(∂W)/(k+1)!`; in formal mode, and for a trivial group, `λ = 0`.

    Args:
        pair (HarishChandraPair): the pair

    Returns:
        dict: the polynomial vector `λ`

    Raises:
        ValueError: `λ` fails a row of `check_lambda()`
    """
    log.info(f"Starting `build_lambda()` for {pair.spec.name}.")
    if pair.formal or not pair.model.dimension:
        return {}
    W = pair.embed(pair.model.point(1))
    term = pair.differentiate(W)
    lam = {}
    for k in range(len(pair.spec.basis) + 1):
        if not term:
            break
        add_polynomial_vector(lam, term, QQ(-1, factorial(k + 1)))
        term = pair.bracket(W, term)
    report = check_lambda(pair, lam)
    if not report.passed():
        failure = report.failures()[0]
        message = lambda_incompatible_statement(f"{failure}: {report.witness(failure)}")
        log.error(message)
        raise ValueError(message)
    return lam


def check_lambda(pair, lam):
    """Checks that `λ` vanishes at the identity, is a cocycle for `α`, and conjugates the differential.

    Args:
        pair (HarishChandraPair): the pair
        lam (dict): the polynomial vector `λ`

    Returns:
        VerificationReport: the rows `lambda_at_unit`, `lambda_cocycle`, and `lambda_compatibility`
    """
    log.info(f"Starting `check_lambda()` for {pair.spec.name}.")
    model = pair.model
    basis = pair.spec.basis
    report = VerificationReport(f"check_lambda({pair.spec.name})")
    at_unit = model.at_identity(lam)
    report.add("lambda_at_unit", not at_unit, render_vector(basis, at_unit))

    if model.dimension:
        cochain = GroupCochain(model, 1, lam, module=basis, name="lambda")
        residual = group_coboundary(cochain, action=lambda g, vector: apply_polynomial_matrix(pair.alpha_at(g), vector)).values
    else:
        residual = {}
    report.add("lambda_cocycle", not residual, None if not residual else polynomial_witness(model, residual, basis))

    # α(g)∘∂∘α(g)^{-1} = ∂ + ad_{λ(g)}
    witness = None
    for index in range(len(basis)):
        left = apply_polynomial_matrix(pair.alpha, pair.differentiate(pair.alpha_inverse.get(index, {})))
        add_polynomial_vector(left, pair.differentiate({index: model.ring.one}), QQ(-1))
        add_polynomial_vector(left, pair.bracket(lam, {index: model.ring.one}), QQ(-1))
        if left:
            witness = f"{basis.names[index]}: {polynomial_witness(model, left, basis)}"
            break
    report.add("lambda_compatibility", witness is None, witness)
    return report


def differentiate_word(pair, word):
    """Extends the differential to `U(𝔤)` as a degree-one derivation and applies it to a word, returning PBW form."""
    basis = pair.spec.basis
    result = {}
    passed_degree = 0
    for position, letter in enumerate(word):
        sign = sign_of_power(passed_degree)
        for target, coefficient in pair.spec.differential.image(letter).items():
            add_to_vector(result, pair.algebra.normal_form(word[:position] + (target,) + word[position+1:]), coefficient * sign)
        passed_degree += basis.degrees[letter]
    return result


def apply_Q(dghcp, f):
    """Applies the twisted differential `(Qf)(u, g) = (−1)^{|u|} f(∂u, g) − Σ_k λ_k(g) f(u e_k, g)`.

    The `∂` term carries the sign and the `λ` term doesn't, the reverse of the other common convention; with `+Y^R` equivariance in `reduce_evaluate` this is the choice for which `δ_Q = ∂` and `Q(b*) = a*` on `ab-ext`.

    Args:
        dghcp (DGHCP): the pair with its cocycle
        f (HFunction): the function

    Returns:
        HFunction: `Qf`, truncated at weight W
    """
    pair = dghcp.pair
    algebra = pair.algebra
    values = {}
    for monomial in pair.fiber_monomials():
        degree = algebra.word_degree(monomial)
        if f.degree is not None and degree != -(f.degree + 1):
            continue
        total = reduce_evaluate(f, differentiate_word(pair, monomial)) * QQ(sign_of_power(degree))
        for index, entry in dghcp.lam.items():
            total -= entry * reduce_evaluate(f, monomial + (index,))
        values[monomial] = total
    return HFunction(pair, values, None if f.degree is None else f.degree + 1).truncated()


def build_Q(dghcp):
    """Builds the degree-one derivation `Q` of the function Hopf algebra from its values on the coordinates.

    Args:
        dghcp (DGHCP): the pair with its cocycle

    Returns:
        HopfDerivation: `Q`
    """
    log.info(f"Starting `build_Q()` for {dghcp.pair.spec.name}.")
    pair = dghcp.pair
    H = pair.function_hopf()
    values = {}
    for index, generator in enumerate(H.generators()):
        values[generator] = H.bounded(to_coordinates(apply_Q(dghcp, HFunction.coordinate(pair, index))), H.truncation_weight)
    return HopfDerivation(H, 1, values, "Q")


def inner_Q(pair, p_index):
    """Builds the derivation `(Q̃f)(u, g) = (−1)^{|u|} f(p·u, g) − f(u·α(g)p, g)` of an inner differential `∂ = ad_p`.

    Args:
        pair (HarishChandraPair): a pair whose differential is `ad_p`
        p_index (int): the index of `p` in `pair.spec`

    Returns:
        HopfDerivation: `Q̃`
    """
    log.info(f"Starting `inner_Q()` for {pair.spec.name}.")
    H = pair.function_hopf()
    algebra = pair.algebra
    values = {}
    for index, generator in enumerate(H.generators()):
        f = HFunction.coordinate(pair, index)
        function_values = {}
        for monomial in pair.fiber_monomials():
            degree = algebra.word_degree(monomial)
            if degree != -(f.degree + 1):
                continue
            total = reduce_evaluate(f, (p_index,) + monomial) * QQ(sign_of_power(degree))
            for target, entry in pair.alpha.get(p_index, {}).items():
                total -= entry * reduce_evaluate(f, monomial + (target,))
            function_values[monomial] = total
        values[generator] = H.bounded(to_coordinates(HFunction(pair, function_values, f.degree + 1).truncated()), H.truncation_weight)
    return HopfDerivation(H, 1, values, "Q~")


#Section: Comparisons
def derivations_agree(H, first, second, leak=1):
    """Compares two derivations on the generators up to weight W − `leak`.

    Returns:
        tuple: a bool and a witness string or `None`
    """
    bound = H.comparison_bound(leak)
    for generator in H.generators():
        residual = H.bounded(add_to_vector(dict(first(generator)), second(generator), -1), bound)
        if residual:
            return False, f"{H.render_key(generator)} residual {H.render_element(residual)}"
    return True, None


def q_squared_check(H, Q):
    """Checks `Q² = ½[Q, Q] = 0` on the generators up to weight W − 2."""
    square = derivation_commutator(Q, Q)
    zero = HopfDerivation(H, 2, {}, "0")
    return derivations_agree(H, square, zero, leak=2)


def _transport(target, element, position):
    """Rewrites an element over renumbered coordinates, multiplying the factors again so odd reorderings carry their signs."""
    result = {}
    for key, coefficient in element.items():
        value = target.unit()
        for index, exponent in key:
            for _ in range(exponent):
                value = target.multiply(value, {((position[index], 1),): Fraction(1)})
        add_to_vector(result, value, coefficient)
    return result


def integrations_agree(first, second):
    """Compares two function Hopf algebras with derivations, matching coordinates by name.

    Args:
        first (tuple): a `FunctionHopf` and a `HopfDerivation`
        second (tuple): a `FunctionHopf` and a `HopfDerivation`

    Returns:
        tuple: a bool and a witness string or `None`
    """
    H1, Q1 = first
    H2, Q2 = second
    if sorted(H1.coordinates) != sorted(H2.coordinates):
        return False, f"coordinates {H1.coordinates} vs {H2.coordinates}"
    position = {index: H2.coordinates.index(name) for index, name in enumerate(H1.coordinates.names)}
    for generator in H1.generators():
        image = ((position[generator[0][0]], 1),)
        coproduct = {}
        for (left, right), coefficient in H1.coproduct(generator).items():
            for new_left, left_coefficient in _transport(H2, {left: Fraction(1)}, position).items():
                for new_right, right_coefficient in _transport(H2, {right: Fraction(1)}, position).items():
                    add_to_vector(coproduct, {(new_left, new_right): coefficient * left_coefficient * right_coefficient})
        residual = H2.bounded(add_to_vector(coproduct, H2.coproduct(image), -1), H2.comparison_bound(0))
        if residual:
            return False, f"coproduct of {H1.render_key(generator)} residual {H2.render_tensor(residual)}"
        residual = H2.bounded(add_to_vector(_transport(H2, Q1(generator), position), Q2(image), -1), H2.comparison_bound(1))
        if residual:
            return False, f"derivation at {H1.render_key(generator)} residual {H2.render_element(residual)}"
    return True, None


#Section: Differentiation
def dgla_of_group(H, Q):
    """Differentiates a function Hopf algebra with a degree-one derivation to its tangent DGLA.

    The tangent basis is the point derivations dual to the coordinates, named by the coordinate names without the trailing `*`; the bracket is `tangent_bracket()` and the differential is `δ_Q(v_i) = (−1)^{|v_i|} Σ_k q_{ki} v_k`, where `q_{ki}` is the coefficient of coordinate `i` in `Q` of coordinate `k`.

    Args:
        H (FunctionHopf): the algebra
        Q (HopfDerivation): the derivation

    Returns:
        tuple: the tangent `DGLASpec` and a `VerificationReport` with the `check_dgla()` rows and the rows `multiplicative`, `xi_at_unit`, `xi_point_derivation_valued`, and `xi_cocycle`
    """
    log.info(f"Starting `dgla_of_group()` for {H.name}.")
    generators = H.generators()
    names = [name[:-1] if name.endswith("*") else name for name in H.coordinates.names]
    basis = GradedBasis([(name, -degree) for name, degree in zip(names, H.coordinates.degrees)], label=f"Lie({H.name})")
    left = {generator: left_translate(H, basis_point_derivation(H, generator)) for generator in generators}
    structure = {}
    for i, j in combinations(range(len(generators)), 2):
        structure[(i, j)] = _point_derivation_vector(H, value_at_unit(H, derivation_commutator(left[generators[i]], left[generators[j]])))
    for i, generator in enumerate(generators):
        if basis.is_odd(i):
            structure[(i, i)] = _point_derivation_vector(H, value_at_unit(H, derivation_commutator(left[generator], left[generator])))
    matrix = {}
    for k, generator in enumerate(generators):
        for key, coefficient in Q(generator).items():
            if len(key) == 1 and key[0][1] == 1:
                i = key[0][0]
                matrix.setdefault(i, {})[k] = coefficient * sign_of_power(basis.degrees[i])
    spec = DGLASpec(basis, structure, GradedLinearMap(basis, 1, matrix), name=f"Lie({H.name})")

    report = check_dgla(spec)
    report.title = f"dgla_of_group({H.name})"
    passed, witness = is_multiplicative(H, Q)
    report.add("multiplicative", passed, witness)
    xi = mc_right(H, Q)
    witness = None
    for key in H.basis():
        value = H.apply_counit(xi(key))
        if value:
            witness = f"{H.render_key(key)} value {format_rational(value)}"
            break
    report.add("xi_at_unit", witness is None, witness)
    passed, witness = is_point_derivation_valued(H, xi)
    report.add("xi_point_derivation_valued", passed, witness)
    passed, witness = is_group_one_cocycle(H, xi)
    report.add("xi_cocycle", passed, witness)
    return spec, report


def _point_derivation_vector(H, v):
    generators = H.generators()
    return {generators.index(key): value for key, value in v.values.items()}


#Section: Routes
def extended_route(dghcp):
    """Integrates the extension by `partial`, where the differential is inner, and compares with the direct construction.

    Args:
        dghcp (DGHCP): the pair with its cocycle

    Returns:
        VerificationReport: the rows `ideal_preserved`, `restriction_agrees`, `inner_formula_agrees`, and `inner_translation`
    """
    pair = dghcp.pair
    log.info(f"Starting `extended_route()` for {pair.spec.name}.")
    report = VerificationReport(f"extended_route({pair.spec.name})")
    extended = extended_dgla(pair.source_spec)
    extended_pair = HarishChandraPair(extended, pair.truncation_weight, formal=pair.formal)
    H = pair.function_hopf()
    H_extended = extended_pair.function_hopf()
    partial_name = extended.basis.names[-1]
    p_index = extended_pair.spec.basis.index(partial_name)
    p_generator = ((p_index, 1),)
    Q_inner = inner_Q(extended_pair, p_index)
    bound = H_extended.comparison_bound(1)

    witness = None
    value = H_extended.bounded(Q_inner(p_generator), bound)
    outside = {key: coefficient for key, coefficient in value.items() if all(index != p_index for index, _ in key)}
    if outside:
        witness = f"{H_extended.render_key(p_generator)} residual {H_extended.render_element(outside)}"
    report.add("ideal_preserved", witness is None, witness)

    Q = build_Q(dghcp)
    position = {index: H.coordinates.index(name) for index, name in enumerate(H_extended.coordinates.names) if index != p_index}
    witness = None
    for index, generator in enumerate(H_extended.generators()):
        if index == p_index:
            continue
        kept = {key: coefficient for key, coefficient in H_extended.bounded(Q_inner(generator), bound).items() if all(letter != p_index for letter, _ in key)}
        restricted = _transport(H, kept, position)
        target = ((position[index], 1),)
        residual = H.bounded(add_to_vector(restricted, Q(target), -1), H.comparison_bound(1))
        if residual:
            witness = f"{H.render_key(target)} residual {H.render_element(residual)}"
            break
    report.add("restriction_agrees", witness is None, witness)

    passed, witness = derivations_agree(H_extended, Q_inner, build_Q(DGHCP(extended_pair)))
    report.add("inner_formula_agrees", passed, witness)

    v = basis_point_derivation(H_extended, p_generator)
    passed, witness = derivations_agree(H_extended, Q_inner, right_translate(H_extended, v) - left_translate(H_extended, v))
    report.add("inner_translation", passed, witness)
    return report


def integrate(spec, truncation_weight=DEFAULT_TRUNCATION_WEIGHT, formal=False):
    """Integrates a DGLA and checks the result against the algebra it came from.

    Args:
        spec (DGLASpec): the algebra
        truncation_weight (int, optional): the weight bound; default is `DEFAULT_TRUNCATION_WEIGHT`
        formal (bool, optional): whether to treat every generator as fiber; default is `False`

    Returns:
        tuple: the `DGHCP`, the `FunctionHopf`, `Q`, and a `VerificationReport` with the pair, Hopf, cocycle, and derivation rows, `delta_Q == partial`, `round_trip`, and, when the differential is nonzero, the `extended_` rows

    Raises:
        ValueError: the algebra can't be integrated in the polynomial model
    """
    log.info(f"Starting `integrate()` for {spec.name}.")
    pair = HarishChandraPair(spec, truncation_weight, formal)
    H = pair.function_hopf()
    dghcp = DGHCP(pair)
    Q = build_Q(dghcp)
    report = VerificationReport(f"integrate({spec.name})")
    report.extend(pair.check_pair())
    hopf_report = check_hopf_axioms(H)
    report.add("hopf_axioms", hopf_report.passed(), ", ".join(hopf_report.failures()))
    report.extend(check_lambda(pair, dghcp.lam))
    passed, witness = q_squared_check(H, Q)
    report.add("Q_squared", passed, witness)

    tangent, tangent_report = dgla_of_group(H, Q)
    report.extend(tangent_report, prefix="tangent_")
    passed, witness = isomorphic_by_names(tangent, spec)
    report.add("delta_Q == partial", passed, witness)
    again = HarishChandraPair(tangent, truncation_weight, formal)
    passed, witness = integrations_agree((H, Q), (again.function_hopf(), build_Q(DGHCP(again))))
    report.add("round_trip", passed, witness)

    if not spec.differential.is_zero():
        report.extend(extended_route(dghcp), prefix="extended_")
    return dghcp, H, Q, report


#Section: Chevalley-Eilenberg Groups
def ce_group(spec, truncation_weight=DEFAULT_TRUNCATION_WEIGHT):
    """Builds the additive group of the shifted algebra with the Chevalley–Eilenberg derivation.

    The coordinates `θ^i` are named `x*` with degree `1 − |x|`, primitive, with `S(θ) = −θ`, and `Qθ^i = Σ_j (−1)^{d_j} D^i_j θ^j − ½ Σ_{j,k} (−1)^{d_j(1−d_k)} c^i_{jk} θ^j θ^k`. Only the linear part is multiplicative on the additive group unless the algebra is abelian, so the report checks that part and differentiates it.

    Args:
        spec (DGLASpec): a DGLA whose degrees lie on one side of zero
        truncation_weight (int, optional): the weight bound; default is `DEFAULT_TRUNCATION_WEIGHT`

    Returns:
        tuple: the `FunctionHopf`, the full `Q`, and a `VerificationReport` with the rows `hopf_axioms`, `Q_degree`, `Q_squared`, `linear_part_multiplicative`, `tangent_dgla`, and `round_trip`

    Raises:
        ValueError: the degrees lie on both sides of zero
    """
    log.info(f"Starting `ce_group()` for {spec.name}.")
    degrees = spec.basis.degrees
    if any(degree > 0 for degree in degrees) and any(degree < 0 for degree in degrees):
        message = one_sided_grading_statement(degrees)
        log.error(message)
        raise ValueError(message)
    n = len(spec.basis)
    coordinates = GradedBasis([(f"{name}*", 1 - degree) for name, degree in spec.basis], label=f"CE({spec.name})")
    coproducts = {index: {(((index, 1),), ()): Fraction(1), ((), ((index, 1),)): Fraction(1)} for index in range(n)}
    antipodes = {index: {((index, 1),): Fraction(-1)} for index in range(n)}
    H = FunctionHopf(f"CE({spec.name})", coordinates, coproducts, truncation_weight, generator_antipodes=antipodes, cocommutative=True)

    linear_values = {}
    values = {}
    for i in range(n):
        linear = {}
        for j in range(n):
            coefficient = spec.differential.image(j).get(i)
            if coefficient:
                add_to_vector(linear, {((j, 1),): coefficient * sign_of_power(degrees[j])})
        full = dict(linear)
        for j in range(n):
            for k in range(n):
                coefficient = spec.bracket_of_basis(j, k).get(i)
                if coefficient:
                    add_to_vector(full, H.product(((j, 1),), ((k, 1),)), -coefficient * sign_of_power(degrees[j] * (1 - degrees[k])) / 2)
        linear_values[((i, 1),)] = linear
        values[((i, 1),)] = H.bounded(full, truncation_weight)
    Q = HopfDerivation(H, 1, values, "Q_CE")
    Q_linear = HopfDerivation(H, 1, linear_values, "Q_lin")

    report = VerificationReport(f"ce_group({spec.name})")
    hopf_report = check_hopf_axioms(H)
    report.add("hopf_axioms", hopf_report.passed(), ", ".join(hopf_report.failures()))
    witness = None
    for generator in H.generators():
        value = Q(generator)
        if value and any(H.degree(key) != H.degree(generator) + 1 for key in value):
            witness = f"{H.render_key(generator)} -> {H.render_element(value)}"
            break
    report.add("Q_degree", witness is None, witness)
    passed, witness = q_squared_check(H, Q)
    report.add("Q_squared", passed, witness)
    passed, witness = is_multiplicative(H, Q_linear)
    report.add("linear_part_multiplicative", passed, witness)
    tangent, tangent_report = dgla_of_group(H, Q_linear)
    report.add("tangent_dgla", tangent_report.passed(), ", ".join(tangent_report.failures()))
    again = HarishChandraPair(tangent, truncation_weight, formal=True)
    passed, witness = integrations_agree((H, Q_linear), (again.function_hopf(), build_Q(DGHCP(again))))
    report.add("round_trip", passed, witness)
    return H, Q, report
