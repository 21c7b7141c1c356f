"""The free graded-commutative algebra on a graded basis.

Monomials are tuples of `(generator index, exponent)` pairs sorted by index, with odd generators at exponent one; an `AlgebraElement` is a sparse map from monomials to exact rationals that may carry a truncation weight.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement

from .app import *
from .statements import *
from .grading import *

log = logging.getLogger(__name__)


#Section: Monomials
def monomial_degree(basis, monomial):
    """Returns `Σ exponent·degree` for a monomial."""
    return sum(exponent * basis.degrees[index] for index, exponent in monomial)


def monomial_weight(monomial):
    """Returns the total polynomial degree of a monomial."""
    return sum(exponent for _, exponent in monomial)


def monomial_word(monomial):
    """Expands a monomial into the word of generator indices it abbreviates."""
    word = []
    for index, exponent in monomial:
        word.extend([index] * exponent)
    return word


def monomial_sort_key(monomial):
    """The canonical term order: weight first, then lexicographic on the expanded word."""
    return (monomial_weight(monomial), monomial_word(monomial))


def multiply_monomials(basis, first, second):
    """Multiplies two canonical monomials.

    Moving each factor of `second` to the left past the larger factors of `first` costs the Koszul sign of the two factors, so the sign is a product over out-of-order pairs.

    Args:
        basis (GradedBasis): the ambient basis
        first (tuple): a canonical monomial
        second (tuple): a canonical monomial

    Returns:
        tuple: the product monomial and its sign; the sign is `0` if an odd generator repeats
    """
    return _multiply_monomials(basis, first, second)


@lru_cache(maxsize=CACHE_SIZE)
def _multiply_monomials(basis, first, second):
    sign = 1
    exponents = dict(first)
    for index, exponent in second:
        if index in exponents and basis.is_odd(index):
            return (), 0
        for other_index, other_exponent in first:
            if other_index > index:
                sign *= koszul_sign(exponent * basis.degrees[index], other_exponent * basis.degrees[other_index])
        exponents[index] = exponents.get(index, 0) + exponent
    return tuple(sorted(exponents.items())), sign


def monomials_of_weight(basis, weight):
    """Lists the canonical monomials of one weight in lexicographic order on their expanded words.

    Args:
        basis (GradedBasis): the ambient basis
        weight (int): the total polynomial degree

    Returns:
        list: the monomials; odd generators appear at most once
    """
    result = []
    for word in combinations_with_replacement(range(len(basis)), weight):
        if any(left == right and basis.is_odd(left) for left, right in zip(word, word[1:])):
            continue
        exponents = {}
        for letter in word:
            exponents[letter] = exponents.get(letter, 0) + 1
        result.append(tuple(sorted(exponents.items())))
    return result


def render_monomial(basis, monomial):
    """Renders a monomial as `name^k*name` text; the empty monomial renders as "1"."""
    if not monomial:
        return "1"
    return "*".join(basis.names[index] if exponent == 1 else f"{basis.names[index]}^{exponent}" for index, exponent in monomial)


#Section: Elements
class AlgebraElement:
    """A sparse exact-rational combination of canonical graded-commutative monomials.

    Attributes:
        self.basis (GradedBasis): the ambient basis
        self.terms (dict): canonical monomial to nonzero `Fraction`
        self.truncation_weight (int or None): monomials of larger weight are dropped when set

    Methods:
        zero: The zero element.
        one: The unit element.
        generator: The element consisting of a single generator.
        from_monomial: The element `coefficient * monomial`.
        degree: The common degree of the terms, if homogeneous.
        weight: The largest weight among the terms.
        truncated: A copy truncated at a weight.
        part_of_weight: The homogeneous component of a given weight.
        render: The canonical text form.
    """
    def __init__(self, basis, terms=None, truncation_weight=None):
        """The constructor method for `AlgebraElement`, which drops zero coefficients and applies the truncation.

        Args:
            basis (GradedBasis): the ambient basis
            terms (dict, optional): canonical monomial to coefficient; default is `None`, meaning zero
            truncation_weight (int, optional): the truncation weight; default is `None`
        """
        self.basis = basis
        self.truncation_weight = truncation_weight
        self.terms = {}
        for monomial, coefficient in (terms or {}).items():
            if coefficient and (truncation_weight is None or monomial_weight(monomial) <= truncation_weight):
                self.terms[monomial] = Fraction(coefficient)


    @classmethod
    def zero(cls, basis, truncation_weight=None):
        return cls(basis, {}, truncation_weight)


    @classmethod
    def one(cls, basis, truncation_weight=None):
        return cls(basis, {(): Fraction(1)}, truncation_weight)


    @classmethod
    def generator(cls, basis, name, truncation_weight=None):
        """The element consisting of the single generator `name`."""
        return cls(basis, {((basis.index(name), 1),): Fraction(1)}, truncation_weight)


    @classmethod
    def from_monomial(cls, basis, monomial, coefficient=1, truncation_weight=None):
        return cls(basis, {tuple(monomial): Fraction(coefficient)}, truncation_weight)


    def _combined_weight(self, other):
        weights = [weight for weight in (self.truncation_weight, other.truncation_weight) if weight is not None]
        return min(weights) if weights else None


    def _check_basis(self, other):
        if self.basis != other.basis:
            message = mismatched_ambient_statement(self.basis, other.basis)
            log.error(message)
            raise TypeError(message)


    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.terms == ({(): Fraction(other)} if other else {})
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.basis == other.basis and self.terms == other.terms


    def __bool__(self):
        return bool(self.terms)


    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = AlgebraElement(self.basis, {(): Fraction(other)})
        self._check_basis(other)
        terms = dict(self.terms)
        add_to_vector(terms, other.terms)
        return AlgebraElement(self.basis, terms, self._combined_weight(other))


    __radd__ = __add__


    def __neg__(self):
        return AlgebraElement(self.basis, scale_vector(self.terms, -1), self.truncation_weight)


    def __sub__(self, other):
        return self + (-other)


    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return AlgebraElement(self.basis, scale_vector(self.terms, Fraction(other)), self.truncation_weight)
        return multiply(self, other)


    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return AlgebraElement(self.basis, scale_vector(self.terms, Fraction(other)), self.truncation_weight)
        return NotImplemented


    def __repr__(self):
        return f"AlgebraElement({self.render()})"


    def degree(self):
        """Returns the common degree of the terms.

        Returns:
            int: the degree when homogeneous and nonzero
            None: the element is zero or inhomogeneous
        """
        degrees = {monomial_degree(self.basis, monomial) for monomial in self.terms}
        if len(degrees) == 1:
            return degrees.pop()
        return None


    def weight(self):
        """Returns the largest weight among the terms, or `-1` for zero."""
        return max((monomial_weight(monomial) for monomial in self.terms), default=-1)


    def truncated(self, weight):
        """Returns a copy with every monomial of weight above `weight` dropped."""
        return AlgebraElement(self.basis, self.terms, weight if self.truncation_weight is None else min(weight, self.truncation_weight))


    def part_of_weight(self, weight):
        """Returns the homogeneous component of the given weight."""
        return AlgebraElement(self.basis, {monomial: coefficient for monomial, coefficient in self.terms.items() if monomial_weight(monomial) == weight}, self.truncation_weight)


    def render(self):
        """The canonical text form, ordered by weight and then lexicographically by generator indices."""
        if not self.terms:
            return "0"
        pieces = []
        for monomial in sorted(self.terms, key=monomial_sort_key):
            coefficient = self.terms[monomial]
            text = render_monomial(self.basis, monomial)
            if not monomial:
                pieces.append(format_rational(coefficient))
            elif coefficient == 1:
                pieces.append(text)
            elif coefficient == -1:
                pieces.append(f"-{text}")
            else:
                pieces.append(f"{format_rational(coefficient)}*{text}")
        return " + ".join(pieces).replace("+ -", "- ")


#Section: Operations
def normalize(basis, word, coeff=1, truncation_weight=None):
    """Sorts a word of generator indices into a canonical monomial, tracking the Koszul sign.

    The word is bubble sorted; every adjacent transposition of two generators contributes their Koszul sign, and a repeated odd generator makes the result zero.

    Args:
        basis (GradedBasis): the ambient basis
        word (list): generator indices or names in product order
        coeff (Fraction or int, optional): the coefficient of the word; default is `1`
        truncation_weight (int, optional): the truncation weight of the result; default is `None`

    Returns:
        AlgebraElement: the normalized term

    Raises:
        ValueError: a generator isn't in the basis
    """
    indices = []
    for letter in word:
        if isinstance(letter, str):
            indices.append(basis.index(letter))
        elif 0 <= letter < len(basis):
            indices.append(letter)
        else:
            message = unknown_generator_statement(letter, basis.label)
            log.error(message)
            raise ValueError(message)
    sign = 1
    for sweep in range(len(indices)):
        for position in range(len(indices) - 1 - sweep):
            left, right = indices[position], indices[position+1]
            if left > right:
                sign *= koszul_sign(basis.degrees[left], basis.degrees[right])
                indices[position], indices[position+1] = right, left
    exponents = {}
    for index in indices:
        exponents[index] = exponents.get(index, 0) + 1
        if basis.is_odd(index) and exponents[index] > 1:
            return AlgebraElement.zero(basis, truncation_weight)
    return AlgebraElement(basis, {tuple(sorted(exponents.items())): Fraction(coeff) * sign}, truncation_weight)


def multiply(a, b):
    """Multiplies two algebra elements.

    Args:
        a (AlgebraElement): the left factor
        b (AlgebraElement): the right factor

    Returns:
        AlgebraElement: the product, truncated at the smaller truncation weight when either is set

    Raises:
        TypeError: the operands have different bases
    """
    a._check_basis(b)
    truncation_weight = a._combined_weight(b)
    terms = {}
    for first, first_coefficient in a.terms.items():
        for second, second_coefficient in b.terms.items():
            if truncation_weight is not None and monomial_weight(first) + monomial_weight(second) > truncation_weight:
                continue
            monomial, sign = multiply_monomials(a.basis, first, second)
            if sign:
                add_to_vector(terms, {monomial: first_coefficient * second_coefficient}, sign)
    return AlgebraElement(a.basis, terms, truncation_weight)


class AlgebraDerivation:
    """A homogeneous graded derivation of the free graded-commutative algebra, given by its values on generators.

    Attributes:
        self.basis (GradedBasis): the ambient basis
        self.degree (int): the degree of the derivation
        self.values (dict): generator index to `AlgebraElement`; missing generators map to zero
    """
    def __init__(self, basis, degree, values):
        """The constructor method for `AlgebraDerivation`, which checks the degree of every value.

        Args:
            basis (GradedBasis): the ambient basis
            degree (int): the degree of the derivation
            values (dict): generator index or name to `AlgebraElement`

        Raises:
            ValueError: a value isn't homogeneous of the right degree
        """
        self.basis = basis
        self.degree = int(degree)
        self.values = {}
        for generator, value in values.items():
            index = basis.index(generator) if isinstance(generator, str) else generator
            if not value:
                continue
            expected = basis.degrees[index] + self.degree
            if value.degree() != expected:
                message = inhomogeneous_value_statement(basis.names[index], expected, value.degree())
                log.error(message)
                raise ValueError(message)
            self.values[index] = value


    def __call__(self, element):
        return apply_derivation(self, element)


    def value(self, index):
        """The value on a generator, zero when unspecified."""
        return self.values.get(index, AlgebraElement.zero(self.basis))


def apply_derivation(D, a):
    """Applies a derivation by the graded Leibniz rule.

    The derivation passes each prefix of the expanded word of a monomial, picking up `(-1)**(|D|·|prefix|)` before it acts on the next letter.

    Args:
        D (AlgebraDerivation): the derivation
        a (AlgebraElement): the element

    Returns:
        AlgebraElement: `D(a)`, with `a`'s truncation weight
    """
    result = AlgebraElement.zero(a.basis, a.truncation_weight)
    for monomial, coefficient in a.terms.items():
        word = monomial_word(monomial)
        for position, letter in enumerate(word):
            value = D.value(letter)
            if not value:
                continue
            prefix = normalize(a.basis, word[:position])
            suffix = normalize(a.basis, word[position+1:])
            sign = koszul_sign(D.degree, sum(a.basis.degrees[previous] for previous in word[:position]))
            result = result + multiply(multiply(prefix, value), suffix) * (coefficient * sign)
    return result


def commutator(D1, D2):
    """Returns the graded commutator `D1∘D2 − (−1)^{|D1||D2|} D2∘D1`, evaluated on generators.

    Args:
        D1 (AlgebraDerivation): the first derivation
        D2 (AlgebraDerivation): the second derivation

    Returns:
        AlgebraDerivation: the commutator, of degree `|D1| + |D2|`
    """
    if D1.basis != D2.basis:
        message = mismatched_ambient_statement(D1.basis, D2.basis)
        log.error(message)
        raise TypeError(message)
    values = {}
    for index in range(len(D1.basis)):
        value = apply_derivation(D1, D2.value(index)) - apply_derivation(D2, D1.value(index)) * koszul_sign(D1.degree, D2.degree)
        if value:
            values[index] = value
    return AlgebraDerivation(D1.basis, D1.degree + D2.degree, values)
