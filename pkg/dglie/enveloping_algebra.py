import logging
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from sympy import Matrix, Rational

from .app import *
from .statements import *
from .grading import *
from .graded_commutative_algebra import monomials_of_weight
from .reports import VerificationReport

log = logging.getLogger(__name__)


class EnvelopingAlgebra:
    """The universal enveloping algebra of a graded Lie algebra, with PBW normal forms in the basis order.

    A PBW monomial is a non-decreasing tuple of generator indices in which odd generators appear at most once. Normal forms are memoized per word in a per-algebra `lru_cache` holding at most `CACHE_SIZE` words.

    Attributes:
        self.spec (DGLASpec): the Lie algebra
        self.basis (GradedBasis): the basis of the Lie algebra

    Methods:
        normal_form: The PBW normal form of a word as a dict.
        is_pbw_monomial: Reports whether a word is already in normal form.
        monomials: Lists the PBW monomials up to a weight.
        word_degree: The degree of a word.
    """
    def __init__(self, spec):
        self.spec = spec
        self.basis = spec.basis
        self._normal_forms = lru_cache(maxsize=CACHE_SIZE)(self._rewrite)


    def __repr__(self):
        return f"EnvelopingAlgebra({self.spec.name})"


    def __eq__(self, other):
        if not isinstance(other, EnvelopingAlgebra):
            return NotImplemented
        return self.spec == other.spec


    def __hash__(self):
        return hash(self.basis)


    def word_degree(self, word):
        return sum(self.basis.degrees[letter] for letter in word)


    def is_pbw_monomial(self, word):
        for left, right in zip(word, word[1:]):
            if left > right or (left == right and self.basis.is_odd(left)):
                return False
        return True


    def normal_form(self, word):
        """Rewrites a word into PBW normal form.

        The leftmost adjacent inversion `xy` with `x > y` is replaced by `(−1)^{|x||y|} yx + [x,y]`, and a repeated odd letter `xx` by `½[x,x]`; both steps either remove an inversion or shorten the word, so the rewriting terminates.

        Args:
            word (tuple): generator indices in product order

        Returns:
            dict: PBW monomial to nonzero `Fraction`
        """
        return self._normal_forms(tuple(word))


    def _rewrite(self, word):
        position = None
        for candidate, (left, right) in enumerate(zip(word, word[1:])):
            if left > right or (left == right and self.basis.is_odd(left)):
                position = candidate
                break
        if position is None:
            result = {word: Fraction(1)}
        else:
            left, right = word[position], word[position+1]
            prefix, suffix = word[:position], word[position+2:]
            result = {}
            if left > right:
                add_to_vector(result, self.normal_form(prefix + (right, left) + suffix), koszul_sign(self.basis.degrees[left], self.basis.degrees[right]))
                for letter, coefficient in self.spec.bracket_of_basis(left, right).items():
                    add_to_vector(result, self.normal_form(prefix + (letter,) + suffix), coefficient)
            else:
                for letter, coefficient in self.spec.bracket_of_basis(left, left).items():
                    add_to_vector(result, self.normal_form(prefix + (letter,) + suffix), coefficient / 2)
        return result


    def monomials(self, max_weight, min_weight=0):
        """Lists the PBW monomials with weight in `[min_weight, max_weight]`, ordered by weight and then lexicographically."""
        result = []
        for weight in range(min_weight, max_weight + 1):
            for word in combinations_with_replacement(range(len(self.basis)), weight):
                if self.is_pbw_monomial(word):
                    result.append(word)
        return result


class UEAElement:
    """A sparse exact-rational combination of PBW monomials.

    Attributes:
        self.algebra (EnvelopingAlgebra): the ambient enveloping algebra
        self.terms (dict): PBW monomial to nonzero `Fraction`
        self.truncation_weight (int or None): monomials longer than this are dropped when set
    """
    def __init__(self, algebra, terms=None, truncation_weight=None):
        self.algebra = algebra
        self.truncation_weight = truncation_weight
        self.terms = {}
        for monomial, coefficient in (terms or {}).items():
            if coefficient and (truncation_weight is None or len(monomial) <= truncation_weight):
                self.terms[tuple(monomial)] = Fraction(coefficient)


    @classmethod
    def from_word(cls, algebra, word, coeff=1, truncation_weight=None):
        """The normal form of `coeff` times a word given by generator indices or names."""
        indices = tuple(algebra.basis.index(letter) if isinstance(letter, str) else letter for letter in word)
        return cls(algebra, scale_vector(algebra.normal_form(indices), Fraction(coeff)), truncation_weight)


    def _check_algebra(self, other):
        if self.algebra != other.algebra:
            message = mismatched_ambient_statement(self.algebra, other.algebra)
            log.error(message)
            raise TypeError(message)


    def _combined_weight(self, other):
        weights = [weight for weight in (self.truncation_weight, other.truncation_weight) if weight is not None]
        return min(weights) if weights else None


    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.terms == ({(): Fraction(other)} if other else {})
        if not isinstance(other, UEAElement):
            return NotImplemented
        return self.algebra == other.algebra and self.terms == other.terms


    def __add__(self, other):
        self._check_algebra(other)
        terms = dict(self.terms)
        add_to_vector(terms, other.terms)
        return UEAElement(self.algebra, terms, self._combined_weight(other))


    def __neg__(self):
        return UEAElement(self.algebra, scale_vector(self.terms, -1), self.truncation_weight)


    def __sub__(self, other):
        return self + (-other)


    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UEAElement(self.algebra, scale_vector(self.terms, Fraction(other)), self.truncation_weight)
        return uea_multiply(self, other)


    def __repr__(self):
        return f"UEAElement({self.render()})"


    def render(self):
        """The canonical text form, ordered by weight and then lexicographically."""
        if not self.terms:
            return "0"
        pieces = []
        for monomial in sorted(self.terms, key=lambda word: (len(word), word)):
            coefficient = self.terms[monomial]
            text = "*".join(self.algebra.basis.names[letter] for letter in monomial) or "1"
            if coefficient == 1:
                pieces.append(text)
            elif coefficient == -1:
                pieces.append(f"-{text}")
            else:
                pieces.append(f"{format_rational(coefficient)}*{text}")
        return " + ".join(pieces).replace("+ -", "- ")


#Section: Algebra and Hopf Structure
def pbw_normal_form(algebra, word, coeff=1):
    """Returns the PBW normal form of a word.

    Args:
        algebra (EnvelopingAlgebra): the enveloping algebra
        word (list): generator indices or names in product order
        coeff (Fraction or int, optional): the coefficient of the word; default is `1`

    Returns:
        UEAElement: the normal form
    """
    return UEAElement.from_word(algebra, word, coeff)


def uea_multiply(a, b):
    """Multiplies two elements by concatenating monomials and normalizing.

    Args:
        a (UEAElement): the left factor
        b (UEAElement): the right factor

    Returns:
        UEAElement: the product, truncated at the smaller truncation weight when either is set

    Raises:
        TypeError: the operands have different ambient algebras
    """
    a._check_algebra(b)
    terms = {}
    for first, first_coefficient in a.terms.items():
        for second, second_coefficient in b.terms.items():
            add_to_vector(terms, a.algebra.normal_form(first + second), first_coefficient * second_coefficient)
    return UEAElement(a.algebra, terms, a._combined_weight(b))


def monomial_coproduct(algebra, monomial):
    """The coproduct of a PBW monomial: the sum over splittings into two subsequences with their shuffle signs.

    Args:
        algebra (EnvelopingAlgebra): the enveloping algebra
        monomial (tuple): a PBW monomial

    Returns:
        dict: `(left monomial, right monomial)` to `Fraction`
    """
    degrees = [algebra.basis.degrees[letter] for letter in monomial]
    result = {}
    for size in range(len(monomial) + 1):
        for chosen in combinations(range(len(monomial)), size):
            rest = tuple(position for position in range(len(monomial)) if position not in chosen)
            sign = permutation_sign(degrees, list(chosen) + list(rest))
            key = (tuple(monomial[position] for position in chosen), tuple(monomial[position] for position in rest))
            add_to_vector(result, {key: Fraction(sign)})
    return result


def uea_coproduct(u):
    """Applies the coproduct, the algebra morphism extending `Δ(x) = x⊗1 + 1⊗x`.

    Args:
        u (UEAElement): the element

    Returns:
        dict: `(left monomial, right monomial)` to `Fraction`
    """
    result = {}
    for monomial, coefficient in u.terms.items():
        add_to_vector(result, monomial_coproduct(u.algebra, monomial), coefficient)
    return result


def uea_counit(u):
    """Returns the coefficient of the empty monomial."""
    return u.terms.get((), Fraction(0))


def monomial_antipode(algebra, monomial):
    """The antipode of a PBW monomial: `(−1)^k` times the Koszul-signed reversal, normalized."""
    degrees = [algebra.basis.degrees[letter] for letter in monomial]
    order = list(range(len(monomial)))[::-1]
    sign = sign_of_power(len(monomial)) * permutation_sign(degrees, order)
    return scale_vector(algebra.normal_form(tuple(monomial[position] for position in order)), sign)


def uea_antipode(u):
    """Applies the antipode, the anti-automorphism extending `S(x) = −x`.

    Args:
        u (UEAElement): the element

    Returns:
        UEAElement: `S(u)`
    """
    terms = {}
    for monomial, coefficient in u.terms.items():
        add_to_vector(terms, monomial_antipode(u.algebra, monomial), coefficient)
    return UEAElement(u.algebra, terms, u.truncation_weight)


def convolve(a, b, coproduct, multiply, degree, b_degree=0):
    """Returns the convolution `μ_A ∘ (a⊗b) ∘ Δ_C` of two maps from a coalgebra to an algebra.

    When `b` passes the first tensor factor of the coproduct it picks up `(−1)^{|b||c'|}`.

    Args:
        a (callable): basis key of `C` to an element of `A` (a dict)
        b (callable): basis key of `C` to an element of `A` (a dict)
        coproduct (callable): basis key of `C` to a dict of `(key, key)` pairs and coefficients
        multiply (callable): two elements of `A` to their product
        degree (callable): the degree of a basis key of `C`
        b_degree (int, optional): the degree of `b`; default is `0`

    Returns:
        callable: the convolution, as a map from basis keys of `C` to elements of `A`
    """
    def convolution(key):
        result = {}
        for (left, right), coefficient in coproduct(key).items():
            sign = koszul_sign(b_degree, degree(left))
            first = a(left)
            if not first:
                continue
            add_to_vector(result, multiply(first, b(right)), coefficient * sign)
        return result
    return convolution


def pbw_dimension_report(algebra, max_weight):
    """Compares the filtered dimensions of the enveloping algebra, computed from its defining relations alone, with the monomial counts of the free graded-commutative algebra.

    For each `w`, the words of length at most `w` are quotiented by every relation `a (xy − (−1)^{|x||y|} yx − [x,y]) b` that fits in length `w`; no normal form is used, so a bracket that breaks the Jacobi identity shows up as a relation that collapses a lower filtration level. The dimension gained at weight `w` must equal the number of graded-commutative monomials of weight exactly `w`.

    Args:
        algebra (EnvelopingAlgebra): the enveloping algebra
        max_weight (int): the largest weight compared

    Returns:
        VerificationReport: one `pbw_dimension_w` row per weight
    """
    log.info(f"Starting `pbw_dimension_report()` for {algebra.spec.name} up to weight {max_weight}.")
    report = VerificationReport(f"pbw_dimension_report({algebra.spec.name})")
    n = len(algebra.basis)
    previous_dimension = 0
    for weight in range(max_weight + 1):
        words = [word for length in range(weight + 1) for word in _all_words(n, length)]
        column = {word: index for index, word in enumerate(words)}
        rows = []
        for word in words:
            for position in range(len(word) - 1):
                left, right = word[position], word[position+1]
                prefix, suffix = word[:position], word[position+2:]
                row = {}
                add_to_vector(row, {word: Fraction(1)})
                add_to_vector(row, {prefix + (right, left) + suffix: Fraction(-koszul_sign(algebra.basis.degrees[left], algebra.basis.degrees[right]))})
                for letter, coefficient in algebra.spec.bracket_of_basis(left, right).items():
                    add_to_vector(row, {prefix + (letter,) + suffix: -coefficient})
                if row:
                    dense = [0] * len(words)
                    for key, coefficient in row.items():
                        dense[column[key]] = Rational(coefficient.numerator, coefficient.denominator)
                    rows.append(dense)
        rank = Matrix(rows).rank() if rows else 0
        dimension = len(words) - rank
        gained = dimension - previous_dimension
        expected = len(monomials_of_weight(algebra.basis, weight))
        report.add(f"pbw_dimension_{weight}", gained == expected, f"dimension {gained} vs {expected} monomials")
        previous_dimension = dimension
    return report


def _all_words(n, length):
    if length == 0:
        yield ()
        return
    for word in _all_words(n, length - 1):
        for letter in range(n):
            yield word + (letter,)
