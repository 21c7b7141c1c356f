"""Polynomial models of unipotent groups: the Dynkin form of the Baker-Campbell-Hausdorff series, right-invariant vector fields, group cochains, and the van Est maps for degree-zero Lie algebras.

Group elements are written in exponential coordinates, so a point is a vector whose entries are polynomials over sympy's `QQ`. The ring carries a formal parameter `t` and three copies of the coordinates, one per argument of a 2-cochain's coboundary; the copy for argument `p` has symbols named `{generator}_{p}`.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from itertools import islice, product
from math import factorial
import pandas as pd
from sympy import Matrix, Rational, Symbol, QQ
from sympy.polys.rings import PolyElement, PolyRing

from .app import *
from .statements import *
from .grading import *
from .dgla import DGLASpec, derivation_check
from .reports import VerificationReport

log = logging.getLogger(__name__)

WITNESS_GRID = (-1, 0, 1, 2)
MAXIMUM_WITNESS_CANDIDATES = 4096


#Section: Dynkin Coefficients
def _dynkin_word_coefficient(word):
    """Sums the Dynkin weights of every splitting of `word` into blocks of the form `X^r Y^s` with `r + s > 0`.

    Args:
        word (str): a word over the letters `X` and `Y`

    Returns:
        Fraction: the coefficient of the right-nested bracket of `word`
    """
    order = len(word)
    # partial[position] maps a block count to the summed `1/Π r!s!` over splittings of `word[:position]`
    partial = [dict() for _ in range(order + 1)]
    partial[0][0] = Fraction(1)
    for start in range(order):
        if not partial[start]:
            continue
        for end in range(start + 1, order + 1):
            block = word[start:end]
            if "YX" in block:
                break
            r = block.count("X")
            weight = Fraction(1, factorial(r) * factorial(len(block) - r))
            for blocks, total in partial[start].items():
                partial[end][blocks + 1] = partial[end].get(blocks + 1, Fraction(0)) + total * weight
    coefficient = Fraction(0)
    for blocks, total in partial[order].items():
        coefficient += Fraction(sign_of_power(blocks - 1), blocks * order) * total
    return coefficient


@lru_cache(maxsize=None)
def dynkin_coefficient_table(max_order=MAXIMUM_NILPOTENCY_CLASS):
    """Tabulates the nonzero Dynkin coefficients of `log(exp X exp Y)` up to a bracket order.

    The series is `Σ_word c(word) [w_1,[w_2,[…,w_m]]]` with right-nested brackets; the table is computed once per order and shared read-only afterwards.

    Args:
        max_order (int, optional): the longest word; default is `MAXIMUM_NILPOTENCY_CLASS`

    Returns:
        dataframe: the columns `order`, `word`, and `coefficient`, with `coefficient` holding `Fraction` objects
    """
    log.info(f"Starting `dynkin_coefficient_table()` up to order {max_order}.")
    records = []
    for order in range(1, max_order + 1):
        for letters in product("XY", repeat=order):
            word = "".join(letters)
            coefficient = _dynkin_word_coefficient(word)
            if coefficient:
                records.append({'order': order, 'word': word, 'coefficient': coefficient})
    df = pd.DataFrame(records, columns=['order', 'word', 'coefficient'])
    df = df.astype({'order': 'int64', 'word': 'string'})
    log.debug(f"The Dynkin coefficient table:\n{return_string_of_dataframe_info(df)}")
    return df


#Section: Polynomial Vectors
def add_polynomial_vector(target, vector, scale=None):
    """Adds `scale * vector` into `target` in place for vectors with polynomial entries.

    Args:
        target (dict): index to polynomial; modified in place
        vector (dict): index to polynomial
        scale (polynomial or QQ element, optional): a multiplier applied on the right; default is `None`

    Returns:
        dict: `target`
    """
    for index, entry in vector.items():
        if scale is not None:
            entry = entry * scale
        value = target.get(index, 0) + entry
        if value:
            target[index] = value
        else:
            target.pop(index, None)
    return target


def scale_polynomial_vector(vector, scale):
    return add_polynomial_vector({}, vector, scale)


class PolynomialBracket:
    """The bracket of a Lie algebra extended to vectors whose entries lie in a polynomial ring.

    The structure constants are converted to `QQ` once so they multiply ring elements directly.

    Attributes:
        self.spec (DGLASpec): the algebra
        self.table (dict): `(i, j)` over all ordered basis pairs with a nonzero bracket to `{k: QQ}`
    """
    def __init__(self, spec):
        self.spec = spec
        self.table = {}
        for i, j in product(range(len(spec.basis)), repeat=2):
            value = spec.bracket_of_basis(i, j)
            if value:
                self.table[(i, j)] = {k: to_domain_rational(coefficient) for k, coefficient in value.items()}


    def __call__(self, u, v):
        result = {}
        for i, first in u.items():
            for j, second in v.items():
                value = self.table.get((i, j))
                if value:
                    add_polynomial_vector(result, value, first * second)
        return result


def exponential_series(operator, vector, max_terms):
    """Sums `Σ_k A^k v / k!` for an operator that is nilpotent on `vector`.

    Args:
        operator (callable): a vector to a vector
        vector (dict): the starting vector
        max_terms (int): the number of powers allowed before the series must have stopped

    Returns:
        tuple: the sum, and a bool for whether the powers vanished within `max_terms`
    """
    total = dict(vector)
    term = dict(vector)
    for k in range(1, max_terms + 1):
        term = operator(term)
        if not term:
            return total, True
        add_polynomial_vector(total, term, QQ(1, factorial(k)))
    return total, not operator(term)


def _rational_to_fraction(value):
    return Fraction(int(value.p), int(value.q))


def lower_central_series_class(spec, max_class=MAXIMUM_NILPOTENCY_CLASS):
    """Computes the nilpotency class of a Lie algebra from the ranks of its lower central series.

    The class is the least `c >= 1` with `g^{c+1} = 0`, so abelian and zero algebras have class one.

    Args:
        spec (DGLASpec): the algebra
        max_class (int, optional): the largest accepted class; default is `MAXIMUM_NILPOTENCY_CLASS`

    Returns:
        int: the class

    Raises:
        ValueError: the series stabilizes away from zero, or the class exceeds `max_class`
    """
    n = len(spec.basis)
    span = [{index: Fraction(1)} for index in range(n)]
    dimension = n
    found = None
    k = 1
    while True:
        brackets = [spec.bracket({i: Fraction(1)}, vector) for i in range(n) for vector in span]
        rows = [[Rational(vector[index].numerator, vector[index].denominator) if index in vector else 0 for index in range(n)] for vector in brackets if vector]
        basis_rows = Matrix(rows).rowspace() if rows else []
        if not basis_rows:
            found = k
            break
        if len(basis_rows) == dimension:
            break
        span = [{index: _rational_to_fraction(entry) for index, entry in enumerate(row) if entry != 0} for row in basis_rows]
        dimension = len(basis_rows)
        k += 1
    if found is None or found > max_class:
        message = nilpotency_class_statement(found, max_class)
        log.error(message)
        raise ValueError(message)
    return found


#Section: Polynomial Group Model
class NilpotentGroupModel:
    """The unipotent group of a nilpotent Lie algebra in exponential coordinates, with its product given by the truncated Dynkin series.

    Attributes:
        self.spec (DGLASpec): the Lie algebra, concentrated in degree zero
        self.basis (GradedBasis): the basis of the Lie algebra
        self.nilpotency_class (int): the computed class
        self.ring (PolyRing): the polynomial ring over `QQ` in `t` and three copies of the coordinates
        self.t (PolyElement): the formal parameter
        self.bracket (PolynomialBracket): the bracket on polynomial vectors

    Methods:
        point: The generic point of one coordinate copy.
        bch: The group product of two points.
        inverse: The inverse of a point.
        ad_exp: The matrix of `Ad_{exp X}`.
        right_invariant_vf: The vector field `X^R` of a generator.
        apply_vector_field: Applies a vector field to a polynomial in the first coordinate copy.
        substitute: Substitutes points for coordinate copies.
        evaluate: Evaluates a polynomial at rational values.
        linear_part: The matrix of terms linear in the first coordinate copy.
    """
    POINTS = 3

    def __init__(self, spec, max_class=MAXIMUM_NILPOTENCY_CLASS):
        """The constructor method for `NilpotentGroupModel`, which computes the nilpotency class and builds the coordinate ring.

        Args:
            spec (DGLASpec): a Lie algebra concentrated in degree zero
            max_class (int, optional): the largest accepted class; default is `MAXIMUM_NILPOTENCY_CLASS`

        Raises:
            ValueError: the algebra has a generator of nonzero degree, isn't nilpotent within `max_class`, or declares a different class
        """
        log.info(f"Starting `NilpotentGroupModel()` for {spec.name}.")
        if any(spec.basis.degrees):
            message = ungraded_required_statement("NilpotentGroupModel")
            log.error(message)
            raise ValueError(message)
        self.spec = spec
        self.basis = spec.basis
        self.dimension = len(spec.basis)
        self.nilpotency_class = lower_central_series_class(spec, max_class)
        if spec.nilpotency_class is not None and spec.nilpotency_class != self.nilpotency_class:
            message = declared_class_mismatch_statement(spec.nilpotency_class, self.nilpotency_class)
            log.error(message)
            raise ValueError(message)
        symbols = [Symbol('t')] + [Symbol(f"{name}_{p}") for p in range(1, self.POINTS + 1) for name in spec.basis.names]
        self.ring = PolyRing(symbols, QQ)
        self.t = self.ring.gens[0]
        self.bracket = PolynomialBracket(spec)
        self._words = {}
        self._vector_fields = {}
        log.info(construction_complete_statement(f"the group model of {spec.name}", f"class {self.nilpotency_class} and dimension {self.dimension}"))


    def __repr__(self):
        return f"NilpotentGroupModel({self.spec.name}, class {self.nilpotency_class})"


    def position(self, point, index):
        """The position in `self.ring.gens` of coordinate `index` in copy `point`."""
        return 1 + (point - 1) * self.dimension + index


    def coordinate(self, point, index):
        return self.ring.gens[self.position(point, index)]


    def point(self, point):
        """The generic point `Σ_j x_j@point e_j`."""
        return {index: self.coordinate(point, index) for index in range(self.dimension)}


    def constant_vector(self, vector):
        """Converts a vector of `Fraction` entries into a vector of constant polynomials."""
        return {index: self.ring.ground_new(to_domain_rational(coefficient)) for index, coefficient in vector.items() if coefficient}


    def bch(self, X, Y):
        """Returns `log(exp X exp Y)` for two polynomial vectors, summing the Dynkin series up to the nilpotency class.

        Args:
            X (dict): the left point
            Y (dict): the right point

        Returns:
            dict: the product point
        """
        nested = {}
        letters = {"X": X, "Y": Y}
        def nested_bracket(word):
            if word in nested:
                return nested[word]
            if len(word) == 1:
                value = dict(letters[word])
            else:
                value = self.bracket(letters[word[0]], nested_bracket(word[1:]))
            nested[word] = value
            return value

        table = dynkin_coefficient_table(MAXIMUM_NILPOTENCY_CLASS)
        result = {}
        for record in table[table['order'] <= self.nilpotency_class].itertuples(index=False):
            value = nested_bracket(record.word)
            if value:
                add_polynomial_vector(result, value, to_domain_rational(record.coefficient))
        return result


    def inverse(self, X):
        return scale_polynomial_vector(X, QQ(-1))


    def ad_exp(self, X, on=None):
        """Returns the matrix of `exp(ad_X)` acting on the algebra or on another algebra containing it.

        Args:
            X (dict): a polynomial vector, indexed in the basis of the algebra acted on
            on (PolynomialBracket, optional): the bracket of a larger algebra containing this one; default is `None`

        Returns:
            dict: column index to the polynomial vector `exp(ad_X) e_index`
        """
        bracket = on or self.bracket
        size = len(bracket.spec.basis)
        operator = lambda vector: bracket(X, vector)
        columns = {}
        for index in range(size):
            column, _ = exponential_series(operator, {index: self.ring.one}, size)
            columns[index] = column
        return columns


    def right_invariant_vf(self, index):
        """Returns `X^R` for a generator as a vector field on the first coordinate copy.

        The field is `d/dt bch(t e_index, g)` at `t = 0`, written as coefficient polynomials against `∂/∂x_k`.

        Args:
            index (int): the generator

        Returns:
            dict: coordinate index to polynomial
        """
        if index not in self._vector_fields:
            moved = self.bch({index: self.t}, self.point(1))
            self._vector_fields[index] = {k: value for k, value in ((k, self.coefficient_of(entry, 0, 1)) for k, entry in moved.items()) if value}
        return self._vector_fields[index]


    def apply_vector_field(self, field, polynomial):
        """Applies `Σ_k field_k ∂/∂x_k@1` to a polynomial."""
        result = self.ring.zero
        for k, coefficient in field.items():
            result += coefficient * polynomial.diff(self.coordinate(1, k))
        return result


    def coefficient_of(self, polynomial, position, power):
        """Returns the coefficient of `gens[position]^power` in a polynomial, as a polynomial in the other generators."""
        terms = {}
        for monomial, coefficient in polynomial.items():
            if monomial[position] == power:
                reduced = monomial[:position] + (0,) + monomial[position+1:]
                terms[reduced] = coefficient
        return self.ring.from_dict(terms) if terms else self.ring.zero


    def substitute(self, polynomial, assignments):
        """Substitutes polynomial points for coordinate copies, simultaneously.

        Args:
            polynomial (PolyElement or dict): a polynomial or a polynomial vector
            assignments (dict): copy number to a polynomial point

        Returns:
            PolyElement or dict: the result, of the same kind as `polynomial`
        """
        replacements = []
        for point, vector in assignments.items():
            for index in range(self.dimension):
                replacements.append((self.coordinate(point, index), vector.get(index, self.ring.zero)))
        if isinstance(polynomial, PolyElement):
            return polynomial.compose(replacements)
        result = {}
        for index, entry in polynomial.items():
            value = entry.compose(list(replacements))
            if value:
                result[index] = value
        return result


    def evaluate(self, polynomial, values):
        """Evaluates a polynomial exactly.

        Args:
            polynomial (PolyElement): the polynomial
            values (dict): generator position to `Fraction`; missing positions are zero

        Returns:
            Fraction: the value
        """
        total = Fraction(0)
        for monomial, coefficient in polynomial.items():
            term = from_domain_rational(coefficient)
            for position, exponent in enumerate(monomial):
                if exponent:
                    term *= Fraction(values.get(position, 0)) ** exponent
                    if not term:
                        break
            total += term
        return total


    def at_identity(self, vector):
        """Evaluates a polynomial vector with every coordinate set to zero."""
        return {index: value for index, value in ((index, self.evaluate(entry, {})) for index, entry in vector.items()) if value}


    def linear_part(self, vector, point=1):
        """Returns the terms of a polynomial vector linear in one coordinate copy and free of all others.

        Args:
            vector (dict): the polynomial vector
            point (int, optional): the coordinate copy; default is `1`

        Returns:
            dict: coordinate index `j` to the `Fraction` vector of coefficients of `x_j@point`
        """
        matrix = {}
        for k, entry in vector.items():
            for monomial, coefficient in entry.items():
                if sum(monomial) != 1:
                    continue
                position = monomial.index(1)
                if position == 0:
                    continue
                copy, index = divmod(position - 1, self.dimension)
                if copy + 1 == point:
                    matrix.setdefault(index, {})[k] = from_domain_rational(coefficient)
        return matrix


def apply_polynomial_matrix(matrix, vector):
    """Applies a matrix given by polynomial columns to a polynomial vector."""
    result = {}
    for index, entry in vector.items():
        add_polynomial_vector(result, matrix.get(index, {}), entry)
    return result


def compose_polynomial_matrices(first, second):
    """Returns the matrix of `first ∘ second`."""
    return {index: apply_polynomial_matrix(first, column) for index, column in second.items()}


def vector_field_commutator(model, first, second):
    """Returns the commutator `[V, W]` of two vector fields on the first coordinate copy."""
    result = {}
    for k in range(model.dimension):
        value = model.apply_vector_field(first, second.get(k, model.ring.zero)) - model.apply_vector_field(second, first.get(k, model.ring.zero))
        if value:
            result[k] = value
    return result


def render_polynomial_vector(basis, vector):
    """Renders a polynomial vector as `name:(polynomial)` pieces in basis order."""
    if not vector:
        return "0"
    return ", ".join(f"{basis.names[index]}:({vector[index]})" for index in sorted(vector))


def polynomial_witness(model, residual, basis=None):
    """Searches a small integer grid for a point where a nonzero polynomial vector doesn't vanish.

    Args:
        model (NilpotentGroupModel): the model owning the ring
        residual (dict): a nonzero polynomial vector
        basis (GradedBasis, optional): the basis of the value space; default is the model's basis

    Returns:
        str: the point and the value found there, or the residual itself when the grid misses
    """
    basis = basis or model.basis
    positions = sorted({position for entry in residual.values() for monomial in entry for position, exponent in enumerate(monomial) if exponent})
    for values in islice(product(WITNESS_GRID, repeat=len(positions)), MAXIMUM_WITNESS_CANDIDATES):
        assignment = dict(zip(positions, values))
        value = {index: model.evaluate(entry, assignment) for index, entry in residual.items()}
        value = {index: entry for index, entry in value.items() if entry}
        if value:
            coordinates = ", ".join(f"{model.ring.symbols[position]}={assignment[position]}" for position in positions)
            return f"point ({coordinates}) residual {render_vector(basis, value)}"
    return f"residual {render_polynomial_vector(basis, residual)}"


#Section: Group Cochains
class GroupCochain:
    """A polynomial map from `n` copies of the group to a module, stored as a polynomial vector in the first `n` coordinate copies.

    Attributes:
        self.model (NilpotentGroupModel): the group
        self.n (int): the number of arguments
        self.values (dict): module index to polynomial
        self.module (GradedBasis): the basis of the value space
        self.name (str): a label
    """
    def __init__(self, model, n, values, module=None, name=None):
        if n < 0 or n > MAXIMUM_GROUP_COCHAIN_DEGREE:
            message = degree_out_of_range_statement("group cochain degree", n, MAXIMUM_GROUP_COCHAIN_DEGREE)
            log.error(message)
            raise ValueError(message)
        self.model = model
        self.n = n
        self.values = {index: value for index, value in values.items() if value}
        self.module = module or model.basis
        self.name = name or f"{n}-cochain"


    def __repr__(self):
        return f"GroupCochain({self.name}: {render_polynomial_vector(self.module, self.values)})"


    def __eq__(self, other):
        if not isinstance(other, GroupCochain):
            return NotImplemented
        return self.n == other.n and self.values == other.values


def group_coboundary(cochain, action=None):
    """Applies the group coboundary to a cochain of degree at most two.

    The result at `(g_1, …, g_{n+1})` is `g_1·c(g_2, …) + Σ_i (−1)^i c(…, g_i g_{i+1}, …) + (−1)^{n+1} c(g_1, …, g_n)`.

    Args:
        cochain (GroupCochain): the cochain
        action (callable, optional): a group point and a value vector to the acted-on vector; default is the adjoint action

    Returns:
        GroupCochain: the `n+1`-cochain

    Raises:
        ValueError: the result would exceed `MAXIMUM_GROUP_COCHAIN_DEGREE`
    """
    model = cochain.model
    n = cochain.n
    if n + 1 > MAXIMUM_GROUP_COCHAIN_DEGREE:
        message = degree_out_of_range_statement("group cochain degree", n + 1, MAXIMUM_GROUP_COCHAIN_DEGREE)
        log.error(message)
        raise ValueError(message)
    if action is None:
        action = lambda g, vector: apply_polynomial_matrix(model.ad_exp(g), vector)
    points = {p: model.point(p) for p in range(1, n + 2)}

    shifted = model.substitute(cochain.values, {slot: points[slot + 1] for slot in range(1, n + 1)})
    result = action(points[1], shifted)
    for i in range(1, n + 1):
        assignments = {}
        for slot in range(1, n + 1):
            if slot < i:
                assignments[slot] = points[slot]
            elif slot == i:
                assignments[slot] = model.bch(points[i], points[i + 1])
            else:
                assignments[slot] = points[slot + 1]
        add_polynomial_vector(result, model.substitute(cochain.values, assignments), QQ(sign_of_power(i)))
    add_polynomial_vector(result, cochain.values, QQ(sign_of_power(n + 1)))
    return GroupCochain(model, n + 1, result, cochain.module, name=f"d({cochain.name})")


def van_est_integrate(model, delta):
    """Integrates a derivation of the Lie algebra to a group 1-cocycle with values in the adjoint module.

    The cocycle is `ξ(exp W) = Σ_{k<c} ad_W^k(δW)/(k+1)!`, where `c` is the nilpotency class.

    Args:
        model (NilpotentGroupModel): the group
        delta (GradedLinearMap): a degree-zero derivation

    Returns:
        GroupCochain: the 1-cocycle

    Raises:
        ValueError: `delta` isn't a derivation
    """
    log.info(f"Starting `van_est_integrate()` on {model.spec.name}.")
    report = derivation_check(model.spec, delta)
    if not report.passed():
        message = not_a_derivation_statement(report.witness("derivation"))
        log.error(message)
        raise ValueError(message)
    W = model.point(1)
    term = {}
    for index, entry in W.items():
        add_polynomial_vector(term, model.constant_vector(delta.image(index)), entry)
    values = {}
    for k in range(model.nilpotency_class):
        if not term:
            break
        add_polynomial_vector(values, term, QQ(1, factorial(k + 1)))
        term = model.bracket(W, term)
    return GroupCochain(model, 1, values, name="xi")


def cocycle_failure(cochain):
    """Returns a witness where a 1-cochain fails to vanish at the identity or fails the cocycle identity, or `None`."""
    model = cochain.model
    at_unit = model.at_identity(cochain.values)
    if at_unit:
        return f"the identity with value {render_vector(cochain.module, at_unit)}"
    residual = group_coboundary(cochain).values
    if residual:
        return polynomial_witness(model, residual, cochain.module)
    return None


def van_est_differentiate(model, xi):
    """Differentiates a group 1-cocycle to its derivation, the linear part at the identity.

    Args:
        model (NilpotentGroupModel): the group
        xi (GroupCochain): a 1-cochain with values in the adjoint module

    Returns:
        GradedLinearMap: the degree-zero derivation

    Raises:
        ValueError: `xi` isn't a 1-cocycle vanishing at the identity
    """
    log.info(f"Starting `van_est_differentiate()` on {model.spec.name}.")
    if xi.n != 1:
        message = degree_out_of_range_statement("cocycle degree", xi.n, 1)
        log.error(message)
        raise ValueError(message)
    witness = cocycle_failure(xi)
    if witness:
        message = not_a_cocycle_statement(witness)
        log.error(message)
        raise ValueError(message)
    return GradedLinearMap(model.basis, 0, model.linear_part(xi.values))


#Section: Checks
def check_group_law(model):
    """Checks the polynomial group law against the Lie algebra it came from.

    Args:
        model (NilpotentGroupModel): the group

    Returns:
        VerificationReport: the rows `bch_inverse`, `bch_associativity`, `ad_homomorphism`, and `bracket_reversal`
    """
    log.info(f"Starting `check_group_law()` for {model.spec.name}.")
    report = VerificationReport(f"check_group_law({model.spec.name})")
    P1, P2, P3 = model.point(1), model.point(2), model.point(3)

    residual = model.bch(P1, model.inverse(P1))
    report.add("bch_inverse", not residual, None if not residual else polynomial_witness(model, residual))

    residual = model.bch(model.bch(P1, P2), P3)
    add_polynomial_vector(residual, model.bch(P1, model.bch(P2, P3)), QQ(-1))
    report.add("bch_associativity", not residual, None if not residual else polynomial_witness(model, residual))

    product_matrix = model.ad_exp(model.bch(P1, P2))
    composed = compose_polynomial_matrices(model.ad_exp(P1), model.ad_exp(P2))
    witness = None
    for index in range(model.dimension):
        residual = add_polynomial_vector(dict(product_matrix.get(index, {})), composed.get(index, {}), QQ(-1))
        if residual:
            witness = f"column {model.basis.names[index]}: {polynomial_witness(model, residual)}"
            break
    report.add("ad_homomorphism", witness is None, witness)

    # right-invariant fields reverse the bracket: [X^R, Y^R] = −[X, Y]^R
    witness = None
    for i, j in product(range(model.dimension), repeat=2):
        residual = vector_field_commutator(model, model.right_invariant_vf(i), model.right_invariant_vf(j))
        for k, coefficient in model.spec.bracket_of_basis(i, j).items():
            add_polynomial_vector(residual, model.right_invariant_vf(k), to_domain_rational(coefficient))
        if residual:
            witness = f"{format_tuple_for_witness((model.basis.names[i], model.basis.names[j]))} {polynomial_witness(model, residual)}"
            break
    report.add("bracket_reversal", witness is None, witness)
    return report
