import logging
from fractions import Fraction
from itertools import combinations, product

from .app import *
from .statements import *
from .grading import *
from .reports import VerificationReport

log = logging.getLogger(__name__)


class DGLASpec:
    """A finite-dimensional differential graded Lie algebra given by structure constants.

    Brackets are stored only for basis pairs `i < j` and for odd self-brackets `(i, i)`; all other brackets follow from graded antisymmetry.

    Attributes:
        self.name (str): a label for the algebra
        self.basis (GradedBasis): the graded basis
        self.structure (dict): `(i, j)` with `i <= j` to the vector `[e_i, e_j]`
        self.differential (GradedLinearMap): the degree-one differential; the zero map when none is given
        self.nilpotency_class (int or None): the class declared in a spec file, if any

    Methods:
        from_names: Builds a spec from names, degrees, and rational coefficients.
        bracket_of_basis: Returns `[e_i, e_j]`.
        bracket: Returns the bracket of two vectors.
        differentiate: Applies the differential to a vector.
        reordered: Returns the same algebra over a reordered basis.
        subalgebra: Returns the subalgebra spanned by some generators.
        structure_by_names: Returns the structure constants keyed by generator names.
        is_abelian: Reports whether every bracket vanishes.
    """
    def __init__(self, basis, structure=None, differential=None, name=None, nilpotency_class=None):
        """The constructor method for `DGLASpec`, which checks the degrees of the stored brackets and the differential.

        Args:
            basis (GradedBasis): the graded basis
            structure (dict, optional): `(i, j)` to a vector; pairs with `i > j` are converted by antisymmetry; default is `None`
            differential (GradedLinearMap, optional): the degree-one differential; default is `None`
            name (str, optional): a label; default is `None`
            nilpotency_class (int, optional): a declared class; default is `None`

        Raises:
            ValueError: a bracket has the wrong degree, an even generator has a nonzero self-bracket, or the differential doesn't have degree one
        """
        self.basis = basis
        self.name = name or basis.label or "dgla"
        self.nilpotency_class = nilpotency_class
        self.structure = {}
        for (i, j), value in (structure or {}).items():
            value = {index: Fraction(coefficient) for index, coefficient in value.items() if coefficient}
            if not value:
                continue
            expected = basis.degrees[i] + basis.degrees[j]
            if basis.vector_degree(value) != expected:
                message = inhomogeneous_value_statement(f"[{basis.names[i]},{basis.names[j]}]", expected, basis.vector_degree(value))
                log.error(message)
                raise ValueError(message)
            if i == j and not basis.is_odd(i):
                message = even_self_bracket_statement(basis.names[i])
                log.error(message)
                raise ValueError(message)
            if i > j:
                i, j = j, i
                value = scale_vector(value, -koszul_sign(basis.degrees[i], basis.degrees[j]))
            self.structure[(i, j)] = value
        if differential is None:
            differential = GradedLinearMap.zero(basis, 1)
        if differential.degree != 1 or differential.source != basis:
            message = inhomogeneous_value_statement("the differential", 1, differential.degree)
            log.error(message)
            raise ValueError(message)
        self.differential = differential


    @classmethod
    def from_names(cls, name, generators, brackets=(), differential=None, nilpotency_class=None):
        """Builds a spec from generator names, degrees, and rational coefficients.

        Args:
            name (str): a label for the algebra
            generators (list): `(name, degree)` pairs in basis order
            brackets (iterable, optional): `(x, y, terms)` triples where `terms` is a list of `(z, coefficient)` pairs; default is no brackets
            differential (dict, optional): generator name to a list of `(z, coefficient)` pairs; default is `None`
            nilpotency_class (int, optional): a declared class; default is `None`

        Returns:
            DGLASpec: the algebra
        """
        basis = GradedBasis(generators, label=name)
        structure = {}
        for x, y, terms in brackets:
            value = {}
            for z, coefficient in terms:
                add_to_vector(value, {basis.index(z): Fraction(coefficient)})
            structure[(basis.index(x), basis.index(y))] = value
        differential_map = GradedLinearMap.from_names(basis, 1, differential or {})
        return cls(basis, structure, differential_map, name=name, nilpotency_class=nilpotency_class)


    def __repr__(self):
        return f"DGLASpec({self.name}: {self.basis})"


    def __eq__(self, other):
        if not isinstance(other, DGLASpec):
            return NotImplemented
        return self.basis == other.basis and self.structure == other.structure and self.differential == other.differential


    def __len__(self):
        return len(self.basis)


    def bracket_of_basis(self, i, j):
        """Returns `[e_i, e_j]` as a new vector, using graded antisymmetry for `i > j`."""
        if i < j:
            return dict(self.structure.get((i, j), {}))
        if i == j:
            return dict(self.structure.get((i, i), {}))
        return scale_vector(self.structure.get((j, i), {}), -koszul_sign(self.basis.degrees[i], self.basis.degrees[j]))


    def bracket(self, u, v):
        """Returns the bracket of two vectors, extended bilinearly from the basis brackets."""
        result = {}
        for i, first in u.items():
            for j, second in v.items():
                add_to_vector(result, self.bracket_of_basis(i, j), first * second)
        return result


    def differentiate(self, vector):
        """Applies the differential to a vector."""
        return self.differential.apply(vector)


    def generator(self, name):
        """Returns the basis vector of a named generator."""
        return {self.basis.index(name): Fraction(1)}


    def degree_zero_indices(self):
        return [index for index, degree in enumerate(self.basis.degrees) if degree == 0]


    def is_abelian(self):
        return not self.structure


    def reordered(self, names):
        """Returns the same algebra over a basis whose generators appear in the order `names`.

        Args:
            names (list): every generator name once, in the new order

        Returns:
            DGLASpec: the reordered algebra
        """
        new_basis = self.basis.reordered(names)
        position = {old: new_basis.index(old_name) for old, old_name in enumerate(self.basis.names)}
        move = lambda vector: {position[index]: coefficient for index, coefficient in vector.items()}
        structure = {(position[i], position[j]): move(value) for (i, j), value in self.structure.items()}
        matrix = {position[index]: move(image) for index, image in self.differential.matrix.items()}
        return DGLASpec(new_basis, structure, GradedLinearMap(new_basis, 1, matrix), name=self.name, nilpotency_class=self.nilpotency_class)


    def subalgebra(self, names, name=None):
        """Returns the subalgebra spanned by the named generators, without the differential.

        Args:
            names (list): the generators spanning the subalgebra, in the order to use
            name (str, optional): a label for the result; default is `None`

        Returns:
            DGLASpec: the subalgebra

        Raises:
            ValueError: some bracket of the named generators leaves their span
        """
        indices = [self.basis.index(generator) for generator in names]
        position = {old: new for new, old in enumerate(indices)}
        new_basis = GradedBasis([(self.basis.names[index], self.basis.degrees[index]) for index in indices], label=name)
        structure = {}
        for a, b in combinations(range(len(indices)), 2):
            value = self.bracket_of_basis(indices[a], indices[b])
            for index in value:
                if index not in position:
                    message = unknown_generator_statement(self.basis.names[index], name)
                    log.error(message)
                    raise ValueError(message)
            structure[(a, b)] = {position[index]: coefficient for index, coefficient in value.items()}
        for a, index in enumerate(indices):
            if self.basis.is_odd(index):
                value = self.bracket_of_basis(index, index)
                for target in value:
                    if target not in position:
                        message = unknown_generator_statement(self.basis.names[target], name)
                        log.error(message)
                        raise ValueError(message)
                structure[(a, a)] = {position[target]: coefficient for target, coefficient in value.items()}
        return DGLASpec(new_basis, structure, name=name or f"{self.name}_sub")


    def structure_by_names(self):
        """Returns the structure constants and differential keyed by generator names.

        The result doesn't depend on the basis order, so it compares algebras whose generators match by name.

        Returns:
            tuple: a dict of degrees, a dict `(x, y)` to `{z: coefficient}` over all ordered pairs with nonzero bracket, and a dict `x` to `{z: coefficient}` for the differential
        """
        names = self.basis.names
        degrees = dict(zip(names, self.basis.degrees))
        brackets = {}
        for i, j in product(range(len(names)), repeat=2):
            value = self.bracket_of_basis(i, j)
            if value:
                brackets[(names[i], names[j])] = {names[k]: coefficient for k, coefficient in value.items()}
        differential = {names[i]: {names[k]: coefficient for k, coefficient in image.items()} for i, image in self.differential.matrix.items()}
        return degrees, brackets, differential


def isomorphic_by_names(first, second):
    """Compares two algebras through the identification of generators with equal names.

    Args:
        first (DGLASpec): one algebra
        second (DGLASpec): the other algebra

    Returns:
        tuple: a bool for whether degrees, brackets, and differentials all agree, and a witness string or `None`
    """
    first_degrees, first_brackets, first_differential = first.structure_by_names()
    second_degrees, second_brackets, second_differential = second.structure_by_names()
    if first_degrees != second_degrees:
        return False, f"degrees {first_degrees} vs {second_degrees}"
    for pair in sorted(set(first_brackets) | set(second_brackets)):
        if first_brackets.get(pair, {}) != second_brackets.get(pair, {}):
            return False, f"bracket {format_tuple_for_witness(pair)}: {first_brackets.get(pair, {})} vs {second_brackets.get(pair, {})}"
    for source in sorted(set(first_differential) | set(second_differential)):
        if first_differential.get(source, {}) != second_differential.get(source, {}):
            return False, f"differential of {source}: {first_differential.get(source, {})} vs {second_differential.get(source, {})}"
    return True, None


#Section: Checks
def check_gla(spec):
    """Checks the graded Lie algebra axioms on all basis pairs and triples.

    Args:
        spec (DGLASpec): the algebra

    Returns:
        VerificationReport: the rows `bracket_degree`, `antisymmetry`, and `jacobi`, with the first failing basis tuple and its residual as witness
    """
    log.info(f"Starting `check_gla()` for {spec.name}.")
    basis = spec.basis
    names = basis.names
    report = VerificationReport(f"check_gla({spec.name})")

    witness = None
    for i, j in product(range(len(basis)), repeat=2):
        value = spec.bracket_of_basis(i, j)
        if value and basis.vector_degree(value) != basis.degrees[i] + basis.degrees[j]:
            witness = f"{format_tuple_for_witness((names[i], names[j]))} residual {render_vector(basis, value)}"
            break
    report.add("bracket_degree", witness is None, witness)

    witness = None
    for i, j in product(range(len(basis)), repeat=2):
        residual = add_to_vector(spec.bracket_of_basis(i, j), spec.bracket_of_basis(j, i), koszul_sign(basis.degrees[i], basis.degrees[j]))
        if residual:
            witness = f"{format_tuple_for_witness((names[i], names[j]))} residual {render_vector(basis, residual)}"
            break
    report.add("antisymmetry", witness is None, witness)

    witness = None
    for i, j, k in product(range(len(basis)), repeat=3):
        x, y, z = {i: 1}, {j: 1}, {k: 1}
        residual = spec.bracket(x, spec.bracket(y, z))
        add_to_vector(residual, spec.bracket(spec.bracket(x, y), z), -1)
        add_to_vector(residual, spec.bracket(y, spec.bracket(x, z)), -koszul_sign(basis.degrees[i], basis.degrees[j]))
        if residual:
            witness = f"{format_tuple_for_witness((names[i], names[j], names[k]))} residual {render_vector(basis, residual)}"
            break
    report.add("jacobi", witness is None, witness)
    return report


def check_dgla(spec):
    """Checks the graded Lie algebra axioms and the differential's degree, square, and Leibniz law.

    Args:
        spec (DGLASpec): the algebra

    Returns:
        VerificationReport: the `check_gla()` rows followed by `differential_degree`, `differential_squared`, and `differential_leibniz`
    """
    log.info(f"Starting `check_dgla()` for {spec.name}.")
    basis = spec.basis
    names = basis.names
    report = check_gla(spec)
    report.title = f"check_dgla({spec.name})"

    witness = None
    for index, image in spec.differential.matrix.items():
        if basis.vector_degree(image) != basis.degrees[index] + 1:
            witness = f"{names[index]} -> {render_vector(basis, image)}"
            break
    report.add("differential_degree", witness is None, witness)

    witness = None
    for index in range(len(basis)):
        residual = spec.differentiate(spec.differentiate({index: Fraction(1)}))
        if residual:
            witness = f"{format_tuple_for_witness((names[index],))} residual {render_vector(basis, residual)}"
            break
    report.add("differential_squared", witness is None, witness)

    witness = _first_derivation_failure(spec, spec.differential)
    report.add("differential_leibniz", witness is None, witness)
    return report


def _first_derivation_failure(spec, delta):
    """Returns a witness for the first basis pair where `delta` fails the graded derivation law, or `None`."""
    basis = spec.basis
    for i, j in product(range(len(basis)), repeat=2):
        x, y = {i: Fraction(1)}, {j: Fraction(1)}
        residual = delta.apply(spec.bracket(x, y))
        add_to_vector(residual, spec.bracket(delta.apply(x), y), -1)
        add_to_vector(residual, spec.bracket(x, delta.apply(y)), -koszul_sign(delta.degree, basis.degrees[i]))
        if residual:
            return f"{format_tuple_for_witness((basis.names[i], basis.names[j]))} residual {render_vector(basis, residual)}"
    return None


def derivation_check(spec, delta):
    """Checks that a homogeneous linear map is a graded derivation of the bracket.

    Args:
        spec (DGLASpec): the algebra
        delta (GradedLinearMap): the map on `spec.basis`

    Returns:
        VerificationReport: a single `derivation` row, with the first failing basis pair as witness
    """
    log.info(f"Starting `derivation_check()` for a degree {delta.degree} map on {spec.name}.")
    if delta.source != spec.basis or delta.target != spec.basis:
        message = mismatched_ambient_statement(delta.source, spec.basis)
        log.error(message)
        raise TypeError(message)
    witness = _first_derivation_failure(spec, delta)
    return VerificationReport(f"derivation_check({spec.name})").add("derivation", witness is None, witness)


def adjoint(spec, x):
    """Returns the matrix of `[x, -]`.

    Args:
        spec (DGLASpec): the algebra
        x (str or int or dict): a generator name, a generator index, or a homogeneous vector

    Returns:
        GradedLinearMap: the adjoint map, of degree `|x|`
    """
    if isinstance(x, str):
        x = spec.generator(x)
    elif isinstance(x, int):
        x = {x: Fraction(1)}
    degree = spec.basis.vector_degree(x) if x else 0
    if degree is None:
        message = inhomogeneous_value_statement("the adjoint argument", "a single value", "mixed")
        log.error(message)
        raise ValueError(message)
    matrix = {index: spec.bracket(x, {index: Fraction(1)}) for index in range(len(spec.basis))}
    return GradedLinearMap(spec.basis, degree, matrix)


#Section: Representations and Chevalley-Eilenberg Cochains
class LieRepresentation:
    """A representation of a Lie algebra on a graded vector space, given by one action matrix per generator.

    Attributes:
        self.spec (DGLASpec): the Lie algebra
        self.module (GradedBasis): the basis of the represented space
        self.actions (dict): generator index to `GradedLinearMap` on `self.module`

    Methods:
        adjoint: The adjoint representation.
        trivial: A trivial representation.
        act: Applies the action of a vector of the algebra to a vector of the module.
    """
    def __init__(self, spec, module, actions):
        self.spec = spec
        self.module = module
        self.actions = {}
        for generator, action in actions.items():
            index = spec.basis.index(generator) if isinstance(generator, str) else generator
            self.actions[index] = action


    @classmethod
    def adjoint(cls, spec):
        """The adjoint representation of `spec` on itself."""
        return cls(spec, spec.basis, {index: adjoint(spec, index) for index in range(len(spec.basis))})


    @classmethod
    def trivial(cls, spec, names):
        """The trivial representation on even degree-zero generators named `names`."""
        module = GradedBasis([(name, 0) for name in names], label="trivial")
        return cls(spec, module, {})


    def act(self, x, v):
        """Applies `ρ(x)` to `v` for vectors `x` of the algebra and `v` of the module."""
        result = {}
        for index, coefficient in x.items():
            if index in self.actions:
                add_to_vector(result, self.actions[index].apply(v), coefficient)
        return result


def check_representation(representation):
    """Checks `ρ[x,y] = ρ(x)ρ(y) − (−1)^{|x||y|}ρ(y)ρ(x)` on all generator pairs and module basis vectors.

    Args:
        representation (LieRepresentation): the representation

    Returns:
        VerificationReport: a single `representation` row
    """
    log.info(f"Starting `check_representation()` for {representation.spec.name}.")
    spec = representation.spec
    names = spec.basis.names
    witness = None
    for i, j in product(range(len(spec.basis)), repeat=2):
        for k in range(len(representation.module)):
            v = {k: Fraction(1)}
            residual = representation.act(spec.bracket_of_basis(i, j), v)
            add_to_vector(residual, representation.act({i: 1}, representation.act({j: 1}, v)), -1)
            add_to_vector(residual, representation.act({j: 1}, representation.act({i: 1}, v)), koszul_sign(spec.basis.degrees[i], spec.basis.degrees[j]))
            if residual:
                witness = f"{format_tuple_for_witness((names[i], names[j], representation.module.names[k]))} residual {render_vector(representation.module, residual)}"
                break
        if witness:
            break
    return VerificationReport(f"check_representation({spec.name})").add("representation", witness is None, witness)


class CECochain:
    """An alternating multilinear map from `n` copies of a Lie algebra to a module, given by its values on increasing basis tuples.

    Attributes:
        self.spec (DGLASpec): the Lie algebra
        self.module (GradedBasis): the value space
        self.n (int): the number of arguments
        self.values (dict): increasing index tuple to module vector
    """
    def __init__(self, spec, module, n, values):
        self.spec = spec
        self.module = module
        self.n = n
        self.values = {}
        for arguments, value in values.items():
            sign, ordered = _sort_arguments(arguments)
            if sign and value:
                add_to_vector(self.values.setdefault(ordered, {}), value, sign)
        self.values = {arguments: value for arguments, value in self.values.items() if value}


    def __eq__(self, other):
        if not isinstance(other, CECochain):
            return NotImplemented
        return self.n == other.n and self.values == other.values


    def evaluate(self, arguments):
        """Evaluates the cochain on a tuple of basis indices in any order."""
        sign, ordered = _sort_arguments(arguments)
        if not sign:
            return {}
        return scale_vector(self.values.get(ordered, {}), sign)


    def evaluate_vectors(self, vectors):
        """Evaluates the cochain on a tuple of algebra vectors by multilinearity."""
        result = {}
        for choice in product(*[list(vector.items()) for vector in vectors]):
            coefficient = Fraction(1)
            for _, entry in choice:
                coefficient *= entry
            add_to_vector(result, self.evaluate(tuple(index for index, _ in choice)), coefficient)
        return result


def _sort_arguments(arguments):
    """Sorts basis indices, returning the permutation sign and the sorted tuple; the sign is `0` on a repeat."""
    if len(set(arguments)) < len(arguments):
        return 0, tuple(sorted(arguments))
    sign = 1
    for a, b in combinations(range(len(arguments)), 2):
        if arguments[a] > arguments[b]:
            sign = -sign
    return sign, tuple(sorted(arguments))


def ce_coboundary(omega, representation):
    """Applies the Chevalley–Eilenberg coboundary to an `n`-cochain.

    The formula is `Σ_i (−1)^i ρ(X_i) ω(…X̂_i…) + Σ_{i<j} (−1)^{i+j} ω([X_i,X_j], …X̂_i…X̂_j…)`, evaluated on increasing basis tuples.

    Args:
        omega (CECochain): the cochain
        representation (LieRepresentation): the module structure

    Returns:
        CECochain: the `n+1`-cochain

    Raises:
        ValueError: `n` exceeds `MAXIMUM_COCHAIN_DEGREE` or the algebra isn't concentrated in degree zero
    """
    log.info(f"Starting `ce_coboundary()` for a {omega.n}-cochain on {omega.spec.name}.")
    spec = omega.spec
    if omega.n > MAXIMUM_COCHAIN_DEGREE or omega.n < 0:
        message = degree_out_of_range_statement("cochain degree", omega.n, MAXIMUM_COCHAIN_DEGREE)
        log.error(message)
        raise ValueError(message)
    if any(spec.basis.degrees):
        message = ungraded_required_statement("ce_coboundary")
        log.error(message)
        raise ValueError(message)
    values = {}
    for arguments in combinations(range(len(spec.basis)), omega.n + 1):
        result = {}
        for i in range(omega.n + 1):
            rest = arguments[:i] + arguments[i+1:]
            add_to_vector(result, representation.act({arguments[i]: 1}, omega.evaluate(rest)), sign_of_power(i))
        for i, j in combinations(range(omega.n + 1), 2):
            rest = tuple(argument for position, argument in enumerate(arguments) if position not in (i, j))
            bracket = spec.bracket_of_basis(arguments[i], arguments[j])
            vectors = [bracket] + [{argument: Fraction(1)} for argument in rest]
            add_to_vector(result, omega.evaluate_vectors(vectors), sign_of_power(i + j))
        if result:
            values[arguments] = result
    return CECochain(spec, omega.module, omega.n + 1, values)


#Section: Constructions
def shifted_tangent_dgla(g0):
    """Builds the DGLA `𝔤[1] ⊕ 𝔤` of the shifted tangent group of a Lie algebra.

    The copy `x[1]` sits in degree −1, `[x, y[1]] = [x, y][1]`, the shifted copies bracket to zero, and the differential sends `x[1]` to `x`.

    Args:
        g0 (DGLASpec): a Lie algebra concentrated in degree zero

    Returns:
        DGLASpec: the shifted tangent DGLA, with the original generators first

    Raises:
        ValueError: `g0` isn't concentrated in degree zero or fails the Lie algebra axioms
    """
    log.info(f"Starting `shifted_tangent_dgla()` for {g0.name}.")
    if any(g0.basis.degrees):
        message = ungraded_required_statement("shifted_tangent_dgla")
        log.error(message)
        raise ValueError(message)
    report = check_gla(g0)
    if not report.passed():
        message = failed_axioms_statement(report.failures())
        log.error(message)
        raise ValueError(message)
    n = len(g0.basis)
    generators = list(g0.basis) + [(f"{name}[1]", -1) for name in g0.basis.names]
    basis = GradedBasis(generators, label=f"T[1]{g0.name}")
    structure = {}
    for i in range(n):
        for j in range(n):
            value = g0.bracket_of_basis(i, j)
            if i < j:
                structure[(i, j)] = value
            structure[(i, n + j)] = {n + k: coefficient for k, coefficient in value.items()}
    differential = GradedLinearMap(basis, 1, {n + i: {i: Fraction(1)} for i in range(n)})
    return DGLASpec(basis, structure, differential, name=f"T[1]{g0.name}")


def ce_dual_dgla(spec):
    """Builds the abelian DGLA on the dual basis of a non-positively graded DGLA, with the transposed differential.

    The dual of a degree-`d` generator `x` is named `x*` and placed in degree `1 − d`; the differential sends `θ^i` to `Σ_j D^i_j θ^j` where `∂e_j = Σ_i D^i_j e_i`.

    Args:
        spec (DGLASpec): the algebra; every degree must be at most zero

    Returns:
        DGLASpec: the dual DGLA

    Raises:
        ValueError: a generator has positive degree
    """
    log.info(f"Starting `ce_dual_dgla()` for {spec.name}.")
    for name, degree in spec.basis:
        if degree > 0:
            message = positive_degree_statement(name, degree)
            log.error(message)
            raise ValueError(message)
    basis = GradedBasis([(f"{name}*", 1 - degree) for name, degree in spec.basis], label=f"{spec.name}*")
    matrix = {}
    for j, image in spec.differential.matrix.items():
        for i, coefficient in image.items():
            matrix.setdefault(i, {})[j] = coefficient
    return DGLASpec(basis, {}, GradedLinearMap(basis, 1, matrix), name=f"{spec.name}*")


def extended_dgla(spec):
    """Adjoins the differential as a degree-one generator, making it inner.

    The new generator is named `partial` (with trailing underscores added while the name is taken), `[partial, x] = ∂x`, `[partial, partial] = 0`, and the new differential is `ad_partial`.

    Args:
        spec (DGLASpec): the algebra; it must pass `check_dgla()`

    Returns:
        DGLASpec: the extended algebra, with `partial` last in the basis

    Raises:
        ValueError: the input fails `check_dgla()`
    """
    log.info(f"Starting `extended_dgla()` for {spec.name}.")
    report = check_dgla(spec)
    if not report.passed():
        message = failed_axioms_statement(report.failures())
        log.error(message)
        raise ValueError(message)
    partial_name = "partial"
    while partial_name in spec.basis.names:
        partial_name += "_"
    n = len(spec.basis)
    basis = GradedBasis(list(spec.basis) + [(partial_name, 1)], label=f"{spec.name}~")
    structure = dict(spec.structure)
    for i in range(n):
        image = spec.differential.image(i)
        if image:
            structure[(i, n)] = scale_vector(image, -sign_of_power(spec.basis.degrees[i]))
    matrix = {i: spec.differential.image(i) for i in range(n)}
    return DGLASpec(basis, structure, GradedLinearMap(basis, 1, matrix), name=f"{spec.name}~")
