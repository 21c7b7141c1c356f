import logging
from fractions import Fraction

from .app import *
from .statements import *

log = logging.getLogger(__name__)


#Section: Signs
def koszul_sign(d1, d2):
    """Returns the commutation factor `(-1)**(d1*d2)` for exchanging two homogeneous objects.

    Args:
        d1 (int): the degree of the first object
        d2 (int): the degree of the second object

    Returns:
        int: `1` or `-1`
    """
    return sign_of_power(d1 * d2)


def parity(d):
    """Returns the parity of a degree.

    Args:
        d (int): the degree

    Returns:
        str: "even" or "odd"
    """
    return "odd" if d % 2 else "even"


def permutation_sign(degrees, order):
    """Returns the Koszul sign of reordering homogeneous factors.

    The sign is the product of `koszul_sign()` over every pair of factors whose relative order is reversed; this is the single sign rule used for all tensor and word permutations in the package.

    Args:
        degrees (list): the degrees of the factors in their original positions
        order (list): the original positions listed in their new order

    Returns:
        int: `1` or `-1`
    """
    sign = 1
    for new_position, original_position in enumerate(order):
        for later_original_position in order[new_position+1:]:
            if later_original_position < original_position:
                sign *= koszul_sign(degrees[original_position], degrees[later_original_position])
    return sign


#Section: Sparse Vectors
# A vector is a dict from basis index to a nonzero coefficient; the coefficients are `Fraction` objects except in the nilpotent group model, where they're sparse polynomials

def add_to_vector(target, vector, scale=1):
    """Adds `scale * vector` into `target` in place, dropping entries that cancel.

    Args:
        target (dict): the vector being accumulated into
        vector (dict): the vector being added
        scale (Fraction or int or polynomial, optional): the scalar multiple; default is `1`

    Returns:
        dict: `target`, for chaining
    """
    for key, coefficient in vector.items():
        new_value = target.get(key, 0) + scale * coefficient
        if new_value:
            target[key] = new_value
        else:
            target.pop(key, None)
    return target


def scale_vector(vector, scale):
    """Returns `scale * vector` as a new vector.

    Args:
        vector (dict): the vector
        scale (Fraction or int): the scalar

    Returns:
        dict: the scaled vector without zero entries
    """
    if not scale:
        return {}
    return {key: scale * coefficient for key, coefficient in vector.items() if scale * coefficient}


def render_vector(basis, vector):
    """Renders a vector over a graded basis as a deterministic `c*name + ...` string.

    Args:
        basis (GradedBasis): the basis the indices refer to
        vector (dict): the vector

    Returns:
        str: the rendered vector; "0" for the zero vector
    """
    if not vector:
        return "0"
    pieces = []
    for index in sorted(vector):
        coefficient = vector[index]
        if coefficient == 1:
            pieces.append(basis.names[index])
        elif coefficient == -1:
            pieces.append(f"-{basis.names[index]}")
        else:
            pieces.append(f"{format_rational(coefficient)}*{basis.names[index]}")
    return " + ".join(pieces).replace("+ -", "- ")


#Section: Graded Bases and Maps
class GradedBasis:
    """An ordered list of named generators, each with an integer degree.

    The construction order is the total order used for monomial canonicalization and PBW normal forms throughout the package.

    Attributes:
        self.names (tuple): the generator names in basis order
        self.degrees (tuple): the generator degrees in basis order
        self.label (str): an optional human-readable label for messages

    Methods:
        index: Returns the basis position of a generator name.
        degree_of: Returns the degree of a generator index.
        is_odd: Reports whether a generator index has odd degree.
        vector_degree: Returns the common degree of the support of a vector.
        reordered: Returns a new basis with the same generators in another order.
    """
    def __init__(self, generators, label=None):
        """The constructor method for `GradedBasis`, which validates name uniqueness.

        Args:
            generators (list): a sequence of `(name, degree)` pairs in basis order
            label (str, optional): a label used in messages; default is `None`

        Raises:
            ValueError: a name appears twice
        """
        names = []
        degrees = []
        for name, degree in generators:
            if name in names:
                message = duplicate_generator_statement(name)
                log.error(message)
                raise ValueError(message)
            names.append(str(name))
            degrees.append(int(degree))
        self.names = tuple(names)
        self.degrees = tuple(degrees)
        self.label = label
        self._positions = {name: position for position, name in enumerate(self.names)}


    def __len__(self):
        return len(self.names)


    def __iter__(self):
        return iter(zip(self.names, self.degrees))


    def __eq__(self, other):
        if not isinstance(other, GradedBasis):
            return NotImplemented
        return self.names == other.names and self.degrees == other.degrees


    def __hash__(self):
        return hash((self.names, self.degrees))


    def __repr__(self):
        return "GradedBasis(" + ", ".join(f"{name}:{degree}" for name, degree in self) + ")"


    def index(self, name):
        """Returns the basis position of a generator name.

        Args:
            name (str): the generator name

        Returns:
            int: the position in basis order

        Raises:
            ValueError: the name isn't in the basis
        """
        try:
            return self._positions[name]
        except KeyError:
            message = unknown_generator_statement(name, self.label)
            log.error(message)
            raise ValueError(message)


    def degree_of(self, index):
        """Returns the degree of a generator index."""
        return self.degrees[index]


    def is_odd(self, index):
        """Reports whether a generator index has odd degree."""
        return self.degrees[index] % 2 == 1


    def vector_degree(self, vector):
        """Returns the common degree of the support of a vector.

        Args:
            vector (dict): a sparse vector over this basis

        Returns:
            int: the degree when the vector is homogeneous and nonzero
            None: the vector is zero or inhomogeneous
        """
        degrees = {self.degrees[index] for index in vector}
        if len(degrees) == 1:
            return degrees.pop()
        return None


    def reordered(self, names):
        """Returns a new basis with the same generators in the order of `names`.

        Args:
            names (list): every generator name exactly once, in the new order

        Returns:
            GradedBasis: the reordered basis
        """
        if sorted(names) != sorted(self.names):
            message = mismatched_ambient_statement(names, self.names)
            log.error(message)
            raise ValueError(message)
        return GradedBasis([(name, self.degrees[self.index(name)]) for name in names], label=self.label)


class GradedLinearMap:
    """A homogeneous linear map between graded bases, stored as a sparse matrix of column vectors.

    Attributes:
        self.source (GradedBasis): the domain basis
        self.target (GradedBasis): the codomain basis
        self.degree (int): the degree of the map
        self.matrix (dict): source index to image vector; generators missing from the dict map to zero

    Methods:
        from_names: Builds a map from generator names and rational coefficients.
        zero: Returns the zero map of a given degree.
        identity: Returns the identity map of a basis.
        image: Returns the image vector of one source generator.
        apply: Applies the map to a vector.
        compose: Returns the composite `self ∘ other`.
        is_zero: Reports whether every image vanishes.
    """
    def __init__(self, source, degree, matrix, target=None):
        """The constructor method for `GradedLinearMap`, which checks homogeneity of every image.

        Args:
            source (GradedBasis): the domain basis
            degree (int): the degree of the map
            matrix (dict): source index to image vector (a dict of target index to coefficient)
            target (GradedBasis, optional): the codomain basis; default is `None`, meaning the source

        Raises:
            ValueError: some image has the wrong degree
        """
        self.source = source
        self.target = target if target is not None else source
        self.degree = int(degree)
        self.matrix = {}
        for source_index, image in matrix.items():
            image = {target_index: Fraction(coefficient) for target_index, coefficient in image.items() if coefficient}
            for target_index in image:
                if self.target.degrees[target_index] != self.source.degrees[source_index] + self.degree:
                    message = inhomogeneous_value_statement(
                        self.source.names[source_index],
                        self.source.degrees[source_index] + self.degree,
                        self.target.degrees[target_index],
                    )
                    log.error(message)
                    raise ValueError(message)
            if image:
                self.matrix[source_index] = image


    @classmethod
    def from_names(cls, source, degree, images, target=None):
        """Builds a map from generator names and rational coefficients.

        Args:
            source (GradedBasis): the domain basis
            degree (int): the degree of the map
            images (dict): source name to a list of `(target name, coefficient)` pairs
            target (GradedBasis, optional): the codomain basis; default is `None`, meaning the source

        Returns:
            GradedLinearMap: the map
        """
        target_basis = target if target is not None else source
        matrix = {}
        for source_name, terms in images.items():
            image = {}
            for target_name, coefficient in terms:
                add_to_vector(image, {target_basis.index(target_name): Fraction(coefficient)})
            matrix[source.index(source_name)] = image
        return cls(source, degree, matrix, target)


    @classmethod
    def zero(cls, source, degree=0, target=None):
        """Returns the zero map of the given degree."""
        return cls(source, degree, {}, target)


    @classmethod
    def identity(cls, source):
        """Returns the identity map of a basis."""
        return cls(source, 0, {index: {index: Fraction(1)} for index in range(len(source))})


    def __eq__(self, other):
        if not isinstance(other, GradedLinearMap):
            return NotImplemented
        return self.source == other.source and self.target == other.target and self.degree == other.degree and self.matrix == other.matrix


    def __repr__(self):
        rows = [f"{self.source.names[index]} -> {render_vector(self.target, self.matrix[index])}" for index in sorted(self.matrix)]
        return f"GradedLinearMap(degree={self.degree}; " + "; ".join(rows) + ")"


    def image(self, index):
        """Returns a copy of the image vector of the source generator at `index`."""
        return dict(self.matrix.get(index, {}))


    def apply(self, vector):
        """Applies the map to a vector.

        Args:
            vector (dict): a vector over the source basis; coefficients may be any ring elements that multiply `Fraction`s on the right

        Returns:
            dict: the image vector over the target basis
        """
        result = {}
        for index, coefficient in vector.items():
            for target_index, entry in self.matrix.get(index, {}).items():
                add_to_vector(result, {target_index: coefficient}, entry)
        return result


    def compose(self, other):
        """Returns the composite `self ∘ other`.

        Args:
            other (GradedLinearMap): the map applied first; its target must be this map's source

        Returns:
            GradedLinearMap: the composite, of degree `self.degree + other.degree`
        """
        if other.target != self.source:
            message = mismatched_ambient_statement(other.target, self.source)
            log.error(message)
            raise TypeError(message)
        matrix = {index: self.apply(image) for index, image in other.matrix.items()}
        return GradedLinearMap(other.source, self.degree + other.degree, matrix, self.target)


    def is_zero(self):
        """Reports whether every image vanishes."""
        return not self.matrix
