"""The package features a wide variety of logging statements, exception messages, and report witnesses. Many of these are consistent within a function or module, but others are standardized throughout the entire package; to avoid repetition, such statements are established as functions here. All logging statements and exception messages are full sentences ending in periods.
"""


#Section: Simple Helper Functions
def format_list_for_stdout(stdout_list):
    """Changes a sequence into a string which places each item of the list on its own line.

    Using the list comprehension allows the function to accept generators, which are transformed into lists by the comprehension, and to handle both lists and generators with individual items that aren't strings by type juggling.

    Args:
        stdout_list (list or generator or dict): a sequence for pretty printing to stdout

    Returns:
        str: the sequence contents with a line break between each item
    """
    if isinstance(stdout_list, dict):
        return '\n'.join([f"{k}: {v}" for k, v in stdout_list.items()])
    else:
        return '\n'.join([str(item) for item in stdout_list])


def format_tuple_for_witness(names):
    """Renders a tuple of generator names as the parenthesized, comma-separated form used in report witnesses.

    Args:
        names (iterable): the generator names

    Returns:
        str: the names in the form `(a,b,c)`
    """
    return "(" + ",".join(str(name) for name in names) + ")"


#Section: Rejection Statements
#Subsection: Grading and Algebra
def unknown_generator_statement(name, basis_name=None):
    """This statement indicates that a generator name or index isn't part of the ambient basis.

    Args:
        name (str or int): the offending generator name or index
        basis_name (str, optional): a label for the ambient basis; default is `None`

    Returns:
        str: the statement for raising and logging the error
    """
    if basis_name:
        return f"The generator `{name}` isn't part of the basis `{basis_name}`."
    return f"The generator `{name}` isn't part of the ambient basis."


def duplicate_generator_statement(name):
    """This statement indicates that a generator name was given more than once.

    Args:
        name (str): the repeated name

    Returns:
        str: the statement for raising and logging the error
    """
    return f"The generator name `{name}` appears more than once; generator names must be unique."


def inhomogeneous_value_statement(source, expected_degree, found_degree):
    """This statement indicates that a linear map or derivation sends a generator to an element of the wrong degree.

    Args:
        source (str): the generator whose image is wrong
        expected_degree (int): the degree the image should have
        found_degree (int or str): the degree the image has

    Returns:
        str: the statement for raising and logging the error
    """
    return f"The image of `{source}` should be homogeneous of degree {expected_degree}, but it has degree {found_degree}."


def mismatched_ambient_statement(first, second):
    """This statement indicates that two objects which must share an ambient structure don't.

    Args:
        first (object): the first ambient structure
        second (object): the second ambient structure

    Returns:
        str: the statement for raising and logging the error
    """
    return f"The operands live over different structures ({first} and {second}), so they can't be combined."


def degree_out_of_range_statement(kind, value, maximum):
    """This statement indicates that a requested degree or order exceeds the configured maximum.

    Args:
        kind (str): what the number measures, such as "cochain degree"
        value (int): the requested value
        maximum (int): the configured maximum

    Returns:
        str: the statement for raising and logging the error
    """
    return f"The {kind} {value} is outside the supported range; the configured maximum is {maximum}."


def one_sided_grading_statement(degrees):
    """This statement indicates that a construction needing a one-sided grading received generators on both sides of zero.

    Args:
        degrees (list): the degrees found in the basis

    Returns:
        str: the statement for raising and logging the error
    """
    return f"The degrees {sorted(set(degrees))} occur on both sides of zero, but this construction needs a non-positively or non-negatively graded algebra."


def positive_degree_statement(name, degree):
    """This statement indicates that a construction needing a non-positively graded algebra received a positive-degree generator.

    Args:
        name (str): the generator
        degree (int): its degree

    Returns:
        str: the statement for raising and logging the error
    """
    return f"The generator `{name}` has positive degree {degree}, but the dual construction needs every degree to be at most zero."


#Subsection: Lie Theory
def not_a_derivation_statement(witness):
    """This statement indicates that a linear map failed the derivation law.

    Args:
        witness (str): the basis pair and residual where the law fails

    Returns:
        str: the statement for raising and logging the error
    """
    return f"The linear map isn't a derivation of the bracket; the law fails at {witness}."


def failed_axioms_statement(failed_checks):
    """This statement indicates that a structure needed to pass a set of axiom checks but didn't.

    Args:
        failed_checks (list): the names of the failing checks

    Returns:
        str: the statement for raising and logging the error
    """
    return f"The structure fails the checks {', '.join(failed_checks)}, so the construction can't continue."


def nilpotency_class_statement(found_class, maximum):
    """This statement indicates that a Lie algebra isn't nilpotent within the configured class bound.

    Args:
        found_class (int or None): the computed class, or `None` if the lower central series doesn't terminate within the bound
        maximum (int): the configured maximum class

    Returns:
        str: the statement for raising and logging the error
    """
    if found_class is None:
        return f"The degree-zero Lie algebra isn't nilpotent of class at most {maximum}, so it has no polynomial group model."
    return f"The degree-zero Lie algebra has nilpotency class {found_class}, which exceeds the configured maximum of {maximum}."


def declared_class_mismatch_statement(declared_class, computed_class):
    """This statement indicates that a spec file declares a nilpotency class the lower central series doesn't confirm.

    Args:
        declared_class (int): the class from the spec file
        computed_class (int): the class found by the lower central series

    Returns:
        str: the statement for raising and logging the error
    """
    return f"The declared nilpotency class {declared_class} doesn't match the computed class {computed_class}."


def not_unipotent_statement(name):
    """This statement indicates that the degree-zero part doesn't act nilpotently on the whole algebra.

    Args:
        name (str): the generator whose adjoint action doesn't terminate

    Returns:
        str: the statement for raising and logging the error
    """
    return f"The adjoint action of `{name}` on the full algebra isn't nilpotent, so the exponential action isn't polynomial."


def not_a_cocycle_statement(witness):
    """This statement indicates that a group cochain fails the cocycle identity or doesn't vanish at the identity.

    Args:
        witness (str): a description of where the identity fails

    Returns:
        str: the statement for raising and logging the error
    """
    return f"The group cochain isn't a 1-cocycle; the identity fails at {witness}."


def lambda_incompatible_statement(witness):
    """This statement indicates that the degree-one cocycle doesn't implement the twisted differential.

    Args:
        witness (str): the basis element and residual

    Returns:
        str: the statement for raising and logging the error
    """
    return f"The cocycle doesn't satisfy the compatibility with the differential at {witness}, so the pair doesn't integrate in the polynomial model."


def invalid_point_derivation_statement(left, right):
    """This statement indicates that a functional fails the point-derivation law at a product of basis elements.

    Args:
        left (str): the first factor
        right (str): the second factor

    Returns:
        str: the statement for raising and logging the error
    """
    return f"The functional isn't a derivation at the unit; the law fails on the product of `{left}` and `{right}`."


def antipode_recursion_statement(key):
    """This statement indicates that the antipode couldn't be solved for at a basis element.

    Args:
        key (str): the rendered basis element

    Returns:
        str: the statement for raising and logging the error
    """
    return f"The convolution inverse of the identity couldn't be solved for at `{key}`, which means an upstream bialgebra axiom fails."


#Subsection: Spec Files
def spec_file_parse_error_statement(message, line, column):
    """This statement describes a spec file parsing failure with its location.

    Args:
        message (str): what went wrong
        line (int): the one-based line number
        column (int): the one-based column number

    Returns:
        str: the statement for output and logging
    """
    return f"Parsing the spec file failed at line {line} column {column}: {message}"


def invalid_rational_statement(text):
    """This statement indicates that a coefficient string isn't a valid exact rational.

    Args:
        text (str): the offending string

    Returns:
        str: the statement for raising and logging the error
    """
    return f"The coefficient `{text}` isn't a valid rational of the form `p/q` with a nonzero denominator."


#Section: Logging Statements
def check_outcome_statement(check_name, passed, witness=None):
    """This statement records the outcome of a single verification check.

    Args:
        check_name (str): the name of the check
        passed (bool): whether it passed
        witness (str, optional): the witness for a failure; default is `None`

    Returns:
        str: the statement for outputting the arguments to logging
    """
    if passed:
        return f"The check `{check_name}` passed."
    return f"The check `{check_name}` failed with witness {witness}."


def construction_complete_statement(object_description, details):
    """This statement records the successful construction of a mathematical object.

    Args:
        object_description (str): what was built
        details (str): a short summary of its size

    Returns:
        str: the statement for outputting the arguments to logging
    """
    return f"Built {object_description} with {details}."


#Subsection: Lie Algebra Input
def ungraded_required_statement(operation):
    """This statement indicates that an operation supports only Lie algebras concentrated in degree zero.

    Args:
        operation (str): the operation name

    Returns:
        str: the statement for raising and logging the error
    """
    return f"The operation `{operation}` supports only Lie algebras concentrated in degree zero."


def even_self_bracket_statement(name):
    """This statement indicates that a nonzero self-bracket was given for an even generator.

    Args:
        name (str): the generator

    Returns:
        str: the statement for raising and logging the error
    """
    return f"The bracket of the even generator `{name}` with itself must vanish, but a nonzero value was given."
