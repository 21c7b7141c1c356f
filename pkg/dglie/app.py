"""Package-wide configuration, logging setup, and the helper functions for exact rationals.

Everything configurable lives here as a module-level constant; the CLI flags override the truncation weight per invocation, and nothing is read from the environment.
"""
import io
import logging
from pathlib import Path
from fractions import Fraction
import re
from sympy import QQ

from .statements import *

TOP_DGLIE_DIRECTORY = Path(*Path(__file__).parts[0:Path(__file__).parts.index('dglie')+1])
CORPUS_DIRECTORY = TOP_DGLIE_DIRECTORY / 'corpus'
DEFAULT_TRUNCATION_WEIGHT = 4
MAXIMUM_COCHAIN_DEGREE = 3  # Chevalley-Eilenberg cochains
MAXIMUM_HOPF_COCHAIN_DEGREE = 2  # Coface complex of a Hopf algebra
MAXIMUM_GROUP_COCHAIN_DEGREE = 2  # Polynomial group cochains
MAXIMUM_NILPOTENCY_CLASS = 6
CACHE_SIZE = 4096  # Entries kept by each memoized map
RATIONAL_REGEX = re.compile(r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$")


def configure_logging(level=logging.INFO):
    """Create single logging configuration for entire program.

    The logging level and format set in `logging.basicConfig` are used when running the CLI; the `pytest.ini` file supplies that information when using pytest.

    Args:
        level (int, optional): the logging level for the root logger; default is `logging.INFO`

    Returns:
        None: no return value is needed, so the default `None` is used
    """
    logging.basicConfig(
        level=level,
        format="[%(asctime)s] %(name)s::%(lineno)d - %(message)s",  # "[timestamp] module name::line number - error message"
        datefmt="%Y-%m-%d %H:%M:%S",
        encoding="utf-8",
    )


log = logging.getLogger(__name__)


#Section: Exact Rationals
def parse_rational(text):
    """Changes a coefficient string of the form `p/q` or `p` into an exact rational.

    Args:
        text (str or int): the coefficient as it appears in a spec file

    Returns:
        Fraction: the exact value

    Raises:
        ValueError: the string isn't an integer ratio with a nonzero denominator
    """
    if isinstance(text, bool):
        raise ValueError(invalid_rational_statement(text))
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str) or not RATIONAL_REGEX.match(text):
        message = invalid_rational_statement(text)
        log.error(message)
        raise ValueError(message)
    try:
        return Fraction(text.replace(" ", ""))
    except ZeroDivisionError:
        message = invalid_rational_statement(text)
        log.error(message)
        raise ValueError(message)


def format_rational(value):
    """Renders an exact rational as `p/q`, or as `p` when the denominator is one.

    Args:
        value (Fraction or int): the number

    Returns:
        str: the canonical text form
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def to_domain_rational(value):
    """Converts a `Fraction` into an element of sympy's rational field `QQ` so it can multiply sparse polynomials.

    Args:
        value (Fraction or int): the number

    Returns:
        sympy.polys.domains: the same number as a `QQ` element
    """
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def from_domain_rational(value):
    """Converts an element of sympy's rational field `QQ` back into a `Fraction`.

    Args:
        value (sympy.polys.domains): a `QQ` element, or anything with integer `numerator` and `denominator`

    Returns:
        Fraction: the same number
    """
    return Fraction(int(value.numerator), int(value.denominator))


#Section: Other Helpers
def return_string_of_dataframe_info(df):
    """Returns the data output by `pandas.DataFrame.info()` as a string so the method can be used in logging statements.

    The `pandas.DataFrame.info()` method forgoes returning a value in favor of printing directly to stdout; as a result, it doesn't output anything when used in a logging statement. This function captures the data traditionally output directly to stdout in a string for use in a logging statement.

    Args:
        df (dataframe): the dataframe in the logging statement

    Returns:
        str: the output of the `pandas.DataFrame.info()` method
    """
    in_memory_stream = io.StringIO()
    df.info(buf=in_memory_stream)
    return in_memory_stream.getvalue()


def sign_of_power(exponent):
    """Returns `(-1)**exponent` as an integer without floating point.

    Args:
        exponent (int): any integer

    Returns:
        int: `1` or `-1`
    """
    return -1 if exponent % 2 else 1
