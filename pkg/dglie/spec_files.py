"""Reading and writing the JSON spec files that describe a DGLA, and the derivation files used by `dglie vanest`."""
import logging
import json
from pathlib import Path

from .app import *
from .statements import *
from .grading import *
from .dgla import DGLASpec

log = logging.getLogger(__name__)

SPEC_FILE_KEYS = ('brackets', 'differential', 'generators', 'name', 'nilpotency_class', 'truncation_weight')


def _location_of(text, token):
    """Finds the one-based line and column of the first occurrence of a token as it would appear in JSON text.

    Args:
        text (str): the file contents
        token (str or int or None): the offending value

    Returns:
        tuple: the line and column; `(1, 1)` when the token can't be found
    """
    if token is None:
        return 1, 1
    needle = json.dumps(token)
    offset = text.find(needle)
    if offset == -1:
        offset = text.find(str(token))
    if offset == -1:
        return 1, 1
    line = text.count("\n", 0, offset) + 1
    column = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, column


class SpecFileError(ValueError):
    """A spec file couldn't be parsed; the message carries the line and column.

    Attributes:
        self.line (int): the one-based line
        self.column (int): the one-based column
    """
    def __init__(self, message, line, column):
        self.line = line
        self.column = column
        super().__init__(spec_file_parse_error_statement(message, line, column))


def _fail(text, message, token=None):
    line, column = _location_of(text, token)
    error = SpecFileError(message, line, column)
    log.error(str(error))
    raise error


class SpecFile:
    """The contents of a spec file: a DGLA with its run settings.

    Attributes:
        self.spec (DGLASpec): the algebra, with any declared nilpotency class attached
        self.truncation_weight (int): the truncation weight to use when no flag overrides it
        self.nilpotency_class (int or None): the declared nilpotency class

    Methods:
        parse: Builds a `SpecFile` from JSON text.
        load: Builds a `SpecFile` from a path.
        serialize: Returns the canonical text form.
    """
    def __init__(self, spec, truncation_weight=DEFAULT_TRUNCATION_WEIGHT, nilpotency_class=None):
        self.spec = spec
        self.truncation_weight = truncation_weight
        self.nilpotency_class = nilpotency_class
        if nilpotency_class is not None:
            self.spec.nilpotency_class = nilpotency_class


    def __repr__(self):
        return f"SpecFile({self.spec.name}, truncation_weight={self.truncation_weight})"


    def __eq__(self, other):
        if not isinstance(other, SpecFile):
            return NotImplemented
        return self.spec.name == other.spec.name and self.spec == other.spec and self.truncation_weight == other.truncation_weight and self.nilpotency_class == other.nilpotency_class


    @classmethod
    def parse(cls, text):
        """Builds a `SpecFile` from the JSON text of a spec file.

        Args:
            text (str): the file contents

        Returns:
            SpecFile: the parsed file

        Raises:
            SpecFileError: the text isn't valid JSON, a field is missing or malformed, a coefficient isn't an exact rational, or the algebra is inconsistent
        """
        log.info("Starting `SpecFile.parse()`.")
        try:
            data = json.loads(text)
        except json.JSONDecodeError as error:
            parse_error = SpecFileError(error.msg, error.lineno, error.colno)
            log.error(str(parse_error))
            raise parse_error
        if not isinstance(data, dict):
            _fail(text, "the top level must be an object")
        for key in data:
            if key not in SPEC_FILE_KEYS:
                _fail(text, f"unexpected field `{key}`", key)
        for key in ('name', 'generators'):
            if key not in data:
                _fail(text, f"the field `{key}` is required")

        name = data['name']
        if not isinstance(name, str) or not name:
            _fail(text, "the field `name` must be a nonempty string", 'name')
        generators = []
        for entry in _require_list(text, data['generators'], 'generators'):
            if not isinstance(entry, list) or len(entry) != 2 or not isinstance(entry[0], str) or isinstance(entry[1], bool) or not isinstance(entry[1], int):
                _fail(text, "each generator must be a `[name, degree]` pair", 'generators')
            if entry[0] in [generator for generator, degree in generators]:
                _fail(text, duplicate_generator_statement(entry[0]), entry[0])
            generators.append((entry[0], entry[1]))
        known = {generator for generator, degree in generators}

        brackets = []
        for entry in _require_list(text, data.get('brackets', []), 'brackets'):
            if not isinstance(entry, list) or len(entry) != 3:
                _fail(text, "each bracket must be a `[x, y, terms]` triple", 'brackets')
            x, y, terms = entry
            for generator in (x, y):
                if generator not in known:
                    _fail(text, unknown_generator_statement(generator, name), generator)
            brackets.append((x, y, _parse_terms(text, terms, known, name)))

        differential_data = data.get('differential', {})
        if not isinstance(differential_data, dict):
            _fail(text, "the field `differential` must be an object", 'differential')
        differential = {}
        for source, terms in differential_data.items():
            if source not in known:
                _fail(text, unknown_generator_statement(source, name), source)
            differential[source] = _parse_terms(text, terms, known, name)

        nilpotency_class = data.get('nilpotency_class')
        if nilpotency_class is not None and (isinstance(nilpotency_class, bool) or not isinstance(nilpotency_class, int) or nilpotency_class < 1):
            _fail(text, "the field `nilpotency_class` must be a positive integer or null", 'nilpotency_class')
        truncation_weight = data.get('truncation_weight', DEFAULT_TRUNCATION_WEIGHT)
        if isinstance(truncation_weight, bool) or not isinstance(truncation_weight, int) or truncation_weight < 0:
            _fail(text, "the field `truncation_weight` must be a nonnegative integer", 'truncation_weight')

        try:
            spec = DGLASpec.from_names(name, generators, brackets, differential, nilpotency_class)
        except ValueError as error:
            _fail(text, str(error), name)
        log.info(construction_complete_statement(f"the spec `{name}`", f"{len(generators)} generators and {len(brackets)} brackets"))
        return cls(spec, truncation_weight, nilpotency_class)


    @classmethod
    def load(cls, path):
        """Builds a `SpecFile` from the file at `path`, read as UTF-8."""
        log.info(f"Starting `SpecFile.load()` for {path}.")
        return cls.parse(Path(path).read_text(encoding='utf-8'))


    def serialize(self):
        """Returns the canonical text form of the file.

        Keys are sorted and indented by two spaces; each bracket and each differential image sits on its own line, brackets are ordered by basis index pair, coefficient lists by basis index, and coefficients are rationals in lowest terms.

        Returns:
            str: the file contents, ending with a newline
        """
        basis = self.spec.basis
        names = basis.names
        bracket_lines = []
        for (i, j) in sorted(self.spec.structure):
            value = self.spec.structure[(i, j)]
            bracket_lines.append(json.dumps([names[i], names[j], _render_terms(basis, value)]))
        differential_lines = []
        for source in sorted(self.spec.differential.matrix):
            image = self.spec.differential.matrix[source]
            differential_lines.append(f"{json.dumps(names[source])}: {json.dumps(_render_terms(basis, image))}")
        lines = ["{"]
        lines.extend(_block('"brackets"', bracket_lines, "[", "]"))
        lines.extend(_block('"differential"', differential_lines, "{", "}"))
        lines.append(f'  "generators": {json.dumps([[name, degree] for name, degree in basis])},')
        lines.append(f'  "name": {json.dumps(self.spec.name)},')
        lines.append(f'  "nilpotency_class": {json.dumps(self.nilpotency_class)},')
        lines.append(f'  "truncation_weight": {json.dumps(self.truncation_weight)}')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _block(key, entries, opening, closing):
    if not entries:
        return [f"  {key}: {opening}{closing},"]
    lines = [f"  {key}: {opening}"]
    lines.extend(f"    {entry}," for entry in entries[:-1])
    lines.append(f"    {entries[-1]}")
    lines.append(f"  {closing},")
    return lines


def _render_terms(basis, vector):
    return [[basis.names[index], format_rational(vector[index])] for index in sorted(vector)]


def _require_list(text, value, key):
    if not isinstance(value, list):
        _fail(text, f"the field `{key}` must be a list", key)
    return value


def _parse_terms(text, terms, known, basis_name):
    """Changes a list of `[generator, "p/q"]` pairs into `(generator, Fraction)` pairs, locating any error in `text`."""
    if not isinstance(terms, list):
        _fail(text, "a coefficient list must be a list of `[generator, coefficient]` pairs", None)
    result = []
    for term in terms:
        if not isinstance(term, list) or len(term) != 2:
            _fail(text, "each term must be a `[generator, coefficient]` pair", None)
        generator, coefficient = term
        if generator not in known:
            _fail(text, unknown_generator_statement(generator, basis_name), generator)
        try:
            value = parse_rational(coefficient)
        except ValueError as error:
            _fail(text, str(error), coefficient)
        result.append((generator, value))
    return result


def parse(text):
    """Parses spec file text; see `SpecFile.parse`."""
    return SpecFile.parse(text)


def load(path):
    """Loads a spec file; see `SpecFile.load`."""
    return SpecFile.load(path)


def serialize(spec_file):
    """Returns the canonical text of a `SpecFile`."""
    return spec_file.serialize()


def parse_derivation(text, spec):
    """Parses a derivation file into a degree-zero linear map on the algebra of `spec`.

    The file holds one object, `{"derivation": {generator: [[generator, "p/q"], ...]}}`; generators left out map to zero.

    Args:
        text (str): the file contents
        spec (DGLASpec): the algebra the derivation acts on

    Returns:
        GradedLinearMap: the map

    Raises:
        SpecFileError: the text is malformed or names unknown generators
    """
    log.info(f"Starting `parse_derivation()` for {spec.name}.")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as error:
        parse_error = SpecFileError(error.msg, error.lineno, error.colno)
        log.error(str(parse_error))
        raise parse_error
    if not isinstance(data, dict) or list(data) != ['derivation'] or not isinstance(data['derivation'], dict):
        _fail(text, "a derivation file must hold exactly one object under the key `derivation`")
    known = set(spec.basis.names)
    images = {}
    for source, terms in data['derivation'].items():
        if source not in known:
            _fail(text, unknown_generator_statement(source, spec.name), source)
        images[source] = _parse_terms(text, terms, known, spec.name)
    try:
        return GradedLinearMap.from_names(spec.basis, 0, images)
    except ValueError as error:
        _fail(text, str(error), None)


def load_derivation(path, spec):
    """Loads a derivation file; see `parse_derivation`."""
    return parse_derivation(Path(path).read_text(encoding='utf-8'), spec)
