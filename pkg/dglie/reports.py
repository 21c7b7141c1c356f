import logging
import pandas as pd

from .app import *
from .statements import *

log = logging.getLogger(__name__)


class VerificationReport:
    """An ordered table of named checks, each passing or failing with an optional witness.

    Verification failures in this package are data rather than exceptions; every `check_*` function returns one of these reports, and the CLI renders them as line-oriented `name: PASS` or `name: FAIL [witness: ...]` blocks.

    Attributes:
        self.title (str): a heading used in log statements
        self.rows (list): dicts with the keys `check`, `passed`, and `witness`, in insertion order

    Methods:
        add: Records one check.
        extend: Appends every row of another report, optionally prefixing the check names.
        passed: Reports whether every check passed.
        failures: Lists the names of the failing checks.
        witness: Returns the witness recorded for a check.
        to_dataframe: Returns the rows as a dataframe.
        render: Returns the line-oriented text form.
    """
    COLUMNS = ['check', 'passed', 'witness']

    def __init__(self, title=None):
        """The constructor method for `VerificationReport`, which starts an empty table.

        Args:
            title (str, optional): a heading for log statements; default is `None`
        """
        self.title = title
        self.rows = []


    def add(self, check, passed, witness=None):
        """Records one check.

        Args:
            check (str): the check name
            passed (bool): the outcome
            witness (str, optional): the witness for a failure; default is `None`

        Returns:
            VerificationReport: this report, for chaining
        """
        passed = bool(passed)
        if not passed:
            witness = "unspecified" if witness is None else str(witness)
        self.rows.append({'check': check, 'passed': passed, 'witness': None if passed else witness})
        if passed:
            log.debug(check_outcome_statement(check, passed))
        else:
            log.warning(check_outcome_statement(check, passed, witness))
        return self


    def extend(self, other, prefix=None):
        """Appends every row of another report.

        Args:
            other (VerificationReport): the report to append
            prefix (str, optional): text placed before each appended check name; default is `None`

        Returns:
            VerificationReport: this report, for chaining
        """
        for row in other.rows:
            check = f"{prefix}{row['check']}" if prefix else row['check']
            self.rows.append({'check': check, 'passed': row['passed'], 'witness': row['witness']})
        return self


    def passed(self):
        """Reports whether every check passed; an empty report passes."""
        return all(row['passed'] for row in self.rows)


    def __bool__(self):
        return self.passed()


    def failures(self):
        """Lists the names of the failing checks in order."""
        return [row['check'] for row in self.rows if not row['passed']]


    def witness(self, check):
        """Returns the witness recorded for the first row named `check`, or `None`."""
        for row in self.rows:
            if row['check'] == check:
                return row['witness']
        return None


    def outcome(self, check):
        """Returns the outcome recorded for the first row named `check`, or `None` when the check is absent."""
        for row in self.rows:
            if row['check'] == check:
                return row['passed']
        return None


    def to_dataframe(self):
        """Returns the rows as a dataframe with the columns `check`, `passed`, and `witness`."""
        df = pd.DataFrame(self.rows, columns=self.COLUMNS)
        df['passed'] = df['passed'].astype('boolean')
        df['witness'] = df['witness'].astype('string')
        log.debug(f"Report `{self.title}` as a dataframe:\n{return_string_of_dataframe_info(df)}")
        return df


    def render(self):
        """Returns the report in its line-oriented text form.

        Returns:
            str: one line per check, in insertion order, with a trailing newline when nonempty
        """
        lines = []
        for record in self.to_dataframe().itertuples(index=False):
            if record.passed:
                lines.append(f"{record.check}: PASS")
            else:
                lines.append(f"{record.check}: FAIL [witness: {record.witness}]")
        return format_list_for_stdout(lines) + ("\n" if lines else "")


    def __repr__(self):
        return f"VerificationReport({self.title}: {len(self.rows)} checks, {len(self.failures())} failed)"
