"""The `dglie` command line: parse spec files, run the constructions, and print line-oriented verification reports.

Exit codes are 0 when every check passes, 1 when a check fails or a construction is rejected, and 2 when a spec file can't be parsed.
"""
import logging
from fractions import Fraction
import click

from .app import *
from .statements import *
from .grading import *
from .spec_files import SpecFile, SpecFileError, load_derivation
from .dgla import DGLASpec, check_dgla, derivation_check, adjoint
from .enveloping_algebra import EnvelopingAlgebra, pbw_dimension_report
from .hopf_engine import EnvelopingHopf, check_hopf_axioms, check_translation_calculus
from .nilpotent_group import NilpotentGroupModel, check_group_law, van_est_integrate, van_est_differentiate, cocycle_failure
from .harish_chandra import HarishChandraPair, integrate, ce_group
from .reports import VerificationReport

log = logging.getLogger(__name__)

SUITES = ('dgla', 'pbw', 'enveloping', 'group', 'translations')
EXIT_SUCCESS = 0
EXIT_FAILURE = 1
EXIT_PARSE_ERROR = 2


#Section: Helpers
def _load_or_exit(ctx, path):
    """Loads a spec file, ending the invocation with exit code 2 when it can't be parsed."""
    try:
        return SpecFile.load(path)
    except SpecFileError as error:
        click.echo(str(error), err=True)
        ctx.exit(EXIT_PARSE_ERROR)


def _weight(spec_file, weight):
    """The flag wins over the file, which wins over the package default."""
    if weight is not None:
        return weight
    return spec_file.truncation_weight


def _finish(ctx, report):
    """Prints a report and ends the invocation with the matching exit code."""
    click.echo(report.render(), nl=False)
    ctx.exit(EXIT_SUCCESS if report.passed() else EXIT_FAILURE)


def _reject(ctx, error):
    """Prints the message of a rejected construction and ends the invocation with exit code 1."""
    click.echo(str(error), err=True)
    ctx.exit(EXIT_FAILURE)


def inner_derivations(spec):
    """Returns the adjoint maps of the generators as `(name, GradedLinearMap)` pairs, skipping the zero ones."""
    derivations = []
    for index, name in enumerate(spec.basis.names):
        delta = adjoint(spec, {index: Fraction(1)})
        if not delta.is_zero():
            derivations.append((f"ad_{name}", delta))
    return derivations


def van_est_report(model, delta, prefix=None):
    """Runs the van Est round trip on one derivation.

    Args:
        model (NilpotentGroupModel): the group
        delta (GradedLinearMap): a degree-zero linear map
        prefix (str, optional): text placed before each check name; default is `None`

    Returns:
        VerificationReport: the rows `derivation`, `cocycle`, and `round_trip`; the last two are left out when the map isn't a derivation
    """
    log.info(f"Starting `van_est_report()` on {model.spec.name}.")
    report = VerificationReport(f"van_est({model.spec.name})")
    check = derivation_check(model.spec, delta)
    report.add("derivation", check.passed(), check.witness("derivation"))
    if check.passed():
        xi = van_est_integrate(model, delta)
        witness = cocycle_failure(xi)
        report.add("cocycle", witness is None, witness)
        if witness is None:
            recovered = van_est_differentiate(model, xi)
            report.add("round_trip", recovered == delta, None if recovered == delta else f"{recovered} vs {delta}")
    if prefix:
        return VerificationReport(report.title).extend(report, prefix=prefix)
    return report


#Section: Commands
@click.group()
@click.option('--verbose', is_flag=True, help="Log progress at the INFO level.")
def cli(verbose):
    """Integrates differential graded Lie algebras and verifies the results exactly."""
    configure_logging(logging.INFO if verbose else logging.WARNING)


@cli.command('validate')
@click.argument('path', type=click.Path(exists=True, dir_okay=False))
@click.pass_context
def cmd_validate(ctx, path):
    """Checks the graded Lie algebra and differential axioms of a spec file."""
    log.info(f"Starting `cmd_validate()` for {path}.")
    spec_file = _load_or_exit(ctx, path)
    _finish(ctx, check_dgla(spec_file.spec))


@cli.command('ce')
@click.argument('path', type=click.Path(exists=True, dir_okay=False))
@click.option('--weight', type=click.IntRange(min=0), default=None, help="The truncation weight.")
@click.pass_context
def cmd_ce(ctx, path, weight):
    """Builds the Chevalley-Eilenberg group of a spec file and checks its Hopf structure and derivation."""
    log.info(f"Starting `cmd_ce()` for {path}.")
    spec_file = _load_or_exit(ctx, path)
    try:
        H, Q, report = ce_group(spec_file.spec, _weight(spec_file, weight))
    except ValueError as error:
        _reject(ctx, error)
    _finish(ctx, report)


@cli.command('integrate')
@click.argument('path', type=click.Path(exists=True, dir_okay=False))
@click.option('--weight', type=click.IntRange(min=0), default=None, help="The truncation weight.")
@click.option('--formal', is_flag=True, help="Treat every generator as a fiber coordinate over a point.")
@click.pass_context
def cmd_integrate(ctx, path, weight, formal):
    """Integrates the DGLA of a spec file to a DG Harish-Chandra pair and differentiates it back."""
    log.info(f"Starting `cmd_integrate()` for {path}.")
    spec_file = _load_or_exit(ctx, path)
    try:
        dghcp, H, Q, report = integrate(spec_file.spec, _weight(spec_file, weight), formal)
    except ValueError as error:
        _reject(ctx, error)
    _finish(ctx, report)


@cli.command('vanest')
@click.argument('path', type=click.Path(exists=True, dir_okay=False))
@click.option('--derivation', 'derivation_path', type=click.Path(exists=True, dir_okay=False), default=None, help="A derivation file; the inner derivations are used when omitted.")
@click.pass_context
def cmd_vanest(ctx, path, derivation_path):
    """Integrates derivations of a nilpotent Lie algebra to group cocycles and differentiates them back."""
    log.info(f"Starting `cmd_vanest()` for {path}.")
    spec_file = _load_or_exit(ctx, path)
    spec = spec_file.spec
    try:
        model = NilpotentGroupModel(spec)
    except ValueError as error:
        _reject(ctx, error)
    if derivation_path:
        try:
            delta = load_derivation(derivation_path, spec)
        except SpecFileError as error:
            click.echo(str(error), err=True)
            ctx.exit(EXIT_PARSE_ERROR)
        _finish(ctx, van_est_report(model, delta))
    report = VerificationReport(f"vanest({spec.name})")
    for name, delta in inner_derivations(spec):
        report.extend(van_est_report(model, delta), prefix=f"{name}_")
    _finish(ctx, report)


@cli.command('check')
@click.argument('path', type=click.Path(exists=True, dir_okay=False))
@click.option('--suite', type=click.Choice(SUITES), required=True, help="The property suite to run.")
@click.option('--weight', type=click.IntRange(min=0), default=None, help="The truncation weight.")
@click.option('--formal', is_flag=True, help="Use the formal group model for the `translations` suite.")
@click.pass_context
def cmd_check(ctx, path, suite, weight, formal):
    """Runs a named property suite on a spec file."""
    log.info(f"Starting `cmd_check()` for {path} with the suite `{suite}`.")
    spec_file = _load_or_exit(ctx, path)
    spec = spec_file.spec
    truncation_weight = _weight(spec_file, weight)
    try:
        if suite == 'dgla':
            report = check_dgla(spec)
        elif suite == 'pbw':
            report = pbw_dimension_report(EnvelopingAlgebra(spec), truncation_weight)
        elif suite == 'enveloping':
            report = check_hopf_axioms(EnvelopingHopf(spec, truncation_weight))
        elif suite == 'group':
            report = check_group_law(NilpotentGroupModel(spec))
        else:
            report = check_translation_calculus(HarishChandraPair(spec, truncation_weight, formal).function_hopf())
    except ValueError as error:
        _reject(ctx, error)
    _finish(ctx, report)


@cli.command('format')
@click.argument('path', type=click.Path(exists=True, dir_okay=False))
@click.pass_context
def cmd_format(ctx, path):
    """Prints the canonical serialization of a spec file."""
    log.info(f"Starting `cmd_format()` for {path}.")
    spec_file = _load_or_exit(ctx, path)
    click.echo(spec_file.serialize(), nl=False)
