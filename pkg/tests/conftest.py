"""This module contains the fixtures and configurations for testing.

The fixtures are built from the spec files in `dglie/corpus`, the same files the CLI tests run against, so a structure checked in one module's tests is the structure integrated in another's. Every fixture is session scoped because the constructions are deterministic and some of them, the integrated pairs in particular, take several seconds to build.
"""

import pytest
import logging

from dglie.app import configure_logging
from dglie.app import CORPUS_DIRECTORY
from dglie.spec_files import SpecFile
from dglie.enveloping_algebra import EnvelopingAlgebra
from dglie.hopf_engine import EnvelopingHopf
from dglie.nilpotent_group import NilpotentGroupModel
from dglie.harish_chandra import HarishChandraPair, integrate, ce_group

log = logging.getLogger(__name__)


def load_corpus_spec(name):
    """Loads a spec file from the corpus by its stem.

    This is a function rather than a fixture so tests can load the less used corpus files without a fixture apiece.

    Args:
        name (str): the file name without the `.spec` suffix

    Returns:
        SpecFile: the parsed file
    """
    return SpecFile.load(CORPUS_DIRECTORY / f"{name}.spec")


def corpus_text(file_name):
    """Returns the contents of a corpus file, read as UTF-8."""
    return (CORPUS_DIRECTORY / file_name).read_text(encoding='utf-8')


#Section: Logging
@pytest.fixture(scope='session', autouse=True)
def logging_configuration():
    """Configures the root logger once per session; `pytest.ini` supplies the live-log settings."""
    configure_logging()
    yield None


#Section: Algebras
@pytest.fixture(scope='session')
def sl2():
    """The split simple Lie algebra of 2x2 traceless matrices.

    Yields:
        DGLASpec: `sl2` with `[e,f]=h`, `[h,e]=2e`, and `[h,f]=-2f`
    """
    spec = load_corpus_spec('sl2').spec
    log.info(f"`tests.conftest.sl2()` yields {spec} (type {type(spec)}).")
    yield spec


@pytest.fixture(scope='session')
def sl2_broken():
    """`sl2` with `[h,e]=e`, which breaks the Jacobi identity.

    Yields:
        DGLASpec: the mutated algebra
    """
    spec = load_corpus_spec('sl2-broken').spec
    log.info(f"`tests.conftest.sl2_broken()` yields {spec} (type {type(spec)}).")
    yield spec


@pytest.fixture(scope='session')
def aff1():
    """The Lie algebra of affine transformations of the line.

    Yields:
        DGLASpec: `aff1` with `[a,b]=b`
    """
    spec = load_corpus_spec('aff1').spec
    log.info(f"`tests.conftest.aff1()` yields {spec} (type {type(spec)}).")
    yield spec


@pytest.fixture(scope='session')
def heis3():
    """The three-dimensional Heisenberg algebra.

    Yields:
        DGLASpec: `heis3` with `[x,y]=z` and a declared nilpotency class of two
    """
    spec = load_corpus_spec('heis3').spec
    log.info(f"`tests.conftest.heis3()` yields {spec} (type {type(spec)}).")
    yield spec


@pytest.fixture(scope='session')
def ab_ext():
    """The abelian DGLA on `a` in degree zero and `b` in degree one with `∂a = b`.

    Yields:
        DGLASpec: `ab-ext`
    """
    spec = load_corpus_spec('ab-ext').spec
    log.info(f"`tests.conftest.ab_ext()` yields {spec} (type {type(spec)}).")
    yield spec


@pytest.fixture(scope='session')
def tangent_plane():
    """The shifted tangent DGLA of the abelian plane.

    Yields:
        DGLASpec: `tangent-plane`
    """
    spec = load_corpus_spec('tangent-plane').spec
    log.info(f"`tests.conftest.tangent_plane()` yields {spec} (type {type(spec)}).")
    yield spec


#Section: Hopf Algebras and Groups
@pytest.fixture(scope='session')
def sl2_enveloping_algebra(sl2):
    """The enveloping algebra of `sl2`, whose normal-form memo table is shared by the session.

    Yields:
        EnvelopingAlgebra: `U(sl2)`
    """
    algebra = EnvelopingAlgebra(sl2)
    log.info(f"`tests.conftest.sl2_enveloping_algebra()` yields {algebra} (type {type(algebra)}).")
    yield algebra


@pytest.fixture(scope='session')
def sl2_enveloping_hopf(sl2):
    """The enveloping Hopf algebra of `sl2`, checked up to weight four.

    Yields:
        EnvelopingHopf: `U(sl2)` with truncation weight four
    """
    H = EnvelopingHopf(sl2, 4)
    log.info(f"`tests.conftest.sl2_enveloping_hopf()` yields {H} (type {type(H)}).")
    yield H


@pytest.fixture(scope='session')
def heis3_group(heis3):
    """The polynomial group model of `heis3`.

    Yields:
        NilpotentGroupModel: the Heisenberg group in exponential coordinates
    """
    model = NilpotentGroupModel(heis3)
    log.info(f"`tests.conftest.heis3_group()` yields {model} (type {type(model)}).")
    yield model


@pytest.fixture(scope='session')
def heis3_pair(heis3):
    """The Harish-Chandra pair of `heis3` truncated at weight three.

    Yields:
        HarishChandraPair: the pair, with every generator in degree zero
    """
    pair = HarishChandraPair(heis3, 3)
    log.info(f"`tests.conftest.heis3_pair()` yields {pair} (type {type(pair)}).")
    yield pair


#Section: Integrations
@pytest.fixture(scope='session')
def ab_ext_integration(ab_ext):
    """The integration of `ab-ext` at weight four.

    Yields:
        tuple: the `DGHCP`, the `FunctionHopf`, `Q`, and the `VerificationReport`
    """
    result = integrate(ab_ext, 4)
    log.info(f"`tests.conftest.ab_ext_integration()` yields a report of {len(result[3].rows)} rows with the failures {result[3].failures()}.")
    yield result


@pytest.fixture(scope='session')
def tangent_plane_integration(tangent_plane):
    """The integration of the shifted tangent DGLA of the plane at weight three.

    Yields:
        tuple: the `DGHCP`, the `FunctionHopf`, `Q`, and the `VerificationReport`
    """
    result = integrate(tangent_plane, 3)
    log.info(f"`tests.conftest.tangent_plane_integration()` yields a report of {len(result[3].rows)} rows with the failures {result[3].failures()}.")
    yield result


@pytest.fixture(scope='session')
def aff1_ce_group(aff1):
    """The Chevalley-Eilenberg group of `aff1` at weight four.

    Yields:
        tuple: the `FunctionHopf`, `Q`, and the `VerificationReport`
    """
    result = ce_group(aff1, 4)
    log.info(f"`tests.conftest.aff1_ce_group()` yields a report with the failures {result[2].failures()}.")
    yield result
