"""Pytest configuration file for testing tdgmine."""

from pathlib import Path

import pytest

from tdgmine.io import load_corpus
from tdgmine.objects import ProofScript, Corpus

###################################################################################################
###################################################################################################

DATA_PATH = Path(__file__).parents[2] / 'data'
CONFIG_PATH = Path(__file__).parents[2] / 'configs'

@pytest.fixture(scope='session')
def implication():
    return load_corpus(DATA_PATH / 'implication.trace').proofs[0]

@pytest.fixture(scope='session')
def disjunction():
    return load_corpus(DATA_PATH / 'disjunction.trace').proofs[0]

@pytest.fixture(scope='session')
def motivating():
    return load_corpus(DATA_PATH / 'motivating.trace')

@pytest.fixture(scope='session')
def tactics():
    return load_corpus(DATA_PATH / 'tactics.trace')

@pytest.fixture(scope='session')
def mytac(tactics):
    return tactics.tactics[0]

@pytest.fixture(scope='session')
def mytac2(tactics):
    return tactics.tactics[1]

@pytest.fixture(scope='session')
def newtac(tactics):
    return tactics.tactics[2]

@pytest.fixture(scope='session')
def implication_twice(implication):
    return Corpus([implication, ProofScript('implication2', implication.init, implication.body)])

@pytest.fixture
def data_path():
    return DATA_PATH
