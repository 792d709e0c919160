"""Pipelines for splitting corpora and evaluating learned libraries."""

import numpy as np

from tdgmine.objects import Corpus
from tdgmine.settings import DEFAULTS
from tdgmine.discovery import learn_library
from tdgmine.baseline import peano_learn_library, peano_refactor_library
from tdgmine.refactor import refactor_library
from tdgmine.measures import corpus_size, library_report, format_ratio
from tdgmine.utils import print_status

###################################################################################################
###################################################################################################

BASELINES = ('tdg', 'peano')


def split_corpus(corpus, fraction=0.65, seed=0):
    """Split the proofs of a corpus into training and test corpora.

    Parameters
    ----------
    corpus : Corpus
        Corpus to split.
    fraction : float, optional, default: 0.65
        Share of proofs in the training corpus, strictly between 0 and 1, rounded half up.
    seed : int, optional, default: 0
        Seed for the random selection.

    Returns
    -------
    train, test : Corpus
        Disjoint corpora covering all proofs, each keeping the original proof order
        and all tactic definitions.
    """

    if not 0.0 < fraction < 1.0:
        raise ValueError('fraction must be strictly between 0 and 1')

    n_proofs = len(corpus.proofs)
    n_train = int(np.floor(n_proofs * fraction + 0.5))

    rng = np.random.default_rng(seed)
    chosen = set(rng.permutation(n_proofs)[:n_train].tolist())

    train = [script for ind, script in enumerate(corpus.proofs) if ind in chosen]
    test = [script for ind, script in enumerate(corpus.proofs) if ind not in chosen]

    return Corpus(train, corpus.tactics), Corpus(test, corpus.tactics)


def evaluate(train, test, cfg=DEFAULTS, baseline='tdg', verbose=None):
    """Learn a library on a training corpus and measure it on a test corpus.

    Parameters
    ----------
    train, test : Corpus
        Training and test corpora.
    cfg : Config, optional
        Settings.
    baseline : {'tdg', 'peano'}
        Which learner to use.
    verbose : bool, optional
        Whether to print progress. Defaults to the setting in `cfg`.

    Returns
    -------
    LibraryReport
        Measures of the learned library on the test corpus.
    """

    verbose = cfg.verbose if verbose is None else verbose
    if baseline not in BASELINES:
        raise ValueError('unknown baseline: {}'.format(baseline))

    print_status(verbose, 'learning {} library on {} proofs'.format(
        baseline, len(train.proofs)), 0)

    if baseline == 'tdg':
        library, _ = learn_library(train, cfg, verbose=verbose)
        refactored, usage = refactor_library(library, test)
    else:
        plibrary, _ = peano_learn_library(train, cfg, verbose=verbose)
        library = [ptactic.tactic for ptactic in plibrary]
        refactored, usage = peano_refactor_library(plibrary, test)

    report = library_report(library, test, refactored, usage)
    print_status(verbose, 'test corpus: {} -> {} steps, compression power {}'.format(
        corpus_size(test), corpus_size(refactored), format_ratio(report.compression_power)), 1)

    return report
