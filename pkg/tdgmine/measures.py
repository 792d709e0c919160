"""Functions for computing corpus and library measures."""

import math
from fractions import Fraction
from dataclasses import dataclass

import numpy as np

###################################################################################################
###################################################################################################

def corpus_size(corpus):
    """Total number of invocations over the proofs of a corpus."""

    return sum(len(script.body) for script in corpus.proofs)


@dataclass(frozen=True)
class CorpusStats:
    """Size statistics of a corpus."""

    proof_count: int
    total_steps: int
    mean_steps: Fraction
    max_steps: int


def corpus_stats(corpus):
    """Compute size statistics of a corpus.

    Parameters
    ----------
    corpus : Corpus
        Corpus to measure.

    Returns
    -------
    CorpusStats
        Statistics. The mean is an exact fraction, 0 for an empty corpus.
    """

    sizes = [len(script.body) for script in corpus.proofs]
    total = sum(sizes)
    mean = Fraction(total, len(sizes)) if sizes else Fraction(0)

    return CorpusStats(len(sizes), total, mean, max(sizes, default=0))


def compression_power(before, after):
    """Ratio of corpus sizes before and after refactoring.

    Parameters
    ----------
    before, after : Corpus
        Corpus before and after refactoring. Only invocations in proofs count;
        tactic definitions are not charged.

    Returns
    -------
    Fraction or float
        Exact ratio. Infinity if the refactored corpus is empty and the original
        is not, and 1 if both are empty.
    """

    size_before, size_after = corpus_size(before), corpus_size(after)

    if size_after == 0:
        return math.inf if size_before else Fraction(1)
    return Fraction(size_before, size_after)


def format_ratio(value, decimals=2):
    """Format a ratio for reports."""

    if value == math.inf:
        return 'inf'
    return '{:.{}f}'.format(float(value), decimals)


@dataclass(frozen=True)
class LibraryReport:
    """Measures of a learned library and its effect on a corpus."""

    n_tactics: int
    mean_size: float
    max_size: int
    usage: tuple
    compression_power: object
    definition_overhead: int
    tactic_names: tuple = ()

    def to_dict(self):
        """Plain dictionary form, for saving reports."""

        return {
            'n_tactics' : self.n_tactics,
            'mean_size' : round(float(self.mean_size), 2),
            'max_size' : self.max_size,
            'usage' : list(self.usage),
            'usage_count' : sum(self.usage),
            'compression_power' : format_ratio(self.compression_power),
            'definition_overhead' : self.definition_overhead,
            'tactics' : list(self.tactic_names),
        }


def library_report(library, before, after, usage):
    """Summarize a library.

    Parameters
    ----------
    library : list of TacticDef
        Learned tactics.
    before, after : Corpus
        Corpus before and after refactoring with the library.
    usage : list of int
        Number of applications of each tactic.

    Returns
    -------
    LibraryReport
        Report. The definition overhead is the total size of the tactic bodies.
    """

    sizes = np.array([len(tactic.body) for tactic in library])

    return LibraryReport(len(library),
                         float(sizes.mean()) if sizes.size else 0.0,
                         int(sizes.max()) if sizes.size else 0,
                         tuple(usage),
                         compression_power(before, after),
                         int(sizes.sum()),
                         tuple(tactic.name for tactic in library))
