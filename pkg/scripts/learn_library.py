"""Learn tactic libraries for one corpus."""

from pathlib import Path

# Add local folder with `tdgmine` module
import sys
sys.path.append('..')
from tdgmine.objects import Corpus
from tdgmine.settings import make_config
from tdgmine.io import load_corpus, save_corpus, save_report
from tdgmine.discovery import learn_library
from tdgmine.baseline import peano_learn_library, peano_refactor_library
from tdgmine.measures import library_report, format_ratio
from tdgmine.emit import emit_ltac
from tdgmine.utils import print_status

# Import settings (from local folder)
from settings import PROJECT_PATH, PATHS, CORPUS, SETTINGS, LEARNERS

###################################################################################################
###################################################################################################

def learn_corpus_library(CORPUS=CORPUS, SETTINGS=SETTINGS, LEARNERS=LEARNERS):
    """Learn libraries for a corpus, saving tactics, refactored corpus and report per learner."""

    cfg = make_config(SETTINGS)

    print_status(SETTINGS['VERBOSE'], '\nLEARNING LIBRARIES\n', 0)
    print_status(SETTINGS['VERBOSE'], 'Learning for corpus: \t{}'.format(CORPUS), 0)

    corpus = load_corpus(Path(PROJECT_PATH) / PATHS['CORPORA'] / (CORPUS + '.trace'))
    assert corpus.proofs

    for learner, run in LEARNERS.items():

        if not run:
            continue

        if learner == 'tdg':
            library, refactored, steps = learn_library(corpus, cfg, return_steps=True)
            usage = [step.applications for step in steps]
        else:
            plibrary, _ = peano_learn_library(corpus, cfg)
            library = [ptactic.tactic for ptactic in plibrary]
            refactored, usage = peano_refactor_library(plibrary, corpus)

        ## SAVE OUT

        folder = Path(PROJECT_PATH) / PATHS['RESULTS'] / CORPUS / learner
        folder.mkdir(parents=True, exist_ok=True)

        save_corpus(Corpus(tactics=library), folder / 'library.trace')
        save_corpus(refactored, folder / 'refactored.trace')

        report = library_report(library, corpus, refactored, usage)
        save_report(report.to_dict(), folder / 'report.yaml')

        print_status(SETTINGS['VERBOSE'], '{}: {} tactics, compression power {}'.format(
            learner, report.n_tactics, format_ratio(report.compression_power)), 1)
        for tactic in library:
            print_status(SETTINGS['VERBOSE'], emit_ltac(tactic), 2)

    print_status(SETTINGS['VERBOSE'], '\nLEARNING COMPLETED\n', 0)


if __name__ == '__main__':
    learn_corpus_library()
