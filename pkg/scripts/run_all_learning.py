"""Run library learning on all available corpora."""

from pathlib import Path

import sys
sys.path.append('..')
from tdgmine.io import get_files
from tdgmine.utils import print_status, catch_error

# Import processing functions (from local scripts)
from learn_library import learn_corpus_library

# Import settings
from settings import PROJECT_PATH, PATHS, SETTINGS, LEARNERS, GROUP, SKIP

###################################################################################################
###################################################################################################

def run_all_learning():
    """Learn libraries for every available corpus."""

    print_status(SETTINGS['VERBOSE'], '\n\nRUNNING ALL LEARNING\n\n', 0)

    corpora_path = Path(PROJECT_PATH) / PATHS['CORPORA']
    results_path = Path(PROJECT_PATH) / PATHS['RESULTS']
    (results_path / 'zFailed').mkdir(parents=True, exist_ok=True)

    for file_name in get_files(corpora_path):

        corpus_name = Path(file_name).stem

        if corpus_name in SKIP['CORPORA']:
            print_status(SETTINGS['VERBOSE'], 'SKIPPING CORPUS: \t{}'.format(corpus_name), 0)
            continue

        # Check for whether to skip already run
        if GROUP['SKIP_ALREADY_RUN'] and (results_path / corpus_name).exists():
            print_status(SETTINGS['VERBOSE'], 'CORPUS ALREADY RUN: \t{}'.format(corpus_name), 0)
            continue

        try:

            learn_corpus_library(CORPUS=corpus_name, SETTINGS=SETTINGS, LEARNERS=LEARNERS)

        except Exception:

            catch_error(GROUP['CONTINUE_ON_FAIL'], corpus_name, results_path / 'zFailed',
                        SETTINGS['VERBOSE'], 'ISSUE LEARNING CORPUS: \t{}')

    print_status(SETTINGS['VERBOSE'], '\n\n FINISHED ALL LEARNING\n\n', 0)


if __name__ == '__main__':
    run_all_learning()
