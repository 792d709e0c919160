"""Check corpus files and learning status."""

from pathlib import Path

# Add local folder with `tdgmine` module
import sys
sys.path.append('..')
from tdgmine.io import get_files, load_corpus
from tdgmine.check import check_script
from tdgmine.measures import corpus_stats
from tdgmine.utils import print_status

# Import settings
from settings import PROJECT_PATH, PATHS

###################################################################################################
###################################################################################################

def check_files():
    """Check available corpora, their validity and which have learned libraries."""

    print_status(True, '\nCHECKING AVAILABLE CORPORA', 0)

    corpora_path = Path(PROJECT_PATH) / PATHS['CORPORA']
    results_path = Path(PROJECT_PATH) / PATHS['RESULTS']

    # Check each corpus file
    print('Available corpora:')
    names = []
    for file_name in get_files(corpora_path):
        corpus = load_corpus(corpora_path / file_name)
        stats = corpus_stats(corpus)
        n_invalid = sum(not check_script(script).valid for script in corpus.proofs)
        print_status(True, '{}\t{} proofs, {} steps, {} invalid'.format(
            file_name, stats.proof_count, stats.total_steps, n_invalid), 1)
        names.append(Path(file_name).stem)

    # Check which corpora have results
    learned = [path.name for path in results_path.iterdir()
               if path.is_dir() and path.name != 'zFailed'] \
        if results_path.exists() else []

    print('Corpora with learned libraries:')
    for name in sorted(learned):
        print_status(True, name, 1)

    print('Not yet learned corpora:')
    for name in names:
        if name not in learned:
            print_status(True, name, 1)

    print_status(True, '\n\n', 0)


if __name__ == '__main__':
    check_files()
