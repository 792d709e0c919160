"""Evaluate learned libraries on held out proofs, across training set sizes."""

from pathlib import Path

import numpy as np

import sys
sys.path.append('..')
from tdgmine.settings import make_config
from tdgmine.io import load_corpus, save_report
from tdgmine.process import split_corpus, evaluate
from tdgmine.utils import print_status, catch_error

# Import settings
from settings import (PROJECT_PATH, PATHS, CORPUS, SETTINGS, LEARNERS,
                      EVALUATION, GROUP)

###################################################################################################
###################################################################################################

def run_evaluation(CORPUS=CORPUS, SETTINGS=SETTINGS):
    """Measure test compression power per learner, training fraction and seed."""

    print_status(SETTINGS['VERBOSE'], '\n\nRUNNING EVALUATION - {}\n\n'.format(CORPUS), 0)

    cfg = make_config(SETTINGS)
    corpus = load_corpus(Path(PROJECT_PATH) / PATHS['CORPORA'] / (CORPUS + '.trace'))
    folder = Path(PROJECT_PATH) / PATHS['RESULTS'] / CORPUS / 'evaluation'
    (folder / 'zFailed').mkdir(parents=True, exist_ok=True)

    results = {}
    for learner in [learner for learner, run in LEARNERS.items() if run]:
        results[learner] = {}
        for fraction in EVALUATION['TRAIN_FRACTIONS']:

            values = []
            for seed in EVALUATION['SEEDS']:
                run_name = '{}_{}_{}'.format(learner, fraction, seed)
                try:
                    train, test = split_corpus(corpus, fraction, seed)
                    report = evaluate(train, test, cfg, learner, verbose=False)
                    values.append(float(report.compression_power))
                except Exception:
                    catch_error(GROUP['CONTINUE_ON_FAIL'], run_name, folder / 'zFailed',
                                SETTINGS['VERBOSE'], 'ISSUE EVALUATING: \t{}')

            results[learner][fraction] = {
                'mean' : round(float(np.mean(values)), 3) if values else None,
                'std' : round(float(np.std(values)), 3) if values else None,
                'runs' : len(values),
            }
            print_status(SETTINGS['VERBOSE'], '{} - train {}: compression power {}'.format(
                learner, fraction, results[learner][fraction]['mean']), 1)

    save_report(results, folder / 'evaluation.yaml')

    print_status(SETTINGS['VERBOSE'], '\n\n FINISHED EVALUATION - {}\n\n'.format(CORPUS), 0)


if __name__ == '__main__':
    run_evaluation()
