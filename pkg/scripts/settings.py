"""Settings for learning tactic libraries over corpora."""

###################################################################################################
## PATH SETTINGS

PROJECT_PATH = '..'

CORPUS_FOLDER = 'data'
RESULTS_FOLDER = 'results'

PATHS = {
    'CORPORA' : CORPUS_FOLDER,
    'RESULTS' : RESULTS_FOLDER,
}

###################################################################################################
## CORPUS SETTINGS

CORPUS = 'motivating'

###################################################################################################
## DEFINE RUN SETTINGS

# Run settings
VERBOSE = True

# Search settings
MIN_FREQUENCY = 2
MIN_EFFECTIVENESS = 1
MAX_TACTIC_SIZE = None
TIME_LIMIT = None

# Library settings
MAX_TACTICS = None

# Which learners to run
RUN_TDG = True
RUN_PEANO = True

SETTINGS = {

    # Run settings
    'VERBOSE' : VERBOSE,

    # Search settings
    'MIN_FREQUENCY' : MIN_FREQUENCY,
    'MIN_EFFECTIVENESS' : MIN_EFFECTIVENESS,
    'MAX_TACTIC_SIZE' : MAX_TACTIC_SIZE,
    'TIME_LIMIT' : TIME_LIMIT,

    # Library settings
    'MAX_TACTICS' : MAX_TACTICS,
}

LEARNERS = {
    'tdg' : RUN_TDG,
    'peano' : RUN_PEANO,
}

###################################################################################################
## DEFINE EVALUATION SETTINGS

# Shares of each corpus used for training
TRAIN_FRACTIONS = [0.25, 0.5, 0.65]

# Seeds for the train / test splits
SEEDS = [0, 1, 2]

EVALUATION = {
    'TRAIN_FRACTIONS' : TRAIN_FRACTIONS,
    'SEEDS' : SEEDS,
}

###################################################################################################
## DEFINE GROUP LEVEL SETTINGS

SKIP_ALREADY_RUN = False
CONTINUE_ON_FAIL = False

GROUP = {

    'SKIP_ALREADY_RUN' : SKIP_ALREADY_RUN,
    'CONTINUE_ON_FAIL' : CONTINUE_ON_FAIL,

}

###################################################################################################
## DEFINE SKIP CORPORA

# Corpora of hand written tactics, with no proofs to learn from
SKIP_CORPORA = [
    'tactics',
]

SKIP = {
    'CORPORA' : SKIP_CORPORA,
}
