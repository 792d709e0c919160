"""Information related to trace corpora and tactic dependence graphs."""

###################################################################################################
###################################################################################################

# Label of the synthetic node producing a proof's initial elements
INIT_LABEL = '<init>'

# Proof element kinds
GOAL = 'g'
HYP = 'h'
KINDS = (GOAL, HYP)

# Prefixes for allocated proof element names
NAME_PREFIXES = {
    GOAL : 'g',
    HYP : 'H',
}

# Prefix for the names of learned tactics
TACTIC_PREFIX = 'custom'

# Keywords of the trace format, quoted when used as names
RESERVED = frozenset(['proof', 'tactic', 'init'])

# Ordering disciplines of the discovery worklist
WORKLIST_ORDERS = ('best', 'fifo', 'lifo')
