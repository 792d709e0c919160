"""Run configuration for tactic discovery."""

from dataclasses import dataclass, fields, replace

from tdgmine.info import WORKLIST_ORDERS

###################################################################################################
###################################################################################################

@dataclass(frozen=True)
class Config:
    """Settings for learning tactics.

    Attributes
    ----------
    min_frequency : int
        Minimum number of disjoint occurrences for a candidate to be kept.
    min_effectiveness : int
        Minimum effectiveness for a candidate to be returned.
    max_tactic_size : int or None
        Largest tactic body explored. None means unlimited.
    max_tactics : int or None
        Largest library learned. None means unlimited.
    time_limit : float or None
        Seconds allowed for one search, after which the best found so far is returned.
    max_witnesses : int or None
        Cap on stored witnesses per proof for one candidate.
    use_pruning : bool
        Whether to prune candidates by their upper bound.
    use_slots : bool
        Whether grammar productions keep the slots they link. Without them, every
        kind compatible choice of slots is tried when growing a candidate.
    worklist_order : {'best', 'fifo', 'lifo'}
        Order in which candidates are taken from the worklist.
    train_fraction : float
        Share of proofs put in the training split, strictly between 0 and 1.
    seed : int
        Seed for the train / test split.
    verbose : bool
        Whether to print progress.
    """

    min_frequency: int = 2
    min_effectiveness: int = 1
    max_tactic_size: int = None
    max_tactics: int = None
    time_limit: float = None
    max_witnesses: int = None
    use_pruning: bool = True
    use_slots: bool = True
    worklist_order: str = 'best'
    train_fraction: float = 0.65
    seed: int = 0
    verbose: bool = False

    def __post_init__(self):

        if self.min_frequency < 1:
            raise ValueError('min_frequency must be at least 1')
        if self.worklist_order not in WORKLIST_ORDERS:
            raise ValueError('unknown worklist order: {}'.format(self.worklist_order))
        if not 0.0 < self.train_fraction < 1.0:
            raise ValueError('train_fraction must be strictly between 0 and 1')

    def update(self, **kwargs):
        """Return a copy with the given non-None values replaced."""

        return replace(self, **{key : val for key, val in kwargs.items() if val is not None})


DEFAULTS = Config()


def make_config(settings=None):
    """Make a Config from a dictionary of settings.

    Parameters
    ----------
    settings : dict, optional
        Settings, keyed by field name in lower or upper case.

    Returns
    -------
    Config
        Configuration, with defaults for missing settings.
    """

    names = {fld.name for fld in fields(Config)}

    kwargs = {}
    for key, val in (settings or {}).items():
        key = key.lower()
        if key not in names:
            raise ValueError('unknown setting: {}'.format(key))
        kwargs[key] = val

    return Config(**kwargs)
