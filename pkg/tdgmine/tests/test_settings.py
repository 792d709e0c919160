"""Tests for tdgmine.settings"""

from pytest import raises

from tdgmine.settings import *

###################################################################################################
###################################################################################################

def test_config():

    cfg = Config()

    assert cfg.min_frequency == 2
    assert cfg.min_effectiveness == 1
    assert cfg.worklist_order == 'best'
    assert cfg == DEFAULTS

    with raises(ValueError):
        Config(worklist_order='random')
    with raises(ValueError):
        Config(min_frequency=0)
    with raises(ValueError):
        Config(train_fraction=1.5)
    with raises(ValueError):
        Config(train_fraction=1.0)
    with raises(ValueError):
        Config(train_fraction=0.0)

def test_config_update():

    cfg = DEFAULTS.update(min_frequency=3, max_tactics=None)

    assert cfg.min_frequency == 3
    assert cfg.max_tactics is None
    assert DEFAULTS.min_frequency == 2

def test_make_config():

    assert make_config() == DEFAULTS
    assert make_config({'MAX_TACTICS' : 4}).max_tactics == 4
    assert make_config({'use_pruning' : False}).use_pruning is False

    with raises(ValueError):
        make_config({'unknown' : 1})
