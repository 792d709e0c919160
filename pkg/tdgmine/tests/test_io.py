"""Tests for tdgmine.io"""

from tdgmine.objects import Corpus
from tdgmine.settings import DEFAULTS

from tdgmine.tests.conftest import CONFIG_PATH

from tdgmine.io import *

###################################################################################################
###################################################################################################

def test_save_load_corpus(tmp_path, motivating, tactics):

    corpus = Corpus(motivating.proofs, tactics.tactics)
    file_path = tmp_path / 'corpus.trace'

    save_corpus(corpus, file_path)
    assert load_corpus(file_path) == corpus
    assert b'\r\n' not in file_path.read_bytes()

def test_load_config(tmp_path):

    assert load_config(CONFIG_PATH / 'learn.yaml') == DEFAULTS

    file_path = tmp_path / 'config.yaml'
    file_path.write_text('MIN_FREQUENCY: 3\nworklist_order: fifo\n')
    cfg = load_config(file_path)
    assert cfg.min_frequency == 3
    assert cfg.worklist_order == 'fifo'
    assert cfg.max_tactics is None

    file_path.write_text('')
    assert load_config(file_path) == DEFAULTS

def test_save_load_report(tmp_path):

    report = {'n_tactics' : 2, 'usage' : [2, 3], 'compression_power' : '1.43'}
    file_path = tmp_path / 'report.yaml'

    save_report(report, file_path)
    assert load_report(file_path) == report
    assert file_path.read_text().startswith('compression_power')

def test_load_utf8(tmp_path):

    config_file = tmp_path / 'config.yaml'
    config_file.write_bytes('# réglages\nmin_frequency: 3\n'.encode('utf-8'))
    assert load_config(config_file).min_frequency == 3

    report_file = tmp_path / 'report.yaml'
    report_file.write_bytes('corpus: théorèmes\n'.encode('utf-8'))
    assert load_report(report_file) == {'corpus' : 'théorèmes'}

def test_get_files(tmp_path):

    for name in ['b.trace', 'a.trace', 'notes.txt']:
        (tmp_path / name).write_text('')
    (tmp_path / 'sub.trace').mkdir()

    assert get_files(tmp_path) == ['a.trace', 'b.trace']
    assert get_files(tmp_path, '.txt') == ['notes.txt']
