"""Tests for tdgmine.emit"""

from tdgmine.objects import Invocation, ProofScript, TacticDef, Corpus, goal, hyp
from tdgmine.parser import parse_corpus

from tdgmine.tests.tutils import make_rng, random_corpus

from tdgmine.emit import *

###################################################################################################
###################################################################################################

def test_format_name():

    assert format_name('intro') == 'intro'
    assert format_name('unfold eq in') == '"unfold eq in"'
    assert format_name('proof') == '"proof"'
    assert format_name('a"b') == '"a\\"b"'

def test_emit_proof(implication):

    text = emit_proof(implication)

    assert text.startswith('proof implication {\n  init [g:g0]\n')
    assert '  apply [h:H0, g:g3] -> [g:g4, g:g5]\n' in text
    assert text.endswith('}\n')

def test_emit_corpus(implication, motivating, tactics):

    for corpus in [Corpus([implication]), motivating, tactics]:
        assert parse_corpus(emit_corpus(corpus)) == corpus

    combined = Corpus(motivating.proofs, tactics.tactics)
    text = emit_corpus(combined)
    assert text.index('tactic myTac ') < text.index('proof eq_sym')
    assert parse_corpus(text) == combined

def test_emit_corpus_empty():

    assert emit_corpus(Corpus()) == ''

def test_emit_corpus_random():

    rng = make_rng(11)
    for _ in range(1000):
        corpus = random_corpus(rng)
        assert parse_corpus(emit_corpus(corpus)) == corpus

def test_emit_ltac():

    tactic = TacticDef('t', [hyp('H0'), goal('g0')], [hyp('H1'), goal('g1')],
                       [Invocation('red in', [hyp('H0')], [hyp('H1')]),
                        Invocation('rewrite', [hyp('H1'), goal('g0')], [goal('g1')])])

    assert emit_ltac(tactic) == 'Ltac t H0 := red in H0; rewrite H1.'

def test_emit_ltac_branches(newtac):

    tactic = TacticDef('custom0', [hyp('H0'), hyp('H1'), goal('g0')], [goal('g2')],
                       [Invocation('apply', [hyp('H0'), goal('g0')], [goal('g1'), goal('g2')]),
                        Invocation('exact', [hyp('H1'), goal('g1')], [])])

    assert emit_ltac(tactic) == 'Ltac custom0 H0 H1 := apply H0; [exact H1 | idtac].'
    assert emit_ltac(newtac) == 'Ltac newTac h h1 := apply h h1; exact h2.'
