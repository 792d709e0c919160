"""Tests for tdgmine.parser"""

from pytest import raises

from tdgmine.objects import Invocation, goal, hyp
from tdgmine.errors import ParseError, DuplicateId, DuplicateProofName, DuplicateTacticName

from tdgmine.parser import *

###################################################################################################
###################################################################################################

def test_parse_corpus(data_path):

    corpus = parse_corpus((data_path / 'implication.trace').read_text())

    assert len(corpus.proofs) == 1
    script = corpus.proofs[0]
    assert script.name == 'implication'
    assert script.init == (goal('g0'), )
    assert len(script.body) == 6
    assert script.body[0] == Invocation('intro', [goal('g0')], [hyp('H'), goal('g1')])
    assert script.body[-1] == Invocation('exact', [hyp('h2'), goal('g5')], [])

def test_parse_corpus_tactics(data_path):

    corpus = parse_corpus((data_path / 'tactics.trace').read_text())

    assert corpus.proofs == ()
    assert corpus.tactic_names == ('myTac', 'myTac2', 'newTac')
    assert corpus.tactics[2].signature == (('h', 'h', 'g'), ('h', ))

def test_parse_corpus_quoted():

    text = 'proof "my proof" {\n  init [g:g0, h:H]\n  "rewrite <-" [h:H, g:g0] -> [g:g1]\n' \
        '  "say \\"hi\\"" [g:g1] -> []\n}\n'
    script = parse_corpus(text).proofs[0]

    assert script.name == 'my proof'
    assert script.body[0].name == 'rewrite <-'
    assert script.body[1].name == 'say "hi"'

def test_parse_corpus_empty():

    corpus = parse_corpus('')
    assert corpus.proofs == () and corpus.tactics == ()

    corpus = parse_corpus('# nothing but a comment\n\n')
    assert corpus.proofs == ()

def test_parse_corpus_errors():

    # missing arrow on line 3
    text = 'proof p {\n  init [g:g0]\n  auto [g:g0] []\n}\n'
    with raises(ParseError) as error:
        parse_corpus(text)
    assert error.value.line == 3

    with raises(ParseError):
        parse_corpus('proof p {\n  init [g:g0]\n  auto [x:g0] -> []\n}\n')

    with raises(ParseError):
        parse_corpus('proof p {\n  init [g:g0]\n')

def test_parse_corpus_duplicates():

    text = 'proof p {\n  init [g:g0]\n  intro [g:g0] -> [h:H, g:g0]\n}\n'
    with raises(DuplicateId) as error:
        parse_corpus(text)
    assert error.value.name == 'g0'
    assert error.value.line == 3

    text = 'proof p {\n  init [g:g0]\n  auto [g:g0] -> []\n}\n'
    with raises(DuplicateProofName):
        parse_corpus(text + text)

    text = 'tactic t [g:g] -> [] {\n  auto [g:g] -> []\n}\n'
    with raises(DuplicateTacticName):
        parse_corpus(text + text)

def test_parse_corpus_unvalidated():

    # parsing checks syntax and freshness only, not goal usage
    text = 'proof p {\n  init [g:g0]\n  exact [h:H, g:g0] -> []\n}\n'
    script = parse_corpus(text).proofs[0]

    assert script.body[0].inputs == (hyp('H'), goal('g0'))
