"""Tests for tdgmine.baseline"""

from tdgmine.objects import Invocation, Corpus, goal, hyp
from tdgmine.parser import parse_corpus
from tdgmine.check import check_script, check_tactic
from tdgmine.measures import corpus_size
from tdgmine.discovery import learn_library

from tdgmine.baseline import *

###################################################################################################
###################################################################################################

SHARED_RUN = """
proof p1 {
  init [g:g0, h:P]
  intro [g:g0] -> [h:H, g:g1]
  apply [h:H, g:g1] -> [g:g2]
  assumption [g:g2] -> []
}
proof p2 {
  init [g:a, h:Q]
  intro [g:a] -> [h:x, g:b]
  apply [h:x, g:b] -> [g:c]
  assumption [g:c] -> []
}
proof p3 {
  init [g:s, h:R]
  split [g:s] -> [g:t, g:u]
  intro [g:t] -> [h:y, g:v]
  apply [h:y, g:v] -> [g:w]
  assumption [g:w] -> []
  auto [g:u] -> []
}
"""

STRAIGHT = """
proof c{} {{
  init [g:g0]
  intro [g:g0] -> [h:H, g:g1]
  intro [g:g1] -> [h:H0, g:g2]
  red [h:H] -> [h:H1]
  apply [h:H1, g:g2] -> [g:g3]
  exact [h:H0, g:g3] -> []
}}
"""

def _intros_rewrite(rewritten):

    return [Invocation('intros', [goal('g0')], [hyp('H'), hyp('H0'), hyp('H1'), goal('g1')]),
            Invocation('rewrite in', [hyp(rewritten), hyp('H1')], [hyp('H2')])]

def test_anti_unify():

    gen = anti_unify(_intros_rewrite('H0'), _intros_rewrite('H'))

    assert gen.names == ('intros', 'rewrite in')
    assert gen.n_params == 7
    # the rewritten hypothesis is the only position that varies
    assert gen.refs[1] == ((5, 3), (6, ))
    assert gen.kinds == ('g', 'h', 'h', 'h', 'g', 'h', 'h')

    same = anti_unify(_intros_rewrite('H0'), _intros_rewrite('H0'))
    assert same.n_params == 6
    assert same.refs[1] == ((2, 3), (5, ))

def test_anti_unify_mismatch(implication):

    body = implication.body
    assert anti_unify(body[:2], body[1:3]) is None
    assert anti_unify(body[:2], body[:3]) is None
    assert anti_unify([], []) is None

    other = [Invocation('intro', [goal('g0')], [goal('g1')])] + list(body[1:2])
    assert anti_unify(body[:2], other) is None

def test_match_generalization():

    gen = anti_unify(_intros_rewrite('H0'), _intros_rewrite('H'))
    binding = match_generalization(gen, _intros_rewrite('H0'))

    assert binding[5] == hyp('H0')
    assert binding[0] == goal('g0')
    assert match_generalization(gen, _intros_rewrite('H0')[:1]) is None

def test_make_tactic():

    gen = anti_unify(_intros_rewrite('H0'), _intros_rewrite('H'))
    tactic = make_tactic(gen, 't')

    assert check_tactic(tactic).valid
    assert tactic.signature == (('g', 'h'), ('h', 'h', 'h', 'g', 'h'))

def test_peano_learn_tactic():

    corpus = parse_corpus(SHARED_RUN)
    ptactic = peano_learn_tactic(corpus)

    assert ptactic.score == 6
    assert ptactic.tactic.name == 'custom0'
    assert [inv.name for inv in ptactic.tactic.body] == ['intro', 'apply', 'assumption']

def test_peano_learn_tactic_none(implication, disjunction):

    assert peano_learn_tactic(Corpus([implication, disjunction])) is None
    assert peano_learn_tactic(Corpus([implication])) is None

def test_peano_learn_tactic_motivating(motivating):

    ptactic = peano_learn_tactic(motivating)

    assert ptactic.score == 2
    assert [inv.name for inv in ptactic.tactic.body] == ['unfold', 'intros']

def test_peano_refactor():

    corpus = parse_corpus(SHARED_RUN)
    ptactic = peano_learn_tactic(corpus)

    script, count = peano_refactor(ptactic, corpus.get_proof('p3'))
    assert count == 1
    assert check_script(script).valid
    assert [inv.name for inv in script.body] == ['split', 'custom0', 'auto']

    new, count = peano_refactor(ptactic, corpus.get_proof('p1'))
    assert count == 1
    # each parameter binds its own element: the goal in, the introduced hypothesis out
    assert new.body == (Invocation('custom0', [goal('g0')], [hyp('H')]), )

    new, _ = peano_refactor(ptactic, corpus.get_proof('p2'))
    assert new.body == (Invocation('custom0', [goal('a')], [hyp('x')]), )

def test_peano_refactor_corpus():

    corpus = parse_corpus(SHARED_RUN)
    ptactic = peano_learn_tactic(corpus)
    new, count = peano_refactor_corpus(ptactic, corpus)

    assert count == 3
    assert corpus_size(new) == 5
    assert new.tactic_names == ('custom0', )

def test_peano_learn_library():

    corpus = parse_corpus(''.join(STRAIGHT.format(ind) for ind in range(4)))
    library, new = peano_learn_library(corpus)

    assert len(library) == 1
    assert len(library[0].tactic.body) == 5
    assert corpus_size(new) == 4

    assert peano_learn_library(Corpus()) == ([], Corpus())

def test_peano_against_tdg(motivating):

    plibrary, pcorpus = peano_learn_library(motivating)
    _, corpus = learn_library(motivating)

    # red and rewrite never follow each other, so the baseline cannot pair them
    for ptactic in plibrary:
        names = [inv.name for inv in ptactic.tactic.body]
        assert not ('red' in names and 'rewrite' in names)

    assert corpus_size(pcorpus) > corpus_size(corpus)

def test_peano_refactor_library():

    corpus = parse_corpus(SHARED_RUN)
    library, _ = peano_learn_library(corpus)
    new, usage = peano_refactor_library(library, corpus)

    assert usage == [3]
    assert corpus_size(new) == 5
