"""Tests for tdgmine.embedding"""

from tdgmine.parser import parse_corpus
from tdgmine.tdg import Tdg, TacticTdg, build_proof_tdg, build_tactic_tdg

from tdgmine.tests.tutils import make_rng, random_script, random_rooted_set, relabel, \
    brute_force_witnesses

from tdgmine.embedding import *

###################################################################################################
###################################################################################################

def _apply_exact(out_slot=0):
    """Pattern of an apply feeding one of its goals to an exact."""

    pattern = Tdg()
    pattern.add_node(0, 'apply', (('h', 'g'), ('g', 'g')))
    pattern.add_node(1, 'exact', (('h', 'g'), ()))
    pattern.add_edge(0, 1, out_slot, 1)

    return pattern

def test_seed_witnesses(implication):

    gp, _ = build_proof_tdg(implication)

    assert seed_witnesses('exact', gp) == [(5, ), (6, )]
    assert seed_witnesses('intro', gp) == [(1, ), (3, )]
    assert seed_witnesses('intro', gp, (('g', ), ('h', 'g'))) == [(1, ), (3, )]
    assert seed_witnesses('intro', gp, (('g', ), ('g', ))) == []
    assert seed_witnesses('auto', gp) == []

def test_extend_witnesses(implication):

    gp, _ = build_proof_tdg(implication)

    assert extend_witnesses((4, ), _apply_exact(0), gp) == [(4, 5)]
    assert extend_witnesses((4, ), _apply_exact(1), gp) == [(4, 6)]

    # an edge label absent from the proof
    pattern = Tdg()
    pattern.add_node(0, 'destruct', (('h', 'g'), ('h', 'h', 'g')))
    pattern.add_node(1, 'exact', (('h', 'g'), ()))
    pattern.add_edge(0, 1, 2, 0)
    assert extend_witnesses((2, ), pattern, gp) == []

    # an edge only growth keeps or drops the witness
    pattern = _apply_exact(0)
    assert extend_witnesses((4, 5), pattern, gp) == [(4, 5)]
    assert extend_witnesses((4, 6), pattern, gp) == []

def test_enumerate_witnesses(implication, disjunction, newtac, mytac2):

    gp, _ = build_proof_tdg(disjunction)
    assert enumerate_witnesses(build_tactic_tdg(newtac), gp) == [(5, 7), (8, 10)]
    assert enumerate_witnesses(build_tactic_tdg(newtac), gp, limit=1) == [(5, 7)]

    gp, _ = build_proof_tdg(implication)
    assert enumerate_witnesses(build_tactic_tdg(mytac2), gp) == [(3, 4, 5)]

def test_verify_embedding(implication, mytac, mytac2):

    gp, _ = build_proof_tdg(implication)

    assert verify_embedding((3, 4, 5), build_tactic_tdg(mytac2), gp)
    assert not verify_embedding((3, 4, 6), build_tactic_tdg(mytac2), gp)
    assert not verify_embedding((1, 4, 5), build_tactic_tdg(mytac2), gp)
    assert not verify_embedding((2, 3, 4), build_tactic_tdg(mytac), gp)
    assert not verify_embedding((3, 3, 5), build_tactic_tdg(mytac2), gp)

def test_is_collapsible(implication, mytac2):

    gp, _ = build_proof_tdg(implication)
    assert is_collapsible((3, 4, 5), build_tactic_tdg(mytac2), gp)

    # a path between image nodes leaves the image
    text = """
    proof p {
      init [g:g0]
      intro [g:g0] -> [h:H, g:g1]
      red [h:H] -> [h:H1]
      rewrite [h:H1, g:g1] -> [g:g2]
      auto [g:g2] -> []
    }
    """
    gp, _ = build_proof_tdg(parse_corpus(text).proofs[0])
    pattern = Tdg()
    pattern.add_node(0, 'intro', (('g', ), ('h', 'g')))
    pattern.add_node(1, 'rewrite', (('h', 'g'), ('g', )))
    pattern.add_edge(0, 1, 1, 1)
    assert verify_embedding((1, 3), pattern, gp)
    assert not is_collapsible((1, 3), pattern, gp)

    # a proof edge between image nodes missing from the pattern
    pattern = Tdg()
    pattern.add_node(0, 'intro', (('g', ), ('h', 'g')))
    pattern.add_node(1, 'red', (('h', ), ('h', )))
    pattern.add_node(2, 'rewrite', (('h', 'g'), ('g', )))
    pattern.add_edge(0, 1, 0, 0)
    pattern.add_edge(1, 2, 0, 0)
    assert verify_embedding((1, 2, 3), pattern, gp)
    assert not is_collapsible((1, 2, 3), pattern, gp)

    pattern.add_edge(0, 2, 1, 1)
    assert is_collapsible((1, 2, 3), pattern, gp)

def test_is_contractible(implication, disjunction, newtac, mytac2):

    gp, _ = build_proof_tdg(implication)
    assert is_contractible((3, 4, 5), build_tactic_tdg(mytac2), gp)

    # the apply goal feeding the second exact becomes a formal output
    assert is_contractible((4, 5), _apply_exact(0), gp)

    gp, _ = build_proof_tdg(disjunction)
    tactic = build_tactic_tdg(newtac)
    assert all(is_contractible(wit, tactic, gp) for wit in [(5, 7), (8, 10)])

def test_is_contractible_interface():

    text = """
    tactic narrow [g:g] -> [g:g2] {
      split [g:g] -> [g:g1, g:g2]
      auto [g:g1] -> []
    }
    proof p {
      init [g:g0]
      split [g:g0] -> [g:g1, g:g2]
      auto [g:g1] -> []
      auto [g:g2] -> []
    }
    """
    corpus = parse_corpus(text)
    gp, _ = build_proof_tdg(corpus.proofs[0])
    tactic = build_tactic_tdg(corpus.tactics[0])

    assert is_collapsible((1, 2), tactic, gp)
    assert is_contractible((1, 2), tactic, gp)

    # a goal the declared interface does not export
    narrowed = TacticTdg(tactic.body, tactic.entries, [], (tactic.signature[0], ()))
    assert not is_contractible((1, 2), narrowed, gp)

def test_find_embedding(disjunction, newtac):

    gp, _ = build_proof_tdg(disjunction)
    tactic = build_tactic_tdg(newtac)

    assert find_embedding(tactic, gp) == (5, 7)
    assert find_embedding(tactic, gp, excluded=[5]) == (8, 10)
    assert find_embedding(tactic, gp, excluded=[7, 10]) is None

def test_contraction_is_acyclic(motivating):

    gp, _ = build_proof_tdg(motivating.get_proof('eq_sym'))

    assert contraction_is_acyclic(gp, [{5, 7, 8, 11}])
    assert contraction_is_acyclic(gp, [{2, 4}, {6, 9}])
    # merging red with the rewrite after destruct puts destruct on a cycle
    assert not contraction_is_acyclic(gp, [{2, 9}])

def test_no_path_between_unrelated_steps(motivating):

    gp, _ = build_proof_tdg(motivating.get_proof('eq_sym'))

    assert gp.label(6) == 'red' and gp.label(7) == 'unfold'
    assert 7 not in gp.descendants(6)
    assert 6 not in gp.descendants(7)

def test_enumerate_witnesses_random():

    rng = make_rng(8)
    for ind in range(200):
        source = random_script(rng, 'a', rng.randint(2, 8))
        target = random_script(rng, 'b', rng.randint(2, 8))
        source_gp, _ = build_proof_tdg(source)
        gp, _ = build_proof_tdg(target)
        pattern = relabel(source_gp, random_rooted_set(rng, source_gp))

        grown = seed_witnesses(pattern.label(0), gp, pattern.signature(0))
        for size in range(2, len(pattern) + 1):
            prefix = pattern.subgraph(range(size))
            grown = [new for wit in grown for new in extend_witnesses(wit, prefix, gp)]

        assert sorted(grown) == brute_force_witnesses(pattern, gp)
        assert sorted(enumerate_witnesses(pattern, gp)) == sorted(grown)
