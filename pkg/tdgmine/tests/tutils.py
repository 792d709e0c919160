"""Utilities for testing tdgmine: random corpora and brute force references."""

import random
import itertools

from tdgmine.objects import ProofElementId, Invocation, ProofScript, Corpus
from tdgmine.tdg import Tdg, build_proof_tdg
from tdgmine.embedding import enumerate_witnesses, is_contractible, verify_embedding
from tdgmine.refactor import select_disjoint
from tdgmine.discovery import Candidate, canonical_form, materialize

###################################################################################################
###################################################################################################

# Tactic table: number of goal inputs, number of hypothesis inputs, output kinds
TACTICS = {
    'intro' : (1, 0, ('h', 'g')),
    'rewrite' : (1, 1, ('g', )),
    'split' : (1, 0, ('g', 'g')),
    'red' : (0, 1, ('h', )),
    'exact' : (1, 1, ()),
    'auto' : (1, 0, ()),
}


def random_script(rng, name, max_steps=10):
    """Make a random valid proof script with at most max_steps invocations."""

    counts = {'g' : 1, 'h' : 1}
    init = [ProofElementId('g', 'g0'), ProofElementId('h', 'H0')]
    goals, hyps = [init[0]], [init[1]]

    def fresh(kind):
        element = ProofElementId(kind, '{}{}'.format('g' if kind == 'g' else 'H', counts[kind]))
        counts[kind] += 1
        return element

    body = []
    while goals:
        # every live goal still needs at least one step to close it
        room = max_steps - len(body) - len(goals)
        options = [tac for tac, (n_goals, n_hyps, outs) in sorted(TACTICS.items())
                   if n_goals <= len(goals) and 1 + outs.count('g') - n_goals <= room]
        tac = rng.choice(options or ['auto'])
        n_goals, n_hyps, outs = TACTICS[tac]

        inputs = [goals.pop(rng.randrange(len(goals))) for _ in range(n_goals)]
        inputs.extend(rng.choice(hyps) for _ in range(n_hyps))
        outputs = [fresh(kind) for kind in outs]
        goals.extend(el for el in outputs if el.is_goal)
        hyps.extend(el for el in outputs if el.is_hyp)
        body.append(Invocation(tac, inputs, outputs))

    return ProofScript(name, init, body)


def random_corpus(rng, max_proofs=4, max_steps=10):
    """Make a random corpus of valid proofs."""

    return Corpus([random_script(rng, 'p{}'.format(ind), rng.randint(2, max_steps))
                   for ind in range(rng.randint(1, max_proofs))])


def relabel(tdg, nodes):
    """Induced subgraph on some nodes, renumbered from 0 in topological order."""

    sub = tdg.subgraph(nodes)
    position = {node : ind for ind, node in enumerate(sub.topological_order())}

    new = Tdg()
    for node, ind in sorted(position.items(), key=lambda item: item[1]):
        new.add_node(ind, sub.label(node), sub.signature(node))
    for edge in sub.edges():
        new.add_edge(position[edge.src], position[edge.dst], edge.out_slot, edge.in_slot)

    return new


def random_rooted_set(rng, tdg, max_size=4):
    """Grow a random node set, every node reachable from the first within the set."""

    nodes = [rng.choice(tdg.body_nodes)]
    target = rng.randint(1, max_size)
    while len(nodes) < target:
        frontier = sorted({succ for node in nodes for succ in tdg.successors(node)} - set(nodes))
        if not frontier:
            break
        nodes.append(rng.choice(frontier))

    return nodes


def random_tactic(rng, script, name='mined', max_size=4):
    """Mine a random tactic from a proof, or None if the grown set has a single node."""

    gp, _ = build_proof_tdg(script)
    nodes = random_rooted_set(rng, gp, max_size)
    if len(nodes) < 2:
        return None

    return materialize(Candidate(relabel(gp, nodes), ()), name)


def count_disjoint(pattern, tdgs, target=2):
    """Number of pairwise disjoint witness images of a pattern, up to a target."""

    return sum(len(select_disjoint(enumerate_witnesses(pattern, gp), limit=target))
               for gp in tdgs)


def pattern_frequency(pattern, tdgs):
    """Frequency of a pattern, from its complete witness sets."""

    total = 0
    for gp in tdgs:
        valid = [wit for wit in enumerate_witnesses(pattern, gp)
                 if is_contractible(wit, pattern, gp)]
        total += len(select_disjoint(valid, gp))

    return total


def brute_force_best(corpus, min_frequency=2):
    """Largest effectiveness over the rooted node sets of every proof.

    Node sets are grown one successor at a time, and a set is only grown if its
    induced pattern has enough disjoint occurrences, as every subset reached on
    the way to a frequent pattern is itself frequent.
    """

    tdgs = [build_proof_tdg(script)[0] for script in corpus.proofs]

    scores, best = {}, 0
    for gp in tdgs:
        seen = set()
        stack = [frozenset([node]) for node in gp.body_nodes]
        while stack:
            nodes = stack.pop()
            if nodes in seen:
                continue
            seen.add(nodes)

            pattern = relabel(gp, nodes)
            code = canonical_form(pattern)
            if code not in scores:
                scores[code] = None
                if count_disjoint(pattern, tdgs, min_frequency) >= min_frequency:
                    freq = pattern_frequency(pattern, tdgs)
                    scores[code] = (len(pattern) - 1) * freq if freq >= min_frequency else 0
            if scores[code] is None:
                continue

            best = max(best, scores[code])
            for node in nodes:
                stack.extend(nodes | {succ} for succ in gp.successors(node) if succ not in nodes)

    return best


def brute_force_witnesses(pattern, gp):
    """All witnesses of a pattern, by checking every injective mapping."""

    return sorted(perm for perm in itertools.permutations(gp.body_nodes, len(pattern))
                  if verify_embedding(perm, pattern, gp))


def make_rng(seed):
    return random.Random(seed)
