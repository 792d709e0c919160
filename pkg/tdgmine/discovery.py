"""Discovery of custom tactics by a pruned search over the tactic grammar."""

import time
import heapq
import itertools
from collections import deque
from dataclasses import dataclass
from math import factorial, prod

import networkx as nx

from tdgmine.info import TACTIC_PREFIX
from tdgmine.objects import Invocation, TacticDef
from tdgmine.settings import DEFAULTS
from tdgmine.tdg import Tdg, TacticTdg, NameAllocator, build_proof_tdg
from tdgmine.grammar import Production, learn_grammar, slot_choices
from tdgmine.embedding import seed_witnesses, extend_witnesses, is_contractible
from tdgmine.refactor import select_disjoint, refactor_corpus
from tdgmine.utils import print_status

###################################################################################################
###################################################################################################

# Largest number of tie orderings tried when computing a canonical form
MAX_TIE_ORDERINGS = 40320


class Candidate():
    """A tactic being grown, with its witnesses in every proof.

    Parameters
    ----------
    graph : Tdg
        Body graph, nodes numbered from 0 in order of addition. Node 0 is the seed.
    witnesses : tuple of tuple
        Witnesses of the body in each proof, one tuple of witnesses per proof.
    """

    def __init__(self, graph, witnesses):
        """Initialize a candidate."""

        self.graph = graph
        self.witnesses = tuple(tuple(wits) for wits in witnesses)

        self._canonical = None
        self._tactic = None
        self.cache = {}


    def __len__(self):
        return len(self.graph)


    def __repr__(self):
        return 'Candidate({})'.format(', '.join(self.graph.label(node)
                                                for node in self.graph.nodes))


    @property
    def n_witnesses(self):
        return sum(len(wits) for wits in self.witnesses)


    @property
    def canonical(self):
        if self._canonical is None:
            self._canonical = canonical_form(self.graph)
        return self._canonical


    @property
    def tactic(self):
        """Tactic graph of the candidate, with the general interface."""

        if self._tactic is None:
            self._tactic = TacticTdg.from_body(self.graph)
        return self._tactic


def canonical_form(graph):
    """Canonical encoding of a labelled graph, equal for isomorphic graphs.

    Parameters
    ----------
    graph : Tdg
        Graph to encode.

    Returns
    -------
    tuple
        Node keys in canonical order, then the edges between canonical positions.

    Notes
    -----
    Nodes are ordered by Weisfeiler-Lehman colour, and ties are broken by trying
    every ordering within tied groups, keeping the smallest encoding. Beyond
    MAX_TIE_ORDERINGS orderings only the first is used.
    """

    simple = nx.DiGraph()
    for node in graph.nodes:
        simple.add_node(node, label=repr(graph.key(node)))
    for src, dst in set((edge.src, edge.dst) for edge in graph.edges()):
        simple.add_edge(src, dst, label=repr(sorted(graph.edge_labels(src, dst))))

    hashes = nx.weisfeiler_lehman_subgraph_hashes(simple, edge_attr='label', node_attr='label',
                                                  iterations=max(len(simple), 1))
    colours = {node : (graph.key(node), tuple(hashes[node])) for node in graph.nodes}

    groups = [list(group) for _, group in
              itertools.groupby(sorted(graph.nodes, key=colours.get), key=colours.get)]

    if prod(factorial(len(group)) for group in groups) > MAX_TIE_ORDERINGS:
        orderings = [[node for group in groups for node in group]]
    else:
        orderings = (list(itertools.chain(*perm)) for perm in
                     itertools.product(*(itertools.permutations(group) for group in groups)))

    best = None
    for order in orderings:
        position = {node : ind for ind, node in enumerate(order)}
        code = (tuple(graph.key(node) for node in order),
                tuple(sorted((position[edge.src], position[edge.dst], edge.out_slot, edge.in_slot)
                             for edge in graph.edges())))
        if best is None or code < best:
            best = code

    return best


def _count_disjoint(witnesses, target):
    """Count pairwise disjoint witness images across proofs, stopping at a target."""

    count = 0
    for wits in witnesses:
        if count >= target:
            break
        count += len(select_disjoint(wits, limit=target - count))

    return count


def init_worklist(grammar, tdgs, cfg=DEFAULTS):
    """Make a single node candidate for every source of the grammar.

    Parameters
    ----------
    grammar : Grammar
        Productions of the corpus.
    tdgs : list of Tdg
        Proof graphs.
    cfg : Config, optional
        Settings. Candidates with fewer than `min_frequency` occurrences are dropped.

    Returns
    -------
    list of Candidate
        Seed candidates, in source order.
    """

    worklist = []
    for label, signature in grammar.sources:
        witnesses = [seed_witnesses(label, gp, signature) for gp in tdgs]
        if sum(len(wits) for wits in witnesses) < cfg.min_frequency:
            continue
        graph = Tdg(label)
        graph.add_node(0, label, signature)
        worklist.append(Candidate(graph, witnesses))

    return worklist


def apply_production(candidate, node, target, production, tdgs, cfg=DEFAULTS):
    """Grow a candidate by one production applied at one of its nodes.

    Parameters
    ----------
    candidate : Candidate
        Candidate to grow.
    node : int
        Candidate node matching the production source.
    target : int or None
        Existing candidate node matching the production target, or None to add a new node.
    production : Production
        Production to apply. All of its edges are added.
    tdgs : list of Tdg
        Proof graphs.
    cfg : Config, optional
        Settings.

    Returns
    -------
    Candidate or None
        Grown candidate, or None if the growth is not possible or leaves fewer than
        `min_frequency` disjoint occurrences.
    """

    graph = candidate.graph
    if graph.key(node) != production.src:
        return None

    if target is None:
        if cfg.max_tactic_size is not None and len(graph) >= cfg.max_tactic_size:
            return None
        target = len(graph)
        graph = graph.copy()
        graph.add_node(target, *production.dst)
    else:
        if target == node or graph.key(target) != production.dst or \
            graph.edge_labels(node, target) or node in graph.descendants(target):
            return None
        graph = graph.copy()

    for out_slot, in_slot in production.theta:
        if graph.producer(target, in_slot) is not None:
            return None
        graph.add_edge(node, target, out_slot, in_slot)

    witnesses = []
    for wits, gp in zip(candidate.witnesses, tdgs):
        grown = [new for wit in wits for new in extend_witnesses(wit, graph, gp)]
        witnesses.append(grown[:cfg.max_witnesses] if cfg.max_witnesses else grown)

    if _count_disjoint(witnesses, cfg.min_frequency) < cfg.min_frequency:
        return None

    return Candidate(graph, witnesses)


def expand(candidate, grammar, tdgs, cfg=DEFAULTS, result=None):
    """All candidates one production away from a candidate.

    Parameters
    ----------
    candidate : Candidate
        Candidate to grow.
    grammar : Grammar
        Productions of the corpus.
    tdgs : list of Tdg
        Proof graphs.
    cfg : Config, optional
        Settings.
    result : SearchResult, optional
        Search record, whose count of attempted growths is updated.

    Returns
    -------
    list of Candidate
        Grown candidates, one per isomorphism class, sorted by canonical form.
    """

    found = {}
    for node in candidate.graph.nodes:
        for production in grammar.from_src(candidate.graph.key(node)):
            targets = [None] + [other for other in candidate.graph.nodes
                                if candidate.graph.key(other) == production.dst]
            for theta in slot_choices(production):
                concrete = Production(production.src, production.dst, theta)
                for target in targets:
                    if result is not None:
                        result.attempted += 1
                    grown = apply_production(candidate, node, target, concrete, tdgs, cfg)
                    if grown is not None:
                        found.setdefault(grown.canonical, grown)

    return [found[key] for key in sorted(found)]


def frequency(candidate, tdgs):
    """Number of disjoint contractible occurrences of a candidate.

    Per proof, this is the largest set of pairwise disjoint contractible
    witnesses that can be contracted together, as refactoring would.
    """

    if 'frequency' not in candidate.cache:
        count = 0
        for wits, gp in zip(candidate.witnesses, tdgs):
            valid = [wit for wit in wits if is_contractible(wit, candidate.tactic, gp)]
            count += len(select_disjoint(valid, gp))
        candidate.cache['frequency'] = count

    return candidate.cache['frequency']


def effectiveness(candidate, tdgs):
    """Number of invocations saved by refactoring with a candidate."""

    return (len(candidate) - 1) * frequency(candidate, tdgs)


def max_extend(node, gp):
    """Largest graph any extension rooted at a proof node can map into: its descendant closure."""

    return gp.subgraph(gp.descendants(node) | {node})


def upper_bound(candidate, tdgs, cfg=DEFAULTS):
    """Upper bound on the effectiveness of any extension of a candidate.

    Sums, over every stored witness, the size of the largest extension rooted
    at the image of the seed, less one.
    """

    key = ('upper_bound', cfg.max_tactic_size)
    if key not in candidate.cache:
        bound = 0
        for wits, gp in zip(candidate.witnesses, tdgs):
            for wit in wits:
                size = len(gp.descendants(wit[0])) + 1
                if cfg.max_tactic_size is not None:
                    size = min(size, cfg.max_tactic_size)
                bound += size - 1
        candidate.cache[key] = bound

    return candidate.cache[key]


def materialize(candidate, name):
    """Turn a candidate into a tactic definition.

    Parameters
    ----------
    candidate : Candidate
        Candidate to turn into a tactic.
    name : str
        Name of the tactic.

    Returns
    -------
    TacticDef
        Tactic with body invocations in topological order. Formal inputs are the
        open input slots; formal outputs are every hypothesis output and every goal
        output not consumed in the body.
    """

    graph = candidate.graph
    tactic = candidate.tactic
    names = NameAllocator()

    formals = []
    elements = {}
    for formal, node, slot in tactic.entries:
        if formal == len(formals):
            formals.append(names.fresh(tactic.signature[0][formal]))
        elements[('in', node, slot)] = formals[formal]

    body = []
    for node in graph.topological_order():
        in_kinds, out_kinds = graph.signature(node)
        outputs = [names.fresh(kind) for kind in out_kinds]
        for slot, element in enumerate(outputs):
            elements[('out', node, slot)] = element
        inputs = []
        for slot in range(len(in_kinds)):
            source = graph.producer(node, slot)
            inputs.append(elements[('out', ) + source] if source else elements[('in', node, slot)])
        body.append(Invocation(graph.label(node), inputs, outputs))

    outputs = [elements[('out', node, slot)] for node, slot, _ in tactic.exits]

    return TacticDef(name, formals, outputs, body)


@dataclass
class SearchResult:
    """Outcome of one tactic search.

    Attributes
    ----------
    tactic : TacticDef or None
        Best tactic found.
    candidate : Candidate or None
        Candidate the tactic was made from.
    effectiveness : int
        Effectiveness of the best candidate.
    explored : int
        Number of candidates scored.
    pruned : int
        Number of candidates dropped by their upper bound.
    attempted : int
        Number of productions tried when growing candidates.
    timed_out : bool
        Whether the search stopped on its time limit.
    """

    tactic: TacticDef = None
    candidate: Candidate = None
    effectiveness: int = 0
    explored: int = 0
    pruned: int = 0
    attempted: int = 0
    timed_out: bool = False


class Worklist():
    """Candidates waiting to be explored, in best-first, FIFO or LIFO order."""

    def __init__(self, order='best'):

        self.order = order
        self.items = [] if order != 'fifo' else deque()
        self.count = itertools.count()


    def __len__(self):
        return len(self.items)


    def push(self, candidate, bound):

        if self.order == 'best':
            heapq.heappush(self.items, (-bound, candidate.canonical, next(self.count), candidate))
        else:
            self.items.append(candidate)


    def pop(self):

        if self.order == 'best':
            return heapq.heappop(self.items)[-1]
        if self.order == 'fifo':
            return self.items.popleft()
        return self.items.pop()


def next_tactic_name(corpus, prefix=TACTIC_PREFIX):
    """First name of the form prefix + index not in use in a corpus."""

    used = set(corpus.tactic_names) | corpus.invoked_names()
    for ind in itertools.count():
        name = prefix + str(ind)
        if name not in used:
            return name


def search_tactic(corpus, cfg=DEFAULTS, name=None, scoring=None, verbose=None):
    """Search for the most effective tactic of a corpus.

    Parameters
    ----------
    corpus : Corpus
        Corpus of valid proofs.
    cfg : Config, optional
        Settings.
    name : str, optional
        Name for the learned tactic. Defaults to the next unused custom name.
    scoring : tuple of (callable, callable), optional
        Score and bound functions, called as f(candidate, tdgs). The bound must never be
        below the score of any extension. Defaults to effectiveness and upper_bound.
    verbose : bool, optional
        Whether to print progress. Defaults to the setting in `cfg`.

    Returns
    -------
    SearchResult
        Search outcome. Among candidates of equal score, the one with the smallest
        canonical form is kept.
    """

    verbose = cfg.verbose if verbose is None else verbose
    start = time.monotonic()

    if scoring is None:
        scoring = (effectiveness, lambda cand, tdgs: upper_bound(cand, tdgs, cfg))
    score, bound = scoring

    tdgs = [build_proof_tdg(script)[0] for script in corpus.proofs]
    grammar = learn_grammar(tdgs, cfg.use_slots)
    print_status(verbose, 'searching {} proofs with {} productions'.format(
        len(tdgs), len(grammar)), 1)

    worklist = Worklist(cfg.worklist_order)
    visited = set()
    for candidate in init_worklist(grammar, tdgs, cfg):
        visited.add(candidate.canonical)
        worklist.push(candidate, bound(candidate, tdgs))

    result = SearchResult()
    best_key = None
    while worklist:

        if cfg.time_limit is not None and time.monotonic() - start > cfg.time_limit:
            result.timed_out = True
            print_status(verbose, 'time limit reached', 2)
            break

        candidate = worklist.pop()
        if cfg.use_pruning and bound(candidate, tdgs) < result.effectiveness:
            result.pruned += 1
            continue

        result.explored += 1
        value = score(candidate, tdgs)
        if len(candidate) >= 2 and value >= cfg.min_effectiveness and \
            frequency(candidate, tdgs) >= cfg.min_frequency and \
            (value > result.effectiveness or \
             (value == result.effectiveness and
              (best_key is None or candidate.canonical < best_key))):
            result.candidate, result.effectiveness = candidate, value
            best_key = candidate.canonical
            print_status(verbose, 'new best: {} with effectiveness {}'.format(
                candidate, value), 2)

        for grown in expand(candidate, grammar, tdgs, cfg, result):
            if grown.canonical not in visited:
                visited.add(grown.canonical)
                worklist.push(grown, bound(grown, tdgs))

    if result.candidate is not None:
        result.tactic = materialize(result.candidate, name or next_tactic_name(corpus))

    print_status(verbose, 'explored {} candidates, pruned {}'.format(
        result.explored, result.pruned), 1)

    return result


def learn_tactic(corpus, cfg=DEFAULTS, name=None, scoring=None):
    """Learn the most effective tactic of a corpus.

    Parameters
    ----------
    corpus : Corpus
        Corpus of valid proofs.
    cfg : Config, optional
        Settings.
    name : str, optional
        Name for the tactic.
    scoring : tuple of (callable, callable), optional
        Score and bound functions. Defaults to effectiveness and upper_bound.

    Returns
    -------
    TacticDef or None
        Tactic with the largest effectiveness, or None if no candidate reaches
        `min_effectiveness`.
    """

    return search_tactic(corpus, cfg, name, scoring).tactic


@dataclass(frozen=True)
class LibraryStep:
    """One tactic learned while building a library."""

    tactic: TacticDef
    effectiveness: int
    applications: int
    size_before: int
    size_after: int


def learn_library(corpus, cfg=DEFAULTS, return_steps=False, verbose=None):
    """Learn a library of tactics, refactoring the corpus after each one.

    Parameters
    ----------
    corpus : Corpus
        Corpus of valid proofs.
    cfg : Config, optional
        Settings. Stops after `max_tactics` tactics, or when no tactic is found.
    return_steps : bool, optional, default: False
        Whether to also return a record of each step.
    verbose : bool, optional
        Whether to print progress. Defaults to the setting in `cfg`.

    Returns
    -------
    library : list of TacticDef
        Learned tactics, in order.
    corpus : Corpus
        Refactored corpus, with the library appended to its tactics.
    steps : list of LibraryStep
        Record of each step. Only returned if `return_steps` is True.
    """

    verbose = cfg.verbose if verbose is None else verbose

    library, steps = [], []
    while cfg.max_tactics is None or len(library) < cfg.max_tactics:

        print_status(verbose, 'learning tactic {}:'.format(len(library)), 0)
        result = search_tactic(corpus, cfg, verbose=verbose)
        if result.tactic is None:
            print_status(verbose, 'no further tactic found', 1)
            break

        new, outcomes = refactor_corpus(result.tactic, corpus, return_outcomes=True)
        step = LibraryStep(result.tactic, result.effectiveness,
                           sum(outcome.applications for outcome in outcomes),
                           sum(outcome.size_before for outcome in outcomes),
                           sum(outcome.size_after for outcome in outcomes))
        if step.size_before - step.size_after != step.effectiveness:
            print_status(verbose, 'warning: refactoring saved {} invocations, expected {}'.format(
                step.size_before - step.size_after, step.effectiveness), 1)
        print_status(verbose, 'learned {} (size {}), used {} times'.format(
            result.tactic.name, len(result.tactic), step.applications), 1)

        library.append(result.tactic)
        steps.append(step)
        corpus = new

    if return_steps:
        return library, corpus, steps
    return library, corpus
