"""Baseline tactic learning by anti-unification of consecutive invocations."""

from dataclasses import dataclass

from tdgmine.objects import Invocation, ProofScript, TacticDef, Corpus
from tdgmine.settings import DEFAULTS
from tdgmine.check import check_script, check_tactic
from tdgmine.tdg import NameAllocator, build_proof_tdg
from tdgmine.refactor import check_tactic_name
from tdgmine.discovery import next_tactic_name
from tdgmine.utils import print_status

###################################################################################################
###################################################################################################

@dataclass(frozen=True)
class Generalization:
    """A sequence of invocations with their arguments replaced by parameters.

    Attributes
    ----------
    names : tuple of str
        Tactic names, in order.
    signatures : tuple
        Signature of each invocation.
    refs : tuple of tuple of (tuple, tuple)
        Parameter indices of the inputs and outputs of each invocation.
    kinds : tuple of str
        Kind of each parameter.
    """

    names: tuple
    signatures: tuple
    refs: tuple
    kinds: tuple

    def __len__(self):
        return len(self.names)

    @property
    def n_params(self):
        return len(self.kinds)


@dataclass(frozen=True)
class PeanoTactic:
    """A baseline tactic: its definition and the generalization it matches."""

    tactic: TacticDef
    generalization: Generalization
    score: int


def anti_unify(seq1, seq2):
    """Least general generalization of two invocation sequences.

    Parameters
    ----------
    seq1, seq2 : list of Invocation
        Sequences to generalize.

    Returns
    -------
    Generalization or None
        Generalization, with one parameter per distinct pair of aligned arguments,
        or None if the sequences differ in length, names or signatures.
    """

    if not seq1 or len(seq1) != len(seq2):
        return None

    params = {}
    refs = []
    for inv1, inv2 in zip(seq1, seq2):
        if inv1.name != inv2.name or inv1.signature != inv2.signature:
            return None
        ins = tuple(params.setdefault(pair, len(params)) for pair in zip(inv1.inputs, inv2.inputs))
        outs = tuple(params.setdefault(pair, len(params))
                     for pair in zip(inv1.outputs, inv2.outputs))
        refs.append((ins, outs))

    kinds = tuple(pair[0].kind for pair in sorted(params, key=params.get))

    return Generalization(tuple(inv.name for inv in seq1), tuple(inv.signature for inv in seq1),
                          tuple(refs), kinds)


def match_generalization(gen, seq):
    """Bind the parameters of a generalization to a sequence, or return None."""

    if len(seq) != len(gen):
        return None

    binding = {}
    for inv, name, signature, (ins, outs) in zip(seq, gen.names, gen.signatures, gen.refs):
        if inv.name != name or inv.signature != signature:
            return None
        for param, element in zip(ins + outs, inv.inputs + inv.outputs):
            if binding.setdefault(param, element) != element:
                return None

    return binding


def _contiguous(script):
    """For each invocation, whether it stays in the branch of the previous invocation."""

    paths = build_proof_tdg(script)[1].paths
    steps = [False]
    for node in range(2, len(script.body) + 1):
        prev = paths[node - 1]
        steps.append(paths[node][:len(prev)] == prev)

    return steps


def _segments(script, contiguous, length):
    """Start positions of the branch respecting segments of a given length."""

    starts = []
    for start in range(len(script.body) - length + 1):
        if all(contiguous[start + 1:start + length]):
            starts.append(start)

    return starts


def make_tactic(gen, name):
    """Make a tactic definition from a generalization.

    Parameters
    ----------
    gen : Generalization
        Generalization to turn into a tactic.
    name : str
        Name of the tactic.

    Returns
    -------
    TacticDef or None
        Tactic, or None if the generalization does not make a valid tactic.
    """

    names = NameAllocator()
    elements = [names.fresh(kind) for kind in gen.kinds]

    produced = set()
    for _, outs in gen.refs:
        produced.update(outs)

    inputs = [elements[param] for param in range(gen.n_params) if param not in produced]
    goals_used = {param for ins, _ in gen.refs for param in ins}
    outputs = [elements[param] for param in range(gen.n_params) if param in produced and
               (elements[param].is_hyp or param not in goals_used)]

    body = [Invocation(inv_name, [elements[param] for param in ins],
                       [elements[param] for param in outs])
            for inv_name, (ins, outs) in zip(gen.names, gen.refs)]

    tactic = TacticDef(name, inputs, outputs, body)

    return tactic if check_tactic(tactic).valid else None


def _call_for(tactic, gen, binding):
    """Invocation of a baseline tactic for one bound match."""

    names = NameAllocator()
    params = {names.fresh(kind).name : ind for ind, kind in enumerate(gen.kinds)}
    return Invocation(tactic.name, [binding[params[el.name]] for el in tactic.formal_inputs],
                      [binding[params[el.name]] for el in tactic.formal_outputs])


def peano_refactor(ptactic, script):
    """Refactor a script by replacing matching consecutive invocations with the tactic.

    Returns
    -------
    script : ProofScript
        Refactored script.
    applications : int
        Number of replacements made.
    """

    gen, length = ptactic.generalization, len(ptactic.generalization)
    contiguous = _contiguous(script)

    body, applications = list(script.body), 0
    ind, out = 0, []
    while ind < len(body):
        segment = body[ind:ind + length]
        binding = match_generalization(gen, segment) \
            if all(contiguous[ind + 1:ind + length]) else None
        if binding is not None:
            call = _call_for(ptactic.tactic, gen, binding)
            trial = ProofScript(script.name, script.init, out + [call] + body[ind + length:])
            if check_script(trial).valid:
                out.append(call)
                applications += 1
                ind += length
                continue
        out.append(body[ind])
        ind += 1

    if not applications:
        return script, 0

    return ProofScript(script.name, script.init, out), applications


def peano_refactor_corpus(ptactic, corpus):
    """Refactor every proof of a corpus with a baseline tactic, and add the tactic to it.

    Returns
    -------
    corpus : Corpus
        Refactored corpus.
    applications : int
        Total number of replacements.
    """

    check_tactic_name(ptactic.tactic.name, corpus)

    proofs, applications = [], 0
    for script in corpus.proofs:
        new, count = peano_refactor(ptactic, script)
        proofs.append(new)
        applications += count

    return Corpus(proofs, corpus.tactics + (ptactic.tactic, )), applications


def _generalizations(corpus):
    """All generalizations of aligned branch respecting segments of every pair of proofs."""

    proofs = corpus.proofs
    contiguous = [_contiguous(script) for script in proofs]

    found = {}
    for ind1 in range(len(proofs)):
        for ind2 in range(ind1 + 1, len(proofs)):
            body1, body2 = proofs[ind1].body, proofs[ind2].body
            for start1 in range(len(body1)):
                for start2 in range(len(body2)):
                    length = 1
                    while start1 + length < len(body1) and start2 + length < len(body2) and \
                        contiguous[ind1][start1 + length] and contiguous[ind2][start2 + length]:
                        length += 1
                        gen = anti_unify(body1[start1:start1 + length],
                                         body2[start2:start2 + length])
                        if gen is None:
                            break
                        found.setdefault(gen, len(found))

    return found


def peano_learn_tactic(corpus, name=None, verbose=False):
    """Learn the best scoring baseline tactic of a corpus.

    Parameters
    ----------
    corpus : Corpus
        Corpus of valid proofs.
    name : str, optional
        Name for the tactic.
    verbose : bool, optional, default: False
        Whether to print progress.

    Returns
    -------
    PeanoTactic or None
        Tactic with the largest score, (length - 1) times the number of proofs it
        matches, which refactors at least one proof. Ties go to longer, then earlier
        found generalizations.
    """

    name = name or next_tactic_name(corpus)
    contiguous = [_contiguous(script) for script in corpus.proofs]

    scored = []
    for gen, order in _generalizations(corpus).items():
        count = 0
        for script, steps in zip(corpus.proofs, contiguous):
            starts = _segments(script, steps, len(gen))
            if any(match_generalization(gen, script.body[start:start + len(gen)]) is not None
                   for start in starts):
                count += 1
        scored.append(((len(gen) - 1) * count, len(gen), -order, gen))

    for score, _, _, gen in sorted(scored, key=lambda item: item[:3], reverse=True):
        tactic = make_tactic(gen, name)
        if tactic is None:
            continue
        ptactic = PeanoTactic(tactic, gen, score)
        if any(peano_refactor(ptactic, script)[1] for script in corpus.proofs):
            print_status(verbose, 'learned {} with score {}'.format(name, score), 1)
            return ptactic

    return None


def peano_learn_library(corpus, cfg=DEFAULTS, verbose=None):
    """Learn a library of baseline tactics, refactoring the corpus after each one.

    Returns
    -------
    library : list of PeanoTactic
        Learned tactics, in order.
    corpus : Corpus
        Refactored corpus.
    """

    verbose = cfg.verbose if verbose is None else verbose

    library = []
    while cfg.max_tactics is None or len(library) < cfg.max_tactics:
        ptactic = peano_learn_tactic(corpus, verbose=verbose)
        if ptactic is None:
            break
        corpus, _ = peano_refactor_corpus(ptactic, corpus)
        library.append(ptactic)

    return library, corpus


def peano_refactor_library(library, corpus):
    """Refactor a corpus with each baseline tactic of a library in turn.

    Returns
    -------
    corpus : Corpus
        Refactored corpus.
    usage : list of int
        Number of replacements made by each tactic.
    """

    usage = []
    for ptactic in library:
        corpus, count = peano_refactor_corpus(ptactic, corpus)
        usage.append(count)

    return corpus, usage
