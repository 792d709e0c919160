"""Refactoring proofs by contracting tactic embeddings."""

from dataclasses import dataclass

from tdgmine.objects import Corpus
from tdgmine.tdg import build_proof_tdg, build_tactic_tdg, induced_proof
from tdgmine.embedding import (enumerate_witnesses, find_embedding, is_contractible,
                               contraction_is_acyclic, as_tactic_tdg)
from tdgmine.errors import NotCollapsible, NameClash

###################################################################################################
###################################################################################################

@dataclass(frozen=True)
class RefactorOutcome:
    """Result of refactoring one proof with one tactic."""

    script: object
    applications: int
    size_before: int
    size_after: int


def select_disjoint(witnesses, gp=None, limit=None):
    """Select a largest set of pairwise disjoint witnesses that can be contracted together.

    Parameters
    ----------
    witnesses : list of tuple
        Contractible witnesses.
    gp : Tdg, optional
        Proof graph. If given, the joint contraction of the selection must keep it acyclic.
    limit : int, optional
        Stop as soon as a selection of this size is found.

    Returns
    -------
    list of tuple
        Selected witnesses, in canonical order.

    Notes
    -----
    Branch and bound over include / exclude decisions in canonical witness
    order, including first. Among selections of the largest size, the first
    one found is returned.
    """

    witnesses = sorted(set(witnesses))
    images = [frozenset(witness) for witness in witnesses]
    check_cycles = gp is not None and sum(len(image) > 1 for image in images) > 1
    n_wits = len(witnesses)

    best = ()
    stack = [(0, (), frozenset())]
    while stack:
        ind, chosen, used = stack.pop()
        if len(chosen) > len(best):
            best = chosen
            if limit is not None and len(best) >= limit:
                break
        if ind == n_wits or len(chosen) + n_wits - ind <= len(best):
            continue

        stack.append((ind + 1, chosen, used))
        image = images[ind]
        if image & used:
            continue
        if check_cycles and chosen and \
            not contraction_is_acyclic(gp, [images[sel] for sel in chosen] + [image]):
            continue
        stack.append((ind + 1, chosen + (ind, ), used | image))

    return [witnesses[ind] for ind in best]


def contract_embedding(gp, witness, tactic, name=None):
    """Replace the image of a witness with a single node invoking the tactic.

    Parameters
    ----------
    gp : Tdg
        Proof graph.
    witness : tuple of int
        Contractible witness of the tactic.
    tactic : TacticTdg
        Tactic graph.
    name : str, optional
        Label of the new node. Defaults to the tactic name.

    Returns
    -------
    Tdg
        New graph, with edges into and out of the image rewired to the new node.

    Raises
    ------
    NotCollapsible
        If the witness is not contractible.
    """

    tactic = as_tactic_tdg(tactic)
    if not is_contractible(witness, tactic, gp):
        raise NotCollapsible('witness {} of {} cannot be contracted'.format(witness, tactic.name))

    image = set(witness)
    inverse = {node : ind for ind, node in enumerate(witness)}

    new = gp.copy()
    node_id = max(gp.nodes) + 1
    origins = [gp.origin(node) for node in image if gp.origin(node) is not None]
    new.add_node(node_id, name or tactic.name, tactic.signature, min(origins, default=None))

    rewired = []
    for node in sorted(image):
        for edge in gp.in_edges(node):
            if edge.src not in image:
                formal = tactic.entry_of(inverse[node], edge.in_slot)
                rewired.append((edge.src, node_id, edge.out_slot, formal))
        for edge in gp.out_edges(node):
            if edge.dst not in image:
                formal = tactic.exit_of(inverse[node], edge.out_slot)
                rewired.append((node_id, edge.dst, formal, edge.in_slot))

    # Consumers outside the image are fed by the new node only once the image is gone
    new.remove_nodes(image)
    for src, dst, out_slot, in_slot in rewired:
        new.add_edge(src, dst, out_slot, in_slot)

    return new


def refactor(tactic, script):
    """Refactor a proof with a tactic, contracting embeddings until none remain.

    Parameters
    ----------
    tactic : TacticDef
        Tactic to use.
    script : ProofScript
        Valid proof script.

    Returns
    -------
    RefactorOutcome
        Refactored script, number of applications and sizes. The script is
        returned unchanged if the tactic does not apply.
    """

    tactic_tdg = build_tactic_tdg(tactic)
    gp, _ = build_proof_tdg(script)
    size_before = len(gp)

    witnesses = [witness for witness in enumerate_witnesses(tactic_tdg, gp)
                 if is_contractible(witness, tactic_tdg, gp)]
    selected = select_disjoint(witnesses, gp)
    for witness in selected:
        gp = contract_embedding(gp, witness, tactic_tdg)
    applications = len(selected)

    witness = find_embedding(tactic_tdg, gp)
    while witness is not None:
        gp = contract_embedding(gp, witness, tactic_tdg)
        applications += 1
        witness = find_embedding(tactic_tdg, gp)

    if applications:
        script = induced_proof(gp)

    return RefactorOutcome(script, applications, size_before, len(gp))


def check_tactic_name(name, corpus):
    """Raise NameClash if a tactic name is already defined or invoked in a corpus."""

    if name in corpus.tactic_names or name in corpus.invoked_names():
        raise NameClash(name)


def refactor_corpus(tactic, corpus, return_outcomes=False):
    """Refactor every proof of a corpus with a tactic, and add the tactic to it.

    Parameters
    ----------
    tactic : TacticDef
        Tactic to use.
    corpus : Corpus
        Corpus to refactor.
    return_outcomes : bool, optional, default: False
        Whether to also return the per proof outcomes.

    Returns
    -------
    corpus : Corpus
        Refactored corpus, with the tactic appended to its definitions.
    outcomes : list of RefactorOutcome
        Outcome per proof. Only returned if `return_outcomes` is True.

    Raises
    ------
    NameClash
        If the tactic name is already in use in the corpus.
    """

    check_tactic_name(tactic.name, corpus)

    outcomes = [refactor(tactic, script) for script in corpus.proofs]
    new = Corpus([outcome.script for outcome in outcomes], corpus.tactics + (tactic, ))

    if return_outcomes:
        return new, outcomes
    return new


def refactor_library(library, corpus):
    """Refactor a corpus with each tactic of a library in turn.

    Returns
    -------
    corpus : Corpus
        Refactored corpus.
    usage : list of int
        Number of applications of each tactic.
    """

    usage = []
    for tactic in library:
        corpus, outcomes = refactor_corpus(tactic, corpus, return_outcomes=True)
        usage.append(sum(outcome.applications for outcome in outcomes))

    return corpus, usage
