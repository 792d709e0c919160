"""Tactic grammar: the dependencies observed between tactics in a corpus."""

import itertools
from dataclasses import dataclass

###################################################################################################
###################################################################################################

@dataclass(frozen=True, order=True)
class Production:
    """An observed dependency from one tactic to another.

    Attributes
    ----------
    src : tuple of (str, tuple)
        Label and signature of the producing tactic.
    dst : tuple of (str, tuple)
        Label and signature of the consuming tactic.
    theta : tuple of tuple of (int, int) or None
        Every (out_slot, in_slot) pair linking one concrete pair of nodes, sorted.
        None if the slots were not kept.
    """

    src: tuple
    dst: tuple
    theta: tuple

    @property
    def src_label(self):
        return self.src[0]

    @property
    def dst_label(self):
        return self.dst[0]


class Grammar():
    """A set of productions, indexed by source."""

    def __init__(self, productions=()):

        self.productions = tuple(sorted(set(productions)))
        self._by_src = {}
        for prod in self.productions:
            self._by_src.setdefault(prod.src, []).append(prod)


    def __len__(self):
        return len(self.productions)


    def __iter__(self):
        return iter(self.productions)


    def __contains__(self, production):
        return production in self.productions


    @property
    def sources(self):
        """Distinct source keys, sorted."""

        return sorted(self._by_src)


    def from_src(self, src):
        """Productions whose source is a given key."""

        return self._by_src.get(src, [])


def slot_choices(production):
    """Slot sets a production can add between its source and target.

    A production with its slots gives only those. A production without them gives
    every non-empty set of kind compatible (out_slot, in_slot) pairs feeding each
    input slot at most once, sorted.
    """

    if production.theta is not None:
        return [production.theta]

    out_kinds = production.src[1][1]
    in_kinds = production.dst[1][0]

    options = []
    for in_slot, kind in enumerate(in_kinds):
        feeds = [(out_slot, in_slot) for out_slot, out_kind in enumerate(out_kinds)
                 if out_kind == kind]
        options.append([None] + feeds)

    choices = []
    for combo in itertools.product(*options):
        theta = tuple(sorted(pair for pair in combo if pair is not None))
        if theta:
            choices.append(theta)

    return sorted(choices)


def learn_grammar(tdgs, use_slots=True):
    """Collect the productions of a collection of proof graphs.

    Parameters
    ----------
    tdgs : list of Tdg
        Proof graphs.
    use_slots : bool, optional, default: True
        Whether productions keep the slots linking their nodes.

    Returns
    -------
    Grammar
        One production per distinct (source, target, theta) observed between
        two invocation nodes, with theta None if slots are not kept. The initial
        node takes no part.
    """

    productions = set()
    for tdg in tdgs:
        for src in tdg.body_nodes:
            for dst in tdg.successors(src):
                theta = tuple(sorted(tdg.edge_labels(src, dst))) if use_slots else None
                productions.add(Production(tdg.key(src), tdg.key(dst), theta))

    return Grammar(productions)
