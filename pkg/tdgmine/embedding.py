"""Witnesses: label and edge preserving embeddings of a tactic graph into a proof graph."""

import networkx as nx

from tdgmine.tdg import TacticTdg

###################################################################################################
###################################################################################################

def _pattern(tactic):
    """The body graph of a tactic graph, or the graph itself."""

    return tactic.body if isinstance(tactic, TacticTdg) else tactic


def as_tactic_tdg(tactic):
    """A tactic graph, synthesizing the general interface for a bare body."""

    return tactic if isinstance(tactic, TacticTdg) else TacticTdg.from_body(tactic)


def _search_key(gp, node):
    return (gp.depth(node), node)


def _candidates(pattern, gp, witness):
    """Proof nodes the next pattern node can map to, given a witness for the earlier ones.

    The next pattern node is len(witness). Only edges between it and earlier
    pattern nodes are checked.
    """

    new = len(witness)
    key = pattern.key(new)

    constraints = []
    for edge in pattern.in_edges(new):
        if edge.src < new:
            constraints.append(('in', witness[edge.src], (edge.out_slot, edge.in_slot)))
    for edge in pattern.out_edges(new):
        if edge.dst < new:
            constraints.append(('out', witness[edge.dst], (edge.out_slot, edge.in_slot)))

    if constraints:
        side, node, _ = constraints[0]
        pool = gp.successors(node) if side == 'in' else gp.predecessors(node)
    else:
        pool = gp.nodes

    used = set(witness)
    out = []
    for cand in pool:
        if cand in used or gp.is_init(cand) or gp.key(cand) != key:
            continue
        if all(slots in (gp.edge_labels(node, cand) if side == 'in' else gp.edge_labels(cand, node))
               for side, node, slots in constraints):
            out.append(cand)

    return sorted(out, key=lambda node: _search_key(gp, node))


def seed_witnesses(label, gp, signature=None):
    """Single node witnesses for every proof node with a given label.

    Parameters
    ----------
    label : str
        Tactic name to look for.
    gp : Tdg
        Proof graph.
    signature : tuple, optional
        If given, also require this signature.

    Returns
    -------
    list of tuple
        Witnesses, in node order.
    """

    return [(node, ) for node in gp.body_nodes if gp.label(node) == label
            and (signature is None or gp.signature(node) == signature)]


def extend_witnesses(witness, tactic, gp):
    """Extend a witness to a grown tactic graph.

    Parameters
    ----------
    witness : tuple of int
        Witness of the tactic graph without its latest growth.
    tactic : TacticTdg or Tdg
        Grown tactic graph: either one new node, numbered len(witness), with its
        edges, or new edges between already mapped nodes.
    gp : Tdg
        Proof graph.

    Returns
    -------
    list of tuple
        All witnesses of the grown graph restricting to the given one.
    """

    pattern = _pattern(tactic)

    if len(witness) == len(pattern):
        return [witness] if verify_embedding(witness, pattern, gp) else []
    if len(witness) != len(pattern) - 1:
        raise ValueError('a tactic graph can only grow by one node at a time')

    return [witness + (cand, ) for cand in _candidates(pattern, gp, witness)]


def enumerate_witnesses(tactic, gp, limit=None):
    """All witnesses of a tactic graph in a proof graph, in canonical search order.

    Parameters
    ----------
    tactic : TacticTdg or Tdg
        Tactic graph, with nodes numbered from 0.
    gp : Tdg
        Proof graph.
    limit : int, optional
        Stop after this many witnesses.

    Returns
    -------
    list of tuple
        Witnesses, each mapping pattern node i to witness[i].
    """

    pattern = _pattern(tactic)
    size = len(pattern)

    found = []
    stack = [()]
    while stack:
        witness = stack.pop()
        if len(witness) == size:
            found.append(witness)
            if limit is not None and len(found) >= limit:
                break
            continue
        stack.extend(witness + (cand, ) for cand in reversed(_candidates(pattern, gp, witness)))

    return found


def verify_embedding(witness, tactic, gp):
    """Check that a mapping is a witness: injective, label, signature and edge preserving.

    Parameters
    ----------
    witness : tuple of int
        Image of each pattern node.
    tactic : TacticTdg or Tdg
        Tactic graph.
    gp : Tdg
        Proof graph.

    Returns
    -------
    bool
        Whether the mapping is a witness.
    """

    pattern = _pattern(tactic)

    if len(witness) != len(pattern) or len(set(witness)) != len(witness):
        return False

    for node, image in enumerate(witness):
        if image not in gp or gp.is_init(image) or gp.key(image) != pattern.key(node):
            return False

    for edge in pattern.edges():
        if (edge.out_slot, edge.in_slot) not in gp.edge_labels(witness[edge.src],
                                                               witness[edge.dst]):
            return False

    return True


def is_collapsible(witness, tactic, gp):
    """Check whether the image of a witness can be collapsed into a single node.

    Parameters
    ----------
    witness : tuple of int
        Witness of the tactic graph.
    tactic : TacticTdg or Tdg
        Tactic graph.
    gp : Tdg
        Proof graph.

    Returns
    -------
    bool
        True if every node on a path between two image nodes is in the image, and
        every proof edge between image nodes has a pre-image in the tactic graph.
    """

    pattern = _pattern(tactic)
    image = set(witness)
    inverse = {node : ind for ind, node in enumerate(witness)}

    below = set().union(*(gp.descendants(node) for node in image))
    above = set().union(*(gp.ancestors(node) for node in image))
    if (below & above) - image:
        return False

    for node in image:
        for edge in gp.out_edges(node):
            if edge.dst in image and (edge.out_slot, edge.in_slot) not in \
                pattern.edge_labels(inverse[node], inverse[edge.dst]):
                return False

    return True


def is_contractible(witness, tactic, gp):
    """Check that a witness is collapsible and its image fits the tactic's interface.

    Every edge leaving the image must leave from a slot bound to a formal output,
    and body slots bound to the same formal input must share their producer.
    """

    if not is_collapsible(witness, tactic, gp):
        return False

    tactic = as_tactic_tdg(tactic)
    image = set(witness)
    inverse = {node : ind for ind, node in enumerate(witness)}

    producers = {}
    for node in image:
        for edge in gp.in_edges(node):
            if edge.src in image:
                continue
            formal = tactic.entry_of(inverse[node], edge.in_slot)
            if formal is None or producers.setdefault(formal, (edge.src, edge.out_slot)) != \
                (edge.src, edge.out_slot):
                return False
        for edge in gp.out_edges(node):
            if edge.dst not in image and tactic.exit_of(inverse[node], edge.out_slot) is None:
                return False

    return True


def find_embedding(tactic, gp, excluded=()):
    """Find the first contractible witness in canonical search order.

    Parameters
    ----------
    tactic : TacticTdg
        Tactic graph.
    gp : Tdg
        Proof graph.
    excluded : iterable of int, optional
        Proof nodes the image may not use.

    Returns
    -------
    tuple of int or None
        Witness, or None if there is none.
    """

    excluded = set(excluded)
    for witness in enumerate_witnesses(tactic, gp):
        if not excluded.intersection(witness) and is_contractible(witness, tactic, gp):
            return witness

    return None


def contraction_is_acyclic(gp, images):
    """Check that collapsing several disjoint node sets at once keeps a graph acyclic."""

    block = {}
    for ind, image in enumerate(images):
        for node in image:
            block[node] = ('block', ind)

    quotient = nx.DiGraph()
    for edge in gp.edges():
        src = block.get(edge.src, ('node', edge.src))
        dst = block.get(edge.dst, ('node', edge.dst))
        if src != dst:
            quotient.add_edge(src, dst)

    return nx.is_directed_acyclic_graph(quotient)
