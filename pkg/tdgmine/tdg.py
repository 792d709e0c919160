"""Tactic dependence graphs: construction and proof induction."""

import heapq
from collections import namedtuple

import networkx as nx
from networkx.algorithms import isomorphism as iso

from tdgmine.info import INIT_LABEL, GOAL, HYP, NAME_PREFIXES
from tdgmine.objects import ProofElementId, Invocation, ProofScript
from tdgmine.check import check_script
from tdgmine.utils import common_prefix
from tdgmine.errors import InvalidScript, InvalidTactic, DisconnectedBody, CyclicGraph

###################################################################################################
###################################################################################################

Edge = namedtuple('Edge', ['src', 'dst', 'out_slot', 'in_slot'])

INIT = 0


class Tdg():
    """A tactic dependence graph.

    Nodes are integers with a tactic label and a signature, the kinds of the
    input and output slots. An edge (u, v, i, j) means that output slot i of u
    feeds input slot j of v. Each input slot is fed by at most one edge.

    Parameters
    ----------
    name : str, optional
        Name of the proof or tactic the graph was built from.
    """

    def __init__(self, name=None):
        """Initialize an empty graph."""

        self.name = name
        self.graph = nx.MultiDiGraph()
        self._reset()


    def _reset(self):

        self._descendants = {}
        self._ancestors = {}
        self._depths = None


    def __len__(self):
        return sum(1 for node in self.graph if not self.is_init(node))


    def __contains__(self, node):
        return node in self.graph


    def add_node(self, node, label, signature, origin=None):
        """Add a node with a label, a signature and an optional source invocation index."""

        self.graph.add_node(node, label=label, signature=signature, origin=origin)
        self._reset()


    def add_edge(self, src, dst, out_slot, in_slot):
        """Add an edge, refusing a second producer for the same input slot."""

        if self.producer(dst, in_slot) not in (None, (src, out_slot)):
            raise ValueError('input slot {} of node {} is already fed'.format(in_slot, dst))
        self.graph.add_edge(src, dst, key=(out_slot, in_slot), slots=(out_slot, in_slot))
        self._reset()


    def remove_nodes(self, nodes):

        self.graph.remove_nodes_from(nodes)
        self._reset()


    @property
    def nodes(self):
        return sorted(self.graph.nodes)


    @property
    def body_nodes(self):
        return [node for node in self.nodes if not self.is_init(node)]


    def label(self, node):
        return self.graph.nodes[node]['label']


    def signature(self, node):
        return self.graph.nodes[node]['signature']


    def key(self, node):
        """Matching key of a node: its label together with its signature."""

        return (self.label(node), self.signature(node))


    def origin(self, node):
        return self.graph.nodes[node]['origin']


    def is_init(self, node):
        return self.label(node) == INIT_LABEL


    def edges(self):
        return sorted(Edge(src, dst, *key) for src, dst, key in self.graph.edges(keys=True))


    def in_edges(self, node):
        return sorted(Edge(src, dst, *key) for src, dst, key in self.graph.in_edges(node, keys=True))


    def out_edges(self, node):
        return sorted(Edge(src, dst, *key)
                      for src, dst, key in self.graph.out_edges(node, keys=True))


    def edge_labels(self, src, dst):
        """Set of (out_slot, in_slot) labels of the edges from src to dst."""

        if not self.graph.has_edge(src, dst):
            return frozenset()
        return frozenset(self.graph[src][dst])


    def producer(self, node, in_slot):
        """The (node, out_slot) feeding an input slot, or None."""

        for edge in self.in_edges(node):
            if edge.in_slot == in_slot:
                return edge.src, edge.out_slot
        return None


    def successors(self, node):
        return sorted(self.graph.successors(node))


    def predecessors(self, node):
        return sorted(self.graph.predecessors(node))


    def descendants(self, node):
        """Nodes reachable from a node, not including itself."""

        if node not in self._descendants:
            self._descendants[node] = frozenset(nx.descendants(self.graph, node))
        return self._descendants[node]


    def ancestors(self, node):
        """Nodes reaching a node, not including itself."""

        if node not in self._ancestors:
            self._ancestors[node] = frozenset(nx.ancestors(self.graph, node))
        return self._ancestors[node]


    def depth(self, node):
        """Length of the longest path ending at a node."""

        if self._depths is None:
            self._depths = {}
            for cur in self.topological_order():
                preds = self.predecessors(cur)
                self._depths[cur] = max((self._depths[pred] + 1 for pred in preds), default=0)
        return self._depths[node]


    def topological_order(self):
        """Nodes in topological order, ties broken by node id."""

        try:
            return list(nx.lexicographical_topological_sort(self.graph))
        except nx.NetworkXUnfeasible:
            raise CyclicGraph('graph {} has a cycle'.format(self.name)) from None


    def is_acyclic(self):
        return nx.is_directed_acyclic_graph(self.graph)


    def copy(self):

        new = Tdg(self.name)
        new.graph = self.graph.copy()
        return new


    def subgraph(self, nodes):
        """Induced subgraph on the given nodes, as a new graph."""

        new = Tdg(self.name)
        new.graph = self.graph.subgraph(nodes).copy()
        return new


def tdg_size(tdg):
    """Number of invocation nodes, not counting the initial node."""

    return len(tdg)


def _match_nodes(attrs1, attrs2):
    return attrs1['label'] == attrs2['label'] and attrs1['signature'] == attrs2['signature']


def tdg_isomorphic(tdg1, tdg2):
    """Check whether two graphs are isomorphic, respecting labels, signatures and slots."""

    return nx.is_isomorphic(tdg1.graph, tdg2.graph, node_match=_match_nodes,
                            edge_match=iso.categorical_multiedge_match('slots', None))


class NameAllocator():
    """Allocates fresh proof element names: g0, g1, ... for goals and H0, H1, ... for hypotheses."""

    def __init__(self, prefixes=None):

        self.prefixes = prefixes or NAME_PREFIXES
        self.counts = {GOAL : 0, HYP : 0}


    def fresh(self, kind):

        name = '{}{}'.format(self.prefixes[kind], self.counts[kind])
        self.counts[kind] += 1
        return ProofElementId(kind, name)


class BranchInfo():
    """Goal provenance for grouping invocations by proof branch.

    Attributes
    ----------
    paths : dict
        Maps each node to its branch path: the sibling positions of the goals
        leading to it, through every invocation producing more than one goal.
    goal_origins : dict
        Maps goal names of the source script to the (node, sibling position) producing them.
    """

    def __init__(self, paths, goal_origins=None):

        self.paths = paths
        self.goal_origins = goal_origins or {}


    @classmethod
    def from_tdg(cls, tdg, goal_origins=None):
        """Compute branch paths from the goal edges of a graph."""

        return cls(branch_paths(tdg), goal_origins)


def branch_paths(tdg):
    """Branch path of each node of a graph.

    Parameters
    ----------
    tdg : Tdg
        Graph to compute paths for.

    Returns
    -------
    paths : dict
        Maps node to a tuple of sibling positions.
    """

    order = tdg.topological_order()

    paths = {}
    for node in order:
        in_kinds = tdg.signature(node)[0]
        in_edges = tdg.in_edges(node)
        goal_edges = [edge for edge in in_edges if in_kinds[edge.in_slot] == GOAL]
        sources = []
        for edge in (goal_edges or in_edges):
            path = paths[edge.src]
            goal_slots = [ind for ind, kind in enumerate(tdg.signature(edge.src)[1]) if kind == GOAL]
            if edge in goal_edges and len(goal_slots) > 1:
                path = path + (goal_slots.index(edge.out_slot),)
            sources.append(path)
        paths[node] = common_prefix(sources)

    # Goal free nodes sit in the deepest branch shared by their uses
    for node in reversed(order):
        if GOAL in tdg.signature(node)[0] or tdg.is_init(node):
            continue
        succs = tdg.successors(node)
        if succs:
            shared = common_prefix(paths[succ] for succ in succs)
            if shared[:len(paths[node])] == paths[node]:
                paths[node] = shared

    return paths


def build_proof_tdg(script):
    """Build the tactic dependence graph of a valid proof script.

    Parameters
    ----------
    script : ProofScript
        Script to build the graph of.

    Returns
    -------
    tdg : Tdg
        Graph, with node 0 producing the initial elements and node i + 1 for invocation i.
    branches : BranchInfo
        Goal provenance of the script.

    Raises
    ------
    InvalidScript
        If the script is not valid.
    """

    report = check_script(script)
    if not report.valid:
        raise InvalidScript(report, script.name)

    tdg = Tdg(script.name)
    tdg.add_node(INIT, INIT_LABEL, ((), tuple(el.kind for el in script.init)), origin=-1)

    producers = {el.name : (INIT, slot) for slot, el in enumerate(script.init)}
    goal_origins = {}
    for ind, inv in enumerate(script.body):
        node = ind + 1
        tdg.add_node(node, inv.name, inv.signature, origin=ind)
        for in_slot, el in enumerate(inv.inputs):
            src, out_slot = producers[el.name]
            tdg.add_edge(src, node, out_slot, in_slot)
        sibling = 0
        for out_slot, el in enumerate(inv.outputs):
            producers[el.name] = (node, out_slot)
            if el.is_goal:
                goal_origins[el.name] = (node, sibling)
                sibling += 1

    return tdg, BranchInfo.from_tdg(tdg, goal_origins)


class TacticTdg():
    """Dependence graph of a tactic body with its formal interface.

    The entry sentinel feeds formal inputs into body input slots, and body
    output slots feed formal outputs into the exit sentinel.

    Parameters
    ----------
    body : Tdg
        Graph of the body invocations, nodes numbered from 0.
    entries : list of tuple of (int, int, int)
        Entry edges as (formal input, node, in_slot).
    exits : list of tuple of (int, int, int)
        Exit edges as (node, out_slot, formal output).
    signature : tuple of (tuple, tuple)
        Kinds of the formal inputs and outputs.
    name : str, optional
        Name of the tactic.
    """

    def __init__(self, body, entries, exits, signature, name=None):
        """Initialize a tactic graph."""

        self.body = body
        self.entries = tuple(sorted(entries))
        self.exits = tuple(sorted(exits, key=lambda ex: (ex[2], ex[0], ex[1])))
        self.signature = signature
        self.name = name

        self._entry_map = {(node, slot) : formal for formal, node, slot in self.entries}
        self._exit_map = {(node, slot) : formal for node, slot, formal in self.exits}


    def __len__(self):
        return len(self.body)


    def entry_of(self, node, in_slot):
        """Formal input bound to a body input slot, or None."""

        return self._entry_map.get((node, in_slot))


    def exit_of(self, node, out_slot):
        """Formal output bound to a body output slot, or None."""

        return self._exit_map.get((node, out_slot))


    def sentinel_graph(self):
        """The body with entry (-1) and exit (-2) sentinel nodes, labelled "<in>" and "<out>"."""

        graph = self.body.copy()
        entry, exit_ = -1, -2
        graph.add_node(entry, '<in>', ((), self.signature[0]))
        graph.add_node(exit_, '<out>', (self.signature[1], ()))
        for formal, node, slot in self.entries:
            graph.graph.add_edge(entry, node, key=(formal, slot), slots=(formal, slot))
        for node, slot, formal in self.exits:
            graph.graph.add_edge(node, exit_, key=(slot, formal), slots=(slot, formal))

        return graph


    @classmethod
    def from_body(cls, body, name=None):
        """Make a tactic graph from a body, synthesizing the most general interface.

        Every input slot without an internal producer becomes a formal input. Every
        hypothesis output, and every goal output not consumed in the body, becomes
        a formal output. Formals are numbered in topological node order, then slot order.
        """

        entries, exits, in_kinds, out_kinds = [], [], [], []
        for node in body.topological_order():
            node_in, node_out = body.signature(node)
            for slot, kind in enumerate(node_in):
                if body.producer(node, slot) is None:
                    entries.append((len(in_kinds), node, slot))
                    in_kinds.append(kind)
            consumed = {edge.out_slot for edge in body.out_edges(node)}
            for slot, kind in enumerate(node_out):
                if kind == HYP or slot not in consumed:
                    exits.append((node, slot, len(out_kinds)))
                    out_kinds.append(kind)

        return cls(body, entries, exits, (tuple(in_kinds), tuple(out_kinds)), name)


def build_tactic_tdg(tactic):
    """Build the dependence graph of a tactic definition.

    Parameters
    ----------
    tactic : TacticDef
        Tactic definition, with body invocation i becoming node i.

    Returns
    -------
    TacticTdg
        Graph of the tactic.

    Raises
    ------
    InvalidTactic
        If the body references unknown ids, or a formal output is not produced.
    DisconnectedBody
        If the body graph is not weakly connected.
    """

    if not tactic.body:
        raise InvalidTactic(tactic.name, 'empty body')

    body = Tdg(tactic.name)
    formals = {el.name : ind for ind, el in enumerate(tactic.formal_inputs)}
    producers = {}
    entries = []
    for node, inv in enumerate(tactic.body):
        body.add_node(node, inv.name, inv.signature, origin=node)
        for in_slot, el in enumerate(inv.inputs):
            if el.name in producers:
                src, out_slot = producers[el.name]
                body.add_edge(src, node, out_slot, in_slot)
            elif el.name in formals:
                entries.append((formals[el.name], node, in_slot))
            else:
                raise InvalidTactic(tactic.name, 'unknown id {}'.format(el.name))
        for out_slot, el in enumerate(inv.outputs):
            producers[el.name] = (node, out_slot)

    exits = []
    for formal, el in enumerate(tactic.formal_outputs):
        if el.name not in producers:
            raise InvalidTactic(tactic.name, 'formal output {} not produced'.format(el.name))
        exits.append(producers[el.name] + (formal,))

    if not nx.is_weakly_connected(body.graph):
        raise DisconnectedBody(tactic.name)

    return TacticTdg(body, entries, exits, tactic.signature, tactic.name)


def induced_proof(tdg, branches=None, names=None):
    """Emit a proof script whose graph is the given graph.

    Parameters
    ----------
    tdg : Tdg
        Proof graph, with an initial node.
    branches : BranchInfo, optional
        Branch grouping to order invocations by. Computed from the graph if not given.
    names : NameAllocator, optional
        Allocator for fresh element names.

    Returns
    -------
    ProofScript
        Script in topological order, grouped by branch, with fresh names.

    Notes
    -----
    Invocations are emitted in the topological order that prefers, in turn,
    the smallest branch path, the smallest source invocation index and the
    smallest node id.
    """

    paths = branches.paths if branches is not None else branch_paths(tdg)
    names = names if names is not None else NameAllocator()

    def order_key(node):
        origin = tdg.origin(node)
        return (paths[node], origin if origin is not None else float('inf'), node)

    remaining = {node : tdg.graph.in_degree(node) for node in tdg.nodes}
    heap = [(order_key(node), node) for node, count in remaining.items() if count == 0]
    heapq.heapify(heap)

    elements = {}
    init, body = (), []
    emitted = 0
    while heap:
        _, node = heapq.heappop(heap)
        emitted += 1

        outputs = tuple(names.fresh(kind) for kind in tdg.signature(node)[1])
        for slot, el in enumerate(outputs):
            elements[(node, slot)] = el

        if tdg.is_init(node):
            init = outputs
        else:
            inputs = [elements[tdg.producer(node, slot)]
                      for slot in range(len(tdg.signature(node)[0]))]
            body.append(Invocation(tdg.label(node), inputs, outputs))

        for succ in tdg.successors(node):
            remaining[succ] -= len(tdg.edge_labels(node, succ))
            if remaining[succ] == 0:
                heapq.heappush(heap, (order_key(succ), succ))

    if emitted != len(tdg.nodes):
        raise CyclicGraph('graph {} has a cycle'.format(tdg.name))

    return ProofScript(tdg.name, init, body)
