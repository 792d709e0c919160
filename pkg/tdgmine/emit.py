"""Emit corpora as trace text and tactics as Ltac-style text."""

import re

from tdgmine.info import RESERVED, GOAL
from tdgmine.tdg import build_tactic_tdg, branch_paths

###################################################################################################
###################################################################################################

TOKEN = re.compile(r'[A-Za-z0-9_]+')


def format_name(name):
    """Format a name, quoting it unless it is a plain token."""

    if TOKEN.fullmatch(name) and name not in RESERVED:
        return name
    return '"' + name.replace('\\', '\\\\').replace('"', '\\"') + '"'


def format_ids(elements):
    return '[' + ', '.join(str(el) for el in elements) + ']'


def format_invocation(inv):
    return '{} {} -> {}'.format(format_name(inv.name), format_ids(inv.inputs),
                                format_ids(inv.outputs))


def emit_proof(script):
    """Emit a proof script as a block of trace text."""

    lines = ['proof {} {{'.format(format_name(script.name)),
             '  init ' + format_ids(script.init)]
    lines.extend('  ' + format_invocation(inv) for inv in script.body)
    lines.append('}')

    return '\n'.join(lines) + '\n'


def emit_tactic(tactic):
    """Emit a tactic definition as a block of trace text."""

    lines = ['tactic {} {} -> {} {{'.format(format_name(tactic.name),
                                           format_ids(tactic.formal_inputs),
                                           format_ids(tactic.formal_outputs))]
    lines.extend('  ' + format_invocation(inv) for inv in tactic.body)
    lines.append('}')

    return '\n'.join(lines) + '\n'


def emit_corpus(corpus):
    """Emit a corpus as trace text.

    Parameters
    ----------
    corpus : Corpus
        Corpus to emit.

    Returns
    -------
    str
        Canonical text: tactic definitions, then proofs, separated by blank lines.
        Parsing it gives back an equal corpus.
    """

    blocks = [emit_tactic(tactic) for tactic in corpus.tactics] + \
        [emit_proof(script) for script in corpus.proofs]

    return '\n'.join(blocks)


def _render_step(inv):

    words = [inv.name] + [el.name for el in inv.inputs if el.is_hyp]
    return ' '.join(words)


def emit_ltac(tactic):
    """Render a tactic definition as a one line Ltac-style definition.

    Parameters
    ----------
    tactic : TacticDef
        Tactic to render.

    Returns
    -------
    str
        Text of the form `Ltac <name> <params> := <t1>; [<branch> | ..].`, where the
        parameters are the hypothesis formal inputs and each step shows its
        hypothesis arguments. Goal arguments are implicit.

    Notes
    -----
    The rendering is lossy: the trace format remains the exact form.
    """

    graph = build_tactic_tdg(tactic).body
    paths = branch_paths(graph)

    def render(prefix):
        level = [node for node in graph.nodes if paths[node] == prefix]
        steps = [_render_step(tactic.body[node]) for node in level]
        deeper = [paths[node][len(prefix)] for node in graph.nodes
                  if len(paths[node]) > len(prefix) and paths[node][:len(prefix)] == prefix]
        if deeper:
            count = max(deeper) + 1
            for node in level:
                count = max(count, graph.signature(node)[1].count(GOAL))
            branches = [render(prefix + (ind, )) or 'idtac' for ind in range(count)]
            steps.append('[' + ' | '.join(branches) + ']')
        return '; '.join(steps)

    params = [el.name for el in tactic.formal_inputs if el.is_hyp]
    head = ' '.join(['Ltac', tactic.name] + params)

    return '{} := {}.'.format(head, render(()))
