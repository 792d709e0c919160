"""Rendering dependence graphs as DOT text."""

###################################################################################################
###################################################################################################

def _quote(text):
    return '"' + str(text).replace('\\', '\\\\').replace('"', '\\"') + '"'


def _node_id(node):
    # sentinel nodes have negative ids
    return 'n' + str(node).replace('-', 'm')


def export_dot(tdg):
    """Render a graph in the DOT language.

    Parameters
    ----------
    tdg : Tdg
        Graph to render.

    Returns
    -------
    str
        DOT text, one statement per line, with nodes labelled by tactic and
        edges labelled (o<out_slot>,i<in_slot>).
    """

    lines = ['digraph {']
    for node in tdg.nodes:
        lines.append('  {} [label={}];'.format(_node_id(node), _quote(tdg.label(node))))
    for edge in tdg.edges():
        lines.append('  {} -> {} [label="(o{},i{})"];'.format(
            _node_id(edge.src), _node_id(edge.dst), edge.out_slot, edge.in_slot))
    lines.append('}')

    return '\n'.join(lines) + '\n'
