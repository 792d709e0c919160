"""Parser for the trace format."""

import re

from lark import Lark, Transformer, v_args, exceptions

from tdgmine.objects import ProofElementId, Invocation, ProofScript, TacticDef, Corpus
from tdgmine.errors import ParseError, DuplicateId, DuplicateProofName, DuplicateTacticName

###################################################################################################
###################################################################################################

TRACE_GRAMMAR = r"""
    start: _item*
    _item: proof | tactic

    proof: "proof" name "{" "init" idlist invocation* "}"
    tactic: "tactic" name idlist "->" idlist "{" invocation* "}"
    invocation: name idlist "->" idlist

    idlist: "[" (ident ("," ident)*)? "]"
    ident: ID
    name: TOKEN | ESCAPED_STRING

    ID: /[gh]:[A-Za-z0-9_]+/
    TOKEN: /[A-Za-z0-9_]+/
    COMMENT: /#[^\n]*/

    %import common.ESCAPED_STRING
    %import common.WS
    %ignore WS
    %ignore COMMENT
"""


@v_args(inline=True)
class TraceTransformer(Transformer):
    """Turn a parse tree into positioned pieces of proofs and tactics.

    Tokens are kept next to the values built from them, so that duplicate
    names can be reported with their position.
    """

    def start(self, *items):
        return list(items)

    def name(self, token):

        if token.type == 'ESCAPED_STRING':
            value = re.sub(r'\\(.)', r'\1', token[1:-1])
            if not value:
                raise ParseError(token.line, token.column, ['name'])
            return value, token
        return str(token), token

    def ident(self, token):

        kind, name = token.split(':', 1)
        return ProofElementId(kind, name), token

    def idlist(self, *idents):
        return list(idents)

    def invocation(self, name, inputs, outputs):
        return name, inputs, outputs

    def proof(self, name, init, *invocations):
        return 'proof', name, init, invocations

    def tactic(self, name, inputs, outputs, *invocations):
        return 'tactic', name, inputs, outputs, invocations


TRACE_PARSER = Lark(TRACE_GRAMMAR, start='start', parser='lalr', transformer=TraceTransformer())


def _check_fresh(introduced):
    """Check that positioned ids are introduced at most once."""

    seen = set()
    for element, token in introduced:
        if element.name in seen:
            raise DuplicateId(element.name, token.line, token.column)
        seen.add(element.name)


def _make_invocation(piece):

    (name, _), inputs, outputs = piece
    return Invocation(name, [el for el, _ in inputs], [el for el, _ in outputs])


def _make_proof(name, init, invocations):

    _check_fresh(list(init) + [el for inv in invocations for el in inv[2]])

    return ProofScript(name, [el for el, _ in init], [_make_invocation(inv) for inv in invocations])


def _make_tactic(name, inputs, outputs, invocations):

    _check_fresh(list(inputs) + [el for inv in invocations for el in inv[2]])

    return TacticDef(name, [el for el, _ in inputs], [el for el, _ in outputs],
                     [_make_invocation(inv) for inv in invocations])


def _convert_error(error, text):
    """Convert a lark error into a ParseError."""

    line, col = getattr(error, 'line', -1), getattr(error, 'column', -1)
    if line is None or line < 1:
        lines = text.split('\n')
        line, col = len(lines), len(lines[-1]) + 1

    expected = getattr(error, 'expected', None) or getattr(error, 'allowed', None) or ()

    return ParseError(line, col, expected)


def parse_corpus(text):
    """Parse trace text into a corpus.

    Parameters
    ----------
    text : str
        Text in the trace format.

    Returns
    -------
    Corpus
        Proofs and tactic definitions, in order of appearance.

    Raises
    ------
    ParseError
        If the text does not follow the grammar.
    DuplicateId
        If a proof element name is introduced twice in one proof or tactic.
    DuplicateProofName, DuplicateTacticName
        If two proofs, or two tactics, share a name.
    """

    try:
        items = TRACE_PARSER.parse(text)
    except exceptions.UnexpectedInput as error:
        raise _convert_error(error, text) from None

    proofs, tactics = [], []
    for item in items:
        if item[0] == 'proof':
            _, (name, _), init, invocations = item
            if name in [proof.name for proof in proofs]:
                raise DuplicateProofName(name)
            proofs.append(_make_proof(name, init, invocations))
        else:
            _, (name, _), inputs, outputs, invocations = item
            if name in [tactic.name for tactic in tactics]:
                raise DuplicateTacticName(name)
            tactics.append(_make_tactic(name, inputs, outputs, invocations))

    return Corpus(proofs, tactics)
