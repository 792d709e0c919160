"""Objects representing proof scripts, tactic definitions and corpora."""

from dataclasses import dataclass, field

from tdgmine.info import GOAL, HYP, KINDS

###################################################################################################
###################################################################################################

@dataclass(frozen=True, order=True)
class ProofElementId:
    """Name of a goal or hypothesis, unique within one proof.

    Attributes
    ----------
    kind : {'g', 'h'}
        Whether the element is a goal or a hypothesis.
    name : str
        Name of the element.
    """

    kind: str
    name: str

    def __post_init__(self):

        if self.kind not in KINDS:
            raise ValueError('unknown proof element kind: {}'.format(self.kind))

    @property
    def is_goal(self):
        return self.kind == GOAL

    @property
    def is_hyp(self):
        return self.kind == HYP

    def __str__(self):
        return '{}:{}'.format(self.kind, self.name)


def goal(name):
    """Shorthand for a goal element."""

    return ProofElementId(GOAL, name)


def hyp(name):
    """Shorthand for a hypothesis element."""

    return ProofElementId(HYP, name)


@dataclass(frozen=True)
class Invocation:
    """One decomposed tactic application.

    Attributes
    ----------
    name : str
        Tactic name, with any non-proof-element arguments folded in.
    inputs : tuple of ProofElementId
        Consumed or referenced elements, in slot order.
    outputs : tuple of ProofElementId
        Produced elements, in slot order.
    """

    name: str
    inputs: tuple = ()
    outputs: tuple = ()

    def __post_init__(self):

        object.__setattr__(self, 'inputs', tuple(self.inputs))
        object.__setattr__(self, 'outputs', tuple(self.outputs))

    @property
    def signature(self):
        """Kinds of the input and output slots."""

        return (tuple(el.kind for el in self.inputs), tuple(el.kind for el in self.outputs))


@dataclass(frozen=True)
class ProofScript:
    """A named proof: its initial elements and ordered invocations."""

    name: str
    init: tuple = ()
    body: tuple = ()

    def __post_init__(self):

        object.__setattr__(self, 'init', tuple(self.init))
        object.__setattr__(self, 'body', tuple(self.body))

    def __len__(self):
        return len(self.body)


@dataclass(frozen=True)
class TacticDef:
    """A custom tactic: formal interface plus a body of invocations."""

    name: str
    formal_inputs: tuple = ()
    formal_outputs: tuple = ()
    body: tuple = ()

    def __post_init__(self):

        object.__setattr__(self, 'formal_inputs', tuple(self.formal_inputs))
        object.__setattr__(self, 'formal_outputs', tuple(self.formal_outputs))
        object.__setattr__(self, 'body', tuple(self.body))

    def __len__(self):
        return len(self.body)

    @property
    def signature(self):
        """Kinds of the formal inputs and formal outputs."""

        return (tuple(el.kind for el in self.formal_inputs),
                tuple(el.kind for el in self.formal_outputs))


@dataclass(frozen=True)
class Corpus:
    """An ordered collection of proofs and tactic definitions."""

    proofs: tuple = ()
    tactics: tuple = field(default=())

    def __post_init__(self):

        object.__setattr__(self, 'proofs', tuple(self.proofs))
        object.__setattr__(self, 'tactics', tuple(self.tactics))

    def get_proof(self, name):
        """Get a proof by name, raising KeyError if missing."""

        for proof in self.proofs:
            if proof.name == name:
                return proof
        raise KeyError(name)

    @property
    def tactic_names(self):
        return tuple(tactic.name for tactic in self.tactics)

    def invoked_names(self):
        """Names of all tactics invoked anywhere in the corpus."""

        names = set()
        for script in self.proofs + self.tactics:
            names.update(inv.name for inv in script.body)
        return names
