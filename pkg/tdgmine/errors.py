"""Custom errors for tdgmine."""

###################################################################################################
###################################################################################################

class TdgMineError(Exception):
    """Base class for tdgmine errors."""


class ParseError(TdgMineError):
    """Raised when trace text does not follow the trace grammar."""

    def __init__(self, line, col, expected=()):

        self.line = line
        self.col = col
        self.expected = tuple(sorted(expected))
        msg = 'parse error at line {}, column {}'.format(line, col)
        if self.expected:
            msg += ': expected one of ' + ', '.join(self.expected)
        super().__init__(msg)


class DuplicateId(TdgMineError):
    """Raised when a proof element name is introduced twice."""

    def __init__(self, name, line=None, col=None):

        self.name = name
        self.line = line
        self.col = col
        super().__init__('id {} introduced twice (line {}, column {})'.format(name, line, col))


class DuplicateProofName(TdgMineError):
    """Raised when two proofs of a corpus share a name."""

    def __init__(self, name):

        self.name = name
        super().__init__('duplicate proof name: ' + name)


class DuplicateTacticName(TdgMineError):
    """Raised when two tactic definitions of a corpus share a name."""

    def __init__(self, name):

        self.name = name
        super().__init__('duplicate tactic name: ' + name)


class InvalidScript(TdgMineError):
    """Raised when an operation requires a valid proof script."""

    def __init__(self, report, name=None):

        self.report = report
        self.name = name
        super().__init__('invalid script {}: step {}: {}'.format(name, report.step, report.reason))


class InvalidTactic(TdgMineError):
    """Raised when a tactic definition breaks its structural invariants."""

    def __init__(self, name, reason):

        self.name = name
        self.reason = reason
        super().__init__('invalid tactic {}: {}'.format(name, reason))


class DisconnectedBody(TdgMineError):
    """Raised when a tactic body is not weakly connected."""

    def __init__(self, name):

        self.name = name
        super().__init__('tactic body is not connected: ' + str(name))


class CyclicGraph(TdgMineError):
    """Raised when a dependence graph unexpectedly contains a cycle."""


class NotCollapsible(TdgMineError):
    """Raised when contracting a witness that is not collapsible."""


class NameClash(TdgMineError):
    """Raised when a new tactic name is already in use in a corpus."""

    def __init__(self, name):

        self.name = name
        super().__init__('tactic name already in use: ' + name)
