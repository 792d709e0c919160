"""Validation of proof scripts and tactic definitions."""

from dataclasses import dataclass

###################################################################################################
###################################################################################################

@dataclass(frozen=True)
class ValidationReport:
    """Result of validating a script.

    Attributes
    ----------
    valid : bool
        Whether the script is valid.
    step : int or None
        Index of the first failing invocation, or the body length for a failure found
        after the last invocation. None if valid.
    reason : str or None
        Description of the failure.
    live_goals : tuple of int
        Number of live goals after each invocation that was checked.
    """

    valid: bool
    step: int = None
    reason: str = None
    live_goals: tuple = ()


def _run_body(introduced, body):
    """Replay a body from a set of introduced elements.

    Returns the live goals in order of introduction, the per step goal counts
    and, on failure, a (step, reason) pair.
    """

    kinds = {el.name : el.kind for el in introduced}
    live = [el.name for el in introduced if el.is_goal]
    counts = []

    for step, inv in enumerate(body):

        consumed = set()
        for el in inv.inputs:
            if el.name not in kinds:
                return live, counts, (step, 'unknown id {}'.format(el.name))
            if kinds[el.name] != el.kind:
                return live, counts, (step, 'kind mismatch for {}'.format(el.name))
            if el.is_goal:
                if el.name in consumed:
                    return live, counts, (step, 'goal {} consumed twice'.format(el.name))
                if el.name not in live:
                    return live, counts, (step, 'goal {} already consumed'.format(el.name))
                consumed.add(el.name)

        live = [name for name in live if name not in consumed]

        for el in inv.outputs:
            if el.name in kinds:
                return live, counts, (step, 'id {} already introduced'.format(el.name))
            kinds[el.name] = el.kind
            if el.is_goal:
                live.append(el.name)

        counts.append(len(live))

    return live, counts, None


def _undischarged(goals):

    if len(goals) == 1:
        return 'goal {} undischarged'.format(goals[0])
    return 'goals {} undischarged'.format(', '.join(goals))


def check_script(script):
    """Validate a proof script by replaying its invocations.

    Parameters
    ----------
    script : ProofScript
        Script to validate.

    Returns
    -------
    ValidationReport
        Report, with the live goal count after each invocation.

    Notes
    -----
    Goals are consumed exactly once, and all must be discharged by the end.
    Hypotheses persist once introduced and may be referenced any number of times.
    """

    if not any(el.is_goal for el in script.init):
        return ValidationReport(False, 0, 'no initial goal')
    if len({el.name for el in script.init}) != len(script.init):
        return ValidationReport(False, 0, 'duplicate initial id')

    live, counts, failure = _run_body(script.init, script.body)

    if failure:
        return ValidationReport(False, failure[0], failure[1], tuple(counts))
    if live:
        return ValidationReport(False, len(script.body), _undischarged(live), tuple(counts))

    return ValidationReport(True, live_goals=tuple(counts))


def check_tactic(tactic):
    """Validate the structural invariants of a tactic definition.

    Parameters
    ----------
    tactic : TacticDef
        Tactic to validate.

    Returns
    -------
    ValidationReport
        Report. Live goal counts are per body invocation.
    """

    inputs = tactic.formal_inputs
    if len({el.name for el in inputs}) != len(inputs):
        return ValidationReport(False, 0, 'duplicate formal input')

    live, counts, failure = _run_body(inputs, tactic.body)
    if failure:
        return ValidationReport(False, failure[0], failure[1], tuple(counts))

    used = {el.name for inv in tactic.body for el in inv.inputs}
    for el in inputs:
        if el.name not in used:
            return ValidationReport(False, 0, 'formal input {} unused'.format(el.name), tuple(counts))

    produced = {el.name : el.kind for inv in tactic.body for el in inv.outputs}
    names = [el.name for el in tactic.formal_outputs]
    for el in tactic.formal_outputs:
        if produced.get(el.name) != el.kind:
            return ValidationReport(False, len(tactic.body),
                                    'formal output {} not produced'.format(el.name), tuple(counts))
    if len(set(names)) != len(names):
        return ValidationReport(False, len(tactic.body), 'duplicate formal output', tuple(counts))

    leaked = [name for name in live if name not in names]
    if leaked:
        return ValidationReport(False, len(tactic.body), _undischarged(leaked), tuple(counts))

    if len(tactic.body) < 2:
        return ValidationReport(False, len(tactic.body), 'body has fewer than 2 invocations',
                                tuple(counts))

    return ValidationReport(True, live_goals=tuple(counts))
