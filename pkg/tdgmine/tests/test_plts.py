"""Tests for tdgmine.plts"""

from tdgmine.tdg import Tdg, build_proof_tdg, build_tactic_tdg

from tdgmine.plts import *

###################################################################################################
###################################################################################################

def test_export_dot(implication):

    tdg, _ = build_proof_tdg(implication)
    text = export_dot(tdg)
    lines = text.splitlines()

    assert lines[0] == 'digraph {'
    assert lines[-1] == '}'
    assert '  n0 [label="<init>"];' in lines
    assert '  n4 [label="apply"];' in lines
    assert '  n3 -> n4 [label="(o1,i1)"];' in lines
    assert sum('->' in line for line in lines) == 10

def test_export_dot_sentinels(newtac):

    text = export_dot(build_tactic_tdg(newtac).sentinel_graph())

    assert 'nm1 [label="<in>"]' in text
    assert 'nm1 -> n1 [label="(o2,i1)"]' in text
    assert 'n0 -> nm2' in text

def test_export_dot_empty():

    assert export_dot(Tdg()) == 'digraph {\n}\n'
