"""Learning custom tactics from tactic dependence graphs."""

# Link access to the main objects and entry points
from tdgmine.objects import ProofElementId, Invocation, ProofScript, TacticDef, Corpus
from tdgmine.settings import Config
from tdgmine.parser import parse_corpus
from tdgmine.emit import emit_corpus, emit_ltac
from tdgmine.tdg import build_proof_tdg, build_tactic_tdg
from tdgmine.refactor import refactor, refactor_corpus
from tdgmine.discovery import learn_tactic, learn_library
