"""Command line interface."""

import sys
import argparse
from pathlib import Path

from tdgmine.objects import Corpus
from tdgmine.settings import DEFAULTS
from tdgmine.errors import (ParseError, DuplicateId, DuplicateProofName, DuplicateTacticName,
                            InvalidScript, InvalidTactic, DisconnectedBody, NameClash)
from tdgmine.io import load_corpus, save_corpus, load_config, save_report
from tdgmine.check import check_script
from tdgmine.tdg import build_proof_tdg
from tdgmine.emit import emit_tactic, emit_ltac
from tdgmine.plts import export_dot
from tdgmine.refactor import refactor_library
from tdgmine.discovery import search_tactic, learn_library
from tdgmine.baseline import peano_learn_library, peano_refactor_library
from tdgmine.measures import corpus_stats, corpus_size, library_report, format_ratio
from tdgmine.process import split_corpus, evaluate, BASELINES

###################################################################################################
###################################################################################################

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_INVALID = 3


class UsageError(Exception):
    """Raised for bad command line usage."""


class ArgumentParser(argparse.ArgumentParser):
    """Argument parser reporting usage errors by exception."""

    def error(self, message):
        raise UsageError(message)


def make_parser():
    """Make the command line parser."""

    parser = ArgumentParser(prog='tdgmine',
                            description='Learn custom tactics from tactic dependence graphs.')
    parser.add_argument('--config', help='YAML file of run settings')
    parser.add_argument('--verbose', action='store_true', help='print progress')
    subs = parser.add_subparsers(dest='command')

    sub = subs.add_parser('check', help='validate every proof of a corpus')
    sub.add_argument('corpus')

    sub = subs.add_parser('stats', help='print corpus statistics')
    sub.add_argument('corpus')
    sub.add_argument('--report', help='also write the statistics to a YAML file')

    sub = subs.add_parser('tdg', help='export the dependence graph of one proof')
    sub.add_argument('corpus')
    sub.add_argument('--proof', required=True)
    sub.add_argument('--dot', required=True)

    sub = subs.add_parser('refactor', help='refactor a corpus with given tactics')
    sub.add_argument('corpus')
    sub.add_argument('--tactics', required=True)
    sub.add_argument('-o', '--output', required=True)

    sub = subs.add_parser('learn', help='learn the single best tactic')
    sub.add_argument('corpus')
    sub.add_argument('--min-freq', type=int)
    sub.add_argument('--max-size', type=int)

    sub = subs.add_parser('learn-lib', help='learn a library of tactics')
    sub.add_argument('corpus')
    sub.add_argument('-o', '--output', required=True)
    sub.add_argument('--min-eff', type=int)
    sub.add_argument('--max-tactics', type=int)

    sub = subs.add_parser('peano', help='learn a library with the anti-unification baseline')
    sub.add_argument('corpus')
    sub.add_argument('-o', '--output', required=True)
    sub.add_argument('--max-tactics', type=int)

    sub = subs.add_parser('split', help='split a corpus into train and test corpora')
    sub.add_argument('corpus')
    sub.add_argument('--train', type=float, required=True)
    sub.add_argument('--seed', type=int, required=True)
    sub.add_argument('-o', '--output', required=True)

    sub = subs.add_parser('eval', help='learn on a train corpus, measure on a test corpus')
    sub.add_argument('--train', required=True)
    sub.add_argument('--test', required=True)
    sub.add_argument('--baseline', choices=BASELINES, default='tdg')
    sub.add_argument('--report', help='also write the report to a YAML file')

    return parser


def run_check(args, cfg):

    corpus = load_corpus(args.corpus)
    code = EXIT_OK
    for script in corpus.proofs:
        report = check_script(script)
        if report.valid:
            print('{}: valid'.format(script.name))
        else:
            print('{}: invalid at step {}: {}'.format(script.name, report.step, report.reason))
            code = EXIT_INVALID

    return code


def run_stats(args, cfg):

    stats = corpus_stats(load_corpus(args.corpus))
    values = {'proofs' : stats.proof_count, 'total_steps' : stats.total_steps,
              'mean_steps' : format_ratio(stats.mean_steps), 'max_steps' : stats.max_steps}
    for key, val in values.items():
        print('{}: {}'.format(key, val))
    if args.report:
        save_report(values, args.report)

    return EXIT_OK


def run_tdg(args, cfg):

    try:
        script = load_corpus(args.corpus).get_proof(args.proof)
    except KeyError:
        raise UsageError('no proof named {}'.format(args.proof)) from None

    tdg, _ = build_proof_tdg(script)
    with open(args.dot, 'w', encoding='utf-8', newline='\n') as dot_file:
        dot_file.write(export_dot(tdg))
    print('{}: {} nodes, {} edges'.format(script.name, len(tdg.nodes), len(tdg.edges())))

    return EXIT_OK


def run_refactor(args, cfg):

    corpus = load_corpus(args.corpus)
    library = load_corpus(args.tactics).tactics
    refactored, usage = refactor_library(library, corpus)
    save_corpus(refactored, args.output)

    for tactic, count in zip(library, usage):
        print('{}: used {} times'.format(tactic.name, count))
    print('steps: {} -> {}'.format(corpus_size(corpus), corpus_size(refactored)))

    return EXIT_OK


def run_learn(args, cfg):

    cfg = cfg.update(min_frequency=args.min_freq, max_tactic_size=args.max_size)
    result = search_tactic(load_corpus(args.corpus), cfg)
    if result.tactic is None:
        print('no tactic found')
        return EXIT_OK

    print(emit_tactic(result.tactic), end='')
    print(emit_ltac(result.tactic))
    print('effectiveness: {}'.format(result.effectiveness))

    return EXIT_OK


def _write_library(folder, library, before, after, usage):
    """Write a library, the refactored corpus and a report into a folder."""

    folder = Path(folder)
    folder.mkdir(parents=True, exist_ok=True)
    save_corpus(Corpus(tactics=library), folder / 'library.trace')
    save_corpus(after, folder / 'refactored.trace')

    report = library_report(library, before, after, usage)
    save_report(report.to_dict(), folder / 'report.yaml')

    for tactic, count in zip(library, usage):
        print('{}: size {}, used {} times'.format(tactic.name, len(tactic.body), count))
        print('  ' + emit_ltac(tactic))
    print('steps: {} -> {}'.format(corpus_size(before), corpus_size(after)))
    print('compression power: {}'.format(format_ratio(report.compression_power)))


def run_learn_lib(args, cfg):

    cfg = cfg.update(min_effectiveness=args.min_eff, max_tactics=args.max_tactics)
    corpus = load_corpus(args.corpus)
    library, refactored, steps = learn_library(corpus, cfg, return_steps=True)
    _write_library(args.output, library, corpus, refactored,
                   [step.applications for step in steps])

    return EXIT_OK


def run_peano(args, cfg):

    cfg = cfg.update(max_tactics=args.max_tactics)
    corpus = load_corpus(args.corpus)
    plibrary, _ = peano_learn_library(corpus, cfg)
    library = [ptactic.tactic for ptactic in plibrary]
    refactored, usage = peano_refactor_library(plibrary, corpus)
    _write_library(args.output, library, corpus, refactored, usage)

    return EXIT_OK


def run_split(args, cfg):

    if not 0.0 < args.train < 1.0:
        raise UsageError('--train must be strictly between 0 and 1')

    train, test = split_corpus(load_corpus(args.corpus), args.train, args.seed)
    folder = Path(args.output)
    folder.mkdir(parents=True, exist_ok=True)
    save_corpus(train, folder / 'train.trace')
    save_corpus(test, folder / 'test.trace')
    print('train: {} proofs'.format(len(train.proofs)))
    print('test: {} proofs'.format(len(test.proofs)))

    return EXIT_OK


def run_eval(args, cfg):

    report = evaluate(load_corpus(args.train), load_corpus(args.test), cfg, args.baseline)
    values = report.to_dict()
    for key in sorted(values):
        print('{}: {}'.format(key, values[key]))
    if args.report:
        save_report(values, args.report)

    return EXIT_OK


COMMANDS = {
    'check' : run_check,
    'stats' : run_stats,
    'tdg' : run_tdg,
    'refactor' : run_refactor,
    'learn' : run_learn,
    'learn-lib' : run_learn_lib,
    'peano' : run_peano,
    'split' : run_split,
    'eval' : run_eval,
}


def main(argv=None):
    """Run the command line interface, returning the exit code."""

    try:
        args = make_parser().parse_args(argv)
        if args.command is None:
            raise UsageError('a command is required')
        cfg = load_config(args.config) if args.config else DEFAULTS
        if args.verbose:
            cfg = cfg.update(verbose=True)
        return COMMANDS[args.command](args, cfg)

    except (UsageError, OSError, ValueError) as error:
        print('error: {}'.format(error), file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, DuplicateId, DuplicateProofName, DuplicateTacticName) as error:
        print('parse error: {}'.format(error), file=sys.stderr)
        return EXIT_PARSE
    except (InvalidScript, InvalidTactic, DisconnectedBody, NameClash) as error:
        print('invalid: {}'.format(error), file=sys.stderr)
        return EXIT_INVALID


if __name__ == '__main__':
    sys.exit(main())
