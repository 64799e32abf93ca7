import argparse
import json
import logging
import os
import sys

from . import config
from .catalog import catalog_names, named
from .config import BudgetExceeded
from .family import (check_family_k, diff_families, enumerate_family, histogram,
                     is_member_via_family, read_family, verify_family)
from .familyjob import run_generation
from .forbidden import Parameter, class_index
from .graph import GraphError, format_edge_list, parse_edge_list
from .graph6 import Graph6Error, graph6_encode, read_graph6_file
from .invariants import invariant_record
from .perfect import is_neighborhood_perfect, is_perfect

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_IO = 1
EXIT_USAGE = 2
EXIT_NEGATIVE = 3


class UsageError(Exception):
    """Flag values that parse but cannot be used."""


def get_opts(argv=None):
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="Configuration file", default=config.DEFAULT_CONFIG_PATH)
    common.add_argument("-v", dest='verbose', help="Verbose logging", action="store_true", default=False)
    common.add_argument("--quiet", help="No progress bars, warnings only", action="store_true", default=False)

    parse = argparse.ArgumentParser(
        prog='forbiddenkit',
        description="Minimal forbidden induced subgraphs of the Δ-χ and Δ-ω graph classes",
    )
    sub = parse.add_subparsers(dest='command', metavar='COMMAND')
    sub.required = True

    def family_flags(p, need_out=False):
        p.add_argument("--param", required=True, choices=[str(x) for x in Parameter],
                       help="Graph parameter: chi or omega")
        p.add_argument("--k", required=True, type=int, help="Class index k")
        if need_out:
            p.add_argument("--out", required=True, help="Family file to write")

    gen = sub.add_parser('gen-family', parents=[common], help="Enumerate F(param, k) into a graph6 file")
    family_flags(gen, need_out=True)
    gen.add_argument("--jobs", type=int, default=None, help="Worker processes (default: config, 0 = all CPUs)")
    gen.add_argument("--resume", nargs='?', const='', default=None, metavar='PATH',
                     help="Checkpoint database to record and resume shards (default: one per run in the cache dir)")
    gen.add_argument("--restart", action="store_true", default=False,
                     help="Forget what the checkpoint recorded for this run before starting")

    check = sub.add_parser('check', parents=[common], help="Class membership via the forbidden family")
    check.add_argument("file", nargs='?', default='-', help="graph6 input (default stdin)")
    family_flags(check)
    check.add_argument("--family", default=None, help="Family file for (param, k); generated when omitted")

    index = sub.add_parser('index', parents=[common], help="Smallest k with the graph in the class")
    index.add_argument("file", nargs='?', default='-', help="graph6 input (default stdin)")
    index.add_argument("--param", required=True, choices=[str(x) for x in Parameter])

    inv = sub.add_parser('invariants', parents=[common], help="Δ, ω, χ and perfectness per graph")
    inv.add_argument("file", nargs='?', default='-', help="graph6 input (default stdin)")

    diff = sub.add_parser('diff', parents=[common], help="Compare two graph6 files as isomorphism-class sets")
    diff.add_argument("file_a")
    diff.add_argument("file_b")

    verify = sub.add_parser('verify', parents=[common], help="Re-check every member of a family file")
    verify.add_argument("file")
    verify.add_argument("--param", choices=[str(x) for x in Parameter], default=None,
                        help="Parameter (default: from the .meta sidecar)")
    verify.add_argument("--k", type=int, default=None, help="Class index (default: from the .meta sidecar)")
    verify.add_argument("--other", default=None, help="Family file of the other parameter for the same k")

    enc = sub.add_parser('encode', parents=[common], help="Edge-list text to graph6")
    enc.add_argument("file", nargs='?', default='-', help="edge-list input (default stdin)")

    dec = sub.add_parser('decode', parents=[common], help="graph6 to edge-list text")
    dec.add_argument("file", nargs='?', default='-', help="graph6 input (default stdin)")
    dec.add_argument("--format", choices=['g6', 'json'], default='g6',
                     help="g6: plain edge lists, json: one object per line")

    nm = sub.add_parser('named', parents=[common], help="Emit a catalog graph as graph6")
    nm.add_argument("tag", help="Catalog tag: " + ', '.join(
        f"{tag}/{arity}" if arity else tag for tag, arity in catalog_names()))
    nm.add_argument("params", nargs='*', type=int)
    nm.add_argument("--format", choices=['g6', 'json'], default='g6')

    return parse.parse_args(argv)


def emit(line):
    """Single writer for results on stdout."""
    sys.stdout.write(line + '\n')


def emit_json(obj):
    emit(json.dumps(obj, ensure_ascii=False))


def configure_logging(opts):
    level = logging.DEBUG if opts.verbose else logging.WARNING
    logging.basicConfig(level=level, format='[%(levelname)s] %(message)s', stream=sys.stderr)


def _read_text(path):
    if path in (None, '-'):
        return sys.stdin.read()
    with open(path, 'r') as f:
        return f.read()


def cmd_gen_family(opts):
    p = Parameter.parse(opts.param)
    check_family_k(opts.k)
    if opts.jobs is not None and opts.jobs < 0:
        raise UsageError(f"--jobs must be non-negative, got {opts.jobs}")
    checkpoint = opts.resume
    if checkpoint == '':
        checkpoint = config.checkpoint_path(p, opts.k)
    if opts.restart and checkpoint is None:
        raise UsageError("--restart needs a checkpoint, pass --resume")
    fam = run_generation(p, opts.k, opts.out, jobs=opts.jobs or None, resume=checkpoint,
                         restart=opts.restart, progress=False if opts.quiet else None,
                         verbose=opts.verbose)
    if fam is None:
        print("Another generation job holds the lock.", file=sys.stderr)
        return EXIT_IO
    emit_json({
        'param': str(p),
        'k': opts.k,
        'count': len(fam),
        'histogram': {str(n): c for n, c in histogram(fam).items()},
        'out': opts.out,
    })
    return EXIT_OK


def _each_graph(path, handle):
    """Call handle(index, graph) per graph6 line and return the exit status.

    handle returns False for a negative answer. Budget errors name the input line.
    """
    status = EXIT_OK
    for index, (line_no, g) in enumerate(read_graph6_file(path)):
        try:
            if handle(index, g) is False:
                status = EXIT_NEGATIVE
        except BudgetExceeded as e:
            raise e.at_line(line_no) from None
    return status


def cmd_check(opts):
    p = Parameter.parse(opts.param)
    check_family_k(opts.k)
    if opts.family:
        fam = read_family(opts.family, p, opts.k)
    else:
        fam = enumerate_family(p, opts.k)

    def handle(index, g):
        result = is_member_via_family(g, fam)
        witness = result.embedding.vertex_set().to_list() if result.embedding else None
        emit_json({'index': index, 'member': result.is_member, 'witness': witness})
        return result.is_member

    return _each_graph(opts.file, handle)


def cmd_index(opts):
    p = Parameter.parse(opts.param)

    def handle(index, g):
        result = class_index(g, p)
        witness = result.witness.to_list() if result.witness else None
        emit_json({'index': index, 'value': result.value, 'witness': witness})

    return _each_graph(opts.file, handle)


def cmd_invariants(opts):
    def handle(index, g):
        record = invariant_record(g)
        emit_json({
            'index': index,
            'n': record.n,
            'max_degree': record.max_degree,
            'clique_number': record.clique_number,
            'chromatic_number': record.chromatic_number,
            'perfect': bool(is_perfect(g)),
            'neighborhood_perfect': bool(is_neighborhood_perfect(g)),
        })

    return _each_graph(opts.file, handle)


def cmd_diff(opts):
    a = read_family(opts.file_a)
    b = read_family(opts.file_b)
    a_only, b_only = diff_families(a, b)
    for form in a_only:
        emit(f"A-only {form.graph6()}")
    for form in b_only:
        emit(f"B-only {form.graph6()}")
    return EXIT_OK if not (a_only or b_only) else EXIT_NEGATIVE


def cmd_verify(opts):
    p = Parameter.parse(opts.param) if opts.param else None
    fam = read_family(opts.file, p, opts.k)
    if fam.parameter is None or fam.k is None:
        raise UsageError(f"{opts.file}: no .meta sidecar, pass --param and --k")
    other = read_family(opts.other) if opts.other else None
    report = verify_family(fam, other)
    emit_json({'param': str(report.parameter), 'k': report.k, 'count': report.count,
               'perfect': report.perfect, 'violations': len(report.violations)})
    for graph6, message in report.violations:
        emit_json({'graph6': graph6, 'violation': message})
    return EXIT_OK if report.ok else EXIT_NEGATIVE


def cmd_encode(opts):
    emit(graph6_encode(parse_edge_list(_read_text(opts.file))))
    return EXIT_OK


def cmd_decode(opts):
    for index, (_, g) in enumerate(read_graph6_file(opts.file)):
        if opts.format == 'json':
            emit_json({'index': index, 'n': g.n, 'edges': [list(e) for e in g.edges()]})
        else:
            sys.stdout.write(format_edge_list(g))
    return EXIT_OK


def cmd_named(opts):
    g = named(opts.tag, *opts.params)
    if opts.format == 'json':
        emit_json({'tag': opts.tag, 'params': opts.params, 'n': g.n, 'edges': [list(e) for e in g.edges()]})
    else:
        emit(graph6_encode(g))
    return EXIT_OK


COMMANDS = {
    'gen-family': cmd_gen_family,
    'check': cmd_check,
    'index': cmd_index,
    'invariants': cmd_invariants,
    'diff': cmd_diff,
    'verify': cmd_verify,
    'encode': cmd_encode,
    'decode': cmd_decode,
    'named': cmd_named,
}


def main(argv=None):
    """Run one subcommand and return its exit status."""
    opts = get_opts(argv)
    try:
        config.init_config(os.path.expanduser(opts.config))
        opts.verbose = opts.verbose or config.VERBOSE
        configure_logging(opts)
        return COMMANDS[opts.command](opts)
    except Graph6Error as e:
        print(f"forbiddenkit {opts.command}: graph6 parse error, {e}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphError, BudgetExceeded, UsageError) as e:
        print(f"forbiddenkit {opts.command}: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"forbiddenkit {opts.command}: {e}", file=sys.stderr)
        return EXIT_IO


def run_tool():
    sys.exit(main())


if __name__ == '__main__':
    run_tool()
