"""
Command line front end.

check:     GRAPH --kind K --dim D        -> verdict JSON, exit 0/1/2
morse:     GRAPH [COLORING] --dim D      -> per-vertex table or JSON lines
reeb:      GRAPH --dim D [--ball]        -> Coloring JSON (+ certificate)
foliate:   GRAPH COLORING --dim D        -> level surfaces and verdicts
curvature: GRAPH --samples N             -> mean index per vertex
generate:  RECIPE                        -> Graph JSON or DOT
fixtures:  list | show NAME

Any library error or malformed input exits with 3.
"""
import json
import logging
import os
import sys

from . import fixtures, formats, morse, reeb
from .cli_args import EXIT_INPUT, EXIT_NO, EXIT_UNKNOWN, EXIT_YES, parse
from .complex import betti_numbers, euler_characteristic, format_rational, wu_characteristic
from .config import AnalysisConfig
from .errors import ReebError
from .graph_core import canonical_form, canonical_graph
from .recipe import generate
from .recognition import Answer, Recognizer

log = logging.getLogger(__name__)

EXIT_FOR = {
    Answer.YES: EXIT_YES,
    Answer.NO: EXIT_NO,
    Answer.UNKNOWN: EXIT_UNKNOWN,
}


def _emit(text, path=None):
    if path is None:
        sys.stdout.write(text if text.endswith('\n') else text + '\n')
        return
    with open(path, 'w', encoding='utf-8') as handle:
        handle.write(text if text.endswith('\n') else text + '\n')
    log.info("Wrote %s", path)


def _config(args):
    return AnalysisConfig(dim=args.dim,
                          budget=args.budget,
                          seed=args.seed,
                          samples=getattr(args, 'samples', 1000),
                          use_cache=args.use_cache)


def start_check(args, recognizer):
    "Run one recognition query"
    g = formats.read_graph(args.graph)
    verdict = recognizer.check(args.kind, g, args.dim)
    _emit(formats.dump_record(verdict))
    return EXIT_FOR[verdict.answer]


def _render_table(summary):
    lines = ["%-24s %4s %4s %6s  %s" % ("vertex", "i-", "i+", "j", "class")]
    for report in summary.reports:
        lines.append("%-24s %4d %4d %6s  %s" % (
            formats.vertex_token(report.vertex), report.i_minus, report.i_plus,
            format_rational(report.j), report.morse_class))
    return lines


def start_morse(args, recognizer, config):
    "Classify every vertex under a coloring"
    g = formats.read_graph(args.graph)
    if args.coloring is not None:
        f = formats.read_coloring(args.coloring, g)
    else:
        f = morse.random_coloring(g, config.rng())
        log.info("Random coloring from seed %d", config.seed)

    summary = morse.is_morse(g, f, args.dim, recognizer)
    if args.json:
        for report in summary.reports:
            _emit(formats.dump_record(report))
        _emit(formats.dump_record(summary))
    else:
        for line in _render_table(summary):
            _emit(line)
        _emit("%d critical, Morse: %s" % (len(summary.critical), summary.answer.value))
    return EXIT_FOR[summary.answer]


def start_reeb(args, recognizer, config):
    "Build and write a two-critical-point coloring"
    g = formats.read_graph(args.graph)
    if args.ball:
        function = reeb.reeb_function_on_ball(g, args.dim, recognizer)
        kind = 'ball'
    else:
        start = None
        if args.random_start:
            start = g.vertices[int(config.rng().integers(len(g)))]
            log.info("Puncture at %r drawn from seed %d", start, config.seed)
        function = reeb.build_reeb_function(g, args.dim, start=start, recognizer=recognizer)
        kind = 'sphere'

    critical = [formats.encode_vertex(v) for v in function.critical_vertices]
    _emit(formats.dump_coloring(g, function.coloring, dim=args.dim, critical=critical),
          args.out)

    if args.certificate:
        certificate = {
            'kind': kind,
            'dim': args.dim,
            'digest': canonical_form(g).hex,
            'critical': critical,
            'order': [formats.encode_vertex(v) for v in function.collapse_order],
            'degenerate': function.degenerate,
        }
        _emit(json.dumps(certificate), args.certificate)
    return EXIT_YES


def start_foliate(args, recognizer):
    "Recognise every level surface"
    g = formats.read_graph(args.graph)
    f = formats.read_coloring(args.coloring, g)
    foliation = reeb.foliate(g, f, args.dim, recognizer)

    data = formats.foliation_data(foliation)
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        for number, level in enumerate(foliation):
            base = os.path.join(args.out, "level-%02d" % number)
            formats.write_graph(level.surface, base + ".json")
            _emit(formats.dump_dot(level.surface, name="level%d" % number), base + ".dot")
        _emit(json.dumps(data), os.path.join(args.out, "foliation.json"))

    for level in data:
        _emit("c=%-8s %-10s |V|=%d" % (level['c'], level['verdict'],
                                       len(level['surface']['vertices'])))
    return EXIT_YES


def start_curvature(args, config):
    "Index expectation at every vertex"
    g = formats.read_graph(args.graph)
    status = EXIT_YES
    for x in g:
        estimate = morse.curvature_by_expectation(g, x, config.samples, config.seed)
        _emit(formats.dump_record(estimate))
        if not estimate.per_sample_sum_check:
            status = EXIT_NO
    return status


def start_generate(args):
    "Evaluate a recipe"
    g = generate(args.recipe)
    if args.relabel:
        g = canonical_graph(g)
    if args.dot:
        _emit(formats.dump_dot(g), args.out)
    else:
        _emit(formats.dump_graph(g, digest=canonical_form(g).hex), args.out)
    return EXIT_YES


def _describe(manifest):
    expected = ", ".join("%s=%s [%s]" % (key, value, tag)
                         for key, (value, tag) in manifest.expected.items())
    return "%-26s %-28s %s" % (manifest.name, manifest.recipe, expected)


def start_fixtures(args):
    "List the gallery or show one fixture"
    if args.action == 'list':
        for manifest in fixtures.MANIFESTS.values():
            _emit(_describe(manifest))
        return EXIT_YES

    try:
        manifest = fixtures.get_manifest(args.name)
    except KeyError as ex:
        sys.stderr.write("error: %s\n" % ex.args[0])
        return EXIT_INPUT
    g = manifest.reference()
    _emit(_describe(manifest))
    if manifest.note:
        _emit("note: %s" % manifest.note)
    _emit("chi=%d betti=%s wu=%d" % (euler_characteristic(g), betti_numbers(g),
                                     wu_characteristic(g)))
    _emit(formats.dump_graph(g, digest=canonical_form(g).hex))
    return EXIT_YES


def setup_logging(args):
    level = logging.WARNING
    if args.verbose:
        level = logging.INFO
    if args.debug:
        level = logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")


def main(argv=None):
    "Parse arguments and run one command; returns the exit code"
    args = parse(argv)
    setup_logging(args)

    try:
        if args.command == 'generate':
            return start_generate(args)
        if args.command == 'fixtures':
            return start_fixtures(args)

        config = _config(args)
        log.debug("Configuration: %r", config)
        recognizer = Recognizer.from_config(config)
        try:
            if args.command == 'check':
                return start_check(args, recognizer)
            if args.command == 'morse':
                return start_morse(args, recognizer, config)
            if args.command == 'reeb':
                return start_reeb(args, recognizer, config)
            if args.command == 'foliate':
                return start_foliate(args, recognizer)
            if args.command == 'curvature':
                return start_curvature(args, config)
        finally:
            if args.verbose or args.debug:
                recognizer.stats.show()
    except ReebError as ex:
        sys.stderr.write("error: %s: %s\n" % (type(ex).__name__, ex))
        return EXIT_INPUT
    except OSError as ex:
        sys.stderr.write("error: %s\n" % ex)
        return EXIT_INPUT
    except (ValueError, RecursionError) as ex:
        # Input the format checks above let through
        log.debug("Unexpected input failure", exc_info=True)
        sys.stderr.write("error: %s: %s\n" % (type(ex).__name__, ex))
        return EXIT_INPUT
    return EXIT_INPUT
