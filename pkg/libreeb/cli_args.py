import argparse
import os

from . import VERSION
from .config import DEFAULT_BUDGET
from .recognition import KINDS

# Exit codes; argparse's own 2 would collide with Unknown
EXIT_YES = 0
EXIT_NO = 1
EXIT_UNKNOWN = 2
EXIT_INPUT = 3


class ArgumentParser(argparse.ArgumentParser):
    "argparse with usage errors mapped to the input-error exit code"

    def error(self, message):
        self.print_usage()
        self.exit(EXIT_INPUT, "%s: error: %s\n" % (self.prog, message))


def args_analysis(opt):
    "Define options shared by analysis commands"
    opt.add_argument("--dim",
                     metavar="D",
                     action="store",
                     type=int,
                     default=None,
                     help="dimension d of the graph")

    opt.add_argument("--budget",
                     metavar="NODES",
                     action="store",
                     type=int,
                     default=DEFAULT_BUDGET,
                     help="recognition search nodes per query (default %d)" % DEFAULT_BUDGET)

    opt.add_argument("--no-cache",
                     dest="use_cache",
                     action="store_false",
                     default=True,
                     help="disable the isomorphism-keyed recognition cache")

    opt.add_argument("--seed",
                     metavar="SEED",
                     action="store",
                     type=int,
                     default=0,
                     help="seed of every random choice (default 0)")


def args_check(cmd):
    "Define check options"
    cmd.add_argument("graph", metavar="GRAPH", help="Graph JSON file")
    cmd.add_argument("--kind",
                     choices=KINDS,
                     required=True,
                     help="what to recognise")


def args_morse(cmd):
    "Define morse options"
    cmd.add_argument("graph", metavar="GRAPH", help="Graph JSON file")
    cmd.add_argument("coloring",
                     metavar="COLORING",
                     nargs="?",
                     default=None,
                     help="Coloring JSON file; a random order drawn from --seed if omitted")
    cmd.add_argument("--json",
                     action="store_true",
                     help="JSON lines instead of a table")


def args_reeb(cmd):
    "Define reeb options"
    cmd.add_argument("graph", metavar="GRAPH", help="Graph JSON file")
    cmd.add_argument("--ball",
                     action="store_true",
                     help="the input is a d-ball rather than a d-sphere")
    cmd.add_argument("--random-start",
                     action="store_true",
                     help="puncture the sphere at a vertex drawn from --seed")
    cmd.add_argument("--out",
                     metavar="FILE",
                     help="write the Coloring JSON here instead of standard output")
    cmd.add_argument("--certificate",
                     metavar="FILE",
                     help="write the recognition certificate here")


def args_foliate(cmd):
    "Define foliate options"
    cmd.add_argument("graph", metavar="GRAPH", help="Graph JSON file")
    cmd.add_argument("coloring", metavar="COLORING", help="Coloring JSON file")
    cmd.add_argument("--out",
                     metavar="DIR",
                     help="directory for per-level Graph JSON and DOT files")


def args_curvature(cmd):
    "Define curvature options"
    cmd.add_argument("graph", metavar="GRAPH", help="Graph JSON file")
    cmd.add_argument("--samples",
                     metavar="N",
                     type=int,
                     default=1000,
                     help="random colorings per vertex (default 1000)")


def args_generate(cmd):
    "Define generate options"
    cmd.add_argument("recipe",
                     metavar="RECIPE",
                     help="fixture name or expression, e.g. 'S0 + S0 + S0' or 'B(C4)'")
    cmd.add_argument("--relabel",
                     action="store_true",
                     help="rename vertices to their canonical labels 0..n-1")
    cmd.add_argument("--dot",
                     action="store_true",
                     help="emit DOT instead of Graph JSON")
    cmd.add_argument("--out",
                     metavar="FILE",
                     help="write here instead of standard output")


def args_fixtures(cmd):
    "Define fixtures options"
    cmd.add_argument("action", choices=("list", "show"))
    cmd.add_argument("name", metavar="NAME", nargs="?", help="fixture for 'show'")


def args_common(opt):
    "Define common options"
    opt.add_argument("--debug",
                     action="store_true",
                     help="debug logging on standard error")

    opt.add_argument("--verbose",
                     action="store_true",
                     help="progress and search statistics on standard error")


def parse(argv=None):
    "Parse program arguments"
    version = ".".join(str(p) for p in VERSION)

    dst = (
        "reebsphere %s - sphere, ball and critical point analysis of "
        "finite simple graphs."
    )
    dst = dst % version

    parser = ArgumentParser(prog="reebsphere", description=dst)
    opt = parser.add_argument_group('common')
    args_common(opt)

    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    builders = [
        ('check', "recognise contractible graphs, spheres, balls and d-graphs", args_check),
        ('morse', "classify every vertex under a coloring", args_morse),
        ('reeb', "build a coloring with exactly two critical points", args_reeb),
        ('foliate', "recognise the level surfaces of a coloring", args_foliate),
        ('curvature', "mean Poincare-Hopf index over random colorings", args_curvature),
        ('generate', "build a graph from a recipe", args_generate),
        ('fixtures', "list or show the fixture gallery", args_fixtures),
    ]
    for name, help_text, builder in builders:
        cmd = commands.add_parser(name, help=help_text)
        builder(cmd)
        if name not in ('generate', 'fixtures'):
            args_analysis(cmd.add_argument_group('analysis'))

    args = parser.parse_args(argv)

    if args.command is None:
        parser.error("A command is required")

    if getattr(args, 'graph', None) is not None and not os.path.exists(args.graph):
        parser.error("Graph file %s does not exist" % args.graph)

    if getattr(args, 'coloring', None) is not None and not os.path.exists(args.coloring):
        parser.error("Coloring file %s does not exist" % args.coloring)

    if hasattr(args, 'budget') and args.budget <= 0:
        parser.error("Budget must be positive")

    if hasattr(args, 'seed') and args.seed < 0:
        parser.error("Seed can't be negative")

    if args.command in ('morse', 'reeb', 'foliate') and args.dim is None:
        parser.error("--dim is required for %s" % args.command)

    if args.command == 'check' and args.kind != 'contractible' and args.dim is None:
        parser.error("--dim is required for --kind %s" % args.kind)

    if args.command == 'check' and args.dim is not None:
        lowest = {'sphere': -1, 'dgraph': 0, 'ball': 0, 'dgraph-boundary': 1}
        if args.dim < lowest.get(args.kind, -1):
            parser.error("--dim must be at least %d for --kind %s"
                         % (lowest[args.kind], args.kind))

    if args.command in ('morse', 'reeb', 'foliate') and args.dim < 0:
        parser.error("--dim can't be negative")

    if args.command == 'curvature' and args.samples <= 0:
        parser.error("--samples must be positive")

    if args.command == 'fixtures' and args.action == 'show' and not args.name:
        parser.error("fixtures show needs a NAME")

    return args
