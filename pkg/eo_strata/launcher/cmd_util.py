import argparse
import logging
import platform

from eo_strata import __version__ as prog_version

__all__ = ["MAX_ENUMERATE_G", "MAX_ENGINE_G", "CONVERT_TARGETS", "bounded_int", "parse_args", "log_level",
           "get_version", "get_environment"]
log = logging.getLogger(__name__)

MAX_ENUMERATE_G = 12
MAX_ENGINE_G = 10
CONVERT_TARGETS = ("name", "nu", "mu", "omega", "word", "all")


def bounded_int(low, high):
    def parse(value):
        try:
            number = int(value)
        except ValueError:
            raise argparse.ArgumentTypeError("%r is not an integer" % value)
        if not low <= number <= high:
            raise argparse.ArgumentTypeError("%s is out of range, expected %s <= g <= %s" % (number, low, high))
        return number

    parse.__name__ = "integer in [%s, %s]" % (low, high)
    return parse


def parse_args(argv=None, prog=None):
    opts_parser = argparse.ArgumentParser(add_help=False, prog=prog)
    opts_parser.add_argument("-v", "--verbose", help="log progress information", action="store_true")
    opts_parser.add_argument("-d", "--debug", help="turn on debug logging", action="store_true")

    parser = argparse.ArgumentParser(
        prog=prog,
        description="eo-strata classifies the p-torsion group schemes of principally polarized abelian varieties "
                    "in characteristic p by their final type, Young type and Weyl group element, and reproduces "
                    "the complete tables for dimension up to four.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    parser.add_argument("-V", "--version", action="version", version="%(prog)s " + prog_version)
    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True

    def command(name, help):
        return commands.add_parser(name, help=help, description=help, parents=[opts_parser],
                                   formatter_class=argparse.ArgumentDefaultsHelpFormatter)

    any_g = bounded_int(1, MAX_ENUMERATE_G)
    formats = ("text", "csv", "json")

    sub = command("enumerate", "list all types for dimension g with their invariants")
    sub.add_argument("g", type=any_g, help="dimension")
    sub.add_argument("--format", choices=formats, default="text", help="output format")

    input_help = "a name like 'L^2+I[2,1]', 'nu=[1,2,2,3]', 'mu={2}', 'omega=<...>' or 'word=s1*s2' (word needs -g)"
    sub = command("describe", "show everything known about a single type")
    sub.add_argument("input", help=input_help)
    sub.add_argument("-g", type=any_g, default=None, help="dimension, inferred from the input if possible")
    sub.add_argument("--format", choices=formats, default="text", help="output format")
    sub.add_argument("--show-module", action="store_true", help="print the Dieudonne module basis and actions")
    sub.add_argument("--show-filtration", action="store_true",
                     help="print the canonical filtration, the derivation of nu and dim(N_i & N'_g)")

    sub = command("convert", "translate between the encodings of a type")
    sub.add_argument("input", help=input_help)
    sub.add_argument("-g", type=any_g, default=None, help="dimension, inferred from the input if possible")
    sub.add_argument("--to", choices=CONVERT_TARGETS, default="all", help="encoding to print")

    sub = command("table", "print the table of all types for dimension g, ordered by codimension")
    sub.add_argument("g", type=any_g, help="dimension")
    sub.add_argument("--format", choices=formats, default="text", help="output format")

    sub = command("hasse", "print the covers of the specialization order on Young types")
    sub.add_argument("g", type=any_g, help="dimension")
    sub.add_argument("--format", choices=formats + ("dot",), default="text", help="output format")
    sub.add_argument("--names", action="store_true", help="label dot nodes with names where known (g <= 4)")

    command("verify", "recompute the complete tables for g <= 4 and compare them with the stored data")

    return parser.parse_args(argv)


def log_level(args) -> int:
    if args.debug:
        return logging.DEBUG
    if args.verbose:
        return logging.INFO
    return logging.WARNING


def get_version():
    return "eo-strata %s" % prog_version


def get_environment():
    return "%s running via %s %s on %s" \
           % (get_version(), platform.python_implementation(), platform.python_version(), platform.platform())
