"""
Implementations of the subcommands. Each takes the parsed arguments and the output stream and returns the exit code.
"""
import json
import logging
from typing import Optional, Tuple

import attr

from eo_strata.catalog.golden import MAX_GOLDEN_G, ClassificationUnavailable, build_module, classify, \
    names_by_young
from eo_strata.catalog.names import GroupSchemeName, parse_name, render_name
from eo_strata.dieudonne.constructors import module_from_final_type
from eo_strata.dieudonne.filtration import canonical_filtration, render_filtration
from eo_strata.dieudonne.module import render_module
from eo_strata.launcher.cmd_util import MAX_ENGINE_G
from eo_strata.launcher.render import FIELDS, render_rows, render_text_value, stratum_row
from eo_strata.strata.core import FinalType, InvalidTypeError, LengthMismatchError, enumerate_final_types, \
    parse_final_type, parse_young_type, stratum_codim, final_to_young, young_to_final
from eo_strata.strata.poset import hasse, to_dot
from eo_strata.strata.weyl import evaluate_word, parse_oneline, parse_word, to_young

__all__ = ["ParsedInput", "parse_input", "table_order", "cmd_enumerate", "cmd_describe", "cmd_convert",
           "cmd_table", "cmd_hasse"]
log = logging.getLogger(__name__)


@attr.s(frozen=True)
class ParsedInput(object):
    nu = attr.ib()  # type: FinalType
    name = attr.ib(default=None)  # type: Optional[GroupSchemeName]


def _check_g(found: int, g: Optional[int], text: str):
    if g is not None and found != g:
        raise LengthMismatchError("'%s' describes a type for g=%s, but g=%s was given" % (text, found, g))


def parse_input(text: str, g: Optional[int] = None) -> ParsedInput:
    """
    Accepts "nu=[...]", "mu={...}", "omega=<...>", "word=s1*s2" or a name.
    For names the final type is computed with the Dieudonne module engine.
    """
    key, sep, value = text.partition("=")
    key = key.strip().lower()
    if sep and key in ("nu", "final"):
        nu = parse_final_type(value, g)
    elif sep and key in ("mu", "young"):
        nu = young_to_final(parse_young_type(value, g))
    elif sep and key in ("omega", "w"):
        omega = parse_oneline(value)
        _check_g(omega.g, g, text)
        nu = young_to_final(to_young(omega))
    elif sep and key == "word":
        if g is None:
            raise InvalidTypeError("A word does not determine g, please pass -g")
        nu = young_to_final(to_young(evaluate_word(parse_word(value, g))))
    else:
        name = parse_name(text)
        _check_g(name.g, g, text)
        if name.g > MAX_ENGINE_G:
            raise InvalidTypeError("Names are only evaluated up to g=%s, got g=%s" % (MAX_ENGINE_G, name.g))
        nu = canonical_filtration(build_module(name)).final_type
        return ParsedInput(nu=nu, name=name)
    log.debug("Parsed input '%s' as final type %s", text, nu)
    return ParsedInput(nu=nu)


def _module_for(parsed: ParsedInput):
    if parsed.name is not None:
        return build_module(parsed.name)
    try:
        return build_module(classify(parsed.nu.g, parsed.nu))
    except ClassificationUnavailable:
        return module_from_final_type(parsed.nu)


def table_order(nu: FinalType) -> Tuple:
    """by codimension, then final types in decreasing lexicographic order"""
    return stratum_codim(final_to_young(nu)), tuple(-v for v in nu.nu)


def cmd_enumerate(args, out) -> int:
    rows = [stratum_row(nu) for nu in enumerate_final_types(args.g)]
    log.info("Enumerated %s types for g=%s", len(rows), args.g)
    out.write(render_rows(rows, args.format))
    return 0


def cmd_table(args, out) -> int:
    rows = [stratum_row(nu) for nu in sorted(enumerate_final_types(args.g), key=table_order)]
    fields = FIELDS if args.format != "text" else \
        ("name", "codim", "f", "a", "nu", "mu", "omega_word", "cycle_class")
    out.write(render_rows(rows, args.format, fields))
    return 0


def cmd_describe(args, out) -> int:
    parsed = parse_input(args.input, args.g)
    row = stratum_row(parsed.nu)
    if parsed.name is not None:
        row["name"] = render_name(parsed.name)
    elif row["name"] is None:
        log.warning("No name is tabulated for %s with g=%s > %s, showing invariants only",
                    parsed.nu, parsed.nu.g, MAX_GOLDEN_G)

    if args.format == "text":
        width = max(map(len, FIELDS))
        for field in FIELDS:
            out.write("%s  %s\n" % (field.ljust(width), render_text_value(field, row[field], row["g"])))
    else:
        out.write(render_rows([row], args.format))

    if args.show_module or args.show_filtration:
        module = _module_for(parsed)
        if args.show_module:
            out.write("\n%s\n" % render_module(module))
        if args.show_filtration:
            out.write("\n%s\n" % render_filtration(canonical_filtration(module)))
    return 0


def cmd_convert(args, out) -> int:
    parsed = parse_input(args.input, args.g)
    row = stratum_row(parsed.nu)
    if parsed.name is not None:
        row["name"] = render_name(parsed.name)
    values = {
        "name": row["name"] or "-",
        "nu": render_text_value("nu", row["nu"], row["g"]),
        "mu": render_text_value("mu", row["mu"], row["g"]),
        "omega": render_text_value("omega_oneline", row["omega_oneline"], row["g"]),
        "word": render_text_value("omega_word", row["omega_word"], row["g"]),
    }
    if args.to == "all":
        for key, value in values.items():
            out.write("%s=%s\n" % (key, value))
    else:
        out.write("%s\n" % values[args.to])
    return 0


def cmd_hasse(args, out) -> int:
    diagram = hasse(args.g)
    if args.format == "dot":
        names = names_by_young(args.g) if args.names and args.g <= MAX_GOLDEN_G else None
        out.write(to_dot(diagram, names))
    elif args.format == "json":
        document = {"g": diagram.g,
                    "nodes": [list(mu.mu) for mu in diagram.nodes],
                    "edges": [[list(a.mu), list(b.mu)] for a, b in diagram.edges]}
        out.write(json.dumps(document, indent=2) + "\n")
    elif args.format == "csv":
        out.write("from,to\n")
        for a, b in diagram.edges:
            out.write('"%s","%s"\n' % (json.dumps(list(a.mu), separators=(",", ":")),
                                      json.dumps(list(b.mu), separators=(",", ":"))))
    else:
        for a, b in diagram.edges:
            out.write("%s -> %s\n" % (render_text_value("mu", list(a.mu), diagram.g),
                                      render_text_value("mu", list(b.mu), diagram.g)))
    return 0
