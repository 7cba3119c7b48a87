"""
Output formats of the command line interface.

Records are plain dicts with the fields in FIELDS, so that the json output can be read back
without knowing any of the value types.
"""
import csv
import io
import json
import logging
from typing import Any, Dict, List, Optional, Sequence

from tabulate import tabulate

from eo_strata.catalog.golden import ClassificationUnavailable, classify, golden_table, reduced_class, MAX_GOLDEN_G
from eo_strata.catalog.names import parse_name, render_name
from eo_strata.strata.core import FinalType, stratum_record
from eo_strata.strata.weyl import from_final, reduced_word
from eo_strata.taut.ring import parse_class, render_class

__all__ = ["FIELDS", "FORMATS", "stratum_row", "render_rows", "render_text_value"]
log = logging.getLogger(__name__)

FIELDS = ("g", "name", "codim", "f", "a", "nu", "mu", "omega_oneline", "omega_word", "dim", "cycle_class")
FORMATS = ("text", "csv", "json")

Row = Dict[str, Any]


def _golden_class_text(nu: FinalType) -> Optional[str]:
    if nu.g > MAX_GOLDEN_G:
        return None
    return next((row.cycle_class_text for row in golden_table(nu.g) if row.nu == nu), None)


def stratum_row(nu: FinalType) -> Row:
    record = stratum_record(nu)
    omega = from_final(nu)
    try:
        name = render_name(classify(nu.g, nu))
    except ClassificationUnavailable:
        name = None
    cycle_class = reduced_class(nu.g, nu)
    return {
        "g": nu.g,
        "name": name,
        "codim": record.codim,
        "f": record.f,
        "a": record.a,
        "nu": list(nu.nu),
        "mu": list(record.young_type.mu),
        "omega_oneline": list(omega.perm),
        "omega_word": list(reduced_word(omega).letters),
        "dim": record.dim,
        "cycle_class": None if cycle_class is None else render_class(cycle_class, factored=_golden_class_text(nu)),
    }


def render_text_value(field: str, value, g: int) -> str:
    if value is None:
        return "-"
    if field == "nu":
        return "[%s]" % ",".join(map(str, value))
    if field == "mu":
        return "{%s}" % ",".join(map(str, value)) if value else "∅"
    if field == "omega_oneline":
        return "<%s>" % ",".join(map(str, value))
    if field == "omega_word":
        return "*".join("s%s" % i for i in value) if value else "1"
    if field == "name":
        return render_name(parse_name(value), unicode=True)
    if field == "cycle_class":
        return render_class(parse_class(value, g), human=True, factored=value)
    return str(value)


def _render_text(rows: Sequence[Row], fields) -> str:
    table = [[render_text_value(field, row[field], row["g"]) for field in fields] for row in rows]
    return tabulate(table, headers=fields, tablefmt="simple", disable_numparse=True) + "\n"


def _render_csv(rows: Sequence[Row], fields) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(fields)
    for row in rows:
        writer.writerow([json.dumps(row[field], separators=(",", ":")) if isinstance(row[field], list)
                         else "" if row[field] is None else row[field]
                         for field in fields])
    return buffer.getvalue()


def _render_json(rows: Sequence[Row], fields) -> str:
    return json.dumps([{field: row[field] for field in fields} for row in rows], ensure_ascii=False, indent=2) + "\n"


RENDERERS = {"text": _render_text, "csv": _render_csv, "json": _render_json}


def render_rows(rows: List[Row], fmt: str, fields: Sequence[str] = FIELDS) -> str:
    try:
        renderer = RENDERERS[fmt]
    except KeyError:
        raise ValueError("Unknown output format %s, choose one of %s" % (fmt, ", ".join(FORMATS)))
    return renderer(rows, tuple(fields))
