"""
The complete tables for g <= 4, name -> module construction and table-backed classification.
"""
import functools
import logging
from importlib import resources
from typing import Dict, List, Optional, Tuple

import attr
import yaml
from tabulate import tabulate

from eo_strata.catalog.names import GroupSchemeName, make_name, parse_name, render_name
from eo_strata.dieudonne.constructors import module_I_4_3, module_I_r_1, module_I_r_2, module_L
from eo_strata.dieudonne.module import MonomialModule, direct_sum
from eo_strata.strata.core import FinalType, InvalidTypeError, LengthMismatchError, YoungType, final_to_young, \
    full_dimension, stratum_record
from eo_strata.strata.weyl import WeylWord
from eo_strata.taut.ring import LambdaPoly, parse_class, prank_class

__all__ = ["MAX_GOLDEN_G", "GoldenDataError", "ClassificationUnavailable", "GoldenRow", "GoldenData",
           "load_golden", "golden_table", "golden_rows", "golden_hasse_edges", "classify", "build_module",
           "decomposable_a2_list", "reduced_class", "names_by_young"]
log = logging.getLogger(__name__)

MAX_GOLDEN_G = 4
GOLDEN_RESOURCE = "golden.yaml"


class GoldenDataError(ValueError):
    pass


class ClassificationUnavailable(LookupError):
    pass


@attr.s(frozen=True)
class GoldenRow(object):
    g = attr.ib()  # type: int
    name = attr.ib()  # type: GroupSchemeName
    codim = attr.ib()  # type: int
    f = attr.ib()  # type: int
    a = attr.ib()  # type: int
    nu = attr.ib()  # type: FinalType
    mu = attr.ib()  # type: YoungType
    word = attr.ib()  # type: WeylWord
    cycle_class = attr.ib(default=None)  # type: Optional[LambdaPoly]
    cycle_class_text = attr.ib(default=None)  # type: Optional[str]

    def __str__(self):
        return "%s (g=%s)" % (render_name(self.name), self.g)


@attr.s(frozen=True)
class GoldenData(object):
    version = attr.ib()  # type: int
    rows = attr.ib(converter=tuple)  # type: Tuple[GoldenRow, ...]
    hasse_g4 = attr.ib(converter=tuple)  # type: Tuple[Tuple[YoungType, YoungType], ...]


def _row_from_record(record) -> GoldenRow:
    g = record["g"]
    text = record.get("cycle_class")
    return GoldenRow(g=g, name=parse_name(record["name"]), codim=record["codim"], f=record["f"], a=record["a"],
                     nu=FinalType(g, record["nu"]), mu=YoungType(g, record["mu"]), word=WeylWord(g, record["word"]),
                     cycle_class=parse_class(text, g) if text else None, cycle_class_text=text)


def _row_failures(row: GoldenRow):
    record = stratum_record(row.nu)
    checks = [
        ("g of name", row.g, row.name.g),
        ("mu from nu", row.mu, final_to_young(row.nu)),
        ("codim = sum(mu)", row.codim, sum(row.mu.mu)),
        ("f = g - mu_1", row.f, row.g - row.mu.part(1)),
        ("a = #parts", row.a, len(row.mu.mu)),
        ("f from nu", row.f, record.f),
        ("a from nu", row.a, record.a),
        ("dim + codim", full_dimension(row.g), record.dim + row.codim),
    ]
    return [(str(row), check, expected, actual) for check, expected, actual in checks if expected != actual]


def _parse_golden(document) -> GoldenData:
    rows = [_row_from_record(record) for record in document["rows"]]
    failures = [failure for row in rows for failure in _row_failures(row)]
    if failures:
        raise GoldenDataError("Golden data is inconsistent:\n%s" % tabulate(
            failures, headers=("row", "check", "expected", "actual"), tablefmt="simple"))
    edges = [(YoungType(4, a), YoungType(4, b)) for a, b in document["hasse_g4"]]
    return GoldenData(version=document["version"], rows=rows, hasse_g4=edges)


@functools.lru_cache(maxsize=None)
def load_golden() -> GoldenData:
    text = resources.files(__package__).joinpath(GOLDEN_RESOURCE).read_text(encoding="utf-8")
    data = _parse_golden(yaml.safe_load(text))
    log.debug("Loaded %s golden rows (version %s)", len(data.rows), data.version)
    return data


def _check_golden_g(g):
    if not 1 <= g <= MAX_GOLDEN_G:
        raise ClassificationUnavailable("Classification table unavailable for g=%s, only 1 <= g <= %s is tabulated"
                                        % (g, MAX_GOLDEN_G))


def golden_rows() -> Tuple[GoldenRow, ...]:
    return load_golden().rows


def golden_table(g: int) -> List[GoldenRow]:
    _check_golden_g(g)
    return [row for row in golden_rows() if row.g == g]


def golden_hasse_edges() -> Tuple[Tuple[YoungType, YoungType], ...]:
    return load_golden().hasse_g4


def classify(g: int, nu: FinalType) -> GroupSchemeName:
    _check_golden_g(g)
    if nu.g != g:
        raise LengthMismatchError("Final type %s has length %s, but g is %s" % (nu, nu.g, g))
    for row in golden_table(g):
        if row.nu == nu:
            return row.name
    raise ClassificationUnavailable("No tabulated name for %s" % (nu,))


def names_by_young(g: int, unicode: bool = False) -> Dict[YoungType, str]:
    return {row.mu: render_name(row.name, unicode=unicode) for row in golden_table(g)}


def _factor_module(r, a) -> MonomialModule:
    if a == 1:
        return module_I_r_1(r)
    if a == 2:
        return module_I_r_2(r)
    assert (r, a) == (4, 3), "I[%s,%s] passed name validation" % (r, a)
    return module_I_4_3()


def build_module(name: GroupSchemeName) -> MonomialModule:
    """direct sum of L^e and the factors, in canonical order"""
    summands = [module_L()] * name.l_exponent + [_factor_module(r, a) for r, a in name.factors]
    return direct_sum(summands)


def decomposable_a2_list(g: int) -> List[GroupSchemeName]:
    """I[r,1]+I[g-r,1] for 1 <= r <= g/2"""
    if g < 2:
        raise InvalidTypeError("Decomposable types with a=2 need g >= 2, got %s" % g)
    return [make_name(0, (r, 1), (g - r, 1)) for r in range(1, g // 2 + 1)]


def reduced_class(g: int, nu: FinalType) -> Optional[LambdaPoly]:
    """
    Class of the reduced stratum: the p-rank class for a <= 1, the tabulated class up to g=3 otherwise.
    """
    if nu.g != g:
        raise LengthMismatchError("Final type %s has length %s, but g is %s" % (nu, nu.g, g))
    record = stratum_record(nu)
    if record.a <= 1:
        return prank_class(g, record.f)
    if g < MAX_GOLDEN_G:
        return next(row.cycle_class for row in golden_table(g) if row.nu == nu)
    return None
