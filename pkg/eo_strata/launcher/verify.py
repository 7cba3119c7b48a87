"""
Recomputes every derivable column of the stored tables for g <= 4 by independent routes.
"""
import logging
from typing import Iterator, List, Tuple

from tabulate import tabulate

from eo_strata.catalog.golden import GoldenRow, build_module, classify, golden_hasse_edges, golden_rows, \
    golden_table, MAX_GOLDEN_G
from eo_strata.catalog.names import parse_name, render_name
from eo_strata.dieudonne.filtration import a_number, canonical_filtration, p_rank
from eo_strata.strata.core import enumerate_final_types, final_to_young, stratum_record, young_to_final
from eo_strata.strata.poset import hasse, orders_match
from eo_strata.strata.weyl import evaluate_word, from_young, length, to_young
from eo_strata.taut.ring import prank_class

__all__ = ["Check", "golden_checks", "run_checks", "cmd_verify"]
log = logging.getLogger(__name__)

Check = Tuple[str, str, object, object]  # subject, check, expected, actual


def _row_checks(row: GoldenRow) -> Iterator[Check]:
    subject = str(row)
    record = stratum_record(row.nu)
    yield subject, "mu from nu", row.mu, final_to_young(row.nu)
    yield subject, "nu from mu", row.nu, young_to_final(row.mu)
    yield subject, "combinatorial (f, a, codim)", (row.f, row.a, row.codim), (record.f, record.a, record.codim)

    module = build_module(row.name)
    report = canonical_filtration(module)
    whole = module.whole()
    yield subject, "engine nu", row.nu, report.final_type
    yield subject, "engine (f, a)", (row.f, row.a), (p_rank(module), a_number(module))
    yield subject, "dim(N_g & N'_g) = a", row.a, report.interaction[-1]
    yield subject, "dim(VD & FD) = a", row.a, (whole.apply_V() & whole.apply_F()).dim
    yield subject, "dim(N_i & N'_g) >= i - nu_i", True, \
        all(dim >= i - row.nu[i] for i, dim in enumerate(report.interaction, 1))

    omega = from_young(row.mu)
    yield subject, "word evaluates to omega", omega, evaluate_word(row.word)
    yield subject, "omega gives back mu", row.mu, to_young(omega)
    yield subject, "word is reduced", len(row.word), length(omega)
    yield subject, "length = dim", record.dim, length(omega)

    yield subject, "name round trip", row.name, parse_name(render_name(row.name))
    yield subject, "classify", row.name, classify(row.g, row.nu)
    if row.cycle_class is not None and row.a <= 1:
        yield subject, "p-rank class", row.cycle_class, prank_class(row.g, row.f)


def golden_checks() -> Iterator[Check]:
    for row in golden_rows():
        try:
            checks = list(_row_checks(row))
        except Exception as e:
            log.warning("Checking %s raised an error", row, exc_info=True)
            checks = [(str(row), "computation", "no error", repr(e))]
        yield from checks
    for g in range(1, MAX_GOLDEN_G + 1):
        yield "g=%s" % g, "all final types tabulated", set(enumerate_final_types(g)), {r.nu for r in golden_table(g)}
        yield "g=%s" % g, "Young order matches Bruhat order", True, orders_match(g)
    diagram = hasse(MAX_GOLDEN_G)
    yield "g=4", "Hasse nodes", 16, len(diagram.nodes)
    yield "g=4", "Hasse edges", set(golden_hasse_edges()), set(diagram.edges)


def run_checks(checks) -> Tuple[int, List[Check]]:
    count = 0
    failures = []
    for subject, check, expected, actual in checks:
        count += 1
        if expected == actual:
            log.info("%s: %s ok", subject, check)
        else:
            log.warning("%s: %s failed, expected %s but got %s", subject, check, expected, actual)
            failures.append((subject, check, expected, actual))
    return count, failures


def cmd_verify(args, out) -> int:
    count, failures = run_checks(golden_checks())
    if failures:
        out.write(tabulate([tuple(map(str, failure)) for failure in failures],
                           headers=("subject", "check", "expected", "actual"), tablefmt="simple") + "\n")
        out.write("verify: %s of %s checks failed\n" % (len(failures), count))
        return 1
    out.write("verify: all %s checks passed for %s tabulated types\n" % (count, len(golden_rows())))
    return 0
