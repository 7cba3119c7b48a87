"""
Canonical filtration of a monomial Dieudonne module and the invariants read off from it.

The canonical filtration is the smallest set of subspaces containing 0 and D that is stable under
V and F^-1. For symmetric BT1 modules it is a chain, and refining it to a full flag N_1..N_2g
determines the final type nu_i = dim V(N_i).
"""
import logging
from typing import Callable, Iterable, List, Tuple

import attr
from more_itertools import pairwise
from tabulate import tabulate

from eo_strata.dieudonne.module import ModuleError, MonomialModule, Subspace
from eo_strata.strata.core import FinalType, InvalidTypeError, YoungType, final_to_young

__all__ = ["FiltrationError", "FiltrationReport", "close_subspaces", "canonical_filtration", "final_type",
           "young_type", "p_rank", "a_number", "kernel_power_V", "kernel_power_F", "render_filtration"]
log = logging.getLogger(__name__)


class FiltrationError(ModuleError):
    pass


@attr.s(frozen=True)
class FiltrationReport(object):
    module = attr.ib(repr=False)  # type: MonomialModule
    pieces = attr.ib(converter=tuple)  # type: Tuple[Subspace, ...]
    final_type = attr.ib()  # type: FinalType
    refined = attr.ib(converter=tuple)  # type: Tuple[Subspace, ...]
    dual_pieces = attr.ib(converter=tuple)  # type: Tuple[Subspace, ...]
    dual_middle = attr.ib()  # type: Subspace
    interaction = attr.ib(converter=tuple)  # type: Tuple[int, ...]

    def piece(self, i: int) -> Subspace:
        """N_i of the refined flag, N_0 = 0"""
        return self.module.zero() if i == 0 else self.refined[i - 1]


def close_subspaces(module: MonomialModule, operations: Iterable[Callable[[Subspace], Subspace]]) -> List[Subspace]:
    """closure of {0, D} under the given operations, sorted by dimension"""
    operations = list(operations)
    found = {module.zero(), module.whole()}
    todo = list(found)
    while todo:
        current = todo.pop()
        for op in operations:
            new = op(current)
            if new not in found:
                found.add(new)
                todo.append(new)
    pieces = sorted(found, key=lambda s: (s.dim, sorted(s.members)))
    for smaller, bigger in pairwise(pieces):
        if not smaller < bigger:
            raise FiltrationError("Canonical filtration of %s is not totally ordered: %s and %s are incomparable"
                                  % (module, smaller, bigger))
    log.debug("Closure of %s has %s pieces of dimensions %s", module, len(pieces), [p.dim for p in pieces])
    return pieces


def _interpolate(pieces: List[Subspace]) -> List[int]:
    """nu_0..nu_2g from the values dim V(piece) at the piece dimensions"""
    values = [pieces[0].apply_V().dim]
    for smaller, bigger in pairwise(pieces):
        width = bigger.dim - smaller.dim
        rise = bigger.apply_V().dim - smaller.apply_V().dim
        if rise not in (0, width):
            raise FiltrationError("Gap between %s and %s has slope %s/%s, which is neither 0 nor 1"
                                  % (smaller, bigger, rise, width))
        slope = rise // width
        start = values[-1]
        values.extend([start + slope * step for step in range(1, width + 1)])
    return values


def _refine(pieces: List[Subspace]) -> List[Subspace]:
    """full flag N_1..N_2g through the canonical pieces, filling gaps in basis order"""
    flag = []
    for smaller, bigger in pairwise(pieces):
        members = set(smaller.members)
        for index in sorted(bigger.members - smaller.members):
            members.add(index)
            flag.append(Subspace(smaller.module, members))
    return flag


def canonical_filtration(module: MonomialModule) -> FiltrationReport:
    g = module.g
    pieces = close_subspaces(module, (Subspace.apply_V, Subspace.preimage_F))
    values = _interpolate(pieces)
    try:
        nu = FinalType(g, values[1:g + 1])
    except InvalidTypeError as e:
        raise FiltrationError("Filtration of %s yields no final type: %s" % (module, e)) from e
    refined = _refine(pieces)
    for i, piece in enumerate(refined, 1):
        assert piece.apply_V().dim == values[i], "dim V(N_%s) = %s, expected %s" % (i, piece.apply_V().dim, values[i])

    dual_pieces = close_subspaces(module, (Subspace.apply_F, Subspace.preimage_V))
    middle = [piece for piece in dual_pieces if piece.dim == g]
    if len(middle) != 1:
        raise FiltrationError("Dual filtration of %s has no piece of dimension g=%s" % (module, g))
    dual_middle = middle[0]
    interaction = [(refined[i - 1] & dual_middle).dim for i in range(1, g + 1)]

    log.debug("Final type of %s is %s, interaction dims %s", module, nu, interaction)
    return FiltrationReport(module=module, pieces=pieces, final_type=nu, refined=refined,
                            dual_pieces=dual_pieces, dual_middle=dual_middle, interaction=interaction)


def final_type(module: MonomialModule) -> FinalType:
    return canonical_filtration(module).final_type


def young_type(module: MonomialModule) -> YoungType:
    return final_to_young(final_type(module))


def p_rank(module: MonomialModule) -> int:
    """dimension of the stable image of V"""
    image = module.whole()
    for _ in range(2 * module.g):
        smaller = image.apply_V()
        if smaller == image:
            break
        image = smaller
    return image.dim


def a_number(module: MonomialModule) -> int:
    return module.g - module.whole().apply_V().apply_V().dim


def _kernel_power(module, k, preimage):
    if k < 0:
        raise ModuleError("Power must be non-negative, got %s" % k)
    kernel = module.zero()
    for _ in range(k):
        kernel = preimage(kernel)
    return kernel


def kernel_power_V(module: MonomialModule, k: int) -> Subspace:
    return _kernel_power(module, k, Subspace.preimage_V)


def kernel_power_F(module: MonomialModule, k: int) -> Subspace:
    return _kernel_power(module, k, Subspace.preimage_F)


def render_filtration(report: FiltrationReport) -> str:
    g = report.module.g
    pieces = tabulate([(p.dim, p.apply_V().dim, str(p)) for p in report.pieces],
                      headers=("dim", "dim V(N)", "canonical piece"), tablefmt="simple")
    flag = tabulate([(i, report.piece(i).apply_V().dim, report.interaction[i - 1] if i <= g else "", str(report.piece(i)))
                     for i in range(1, 2 * g + 1)],
                    headers=("i", "nu_i", "dim(N_i & N'_g)", "N_i"), tablefmt="simple")
    return "\n\n".join([
        "Canonical filtration\n%s" % pieces,
        "Refined filtration, final type %s\n%s" % (report.final_type, flag),
        "N'_g = FD = %s" % report.dual_middle,
    ])
