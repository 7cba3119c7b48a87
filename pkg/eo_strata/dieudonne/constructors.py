"""
Modules of the named indecomposable group schemes and the standard module of a final type.
"""
import logging

from eo_strata.dieudonne.module import ModuleBuilder, ModuleError, MonomialModule
from eo_strata.strata.core import FinalType

__all__ = ["module_L", "module_I_r_1", "module_I_r_2", "module_I_4_3", "module_I_4_3_printed",
           "module_from_final_type"]
log = logging.getLogger(__name__)


def _power(symbol, i):
    if i == 0:
        return "1"
    if i == 1:
        return symbol
    return "%s^%s" % (symbol, i)


def module_L() -> MonomialModule:
    """E/(F, 1-V) + E/(V, 1-F), the p-torsion of an ordinary elliptic curve"""
    return ModuleBuilder(1).add("e1", "e2").V("e1", "e1").F("e2", "e2").build()


def module_I_r_1(r: int) -> MonomialModule:
    """E/(F^r + V^r), basis F..F^r, 1, V..V^(r-1)"""
    if r < 1:
        raise ModuleError("I[r,1] needs r >= 1, got %s" % r)
    fs = [_power("F", i) for i in range(1, r + 1)]
    vs = [_power("V", i) for i in range(0, r)]
    builder = ModuleBuilder(r).add(*fs).add(*vs)
    for low, high in zip(fs, fs[1:]):
        builder.F(low, high)
    builder.F("1", "F")
    for low, high in zip(vs, vs[1:]):
        builder.V(low, high)
    # V * V^(r-1) = V^r = -F^r
    builder.V(vs[-1], fs[-1], sign=-1)
    return builder.build()


def module_I_r_2(r: int) -> MonomialModule:
    """E/(F^(r-1) - V) + E/(V^(r-1) - F)"""
    if r < 3:
        raise ModuleError("I[r,2] needs r >= 3, got %s" % r)
    fs = ["a.%s" % _power("F", i) for i in range(r)]
    vs = ["b.%s" % _power("V", i) for i in range(r)]
    builder = ModuleBuilder(r).add(*fs).add(*vs)
    for low, high in zip(fs, fs[1:]):
        builder.F(low, high)
    builder.V(fs[0], fs[-1])
    for low, high in zip(vs, vs[1:]):
        builder.V(low, high)
    builder.F(vs[0], vs[-1])
    return builder.build()


def _extended_final_type(nu: FinalType):
    """nu_0..nu_2g with nu_(2g-i) = nu_i + g - i"""
    g = nu.g
    extended = [nu[i] for i in range(g + 1)] + [None] * g
    for i in range(g):
        extended[2 * g - i] = nu[i] + g - i
    return extended


def module_from_final_type(nu: FinalType) -> MonomialModule:
    """
    The standard module of a final type on the basis Z1..Z2g.
    At a jump i of the extended final type V Z_i = Z_nu_i, at a stay V Z_i = 0.
    F kills Z1..Zg and sends Z_(g+c) to the basis vector at the c-th stay.
    """
    g = nu.g
    extended = _extended_final_type(nu)
    labels = ["Z%s" % i for i in range(1, 2 * g + 1)]
    builder = ModuleBuilder(g).add(*labels)
    stays = []
    for i in range(1, 2 * g + 1):
        if extended[i] > extended[i - 1]:
            builder.V(labels[i - 1], labels[extended[i] - 1])
        else:
            stays.append(i)
    assert len(stays) == g, "Extended final type %s has %s stays instead of %s" % (extended, len(stays), g)
    for c, stay in enumerate(stays, 1):
        builder.F(labels[g + c - 1], labels[stay - 1])
    return builder.build()


def module_I_4_3() -> MonomialModule:
    """the remaining indecomposable for g=4, as the standard module of [0,0,1,1]"""
    return module_from_final_type(FinalType(4, (0, 0, 1, 1)))


def module_I_4_3_printed() -> MonomialModule:
    """
    E/(F^2 - V) + E/(F - V) + E/(V^2 - F) taken literally.
    The outer factors have odd dimension, so the summands are not modules of group schemes on their own.
    """
    return (ModuleBuilder(4)
            .add("1:1", "1:F", "1:F^2").F("1:1", "1:F").F("1:F", "1:F^2").V("1:1", "1:F^2")
            .add("2:1", "2:F").F("2:1", "2:F").V("2:1", "2:F")
            .add("3:1", "3:V", "3:V^2").V("3:1", "3:V").V("3:V", "3:V^2").F("3:1", "3:V^2")
            .build())
