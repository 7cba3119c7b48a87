import pytest

from eo_strata.catalog.golden import build_module
from eo_strata.dieudonne.constructors import module_I_4_3, module_I_4_3_printed, module_I_r_1, module_I_r_2, \
    module_L, module_from_final_type
from eo_strata.dieudonne.filtration import FiltrationError, a_number, canonical_filtration, final_type, \
    kernel_power_F, kernel_power_V, p_rank, render_filtration, young_type
from eo_strata.dieudonne.module import ModuleBuilder, ModuleError, MonomialModule, direct_sum, render_module
from eo_strata.strata.core import FinalType, YoungType, enumerate_final_types, p_rank_of_final
from tests.conftest import nu


def test_module_L():
    m = module_L()
    assert m.dim == 2
    assert p_rank(m) == 1
    assert a_number(m) == 0
    assert final_type(m) == nu(1)


@pytest.mark.parametrize("r", range(1, 9))
def test_module_I_r_1(r):
    m = module_I_r_1(r)
    assert m.dim == 2 * r
    assert final_type(m) == FinalType(r, range(r))
    assert p_rank(m) == 0
    assert a_number(m) == 1


def test_module_I_r_1_details():
    m = module_I_r_1(2)
    assert m.whole().apply_V() == m.span(["V", "F^2"])
    assert render_module(m).splitlines()[-1].split() == ["4", "V", "0", "-F^2"]
    m = module_I_r_1(1)
    assert (m.kernel_F() & m.kernel_V()).dim == 1
    with pytest.raises(ModuleError):
        module_I_r_1(0)


def test_module_I_2_1_kernels():
    m = module_I_r_1(2)
    assert kernel_power_V(m, 2).dim == 3
    assert kernel_power_V(m, 1) == m.kernel_V()
    assert kernel_power_F(m, 0) == m.zero()
    assert m.whole().apply_V().apply_V().dim == 1
    assert p_rank(m) == 0


@pytest.mark.parametrize("r", range(3, 9))
def test_module_I_r_2(r):
    m = module_I_r_2(r)
    assert final_type(m) == FinalType(r, list(range(r - 1)) + [r - 2])
    assert young_type(m) == YoungType(r, (r, 1))
    assert a_number(m) == 2
    assert m.whole().apply_V().apply_V().dim == r - 2
    v_image = m.span(["a.F^%s" % (r - 1)] + ["b.V"] + ["b.V^%s" % i for i in range(2, r)])
    assert m.whole().apply_V() == v_image
    expected = m.span(["a.F^%s" % (r - 2) if r > 3 else "a.F", "a.F^%s" % (r - 1), "b.1", "b.V"]
                      + ["b.V^%s" % i for i in range(2, r)])
    assert v_image.preimage_F() == expected
    assert expected.dim == r + 2


def test_module_I_r_2_needs_r_3():
    with pytest.raises(ModuleError):
        module_I_r_2(2)


def test_module_I_4_3():
    m = module_I_4_3()
    assert m.dim == 8
    assert m.whole().apply_V().apply_V().dim == 1
    assert final_type(m) == nu(0, 0, 1, 1)
    assert p_rank(m) == 0
    assert a_number(m) == 3


def test_module_I_4_3_printed_presentation():
    # the literal three-factor presentation is I[1,1] + I[3,2] up to a sign
    m = module_I_4_3_printed()
    assert m.g == 4
    assert final_type(m) == final_type(direct_sum([module_I_r_1(1), module_I_r_2(3)])) == nu(0, 1, 1, 1)
    assert a_number(m) == 3


def test_direct_sum():
    assert final_type(direct_sum([module_L(), module_L()])) == nu(1, 2)
    assert final_type(direct_sum([module_L(), module_I_r_1(1), module_I_r_1(2)])) == nu(1, 1, 1, 2)
    for g in range(1, 6):
        assert final_type(direct_sum([module_I_r_1(1)] * g)) == FinalType(g, [0] * g)
    m = direct_sum([module_L(), module_I_r_1(1)])
    assert m.labels == ("1:e1", "1:e2", "2:F", "2:1")
    with pytest.raises(ModuleError):
        direct_sum([])


def test_malformed_modules():
    with pytest.raises(ModuleError):
        ModuleBuilder(1).add("x", "y").F("x", "y").V("y", "x").build()
    with pytest.raises(ModuleError):
        ModuleBuilder(1).add("x", "y").V("x", "y").V("y", "y").build()
    with pytest.raises(ModuleError):
        MonomialModule(1, ["x"], [None], [None])
    with pytest.raises(ModuleError):
        ModuleBuilder(1).add("x", "y").F("x", "z")


def test_filtration_error_without_middle_piece():
    zero_actions = MonomialModule(1, ["x", "y"], [None, None], [None, None])
    with pytest.raises(FiltrationError):
        canonical_filtration(zero_actions)


def test_ordinary_and_superspecial_interaction():
    for g in range(1, 6):
        ordinary = canonical_filtration(direct_sum([module_L()] * g))
        assert ordinary.interaction[g - 1] == 0
        superspecial = canonical_filtration(direct_sum([module_I_r_1(1)] * g))
        assert list(superspecial.interaction) == list(range(1, g + 1))


def test_golden_modules(golden_row):
    m = build_module(golden_row.name)
    report = canonical_filtration(m)
    assert report.final_type == golden_row.nu
    assert (p_rank(m), a_number(m)) == (golden_row.f, golden_row.a)
    assert report.interaction[-1] == golden_row.a
    assert all(dim >= i - golden_row.nu[i] for i, dim in enumerate(report.interaction, 1))
    whole = m.whole()
    assert golden_row.g - whole.apply_V().apply_V().dim == (whole.apply_V() & whole.apply_F()).dim
    assert whole.apply_V().apply_F() == m.zero()
    assert whole.apply_F().apply_V() == m.zero()
    for smaller, bigger in zip(report.pieces, report.pieces[1:]):
        assert smaller < bigger


def test_i_r_2_filtration_pieces():
    report = canonical_filtration(module_I_r_2(4))
    assert [p.dim for p in report.pieces] == sorted({p.dim for p in report.pieces})
    assert report.piece(4) == module_I_r_2(4).whole().apply_V()
    assert report.piece(6) == report.piece(4).preimage_F()


@pytest.mark.parametrize("g", range(1, 11))
def test_p_rank_families(g):
    for f in range(g):
        m = direct_sum([module_L()] * f + [module_I_r_1(g - f)])
        assert final_type(m) == FinalType(g, [i if i <= f else i - 1 for i in range(1, g + 1)])
        assert young_type(m) == YoungType(g, (g - f,))
        assert p_rank(m) == f
    for f in range(g + 1):
        m = direct_sum([module_L()] * f + [module_I_r_1(1)] * (g - f))
        assert final_type(m) == FinalType(g, [min(i, f) for i in range(1, g + 1)])
        assert young_type(m) == YoungType(g, range(g - f, 0, -1))


def test_two_ordinary_summands():
    report = canonical_filtration(direct_sum([module_L(), module_L()]))
    assert report.final_type == nu(1, 2)
    assert [p.dim for p in report.pieces] == [0, 2, 4]
    assert list(report.interaction) == [0, 0]


def _with_ordinary(f, tail):
    """final type of L^f plus a summand of final type tail"""
    return FinalType.of(list(range(1, f + 1)) + [f + v for v in tail])


def _family(g):
    for f in range(g):
        r = g - f
        yield "L^%s+I[%s,1]" % (f, r), [module_L()] * f + [module_I_r_1(r)], _with_ordinary(f, range(r))
        yield "L^%s+I[1,1]^%s" % (f, r), [module_L()] * f + [module_I_r_1(1)] * r, _with_ordinary(f, [0] * r)
        if r >= 3:
            tail = list(range(r - 1)) + [r - 2]
            yield "L^%s+I[%s,2]" % (f, r), [module_L()] * f + [module_I_r_2(r)], _with_ordinary(f, tail)


@pytest.mark.parametrize("g", range(1, 9))
def test_family_final_types_and_interaction(g):
    for label, summands, expected in _family(g):
        m = direct_sum(summands)
        report = canonical_filtration(m)
        assert report.final_type == expected, label
        assert list(report.interaction) == [i - expected[i] for i in range(1, g + 1)], label
        assert report.interaction[-1] == a_number(m) == g - expected[g], label
        assert p_rank(m) == p_rank_of_final(expected), label


@pytest.mark.parametrize("g", range(1, 8))
def test_standard_module_recovers_final_type(g):
    for final in enumerate_final_types(g):
        report = canonical_filtration(module_from_final_type(final))
        assert report.final_type == final
        assert list(report.interaction) == [i - final[i] for i in range(1, g + 1)]


def test_render_filtration():
    text = render_filtration(canonical_filtration(module_I_r_2(3)))
    assert text.startswith("Canonical filtration")
    assert "final type [0,1,1]" in text
    assert "N'_g = FD = " in text
