import itertools

import pytest

from z4lcd.codes import (
    CodeSpec,
    DivisorSet,
    code_size,
    divisor_poly,
    factor_divisor,
    hull_report,
    hull_to_wire,
    is_lcd,
    reciprocal_set,
    spec_to_wire,
)
from z4lcd.cyclotomic import build_factor_table
from z4lcd.z4poly import Z4Poly

SWEEP_LENGTHS = list(range(1, 16, 2))


def all_subsets(ids):
    ids = sorted(ids)
    for r in range(len(ids) + 1):
        yield from (frozenset(c) for c in itertools.combinations(ids, r))


def all_partitions(table):
    ids = sorted(table.ids())
    for parts in itertools.product(range(3), repeat=len(ids)):
        f = {i for i, p in zip(ids, parts) if p == 0}
        g = {i for i, p in zip(ids, parts) if p == 1}
        yield CodeSpec.of(table, f, g)


@pytest.fixture(scope="module")
def t7():
    return build_factor_table(7)


class TestDivisorSet:
    def test_rejects_unknown_ids(self, t7):
        with pytest.raises(ValueError):
            DivisorSet.of(t7, [0, 9])

    def test_degree_sums_members(self, t7):
        assert DivisorSet.of(t7, [1, 2]).degree == 6
        assert DivisorSet.of(t7).degree == 0

    def test_complement(self, t7):
        assert DivisorSet.of(t7, [0]).complement().members == frozenset({1, 2})


class TestDivisorPoly:
    def test_empty_set_is_one(self, t7):
        assert divisor_poly(DivisorSet.of(t7)) == Z4Poly.one()

    def test_full_set_is_x7_minus_1(self, t7):
        assert divisor_poly(DivisorSet.of(t7, t7.ids())) == Z4Poly.x_pow_minus_one(7)

    def test_pair_product(self, t7):
        # oracle: (X^7-1) / (X-1) computed by division
        quotient, rem = Z4Poly.x_pow_minus_one(7).divmod_monic(Z4Poly([3, 1]))
        assert rem.is_zero
        assert divisor_poly(DivisorSet.of(t7, [1, 2])) == quotient


class TestReciprocalSet:
    def test_self_reciprocal_member(self, t7):
        assert reciprocal_set(DivisorSet.of(t7, [0])).members == frozenset({0})

    def test_pair_member(self, t7):
        assert reciprocal_set(DivisorSet.of(t7, [1])).members == frozenset({2})

    def test_empty(self, t7):
        assert reciprocal_set(DivisorSet.of(t7)).members == frozenset()

    def test_involution_and_poly_compatibility(self):
        for n in SWEEP_LENGTHS:
            table = build_factor_table(n)
            for members in all_subsets(table.ids()):
                ds = DivisorSet(table, members)
                rr = reciprocal_set(reciprocal_set(ds))
                assert rr.members == members
                assert divisor_poly(reciprocal_set(ds)) == divisor_poly(ds).reciprocal()


class TestFactorDivisor:
    def test_full_product(self, t7):
        assert factor_divisor(Z4Poly.x_pow_minus_one(7), t7).members == t7.ids()

    def test_one_maps_to_empty(self, t7):
        assert factor_divisor(Z4Poly.one(), t7).members == frozenset()

    def test_single_factor(self, t7):
        assert factor_divisor(Z4Poly([3, 1]), t7).members == frozenset({0})

    @pytest.mark.parametrize("coeffs", [(1, 1), (1, 2, 1), (2, 1), ()])
    def test_rejects_non_divisors(self, t7, coeffs):
        with pytest.raises(ValueError):
            factor_divisor(Z4Poly(coeffs), t7)

    def test_round_trip_all_subsets(self):
        for n in SWEEP_LENGTHS:
            table = build_factor_table(n)
            for members in all_subsets(table.ids()):
                ds = DivisorSet(table, members)
                assert factor_divisor(divisor_poly(ds), table).members == members


class TestCodeSpec:
    def test_rejects_overlap(self, t7):
        with pytest.raises(ValueError):
            CodeSpec.of(t7, f={0}, g={0})

    def test_rejects_missing_cover(self, t7):
        with pytest.raises(ValueError):
            CodeSpec.of(t7, f={0}, g=set(), h=set())

    def test_h_defaults_to_complement(self, t7):
        spec = CodeSpec.of(t7, f={0}, g=set())
        assert spec.h_set.members == frozenset({1, 2})


class TestHullReport:
    def test_lcd_example(self, t7):
        report = hull_report(CodeSpec.of(t7, f={0}, g=set()))
        assert (report.deg_H, report.deg_G, report.hull_size, report.lcd) == (0, 0, 1, True)

    def test_reciprocal_pair_split(self, t7):
        # f = {f[1,7]}, h = {g[1,1], f*[1,7]}: H picks up the partner
        report = hull_report(CodeSpec.of(t7, f={1}, g=set()))
        assert report.H.members == frozenset({2})
        assert report.G.members == frozenset()
        assert (report.deg_H, report.deg_G, report.hull_size, report.lcd) == (3, 0, 64, False)

    @pytest.mark.parametrize("n", [3, 7])
    def test_all_twos_code(self, n):
        table = build_factor_table(n)
        report = hull_report(CodeSpec.of(table, f=set(), g=table.ids()))
        assert report.H.members == frozenset()
        assert report.G.members == table.ids()
        assert report.hull_size == 2**n
        assert not report.lcd

    def test_degree_accounting(self):
        for n in SWEEP_LENGTHS:
            table = build_factor_table(n)
            for spec in all_partitions(table):
                report = hull_report(spec)
                lcm_set = spec.f_set | reciprocal_set(spec.h_set)
                assert report.deg_H + lcm_set.degree + report.deg_G == n


class TestCodeSize:
    def test_ambient_code(self, t7):
        assert code_size(CodeSpec.of(t7, f=set(), g=set())) == 4**7

    def test_zero_code(self, t7):
        assert code_size(CodeSpec.of(t7, f=t7.ids(), g=set())) == 1

    def test_all_twos(self):
        t3 = build_factor_table(3)
        assert code_size(CodeSpec.of(t3, f=set(), g=t3.ids())) == 8


class TestIsLcd:
    def test_pair_product_generator(self, t7):
        assert is_lcd(CodeSpec.of(t7, f={1, 2}, g=set()))

    def test_half_pair_is_not(self, t7):
        assert not is_lcd(CodeSpec.of(t7, f={1}, g=set()))

    def test_zero_code_is_lcd(self, t7):
        assert is_lcd(CodeSpec.of(t7, f=t7.ids(), g=set()))

    def test_structural_equivalence_sweep(self):
        # LCD exactly when g is trivial and f is reciprocal-closed
        for n in SWEEP_LENGTHS:
            table = build_factor_table(n)
            for spec in all_partitions(table):
                structural = (
                    not spec.g_set.members
                    and reciprocal_set(spec.f_set).members == spec.f_set.members
                )
                assert is_lcd(spec) == structural


class TestWireForms:
    def test_spec_wire(self, t7):
        wire = spec_to_wire(CodeSpec.of(t7, f={1}, g={0}))
        assert wire == {"N": 7, "f": [1], "g": [0], "h": [2]}

    def test_hull_wire(self, t7):
        wire = hull_to_wire(hull_report(CodeSpec.of(t7, f={1}, g=set())))
        assert wire == {
            "degH": 3,
            "degG": 0,
            "hullSize": 64,
            "lcd": False,
            "H": [2],
            "G": [],
        }
