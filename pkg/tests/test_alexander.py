import itertools
import math

import pytest

from biquandles import (SwitchError, WitnessError, is_homomorphism,
                        kernel_one_minus_s, make_alexander, make_module,
                        make_scalar_module, make_switch_biquandle,
                        normalize_iso, serialize_matrix, translation_map,
                        trivial_biquandle, verify_biquandle)
from biquandles.modules import counting_element_order

from conftest import SWITCH_A, SWITCH_B, Z2Z2_MATRIX, scalar_modules


class TestMakeAlexander:
    def test_z3_printed_blocks(self):
        # element order 1, 2, 0: the up block of Z_3 with s=2, t=1
        table = make_alexander(make_scalar_module(3, 2, 1),
                               counting_element_order(3, 1))
        assert table.up == ((3, 2, 1), (1, 3, 2), (2, 1, 3))
        assert table.down == ((2, 2, 2), (1, 1, 1), (3, 3, 3))
        assert table.downbar == ((2, 2, 2), (1, 1, 1), (3, 3, 3))

    def test_z3_down_block_from_formula(self):
        # oracle: x_y = s x recomputed by direct modular arithmetic
        order = [1, 2, 0]
        index = {v: i + 1 for i, v in enumerate(order)}
        expected = tuple(
            tuple(index[(2 * x) % 3] for _ in order) for x in order)
        table = make_alexander(make_scalar_module(3, 2, 1),
                               counting_element_order(3, 1))
        assert table.down == expected == ((2, 2, 2), (1, 1, 1), (3, 3, 3))

    def test_up_block_from_formula_canonical_order(self):
        mod = make_scalar_module(5, 2, 3)
        table = make_alexander(mod)
        for x in range(5):
            for y in range(5):
                want = (3 * x + (1 - 6) * y) % 5
                assert table.up[x][y] == want + 1

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_s_t_one_gives_trivial(self, n):
        assert make_alexander(make_scalar_module(n, 1, 1)) == \
            trivial_biquandle(n)

    def test_custom_order_must_be_complete(self):
        with pytest.raises(ValueError):
            make_alexander(make_scalar_module(3, 2, 1), ((0,), (1,), (1,)))

    def test_always_biquandle_scalar_sweep(self):
        for m in range(2, 9):
            for mod in scalar_modules(m):
                assert verify_biquandle(make_alexander(mod)).passed

    def test_always_biquandle_rank_two(self):
        # all commuting pairs of invertible 2x2 matrices over Z_2, plus a
        # couple of modulus-3 samples
        gl2 = [m for m in itertools.product(range(2), repeat=4)
               if (m[0] * m[3] - m[1] * m[2]) % 2 == 1]
        mats = [((a, b), (c, d)) for a, b, c, d in gl2]

        def mul(x, y):
            return tuple(
                tuple(sum(x[i][l] * y[l][j] for l in range(2)) % 2
                      for j in range(2)) for i in range(2))

        pairs = [(s, t) for s in mats for t in mats if mul(s, t) == mul(t, s)]
        for s, t in pairs:
            table = make_alexander(make_module(2, 2, s, t))
            assert verify_biquandle(table).passed, (s, t)
        for s, t in [((( 1, 1), (0, 1)), ((2, 0), (0, 2))),
                     (((2, 1), (0, 2)), ((2, 1), (0, 2)))]:
            table = make_alexander(make_module(3, 2, s, t))
            assert verify_biquandle(table).passed, (s, t)

    @pytest.mark.parametrize("m", [4, 5, 6, 7, 8])
    def test_always_biquandle_rank_two_larger_moduli(self, m):
        # structured commuting families: (S, S), (S, S^{-1}), (S, c I)
        shear = ((1, 1), (0, 1))
        rot = ((0, 1), (m - 1, 0))
        unit = max(u for u in range(1, m) if math.gcd(u, m) == 1)
        scalar = ((unit, 0), (0, unit))
        samples = [(shear, shear), (rot, rot), (shear, scalar),
                   (scalar, rot)]
        mod0 = make_module(m, 2, shear, shear)
        samples.append((shear, mod0.s_inverse))
        for s, t in samples:
            table = make_alexander(make_module(m, 2, s, t))
            assert verify_biquandle(table).passed, (m, s, t)


class TestMakeSwitch:
    def test_published_matrix_verbatim(self, z2z2_constructed):
        assert serialize_matrix(z2z2_constructed) == Z2Z2_MATRIX

    def test_report_flags(self):
        report = make_switch_biquandle(2, 2, SWITCH_A, SWITCH_B, (1, 1),
                                       counting_element_order(2, 2))
        assert report.switch_condition_holds
        assert report.axioms.passed

    def test_zero_shift_variant(self):
        # regression fixture: same A, B without the constant shift also
        # satisfies the commutator condition and the axioms
        report = make_switch_biquandle(2, 2, SWITCH_A, SWITCH_B)
        assert report.switch_condition_holds
        assert report.axioms.passed

    def test_identity_switch_degenerates(self):
        # A = B = I gives C = D = 0, so the pair map (a, b) -> (a + b, 0)
        # cannot be inverted; recorded as the error verdict
        ident = ((1, 0), (0, 1))
        with pytest.raises(SwitchError):
            make_switch_biquandle(2, 2, ident, ident)

    def test_non_invertible_inputs_rejected(self):
        with pytest.raises(SwitchError):
            make_switch_biquandle(2, 2, ((1, 1), (1, 1)), SWITCH_B)
        with pytest.raises(SwitchError):
            make_switch_biquandle(4, 1, ((2,),), ((1,),))

    def test_scalar_switch(self):
        # over Z_5 with A=2, B=3: C = 2^{-1}3^{-1}2(1-2), D = 1-2^{-1}3^{-1}23
        report = make_switch_biquandle(5, 1, ((2,),), ((3,),))
        assert report.table.n == 5


class TestTranslations:
    def test_kernel_translations_are_automorphisms(self):
        mod = make_scalar_module(8, 3, 5)
        table = make_alexander(mod)
        kernel = set(kernel_one_minus_s(mod).elements)
        for z in mod.elements:
            perm = translation_map(mod, z)
            is_auto = sorted(perm) == list(range(1, 9)) and \
                is_homomorphism(table, table, perm)
            assert is_auto == (z in kernel), z

    def test_failing_pair_exhibited_for_non_kernel_shift(self):
        mod = make_scalar_module(8, 3, 5)
        table = make_alexander(mod)
        perm = translation_map(mod, (1,))
        bad = [(a, b) for a in range(1, 9) for b in range(1, 9)
               if perm[table.op("down", a, b) - 1] !=
               table.op("down", perm[a - 1], perm[b - 1])]
        assert bad  # z = 1 is outside Ker(1-s); the down equation breaks


class TestNormalizeIso:
    def test_zero_fixing_map_unchanged(self):
        mod = make_scalar_module(3, 2, 1)
        assert normalize_iso(mod, mod, (1, 2, 3)) == (1, 2, 3)

    def test_translation_normalizes_to_identity(self):
        mod = make_scalar_module(8, 3, 5)
        g4 = translation_map(mod, (4,))
        assert normalize_iso(mod, mod, g4) == tuple(range(1, 9))

    def test_normalized_map_is_iso_and_fixes_zero(self):
        mod_a = make_scalar_module(5, 2, 3)
        mod_b = make_scalar_module(5, 2, 3)
        ta, tb = make_alexander(mod_a), make_alexander(mod_b)
        from biquandles import all_isomorphisms
        for f in all_isomorphisms(ta, tb):
            norm = normalize_iso(mod_a, mod_b, f)
            assert norm[0] == 1  # zero is canonically first
            assert is_homomorphism(ta, tb, norm)

    def test_non_isomorphism_rejected(self):
        mod = make_scalar_module(3, 2, 1)
        with pytest.raises(WitnessError):
            normalize_iso(mod, mod, (2, 1, 3))
