import pytest

from weylppav import (DeterminantNotOne, LevelViolation, Matrix, RootSystemId,
                      all_systems, centralizer_element, centralizer_level,
                      diagram_automorphisms, divisor_chain, embed_block_diag,
                      exponent_level, gram_matrix, is_symplectic,
                      modular_curve_report, riemann_family, simple_reflections)
from weylppav.reference import expected_level

CATALOG = list(all_systems(8))


class TestLevel:
    @pytest.mark.parametrize("tag,level", [
        ("A4", 5), ("A1", 2), ("D7", 4), ("D6", 2), ("C3", 4), ("C6", 2),
        ("B8", 1), ("E6", 3), ("E7", 2), ("E8", 1), ("F4", 2), ("G2", 3),
    ])
    def test_table_values(self, tag, level):
        assert centralizer_level(RootSystemId.parse(tag)) == level

    def test_triple_agreement(self):
        for system in CATALOG:
            level = centralizer_level(system)
            assert level == expected_level(system)
            assert level == exponent_level(system)
            assert level == divisor_chain(system).divisors[0]


class TestCentralizerElement:
    def test_identity_params(self):
        el = centralizer_element(RootSystemId.parse("A2"), 1, 0, 0, 1)
        assert el.m == Matrix.identity(4)

    def test_a2_translation(self):
        el = centralizer_element(RootSystemId.parse("A2"), 1, 3, 0, 1)
        assert el.m.submatrix(0, 2, 2, 4) == Matrix([[2, 1], [1, 2]])
        assert is_symplectic(el.m)
        for refl in simple_reflections(RootSystemId.parse("A2")):
            emb = embed_block_diag(refl)
            assert el.m * emb.m == emb.m * el.m

    def test_level_violation(self):
        with pytest.raises(LevelViolation):
            centralizer_element(RootSystemId.parse("A2"), 1, 1, 0, 1)

    def test_determinant_not_one(self):
        with pytest.raises(DeterminantNotOne):
            centralizer_element(RootSystemId.parse("A2"), 1, 0, 0, 2)

    def test_lower_left_needs_no_level(self):
        # z0^{-1} is the integral Gram matrix, so any c works
        for system in CATALOG:
            assert gram_matrix(system).is_integral()
        el = centralizer_element(RootSystemId.parse("A2"), 1, 0, 7, 1)
        assert is_symplectic(el.m)

    def test_commutes_with_whole_embedded_action(self):
        for system in [RootSystemId.parse(t) for t in ("A3", "B3", "C3", "D4",
                                                       "F4", "G2")]:
            level = centralizer_level(system)
            gens = [embed_block_diag(g) for g in
                    simple_reflections(system) + diagram_automorphisms(system)]
            for params in ((1, level, 0, 1), (1, 0, 1, 1),
                           (1 + level, level, 1, 1)):
                a, b, c, d = params
                if a * d - b * c != 1:
                    continue
                el = centralizer_element(system, a, b, c, d)
                assert is_symplectic(el.m)
                for emb in gens:
                    assert el.m * emb.m == emb.m * el.m


class TestModularCurveReport:
    def test_e8_full_modular_group(self):
        report = modular_curve_report(RootSystemId.parse("E8"))
        assert report.level == 1
        assert report.curve == "H_1/Gamma"

    def test_g2(self):
        report = modular_curve_report(RootSystemId.parse("G2"))
        assert report.level == 3
        assert report.curve == "H_1/Gamma^0(3)"

    def test_c6(self):
        report = modular_curve_report(RootSystemId.parse("C6"))
        assert report.level == 2
        assert report.curve == "H_1/Gamma^0(2)"

    def test_level_matches_z0_denominators(self):
        for system in CATALOG:
            report = modular_curve_report(system)
            assert report.level == riemann_family(system).z0.denominator_lcm()
