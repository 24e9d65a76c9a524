import pytest
from gmpy2 import mpq
from hypothesis import given, settings
from hypothesis import strategies as st

from oscgk.poly import (
    GradedPair,
    Poly,
    RepConfig,
    compare_monomials,
    grading,
    is_graded_homogeneous,
    mono_mul,
    mono_x,
    mono_y,
)


def test_config_validation():
    RepConfig(2, 1, 2)
    with pytest.raises(ValueError):
        RepConfig(1, 1, 1)
    with pytest.raises(ValueError):
        RepConfig(4, 3, 2)
    with pytest.raises(ValueError):
        RepConfig(4, 0, 2)


class TestGrading:
    def test_x2_y4(self):
        cfg = RepConfig(4, 1, 4)
        m = mono_mul(mono_x(2, 4), mono_y(4, 4))
        assert grading(m, cfg) == GradedPair(1, 1)

    def test_constant(self):
        for cfg in (RepConfig(2, 1, 1), RepConfig(5, 2, 4)):
            assert grading((0,) * (2 * cfg.n), cfg) == GradedPair(0, 0)

    def test_pure_powers(self):
        # x1^a y4^b sits in degree (-a, -b) when n1 = 1, n2 = 3
        cfg = RepConfig(4, 1, 3)
        for a in range(4):
            for b in range(4):
                m = mono_mul(mono_x(1, 4, a), mono_y(4, 4, b))
                assert grading(m, cfg) == GradedPair(-a, -b)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            grading((0, 0, 0, 0), RepConfig(3, 1, 2))

    @given(st.data())
    @settings(max_examples=50, deadline=None)
    def test_additive(self, data):
        cfg = RepConfig(3, 1, 2)
        a = tuple(data.draw(st.integers(0, 4)) for _ in range(6))
        b = tuple(data.draw(st.integers(0, 4)) for _ in range(6))
        ga, gb = grading(a, cfg), grading(b, cfg)
        gab = grading(mono_mul(a, b), cfg)
        assert gab == GradedPair(ga.l1 + gb.l1, ga.l2 + gb.l2)


class TestHomogeneity:
    def test_two_terms_same_degree(self):
        cfg = RepConfig(2, 1, 1)
        p = Poly.x(1, 2) * Poly.x(2, 2) + Poly.y(1, 2) * Poly.y(2, 2)
        assert is_graded_homogeneous(p, cfg) == GradedPair(0, 0)

    def test_zero(self):
        assert is_graded_homogeneous(Poly.zero(2), RepConfig(2, 1, 1)) == GradedPair(0, 0)

    def test_mixed(self):
        cfg = RepConfig(2, 1, 1)
        assert is_graded_homogeneous(Poly.x(1, 2) + Poly.y(1, 2), cfg) is None


class TestArithmetic:
    def test_square(self):
        assert Poly.x(1, 2) * Poly.x(1, 2) == Poly.x(1, 2, 2)

    def test_zeta1_square(self):
        # (x1 y2 - x2 y1)^2 by binomial expansion
        n = 2
        zeta = Poly.x(1, n) * Poly.y(2, n) - Poly.x(2, n) * Poly.y(1, n)
        expected = (
            Poly.x(1, n, 2) * Poly.y(2, n, 2)
            - (Poly.x(1, n) * Poly.x(2, n) * Poly.y(1, n) * Poly.y(2, n)).scale(2)
            + Poly.x(2, n, 2) * Poly.y(1, n, 2)
        )
        assert zeta * zeta == expected
        assert zeta ** 2 == expected

    def test_additive_inverse(self):
        p = Poly.x(1, 2) + Poly.y(2, 2).scale(mpq(3, 2))
        assert (p + p.scale(-1)).is_zero()

    def test_no_zero_coefficients_stored(self):
        p = Poly(2, {(1, 0, 0, 0): 1, (0, 1, 0, 0): 0})
        assert len(p.terms) == 1

    @given(st.data())
    @settings(max_examples=30, deadline=None)
    def test_ring_axioms(self, data):
        n = 2
        def draw_poly():
            terms = {}
            for _ in range(data.draw(st.integers(0, 3))):
                m = tuple(data.draw(st.integers(0, 2)) for _ in range(2 * n))
                terms[m] = data.draw(st.integers(-3, 3))
            return Poly(n, terms)

        p, q, r = draw_poly(), draw_poly(), draw_poly()
        assert p * q == q * p
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r


class TestOrder:
    def test_lex_tiebreak(self):
        assert compare_monomials(mono_x(1, 2, 2), mono_mul(mono_x(1, 2), mono_x(2, 2))) == 1

    def test_degree_dominates(self):
        assert compare_monomials(mono_x(1, 2), mono_y(1, 2, 2)) == -1

    def test_position_significance(self):
        assert compare_monomials(mono_x(1, 2), mono_y(1, 2)) == 1

    @given(st.data())
    @settings(max_examples=50, deadline=None)
    def test_compatible_with_multiplication(self, data):
        a = tuple(data.draw(st.integers(0, 3)) for _ in range(4))
        b = tuple(data.draw(st.integers(0, 3)) for _ in range(4))
        m = tuple(data.draw(st.integers(0, 3)) for _ in range(4))
        c = compare_monomials(a, b)
        assert compare_monomials(mono_mul(a, m), mono_mul(b, m)) == c

    def test_homogeneous_product_grading(self):
        cfg = RepConfig(2, 1, 1)
        p = Poly.x(1, 2) * Poly.x(2, 2) + Poly.y(1, 2) * Poly.y(2, 2)
        q = Poly.x(2, 2) * Poly.y(1, 2) + Poly.x(1, 2) * Poly.x(2, 2, 2) * Poly.y(1, 2)
        gp = is_graded_homogeneous(p, cfg)
        gq = is_graded_homogeneous(q, cfg)
        assert gp == GradedPair(0, 0) and gq == GradedPair(1, 1)
        gpq = is_graded_homogeneous(p * q, cfg)
        assert gpq == GradedPair(gp.l1 + gq.l1, gp.l2 + gq.l2)


class TestRender:
    def test_golden(self):
        p = (Poly.x(1, 2, 2) * Poly.y(2, 2)).scale(-1) + Poly.y(1, 2).scale(mpq(3, 2))
        assert p.render() == "-1 x1^2 y2 + 3/2 y1"

    def test_zero(self):
        assert Poly.zero(3).render() == "0"

    def test_constant(self):
        assert Poly.one(2).scale(mpq(-5, 3)).render() == "-5/3"

    def test_descending_and_signs(self):
        p = Poly.x(1, 2) - Poly.y(1, 2)
        assert p.render() == "1 x1 - 1 y1"

    def test_laurent_exponent(self):
        assert Poly.monomial((0, 0, 0, -2)).render() == "1 y2^-2"
