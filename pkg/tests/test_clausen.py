import math

import pytest
from hypothesis import given, settings, strategies as st

from lirep import (
    DomainError,
    ExclusionError,
    chebyshev_T,
    clausen_bernoulli,
    clausen_direct,
    clausen_via_hurwitz,
    riemann_zeta,
)

from oracles import alternating_odd_cubes, clausen_c_brute, clausen_s1, clausen_s_brute

TWO_PI = 2.0 * math.pi


class TestClausenDirect:
    def test_sin_vanishes_at_zero(self):
        assert clausen_direct(2.5, 0.0).sin_part == 0

    def test_cos_at_zero_is_zeta(self):
        v = clausen_direct(2.0, 0.0)
        assert v.cos_part == pytest.approx(riemann_zeta(2), rel=1e-12)

    def test_s3_quarter_period(self):
        # S_3(pi/2) reduces to the alternating odd-cube series = pi^3/32
        ref = alternating_odd_cubes()
        assert ref == pytest.approx(math.pi**3 / 32.0, abs=1e-12)
        v = clausen_direct(3.0, math.pi / 2.0)
        assert v.sin_part.real == pytest.approx(ref, abs=1e-11)

    def test_raw_series_matches_brute_force(self):
        v = clausen_direct(2.5, 1.9, tol=1e-11, use_bernoulli=False)
        assert v.sin_part.real == pytest.approx(clausen_s_brute(2.5, 1.9), abs=1e-9)
        assert v.cos_part.real == pytest.approx(clausen_c_brute(2.5, 1.9), abs=1e-9)

    def test_domain(self):
        with pytest.raises(DomainError):
            clausen_direct(1.0, 0.5)
        with pytest.raises(DomainError):
            clausen_direct(0.5 + 2.0j, 0.5)

    def test_periodicity_and_parity(self):
        a = clausen_direct(2.5, 1.1)
        b = clausen_direct(2.5, 1.1 + TWO_PI)
        assert a.sin_part == pytest.approx(b.sin_part, abs=1e-10)
        assert a.cos_part == pytest.approx(b.cos_part, abs=1e-10)
        c = clausen_direct(2.5, -1.1)
        assert c.sin_part == pytest.approx(-a.sin_part, abs=1e-10)
        assert c.cos_part == pytest.approx(a.cos_part, abs=1e-10)

    def test_real_for_real_order(self):
        v = clausen_direct(3.3, 2.2, use_bernoulli=False)
        assert v.sin_part.imag == 0.0
        assert v.cos_part.imag == 0.0


class TestClausenBernoulli:
    def test_s1_quarter(self):
        ref = clausen_s1(math.pi / 2.0)
        assert ref == pytest.approx(math.pi / 4.0, abs=1e-9)
        assert clausen_bernoulli("sin", 1, math.pi / 2.0) == pytest.approx(ref, abs=1e-9)

    def test_c2_zero(self):
        assert clausen_bernoulli("cos", 2, 0.0) == pytest.approx(
            math.pi**2 / 6.0, rel=1e-14
        )

    def test_s3_half_period(self):
        assert clausen_bernoulli("sin", 3, math.pi) == pytest.approx(0.0, abs=1e-16)

    def test_endpoint_exclusion_for_order_one(self):
        with pytest.raises(DomainError):
            clausen_bernoulli("sin", 1, 0.0)
        with pytest.raises(DomainError):
            clausen_bernoulli("sin", 1, TWO_PI)

    def test_parity_mismatch(self):
        with pytest.raises(DomainError):
            clausen_bernoulli("sin", 2, 1.0)
        with pytest.raises(DomainError):
            clausen_bernoulli("cos", 3, 1.0)

    @pytest.mark.parametrize("order", [1, 2, 3, 4, 5, 6])
    def test_against_series(self, order):
        channel = "sin" if order % 2 else "cos"
        for t in (0.1, 0.3, 0.45, 0.7, 0.9):
            x = TWO_PI * t
            closed = clausen_bernoulli(channel, order, x)
            if order == 1:
                ref = clausen_s1(x)
                assert closed == pytest.approx(ref, abs=2e-9)
            else:
                v = clausen_direct(float(order), x, tol=1e-10, use_bernoulli=False)
                ref = v.sin_part.real if channel == "sin" else v.cos_part.real
                assert closed == pytest.approx(ref, abs=1e-9)


class TestClausenViaHurwitz:
    def test_agrees_with_direct(self):
        for s in (2.5, 3.5, 2 + 0.7j):
            for t in (0.1, 0.3, 0.5, 0.7, 0.9):
                h = clausen_via_hurwitz(s, t)
                d = clausen_direct(s, TWO_PI * t, tol=1e-11, use_bernoulli=False)
                assert h.sin_part == pytest.approx(d.sin_part, abs=1e-9)
                assert h.cos_part == pytest.approx(d.cos_part, abs=1e-9)

    def test_even_order_excluded(self):
        with pytest.raises(ExclusionError, match="sin"):
            clausen_via_hurwitz(2, 0.3)

    def test_odd_order_excluded(self):
        with pytest.raises(ExclusionError, match="cos"):
            clausen_via_hurwitz(3, 0.3)

    def test_near_integer_rejected(self):
        with pytest.raises(ExclusionError):
            clausen_via_hurwitz(4.0 + 1e-9, 0.3)

    def test_domain(self):
        with pytest.raises(DomainError):
            clausen_via_hurwitz(2.5, 0.0)
        with pytest.raises(DomainError):
            clausen_via_hurwitz(2.5, 1.0)


class TestChebyshev:
    def test_t0(self):
        assert chebyshev_T(0, 0.3) == 1.0

    def test_t1(self):
        assert chebyshev_T(1, 0.7) == 0.7

    def test_t3_at_half(self):
        # T_3(cos(pi/3)) = cos(pi) = -1
        assert chebyshev_T(3, 0.5) == pytest.approx(-1.0, abs=1e-15)

    @settings(max_examples=200)
    @given(
        m=st.integers(min_value=0, max_value=40),
        theta=st.floats(min_value=0.0, max_value=math.pi),
    )
    def test_defining_identity(self, m, theta):
        assert chebyshev_T(m, math.cos(theta)) == pytest.approx(
            math.cos(m * theta), abs=1e-10
        )

    def test_generating_function_partial_sums(self):
        # |1 + 2 sum T_m(cos t) z^m - (1-z^2)/(1-2z cos t + z^2)| <= 2|z|^{M+1}/(1-|z|)
        M = 60
        for t in (0.3, 1.0, 2.0, 3.0):
            x = math.cos(t)
            for z in (0.9, -0.9, 0.5, 0.6j, 0.63 + 0.63j):
                acc = 1.0 + 0.0j
                zm = 1.0 + 0.0j
                for m in range(1, M + 1):
                    zm *= z
                    acc += 2.0 * chebyshev_T(m, x) * zm
                closed = (1.0 - z * z) / (1.0 - 2.0 * z * x + z * z)
                bound = 2.0 * abs(z) ** (M + 1) / (1.0 - abs(z))
                assert abs(acc - closed) <= bound + 1e-12
