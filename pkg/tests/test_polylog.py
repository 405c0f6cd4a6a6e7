import math

import pytest

from lirep import (
    DomainError,
    RepresentationTag,
    ResourceLimitError,
    li_bernoulli_even,
    li_bernoulli_odd,
    li_integral_classical,
    li_series,
    li_theorem_cos,
    li_theorem_sin,
    riemann_zeta,
)
from lirep.polylog import _node_cache
from lirep.quadrature import integrate_adaptive

from oracles import li_brute

LI2_HALF = 0.5822405264650125  # pi^2/12 - log(2)^2/2
LI2_MINUS_HALF = -0.4484142069236462


class TestSeries:
    def test_zero_argument(self):
        r = li_series(3.7 - 1.0j, 0.0)
        assert r.value == 0.0
        assert r.route is RepresentationTag.SERIES

    def test_li1_is_log(self):
        r = li_series(1, 0.5, tol=1e-12)
        assert r.value.real == pytest.approx(math.log(2.0), abs=1e-12)

    def test_li2_half(self):
        brute, bound = li_brute(2, 0.5, 200)
        assert bound < 1e-12
        assert brute.real == pytest.approx(LI2_HALF, abs=1e-12)
        r = li_series(2, 0.5, tol=1e-12)
        assert r.value.real == pytest.approx(LI2_HALF, abs=1e-12)

    def test_reported_bound_is_honest(self):
        for (s, z) in ((2, 0.5), (2.5, -0.8), (1.5, 0.9j), (3, 0.95), (0.5, 0.6j)):
            r = li_series(s, z, tol=1e-10)
            brute, bbound = li_brute(s, z, 4_000_000 // 100)
            assert abs(r.value - brute) <= r.error_estimate + bbound + 1e-15

    def test_near_boundary_alternating(self):
        # negative real z close to the circle stays affordable through the
        # boundary-distance bound
        r = li_series(3, -0.9999999, tol=1e-9)
        assert r.error_estimate <= 1e-9

    def test_domain_and_resources(self):
        with pytest.raises(DomainError):
            li_series(2, 1.0)
        with pytest.raises(DomainError):
            li_series(2, -1.2)
        with pytest.raises(ResourceLimitError):
            li_series(0.5, 0.99999999, tol=1e-12)


class TestClassical:
    def test_zero_argument(self):
        assert li_integral_classical(2, 0.0).value == 0.0

    def test_matches_series_inside_disc(self):
        ref = li_series(2, 0.5, tol=1e-12)
        r = li_integral_classical(2, 0.5, tol=1e-10)
        assert r.converged
        assert r.value == pytest.approx(ref.value, abs=1e-9)

    def test_alternating_unit_value(self):
        # Li_2(-1) = (2^{-1} - 1) zeta(2) = -pi^2/12
        ref = (2.0 ** (1 - 2) - 1.0) * riemann_zeta(2).real
        r = li_integral_classical(2, -1.0, tol=1e-10)
        assert r.value.real == pytest.approx(ref, abs=1e-9)
        assert r.value.real == pytest.approx(-(math.pi**2) / 12.0, abs=1e-9)

    def test_log_form_matches_series(self):
        for (s, z) in ((2, 0.5), (2.5, -0.7), (3, 0.25j)):
            ref = li_series(s, z, tol=1e-12)
            r = li_integral_classical(s, z, tol=1e-9, form="log")
            assert r.value == pytest.approx(ref.value, abs=5e-9)

    def test_outside_disc(self):
        # valid anywhere off the real ray (1, inf)
        r = li_integral_classical(2, -3.0, tol=1e-10)
        assert r.converged
        assert r.value.imag == pytest.approx(0.0, abs=1e-10)

    def test_domain(self):
        with pytest.raises(DomainError):
            li_integral_classical(2, 1.5)
        with pytest.raises(DomainError):
            li_integral_classical(-0.5, 0.5)
        with pytest.raises(DomainError):
            li_integral_classical(2, 1.2, form="log")


class TestTheoremRoutes:
    @pytest.mark.parametrize("s", [2.5, 3.0, 2.2 + 0.9j])
    def test_sin_route_vs_series(self, s):
        ref = li_series(s, 0.4, tol=1e-12)
        r = li_theorem_sin(s, 0.4, tol=1e-8)
        assert r.converged
        assert r.value == pytest.approx(ref.value, abs=1e-8)

    def test_sin_route_zero(self):
        assert li_theorem_sin(2.5, 0.0).value == 0.0

    def test_cos_route_vs_series_complex_everything(self):
        s = 2.2 + 0.9j
        z = 0.3 * complex(math.cos(math.pi / 5), math.sin(math.pi / 5))
        ref = li_series(s, z, tol=1e-12)
        for variant in ("cos", "alt"):
            r = li_theorem_cos(s, z, variant=variant, tol=1e-8)
            assert r.value == pytest.approx(ref.value, abs=1e-7)

    def test_delta_invariance(self):
        s, z = 3.0, 0.5j
        a = li_theorem_sin(s, z, delta=1.0, tol=1e-9)
        b = li_theorem_sin(s, z, delta=0.5, tol=1e-9)
        assert a.value == pytest.approx(b.value, abs=2e-9)

    def test_variants_agree(self):
        a = li_theorem_cos(3.0, -0.6, variant="cos", tol=1e-9)
        b = li_theorem_cos(3.0, -0.6, variant="alt", tol=1e-9)
        assert a.value == pytest.approx(b.value, abs=2e-9)
        assert a.route is RepresentationTag.THEOREM_6B
        assert b.route is RepresentationTag.THEOREM_6C

    @pytest.mark.parametrize("variant", ["cos", "alt"])
    def test_delta_invariance_cos_routes(self, variant):
        a = li_theorem_cos(2.5, -0.35 + 0.2j, delta=1.0, variant=variant, tol=1e-9)
        b = li_theorem_cos(2.5, -0.35 + 0.2j, delta=0.5, variant=variant, tol=1e-9)
        assert a.value == pytest.approx(b.value, abs=2e-9)

    def test_domain(self):
        with pytest.raises(DomainError):
            li_theorem_sin(2.5, 1.1)
        with pytest.raises(DomainError):
            li_theorem_sin(0.5, 0.3)
        with pytest.raises(DomainError):
            li_theorem_cos(1.0, 0.3)  # cos channel has no s=1 closed form

    def test_s_equal_one_closed_form_weight(self):
        # the sin-channel weight at s=1 is exactly pi(1/2 - t); the route
        # must then reproduce -log(1-z)
        for z in (0.5, -0.7, 0.3 + 0.4j):
            r = li_theorem_sin(1.0, z, tol=1e-9)
            import cmath

            assert r.value == pytest.approx(-cmath.log(1.0 - z), abs=1e-9)

    def test_near_circle_peak_split(self):
        s, z = 2.5, 0.97
        ref = li_series(s, z, tol=1e-12)
        r = li_theorem_sin(s, z, tol=1e-7)
        assert r.converged
        assert r.value == pytest.approx(ref.value, abs=1e-6)

    @pytest.mark.parametrize(
        "s,z",
        [
            (1.2 - 0.97j, 0.415 + 0.163j),
            (1.35 - 0.54j, 0.241 + 0.114j),
        ],
    )
    def test_slow_decay_band(self, s, z):
        # sigma below ~1.8 makes the series weight unaffordable at the
        # deep endpoint nodes; those must reroute through the reflection
        ref = li_series(s, z, tol=1e-11)
        a = li_theorem_sin(s, z, tol=1e-7)
        b = li_theorem_cos(s, z, variant="alt", tol=1e-7)
        assert a.converged and b.converged
        assert a.value == pytest.approx(ref.value, abs=1e-7)
        assert b.value == pytest.approx(ref.value, abs=1e-7)

    def test_slow_decay_band_real_order(self):
        ref = li_series(1.5, 0.5, tol=1e-11)
        r = li_theorem_sin(1.5, 0.5, tol=1e-6)
        assert r.converged
        assert r.value == pytest.approx(ref.value, abs=1e-5)


class TestBernoulliRoutes:
    def test_order_one_is_log(self):
        r = li_bernoulli_odd(1, 0.5, tol=1e-10)
        assert r.value.real == pytest.approx(math.log(2.0), abs=1e-9)
        assert r.route is RepresentationTag.BERNOULLI_7A

    def test_order_three_vs_series(self):
        ref = li_series(3, 0.7, tol=1e-12)
        r = li_bernoulli_odd(2, 0.7, delta=0.5, tol=1e-9)
        assert r.value == pytest.approx(ref.value, abs=1e-8)

    def test_even_route_li2(self):
        r = li_bernoulli_even(1, -0.5, tol=1e-9)
        assert r.value.real == pytest.approx(LI2_MINUS_HALF, abs=1e-8)
        assert r.route is RepresentationTag.BERNOULLI_7B

    def test_even_variants_agree(self):
        a = li_bernoulli_even(1, 0.3, variant="cos", tol=1e-9)
        b = li_bernoulli_even(1, 0.3, variant="alt", tol=1e-9)
        assert a.value == pytest.approx(b.value, abs=2e-9)

    def test_even_delta_invariance(self):
        a = li_bernoulli_even(2, 0.55j, delta=1.0, tol=1e-9)
        b = li_bernoulli_even(2, 0.55j, delta=0.5, tol=1e-9)
        assert a.value == pytest.approx(b.value, abs=2e-9)

    def test_zero_argument(self):
        assert li_bernoulli_odd(2, 0.0).value == 0.0
        assert li_bernoulli_even(2, 0.0).value == 0.0

    def test_domain(self):
        with pytest.raises(DomainError):
            li_bernoulli_odd(0, 0.5)
        with pytest.raises(DomainError):
            li_bernoulli_even(1, 1.0)


class TestMeanValueProperty:
    @pytest.mark.parametrize("s", [2.0, 2.5, 3.0])
    def test_cos_weight_integrates_to_zero(self, s):
        cache = _node_cache(complex(s), 1e-11)

        def f(t):
            return cache.channel(t, 1)

        r = integrate_adaptive(f, 0.0, 1.0, tol=1e-10)
        assert r.converged
        assert abs(r.value) <= 1e-10
