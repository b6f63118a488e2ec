import math

import numpy as np
import pytest

from besselstruve import (
    DivergenceError,
    DomainError,
    NumeratorPoleError,
    ParameterPoleError,
    WrightSpec,
    gamma,
    pfq_eval,
    reciprocal_gamma,
    wright_delta,
    wright_eval,
    wright_radius,
    wright_reduce_check,
    wright_terms,
)

# extended-precision direct summation (frozen):
# 3Psi3 [(1/2,1/2),(3,1),(1,1); (1,1/2),(2,1),(4,1)] at z = 0.5
PSI33_AT_HALF = 0.6694327907285437


def spec_3psi3(lam, mu):
    return WrightSpec(
        upper=((0.5, 0.5), (lam + 1.0, 1.0), (lam - mu, 1.0)),
        lower=((1.0, 0.5), (lam, 1.0), (1.0 + lam + mu, 1.0)),
    )


class TestDelta:
    def test_trivial_cases(self):
        assert wright_delta(WrightSpec(upper=((1, 1),), lower=((1, 1),))) == 0.0
        assert wright_delta(WrightSpec(upper=(), lower=((1, 1),))) == 1.0

    def test_three_two_form(self):
        # weights 1/2 + 1 + 1 above, 1 + 1 below
        spec = WrightSpec(upper=((0.5, 0.5), (3.0, 1.0), (1.0, 1.0)),
                          lower=((2.0, 1.0), (4.0, 1.0)))
        assert wright_delta(spec) == pytest.approx(-0.5, abs=1e-15)


class TestRadius:
    def test_entire_regime(self):
        assert wright_radius(WrightSpec(upper=((1, 1),), lower=((1, 1),))) == math.inf
        assert wright_radius(WrightSpec(upper=(), lower=())) == math.inf

    def test_boundary_radius(self):
        # delta = -1: radius = 2**(-2) * 1**1 = 0.25
        spec = WrightSpec(upper=((1.0, 2.0),), lower=((1.0, 1.0),))
        assert wright_radius(spec) == pytest.approx(0.25, rel=1e-14)

    def test_unsupported_regime(self):
        spec = WrightSpec(upper=((1.0, 2.0),), lower=())
        with pytest.raises(DivergenceError):
            wright_radius(spec)

    def test_negative_lower_weight_at_boundary(self):
        # delta = -1 via a negative lower weight: the radius product is
        # undefined there and refused
        spec = WrightSpec(upper=((1.0, 0.5),), lower=((1.0, -0.5),))
        with pytest.raises(DomainError):
            wright_radius(spec)


class TestWrightEval:
    def test_exponential_case(self):
        spec = WrightSpec(upper=((1, 1),), lower=((1, 1),))
        sv = wright_eval(spec, 1.0)
        assert sv.converged
        assert sv.value == pytest.approx(math.e, rel=1e-13)

    def test_z_zero_single_term(self):
        spec = WrightSpec(upper=((1, 1),), lower=((1, 1),))
        sv = wright_eval(spec, 0.0)
        assert sv.value == 1.0 and sv.terms_used == 1

    def test_z_zero_general(self):
        spec = WrightSpec(upper=((2.5, 1.0), (0.7, 0.5)), lower=((1.2, 1.0),))
        expected = gamma(2.5) * gamma(0.7) * reciprocal_gamma(1.2)
        assert wright_eval(spec, 0.0).value == pytest.approx(expected, rel=1e-13)

    def test_frozen_3psi3(self):
        sv = wright_eval(spec_3psi3(2.0, 1.0), 0.5)
        assert sv.converged
        assert sv.value == pytest.approx(PSI33_AT_HALF, rel=1e-12)

    def test_divergent_spec_refused(self):
        # weights: upper 1/2 + 2 + 1 = 3.5, lower 1 + 1/2 = 1.5, delta = -2
        spec = WrightSpec(upper=((0.5, 0.5), (2.0, 2.0), (3.0, 1.0)),
                          lower=((2.0, 1.0), (2.0, 0.5)))
        with pytest.raises(DivergenceError):
            wright_eval(spec, 0.5)
        # but z = 0 still returns the single k=0 term
        assert math.isfinite(wright_eval(spec, 0.0).value)

    def test_boundary_guard(self):
        spec = WrightSpec(upper=((1.0, 2.0),), lower=((1.0, 1.0),))  # radius 0.25
        sv = wright_eval(spec, 0.2)  # within 0.9 * radius
        assert sv.converged
        with pytest.raises(DivergenceError):
            wright_eval(spec, 0.24)  # beyond 0.9 * radius

    def test_numerator_pole(self):
        spec = WrightSpec(upper=((-2.0, 1.0),), lower=((1.0, 1.0),))
        with pytest.raises(NumeratorPoleError) as exc:
            wright_eval(spec, 0.5)
        assert "k=" in str(exc.value)

    def test_denominator_pole_kills_term(self):
        # lower parameter -1 poles at k = 0 and 1; the series is still finite
        spec = WrightSpec(upper=((1.0, 1.0),), lower=((-1.0, 1.0),))
        sv = wright_eval(spec, 0.5)
        # sum_k gamma(1+k)/gamma(-1+k) z^k/k! with k=0,1 terms killed
        expected = sum(gamma(1.0 + k) * reciprocal_gamma(-1.0 + k) * 0.5**k
                       / math.factorial(k) for k in range(2, 30))
        assert sv.value == pytest.approx(expected, rel=1e-12)

    def test_negative_z(self):
        spec = WrightSpec(upper=((1, 1),), lower=((1, 1),))
        assert wright_eval(spec, -1.0).value == pytest.approx(math.exp(-1.0), rel=1e-12)

    def test_term_ratio_decay_after_peak(self):
        # entire regime: |t_{k+1}/t_k| decays monotonically past the peak
        for z in (0.5, 2.0, 5.0):
            mags = [abs(t) for t in wright_terms(spec_3psi3(2.0, 1.0), z, 40)]
            peak = mags.index(max(mags))
            ratios = [mags[k + 1] / mags[k]
                      for k in range(len(mags) - 1) if mags[k] > 1e-280]
            post = ratios[peak:]
            assert all(post[i + 1] <= post[i] * (1.0 + 1e-9)
                       for i in range(len(post) - 1))
            assert post[-1] < 0.2

    def test_converged_tail_contract(self):
        tol = 1e-10
        sv = wright_eval(spec_3psi3(2.0, 1.0), 0.8, tol)
        assert sv.converged
        assert sv.tail_estimate <= tol * max(abs(sv.value), 1e-300)


class TestPfq:
    def test_0f0_is_exp(self):
        for z in (-0.7, -0.2, 0.3, 0.7, 1.0):
            assert pfq_eval([], [], z).value == pytest.approx(math.exp(z), rel=1e-11)

    def test_1f0_is_geometric(self):
        for a in (1.0, 2.5):
            for z in (-0.7, -0.3, 0.5, 0.7):
                expected = (1.0 - z) ** (-a)
                assert pfq_eval([a], [], z).value == pytest.approx(expected, rel=1e-11)

    def test_2f2_frozen_value(self):
        # 2F2[3, 1; 2, 2; 1/2] by extended-precision summation
        assert pfq_eval([3.0, 1.0], [2.0, 2.0], 0.5).value == pytest.approx(
            1.4730819060501922, rel=1e-12)

    def test_z_zero(self):
        assert pfq_eval([5.0, 5.0, 5.0], [0.5], 0.0).value == 1.0

    def test_divergence_p_exceeds_q_plus_one(self):
        with pytest.raises(DivergenceError):
            pfq_eval([1.0, 1.0, 1.0], [1.0], 0.5)

    def test_divergence_on_unit_disk_boundary(self):
        with pytest.raises(DivergenceError):
            pfq_eval([1.0, 2.0], [3.0], 1.0)
        assert pfq_eval([1.0, 2.0], [3.0], 0.9).converged

    def test_lower_parameter_pole(self):
        with pytest.raises(ParameterPoleError):
            pfq_eval([1.0], [-2.0], 0.5)

    def test_terminating_series(self):
        # upper parameter 0 terminates the series at the constant term
        assert pfq_eval([0.0], [2.0], 0.9).value == 1.0


class TestReduceCheck:
    @pytest.mark.parametrize("upper, lower, z", [
        ([1.0], [1.0], 1.0),
        ([2.0, 3.0], [4.0], 0.3),
        ([0.5], [1.5], -1.0),
    ])
    def test_examples(self, upper, lower, z):
        lhs, rhs = wright_reduce_check(upper, lower, z)
        assert lhs == pytest.approx(rhs, rel=1e-10)

    def test_random_grid(self):
        # 20 deterministic random weight-1 parameter sets; |z| <= 0.7 keeps
        # the p = q+1 shapes far enough from the unit-disk boundary for the
        # truncation rule to fire within the term cap
        rng = np.random.default_rng(20240901)
        shapes = [(1, 1), (2, 1), (2, 2), (1, 2), (3, 2)] * 4
        for p, q in shapes:
            upper = rng.uniform(0.3, 4.0, size=p).tolist()
            lower = rng.uniform(0.3, 4.0, size=q).tolist()
            z = float(rng.uniform(-0.7, 0.7))
            lhs, rhs = wright_reduce_check(upper, lower, z)
            assert lhs == pytest.approx(rhs, rel=1e-10)
