import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cqubit.signal import (
    OutOfDomainError,
    SampledWaveform,
    SignalRange,
    Sinusoid,
    check_normalization,
    quadrature,
    quantum_component,
    renormalize,
    sample_sinusoid,
    wrap_phase,
)

angles = st.floats(-50.0, 50.0, allow_nan=False)
unit = st.floats(-1.0, 1.0)


class TestRenormalize:
    def test_endpoints_and_midpoint(self):
        rng = SignalRange(0.0, 5.0)
        assert renormalize(5.0, rng) == 1.0
        assert renormalize(0.0, rng) == -1.0
        assert renormalize(2.5, rng) == 0.0

    def test_ttl_low_threshold(self):
        # (2*0.8 - 5) / 5
        assert renormalize(0.8, SignalRange(0.0, 5.0)) == pytest.approx(-0.68, abs=1e-12)

    def test_rejects_out_of_range(self):
        with pytest.raises(OutOfDomainError):
            renormalize(5.1, SignalRange(0.0, 5.0))
        with pytest.raises(OutOfDomainError):
            renormalize(-0.1, SignalRange(0.0, 5.0))

    def test_invalid_range(self):
        with pytest.raises(ValueError):
            SignalRange(1.0, 1.0)

    # spans kept comparable to the offset: rounding of the input point is amplified by 2/width
    @given(st.floats(-15, 15), st.floats(0.5, 30), st.floats(0, 1), st.floats(0, 1), st.floats(0, 1))
    def test_affine(self, f_min, width, u, v, lam):
        rng = SignalRange(f_min, f_min + width)
        a, b = f_min + u * width, f_min + v * width
        mixed = min(max(lam * a + (1 - lam) * b, rng.f_min), rng.f_max)
        lhs = renormalize(mixed, rng)
        rhs = lam * renormalize(a, rng) + (1 - lam) * renormalize(b, rng)
        assert lhs == pytest.approx(rhs, abs=1e-12)
        assert -1.0 <= lhs <= 1.0


class TestSinusoid:
    def test_invariants(self):
        with pytest.raises(OutOfDomainError):
            Sinusoid(1.5, 1.0, 0.0)
        with pytest.raises(OutOfDomainError):
            Sinusoid(1.0, -1.0, 0.0)
        assert Sinusoid(1.0, 1.0, -math.pi / 2).varphi == pytest.approx(3 * math.pi / 2)
        assert Sinusoid(1.0, 1.0, 2 * math.pi).varphi == 0.0

    def test_wrap_phase_never_returns_two_pi(self):
        assert wrap_phase(-1e-20) == 0.0
        assert 0.0 <= wrap_phase(-1e-9) < 2 * math.pi


class TestSampleSinusoid:
    def test_quarter_period(self):
        w = sample_sinusoid(Sinusoid(1.0, 2 * math.pi, 0.0), 0.0, 0.25, 2)
        np.testing.assert_allclose(w.values, [0.0, 1.0], atol=1e-15)

    def test_dc(self):
        w = sample_sinusoid(Sinusoid(1.0, 0.0, math.pi / 2), 3.0, 0.1, 7)
        np.testing.assert_array_equal(w.values, np.ones(7))

    def test_one_gigahertz_quarter_period(self):
        w = sample_sinusoid(Sinusoid(1.0, 2 * math.pi * 1e9, 0.0), 0.0, 2.5e-10, 2)
        np.testing.assert_allclose(w.values, [0.0, 1.0], atol=1e-12)

    def test_grid(self):
        w = sample_sinusoid(Sinusoid(0.5, 3.0, 0.2), 1.0, 0.5, 4)
        np.testing.assert_allclose(w.times, [1.0, 1.5, 2.0, 2.5])
        assert len(w) == 4

    def test_preconditions(self):
        with pytest.raises(ValueError):
            sample_sinusoid(Sinusoid(), 0.0, 0.0, 3)
        with pytest.raises(ValueError):
            sample_sinusoid(Sinusoid(), 0.0, 0.1, 0)
        with pytest.raises(ValueError):
            SampledWaveform(0.0, 0.1, [])

    @given(st.floats(0, 1), st.floats(0, 1e3), angles)
    def test_values_bounded_by_amplitude(self, amp, omega, varphi):
        w = sample_sinusoid(Sinusoid(amp, omega, varphi), 0.0, 0.01, 50)
        assert np.all(np.abs(w.values) <= amp)


class TestQuadrature:
    def test_sin_to_cos(self):
        s = Sinusoid(1.0, 3.0, 0.0)
        assert s(0.0) == 0.0
        assert quadrature(s)(0.0) == pytest.approx(1.0, abs=1e-15)

    def test_shifted(self):
        s = Sinusoid(1.0, 3.0, math.pi / 2)
        assert s(0.0) == pytest.approx(1.0)
        assert quadrature(s)(0.0) == pytest.approx(0.0, abs=1e-15)

    def test_twice_negates(self):
        s = Sinusoid(1.0, 5.0, 0.0)
        t = np.linspace(0, 3, 101)
        np.testing.assert_allclose(quadrature(quadrature(s))(t), -np.sin(5.0 * t), atol=1e-12)

    @given(st.floats(0, 1), st.floats(0, 1e3), angles, st.floats(-10, 10))
    def test_evaluates_to_cosine(self, amp, omega, varphi, t):
        s = Sinusoid(amp, omega, varphi)
        expected = amp * math.cos(omega * t + s.varphi)
        assert quadrature(s).phase == pytest.approx(wrap_phase(s.varphi + math.pi / 2))
        assert quadrature(s)(t) == pytest.approx(expected, abs=1e-12)

    @given(st.floats(0, 1), st.floats(0, 1e3), angles, st.floats(-10, 10))
    def test_four_times_is_identity(self, amp, omega, varphi, t):
        s = Sinusoid(amp, omega, varphi)
        q4 = quadrature(quadrature(quadrature(quadrature(s))))
        assert q4(t) == pytest.approx(s(t), abs=1e-12)


class TestQuantumComponent:
    def test_examples(self):
        assert quantum_component(1.0, 1, 0.0) == 0j
        assert quantum_component(0.0, -1, 0.0) == -1 + 0j
        z = quantum_component(0.6, 1, math.pi / 2)
        assert z.real == pytest.approx(0.0, abs=1e-15)
        assert z.imag == pytest.approx(-0.8, abs=1e-15)

    def test_domain(self):
        with pytest.raises(OutOfDomainError):
            quantum_component(1.01, 1, 0.0)
        with pytest.raises(ValueError):
            quantum_component(0.5, 0, 0.0)

    @given(unit, st.sampled_from([1, -1]), angles)
    def test_normalization(self, s_cl, branch, phi):
        z = quantum_component(s_cl, branch, phi)
        assert abs(abs(z) ** 2 + s_cl**2 - 1.0) <= 1e-14


def test_check_normalization():
    assert check_normalization(1 + 0j, 0j, 1e-12)
    assert check_normalization(0.6 + 0j, 0.8j, 1e-12)
    assert not check_normalization(1 + 0j, 1 + 0j, 1e-12)
    with pytest.raises(ValueError):
        check_normalization(1, 0, 0.0)
