import math

import numpy as np
import pytest

from diracoulomb.errors import DomainError, ForbiddenState, ReasonCode
from diracoulomb.model import (
    PotentialConfig,
    QuantumNumbers,
    ScaledState,
    SymmetryMode,
    charge_conjugate,
    decay_rate,
    effective_kappa,
    gamma_exponent,
    map_to_spherical,
    scale_radius,
    scaled_state,
    spinor_ratios,
)


def _state(E: float, lam: float, bbar: float = 0.0) -> ScaledState:
    return ScaledState(kbar=1.5, gamma=1.5, xi=1.5, E=E, lam=lam, bbar=bbar)


class TestPotentialConfig:
    def test_bbar_divides_by_mass(self):
        cfg = PotentialConfig(b=0.4, m=2.0)
        assert cfg.bbar == pytest.approx(0.2)
        assert cfg.continuum_edge == pytest.approx(math.sqrt(1.04))

    @pytest.mark.parametrize("field", ["alpha_sigma", "alpha_delta", "a", "b"])
    def test_rejects_non_finite(self, field):
        with pytest.raises(DomainError):
            PotentialConfig(**{field: math.nan})

    @pytest.mark.parametrize("field", ["alpha_sigma", "alpha_delta", "a", "b", "m"])
    @pytest.mark.parametrize("value", [True, False, "0.5", None])
    def test_rejects_non_numbers(self, field, value):
        with pytest.raises(DomainError):
            PotentialConfig(**{field: value})

    def test_accepts_numpy_scalars(self):
        cfg = PotentialConfig(alpha_sigma=np.float64(0.5), b=np.int64(1))
        assert cfg.bbar == 1.0

    def test_rejects_non_positive_mass(self):
        with pytest.raises(DomainError):
            PotentialConfig(m=0.0)

    def test_as_dict(self, fig3a):
        assert fig3a.as_dict() == {
            "alpha_sigma": 0.6,
            "alpha_delta": 0.8,
            "a": 0.0,
            "bbar": 0.2,
            "m": 1.0,
        }


class TestQuantumNumbers:
    def test_circular_defaults(self):
        q = QuantumNumbers.circular(2, 3)
        assert q.k == 1.5
        assert q.two_mj == 3
        assert q.label == "3/2"

    def test_negative_label(self):
        assert QuantumNumbers.circular(0, -5).label == "-5/2"

    @pytest.mark.parametrize(
        "kwargs",
        [
            dict(n_f=-1, two_k=3),
            dict(n_f=0, two_k=2),
            dict(n_f=0, two_k=3, two_mj=1),
            dict(n_f=0, two_k=3, two_mj=2),
        ],
    )
    def test_circular_validation(self, kwargs):
        with pytest.raises(DomainError):
            QuantumNumbers(**kwargs)

    def test_spherical_relabels_k(self):
        q = QuantumNumbers.spherical(0, 1)
        assert q.mode is SymmetryMode.SPHERICAL
        assert q.two_k == -2
        assert q.k_s == 1
        assert q.label == "1"
        assert q.two_mj == 1

    def test_spherical_mj_range(self):
        assert QuantumNumbers.spherical(0, -3, two_mj=-5).two_mj == -5
        with pytest.raises(DomainError):
            QuantumNumbers.spherical(0, 1, two_mj=3)

    def test_k_s_only_in_spherical_mode(self):
        with pytest.raises(DomainError):
            QuantumNumbers.circular(0, 3).k_s


class TestEffectiveKappa:
    @pytest.mark.parametrize(
        "two_k, a, expected", [(3, 0.0, 1.5), (1, 1.0, -0.5), (-3, 0.25, -1.75)]
    )
    def test_examples(self, two_k, a, expected):
        assert effective_kappa(QuantumNumbers.circular(0, two_k), PotentialConfig(a=a)) == expected


class TestGammaExponent:
    def test_pure_square_root(self):
        assert gamma_exponent(1.5, PotentialConfig()) == 1.5

    def test_fig3a(self, fig3a):
        assert gamma_exponent(1.5, fig3a) == pytest.approx(math.sqrt(1.77), rel=1e-14)

    def test_forbidden_interval(self):
        with pytest.raises(ForbiddenState) as info:
            gamma_exponent(0.5, PotentialConfig())
        assert info.value.reason is ReasonCode.GAMMA_TOO_SMALL
        assert "GammaTooSmall" in str(info.value)

    def test_product_can_push_below_half(self):
        with pytest.raises(ForbiddenState):
            gamma_exponent(1.5, PotentialConfig(alpha_sigma=1.0, alpha_delta=2.1))


class TestScaling:
    def test_decay_rate(self, fig3a):
        assert decay_rate(0.0, fig3a) == pytest.approx(math.sqrt(1.04))
        with pytest.raises(DomainError):
            decay_rate(1.1, fig3a)

    def test_scale_radius(self):
        assert scale_radius(0.0, _state(0.0, 0.5)) == 0.0
        assert scale_radius(1.0, _state(0.0, 0.5)) == pytest.approx(1.0)
        assert scale_radius(2.0, _state(0.0, 1.0198039)) == pytest.approx(4.0792156)

    def test_scale_radius_arrays(self):
        out = scale_radius(np.array([0.0, 1.0, 2.0]), _state(0.0, 0.25))
        np.testing.assert_allclose(out, [0.0, 0.5, 1.0])
        with pytest.raises(DomainError):
            scale_radius(-1.0, _state(0.0, 0.25))

    def test_scaled_state(self, fig3a):
        s = scaled_state(fig3a, QuantumNumbers.circular(2, 3), 0.5)
        assert s.kbar == 1.5
        assert s.xi == pytest.approx(2.0 + math.sqrt(1.77))
        assert s.lam == pytest.approx(math.sqrt(1.04 - 0.25))
        assert s.continuum_edge == pytest.approx(fig3a.continuum_edge)


class TestChargeConjugate:
    def test_fig3a(self, fig3a):
        cfg, q = charge_conjugate(fig3a, QuantumNumbers.circular(0, 3))
        assert (cfg.alpha_sigma, cfg.alpha_delta, cfg.a, cfg.b) == (-0.8, -0.6, -0.0, -0.2)
        assert q.two_k == -3
        assert q.two_mj == 3

    def test_involution(self, fig3a):
        q = QuantumNumbers.circular(1, 5)
        assert charge_conjugate(*charge_conjugate(fig3a, q)) == (fig3a, q)

    def test_pure_tensor(self, pure_tensor):
        cfg, q = charge_conjugate(pure_tensor, QuantumNumbers.circular(0, 3))
        assert cfg.alpha_sigma == 0.0 and cfg.alpha_delta == 0.0
        assert cfg.b == -1.0
        assert q.two_k == -3


class TestSpherical:
    def test_mapping(self):
        assert map_to_spherical(1) == -2
        assert map_to_spherical(-2) == 4

    def test_kbar_after_mapping(self):
        q = QuantumNumbers.spherical(0, 1)
        assert effective_kappa(q, PotentialConfig(a=0.3)) == pytest.approx(-1.3)

    @pytest.mark.parametrize("k_s", [0, 1.5, True])
    def test_rejects(self, k_s):
        with pytest.raises(DomainError):
            map_to_spherical(k_s)


class TestSpinorRatios:
    def test_regular_point(self):
        sigma, delta = spinor_ratios(_state(0.0, 1.0))
        assert sigma == pytest.approx(1.0)
        assert delta == pytest.approx(1.0)

    def test_finite_at_plus_one(self):
        sigma, delta = spinor_ratios(_state(1.0, 0.3, bbar=0.3))
        assert sigma == pytest.approx(2.0 / 0.6)
        assert delta == pytest.approx(0.3)

    def test_finite_at_minus_one(self):
        sigma, delta = spinor_ratios(_state(-1.0, 0.3, bbar=-0.3))
        assert sigma == pytest.approx(0.3)
        assert delta == pytest.approx(2.0 / 0.6)

    def test_divergent(self):
        _, delta = spinor_ratios(_state(-1.0, 0.3, bbar=0.3))
        assert math.isinf(delta)
