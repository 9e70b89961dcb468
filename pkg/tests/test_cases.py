import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from diracoulomb.cases import (
    CaseKind,
    case_name,
    detect_case,
    get_spectrum_function,
    pure_tensor_spectrum,
    scalar_tensor_spectrum,
    scalar_vector_spectrum,
    spectrum_function_for,
    symmetry_breaking_spectrum,
)
from diracoulomb.errors import DomainError, ForbiddenState
from diracoulomb.model import PotentialConfig, QuantumNumbers, Sector
from diracoulomb.spectrum import energy_candidates, filter_spurious

from conftest import circular

TWO_K = (-9, -7, -5, -3, -1, 1, 3, 5, 7, 9)
SWEEP = 1000


def _roots(candidates):
    return np.array([candidates.e_plus, candidates.e_minus], dtype=float)


def _strength(rng):
    return float(rng.uniform(-1.0, 1.0))


def _matches_general(special, make_config, seed):
    rng = np.random.default_rng(seed)
    compared = 0
    for _ in range(SWEEP):
        cfg = make_config(rng)
        q = circular(int(rng.integers(0, 6)), int(rng.choice(TWO_K)))
        try:
            general = energy_candidates(cfg, q)
        except ForbiddenState:
            with pytest.raises(ForbiddenState):
                special(cfg, q)
            continue
        assert_allclose(_roots(special(cfg, q)), _roots(general), rtol=1e-14, atol=1e-14)
        compared += 1
    assert compared > SWEEP // 2


class TestDetectCase:
    @pytest.mark.parametrize(
        "kwargs, kind",
        [
            (dict(b=1.0), CaseKind.PURE_TENSOR),
            (dict(), CaseKind.PURE_TENSOR),
            (dict(alpha_sigma=-0.3, alpha_delta=-0.3), CaseKind.SCALAR_VECTOR),
            (dict(alpha_sigma=0.5, b=0.2), CaseKind.SPIN_BREAKING),
            (dict(alpha_delta=0.5, b=0.2), CaseKind.PSEUDOSPIN_BREAKING),
            (dict(alpha_sigma=0.5, alpha_delta=-0.5, b=1.0), CaseKind.SCALAR_TENSOR),
            (dict(alpha_sigma=0.6, alpha_delta=0.8, b=0.2), CaseKind.GENERAL),
        ],
    )
    def test_precedence(self, kwargs, kind):
        assert detect_case(PotentialConfig(**kwargs)) is kind

    def test_names(self):
        assert case_name(CaseKind.SPIN_BREAKING) == "symmetry-breaking"
        assert case_name("General") == "general"


class TestScalarVector:
    def test_pure_vector(self, pure_vector):
        candidates = scalar_vector_spectrum(pure_vector, circular(0, 3))
        assert candidates.e_plus == pytest.approx(0.9797958971, rel=1e-9)
        assert candidates.discriminant == pytest.approx(4.0 * (0.09 + 2.16))

    def test_matches_general(self):
        _matches_general(
            scalar_vector_spectrum,
            lambda rng: PotentialConfig(alpha_sigma=_strength(rng), alpha_delta=_strength(rng)),
            seed=41,
        )

    def test_needs_no_tensor(self, fig3a):
        with pytest.raises(DomainError):
            scalar_vector_spectrum(fig3a, circular(0, 3))

    def test_fig4_single_antiparticle_sector(self):
        cfg = PotentialConfig(alpha_sigma=0.2, alpha_delta=0.6)
        q = circular(1, 3)
        survivors = filter_spurious(scalar_vector_spectrum(cfg, q), cfg, q)
        assert [sector for sector, _ in survivors] == [Sector.ANTIPARTICLE]


class TestPureTensor:
    def test_example(self, pure_tensor):
        candidates = pure_tensor_spectrum(pure_tensor, circular(1, 3))
        assert candidates.e_plus == pytest.approx(1.2806248, rel=1e-7)
        assert candidates.e_minus == pytest.approx(-1.2806248, rel=1e-7)

    def test_matches_general(self):
        _matches_general(
            pure_tensor_spectrum,
            lambda rng: PotentialConfig(a=_strength(rng), b=_strength(rng)),
            seed=42,
        )

    def test_ground_state_sits_at_plus_one(self, pure_tensor):
        q = circular(0, 3)
        survivors = filter_spurious(pure_tensor_spectrum(pure_tensor, q), pure_tensor, q)
        assert survivors == [(Sector.PARTICLE, pytest.approx(1.0))]

    def test_opposite_signs_do_not_bind(self):
        cfg = PotentialConfig(b=-1.0)
        q = circular(2, 3)
        assert filter_spurious(pure_tensor_spectrum(cfg, q), cfg, q) == []

    def test_needs_zero_strengths(self, fig3a):
        with pytest.raises(DomainError):
            pure_tensor_spectrum(fig3a, circular(0, 3))


class TestSymmetryBreaking:
    def test_matches_general_spin(self):
        _matches_general(
            symmetry_breaking_spectrum,
            lambda rng: PotentialConfig(alpha_sigma=_strength(rng), a=_strength(rng), b=_strength(rng)),
            seed=43,
        )

    def test_matches_general_pseudospin(self):
        _matches_general(
            symmetry_breaking_spectrum,
            lambda rng: PotentialConfig(alpha_delta=_strength(rng), a=_strength(rng), b=_strength(rng)),
            seed=44,
        )

    def test_only_attractive_sigma_binds_particles(self):
        cfg = PotentialConfig(alpha_sigma=-0.5)
        q = circular(0, 3)
        survivors = filter_spurious(symmetry_breaking_spectrum(cfg, q), cfg, q)
        assert [sector for sector, _ in survivors] == [Sector.PARTICLE]

    def test_only_positive_delta_binds_antiparticles(self):
        cfg = PotentialConfig(alpha_delta=0.5)
        q = circular(1, 3)
        survivors = filter_spurious(symmetry_breaking_spectrum(cfg, q), cfg, q)
        assert [sector for sector, _ in survivors] == [Sector.ANTIPARTICLE]

    def test_needs_one_zero_strength(self, fig3a):
        with pytest.raises(DomainError):
            symmetry_breaking_spectrum(fig3a, circular(0, 3))


class TestScalarTensor:
    CFG = PotentialConfig(alpha_sigma=0.5, alpha_delta=-0.5, b=1.0)

    def test_gamma_convention(self):
        candidates = scalar_tensor_spectrum(self.CFG, circular(0, 3))
        assert candidates.e_plus == pytest.approx(math.sqrt(1.6), rel=1e-13)
        assert candidates.e_minus == pytest.approx(-math.sqrt(1.6), rel=1e-13)

    def test_abs_kbar_convention(self):
        candidates = scalar_tensor_spectrum(self.CFG, circular(0, 3), xi_convention="abs-kbar")
        assert candidates.e_plus == pytest.approx(1.2472191, rel=1e-7)

    def test_matches_general(self):
        def make_config(rng):
            alpha_s = _strength(rng)
            return PotentialConfig(alpha_sigma=alpha_s, alpha_delta=-alpha_s, a=_strength(rng), b=_strength(rng))

        _matches_general(scalar_tensor_spectrum, make_config, seed=45)

    def test_edge_root_rejected(self):
        # kbar * bbar == alpha_S puts both roots on the continuum edge
        cfg = PotentialConfig(alpha_sigma=0.75, alpha_delta=-0.75, b=0.5)
        q = circular(0, 3)
        candidates = scalar_tensor_spectrum(cfg, q)
        assert candidates.e_plus == pytest.approx(cfg.continuum_edge)
        assert filter_spurious(candidates, cfg, q) == []

    def test_unknown_convention(self):
        with pytest.raises(ValueError):
            scalar_tensor_spectrum(self.CFG, circular(0, 3), xi_convention="n")


class TestFactory:
    def test_general(self):
        assert get_spectrum_function() is energy_candidates

    @pytest.mark.parametrize("name", ["Spin_Breaking", " pseudospin-breaking ", "symmetry-breaking"])
    def test_aliases(self, name):
        assert get_spectrum_function(name) is symmetry_breaking_spectrum

    def test_scalar_tensor_option(self):
        spectrum = get_spectrum_function("scalar-tensor", xi_convention="abs-kbar")
        candidates = spectrum(TestScalarTensor.CFG, circular(0, 3))
        assert candidates.e_plus == pytest.approx(1.2472191, rel=1e-7)

    def test_rejects_leftover_options(self):
        with pytest.raises(ValueError, match="Unsupported options"):
            get_spectrum_function("pure-tensor", xi_convention="gamma")

    def test_rejects_unknown_case(self):
        with pytest.raises(ValueError, match="Unsupported spectrum case"):
            get_spectrum_function("coulomb")

    def test_spectrum_function_for(self, pure_vector, fig3a):
        assert spectrum_function_for(pure_vector) is scalar_vector_spectrum
        assert spectrum_function_for(fig3a) is energy_candidates

    def test_spherical_textbook_limit(self):
        alpha = 0.3
        cfg = PotentialConfig(alpha_sigma=-alpha, alpha_delta=-alpha)
        spectrum = spectrum_function_for(cfg)
        for k_s in (-3, -2, -1, 1, 2, 3):
            for n_f in range(4):
                q = QuantumNumbers.spherical(n_f, k_s)
                expected = 1.0 / math.sqrt(1.0 + alpha**2 / (n_f + math.sqrt(k_s**2 - alpha**2)) ** 2)
                assert spectrum(cfg, q).e_plus == pytest.approx(expected, rel=1e-13)
