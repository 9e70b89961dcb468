import math

import numpy as np
import pytest

from diracoulomb.errors import ForbiddenState

from diracoulomb.model import PotentialConfig, Sector
from diracoulomb.model.model import effective_kappa, gamma_exponent
from diracoulomb.spectrum import (
    RegimeRegion,
    RegimeSectors,
    classify_regime,
    energy_candidates,
    filter_spurious,
)

from conftest import circular


def _classify(cfg, q):
    kbar = effective_kappa(q, cfg)
    return classify_regime(cfg, kbar, q.n_f + gamma_exponent(kbar, cfg))


def test_fig3a_single_sector(fig3a):
    report = _classify(fig3a, circular(0, 3))
    assert report.intercept == pytest.approx(0.8 / 1.4)
    assert report.sectors is RegimeSectors.ANTIPARTICLE_ONLY
    assert report.region is RegimeRegion.SINGLE_SECTOR
    assert report.sector_set() == frozenset({Sector.ANTIPARTICLE})
    assert not report.boundary_flag


def test_lower_endpoint_is_open():
    # s > 0 and I_E = -sqrt(1 + bbar^2) exactly
    cfg = PotentialConfig(alpha_sigma=0.5, alpha_delta=0.0)
    report = classify_regime(cfg, 1.5, 1.5)
    assert report.intercept == pytest.approx(-1.0)
    assert report.sectors is RegimeSectors.NONE
    assert report.region is RegimeRegion.FORBIDDEN_LOW


def test_above_critical_value(fig3a):
    report = classify_regime(fig3a, 5.0, 0.6)
    assert report.intercept > report.critical
    assert report.sectors is RegimeSectors.NONE
    assert report.region is RegimeRegion.FORBIDDEN_HIGH


def test_critical_value_sets_boundary_flag(fig3a):
    kbar = 5.0
    s = fig3a.strength_sum
    intercept = (2.0 * kbar * fig3a.bbar + fig3a.alpha_delta - fig3a.alpha_sigma) / s
    xi = 0.5 * math.sqrt((intercept * s / fig3a.continuum_edge) ** 2 - s * s)
    report = classify_regime(fig3a, kbar, xi)
    assert report.sectors is RegimeSectors.BOTH
    assert report.boundary_flag


def test_negative_strength_sum_mirrors(fig3b):
    assert _classify(fig3b, circular(0, 3)).region is RegimeRegion.FORBIDDEN_HIGH
    report = _classify(fig3b, circular(0, -3))
    assert report.sectors is RegimeSectors.PARTICLE_ONLY
    assert report.sector_set() == frozenset({Sector.PARTICLE})


def test_both_sectors():
    # pure tensor has s = 0, so use a nearby small strength
    cfg = PotentialConfig(alpha_sigma=0.01, alpha_delta=0.01, b=1.0)
    report = _classify(cfg, circular(1, 3))
    assert report.sectors is RegimeSectors.BOTH
    assert report.region is RegimeRegion.BOTH_SECTORS


class TestConstantRightHandSide:
    def test_binds_when_kbar_bbar_exceeds_alpha_s(self):
        cfg = PotentialConfig(alpha_sigma=0.5, alpha_delta=-0.5, b=1.0)
        report = _classify(cfg, circular(0, 3))
        assert report.intercept is None and report.critical is None
        assert report.sectors is RegimeSectors.BOTH
        assert report.region is RegimeRegion.CONSTANT_RHS

    def test_no_binding_below(self):
        cfg = PotentialConfig(alpha_sigma=0.5, alpha_delta=-0.5, b=0.2)
        assert _classify(cfg, circular(0, 3)).sectors is RegimeSectors.NONE

    def test_free_case(self):
        assert _classify(PotentialConfig(), circular(0, 3)).sectors is RegimeSectors.NONE


@pytest.mark.parametrize("config", ["fig3a", "fig3b"])
def test_filter_agrees_with_classifier(config, request):
    cfg = request.getfixturevalue(config)
    for two_k in (-9, -7, -5, -3, 3, 5, 7, 9):
        for n_f in range(4):
            q = circular(n_f, two_k)
            survivors = {sector for sector, _ in filter_spurious(energy_candidates(cfg, q), cfg, q)}
            assert survivors <= _classify(cfg, q).sector_set()


def test_as_dict(fig3a):
    row = _classify(fig3a, circular(0, 3)).as_dict()
    assert row["sectors"] == "AntiparticleOnly"
    assert row["region"] == "single-sector"
    assert set(row) == {"intercept", "critical", "sectors", "boundary_flag", "region"}


def test_random_agreement_with_filter():
    rng = np.random.default_rng(11)
    compared = 0
    for _ in range(10_000):
        cfg = PotentialConfig(
            alpha_sigma=float(rng.uniform(-1.0, 1.0)),
            alpha_delta=float(rng.uniform(-1.0, 1.0)),
            a=float(rng.uniform(-1.0, 1.0)),
            b=float(rng.uniform(-1.0, 1.0)),
        )
        q = circular(int(rng.integers(0, 6)), int(rng.choice([-9, -7, -5, -3, -1, 1, 3, 5, 7, 9])))
        try:
            report = _classify(cfg, q)
        except ForbiddenState:
            continue
        candidates = energy_candidates(cfg, q)
        edge = cfg.continuum_edge
        near_edges = [
            abs(abs(energy) - edge) < 1e-6 or abs(abs(energy) - 1.0) < 1e-6
            for _, energy in candidates.roots()
        ]
        endpoints = [] if report.intercept is None else [-edge, edge, report.critical]
        if any(near_edges) or any(abs(report.intercept - point) < 1e-6 for point in endpoints):
            continue
        survivors = {sector for sector, _ in filter_spurious(candidates, cfg, q)}
        assert survivors == report.sector_set()
        compared += 1
    assert compared > 5000
