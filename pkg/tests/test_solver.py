import asyncio

import pytest

from diracoulomb.config import Settings
from diracoulomb.errors import ReasonCode
from diracoulomb.model import PotentialConfig, Sector, SymmetryMode
from diracoulomb.solver import AsyncCoulombSolver, CoulombSolver
from diracoulomb.spectrum import RegimeSectors


@pytest.fixture
def solver(fig3a):
    return CoulombSolver(config=fig3a)


def test_requires_potential_config():
    with pytest.raises(TypeError):
        CoulombSolver(config={"alpha_sigma": 0.6})


def test_mode_and_numbers(pure_vector):
    solver = CoulombSolver(config=pure_vector, mode=" Spherical ")
    assert solver.mode is SymmetryMode.SPHERICAL
    q = solver.numbers(1, -2)
    assert q.k_s == -2
    assert q.two_k == 4


def test_states_keep_input_order(solver):
    numbers = [solver.numbers(n_f, 3) for n_f in range(3)]
    results = solver.states(numbers)
    assert [(r.numbers.n_f, r.sector) for r in results] == [
        (n_f, sector) for n_f in range(3) for sector in (Sector.PARTICLE, Sector.ANTIPARTICLE)
    ]
    ground_particle, ground_antiparticle = results[0], results[1]
    assert ground_particle.reason is ReasonCode.NO_BINDING_REGIME
    assert ground_antiparticle.reason is ReasonCode.KBAR_PLUS_A_PLUS_ZERO
    assert not ground_antiparticle.bound
    assert results[3].bound
    assert results[3].state.energy == pytest.approx(-0.9166305, abs=1e-6)


def test_gamma_too_small_is_reported(pure_vector):
    solver = CoulombSolver(config=pure_vector)
    result = solver.sector_result(solver.numbers(0, 1), Sector.PARTICLE)
    assert result.reason is ReasonCode.GAMMA_TOO_SMALL
    assert "1/4" in result.message


def test_workers_do_not_change_results(fig3a):
    serial_solver = CoulombSolver(config=fig3a)
    numbers = [serial_solver.numbers(n_f, two_k) for two_k in (-5, -3, 3, 5) for n_f in range(3)]
    serial = serial_solver.states(numbers)
    threaded = CoulombSolver(config=fig3a, settings=Settings(workers=4)).states(numbers)
    assert [(r.numbers, r.sector, r.reason) for r in serial] == [
        (r.numbers, r.sector, r.reason) for r in threaded
    ]
    assert [r.state.energy for r in serial if r.bound] == [r.state.energy for r in threaded if r.bound]


def test_regime(solver):
    assert solver.regime(solver.numbers(0, 3)).sectors is RegimeSectors.ANTIPARTICLE_ONLY


def test_verify_boundary_states(pure_tensor):
    solver = CoulombSolver(config=pure_tensor)
    state = solver.bound_state(solver.numbers(0, 3), Sector.PARTICLE)
    checks = solver.verify_states([state], grid_points=100)
    assert [check.passed for check in checks] == [True]
    assert not solver.verify_state(state, energy_shift=1e-3).passed


@pytest.mark.slow
def test_eigenvalues(pure_vector):
    solver = CoulombSolver(config=pure_vector)
    q = solver.numbers(0, 3)
    energy = solver.bound_state(q, Sector.PARTICLE).energy
    found = solver.eigenvalues(q, (energy - 0.005, energy + 0.005), count=1, grid_points=8)
    assert found == [pytest.approx(energy, abs=1e-8)]


def test_async_wrapper(fig3a):
    async def run():
        async with AsyncCoulombSolver(config=fig3a) as solver:
            q = solver.solver.numbers(1, 3)
            state = await solver.bound_state(q, Sector.ANTIPARTICLE)
            results = await solver.states([q])
            report = await solver.regime(q)
            return state, results, report

    state, results, report = asyncio.run(run())
    assert state.energy == pytest.approx(-0.9166305, abs=1e-6)
    assert [r.bound for r in results] == [False, True]
    assert report.sectors is RegimeSectors.ANTIPARTICLE_ONLY
