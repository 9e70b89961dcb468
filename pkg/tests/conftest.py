import pytest

from diracoulomb.model.types import PotentialConfig, QuantumNumbers

# Named parameter sets shared with the CLI presets
FIG3A = dict(alpha_delta=0.8, alpha_sigma=0.6, a=0.0, b=0.2)
FIG3B = dict(alpha_delta=-0.8, alpha_sigma=0.1, a=0.0, b=-0.2)


@pytest.fixture
def fig3a() -> PotentialConfig:
    return PotentialConfig(**FIG3A)


@pytest.fixture
def fig3b() -> PotentialConfig:
    return PotentialConfig(**FIG3B)


@pytest.fixture
def pure_vector() -> PotentialConfig:
    return PotentialConfig(alpha_sigma=-0.3, alpha_delta=-0.3)


@pytest.fixture
def pure_tensor() -> PotentialConfig:
    return PotentialConfig(b=1.0)


@pytest.fixture
def spin_boundary() -> PotentialConfig:
    """alpha_sigma = 0, bbar > 0: E = +1 solves the k = 3/2, n_f = 0 equation."""
    return PotentialConfig(alpha_sigma=0.0, alpha_delta=0.5, b=0.3)


@pytest.fixture
def pseudospin_boundary() -> PotentialConfig:
    """alpha_delta = 0, bbar < 0: E = -1 solves the k = -3/2, n_f = 0 equation."""
    return PotentialConfig(alpha_sigma=0.5, alpha_delta=0.0, b=-0.3)


def circular(n_f: int, two_k: int) -> QuantumNumbers:
    return QuantumNumbers.circular(n_f, two_k)
