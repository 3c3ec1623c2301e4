import numpy as np
import pytest

from qlra import basis_family
from qlra.context_data import ContextData, QuantumSide, from_quantum
from qlra.scalars import Field


def haar_unitary(rng, n=3):
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def random_complex_side(rng):
    """Haar-random a-basis (columns) and a random unit state."""
    U = haar_unitary(rng)
    psi = rng.standard_normal(3) + 1j * rng.standard_normal(3)
    psi /= np.linalg.norm(psi)
    return QuantumSide.from_values(U, psi, Field.COMPLEX), U, psi


def random_complex_data(seed):
    rng = np.random.default_rng(seed)
    while True:
        q, U, psi = random_complex_side(rng)
        try:
            return from_quantum(q), q, U, psi
        except Exception:  # pragma: no cover - boundary draws are rare
            continue


def uniform_data(with_b=True):
    third = np.full(3, 1 / 3)
    return ContextData(third, np.full((3, 3), 1 / 3), np.full((3, 3), 1 / 3), third if with_b else None)


@pytest.fixture(scope="session")
def example():
    """``(data, quantum side, report)`` of the worked instance."""
    return basis_family.reproduce_example()


@pytest.fixture
def uniform():
    return uniform_data()
