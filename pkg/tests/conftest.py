import numpy as np
import pytest

from alpvreal import ALPVSystem, AffineIOEquation, SchedulingPoly

from helpers import random_minimal_system, random_system


@pytest.fixture(scope="session")
def sigma_star() -> ALPVSystem:
    """D=2, n=m=p=1 minimal fixture; Hankel rank 1."""
    return ALPVSystem(
        A=[[[0.5]], [[0.0]]],
        B=[[[1.0]], [[3.0]]],
        C=[[[1.0]], [[2.0]]],
    )


@pytest.fixture(scope="session")
def sigma2() -> ALPVSystem:
    """D=2, n=2 minimal fixture; Hankel rank 2, but rank 1 at bound L=0."""
    return ALPVSystem(
        A=[[[0.0, 1.0], [0.0, 0.0]], [[0.0, 0.0], [1.0, 0.0]]],
        B=[[[1.0], [0.0]], [[0.0], [0.0]]],
        C=[[[1.0, 0.0]], [[0.0, 1.0]]],
    )


@pytest.fixture(scope="session")
def sigma1() -> ALPVSystem:
    """D=1 scalar fixture satisfying the order-1 equation eq1."""
    return ALPVSystem(A=[[[0.5]]], B=[[[1.0]]], C=[[[1.0]]])


def make_eq1(q1_coeff: float = -0.5) -> AffineIOEquation:
    """Y0 + q1_coeff*P01*Y1 - P01*P11*U11; exact for sigma1 at -0.5."""
    q0 = SchedulingPoly.constant(1.0, 1, 1)
    q1 = SchedulingPoly.from_terms([(q1_coeff, {(0, 1): 1})], 1, 1)
    l11 = SchedulingPoly.from_terms([(-1.0, {(0, 1): 1, (1, 1): 1})], 1, 1)
    return AffineIOEquation(order=1, m=1, D=1, output_coeffs=(q0, q1), input_coeffs=((l11,),))


@pytest.fixture(scope="session")
def eq1() -> AffineIOEquation:
    return make_eq1()


@pytest.fixture(scope="session")
def eq1_perturbed() -> AffineIOEquation:
    return make_eq1(q1_coeff=-0.6)


@pytest.fixture(scope="session")
def random_population():
    """50 unconstrained random systems (n <= 4, D <= 3, m,p <= 2)."""
    rng = np.random.default_rng(20250811)
    return [random_system(rng) for _ in range(50)]


@pytest.fixture(scope="session")
def minimal_population():
    """50 random minimal, well-conditioned systems (n <= 4, D <= 3, m,p <= 2)."""
    rng = np.random.default_rng(31415926)
    return [random_minimal_system(rng) for _ in range(50)]
