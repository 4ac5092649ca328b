"""Shared constructions for the test suite: random systems, paddings, runs."""

import numpy as np

from alpvreal import (
    ALPVSystem,
    InputSequence,
    analyze,
    hankel_singular_values,
)


def random_system(rng, n=None, D=None, m=None, p=None) -> ALPVSystem:
    """Random family with entries uniform on (-1, 1)."""
    D = int(rng.integers(1, 4)) if D is None else D
    n = int(rng.integers(1, 5)) if n is None else n
    m = int(rng.integers(1, 3)) if m is None else m
    p = int(rng.integers(1, 3)) if p is None else p
    return ALPVSystem(
        A=[rng.uniform(-1, 1, (n, n)) for _ in range(D)],
        B=[rng.uniform(-1, 1, (n, m)) for _ in range(D)],
        C=[rng.uniform(-1, 1, (p, n)) for _ in range(D)],
    )


def random_minimal_system(rng, n=None, D=None, m=None, p=None, sv_gap=1e-4) -> ALPVSystem:
    """Random minimal system whose Hankel spectrum is safely away from the cutoff.

    Rejection sampling: draws are discarded unless the analysis flags are
    minimal and sigma_n / sigma_1 of H_{n-1,n} exceeds sv_gap, which keeps
    every rank decision in the suite far from the tolerance boundary.
    """
    for _ in range(500):
        sys = random_system(rng, n=n, D=D, m=m, p=p)
        if not analyze(sys).minimal:
            continue
        s = hankel_singular_values(sys, sys.n - 1, sys.n)
        if len(s) >= sys.n and s[sys.n - 1] / s[0] > sv_gap:
            return sys
    raise RuntimeError("could not draw a well-conditioned minimal system")


def random_run(rng, D, m, length) -> InputSequence:
    return InputSequence(
        scheduling=rng.uniform(-1, 1, (length, D)),
        inputs=rng.uniform(-1, 1, (length, m)),
    )


def pad_unreachable(sys: ALPVSystem, k, rng) -> ALPVSystem:
    """Append k states that no input excites (B rows zero, lower-left A zero)."""
    n = sys.n
    A, B, C = [], [], []
    for q in range(sys.D):
        X = rng.uniform(-1, 1, (n, k))
        Z = rng.uniform(-1, 1, (k, k))
        A.append(np.block([[sys.A[q], X], [np.zeros((k, n)), Z]]))
        B.append(np.vstack([sys.B[q], np.zeros((k, sys.m))]))
        C.append(np.hstack([sys.C[q], rng.uniform(-1, 1, (sys.p, k))]))
    return ALPVSystem(A=A, B=B, C=C)


def pad_unobservable(sys: ALPVSystem, k, rng) -> ALPVSystem:
    """Append k states that no output sees (C columns zero, upper-right A zero)."""
    n = sys.n
    A, B, C = [], [], []
    for q in range(sys.D):
        Y = rng.uniform(-1, 1, (k, n))
        Z = rng.uniform(-1, 1, (k, k))
        A.append(np.block([[sys.A[q], np.zeros((n, k))], [Y, Z]]))
        B.append(np.vstack([sys.B[q], rng.uniform(-1, 1, (k, sys.m))]))
        C.append(np.hstack([sys.C[q], np.zeros((sys.p, k))]))
    return ALPVSystem(A=A, B=B, C=C)


def transform_system(sys: ALPVSystem, T) -> ALPVSystem:
    """The isomorphic copy (T A_q T^-1, T B_q, C_q T^-1)."""
    Tinv = np.linalg.inv(T)
    return ALPVSystem(
        A=[T @ Aq @ Tinv for Aq in sys.A],
        B=[T @ Bq for Bq in sys.B],
        C=[Cq @ Tinv for Cq in sys.C],
    )
