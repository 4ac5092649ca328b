"""Affine LPV systems: the matrix family, simulation, convolution output.

A system is a family {(A_q, B_q, C_q)}_{q=1..D} driven by a scheduling
signal p(t) in R^D and an input u(t) in R^m:

    x(t+1) = sum_q p_q(t) * (A_q x(t) + B_q u(t))
    y(t)   = sum_q p_q(t) * C_q x(t)

The output at time t does not depend on u(t) (no feedthrough).  The
input-output map of a system is the map induced by the zero initial state;
`convolution_output` evaluates the same map from a table of kernel
coefficients instead of the matrices, which both serves as a brute-force
test oracle and decouples the map from any particular realization.

Scheduling vectors are unrestricted elements of R^D: affine dependence on
physical parameters is modelled by pinning one scheduling coordinate to 1,
and every multilinear identity used here extends uniquely from any spanning
set to the whole space.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    HorizonExceeded,
    InvalidAlphabet,
    NonFiniteEntry,
)


def _matrix_tuple(mats):
    return tuple(np.atleast_2d(np.asarray(M, dtype=float)) for M in mats)


@dataclass(frozen=True, eq=False)
class ALPVSystem:
    """Matrix family of a discrete-time affine LPV system.

    A, B and C hold D matrices each, of shapes n x n, n x m and p x n.
    The constructor only coerces entries to 2-d float arrays; call
    `validate` to enforce the shape and finiteness invariants.
    """

    A: tuple
    B: tuple
    C: tuple

    def __post_init__(self):
        object.__setattr__(self, "A", _matrix_tuple(self.A))
        object.__setattr__(self, "B", _matrix_tuple(self.B))
        object.__setattr__(self, "C", _matrix_tuple(self.C))

    @property
    def D(self) -> int:
        return len(self.A)

    @property
    def n(self) -> int:
        return self.A[0].shape[0]

    @property
    def m(self) -> int:
        return self.B[0].shape[1]

    @property
    def p(self) -> int:
        return self.C[0].shape[0]

    @property
    def dims(self):
        """(D, n, m, p)."""
        return (self.D, self.n, self.m, self.p)

    def stacked(self):
        """The family as three stacked arrays (D,n,n), (D,n,m), (D,p,n)."""
        cached = self.__dict__.get("_stacked")
        if cached is None:
            cached = (np.stack(self.A), np.stack(self.B), np.stack(self.C))
            object.__setattr__(self, "_stacked", cached)
        return cached


def validate(sys: ALPVSystem) -> ALPVSystem:
    """Check all shape and finiteness invariants; identity on valid input."""
    if sys.__dict__.get("_valid"):
        return sys
    D = len(sys.A)
    if D < 1:
        raise InvalidAlphabet("a system needs at least one scheduling coordinate (D >= 1)")
    if len(sys.B) != D or len(sys.C) != D:
        raise DimensionMismatch(
            f"matrix families disagree on D: len(A)={D}, len(B)={len(sys.B)}, len(C)={len(sys.C)}"
        )
    n = sys.A[0].shape[0]
    m = sys.B[0].shape[1]
    p = sys.C[0].shape[0]
    if m < 1:
        raise DimensionMismatch(f"input dimension must be >= 1, got m={m}")
    if p < 1:
        raise DimensionMismatch(f"output dimension must be >= 1, got p={p}")
    for name, family, expected in (
        ("A", sys.A, (n, n)),
        ("B", sys.B, (n, m)),
        ("C", sys.C, (p, n)),
    ):
        for q, M in enumerate(family, start=1):
            if M.shape != expected:
                raise DimensionMismatch(
                    f"{name}[{q}]: expected shape {expected}, got {M.shape}"
                )
            if not np.all(np.isfinite(M)):
                raise NonFiniteEntry(f"{name}[{q}] contains NaN or Inf entries")
    object.__setattr__(sys, "_valid", True)
    return sys


@dataclass(frozen=True, eq=False)
class InputSequence:
    """A finite run of (scheduling vector, input vector) pairs, t = 0..T."""

    scheduling: np.ndarray  # (T+1, D)
    inputs: np.ndarray  # (T+1, m)

    def __post_init__(self):
        sched = np.asarray(self.scheduling, dtype=float)
        u = np.asarray(self.inputs, dtype=float)
        if sched.ndim != 2 or u.ndim != 2:
            raise DimensionMismatch(
                f"scheduling and inputs must be 2-d (steps x dim); got "
                f"ndim {sched.ndim} and {u.ndim}"
            )
        if sched.shape[0] != u.shape[0]:
            raise DimensionMismatch(
                f"scheduling has {sched.shape[0]} steps but inputs has {u.shape[0]}"
            )
        if sched.shape[0] < 1:
            raise DimensionMismatch("an input sequence must have at least one step")
        if not (np.all(np.isfinite(sched)) and np.all(np.isfinite(u))):
            raise NonFiniteEntry("input sequence contains NaN or Inf entries")
        object.__setattr__(self, "scheduling", sched)
        object.__setattr__(self, "inputs", u)

    @classmethod
    def from_pairs(cls, pairs):
        """Build from an iterable of (p_vector, u_vector) pairs."""
        sched = np.array([np.atleast_1d(np.asarray(p, dtype=float)) for p, _ in pairs])
        u = np.array([np.atleast_1d(np.asarray(v, dtype=float)) for _, v in pairs])
        return cls(scheduling=sched, inputs=u)

    @property
    def length(self) -> int:
        return self.scheduling.shape[0]

    @property
    def D(self) -> int:
        return self.scheduling.shape[1]

    @property
    def m(self) -> int:
        return self.inputs.shape[1]


@dataclass(frozen=True, eq=False)
class SimulationResult:
    """States x(0)..x(T+1) and outputs y(0)..y(T) of one run."""

    states: np.ndarray  # (T+2, n)
    outputs: np.ndarray  # (T+1, p)

    @property
    def final_output(self) -> np.ndarray:
        return self.outputs[-1]


def simulate(sys: ALPVSystem, x0, w: InputSequence) -> SimulationResult:
    """Run the state/output recursion of the system on a generalized input.

    The returned trajectory satisfies states[0] = x0 and, for each step t,

        outputs[t]   = (sum_q p_q(t) C_q) states[t]
        states[t+1]  = (sum_q p_q(t) A_q) states[t] + (sum_q p_q(t) B_q) u(t)

    so the input at the final time never affects the outputs.
    """
    validate(sys)
    D, n, m, p = sys.dims
    if w.D != D:
        raise DimensionMismatch(f"sequence has D={w.D}, system has D={D}")
    if w.m != m:
        raise DimensionMismatch(f"sequence has m={w.m}, system has m={m}")
    x = np.asarray(x0, dtype=float).reshape(-1)
    if x.shape[0] != n:
        raise DimensionMismatch(f"initial state has dim {x.shape[0]}, system has n={n}")
    A3, B3, C3 = sys.stacked()
    steps = w.length
    states = np.empty((steps + 1, n))
    outputs = np.empty((steps, p))
    states[0] = x
    for t in range(steps):
        pt = w.scheduling[t]
        outputs[t] = np.tensordot(pt, C3, axes=1) @ x
        x = np.tensordot(pt, A3, axes=1) @ x + np.tensordot(pt, B3, axes=1) @ w.inputs[t]
        states[t + 1] = x
    return SimulationResult(states=states, outputs=outputs)


def convolution_output(table, w: InputSequence) -> np.ndarray:
    """Evaluate the input-output map from its kernel table alone.

    The final output of a run w = (p(0),u(0))..(p(t),u(t)) expands as

        f(w) = sum_{k=0}^{t-1} [ sum_{|v| = t-k+1} S(v) * pbar_{k:t}^v ] u(k)

    where pbar_{k:t}^v is the product p_{v_0}(k) p_{v_1}(k+1) ... p_{v_{t-k}}(t).
    The word sum is enumerated directly; this is the brute-force route the
    realization tests are checked against.  For a length-1 run the sum is
    empty and the result is the zero vector.
    """
    D, m, p = table.D, table.m, table.p
    if w.D != D:
        raise DimensionMismatch(f"sequence has D={w.D}, table has D={D}")
    if w.m != m:
        raise DimensionMismatch(f"sequence has m={w.m}, table has m={m}")
    if w.length > table.horizon:
        raise HorizonExceeded(
            f"sequence length {w.length} exceeds table horizon {table.horizon}"
        )
    sched = w.scheduling
    t = w.length - 1
    y = np.zeros(p)
    for k in range(t):
        weight = np.zeros((p, m))
        for v in itertools.product(range(1, D + 1), repeat=t - k + 1):
            coeff = math.prod(sched[k + i, q - 1] for i, q in enumerate(v))
            if coeff != 0.0:
                weight += coeff * table.entries[v]
        y += weight @ w.inputs[k]
    return y
