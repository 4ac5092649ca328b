"""Markov parameters: kernel coefficients, block parameters, black-box probing.

The kernel coefficient of a word v = q_0 q_1 ... q_t (t >= 1) of a system is
the matrix product

    S(v) = C_{q_t} A_{q_{t-1}} ... A_{q_1} B_{q_0}

(with an empty A-chain read as the identity for |v| = 2).  The block Markov
parameter M(v) collects S(j v i) over all i, j in 1..D into a pD x mD matrix
and equals Ctilde * A_{v_k} ... A_{v_1} * Btilde for the stacked matrices
Ctilde = [C_1; ...; C_D], Btilde = [B_1, ..., B_D].

Both quantities are also recoverable from a black-box input-output map by
probing it with unit scheduling vectors: column l of S(v) is the response to
the run (e_{q_0}, e_l)(e_{q_1}, 0)...(e_{q_t}, 0).  This probing route never
touches the matrices, so comparing it against the product formulas is a
genuine two-sided consistency check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import words as _w
from .errors import DimensionMismatch, HorizonExceeded, WordTooShort
from .model import ALPVSystem, InputSequence, simulate, validate


@dataclass(frozen=True, eq=False)
class MarkovTable:
    """Kernel coefficients S(v) for every word with 2 <= |v| <= horizon."""

    D: int
    m: int
    p: int
    horizon: int
    entries: dict  # Word -> (p, m) ndarray


@dataclass(frozen=True, eq=False)
class IOOracle:
    """A black-box input-output map with declared dimensions.

    `fn` maps an InputSequence over R^D x R^m to a length-p output vector.
    `reentrant` declares whether independent probes may be issued
    concurrently; probing here is serial either way.
    """

    fn: Callable
    D: int
    m: int
    p: int
    reentrant: bool = False

    def __call__(self, w: InputSequence) -> np.ndarray:
        return np.asarray(self.fn(w), dtype=float).reshape(-1)


def system_oracle(sys: ALPVSystem) -> IOOracle:
    """The zero-initial-state input-output map of a system, as an oracle."""
    validate(sys)
    x0 = np.zeros(sys.n)

    def fn(w: InputSequence) -> np.ndarray:
        return simulate(sys, x0, w).final_output

    return IOOracle(fn=fn, D=sys.D, m=sys.m, p=sys.p, reentrant=True)


def kernel_coeff(sys: ALPVSystem, v) -> np.ndarray:
    """S(v) of a system: the product C_{q_t} A_{q_{t-1}} ... A_{q_1} B_{q_0}."""
    validate(sys)
    v = _w.check_word(v, sys.D)
    if len(v) < 2:
        raise WordTooShort(f"kernel coefficients need |v| >= 2, got {len(v)}")
    P = sys.B[v[0] - 1]
    for q in v[1:-1]:
        P = sys.A[q - 1] @ P
    return sys.C[v[-1] - 1] @ P


def markov_table(sys: ALPVSystem, horizon: int) -> MarkovTable:
    """All kernel coefficients of a system up to the given word length.

    Built by a depth-first sweep that extends each A-chain by one factor per
    word, so the cost is one small matrix product per table entry.
    """
    validate(sys)
    if horizon < 1:
        raise ValueError(f"horizon must be >= 1, got {horizon}")
    D = sys.D
    entries = {}

    def fill(word, P):
        for q in range(1, D + 1):
            grown = word + (q,)
            entries[grown] = sys.C[q - 1] @ P
            if len(grown) < horizon:
                fill(grown, sys.A[q - 1] @ P)

    if horizon >= 2:
        for q0 in range(1, D + 1):
            fill((q0,), sys.B[q0 - 1])
    return MarkovTable(D=D, m=sys.m, p=sys.p, horizon=horizon, entries=entries)


def stacked_input_matrix(sys: ALPVSystem) -> np.ndarray:
    """Btilde = [B_1, ..., B_D], shape n x mD."""
    validate(sys)
    return np.hstack(sys.B)


def stacked_output_matrix(sys: ALPVSystem) -> np.ndarray:
    """Ctilde = [C_1; ...; C_D], shape pD x n."""
    validate(sys)
    return np.vstack(sys.C)


def markov_block(source, v) -> np.ndarray:
    """M(v): the pD x mD block matrix with block (i, j) = S(j v i).

    `source` may be a system (product formula) or a MarkovTable (lookups);
    a table must cover words of length |v| + 2.
    """
    if isinstance(source, ALPVSystem):
        validate(source)
        v = _w.check_word(v, source.D)
        P = stacked_input_matrix(source)
        for q in v:
            P = source.A[q - 1] @ P
        return stacked_output_matrix(source) @ P
    table = source
    v = _w.check_word(v, table.D)
    if len(v) + 2 > table.horizon:
        raise HorizonExceeded(
            f"word of length {len(v)} needs horizon >= {len(v) + 2}, table has {table.horizon}"
        )
    D = table.D
    rows = []
    for i in range(1, D + 1):
        rows.append([table.entries[(j,) + v + (i,)] for j in range(1, D + 1)])
    return np.block(rows)


def probe_kernel_coeff(oracle: IOOracle, v) -> np.ndarray:
    """Recover S(v) from a black-box map by unit-vector probing.

    Column l of S(v) is the oracle response to the switched run whose
    scheduling vectors are e_{q_0}, ..., e_{q_t} and whose only nonzero
    input is e_l at time 0.  Exact for any map with a convolution
    representation; no step sizes or differencing involved.
    """
    v = _w.check_word(v, oracle.D)
    if len(v) < 2:
        raise WordTooShort(f"kernel coefficients need |v| >= 2, got {len(v)}")
    sched = np.zeros((len(v), oracle.D))
    for t, q in enumerate(v):
        sched[t, q - 1] = 1.0
    S = np.empty((oracle.p, oracle.m))
    for l in range(oracle.m):
        u = np.zeros((len(v), oracle.m))
        u[0, l] = 1.0
        S[:, l] = oracle(InputSequence(scheduling=sched, inputs=u))
    return S


def probe_markov_block(oracle: IOOracle, v) -> np.ndarray:
    """Recover M(v) from a black-box map, one probe batch per block."""
    v = _w.check_word(v, oracle.D)
    D = oracle.D
    rows = []
    for i in range(1, D + 1):
        rows.append([probe_kernel_coeff(oracle, (j,) + v + (i,)) for j in range(1, D + 1)])
    return np.block(rows)
