"""Finite Hankel sub-matrices over the word enumeration, and their rank.

The (block-row i, block-column j) entry of the Hankel matrix of an
input-output map is the block Markov parameter M(v_j v_i), with v_1, v_2,
... the length-then-lexicographic enumeration of words.  Only finite
upper-left sub-matrices are ever materialized: `build_hankel(source, L, M)`
assembles the block rows for |v_i| <= L and block columns for |v_j| <= M,
giving an N(L)*pD x N(M)*mD matrix.

For a system source the sub-matrix factors exactly through the
word-indexed observability and reachability factors,

    H_{L,M} = observability_factor(sys, L) @ reachability_factor(sys, M),

whose inner dimension is the state dimension n.  That factorization is also
how `hankel_singular_values` gets the spectrum of large sub-matrices
without assembling them.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import words as _w
from .errors import HorizonExceeded
from .linalg import DEFAULT_TOL, ToleranceConfig, numerical_rank
from .markov import (
    ALPVSystem,
    IOOracle,
    MarkovTable,
    markov_block,
    probe_markov_block,
    stacked_input_matrix,
    stacked_output_matrix,
)
from .model import validate


@dataclass(frozen=True, eq=False)
class HankelBlockMatrix:
    """The assembled sub-matrix plus the bounds and dimensions it was built for."""

    L: int
    M: int
    D: int
    m: int
    p: int
    data: np.ndarray

    @property
    def shape(self):
        return self.data.shape


def _chain_blocks(sys: ALPVSystem, depth: int):
    """A-chain products chain(v) = A_{v_k} ... A_{v_1} for all |v| <= depth."""
    n, D = sys.n, sys.D
    chains = {(): np.eye(n)}
    for v in _w.words_up_to(depth, D):
        if v:
            chains[v] = sys.A[v[-1] - 1] @ chains[v[:-1]]
    return chains


def reachability_factor(sys: ALPVSystem, depth: int) -> np.ndarray:
    """n x N(depth)*mD matrix whose block column for word v is chain(v) @ Btilde."""
    validate(sys)
    Bt = stacked_input_matrix(sys)
    chains = _chain_blocks(sys, depth)
    return np.hstack([chains[v] @ Bt for v in _w.words_up_to(depth, sys.D)])


def observability_factor(sys: ALPVSystem, depth: int) -> np.ndarray:
    """N(depth)*pD x n matrix whose block row for word v is Ctilde @ chain(v)."""
    validate(sys)
    Ct = stacked_output_matrix(sys)
    chains = _chain_blocks(sys, depth)
    return np.vstack([Ct @ chains[v] for v in _w.words_up_to(depth, sys.D)])


def build_hankel(source, L: int, M: int) -> HankelBlockMatrix:
    """Assemble H_{L,M} from a system, a MarkovTable, or an IOOracle.

    A table source must cover words up to length L + M + 2.  An oracle
    source is probed block by block and is only sensible at small bounds.
    """
    if L < 0 or M < 0:
        raise ValueError(f"word-length bounds must be >= 0, got L={L}, M={M}")
    if isinstance(source, ALPVSystem):
        validate(source)
        data = observability_factor(source, L) @ reachability_factor(source, M)
        D, m, p = source.D, source.m, source.p
        return HankelBlockMatrix(L=L, M=M, D=D, m=m, p=p, data=data)
    if isinstance(source, MarkovTable):
        if L + M + 2 > source.horizon:
            raise HorizonExceeded(
                f"H_(L={L},M={M}) needs horizon >= {L + M + 2}, table has {source.horizon}"
            )
        block = lambda vj, vi: markov_block(source, vj + vi)
        D, m, p = source.D, source.m, source.p
    elif isinstance(source, IOOracle):
        block = lambda vj, vi: probe_markov_block(source, vj + vi)
        D, m, p = source.D, source.m, source.p
    else:
        raise TypeError(f"unsupported Hankel source: {type(source).__name__}")
    row_words = _w.words_up_to(L, D)
    col_words = _w.words_up_to(M, D)
    data = np.block([[block(vj, vi) for vj in col_words] for vi in row_words])
    return HankelBlockMatrix(L=L, M=M, D=D, m=m, p=p, data=data)


def hankel_rank(source, L: int, M: int, tol: ToleranceConfig = DEFAULT_TOL) -> int:
    """Numerical rank of the assembled sub-matrix.

    The value certifies the rank of the full (infinite) Hankel matrix only
    together with the bounds used: it equals the full rank whenever some
    realization of dimension <= L + 1 exists.
    """
    return numerical_rank(build_hankel(source, L, M).data, tol)


def hankel_singular_values(sys: ALPVSystem, L: int, M: int) -> np.ndarray:
    """Nonzero-part singular values of H_{L,M}, from the rank-n factors.

    With H = Of @ Rf and thin QR of each factor, the spectrum of H equals
    the spectrum of the small core R1 @ R2^T; the remaining singular values
    of H are exactly zero and are not returned.
    """
    validate(sys)
    if sys.n == 0:
        return np.zeros(0)
    Of = observability_factor(sys, L)
    Rf = reachability_factor(sys, M)
    r1 = np.linalg.qr(Of, mode="r")
    r2 = np.linalg.qr(Rf.T, mode="r")
    return np.linalg.svd(r1 @ r2.T, compute_uv=False)


def factored_hankel_rank(sys: ALPVSystem, L: int, M: int, tol: ToleranceConfig = DEFAULT_TOL) -> int:
    """Rank of H_{L,M} computed from the factors, never assembling the matrix.

    Uses the same cutoff rule as `hankel_rank`, scaled by the dimensions the
    assembled matrix would have.
    """
    validate(sys)
    s = hankel_singular_values(sys, L, M)
    rows = _w.word_count(L, sys.D) * sys.p * sys.D
    cols = _w.word_count(M, sys.D) * sys.m * sys.D
    return int(np.sum(s > tol.cutoff(s, (rows, cols))))
