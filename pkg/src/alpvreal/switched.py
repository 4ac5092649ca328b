"""The linear-switched view: one active mode per step.

A switched input fixes a mode q(t) in 1..D at each step instead of a free
scheduling vector; embedding it with unit vectors e_{q(t)} turns the same
matrix family into a linear switched system.  All structural properties
(dimension, reachability, observability, minimality, Markov parameters)
transfer verbatim because the matrix family is shared.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import words as _w
from .errors import DimensionMismatch, NonFiniteEntry
from .model import ALPVSystem, InputSequence, simulate, validate


@dataclass(frozen=True, eq=False)
class SwitchedInput:
    """A mode word over 1..D and one input vector per step."""

    D: int
    modes: tuple
    inputs: np.ndarray  # (T+1, m)

    def __post_init__(self):
        _w.check_alphabet(self.D)
        object.__setattr__(self, "modes", tuple(int(q) for q in self.modes))
        u = np.atleast_2d(np.asarray(self.inputs, dtype=float))
        if len(self.modes) < 1:
            raise DimensionMismatch("a switched input must have at least one step")
        if u.shape[0] != len(self.modes):
            raise DimensionMismatch(
                f"{len(self.modes)} modes but {u.shape[0]} input rows"
            )
        if not np.all(np.isfinite(u)):
            raise NonFiniteEntry("switched input contains NaN or Inf entries")
        object.__setattr__(self, "inputs", u)

    @property
    def length(self) -> int:
        return len(self.modes)

    @property
    def m(self) -> int:
        return self.inputs.shape[1]


def embed_switched_input(sw: SwitchedInput) -> InputSequence:
    """Replace each mode q by the unit scheduling vector e_q."""
    modes = _w.check_word(sw.modes, sw.D)
    sched = np.zeros((len(modes), sw.D))
    for t, q in enumerate(modes):
        sched[t, q - 1] = 1.0
    return InputSequence(scheduling=sched, inputs=sw.inputs)


def switched_output(sys: ALPVSystem, sw: SwitchedInput) -> np.ndarray:
    """Final output of the switched run from the zero initial state."""
    validate(sys)
    if sw.D != sys.D:
        raise DimensionMismatch(f"switched input has D={sw.D}, system has D={sys.D}")
    return simulate(sys, np.zeros(sys.n), embed_switched_input(sw)).final_output
