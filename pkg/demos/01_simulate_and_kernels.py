"""Simulating an affine LPV system, and the convolution view of its output.

The running example is a 2-coordinate scalar system: mode 1 is a stable lag
with unit input gain, mode 2 is memoryless with gain 3, and the scheduling
vector blends them freely.  Its zero-state output can be written two ways:
by running the state recursion, or by summing kernel coefficients S(v) over
scheduling words v.  Both routes must agree to machine precision.
"""

import numpy as np

from alpvreal import (
    ALPVSystem,
    InputSequence,
    convolution_output,
    kernel_coeff,
    markov_table,
    simulate,
)

sys1 = ALPVSystem(
    A=[[[0.5]], [[0.0]]],
    B=[[[1.0]], [[3.0]]],
    C=[[[1.0]], [[2.0]]],
)
print("system dims (D, n, m, p):", sys1.dims)

# drive it for six steps with a smooth scheduling blend and a step input
steps = 6
theta = np.linspace(0, np.pi / 2, steps)
w = InputSequence(
    scheduling=np.column_stack([np.cos(theta), np.sin(theta)]),
    inputs=np.ones((steps, 1)),
)
run = simulate(sys1, [0.0], w)
print("\nstates:", np.round(run.states.ravel(), 6))
print("outputs:", np.round(run.outputs.ravel(), 6))

# kernel coefficients: each word over {1, 2} contributes one matrix product
print("\nsome kernel coefficients:")
for v in ((1, 2), (1, 1, 1), (1, 2, 1), (2, 2)):
    print(f"  S{v} =", kernel_coeff(sys1, v).ravel())

# the convolution route reproduces the final output without touching states
table = markov_table(sys1, steps)
kernel_value = convolution_output(table, w)
print("\nfinal output, state recursion :", run.final_output)
print("final output, kernel sum      :", kernel_value)
print("difference                    :", abs(run.final_output - kernel_value).max())
