"""Input-output equations: a state-free description of the same behavior.

For the scalar one-coordinate system x(t+1) = p(t)(0.5 x(t) + u(t)),
y(t) = p(t) x(t), eliminating the state gives an order-1 relation between
consecutive outputs, inputs and scheduling values:

    Y0 - 0.5 * P01 * Y1 - P01 * P11 * U11 = 0

with P01 = p(t), P11 = p(t-1), Y1 = y(t-1), U11 = u(t-1).  The randomized
checker accepts it and pins down how badly a perturbed coefficient fails.
Satisfiability of such an equation is exactly realizability by an affine
LPV family, and the minimal order shows up as a Hankel rank.
"""

import numpy as np

from alpvreal import (
    AffineIOEquation,
    ALPVSystem,
    InputSequence,
    SchedulingPoly,
    check_equation,
    equation_residual,
    io_span_dimension,
    simulate,
)

sys1 = ALPVSystem(A=[[[0.5]]], B=[[[1.0]]], C=[[[1.0]]])

q0 = SchedulingPoly.constant(1.0, 1, 1)
q1 = SchedulingPoly.from_terms([(-0.5, {(0, 1): 1})], 1, 1)
l11 = SchedulingPoly.from_terms([(-1.0, {(0, 1): 1, (1, 1): 1})], 1, 1)
eq = AffineIOEquation(order=1, m=1, D=1, output_coeffs=(q0, q1), input_coeffs=((l11,),))

# one concrete trajectory, residual by hand-checkable substitution
w = InputSequence(scheduling=[[2.0], [3.0], [1.0]], inputs=[[1.0], [0.0], [0.0]])
out = simulate(sys1, [0.0], w).outputs
print("outputs y(0..2):", out.ravel())
print("residual at t=2:", equation_residual(eq, w, out))

report = check_equation(eq, sys1, trials=1000, seed=42)
print("\n1000 random trajectories:", report)

# nudge one coefficient and the same machinery rejects it
q1_bad = SchedulingPoly.from_terms([(-0.6, {(0, 1): 1})], 1, 1)
eq_bad = AffineIOEquation(order=1, m=1, D=1, output_coeffs=(q0, q1_bad), input_coeffs=((l11,),))
print("perturbed residual on the same trajectory:", equation_residual(eq_bad, w, out))
print("perturbed equation check:", check_equation(eq_bad, sys1, trials=200, seed=42))

# the order of the behavior, read off the Hankel row span
for bound in (1, 2, 3):
    print(f"span dimension at bound {bound}:", io_span_dimension(sys1, bound))
