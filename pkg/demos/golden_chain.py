"""
From ONE_3 to h = [0, 5, 6]
===========================

Walk the gadget chain that turns the exactly-one relation into a binary
signature, checking each value on the way.
"""

from holantcsp import (Scalar, from_sym, make_named, nth_root_real, replay, sym,
                       transform)
from holantcsp import rewrite as R

one3 = make_named("ONE_3")
print("ONE_3 table:", [str(v) for v in one3.values])

###############################################################################
# Triangle symmetrization.  The brute-force sum and the recipe (three copies
# glued by linked projections) agree.
f = sym(one3)
print("Sym(ONE_3) =", f)
assert replay(R.sym_recipe(one3)) == f

###############################################################################
# [4,2,1,1] is EQ_3 seen through M = gamma (2 1; 0 1) with gamma^3 = 1/2.
# gamma is irrational, so from here on values live in the approximate tier.
gamma = nth_root_real(Scalar(1) / 2, 3)
M = [[2 * gamma, gamma], [0, gamma]]
print("gamma ~", gamma)
print("EQ_3 under M:", transform(make_named("EQ_3"), M))
assert transform(make_named("EQ_3"), M) == f

###############################################################################
# The matching EQ_2 on the other side of the bipartition picks up M^T.
g = transform(make_named("EQ_2"), R.transpose(M))
print("EQ_2 under M^T:", g)
g_prime = replay(R.g_prime_recipe(g))
print("normalized:", g_prime)
assert g_prime == from_sym([5, 1, 1])

###############################################################################
# Finally h(x, y) = -1/4 sum_z g'(x,z) g'(z,y) u(z) with u = [1, -25].
out, steps = replay(R.h_recipe(), trace=True)
for k, (step, value) in enumerate(zip(R.h_recipe().steps, steps)):
    print(f"  step {k}: {step.op:<26} arity {value.arity}")
print("h =", out)
assert out == from_sym([0, 5, 6])
