"""
Classifying ternary signatures
==============================

A handful of signatures, one per branch of the verdict, followed by a quick
census over random small-entry tables.
"""

import random
from collections import Counter

from holantcsp import (I, Signature, dup_decompose, from_sym, make_named,
                       sig_membership, verdict)
from holantcsp import sampling as smp
from holantcsp.errors import WitnessNotFound
from holantcsp.signature import unary
from holantcsp.symmetrize import find_binary_witness, syml

cases = {
    "ternary OR": from_sym([0, 1, 1, 1]),
    "EQ_3": make_named("EQ_3"),
    "half zero": Signature([0, 0, 0, 0, 1, 2, 3, 4]),
    "pivot on x2": Signature([1, 0, -1, 0, I, -2, -I, 2]),
    "Sym kills it": from_sym([3, 5, -3, -5]),
    "SIG1 sample": Signature([0, -1, 0, 1, -1, 0, -1, 0]),
}

for name, f in cases.items():
    v = verdict(f)
    print(f"{name:<14} {v.verdict:<11} {type(v.evidence).__name__}")

###############################################################################
# The membership record keeps Sym(f_sigma) for every sigma.
m = sig_membership(cases["ternary OR"])
for r in m.records[:2]:
    print(r.sigma, r.sym, "degenerate" if r.degenerate else "non-degenerate")

###############################################################################
# DUP factorizations name the pivot variable.
d = dup_decompose(cases["pivot on x2"])
print("pivot x%d, u=%s, f0=%s" % (d.pivot(), d.u, d.f0))

###############################################################################
# Random census.  Entries from {0, +-1, +-i} hit every branch.
rng = random.Random(2024)
tally = Counter()
for _ in range(3000):
    f = smp.random_signature(rng, 3, lambda r: smp.small_entry(r, (0, 1, -1, 1j, -1j)))
    tally[verdict(f).verdict] += 1
print(dict(tally))

###############################################################################
# Most SIG1 tables outside DUP have a binary witness, but not all.  For
# these two, every capped SymL comes out proportional to [1, 0, 1] whatever
# sigma and cap are used, so the search has nothing to find.
for f in (Signature([0, 1, -1, 0, -1, 0, 0, -1]), Signature([1, 1, -1, 1, 1, -1, 1, 1])):
    print(f, verdict(f).verdict, "in SIG1:", sig_membership(f).in_sig1)
    try:
        find_binary_witness(f)
    except WitnessNotFound as exc:
        print("  ", exc)
    print("   SymL with cap [2, 3]:", syml(f, unary(2, 3)))
