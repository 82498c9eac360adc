"""Exact Holant and #CSP toolkit for Boolean ternary signatures.

Submodules:

- :mod:`~holantcsp.scalar`: exact Gaussian rationals and an approximate tier
- :mod:`~holantcsp.signature`: value tables and the operations on them
- :mod:`~holantcsp.symmetrize`: the two symmetrization schemes and witness search
- :mod:`~holantcsp.classify`: family membership and the classification verdict
- :mod:`~holantcsp.grid`: signature grids, #CSP instances, brute-force evaluation
- :mod:`~holantcsp.rewrite`: gadget recipes, grid rewrites, holographic transforms
- :mod:`~holantcsp.solver`: polynomial-time evaluation of DUP grids
- :mod:`~holantcsp.cli`: the ``holantcsp`` command
"""

from .classify import (HARD, TRACTABLE, UNRESOLVED, BindingCoefficients,
                       ClassificationVerdict, DupFactorization, FailingSigma,
                       MembershipSummary, Sig1Witness, binding_coefficients,
                       check_verdict, dup_decompose, in_sig1_set, sig_membership,
                       verdict)
from .errors import *  # noqa: F401,F403
from .grid import (LEFT, RIGHT, CspInstance, Node, SignatureGrid, csp_direct_sum,
                   csp_to_grid, degree, holant_bruteforce)
from .rewrite import (GadgetRecipe, RecipeStep, eq2_from_eq3, h_recipe,
                      holographic_grid, replay, rewrite_grid, sym_recipe,
                      syml_recipe)
from .scalar import I, ONE, TAU, ZERO, Scalar, as_scalar, nth_root_real
from .signature import (Signature, SymSignature, as_signature, exmul, expand,
                        from_sym, is_degenerate, is_symmetric, linked_project,
                        make_named, permute, pin, project, scale, to_sym,
                        transform)
from .solver import ReductionTrace, eval_dup_grid
from .symmetrize import (EpsPolynomials, SymLTriple, find_binary_witness, sym,
                         sym_closed, syml, syml_closed, syml_polynomials)

__version__ = "0.1.0"
