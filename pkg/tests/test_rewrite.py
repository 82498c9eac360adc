import random

import pytest

from holantcsp import (LEFT, RIGHT, Node, Signature, SignatureGrid, from_sym,
                       holant_bruteforce, holographic_grid, make_named, replay,
                       sym, syml, transform)
from holantcsp import rewrite as R
from holantcsp import sampling as smp
from holantcsp.errors import (MalformedRecipe, NotBipartite, PatternMismatch,
                              SingularMatrix)
from holantcsp.scalar import Scalar, nth_root_real
from holantcsp.signature import exmul, linked_project, unary

import oracles as O

EQ2, EQ3, ONE3 = make_named("EQ_2"), make_named("EQ_3"), make_named("ONE_3")


def test_builtin_recipes():
    assert replay(R.sym_recipe(ONE3)) == sym(ONE3)
    assert replay(R.syml_recipe(ONE3, unary(1, 1))) == syml(ONE3, unary(1, 1))
    assert replay(R.h_recipe()) == from_sym([0, 5, 6])
    assert replay(R.eq2_from_eq3()) == EQ2


def test_recipes_against_oracle():
    rng = random.Random(31)
    for _ in range(30):
        f, u = smp.random_signature(rng, 3), smp.random_signature(rng, 1)
        ref = O.sym(O.qs(f.values))
        assert O.same(replay(R.sym_recipe(f)), ref)
        ref = O.syml(O.qs(f.values), O.qs(u.values))
        assert O.same(replay(R.syml_recipe(f, u)), ref)


def test_replay_trace():
    out, values = replay(R.eq2_from_eq3(), trace=True)
    assert values[-1] is out and values[0].arity == 4


def test_g_prime_recipe():
    gamma = nth_root_real(Scalar(1) / 2, 3)
    g = transform(EQ2, [[2 * gamma, 0], [gamma, gamma]])
    assert replay(R.g_prime_recipe(g)) == from_sym([5, 1, 1])


@pytest.mark.parametrize("steps,generators", [
    ((), {"f": EQ2}),
    ((R.RecipeStep("frobnicate", ("f",)),), {"f": EQ2}),
    ((R.RecipeStep("projection", ("f",)),), {"f": EQ2}),
    ((R.RecipeStep("projection", ("g",), {"i": 1}),), {"f": EQ2}),
    ((R.RecipeStep("projection", (0,), {"i": 1}),), {"f": EQ2}),
    ((R.RecipeStep("projection", ("f",), {"i": 5}),), {"f": EQ2}),
    ((R.RecipeStep("exmul", ("f",)),), {"f": EQ2}),
])
def test_malformed_recipes(steps, generators):
    with pytest.raises(MalformedRecipe):
        replay(R.GadgetRecipe(generators, steps))


def test_malformed_recipe_reports_step():
    rec = R.GadgetRecipe({"f": EQ2}, (R.RecipeStep("pin", ("f",), {"i": 1, "c": 0}),
                                      R.RecipeStep("pin", (0,), {"i": 3, "c": 0})))
    with pytest.raises(MalformedRecipe) as info:
        replay(rec)
    assert info.value.step == 1


def _host(label):
    """Node 0 carries ``label``; every port hangs off its own unary node."""
    nodes = [Node(0, label)]
    edges = []
    for p in range(label.arity):
        nodes.append(Node(p + 1, Signature([1, p + 2])))
        edges.append(((0, p), (p + 1, 0)))
    return SignatureGrid(nodes, edges)


def test_eq2_to_eq3():
    g = SignatureGrid([Node(0, EQ2, LEFT), Node(1, from_sym([1, 2, 3]), RIGHT)],
                      [((0, 0), (1, 0)), ((0, 1), (1, 1))])
    h = R.rewrite_grid(g, R.Eq2ToEq3(0))
    assert h.node(0).sig == EQ3 and h.is_bipartite()
    assert holant_bruteforce(h) == holant_bruteforce(g) == 4


def test_linked_projection_makes_self_loop():
    inner = smp.random_signature(random.Random(1), 3)
    g = _host(linked_project(inner, 1, 3))
    h = R.rewrite_grid(g, R.LinkedProjection(0, inner, 1, 3))
    assert ((0, 0), (0, 2)) in h.edges
    assert holant_bruteforce(h) == holant_bruteforce(g)


def test_exclusive_multiplication_splits():
    a, b = Signature([1, 2]), Signature([3, 4, 5, 6])
    g = _host(exmul(a, b))
    h = R.rewrite_grid(g, R.ExclusiveMultiplication(0, a, b))
    assert len(h.nodes) == len(g.nodes) + 1
    assert holant_bruteforce(h) == holant_bruteforce(g)


def test_pattern_mismatch():
    g = _host(EQ3)
    for rule in (R.Eq2ToEq3(0), R.Projection(0, EQ3, 1), R.Pinning(0, EQ3, 1, 0),
                 R.Expansion(0, 0), R.Permutation(0, ONE3, (2, 1, 3)),
                 R.ExclusiveMultiplication(0, EQ2, unary(1, 0))):
        with pytest.raises(PatternMismatch):
            R.rewrite_grid(g, rule)


def test_every_rule_preserves_holant():
    rng = random.Random(32)
    for rule in R.RULES:
        for _ in range(25):
            g, inst = smp.random_rewrite_case(rng, rule, 10)
            h = R.rewrite_grid(g, inst)
            assert holant_bruteforce(h) == holant_bruteforce(g), inst


def test_holographic_identity():
    g = smp.random_bipartite_grid(random.Random(3), 8)
    assert holographic_grid(g, [[1, 0], [0, 1]]) == g


def test_holographic_golden_pair():
    # [4,2,1,1] = EQ_3 under M = gamma (2 1; 0 1); transforming with
    # N = (M^-1)^T turns the Right labels back into EQ_3 and the Left EQ_2
    # into gamma^2 (5,1,1,1).
    gamma = nth_root_real(Scalar(1) / 2, 3)
    M = [[2 * gamma, gamma], [0, gamma]]
    f = from_sym([4, 2, 1, 1])
    nodes = [Node(0, f, RIGHT), Node(1, EQ2, LEFT), Node(2, f, RIGHT)]
    edges = [((0, 0), (1, 0)), ((1, 1), (2, 0))]
    for k, (nid, port) in enumerate([(0, 1), (0, 2), (2, 1), (2, 2)]):
        nodes.append(Node(10 + k, unary(1, k), LEFT))
        edges.append(((nid, port), (10 + k, 0)))
    g = SignatureGrid(nodes, edges)
    h = holographic_grid(g, R.transpose(R._inverse2(M)))
    assert h.node(0).sig == EQ3 and h.node(2).sig == EQ3
    assert h.node(1).sig == Signature([5 * gamma ** 2, gamma ** 2, gamma ** 2, gamma ** 2])
    assert holant_bruteforce(h) == holant_bruteforce(g)


def test_holographic_errors():
    g = smp.random_bipartite_grid(random.Random(4), 6)
    with pytest.raises(SingularMatrix):
        holographic_grid(g, [[1, 2], [2, 4]])
    loop = SignatureGrid([Node(0, EQ2)], [((0, 0), (0, 1))])
    with pytest.raises(NotBipartite):
        holographic_grid(loop, [[1, 0], [0, 1]])


def test_holographic_hadamard_preserves_value():
    rng = random.Random(5)
    for _ in range(20):
        g = smp.random_bipartite_grid(rng, 6)
        assert holant_bruteforce(holographic_grid(g, [[1, 1], [1, -1]])) == holant_bruteforce(g)


def test_holographic_composition():
    rng = random.Random(6)
    g = smp.random_bipartite_grid(rng, 6)
    M, N = smp.random_matrix(rng), smp.random_matrix(rng)
    assert holographic_grid(holographic_grid(g, M), N) == holographic_grid(g, R.matmul(N, M))
