import random
import time

import pytest

from holantcsp import (Node, Signature, SignatureGrid, eval_dup_grid,
                       holant_bruteforce, make_named)
from holantcsp import sampling as smp
from holantcsp.errors import DegreeTooHigh, NotDupGrid
from holantcsp.solver import CASE1, CASE3

import oracles as O

EQ2 = make_named("EQ_2")


def _star():
    f = Signature([0, 0, 0, 0, 1, 1, 1, 1])
    nodes = [Node(0, f)] + [Node(k, Signature([1, 1])) for k in (1, 2, 3)]
    edges = [((0, p), (p + 1, 0)) for p in range(3)]
    return SignatureGrid(nodes, edges)


def _cycle(n, label=EQ2):
    nodes = [Node(k, label) for k in range(n)]
    edges = [((k, 1), ((k + 1) % n, 0)) for k in range(n)]
    return SignatureGrid(nodes, edges)


def test_star_example():
    value, trace = eval_dup_grid(_star())
    assert value == 4
    assert trace.count(CASE3) == 1 and trace.product() == value


def test_cycle_example():
    value, trace = eval_dup_grid(_cycle(4))
    assert value == 2
    assert trace.count(CASE1) == 0 and trace.steps[-1].note == "trace"


def test_binary_cycle_matches_matrix_trace():
    m = Signature([1, 2, 3, 4])
    value, _ = eval_dup_grid(_cycle(3, m))
    # tr(M^3) for M = (1 2; 3 4)
    assert value == 155 == holant_bruteforce(_cycle(3, m))


def test_isolated_scalar_and_self_loop():
    g = SignatureGrid([Node(0, Signature([7])), Node(1, Signature([2, 0, 0, 5]))],
                      [((1, 0), (1, 1))])
    value, trace = eval_dup_grid(g)
    assert value == 49
    assert [s.note for s in trace.steps] == ["isolated", "trace"]


def test_not_dup():
    g = SignatureGrid([Node(0, make_named("EQ_3"))] + [Node(k, Signature([1, 1])) for k in (1, 2, 3)],
                      [((0, p), (p + 1, 0)) for p in range(3)])
    with pytest.raises(NotDupGrid):
        eval_dup_grid(g)


def test_degree_too_high():
    g = SignatureGrid([Node(0, make_named("EQ_4"))],
                      [((0, 0), (0, 1)), ((0, 2), (0, 3))])
    with pytest.raises(DegreeTooHigh):
        eval_dup_grid(g)


def test_random_dup_grids_against_oracle():
    rng = random.Random(41)
    for _ in range(80):
        g = smp.random_dup_grid(rng, 12)
        value, trace = eval_dup_grid(g)
        assert O.q(value) == O.holant(g)
        assert trace.product() == value


def test_invariant_holds_after_every_step():
    # factors emitted so far times the residual Holant is the original value
    rng = random.Random(42)
    for _ in range(30):
        g = smp.random_dup_grid(rng, 10)
        target = holant_bruteforce(g)
        emitted = []

        def watch(step, residual):
            if step.factor is not None:
                emitted.append(step.factor)
            acc = holant_bruteforce(residual)
            for c in emitted:
                acc = acc * c
            assert acc == target

        eval_dup_grid(g, observer=watch)


def test_trace_is_deterministic():
    g = smp.random_dup_grid(random.Random(43), 12)
    assert eval_dup_grid(g)[1] == eval_dup_grid(g)[1]


def test_long_chain():
    g = smp.chain_grid(10_000)
    t0 = time.perf_counter()
    value, _ = eval_dup_grid(g)
    assert value == 10_000
    assert time.perf_counter() - t0 < 5
    assert eval_dup_grid(smp.chain_grid(8))[0] == holant_bruteforce(smp.chain_grid(8))
