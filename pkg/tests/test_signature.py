import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from holantcsp import I, Signature, SymSignature, exmul, expand, from_sym
from holantcsp import is_degenerate, is_symmetric, linked_project, make_named
from holantcsp import permute, pin, project, scale, to_sym, transform
from holantcsp import sampling as smp
from holantcsp.errors import (ArityMismatch, IndexOutOfRange, IndicesEqual,
                              NotSymmetric, UnknownName, ZeroScale)
from holantcsp.signature import compose, inverse, permutations, tensor_all, unary

import oracles as O

F8 = Signature([1, 0, -1, 0, I, -2, -I, 2])


def test_named():
    assert make_named("ONE_3").values == Signature([1, 1, 1, 0, 1, 0, 0, 0]).values
    assert make_named("EQ_2") == Signature([1, 0, 0, 1])
    assert make_named("Implies") == Signature([1, 1, 0, 1])
    assert make_named("EQ_1") == Signature([1, 1])
    with pytest.raises(UnknownName):
        make_named("XOR")
    with pytest.raises(UnknownName):
        make_named("EQ_0")


def test_table_length_must_be_power_of_two():
    with pytest.raises(ArityMismatch):
        Signature([1, 2, 3])


def test_permute_examples():
    assert permute(F8, (1, 2, 3)) == F8
    assert permute(F8, (2, 1, 3)) == Signature([1, 0, I, -2, -1, 0, -I, 2])
    assert permute(Signature([1, 2, 3, 4]), (2, 1)) == Signature([1, 3, 2, 4])


def test_permute_composition_law():
    rng = random.Random(3)
    for _ in range(50):
        f = smp.random_signature(rng, 3)
        s, t = rng.choice(permutations(3)), rng.choice(permutations(3))
        assert permute(permute(f, s), t) == permute(f, compose(t, s))
        assert permute(permute(f, s), inverse(s)) == f


def test_permute_matches_oracle():
    rng = random.Random(4)
    for _ in range(30):
        f = smp.random_signature(rng, 3)
        for s in permutations(3):
            assert O.same(permute(f, s), O.permute(O.qs(f.values), s))


def test_pin_examples():
    assert pin(make_named("OR"), 1, 0) == Signature([0, 1])
    assert pin(make_named("EQ_3"), 2, 1) == Signature([0, 0, 0, 1])
    assert pin(make_named("ONE_3"), 1, 1) == Signature([1, 0, 0, 0])
    with pytest.raises(IndexOutOfRange):
        pin(make_named("OR"), 3, 0)
    with pytest.raises(ValueError):
        pin(make_named("OR"), 1, 2)


def test_project_examples():
    assert project(make_named("EQ_2"), 2) == Signature([1, 1])
    assert project(make_named("ONE_3"), 3) == Signature([2, 1, 1, 0])


def test_linked_project_examples():
    assert linked_project(make_named("EQ_3"), 1, 2) == Signature([1, 1])
    assert linked_project(make_named("EQ_2"), 1, 2) == Signature([2])
    assert linked_project(Signature([3, 5, 7, 11]), 1, 2).values[0] == 14
    # index order does not matter
    assert linked_project(F8, 3, 1) == linked_project(F8, 1, 3)
    with pytest.raises(IndicesEqual):
        linked_project(F8, 2, 2)
    with pytest.raises(IndexOutOfRange):
        linked_project(Signature([1, 2]), 1, 2)


def test_expand_examples():
    assert expand(Signature([1, 2]), 0) == Signature([1, 2, 1, 2])
    assert expand(Signature([1, 2]), 1) == Signature([1, 1, 2, 2])
    assert expand(Signature([5]), 0) == Signature([5, 5])
    with pytest.raises(IndexOutOfRange):
        expand(Signature([1, 2]), 2)


def test_exmul_examples():
    assert exmul(Signature([1, 2]), Signature([1, 1])) == Signature([1, 1, 2, 2])
    assert exmul(Signature([1, 0]), Signature([0, 1])) == Signature([0, 1, 0, 0])
    assert exmul(Signature([2]), make_named("OR")) == scale(2, make_named("OR"))


def test_scale():
    f = smp.random_signature(random.Random(1), 3)
    assert scale(1, f) == f
    assert scale(2, from_sym([1, 0, 1])) == from_sym([2, 0, 2])
    with pytest.raises(ZeroScale):
        scale(0, f)


def test_transform_identity_and_oracle():
    rng = random.Random(7)
    for _ in range(20):
        f = smp.random_signature(rng, 3)
        M = smp.random_matrix(rng)
        assert transform(f, [[1, 0], [0, 1]]) == f
        assert O.same(transform(f, M), O.transform(O.qs(f.values), [O.qs(r) for r in M]))


def test_transform_golden_values():
    from holantcsp.scalar import Scalar, nth_root_real
    gamma = nth_root_real(Scalar(1) / 2, 3)
    M = [[2 * gamma, gamma], [0, gamma]]
    assert to_sym(transform(make_named("EQ_3"), M)).weights == (4, 2, 1, 1)
    Mt = [[2 * gamma, 0], [gamma, gamma]]
    assert transform(make_named("EQ_2"), Mt) == scale(gamma * gamma, Signature([5, 1, 1, 1]))


def test_symmetric_forms():
    assert to_sym(make_named("EQ_3")).weights == (1, 0, 0, 1)
    assert not is_symmetric(make_named("Implies"))
    with pytest.raises(NotSymmetric):
        to_sym(make_named("Implies"))
    assert to_sym(Signature([7, 8, 8, 9])).weights == (7, 8, 9)
    assert isinstance(from_sym([1, 2]), SymSignature)
    assert from_sym([1, 2, 3]) == Signature([1, 2, 2, 3])


def test_degeneracy():
    factors = is_degenerate(Signature([1, 2, 3, 6]))
    assert factors is not None and tensor_all(factors) == Signature([1, 2, 3, 6])
    assert [u.values for u in factors] == [unary(1, 3).values, unary(1, 2).values]
    assert is_degenerate(make_named("EQ_2")) is None
    zero = is_degenerate(Signature([0] * 8))
    assert zero is not None and len(zero) == 3


@given(st.lists(st.sampled_from([0, 1, -1, 2]), min_size=6, max_size=6))
def test_products_of_unaries_are_degenerate(entries):
    u = [unary(entries[k], entries[k + 1]) for k in range(0, 6, 2)]
    f = tensor_all(u)
    factors = is_degenerate(f)
    assert factors is not None and tensor_all(factors) == f


def test_call_reads_one_entry():
    assert F8(1, 0, 0) == I
    assert F8(0, 1, 1) == 0
