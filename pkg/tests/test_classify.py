import random

from holantcsp import (HARD, TRACTABLE, UNRESOLVED, DupFactorization,
                       FailingSigma, I, MembershipSummary, Sig1Witness,
                       Signature, binding_coefficients, check_verdict,
                       dup_decompose, from_sym, in_sig1_set, make_named,
                       permute, scale, sig_membership, verdict)
from holantcsp import sampling as smp
from holantcsp.classify import in_dup
from holantcsp.signature import permutations


def test_sig1_set_examples():
    assert in_sig1_set(from_sym([2, 5, -2, -5])) == (2, 5)
    assert in_sig1_set(from_sym([1, 0, 0, 1])) is None
    assert in_sig1_set(from_sym([0, 0, 0, 0])) == (0, 0)


def test_binding_coefficients_examples():
    eq3 = from_sym([1, 0, 0, 1])
    bc = binding_coefficients(eq3)
    assert (bc.alpha, bc.beta) == (0, 1) and bc.holds_for(eq3)
    assert binding_coefficients(from_sym([1, 2, -1, -2])) is None
    bc = binding_coefficients(from_sym([3, 7, 3, 7]))
    assert (bc.alpha, bc.beta) == (1, 0)


def test_binding_coefficients_random_symmetric():
    rng = random.Random(8)
    for _ in range(200):
        g = from_sym([smp.small_entry(rng) for _ in range(4)])
        bc = binding_coefficients(g)
        if bc is not None:
            assert not (bc.alpha.is_zero() and bc.beta.is_zero())
            assert bc.holds_for(g)


def test_dup_examples():
    f = Signature([1, 0, -1, 0, I, -2, -I, 2])
    d = dup_decompose(f)
    assert d is not None and d.recompose() == permute(f, d.sigma)
    assert d.pivot() == 2
    assert d.u == Signature([1, -1]) and d.f0 == Signature([1, 0, I, -2])

    d = dup_decompose(Signature([0, 0, 0, 0, 1, 2, 3, 4]))
    assert d.u == Signature([0, 1]) and d.f0 == Signature([1, 2, 3, 4])
    assert dup_decompose(make_named("EQ_3")) is None


def test_dup_random_constructions_detected():
    rng = random.Random(9)
    for _ in range(200):
        f = smp.random_dup_signature(rng)
        d = dup_decompose(f)
        assert d is not None and d.recompose() == permute(f, d.sigma)
        assert in_dup(permute(f, rng.choice(permutations(3))))


def test_membership_examples():
    m = sig_membership(from_sym([0, 1, 1, 1]))
    assert not m.in_sig
    assert all(r.sym.weights == (4, 5, 6, 8) and not r.degenerate for r in m.records)

    m = sig_membership(make_named("EQ_3"))
    assert m.in_sig and m.in_sig2 and not m.in_sig1 and not m.in_sig0
    assert (m.records[0].sig2.alpha, m.records[0].sig2.beta) == (0, 1)

    m = sig_membership(from_sym([3, 5, -3, -5]))
    assert m.in_sig0 and m.in_sig


def test_verdict_examples():
    v = verdict(Signature([0, 0, 0, 0, 1, 2, 3, 4]))
    assert v.verdict == TRACTABLE and isinstance(v.evidence, DupFactorization)

    v = verdict(from_sym([0, 1, 1, 1]))
    assert v.verdict == HARD and isinstance(v.evidence, FailingSigma)
    assert v.evidence.sym.weights == (4, 5, 6, 8)

    v = verdict(make_named("EQ_3"))
    assert v.verdict == UNRESOLVED and isinstance(v.evidence, MembershipSummary)


def test_verdict_sig1_evidence():
    f = Signature([0, -1, 0, 1, -1, 0, -1, 0])
    v = verdict(f)
    assert v.verdict == HARD and isinstance(v.evidence, Sig1Witness)
    w = v.evidence
    sym = sig_membership(f).records[permutations(3).index(w.sigma)].sym
    assert sym.weights == (w.a, w.b, -w.a, -w.b)
    assert not (w.a * w.a + w.b * w.b).is_zero()
    assert check_verdict(f, v)


def test_half_zero_tables_are_tractable():
    rng = random.Random(12)
    for _ in range(30):
        tail = [smp.gaussian_rational(rng) for _ in range(4)]
        assert verdict(Signature([0] * 4 + tail)).verdict == TRACTABLE
        assert verdict(Signature(tail + [0] * 4)).verdict == TRACTABLE


def test_verdict_invariance():
    rng = random.Random(13)
    for _ in range(60):
        f = smp.random_signature(rng, 3, smp.small_entry)
        v = verdict(f)
        assert check_verdict(f, v)
        for s in permutations(3):
            assert verdict(scale(smp.random_nonzero(rng), permute(f, s))).verdict == v.verdict
