"""Random signatures, grids and instances for property checks.

Everything takes an explicit :class:`random.Random` so runs are reproducible
from a seed.  Entries are small Gaussian rationals; keeping them small keeps
exact arithmetic cheap without making coincidences (zero determinants,
proportional rows) too likely.
"""

import random
from fractions import Fraction

from . import signature as S
from .grid import LEFT, RIGHT, CspInstance, Node, SignatureGrid
from .scalar import Scalar


def rng_from(seed):
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def gaussian_rational(rng, span=5, dens=(1, 1, 1, 2, 3), p_real=0.5):
    re = Fraction(rng.randint(-span, span), rng.choice(dens))
    im = 0 if rng.random() < p_real else Fraction(rng.randint(-span, span), rng.choice(dens))
    return Scalar(re, im)


def small_entry(rng, pool=(0, 1, -1, 2, -2, 1j, -1j)):
    """Entry from a tiny set; makes structured coincidences reachable."""
    v = rng.choice(pool)
    return Scalar(int(v.real), int(v.imag)) if isinstance(v, complex) else Scalar(v)


def random_signature(rng, arity, entry=gaussian_rational):
    return S.Signature([entry(rng) for _ in range(1 << arity)])


def random_nonzero(rng, entry=gaussian_rational):
    while True:
        v = entry(rng)
        if not v.is_zero():
            return v


def random_dup_signature(rng, entry=gaussian_rational):
    """``permute(u ⊗ f0, sigma)`` for random ``u``, ``f0`` and ``sigma``."""
    u = random_signature(rng, 1, entry)
    f0 = random_signature(rng, 2, entry)
    return S.permute(S.exmul(u, f0), rng.choice(S.permutations(3)))


def random_non_dup(rng, entry=gaussian_rational, tries=1000):
    from .classify import dup_decompose
    for _ in range(tries):
        f = random_signature(rng, 3, entry)
        if dup_decompose(f) is None:
            return f
    raise RuntimeError("could not sample a signature outside DUP")


def random_matrix(rng, entry=gaussian_rational, nonsingular=True):
    while True:
        M = [[entry(rng), entry(rng)], [entry(rng), entry(rng)]]
        if not nonsingular or not (M[0][0] * M[1][1] - M[0][1] * M[1][0]).is_zero():
            return M


def _pair_ports(rng, ports):
    ports = list(ports)
    rng.shuffle(ports)
    return [(ports[k], ports[k + 1]) for k in range(0, len(ports), 2)]


def random_grid(rng, arities, labels=None, entry=gaussian_rational):
    """Random multigraph with the given node arities (sum must be even).

    ``labels`` optionally fixes some labels by node index.  Self-loops and
    parallel edges occur naturally.
    """
    if sum(arities) % 2:
        raise ValueError("total port count must be even")
    labels = labels or {}
    nodes = [Node(k, labels[k] if k in labels else random_signature(rng, a, entry))
             for k, a in enumerate(arities)]
    ports = [(k, p) for k, a in enumerate(arities) for p in range(a)]
    return SignatureGrid(nodes, _pair_ports(rng, ports))


def random_arities(rng, max_edges, choices=(1, 2, 3), fixed=()):
    """Arity list whose port total is even and at most ``2 * max_edges``."""
    while True:
        n = rng.randint(1, max(1, max_edges))
        ar = list(fixed) + [rng.choice(choices) for _ in range(n)]
        while sum(ar) > 2 * max_edges and len(ar) > len(fixed):
            ar.pop()
        if sum(ar) % 2:
            if sum(ar) + 1 <= 2 * max_edges:
                ar.append(1)
            elif len(ar) > len(fixed):
                ar.pop()
        if sum(ar) % 2 == 0 and sum(ar) <= 2 * max_edges and ar:
            return ar


def random_bipartite_grid(rng, max_edges=10, entry=gaussian_rational, max_arity=3):
    """Left/Right grid with random labels and a random port bijection."""
    m = rng.randint(1, max_edges)

    def split(total):
        ar = []
        while total:
            a = rng.randint(1, min(max_arity, total))
            ar.append(a)
            total -= a
        return ar

    left, right = split(m), split(m)
    nodes, lports, rports = [], [], []
    for a in left:
        nid = len(nodes)
        nodes.append(Node(nid, random_signature(rng, a, entry), LEFT))
        lports += [(nid, p) for p in range(a)]
    for a in right:
        nid = len(nodes)
        nodes.append(Node(nid, random_signature(rng, a, entry), RIGHT))
        rports += [(nid, p) for p in range(a)]
    rng.shuffle(rports)
    return SignatureGrid(nodes, list(zip(lports, rports)))


def random_csp(rng, max_vars=10, max_apps=5, max_arity=3, entry=gaussian_rational):
    """Random instance in which every variable occurs at least once."""
    n = rng.randint(1, max_vars)
    while True:
        apps = []
        for _ in range(rng.randint(1, max_apps)):
            k = rng.randint(1, max_arity)
            apps.append((random_signature(rng, k, entry),
                         tuple(rng.randrange(n) for _ in range(k))))
        used = {x for _, xs in apps for x in xs}
        missing = [x for x in range(n) if x not in used]
        # cover stragglers with unary constraints
        for x in missing:
            apps.append((random_signature(rng, 1, entry), (x,)))
        return CspInstance(n, tuple(apps))


def random_dup_grid(rng, max_edges=12, entry=gaussian_rational):
    """Grid of degree <= 3 whose ternary labels are all in DUP."""
    ar = random_arities(rng, max_edges)
    labels = {k: random_dup_signature(rng, entry) for k, a in enumerate(ar) if a == 3}
    return random_grid(rng, ar, labels, entry)


def chain_grid(length, end=(1, 1), link=(1, 1, 0, 1)):
    """Path of ``length`` nodes: unary ends, binary labels ``link`` in between."""
    if length < 2:
        raise ValueError("a chain needs at least two nodes")
    nodes = [Node(0, S.Signature(end))]
    nodes += [Node(k, S.Signature(link)) for k in range(1, length - 1)]
    nodes.append(Node(length - 1, S.Signature(end)))
    edges = [((0, 0), (1, 0))]
    edges += [((k, 1), (k + 1, 0)) for k in range(1, length - 1)]
    return SignatureGrid(nodes, edges)


def random_rewrite_case(rng, rule, max_edges=10, entry=gaussian_rational):
    """A random grid whose node 0 matches ``rule`` (a rule class from
    :mod:`holantcsp.rewrite`), paired with the anchored rule instance."""
    from . import rewrite as R

    if rule is R.Eq2ToEq3:
        label, inst = S.make_named("EQ_2"), R.Eq2ToEq3(0)
    elif rule is R.LinkedProjection:
        inner = random_signature(rng, rng.randint(2, 4), entry)
        i, j = rng.sample(range(1, inner.arity + 1), 2)
        label, inst = S.linked_project(inner, i, j), R.LinkedProjection(0, inner, i, j)
    elif rule is R.Projection:
        inner = random_signature(rng, rng.randint(1, 3), entry)
        i = rng.randint(1, inner.arity)
        label, inst = S.project(inner, i), R.Projection(0, inner, i)
    elif rule is R.Pinning:
        inner = random_signature(rng, rng.randint(1, 3), entry)
        i, c = rng.randint(1, inner.arity), rng.randint(0, 1)
        label, inst = S.pin(inner, i, c), R.Pinning(0, inner, i, c)
    elif rule is R.Expansion:
        inner = random_signature(rng, rng.randint(0, 2), entry)
        p = rng.randint(0, inner.arity)
        label, inst = S.expand(inner, p), R.Expansion(0, p)
    elif rule is R.ExclusiveMultiplication:
        left = random_signature(rng, rng.randint(0, 2), entry)
        right = random_signature(rng, rng.randint(0, 2), entry)
        label, inst = S.exmul(left, right), R.ExclusiveMultiplication(0, left, right)
    elif rule is R.Permutation:
        inner = random_signature(rng, rng.randint(1, 3), entry)
        sigma = tuple(rng.sample(range(1, inner.arity + 1), inner.arity))
        label, inst = S.permute(inner, sigma), R.Permutation(0, inner, sigma)
    else:
        raise ValueError(f"unknown rule {rule!r}")
    ar = random_arities(rng, max_edges, fixed=(label.arity,))
    return random_grid(rng, ar, {0: label}, entry), inst


__all__ = [
    "random_rewrite_case",
    "rng_from", "gaussian_rational", "small_entry", "random_signature",
    "random_nonzero", "random_dup_signature", "random_non_dup", "random_matrix",
    "random_grid", "random_arities", "random_bipartite_grid", "random_csp",
    "random_dup_grid", "chain_grid",
]
