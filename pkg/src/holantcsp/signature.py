"""Boolean-domain signatures and the operations that build new ones.

A signature of arity ``k`` is a table of ``2**k`` scalars in lexicographic
order of ``(x1, ..., xk)`` with ``x1`` the most significant bit, so a binary
signature reads ``(f(00), f(01), f(10), f(11))``.

Variable positions are 1-based everywhere in this module, matching the
``x1 ... xk`` naming; a permutation ``sigma`` is written as the tuple of its
images ``(sigma(1), ..., sigma(k))``, and

    permute(f, sigma)(x1, ..., xk) = f(x_sigma(1), ..., x_sigma(k)).

Under this convention ``permute(permute(f, s), t) == permute(f, t∘s)``
where ``(t∘s)(j) = t(s(j))``.
"""

from itertools import permutations as _perms

from .errors import (ArityMismatch, IndexOutOfRange, IndicesEqual, NotSymmetric,
                     ShapeMismatch, UnknownName, ZeroScale)
from .scalar import ONE, ZERO, Scalar, as_scalar

MAX_ARITY = 16


def _popcount(n):
    return bin(n).count("1")


class Signature:
    """Complex-valued function on ``{0,1}^k`` stored as its value table."""

    __slots__ = ("arity", "values")

    def __init__(self, values):
        vals = tuple(as_scalar(v) for v in values)
        n = len(vals)
        if n == 0 or n & (n - 1):
            raise ArityMismatch(f"table length {n} is not a power of two")
        k = n.bit_length() - 1
        if k > MAX_ARITY:
            raise ArityMismatch(f"arity {k} exceeds the cap of {MAX_ARITY}")
        self.arity = k
        self.values = vals

    @classmethod
    def _raw(cls, values, arity):
        s = object.__new__(Signature)
        s.arity = arity
        s.values = tuple(values)
        return s

    def __call__(self, *bits):
        if len(bits) != self.arity:
            raise ArityMismatch(f"expected {self.arity} inputs, got {len(bits)}")
        idx = 0
        for b in bits:
            idx = (idx << 1) | (1 if b else 0)
        return self.values[idx]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, idx):
        return self.values[idx]

    def __eq__(self, other):
        if not isinstance(other, Signature):
            return NotImplemented
        return self.arity == other.arity and all(
            a == b for a, b in zip(self.values, other.values))

    def __hash__(self):
        return hash((self.arity, self.values))

    @property
    def is_exact(self):
        return all(v.is_exact for v in self.values)

    def is_zero(self):
        return all(v.is_zero() for v in self.values)

    def __repr__(self):
        return f"Signature([{', '.join(str(v) for v in self.values)}])"


class SymSignature(Signature):
    """Symmetric signature given by its weight profile ``[f0, ..., fk]``.

    It is a full :class:`Signature` (the table is expanded on construction),
    so every operation accepts it; ``weights`` keeps the compact form.
    """

    __slots__ = ("weights",)

    def __init__(self, weights):
        ws = tuple(as_scalar(w) for w in weights)
        if not ws:
            raise ArityMismatch("a symmetric signature needs at least one weight")
        k = len(ws) - 1
        if k > MAX_ARITY:
            raise ArityMismatch(f"arity {k} exceeds the cap of {MAX_ARITY}")
        self.weights = ws
        self.arity = k
        self.values = tuple(ws[_popcount(i)] for i in range(1 << k))

    def __repr__(self):
        return f"SymSignature([{', '.join(str(w) for w in self.weights)}])"


def unary(a, b):
    return Signature([a, b])


def scalar_signature(value):
    """Arity-0 signature: the value of a fully contracted gadget."""
    return Signature([value])


def make_named(name):
    """Standard signatures by name: ``EQ_k``, ``ONE_3``, ``OR``, ``NAND``,
    ``Implies`` and ``AllOnes_1``."""
    if name.startswith("EQ_"):
        try:
            k = int(name[3:])
        except ValueError:
            raise UnknownName(name) from None
        if k < 1:
            raise UnknownName(f"{name}: EQ_k needs k >= 1")
        return SymSignature([1] + [0] * (k - 1) + [1])
    table = {
        "ONE_3": lambda: SymSignature([1, 1, 0, 0]),
        "OR": lambda: SymSignature([0, 1, 1]),
        "NAND": lambda: SymSignature([1, 1, 0]),
        "Implies": lambda: Signature([1, 1, 0, 1]),
        "AllOnes_1": lambda: SymSignature([1, 1]),
    }
    if name not in table:
        raise UnknownName(name)
    return table[name]()


def _check_position(f, i, lo=1):
    if not isinstance(i, int) or i < lo or i > f.arity:
        raise IndexOutOfRange(f"variable index {i} outside [{lo}, {f.arity}]")


def _check_perm(sigma, k):
    sigma = tuple(sigma)
    if len(sigma) != k:
        raise ArityMismatch(f"permutation of length {len(sigma)} for arity {k}")
    if sorted(sigma) != list(range(1, k + 1)):
        raise ValueError(f"{sigma} is not a permutation of 1..{k}")
    return sigma


def permutations(k):
    """All permutations of ``1..k`` in lexicographic order."""
    return list(_perms(range(1, k + 1)))


def compose(tau, sigma):
    """``tau∘sigma``: the permutation ``j -> tau(sigma(j))``."""
    return tuple(tau[s - 1] for s in sigma)


def inverse(sigma):
    inv = [0] * len(sigma)
    for j, s in enumerate(sigma, start=1):
        inv[s - 1] = j
    return tuple(inv)


def permute(f, sigma):
    """``g(x1..xk) = f(x_sigma(1), ..., x_sigma(k))``."""
    k = f.arity
    sigma = _check_perm(sigma, k)
    shifts = [k - s for s in sigma]  # bit of x_sigma(j) inside a g-index
    vals = f.values
    out = []
    for gi in range(1 << k):
        fi = 0
        for sh in shifts:
            fi = (fi << 1) | ((gi >> sh) & 1)
        out.append(vals[fi])
    return Signature._raw(out, k)


def swap(f, i, j):
    """Exchange variables ``x_i`` and ``x_j``."""
    sigma = list(range(1, f.arity + 1))
    _check_position(f, i)
    _check_position(f, j)
    sigma[i - 1], sigma[j - 1] = sigma[j - 1], sigma[i - 1]
    return permute(f, sigma)


def pin(f, i, c):
    """Restrict ``x_i`` to the bit ``c``."""
    _check_position(f, i)
    if c not in (0, 1):
        raise ValueError(f"pinning bit must be 0 or 1, got {c!r}")
    k = f.arity
    bit = 1 << (k - i)
    return Signature._raw([v for idx, v in enumerate(f.values)
                           if bool(idx & bit) == bool(c)], k - 1)


def project(f, i):
    """Sum out ``x_i``."""
    f0, f1 = pin(f, i, 0), pin(f, i, 1)
    return Signature._raw([a + b for a, b in zip(f0.values, f1.values)], f.arity - 1)


def linked_project(f, i, j):
    """Identify ``x_i`` with ``x_j`` and sum the shared variable out."""
    if f.arity < 2:
        raise IndexOutOfRange("linked projection needs arity >= 2")
    _check_position(f, i)
    _check_position(f, j)
    if i == j:
        raise IndicesEqual(f"linked projection on x{i} with itself")
    i, j = min(i, j), max(i, j)
    k = f.arity
    bi, bj = 1 << (k - i), 1 << (k - j)
    rest = [p for p in range(1, k + 1) if p not in (i, j)]
    out = []
    for r in range(1 << (k - 2)):
        base = 0
        for n, p in enumerate(rest):
            if (r >> (k - 3 - n)) & 1:
                base |= 1 << (k - p)
        out.append(f.values[base] + f.values[base | bi | bj])
    return Signature._raw(out, k - 2)


def expand(f, i):
    """Insert a free variable right after position ``i`` (``0 <= i <= k``)."""
    k = f.arity
    if not isinstance(i, int) or i < 0 or i > k:
        raise IndexOutOfRange(f"expansion position {i} outside [0, {k}]")
    low = k - i  # bits below the new variable
    mask = (1 << low) - 1
    out = []
    for idx in range(1 << (k + 1)):
        out.append(f.values[((idx >> (low + 1)) << low) | (idx & mask)])
    return Signature._raw(out, k + 1)


def exmul(f, g):
    """Tensor product on disjoint variables, ``f``'s variables first."""
    return Signature._raw([a * b for a in f.values for b in g.values], f.arity + g.arity)


def scale(lam, f):
    lam = as_scalar(lam)
    if lam.is_zero():
        raise ZeroScale("normalization by zero")
    return Signature._raw([lam * v for v in f.values], f.arity)


def _matrix(A):
    try:
        rows = [list(r) for r in A]
    except TypeError:
        raise ShapeMismatch("matrix must be a nested 2x2 sequence") from None
    if len(rows) != 2 or any(len(r) != 2 for r in rows):
        raise ShapeMismatch("matrix must be 2x2")
    return [[as_scalar(x) for x in r] for r in rows]


def transform(f, A):
    """Row vector ``f`` times ``A^{⊗k}``: ``h(y) = Σ_x f(x) Π_i A[x_i][y_i]``."""
    A = _matrix(A)
    k = f.arity
    vals = list(f.values)
    for p in range(k):
        bit = 1 << (k - 1 - p)
        new = [None] * len(vals)
        for idx in range(len(vals)):
            if idx & bit:
                continue
            v0, v1 = vals[idx], vals[idx | bit]
            new[idx] = v0 * A[0][0] + v1 * A[1][0]
            new[idx | bit] = v0 * A[0][1] + v1 * A[1][1]
        vals = new
    return Signature._raw(vals, k)


def is_symmetric(f):
    by_weight = {}
    for idx, v in enumerate(f.values):
        w = _popcount(idx)
        if w in by_weight:
            if by_weight[w] != v:
                return False
        else:
            by_weight[w] = v
    return True


def to_sym(f):
    if isinstance(f, SymSignature):
        return f
    if not is_symmetric(f):
        raise NotSymmetric(f"{f!r} depends on more than the Hamming weight")
    return SymSignature([f.values[(1 << w) - 1] for w in range(f.arity + 1)])


def from_sym(weights):
    return SymSignature(weights)


def _unfold(f, i):
    """Rows of the 2 x 2^(k-1) matrix obtained by splitting off ``x_i``."""
    return pin(f, i, 0).values, pin(f, i, 1).values


def nondegeneracy_witness(f):
    """A nonzero 2x2 minor certifying that ``f`` is not a product of unaries.

    Returns ``(i, (s, t))``: splitting off ``x_i``, columns ``s`` and ``t`` of
    the 2 x 2^(k-1) unfolding have a nonzero determinant.  ``None`` when every
    single-variable unfolding has rank at most one, i.e. ``f`` is degenerate.
    """
    for i in range(1, f.arity + 1):
        r0, r1 = _unfold(f, i)
        piv = next((t for t in range(len(r0)) if not (r0[t].is_zero() and r1[t].is_zero())), None)
        if piv is None:
            continue
        for t in range(len(r0)):
            if t != piv and not (r0[piv] * r1[t] - r1[piv] * r0[t]).is_zero():
                return i, (min(piv, t), max(piv, t))
    return None


def is_degenerate(f):
    """Unary factors ``[u1, ..., uk]`` with ``f = u1 ⊗ ... ⊗ uk``, or ``None``.

    The all-zero signature is degenerate with all-zero factors.  Factors are
    found by splitting off one variable at a time: the unfolding along the
    first variable must have rank <= 1, giving ``f = u ⊗ rest``.
    """
    if f.arity == 0:
        return []
    if f.is_zero():
        return [Signature._raw([ZERO, ZERO], 1) for _ in range(f.arity)]
    factors = []
    cur = f
    while cur.arity > 1:
        half = len(cur.values) // 2
        r0, r1 = cur.values[:half], cur.values[half:]
        rows = (r0, r1)
        r = 0 if any(not v.is_zero() for v in r0) else 1
        j = next(t for t in range(half) if not rows[r][t].is_zero())
        u = (r0[j], r1[j])
        rest = [v / rows[r][j] for v in rows[r]]
        for s in (0, 1):
            for t in range(half):
                if rows[s][t] != u[s] * rest[t]:
                    return None
        factors.append(Signature._raw(u, 1))
        cur = Signature._raw(rest, cur.arity - 1)
    factors.append(cur)
    return factors


def tensor_all(factors):
    out = Signature._raw([ONE], 0)
    for u in factors:
        out = exmul(out, u)
    return out


def ternary_sym_nondegenerate(g):
    """Rank test for symmetric ternary ``[g0,g1,g2,g3]``: rank of
    ``((g0 g1 g2), (g1 g2 g3))`` equals two."""
    w = to_sym(g).weights
    if len(w) != 4:
        raise ArityMismatch("expected a ternary symmetric signature")
    minors = (w[0] * w[2] - w[1] * w[1],
              w[0] * w[3] - w[1] * w[2],
              w[1] * w[3] - w[2] * w[2])
    return any(not m.is_zero() for m in minors)


def as_signature(x):
    """Accept a Signature, a table of values, or a standard name."""
    if isinstance(x, Signature):
        return x
    if isinstance(x, str):
        return make_named(x)
    return Signature(x)


__all__ = [
    "Signature", "SymSignature", "MAX_ARITY", "unary", "scalar_signature",
    "make_named", "permutations", "compose", "inverse", "permute", "swap",
    "pin", "project", "linked_project", "expand", "exmul", "scale", "transform",
    "is_symmetric", "to_sym", "from_sym", "is_degenerate",
    "nondegeneracy_witness", "tensor_all", "ternary_sym_nondegenerate",
    "as_signature", "Scalar",
]
