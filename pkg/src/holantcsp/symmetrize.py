"""Symmetrizing an arbitrary ternary signature.

Two schemes are implemented, each twice: once as the defining sum over
Boolean assignments and once through closed-form polynomials in the table
entries ``f = (a, b, c, d, x, y, z, w)``.  The brute-force versions are the
reference; the closed forms must agree with them exactly.

``sym(f)`` glues three copies of ``f`` in a triangle:

    Sym(f)(x1, y1, z1) = Σ_{x2,y2,z2} f(x1,x2,z2) f(y1,y2,x2) f(z1,z2,y2)

and is always symmetric.  ``syml(f, u)`` glues two copies through their third
variable and caps the first variables with a unary ``u``; with ``u = [1, eps]``
the result is a binary symmetric signature whose entries are quadratics in
``eps``.
"""

from dataclasses import dataclass
from itertools import product

from .errors import (ArityMismatch, InternalAsymmetry, PreconditionViolated,
                     WitnessNotFound)
from .scalar import ZERO, Scalar, as_scalar
from .signature import (Signature, SymSignature, is_symmetric, permute,
                        permutations, to_sym)

IDENTITY = (1, 2, 3)
EPSILON_CANDIDATES = tuple(range(1, 8))


def _require_ternary(f):
    if f.arity != 3:
        raise ArityMismatch(f"expected a ternary signature, got arity {f.arity}")


def sym(f):
    """Brute-force ``Sym(f)`` as a :class:`SymSignature` of arity 3."""
    _require_ternary(f)
    out = []
    for x1, y1, z1 in product((0, 1), repeat=3):
        total = ZERO
        for x2, y2, z2 in product((0, 1), repeat=3):
            total += f(x1, x2, z2) * f(y1, y2, x2) * f(z1, z2, y2)
        out.append(total)
    table = Signature(out)
    if not is_symmetric(table):
        raise InternalAsymmetry(f"Sym({f!r}) came out asymmetric: {table!r}")
    return to_sym(table)


def sym_closed(f):
    """``Sym(f)`` from the four cubic closed forms."""
    _require_ternary(f)
    a, b, c, d, x, y, z, w = f.values
    h0 = (a + d) * ((a + d) ** 2 + 3 * (b * c - a * d))
    h1 = (a * a + b * c) * x + (a + d) * (b * z + c * y) + (b * c + d * d) * w
    h2 = a * (x * x + y * z) + (b * z + c * y) * (x + w) + d * (y * z + w * w)
    h3 = (x + w) * ((x + w) ** 2 + 3 * (y * z - x * w))
    return SymSignature([h0, h1, h2, h3])


def syml(f, u):
    """Brute-force ``SymL(f)(x2, y2) = Σ f(x1,x2,x3) f(y1,y2,x3) u(x1) u(y1)``."""
    _require_ternary(f)
    if u.arity != 1:
        raise ArityMismatch(f"expected a unary cap, got arity {u.arity}")
    out = []
    for x2, y2 in product((0, 1), repeat=2):
        total = ZERO
        for x1, x3, y1 in product((0, 1), repeat=3):
            total += f(x1, x2, x3) * f(y1, y2, x3) * u(x1) * u(y1)
        out.append(total)
    table = Signature(out)
    if not is_symmetric(table):
        raise InternalAsymmetry(f"SymL({f!r}) came out asymmetric: {table!r}")
    return to_sym(table)


@dataclass(frozen=True)
class SymLTriple:
    """``SymL(f_sigma)`` capped with ``[1, epsilon]``, as ``[g0, g1, g2]``."""

    g0: Scalar
    g1: Scalar
    g2: Scalar
    epsilon: Scalar
    sigma: tuple = IDENTITY

    @property
    def signature(self):
        return SymSignature([self.g0, self.g1, self.g2])

    def is_degenerate(self):
        return (self.g0 * self.g2 - self.g1 * self.g1).is_zero()


def syml_closed(f, epsilon, sigma=IDENTITY):
    """Closed-form ``SymL(f_sigma)`` with cap ``[1, epsilon]``."""
    _require_ternary(f)
    eps = as_scalar(epsilon)
    sigma = tuple(sigma)
    a, b, c, d, x, y, z, w = permute(f, sigma).values
    e2 = eps * eps
    g0 = e2 * (x * x + y * y) + 2 * eps * (a * x + b * y) + a * a + b * b
    g1 = e2 * (x * z + y * w) + eps * (a * z + b * w + c * x + d * y) + a * c + b * d
    g2 = e2 * (z * z + w * w) + 2 * eps * (c * z + d * w) + c * c + d * d
    return SymLTriple(g0, g1, g2, eps, sigma)


class EpsPoly:
    """Univariate polynomial in ``eps`` with scalar coefficients, low degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [as_scalar(c) for c in coeffs]
        while len(cs) > 1 and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs) if cs else (ZERO,)

    @property
    def degree(self):
        if len(self.coeffs) == 1 and self.coeffs[0].is_zero():
            return -1
        return len(self.coeffs) - 1

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return EpsPoly([self._c(i) + other._c(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return EpsPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __mul__(self, other):
        other = _as_poly(other)
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, p in enumerate(self.coeffs):
            for j, q in enumerate(other.coeffs):
                out[i + j] = out[i + j] + p * q
        return EpsPoly(out)

    __rmul__ = __mul__

    def _c(self, i):
        return self.coeffs[i] if i < len(self.coeffs) else ZERO

    def padded(self, n):
        return tuple(self._c(i) for i in range(n))

    def __call__(self, eps):
        eps = as_scalar(eps)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * eps + c
        return acc

    def __eq__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return all(self._c(i) == other._c(i) for i in range(n))

    def __repr__(self):
        return f"EpsPoly([{', '.join(str(c) for c in self.coeffs)}])"


def _as_poly(x):
    return x if isinstance(x, EpsPoly) else EpsPoly([x])


@dataclass(frozen=True)
class EpsPolynomials:
    """Coefficient vectors (constant term first) of the combinations of
    ``SymL(f_sigma)_eps = [g0, g1, g2]`` that matter for degeneracy tests."""

    sum02: tuple       # g0 + g2, degree <= 2
    diff02: tuple      # g0 - g2, degree <= 2
    middle: tuple      # g1, degree <= 2
    det: tuple         # g0*g2 - g1^2, degree <= 4
    sigma: tuple = IDENTITY

    def evaluate(self, eps):
        return tuple(EpsPoly(cs)(eps) for cs in (self.sum02, self.diff02, self.middle, self.det))


def syml_polynomials(f, sigma=IDENTITY):
    """Run the ``SymL`` sum over polynomials in ``eps`` and read off coefficients."""
    _require_ternary(f)
    sigma = tuple(sigma)
    fs = permute(f, sigma)
    cap = (EpsPoly([1]), EpsPoly([0, 1]))
    g = {}
    for x2, y2 in ((0, 0), (0, 1), (1, 1)):
        total = EpsPoly([0])
        for x1, x3, y1 in product((0, 1), repeat=3):
            total = total + (cap[x1] * cap[y1]) * (fs(x1, x2, x3) * fs(y1, y2, x3))
        g[x2 + y2] = total
    g0, g1, g2 = g[0], g[1], g[2]
    return EpsPolynomials(
        sum02=(g0 + g2).padded(3),
        diff02=(g0 - g2).padded(3),
        middle=g1.padded(3),
        det=(g0 * g2 - g1 * g1).padded(5),
        sigma=sigma,
    )


def witness_predicates(triple):
    """The three conditions a binary witness must meet, in order:
    non-degenerate, ``g0 + g2 != 0``, and ``g0 != g2 or g1 != 0``."""
    g0, g1, g2 = triple.g0, triple.g1, triple.g2
    return (
        not triple.is_degenerate(),
        not (g0 + g2).is_zero(),
        g0 != g2 or not g1.is_zero(),
    )


@dataclass(frozen=True)
class BinaryWitness:
    sigma: tuple
    epsilon: Scalar
    g: SymSignature


def find_binary_witness(f, epsilons=EPSILON_CANDIDATES):
    """Search ``sigma`` (lexicographic) and ``eps`` for a capped ``SymL(f_sigma)_eps``
    that is non-degenerate with ``g0 + g2 != 0`` and ``(g0 != g2 or g1 != 0)``.

    ``f`` must lie in SIG1 and outside DUP.  Failing to find a witness for
    such an ``f`` raises :class:`WitnessNotFound` carrying ``f``.
    """
    from .classify import dup_decompose, sig_membership

    _require_ternary(f)
    if dup_decompose(f) is not None:
        raise PreconditionViolated("signature factors through DUP")
    if not sig_membership(f).in_sig1:
        raise PreconditionViolated("signature is not in SIG1")
    for sigma in permutations(3):
        for eps in epsilons:
            t = syml_closed(f, eps, sigma)
            if all(witness_predicates(t)):
                return BinaryWitness(sigma, t.epsilon, t.signature)
    raise WitnessNotFound(f"no binary witness for {f!r}", signature=f)


__all__ = [
    "sym", "sym_closed", "syml", "syml_closed", "SymLTriple", "EpsPoly",
    "EpsPolynomials", "syml_polynomials", "witness_predicates", "BinaryWitness",
    "find_binary_witness", "EPSILON_CANDIDATES", "IDENTITY",
]
