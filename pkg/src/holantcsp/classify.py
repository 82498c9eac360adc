"""Membership tests for the ternary signature families and the verdict.

The families, for a ternary ``f`` and its permuted copies ``f_sigma``:

* Sig1: symmetric ``[a, b, -a, -b]``.
* Sig2: symmetric ``[a, b, c, d]`` with binding coefficients ``(alpha, beta)``,
  not both zero, such that ``alpha*a + beta*b - alpha*c == 0`` and
  ``alpha*b + beta*c - alpha*d == 0``.
* DUP: some ``f_sigma`` equals ``u(x1) * f0(x2, x3)``.
* SIG: every non-degenerate ``Sym(f_sigma)`` lies in Sig1 or Sig2.
* SIG0 / SIG1 / SIG2: every ``Sym(f_sigma)`` degenerate / some
  non-degenerate ``Sym(f_sigma)`` in Sig1 / in Sig2.

The verdict checks DUP first (tractable), then SIG (outside is hard), then
SIG1 (hard), and leaves the rest unresolved.
"""

from dataclasses import dataclass, field
from typing import Optional

from .errors import ArityMismatch
from .scalar import ONE, ZERO, Scalar
from .signature import (Signature, SymSignature, exmul, permute, permutations,
                        ternary_sym_nondegenerate, to_sym)
from .symmetrize import sym

TRACTABLE = "Tractable"
HARD = "Hard"
UNRESOLVED = "Unresolved"


@dataclass(frozen=True)
class BindingCoefficients:
    alpha: Scalar
    beta: Scalar

    def holds_for(self, g):
        a, b, c, d = to_sym(g).weights
        al, be = self.alpha, self.beta
        return ((al * a + be * b - al * c).is_zero()
                and (al * b + be * c - al * d).is_zero())


@dataclass(frozen=True)
class DupFactorization:
    """``permute(f, sigma) == u ⊗ f0``; the pivot of ``f`` is ``x_{sigma^-1(1)}``."""

    sigma: tuple
    u: Signature
    f0: Signature

    def recompose(self):
        return exmul(self.u, self.f0)

    def pivot(self):
        return self.sigma.index(1) + 1


@dataclass(frozen=True)
class SigmaRecord:
    sigma: tuple
    sym: SymSignature
    degenerate: bool
    sig1: Optional[tuple]                     # (a, b) when Sym(f_sigma) = [a,b,-a,-b]
    sig2: Optional[BindingCoefficients]

    @property
    def sig1_legal(self):
        if self.sig1 is None:
            return False
        a, b = self.sig1
        return not (a * a + b * b).is_zero()


@dataclass(frozen=True)
class MembershipSummary:
    records: tuple

    @property
    def in_sig(self):
        return all(r.degenerate or r.sig1 is not None or r.sig2 is not None
                   for r in self.records)

    @property
    def in_sig0(self):
        return all(r.degenerate for r in self.records)

    @property
    def in_sig1(self):
        return any(not r.degenerate and r.sig1_legal for r in self.records)

    @property
    def in_sig2(self):
        return any(not r.degenerate and r.sig2 is not None for r in self.records)

    @property
    def sig1_legal_sigmas(self):
        return [r.sigma for r in self.records if r.sig1_legal]

    def failing_sigmas(self):
        return [r.sigma for r in self.records
                if not r.degenerate and r.sig1 is None and r.sig2 is None]


@dataclass(frozen=True)
class FailingSigma:
    """``Sym(f_sigma)`` is non-degenerate and in neither Sig1 nor Sig2."""

    sigma: tuple
    sym: SymSignature


@dataclass(frozen=True)
class Sig1Witness:
    sigma: tuple
    a: Scalar
    b: Scalar


@dataclass(frozen=True)
class ClassificationVerdict:
    verdict: str
    evidence: object
    summary: Optional[MembershipSummary] = field(default=None, compare=False)


def _require_sym_ternary(g):
    g = to_sym(g)
    if g.arity != 3:
        raise ArityMismatch(f"expected a symmetric ternary signature, got arity {g.arity}")
    return g


def in_sig1_set(g):
    """``(a, b)`` if ``g == [a, b, -a, -b]`` exactly, else ``None``."""
    a, b, c, d = _require_sym_ternary(g).weights
    if (a + c).is_zero() and (b + d).is_zero():
        return a, b
    return None


def _normalize_pair(alpha, beta):
    lead = alpha if not alpha.is_zero() else beta
    return BindingCoefficients(alpha / lead, beta / lead)


def binding_coefficients(g):
    """Nonzero solution ``(alpha, beta)`` of the Sig2 system, first nonzero
    component scaled to 1; ``None`` when only the trivial solution exists."""
    a, b, c, d = _require_sym_ternary(g).weights
    # alpha*(a - c) + beta*b = 0 ;  alpha*(b - d) + beta*c = 0
    r1, r2 = (a - c, b), (b - d, c)
    if not (r1[0] * r2[1] - r1[1] * r2[0]).is_zero():
        return None
    for p, q in (r1, r2):
        if not (p.is_zero() and q.is_zero()):
            return _normalize_pair(q, -p)
    return BindingCoefficients(ONE, ZERO)


def dup_decompose(f):
    """First ``sigma`` (lexicographic) with ``f_sigma = u(x1) * f0(x2, x3)``."""
    if f.arity != 3:
        raise ArityMismatch(f"expected a ternary signature, got arity {f.arity}")
    for sigma in permutations(3):
        g = permute(f, sigma)
        r0, r1 = g.values[:4], g.values[4:]
        zero0 = all(v.is_zero() for v in r0)
        zero1 = all(v.is_zero() for v in r1)
        if zero0 and zero1:
            return DupFactorization(sigma, Signature([1, 1]), Signature([0, 0, 0, 0]))
        if zero0:
            return DupFactorization(sigma, Signature([0, 1]), Signature(r1))
        j = next(t for t in range(4) if not r0[t].is_zero())
        lam = r1[j] / r0[j]
        if all(r1[t] == lam * r0[t] for t in range(4)):
            return DupFactorization(sigma, Signature([ONE, lam]), Signature(r0))
    return None


def in_dup(f):
    return dup_decompose(f) is not None


def _record(f, sigma):
    s = sym(permute(f, sigma))
    return SigmaRecord(sigma, s, not ternary_sym_nondegenerate(s),
                       in_sig1_set(s), binding_coefficients(s))


def sig_membership(f):
    """Per-permutation Sym data for ``f`` and the derived SIG flags."""
    if f.arity != 3:
        raise ArityMismatch(f"expected a ternary signature, got arity {f.arity}")
    return MembershipSummary(tuple(_record(f, s) for s in permutations(3)))


def verdict(f):
    dup = dup_decompose(f)
    summary = sig_membership(f)
    if dup is not None:
        return ClassificationVerdict(TRACTABLE, dup, summary)
    for r in summary.records:
        if not r.degenerate and r.sig1 is None and r.sig2 is None:
            return ClassificationVerdict(HARD, FailingSigma(r.sigma, r.sym), summary)
    for r in summary.records:
        if not r.degenerate and r.sig1_legal:
            a, b = r.sig1
            return ClassificationVerdict(HARD, Sig1Witness(r.sigma, a, b), summary)
    return ClassificationVerdict(UNRESOLVED, summary, summary)


def check_verdict(f, v):
    """Re-derive the verdict's claim from its evidence alone."""
    ev = v.evidence
    if v.verdict == TRACTABLE:
        return isinstance(ev, DupFactorization) and permute(f, ev.sigma) == ev.recompose()
    if v.verdict == HARD and isinstance(ev, FailingSigma):
        s = sym(permute(f, ev.sigma))
        return (s == ev.sym and ternary_sym_nondegenerate(s)
                and in_sig1_set(s) is None and binding_coefficients(s) is None
                and dup_decompose(f) is None)
    if v.verdict == HARD and isinstance(ev, Sig1Witness):
        s = sym(permute(f, ev.sigma))
        return (in_sig1_set(s) == (ev.a, ev.b)
                and not (ev.a * ev.a + ev.b * ev.b).is_zero()
                and dup_decompose(f) is None)
    if v.verdict == UNRESOLVED:
        fresh = sig_membership(f)
        return (dup_decompose(f) is None and fresh.in_sig and not fresh.in_sig1)
    return False


__all__ = [
    "TRACTABLE", "HARD", "UNRESOLVED", "BindingCoefficients", "DupFactorization",
    "SigmaRecord", "MembershipSummary", "FailingSigma", "Sig1Witness",
    "ClassificationVerdict", "in_sig1_set", "binding_coefficients",
    "dup_decompose", "in_dup", "sig_membership", "verdict", "check_verdict",
]
