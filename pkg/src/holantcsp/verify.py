"""Randomized property suites, runnable from the CLI as ``holantcsp verify NAME``.

Each suite draws ``samples`` random cases from a seeded generator, checks one
property per case, and reports pass/fail counts plus the first few
counterexamples.  The pytest suite covers the same ground with its own,
larger sample counts.
"""

from dataclasses import dataclass, field

from . import rewrite as R
from . import sampling as smp
from .classify import check_verdict, dup_decompose, sig_membership, verdict
from .errors import WitnessNotFound
from .grid import csp_direct_sum, csp_to_grid, holant_bruteforce
from .signature import (from_sym, is_symmetric, permute, permutations, scale,
                        unary)
from .solver import eval_dup_grid
from .symmetrize import (find_binary_witness, sym, sym_closed, syml, syml_closed,
                         witness_predicates)

MAX_COUNTEREXAMPLES = 5


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    counterexamples: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def record(self, ok, describe=""):
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.counterexamples) < MAX_COUNTEREXAMPLES:
                self.counterexamples.append(describe() if callable(describe) else describe)

    @property
    def ok(self):
        return self.failed == 0

    def to_json(self):
        return {"suite": self.name, "passed": self.passed, "failed": self.failed,
                "counterexamples": self.counterexamples, "notes": self.notes}


def closed_forms(rng, samples, max_edges):
    res = SuiteResult("closed-forms")
    for _ in range(samples):
        f = smp.random_signature(rng, 3)
        ok = sym_closed(f) == sym(f)
        for eps in (0, 1, 2):
            t = syml_closed(f, eps)
            ok = ok and t.signature == syml(f, unary(1, eps))
        res.record(ok, lambda: repr(f))
    return res


def sym_symmetric(rng, samples, max_edges):
    res = SuiteResult("sym-symmetric")
    for _ in range(samples):
        f = smp.random_signature(rng, 3)
        res.record(is_symmetric(sym(f)), lambda: repr(f))
    return res


def sig1_sym(rng, samples, max_edges):
    res = SuiteResult("sig1-sym")
    for _ in range(samples):
        a, b = smp.gaussian_rational(rng), smp.gaussian_rational(rng)
        s1 = sym(from_sym([a, b, -a, -b]))
        s2 = sym(from_sym([a, 0, 0, b]))
        s3 = sym(from_sym([a, b, a, b])).weights
        ok = (all(w.is_zero() for w in s1.weights)
              and list(s2.weights) == [a ** 3, 0, 0, b ** 3]
              and s3[0] == 2 * a * (a * a + 3 * b * b)
              and s3[1] == 2 * b * (3 * a * a + b * b)
              and s3[2] == s3[0] and s3[3] == s3[1])
        res.record(ok, lambda: f"a={a}, b={b}")
    return res


def classifier(rng, samples, max_edges):
    res = SuiteResult("classifier")
    for _ in range(samples):
        f = smp.random_signature(rng, 3, smp.small_entry)
        v = verdict(f)
        sigma = rng.choice(permutations(3))
        lam = smp.random_nonzero(rng)
        w = verdict(scale(lam, permute(f, sigma)))
        s = sig_membership(f)
        covered = not s.in_sig or s.in_sig0 or s.in_sig1 or s.in_sig2
        res.record(check_verdict(f, v) and v.verdict == w.verdict and covered,
                   lambda: f"{f!r}: {v.verdict} vs {w.verdict}")
    return res


def holographic(rng, samples, max_edges):
    res = SuiteResult("holographic")
    for _ in range(samples):
        g = smp.random_bipartite_grid(rng, max_edges)
        M = smp.random_matrix(rng)
        res.record(holant_bruteforce(g) == holant_bruteforce(R.holographic_grid(g, M)),
                   lambda: f"{g!r} M={M}")
    return res


def rewrites(rng, samples, max_edges):
    res = SuiteResult("rewrites")
    for rule in R.RULES:
        for _ in range(max(1, samples // len(R.RULES))):
            g, inst = smp.random_rewrite_case(rng, rule, max_edges)
            res.record(holant_bruteforce(g) == holant_bruteforce(R.rewrite_grid(g, inst)),
                       lambda: repr(inst))
    return res


def csp_oracle(rng, samples, max_edges):
    res = SuiteResult("csp-oracle")
    for _ in range(samples):
        inst = smp.random_csp(rng)
        res.record(holant_bruteforce(csp_to_grid(inst)) == csp_direct_sum(inst),
                   lambda: repr(inst))
    return res


def solver(rng, samples, max_edges):
    res = SuiteResult("solver")
    for _ in range(samples):
        g = smp.random_dup_grid(rng, min(max_edges, 12))
        res.record(eval_dup_grid(g)[0] == holant_bruteforce(g), lambda: repr(g))
    return res


def syml_nondegenerate(rng, samples, max_edges):
    res = SuiteResult("syml-nondegenerate")
    for _ in range(samples):
        f = smp.random_non_dup(rng)
        worst = max(sum(syml_closed(f, e, s).is_degenerate() for e in range(1, 8))
                    for s in permutations(3))
        res.record(worst <= 4, lambda: f"{f!r}: {worst} degenerate eps")
    return res


def binary_witness(rng, samples, max_edges):
    res = SuiteResult("binary-witness")
    tried = 0
    for _ in range(samples * 100):
        if res.passed + res.failed >= samples:
            break
        tried += 1
        f = smp.random_signature(rng, 3, smp.small_entry)
        if dup_decompose(f) is not None or not sig_membership(f).in_sig1:
            continue
        try:
            w = find_binary_witness(f)
            t = syml_closed(f, w.epsilon, w.sigma)
            res.record(all(witness_predicates(t)) and t.signature == w.g, lambda: repr(f))
        except WitnessNotFound:
            res.record(False, lambda: repr(f))
    hits = res.passed + res.failed
    res.notes.append(f"hit rate {hits}/{tried}")
    return res


def recipes(rng, samples, max_edges):
    res = SuiteResult("recipes")
    res.record(list(R.replay(R.h_recipe()).values) == [0, 5, 5, 6], "h recipe")
    for _ in range(samples):
        f = smp.random_signature(rng, 3)
        u = smp.random_signature(rng, 1)
        ok = (R.replay(R.sym_recipe(f)) == sym(f)
              and R.replay(R.syml_recipe(f, u)) == syml(f, u))
        res.record(ok, lambda: repr(f))
    return res


def transform_composition(rng, samples, max_edges):
    res = SuiteResult("transform-composition")
    for _ in range(samples):
        g = smp.random_bipartite_grid(rng, max_edges)
        M, N = smp.random_matrix(rng), smp.random_matrix(rng)
        twice = R.holographic_grid(R.holographic_grid(g, M), N)
        once = R.holographic_grid(g, R.matmul(N, M))
        res.record(twice == once, lambda: f"M={M} N={N}")
    return res


SUITES = {
    "closed-forms": closed_forms,
    "sym-symmetric": sym_symmetric,
    "sig1-sym": sig1_sym,
    "classifier": classifier,
    "holographic": holographic,
    "rewrites": rewrites,
    "csp-oracle": csp_oracle,
    "solver": solver,
    "syml-nondegenerate": syml_nondegenerate,
    "binary-witness": binary_witness,
    "recipes": recipes,
    "transform-composition": transform_composition,
}


def run_suite(name, seed=0, samples=50, max_edges=10):
    """Run one suite (or ``"all"``); returns a list of :class:`SuiteResult`."""
    names = list(SUITES) if name == "all" else [name]
    out = []
    for n in names:
        if n not in SUITES:
            raise KeyError(n)
        out.append(SUITES[n](smp.rng_from(seed), samples, max_edges))
    return out


__all__ = ["SuiteResult", "SUITES", "run_suite"]
