"""JSON encodings shared by the CLI and the demos.

Scalars
    Exact integers inside signature tables are JSON integers; every other
    scalar is a string in the textual form of :class:`~holantcsp.scalar.Scalar`
    (``"1/2"``, ``"2-i"``, ``"~0.7937..."``).  A standalone value such as a
    Holant is always a string.

Signature
    ``{"sym": [w0, ..., wk]}`` for symmetric labels, otherwise
    ``{"arity": k, "values": [...]}``.  Inputs may also be a bare list (a full
    table) or a name such as ``"EQ_3"`` or ``"ONE_3"``.

Grid
    ``{"nodes": [{"id": 0, "sig": <signature>, "side": "L"|"R"|null}, ...],
    "edges": [[[id, port], [id, port]], ...]}``

CSP instance
    ``{"variables": n, "constraints": [{"sig": <signature>, "vars": [0, 1]}, ...]}``

Recipe
    ``{"name": "...", "generators": {"f": <signature>, ...},
    "steps": [{"op": "exclusive_multiplication", "inputs": ["f", "f"]},
    {"op": "linked_projection", "inputs": [0], "i": 1, "j": 4}, ...],
    "output": -1, "expect": <signature, optional>}``

Matrix
    ``[[m00, m01], [m10, m11]]`` with scalar entries.

Verdict
    ``{"verdict": "Hard", "evidence": {"failing_sigma": {...}}, "membership": {...}}``
    where the evidence key is one of ``dup``, ``failing_sigma``,
    ``sig1_witness`` or ``membership``.
"""

import json

from .classify import (DupFactorization, FailingSigma, MembershipSummary,
                       Sig1Witness)
from .errors import MalformedGrid, MalformedRecipe
from .grid import CspInstance, Node, SignatureGrid
from .rewrite import GadgetRecipe, RecipeStep
from .scalar import Scalar, as_scalar
from .signature import Signature, SymSignature, from_sym, is_symmetric, make_named, to_sym


def scalar_to_json(s, prefer_int=False):
    if prefer_int and s.is_exact and s.imag == 0 and s.real.denominator == 1:
        return int(s.real)
    return str(s)


def scalar_from_json(x):
    if isinstance(x, bool):
        raise ValueError(f"not a scalar: {x!r}")
    if isinstance(x, float):
        raise ValueError(f"floats are not accepted, write {x!r} as a string")
    return as_scalar(x)


def _entries(values):
    return [scalar_to_json(v, prefer_int=True) for v in values]


def signature_to_json(f, symmetric=None):
    if symmetric is None:
        symmetric = isinstance(f, SymSignature)
    if symmetric and is_symmetric(f):
        return {"sym": _entries(to_sym(f).weights)}
    return {"arity": f.arity, "values": _entries(f.values)}


def signature_from_json(x):
    if isinstance(x, Signature):
        return x
    if isinstance(x, str):
        return make_named(x)
    if isinstance(x, list):
        return Signature([scalar_from_json(v) for v in x])
    if isinstance(x, dict):
        if "sym" in x:
            return from_sym([scalar_from_json(v) for v in x["sym"]])
        if "values" in x:
            f = Signature([scalar_from_json(v) for v in x["values"]])
            if "arity" in x and x["arity"] != f.arity:
                raise ValueError(f"arity {x['arity']} does not match {len(x['values'])} values")
            return f
    raise ValueError(f"cannot read a signature from {x!r}")


def grid_to_json(g):
    return {
        "nodes": [{"id": n.id, "sig": signature_to_json(n.sig), "side": n.side}
                  for n in g.nodes],
        "edges": [[list(a), list(b)] for a, b in g.edges],
    }


def grid_from_json(x):
    try:
        nodes = [Node(n["id"], signature_from_json(n["sig"]), n.get("side"))
                 for n in x["nodes"]]
        edges = [(tuple(a), tuple(b)) for a, b in x["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedGrid(f"bad grid JSON: {exc}") from exc
    return SignatureGrid(nodes, edges)


def csp_to_json(inst):
    return {
        "variables": inst.var_count,
        "constraints": [{"sig": signature_to_json(s), "vars": list(xs)}
                        for s, xs in inst.applications],
    }


def csp_from_json(x):
    try:
        apps = tuple((signature_from_json(c["sig"]), tuple(c["vars"]))
                     for c in x["constraints"])
        return CspInstance(int(x["variables"]), apps)
    except (KeyError, TypeError) as exc:
        raise MalformedGrid(f"bad CSP JSON: {exc}") from exc


def matrix_to_json(M):
    return [[scalar_to_json(as_scalar(v), prefer_int=True) for v in row] for row in M]


def matrix_from_json(x):
    return [[scalar_from_json(v) for v in row] for row in x]


def recipe_to_json(r, expect=None):
    steps = []
    for st in r.steps:
        d = {"op": st.op, "inputs": list(st.inputs)}
        for k, v in st.args.items():
            if isinstance(v, Scalar):
                v = scalar_to_json(v, prefer_int=True)
            elif isinstance(v, tuple):
                v = list(v)
            d[k] = v
        steps.append(d)
    out = {"name": r.name,
           "generators": {k: signature_to_json(v) for k, v in r.generators.items()},
           "steps": steps, "output": r.output}
    if expect is not None:
        out["expect"] = signature_to_json(expect)
    return out


def recipe_from_json(x):
    if not isinstance(x, dict) or "steps" not in x:
        raise MalformedRecipe("recipe JSON needs a 'steps' list")
    gens = {}
    for name, sig in x.get("generators", {}).items():
        try:
            gens[name] = signature_from_json(sig)
        except (ValueError, KeyError) as exc:
            raise MalformedRecipe(f"generator {name!r}: {exc}") from exc
    steps = []
    for k, st in enumerate(x["steps"]):
        if not isinstance(st, dict) or "op" not in st:
            raise MalformedRecipe("step needs an 'op'", k)
        args = {a: v for a, v in st.items() if a not in ("op", "inputs")}
        if "scale" in args:
            args["scale"] = scalar_from_json(args["scale"])
        steps.append(RecipeStep(st["op"], tuple(st.get("inputs", ())), args))
    return GadgetRecipe(gens, tuple(steps), int(x.get("output", -1)), x.get("name", ""))


def _summary_json(s):
    return {
        "in_sig": s.in_sig, "in_sig0": s.in_sig0, "in_sig1": s.in_sig1,
        "in_sig2": s.in_sig2,
        "sig1_legal_sigmas": [list(p) for p in s.sig1_legal_sigmas],
        "records": [{
            "sigma": list(r.sigma),
            "sym": _entries(r.sym.weights),
            "degenerate": r.degenerate,
            "sig1": None if r.sig1 is None else _entries(r.sig1),
            "sig2": None if r.sig2 is None else _entries((r.sig2.alpha, r.sig2.beta)),
        } for r in s.records],
    }


def verdict_to_json(v):
    ev = v.evidence
    if isinstance(ev, DupFactorization):
        evidence = {"dup": {"sigma": list(ev.sigma), "u": signature_to_json(ev.u),
                            "f0": signature_to_json(ev.f0)}}
    elif isinstance(ev, FailingSigma):
        evidence = {"failing_sigma": {"sigma": list(ev.sigma), "sym": _entries(ev.sym.weights)}}
    elif isinstance(ev, Sig1Witness):
        evidence = {"sig1_witness": {"sigma": list(ev.sigma), "a": scalar_to_json(ev.a, True),
                                     "b": scalar_to_json(ev.b, True)}}
    elif isinstance(ev, MembershipSummary):
        evidence = {"membership": _summary_json(ev)}
    else:
        raise TypeError(f"unknown evidence {ev!r}")
    out = {"verdict": v.verdict, "evidence": evidence}
    if v.summary is not None and not isinstance(ev, MembershipSummary):
        out["membership"] = _summary_json(v.summary)
    return out


def trace_to_json(trace):
    return [{"case": s.case, "nodes": list(s.nodes),
             "factor": None if s.factor is None else str(s.factor), "note": s.note}
            for s in trace.steps]


def dumps(payload):
    """Canonical text: sorted keys, no trailing spaces, so equal payloads print identically."""
    return json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


__all__ = [
    "scalar_to_json", "scalar_from_json", "signature_to_json", "signature_from_json",
    "grid_to_json", "grid_from_json", "csp_to_json", "csp_from_json",
    "matrix_to_json", "matrix_from_json", "recipe_to_json", "recipe_from_json",
    "verdict_to_json", "trace_to_json", "dumps",
]
