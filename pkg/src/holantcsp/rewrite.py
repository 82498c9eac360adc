"""Gadget recipes, Holant-preserving grid rewrites, holographic transforms.

A :class:`GadgetRecipe` is a straight-line program over signature
operations.  Each step names its inputs either by generator name or by the
index of an earlier step, so the step list is a DAG by construction.

Each rewrite rule is anchored at a single node and replaces it by the
signature it was built from, wiring up whatever the construction needs.
The Holant value of the grid is unchanged.  Scaling is the one
construction step with no rule here, because it multiplies the Holant by
a constant rather than preserving it.
"""

from dataclasses import dataclass, field

from . import signature as S
from .errors import (HolantError, MalformedRecipe, NotBipartite, PatternMismatch,
                     SingularMatrix)
from .grid import LEFT, RIGHT, Node, SignatureGrid
from .scalar import Scalar, as_scalar
from .signature import Signature, as_signature

# -- recipes -----------------------------------------------------------------

_OPS = {
    # canonical name: (arity of inputs, argument names)
    "permutation": (1, ("sigma",)),
    "pinning": (1, ("i", "c")),
    "projection": (1, ("i",)),
    "linked_projection": (1, ("i", "j")),
    "expansion": (1, ("i",)),
    "exclusive_multiplication": (2, ()),
    "normalization": (1, ("scale",)),
}
_ALIASES = {
    "permute": "permutation", "pin": "pinning", "project": "projection",
    "linked_project": "linked_projection", "expand": "expansion",
    "exmul": "exclusive_multiplication", "scale": "normalization",
}


@dataclass(frozen=True)
class RecipeStep:
    op: str
    inputs: tuple
    args: dict = field(default_factory=dict)


@dataclass(frozen=True)
class GadgetRecipe:
    generators: dict
    steps: tuple
    output: int = -1
    name: str = ""

    def output_index(self):
        return self.output if self.output >= 0 else len(self.steps) + self.output


def _apply(op, sigs, args):
    f = sigs[0]
    if op == "permutation":
        return S.permute(f, tuple(args["sigma"]))
    if op == "pinning":
        return S.pin(f, args["i"], args["c"])
    if op == "projection":
        return S.project(f, args["i"])
    if op == "linked_projection":
        return S.linked_project(f, args["i"], args["j"])
    if op == "expansion":
        return S.expand(f, args["i"])
    if op == "exclusive_multiplication":
        return S.exmul(sigs[0], sigs[1])
    return S.scale(as_scalar(args["scale"]), f)


def replay(recipe, trace=False):
    """Evaluate the recipe; with ``trace=True`` also return every step's value."""
    gens = {name: as_signature(sig) for name, sig in recipe.generators.items()}
    values = []
    if not recipe.steps:
        raise MalformedRecipe("recipe has no steps")
    for k, step in enumerate(recipe.steps):
        op = _ALIASES.get(step.op, step.op)
        if op not in _OPS:
            raise MalformedRecipe(f"unknown operation {step.op!r}", k)
        n_in, arg_names = _OPS[op]
        if len(step.inputs) != n_in:
            raise MalformedRecipe(f"{op} takes {n_in} input(s), got {len(step.inputs)}", k)
        missing = [a for a in arg_names if a not in step.args]
        if missing:
            raise MalformedRecipe(f"{op} is missing argument(s) {missing}", k)
        sigs = []
        for ref in step.inputs:
            if isinstance(ref, str):
                if ref not in gens:
                    raise MalformedRecipe(f"unknown generator {ref!r}", k)
                sigs.append(gens[ref])
            elif isinstance(ref, int) and not isinstance(ref, bool) and 0 <= ref < k:
                sigs.append(values[ref])
            else:
                raise MalformedRecipe(f"input {ref!r} is not an earlier step", k)
        try:
            values.append(_apply(op, sigs, step.args))
        except (HolantError, ValueError, TypeError) as exc:
            raise MalformedRecipe(f"{op}: {exc}", k) from exc
    out = recipe.output_index()
    if not 0 <= out < len(values):
        raise MalformedRecipe(f"output index {recipe.output} out of range")
    return (values[out], values) if trace else values[out]


class _Builder:
    """Builds recipes while tracking a label for every variable of every step,
    so linked projections can be written by label instead of by position."""

    def __init__(self, **generators):
        self.generators = generators
        self.steps = []
        self.labels = []

    def exmul(self, a, la, b, lb):
        ref_a, labs_a = self._ref(a, la)
        ref_b, labs_b = self._ref(b, lb)
        self.steps.append(RecipeStep("exclusive_multiplication", (ref_a, ref_b)))
        self.labels.append(labs_a + labs_b)
        return len(self.steps) - 1

    def _ref(self, x, labels):
        if isinstance(x, int):
            return x, self.labels[x]
        return x, list(labels)

    def link(self, step, u, v):
        labs = self.labels[step]
        i, j = labs.index(u) + 1, labs.index(v) + 1
        self.steps.append(RecipeStep("linked_projection", (step,), {"i": i, "j": j}))
        self.labels.append([x for x in labs if x not in (u, v)])
        return len(self.steps) - 1

    def scale(self, step, lam):
        self.steps.append(RecipeStep("normalization", (step,), {"scale": lam}))
        self.labels.append(list(self.labels[step]))
        return len(self.steps) - 1

    def build(self, name):
        return GadgetRecipe(dict(self.generators), tuple(self.steps), -1, name)


def sym_recipe(f):
    """Triangle of three copies of ``f``; replays to ``sym(f)`` as a plain table."""
    f = as_signature(f)
    b = _Builder(f=f)
    s = b.exmul("f", ["x1", "x2", "z2"], "f", ["y1", "y2", "x2'"])
    s = b.exmul(s, None, "f", ["z1", "z2'", "y2'"])
    s = b.link(s, "x2", "x2'")
    s = b.link(s, "z2", "z2'")
    b.link(s, "y2", "y2'")
    return b.build("sym")


def syml_recipe(f, u):
    """Two copies of ``f`` glued on the third variable, first variables capped by ``u``."""
    b = _Builder(f=as_signature(f), u=as_signature(u))
    s = b.exmul("f", ["x1", "x2", "x3"], "f", ["y1", "y2", "x3'"])
    s = b.exmul(s, None, "u", ["x1'"])
    s = b.exmul(s, None, "u", ["y1'"])
    s = b.link(s, "x3", "x3'")
    s = b.link(s, "x1", "x1'")
    b.link(s, "y1", "y1'")
    return b.build("syml")


def h_recipe(g_prime=(5, 1, 1), u=(1, -25)):
    """``h(x, y) = -1/4 * Σ_z g'(x,z) g'(z,y) u(z)``, which is ``[0, 5, 6]``.

    The variable ``z`` is shared by three factors, so an ``EQ_3`` generator
    ties the three copies together before they are summed out.
    """
    b = _Builder(g=S.from_sym(list(g_prime)), u=S.unary(*u), eq3=S.make_named("EQ_3"))
    s = b.exmul("g", ["x", "z1"], "g", ["z2", "y"])
    s = b.exmul(s, None, "u", ["z3"])
    s = b.exmul(s, None, "eq3", ["a", "b", "c"])
    s = b.link(s, "z1", "a")
    s = b.link(s, "z2", "b")
    s = b.link(s, "z3", "c")
    b.scale(s, Scalar(-1, 0) / 4)
    return b.build("h")


def eq2_from_eq3():
    """``EQ_2`` from ``EQ_3`` by summing out the third variable against ``[1, 1]``."""
    b = _Builder(eq3=S.make_named("EQ_3"), one=S.unary(1, 1))
    s = b.exmul("eq3", ["x", "y", "z"], "one", ["z'"])
    b.link(s, "z", "z'")
    return b.build("eq2")


def g_prime_recipe(g):
    """Normalize the binary ``g = gamma^2 * (5,1,1,1)`` to ``[5, 1, 1]``."""
    g = as_signature(g)
    b = _Builder(g=g)
    b.steps.append(RecipeStep("normalization", ("g",), {"scale": Scalar(5) / g.values[0]}))
    b.labels.append(["x", "y"])
    return b.build("g_prime")


BUILTIN_RECIPES = {
    "sym": lambda f="ONE_3": sym_recipe(f),
    "syml": lambda f="ONE_3", u=(1, 1): syml_recipe(f, u),
    "h": lambda: h_recipe(),
    "eq2_from_eq3": lambda: eq2_from_eq3(),
}

# -- grid rewrites --------------------------------------------------------------


def _opposite(side):
    return {LEFT: RIGHT, RIGHT: LEFT}.get(side)


def _rebuild(grid, nid, new_nodes, port_map, extra_edges=(), drop_ports=()):
    """Replace node ``nid`` by ``new_nodes``.

    ``port_map`` sends each surviving old port of ``nid`` to a new endpoint.
    Edges touching a port in ``drop_ports`` are removed and their other end
    is returned so the caller can reattach it.
    """
    def remap(e):
        return port_map[e[1]] if e[0] == nid else e

    edges, orphans = [], []
    for a, b in grid.edges:
        if a[0] == nid and a[1] in drop_ports:
            orphans.append(remap(b))
            continue
        if b[0] == nid and b[1] in drop_ports:
            orphans.append(remap(a))
            continue
        edges.append((remap(a), remap(b)))
    nodes = [n for n in grid.nodes if n.id != nid] + list(new_nodes)
    return nodes, edges + list(extra_edges), orphans


def _check(node, expected, what):
    if node.sig != expected:
        raise PatternMismatch(f"node {node.id!r} is not {what}")


@dataclass(frozen=True)
class Eq2ToEq3:
    """``EQ_2`` node becomes ``EQ_3`` whose new port is capped by ``[1, 1]``."""

    node: int

    def apply(self, grid):
        v = grid.node(self.node)
        _check(v, S.make_named("EQ_2"), "labelled EQ_2")
        cap = grid.next_id()
        nodes, edges, _ = _rebuild(
            grid, v.id,
            [Node(v.id, S.make_named("EQ_3"), v.side), Node(cap, S.unary(1, 1), _opposite(v.side))],
            {0: (v.id, 0), 1: (v.id, 1)}, [((v.id, 2), (cap, 0))])
        return SignatureGrid(nodes, edges)


@dataclass(frozen=True)
class LinkedProjection:
    """Node labelled ``linked_project(inner, i, j)`` becomes ``inner`` with
    ports ``i-1`` and ``j-1`` joined by a self-loop."""

    node: int
    inner: Signature
    i: int
    j: int

    def apply(self, grid):
        v = grid.node(self.node)
        _check(v, S.linked_project(self.inner, self.i, self.j),
               f"a linked projection on ({self.i}, {self.j})")
        i, j = sorted((self.i - 1, self.j - 1))
        rest = [p for p in range(self.inner.arity) if p not in (i, j)]
        port_map = {old: (v.id, new) for old, new in enumerate(rest)}
        nodes, edges, _ = _rebuild(grid, v.id, [Node(v.id, self.inner, v.side)],
                                   port_map, [((v.id, i), (v.id, j))])
        return SignatureGrid(nodes, edges)


@dataclass(frozen=True)
class Projection:
    """Node labelled ``project(inner, i)`` becomes ``inner`` plus a ``[1, 1]`` cap on port ``i-1``."""

    node: int
    inner: Signature
    i: int

    def apply(self, grid):
        v = grid.node(self.node)
        _check(v, S.project(self.inner, self.i), f"a projection on {self.i}")
        return _insert_cap(grid, v, self.inner, self.i - 1, S.unary(1, 1))


@dataclass(frozen=True)
class Pinning:
    """Node labelled ``pin(inner, i, c)`` becomes ``inner`` plus a pin ``[1-c, c]`` on port ``i-1``."""

    node: int
    inner: Signature
    i: int
    c: int

    def apply(self, grid):
        v = grid.node(self.node)
        _check(v, S.pin(self.inner, self.i, self.c), f"a pinning of {self.i} to {self.c}")
        return _insert_cap(grid, v, self.inner, self.i - 1, S.unary(1 - self.c, self.c))


def _insert_cap(grid, v, inner, port, cap_sig):
    cap = grid.next_id()
    port_map = {old: (v.id, old if old < port else old + 1)
                for old in range(inner.arity - 1)}
    nodes, edges, _ = _rebuild(
        grid, v.id,
        [Node(v.id, inner, v.side), Node(cap, cap_sig, _opposite(v.side))],
        port_map, [((v.id, port), (cap, 0))])
    return SignatureGrid(nodes, edges)


@dataclass(frozen=True)
class Expansion:
    """Node whose label ignores variable ``position+1`` (as produced by
    ``expand(inner, position)``) drops that port; the edge's other end is
    capped by a fresh ``[1, 1]`` node."""

    node: int
    position: int

    def apply(self, grid):
        v = grid.node(self.node)
        p = self.position
        if not 0 <= p < v.sig.arity:
            raise PatternMismatch(f"node {v.id!r} has no port {p}")
        inner = S.pin(v.sig, p + 1, 0)
        _check(v, S.expand(inner, p), f"independent of port {p}")
        cap = grid.next_id()
        port_map = {old: (v.id, old if old < p else old - 1)
                    for old in range(v.sig.arity) if old != p}
        nodes, edges, orphans = _rebuild(grid, v.id, [Node(v.id, inner, v.side)],
                                         port_map, drop_ports=(p,))
        (partner,) = orphans
        partner_side = grid.node(partner[0]).side if partner[0] != v.id else v.side
        nodes.append(Node(cap, S.unary(1, 1), _opposite(partner_side)))
        edges.append((partner, (cap, 0)))
        return SignatureGrid(nodes, edges)


@dataclass(frozen=True)
class ExclusiveMultiplication:
    """Node labelled ``exmul(left, right)`` splits into two nodes; the first
    ``left.arity`` ports go to ``left`` and the rest to ``right``."""

    node: int
    left: Signature
    right: Signature

    def apply(self, grid):
        v = grid.node(self.node)
        _check(v, S.exmul(self.left, self.right), "the given product")
        other = grid.next_id()
        k = self.left.arity
        port_map = {old: (v.id, old) if old < k else (other, old - k)
                    for old in range(v.sig.arity)}
        nodes, edges, _ = _rebuild(
            grid, v.id, [Node(v.id, self.left, v.side), Node(other, self.right, v.side)],
            port_map)
        return SignatureGrid(nodes, edges)


@dataclass(frozen=True)
class Permutation:
    """Node labelled ``permute(inner, sigma)`` becomes ``inner`` with its ports rewired."""

    node: int
    inner: Signature
    sigma: tuple

    def apply(self, grid):
        v = grid.node(self.node)
        _check(v, S.permute(self.inner, self.sigma), f"a permutation by {self.sigma}")
        # inner's variable j reads the label's variable sigma(j)
        port_map = {s - 1: (v.id, j) for j, s in enumerate(self.sigma)}
        nodes, edges, _ = _rebuild(grid, v.id, [Node(v.id, self.inner, v.side)], port_map)
        return SignatureGrid(nodes, edges)


RULES = (Eq2ToEq3, LinkedProjection, Projection, Pinning, Expansion,
         ExclusiveMultiplication, Permutation)


def rewrite_grid(grid, rule):
    return rule.apply(grid)


# -- holographic transformation ------------------------------------------------


def _inverse2(M):
    (a, b), (c, d) = S._matrix(M)
    det = a * d - b * c
    if det.is_zero():
        raise SingularMatrix("matrix is singular")
    return [[d / det, -b / det], [-c / det, a / det]]


def transpose(M):
    (a, b), (c, d) = S._matrix(M)
    return [[a, c], [b, d]]


def matmul(A, B):
    A, B = S._matrix(A), S._matrix(B)
    return [[A[i][0] * B[0][j] + A[i][1] * B[1][j] for j in range(2)] for i in range(2)]


def holographic_grid(grid, M):
    """Right labels ``f -> f (M^T)^{⊗k}``, Left labels ``g -> g (M^{-1})^{⊗k}``."""
    if not grid.is_bipartite():
        raise NotBipartite("holographic transformation needs a Left/Right bipartite grid")
    Minv = _inverse2(M)
    Mt = transpose(M)
    nodes = [Node(n.id, S.transform(n.sig, Mt if n.side == RIGHT else Minv), n.side)
             for n in grid.nodes]
    return SignatureGrid(nodes, grid.edges)


__all__ = [
    "RecipeStep", "GadgetRecipe", "replay", "sym_recipe", "syml_recipe", "h_recipe",
    "eq2_from_eq3", "g_prime_recipe", "BUILTIN_RECIPES", "Eq2ToEq3",
    "LinkedProjection", "Projection", "Pinning", "Expansion",
    "ExclusiveMultiplication", "Permutation", "RULES", "rewrite_grid",
    "holographic_grid", "transpose", "matmul",
]
