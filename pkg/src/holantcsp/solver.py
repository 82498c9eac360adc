"""Polynomial-time Holant evaluation for grids whose ternary labels are in DUP.

Every ternary node ``f`` with ``f(x) = u(x_p) f0(rest)`` is first split into
a unary node ``u`` on the pivot port and a binary node ``f0``.  What remains
has maximum degree 2, so each component is a path or a cycle.  Those are
eaten one edge at a time:

* Case 1: two unary nodes joined by an edge give the scalar ``Σ_b u(b) v(b)``.
* Case 2: a binary node absorbs a neighbour (a 2x2 matrix product, or a
  matrix-vector product at a path end), and a binary node whose two ports
  are joined by a self-loop closes the cycle with its trace.
* Case 3: the ternary split above.

Isolated arity-0 nodes contribute their value directly.  Nodes are picked
lowest id first, so the trace is reproducible.
"""

import heapq
from dataclasses import dataclass, field

from .classify import dup_decompose
from .errors import DegreeTooHigh, NotDupGrid
from .grid import Node, SignatureGrid
from .scalar import ONE, ZERO
from .signature import Signature

CASE1 = "case1"
CASE2 = "case2"
CASE3 = "case3"


@dataclass(frozen=True)
class ReductionStep:
    case: str
    nodes: tuple
    factor: object = None       # Scalar emitted by this step, if any
    note: str = ""


@dataclass
class ReductionTrace:
    steps: list = field(default_factory=list)

    def factors(self):
        return [s.factor for s in self.steps if s.factor is not None]

    def product(self):
        out = ONE
        for f in self.factors():
            out = out * f
        return out

    def count(self, case):
        return sum(1 for s in self.steps if s.case == case)

    def __len__(self):
        return len(self.steps)


class _Work:
    """Mutable copy of a grid: labels as value lists, ports as a link table."""

    def __init__(self, grid):
        self.vals = {}
        self.adj = {}
        for n in grid.nodes:
            self.vals[n.id] = list(n.sig.values)
            self.adj[n.id] = [None] * n.sig.arity
        for a, b in grid.edges:
            self.adj[a[0]][a[1]] = b
            self.adj[b[0]][b[1]] = a
        ints = [n for n in self.vals if isinstance(n, int)]
        self.fresh = max(ints, default=-1) + 1

    def arity(self, v):
        return len(self.adj[v])

    def new_id(self):
        self.fresh += 1
        return self.fresh - 1

    def relink(self, v, p, end):
        self.adj[v][p] = end
        self.adj[end[0]][end[1]] = (v, p)

    def remove(self, v):
        del self.vals[v]
        del self.adj[v]

    def snapshot(self):
        nodes = [Node(v, Signature._raw(vals, len(self.adj[v])))
                 for v, vals in self.vals.items()]
        edges, seen = [], set()
        for v, ports in self.adj.items():
            for p, end in enumerate(ports):
                if (v, p) not in seen:
                    seen.add(end)
                    edges.append(((v, p), end))
        return SignatureGrid(nodes, edges)


def _split_ternary(work, v, trace):
    f = Signature._raw(work.vals[v], 3)
    dup = dup_decompose(f)
    if dup is None:
        raise NotDupGrid(f"ternary node {v!r} is not in DUP")
    sigma = dup.sigma
    pivot, a, b = sigma.index(1), sigma.index(2), sigma.index(3)
    old = list(work.adj[v])
    u = work.new_id()
    new_end = {pivot: (u, 0), a: (v, 0), b: (v, 1)}
    work.vals[v] = list(dup.f0.values)
    work.adj[v] = [None, None]
    work.vals[u] = list(dup.u.values)
    work.adj[u] = [None]
    for p in (pivot, a, b):
        w, q = old[p]
        target = new_end[q] if w == v else (w, q)
        here = new_end[p]
        work.adj[here[0]][here[1]] = target
        if w != v:
            work.adj[w][q] = here
    trace.steps.append(ReductionStep(CASE3, (v, u), None, f"sigma={sigma}"))


def _contract(work, v, pv, w, pw):
    """Merge ``w`` into ``v`` along the edge ``(v,pv)-(w,pw)``; returns the new label.

    Remaining ports of ``v`` come first, then those of ``w``.
    """
    kv, kw = work.arity(v), work.arity(w)
    fv, fw = work.vals[v], work.vals[w]
    rest_v = [p for p in range(kv) if p != pv]
    rest_w = [p for p in range(kw) if p != pw]
    out = []
    n_rest = len(rest_v) + len(rest_w)
    for idx in range(1 << n_rest):
        bits = [(idx >> (n_rest - 1 - t)) & 1 for t in range(n_rest)]
        acc = ZERO
        for b in (0, 1):
            iv = 0
            it = iter(bits[:len(rest_v)])
            for p in range(kv):
                iv = (iv << 1) | (b if p == pv else next(it))
            iw = 0
            it = iter(bits[len(rest_v):])
            for p in range(kw):
                iw = (iw << 1) | (b if p == pw else next(it))
            x, y = fv[iv], fw[iw]
            if not (x.is_zero() or y.is_zero()):
                acc = acc + x * y
        out.append(acc)
    ends = [work.adj[v][p] for p in rest_v] + [work.adj[w][p] for p in rest_w]
    # endpoints still pointing into v or w must be renumbered to the merged ports
    local = {(v, p): (v, t) for t, p in enumerate(rest_v)}
    local.update({(w, p): (v, len(rest_v) + t) for t, p in enumerate(rest_w)})
    work.remove(w)
    work.vals[v] = out
    work.adj[v] = [None] * n_rest
    for t, end in enumerate(ends):
        end = local.get(end, end)
        work.relink(v, t, end)
    return out


def eval_dup_grid(grid, observer=None):
    """Exact Holant of ``grid`` and the reduction trace.

    Every node must have arity at most 3 and every ternary label must factor
    through DUP.  ``observer(step, residual_grid)`` is called after each step
    when given; it is meant for small-grid checks only.
    """
    for n in grid.nodes:
        if n.sig.arity > 3:
            raise DegreeTooHigh(f"node {n.id!r} has degree {n.sig.arity}")
    work = _Work(grid)
    trace = ReductionTrace()

    def emit():
        if observer is not None:
            observer(trace.steps[-1], work.snapshot())

    for v in sorted(n.id for n in grid.nodes if n.sig.arity == 3):
        _split_ternary(work, v, trace)
        emit()

    value = ONE
    heap = list(work.vals)
    heapq.heapify(heap)
    while heap:
        v = heap[0]
        if v not in work.vals:
            heapq.heappop(heap)
            continue
        k = work.arity(v)
        if k == 0:
            c = work.vals[v][0]
            work.remove(v)
            trace.steps.append(ReductionStep(CASE1, (v,), c, "isolated"))
        elif k == 2 and work.adj[v][0] == (v, 1):
            c = work.vals[v][0] + work.vals[v][3]
            work.remove(v)
            trace.steps.append(ReductionStep(CASE2, (v,), c, "trace"))
        else:
            w, q = work.adj[v][0]
            if k == 1 and work.arity(w) == 1:
                fv, fw = work.vals[v], work.vals[w]
                c = fv[0] * fw[0] + fv[1] * fw[1]
                work.remove(v)
                work.remove(w)
                trace.steps.append(ReductionStep(CASE1, (v, w), c, "dumbbell"))
            else:
                _contract(work, v, 0, w, q)
                trace.steps.append(ReductionStep(CASE2, (v, w), None, "contract"))
        if trace.steps[-1].factor is not None:
            value = value * trace.steps[-1].factor
        emit()
    return value, trace


__all__ = ["eval_dup_grid", "ReductionTrace", "ReductionStep", "CASE1", "CASE2", "CASE3"]
