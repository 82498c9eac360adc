"""Signature grids, #CSP instances, and the two brute-force evaluators.

A grid node carries a signature and, for bipartite grids, a side.  Ports of
a node are numbered ``0 .. arity-1`` and port ``p`` feeds variable ``x_{p+1}``
of the label.  An edge joins two endpoints ``(node_id, port)``; a self-loop
joins two ports of one node, and both ports then read the same edge bit.

#CSP variables are numbered from 0.
"""

from collections import Counter
from dataclasses import dataclass
from itertools import product

from .errors import (MalformedGrid, TooManyEdges, TooManyVariables,
                     UnusedVariable)
from .scalar import ONE, ZERO
from .signature import Signature, as_signature, make_named

LEFT = "L"
RIGHT = "R"
MAX_EDGES = 24
MAX_VARIABLES = 24


@dataclass(frozen=True)
class Node:
    id: int
    sig: Signature
    side: object = None     # LEFT, RIGHT or None


def _endpoint(e):
    try:
        nid, port = e
    except (TypeError, ValueError):
        raise MalformedGrid(f"bad endpoint {e!r}") from None
    return (nid, int(port))


class SignatureGrid:
    """Immutable labelled multigraph; construction validates the port cover."""

    __slots__ = ("nodes", "edges", "_by_id")

    def __init__(self, nodes, edges):
        self.nodes = tuple(nodes)
        self.edges = tuple((_endpoint(a), _endpoint(b)) for a, b in edges)
        self._by_id = {}
        for n in self.nodes:
            if not isinstance(n, Node):
                raise MalformedGrid(f"not a Node: {n!r}")
            if n.id in self._by_id:
                raise MalformedGrid(f"duplicate node id {n.id!r}")
            if n.side not in (LEFT, RIGHT, None):
                raise MalformedGrid(f"node {n.id!r} has unknown side {n.side!r}")
            self._by_id[n.id] = n
        seen = set()
        for edge in self.edges:
            for nid, port in edge:
                node = self._by_id.get(nid)
                if node is None:
                    raise MalformedGrid(f"edge {edge} refers to unknown node {nid!r}")
                if not 0 <= port < node.sig.arity:
                    raise MalformedGrid(f"node {nid!r} has no port {port}")
                if (nid, port) in seen:
                    raise MalformedGrid(f"port {port} of node {nid!r} used twice")
                seen.add((nid, port))
        for n in self.nodes:
            for p in range(n.sig.arity):
                if (n.id, p) not in seen:
                    raise MalformedGrid(f"port {p} of node {n.id!r} is dangling")

    def node(self, nid):
        try:
            return self._by_id[nid]
        except KeyError:
            raise MalformedGrid(f"no node with id {nid!r}") from None

    def __contains__(self, nid):
        return nid in self._by_id

    def next_id(self):
        ints = [n.id for n in self.nodes if isinstance(n.id, int)]
        return max(ints, default=-1) + 1

    def edge_at(self, nid, port):
        """Index of the edge using ``(nid, port)`` and the opposite endpoint."""
        for k, (a, b) in enumerate(self.edges):
            if a == (nid, port):
                return k, b
            if b == (nid, port):
                return k, a
        raise MalformedGrid(f"port {port} of node {nid!r} is not on any edge")

    def is_bipartite(self):
        if any(n.side is None for n in self.nodes):
            return False
        return all(self._by_id[a[0]].side != self._by_id[b[0]].side
                   for a, b in self.edges)

    def __eq__(self, other):
        if not isinstance(other, SignatureGrid):
            return NotImplemented
        return (self.nodes == other.nodes
                and sorted(map(sorted, self.edges)) == sorted(map(sorted, other.edges)))

    __hash__ = None

    def __repr__(self):
        return f"SignatureGrid({len(self.nodes)} nodes, {len(self.edges)} edges)"


def holant_bruteforce(g, max_edges=MAX_EDGES):
    """Sum over all ``2**|E|`` edge assignments of the product of node values."""
    m = len(g.edges)
    if m > max_edges:
        raise TooManyEdges(f"{m} edges exceeds the brute-force cap of {max_edges}")
    port_edge = {}
    for k, (a, b) in enumerate(g.edges):
        port_edge[a] = k
        port_edge[b] = k
    # for each node, the bit shifts of its ports' edges inside an assignment mask
    layout = [(n.sig.values, [port_edge[(n.id, p)] for p in range(n.sig.arity)])
              for n in g.nodes]
    total = ZERO
    for mask in range(1 << m):
        prod = ONE
        for vals, edges in layout:
            idx = 0
            for e in edges:
                idx = (idx << 1) | ((mask >> e) & 1)
            v = vals[idx]
            if v.is_zero():
                prod = ZERO
                break
            prod = prod * v
        if not prod.is_zero():
            total = total + prod
    return total


@dataclass(frozen=True)
class CspInstance:
    var_count: int
    applications: tuple     # of (Signature, tuple of variable indices)

    def __post_init__(self):
        apps = []
        for sig, xs in self.applications:
            sig = as_signature(sig)
            xs = tuple(int(x) for x in xs)
            if len(xs) != sig.arity:
                raise MalformedGrid(f"signature of arity {sig.arity} applied to {len(xs)} variables")
            for x in xs:
                if not 0 <= x < self.var_count:
                    raise MalformedGrid(f"variable {x} outside [0, {self.var_count})")
            apps.append((sig, xs))
        object.__setattr__(self, "applications", tuple(apps))


def occurrences(inst):
    c = Counter()
    for _, xs in inst.applications:
        c.update(xs)
    return c


def degree(inst):
    """Most occurrences of a single variable, repeats within one application included."""
    return max(occurrences(inst).values(), default=0)


def csp_to_grid(inst):
    """Bipartite grid: variable ``x`` becomes Left node ``x`` labelled
    ``EQ_{d(x)}``, application ``j`` becomes Right node ``n + j``."""
    n = inst.var_count
    occ = occurrences(inst)
    unused = [x for x in range(n) if occ[x] == 0]
    if unused:
        raise UnusedVariable(f"variables never used: {unused}")
    nodes = [Node(x, make_named(f"EQ_{occ[x]}"), LEFT) for x in range(n)]
    next_port = [0] * n
    edges = []
    for j, (sig, xs) in enumerate(inst.applications):
        nodes.append(Node(n + j, sig, RIGHT))
        for p, x in enumerate(xs):
            edges.append(((x, next_port[x]), (n + j, p)))
            next_port[x] += 1
    return SignatureGrid(nodes, edges)


def csp_direct_sum(inst, max_variables=MAX_VARIABLES):
    n = inst.var_count
    if n > max_variables:
        raise TooManyVariables(f"{n} variables exceeds the cap of {max_variables}")
    total = ZERO
    for xs in product((0, 1), repeat=n):
        prod = ONE
        for sig, vs in inst.applications:
            prod = prod * sig(*(xs[v] for v in vs))
            if prod.is_zero():
                break
        total = total + prod
    return total


__all__ = [
    "LEFT", "RIGHT", "MAX_EDGES", "MAX_VARIABLES", "Node", "SignatureGrid",
    "CspInstance", "holant_bruteforce", "csp_to_grid", "csp_direct_sum",
    "degree", "occurrences",
]
