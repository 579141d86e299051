"""Potential function, criticality tests, and the density bound.

The potential of a signed graph is 3|V| - 2|E|.  A graph is critical
for a clique target when it is not colorable but every proper subgraph
is; for that it suffices to check single-edge deletions and the absence
of isolated vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .clique import _params
from .core import SignedMultigraph
from .solver import NegativeLoopError, is_colorable


def potential(g: SignedMultigraph) -> int:
    """3|V| - 2|E|; lower means denser."""
    return 3 * g.n - 2 * g.m


def _without_edge(g: SignedMultigraph, idx: int) -> SignedMultigraph:
    return SignedMultigraph(g.n, g.edges[:idx] + g.edges[idx + 1 :])


def _isolated(g: SignedMultigraph) -> list[int]:
    touched = set()
    for (u, v, _) in g.edges:
        touched.add(u)
        touched.add(v)
    return [v for v in range(g.n) if v not in touched]


def is_critical(g: SignedMultigraph, params, *, deadline_s: Optional[float] = None) -> bool:
    """Not colorable, but colorable after deleting any single edge.

    Isolated vertices disqualify: dropping one is a proper subgraph with
    the same edges.  Single-edge deletions cover all other proper
    subgraphs because colorability is monotone under taking subgraphs.
    """
    pr = _params(params)
    if g.has_negative_loop:
        raise NegativeLoopError("criticality is undefined with a negative loop")
    if _isolated(g) and g.m > 0:
        return False
    if g.m == 0:
        return False
    if is_colorable(g, pr, deadline_s=deadline_s):
        return False
    return all(
        is_colorable(_without_edge(g, i), pr, deadline_s=deadline_s) for i in range(g.m)
    )


def critical_subgraph(g: SignedMultigraph, params, *, deadline_s: Optional[float] = None) -> SignedMultigraph:
    """Edge-minimal non-colorable subgraph, isolated vertices dropped.

    Greedy deterministic pass: edges are probed in input order and an
    edge is deleted whenever the remainder is still non-colorable.
    Requires a non-colorable input.
    """
    pr = _params(params)
    if is_colorable(g, pr, deadline_s=deadline_s):
        raise ValueError("graph is colorable; no critical subgraph exists")
    cur = g
    idx = 0
    while idx < cur.m:
        candidate = _without_edge(cur, idx)
        if not is_colorable(candidate, pr, deadline_s=deadline_s):
            cur = candidate
        else:
            idx += 1
    iso = set(_isolated(cur))
    if not iso:
        return cur
    keep = [v for v in range(cur.n) if v not in iso]
    remap = {v: i for i, v in enumerate(keep)}
    return SignedMultigraph(
        len(keep), tuple((remap[u], remap[v], s) for (u, v, s) in cur.edges)
    )


@dataclass(frozen=True)
class DensityVerdict:
    passes: bool
    lhs: int           # |E|
    rhs_num: int       # 3|V| + 1, compared as 2|E| >= 3|V| + 1

    def to_json(self) -> dict:
        return {"passes": self.passes, "edges": self.lhs, "three_v_plus_1_halves": self.rhs_num / 2}


def density_check(g: SignedMultigraph) -> DensityVerdict:
    """Exact integer check of |E| >= (3|V| + 1) / 2."""
    return DensityVerdict(passes=2 * g.m >= 3 * g.n + 1, lhs=g.m, rhs_num=3 * g.n + 1)


def is_two_connected(g: SignedMultigraph) -> bool:
    """2-connectedness of the underlying multigraph (n >= 2, connected,
    no cut vertex); a digon on two vertices counts as 2-connected."""
    if g.n < 2:
        return False

    def connected_without(skip: Optional[int]) -> bool:
        verts = [v for v in range(g.n) if v != skip]
        if not verts:
            return True
        adj = {v: set() for v in verts}
        for (u, v, _) in g.edges:
            if u != skip and v != skip and u != v:
                adj[u].add(v)
                adj[v].add(u)
        seen = {verts[0]}
        stack = [verts[0]]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(verts)

    if not connected_without(None):
        return False
    return all(connected_without(v) for v in range(g.n))
