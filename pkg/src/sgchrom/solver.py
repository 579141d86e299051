"""Edge-sign-preserving homomorphisms into signed circular cliques.

``find_sp_hom`` decides colorability by complete backtracking search
with forward checking; ``chi_c`` walks candidate fractions p/q in
strictly increasing order and returns the first colorable one together
with a witness and the list of rejected fractions, so the answer is the
minimum within the denominator budget.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from .clique import CliqueParams, _params, adjacency, neighbor_mask
from .core import SignedMultigraph


class NegativeLoopError(ValueError):
    """Coloring was requested for a graph with a negative loop."""


class SearchDeadlineExceeded(RuntimeError):
    """Cooperative deadline hit before the search finished."""


class EnumerationTruncated(RuntimeError):
    """enumerate_homs hit its cap; the stream is incomplete."""

    def __init__(self, cap: int):
        super().__init__(f"enumeration truncated at cap={cap}")
        self.cap = cap


class CeilingExhausted(RuntimeError):
    """No candidate fraction up to the ceiling was colorable."""

    def __init__(self, ceiling: Fraction, q_max: int):
        super().__init__(f"no colorable fraction <= {ceiling} with q <= {q_max}")
        self.ceiling = ceiling
        self.q_max = q_max


@dataclass(frozen=True)
class Homomorphism:
    """A vertex -> color map into the clique with the given parameters."""

    params: CliqueParams
    assignment: tuple[int, ...]

    def __call__(self, v: int) -> int:
        return self.assignment[v]


def verify_hom(g: SignedMultigraph, h: Homomorphism) -> bool:
    """Check every edge constraint, loops included."""
    if len(h.assignment) != g.n:
        return False
    if any(not (0 <= c < h.params.p) for c in h.assignment):
        return False
    for (u, v, s) in g.edges:
        if s not in adjacency(h.params, h.assignment[u], h.assignment[v]):
            return False
    return True


class _Deadline:
    __slots__ = ("t_end", "nodes")

    def __init__(self, seconds: Optional[float]):
        self.t_end = None if seconds is None else time.monotonic() + seconds
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.t_end is not None and self.nodes % 2048 == 0:
            if time.monotonic() > self.t_end:
                raise SearchDeadlineExceeded()


def _pair_tables(g: SignedMultigraph, pr: CliqueParams):
    """Per ordered adjacent pair (u, v): color-of-u -> allowed mask for v.

    Parallel edges intersect their constraints, so a digon yields the
    intersection of both sign neighborhoods.  Positive loops are always
    satisfiable and are dropped here (negative loops must be rejected by
    the caller).
    """
    full = (1 << pr.p) - 1
    tables: dict[tuple[int, int], list[int]] = {}
    for (u, v, s) in g.edges:
        if u == v:
            continue
        for (a, b) in ((u, v), (v, u)):
            tab = tables.get((a, b))
            if tab is None:
                tab = [full] * pr.p
                tables[(a, b)] = tab
            for c in range(pr.p):
                tab[c] &= neighbor_mask(pr, c, s)
    return tables


def _static_order(g: SignedMultigraph, vertices: Sequence[int]) -> list[int]:
    """Static search order: start at a maximum-degree vertex, then greedily
    take the vertex with the most already-ordered neighbors (ties: higher
    degree, then lower index).  Deterministic, and it keeps forward
    checking constantly engaged on gadget-like graphs."""
    deg = {v: g.degree(v) for v in vertices}
    nbrs = {v: [u for u in g.neighbors(v) if u in deg] for v in vertices}
    order: list[int] = []
    placed: set[int] = set()
    rest = set(vertices)
    while rest:
        best = max(rest, key=lambda v: (sum(1 for u in nbrs[v] if u in placed), deg[v], -v))
        order.append(best)
        placed.add(best)
        rest.discard(best)
    return order


def _components(g: SignedMultigraph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for root in range(g.n):
        if seen[root]:
            continue
        comp = [root]
        seen[root] = True
        stack = [root]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comps.append(comp)
    return comps


def _search(order, domains, tables, deadline, pr) -> Optional[list[int]]:
    """Forward checking with conflict-directed backjumping.

    Plain chronological backtracking re-enumerates the internal solutions
    of already-satisfied private substructures (edge gadgets, pendant
    trees) while a later part of the graph is the real culprit, which is
    exponentially wasteful on gadget-replaced graphs.  Backjumping keeps
    the search complete and deterministic: on a wipeout the conflict is
    charged to the depths that pruned the wiped vertex, and an exhausted
    vertex jumps straight to the deepest depth in its conflict set.

    ``domains`` is mutated during the search.
    """
    n = len(order)
    pos_in_order = {v: i for i, v in enumerate(order)}
    later = [[] for _ in range(n)]
    for i, v in enumerate(order):
        for (a, b) in tables:
            if a == v and pos_in_order[b] > i:
                later[i].append((pos_in_order[b], b, tables[(a, b)]))
    assignment = [-1] * n
    # past_fc[j]: depths whose assignments pruned order[j]'s domain.
    past_fc: list[set[int]] = [set() for _ in range(n)]
    conf_set: list[set[int]] = [set() for _ in range(n)]
    JUMP_DONE = n + 1

    def assign(i: int) -> int:
        """Returns JUMP_DONE on success, else the depth to jump back to."""
        if i == n:
            return JUMP_DONE
        v = order[i]
        dom = domains[v]
        while dom:
            bit = dom & -dom
            dom ^= bit
            c = bit.bit_length() - 1
            deadline.tick()
            trail = []
            wiped = -1
            for (j, w, tab) in later[i]:
                old = domains[w]
                new = old & tab[c]
                if new != old:
                    trail.append((j, w, old))
                    domains[w] = new
                    past_fc[j].add(i)
                    if new == 0:
                        wiped = j
                        break
            if wiped >= 0:
                conf_set[i] |= past_fc[wiped] - {i}
            else:
                assignment[i] = c
                target = assign(i + 1)
                if target == JUMP_DONE:
                    return JUMP_DONE
                assignment[i] = -1
                if target < i:
                    # Being jumped over: undo and reset this level's state.
                    for (j, w, old) in trail:
                        domains[w] = old
                        past_fc[j].discard(i)
                    conf_set[i] = set()
                    return target
            for (j, w, old) in trail:
                domains[w] = old
                past_fc[j].discard(i)
        # Domain exhausted: jump to the deepest depth that constrained us.
        conflicts = conf_set[i] | past_fc[i]
        if not conflicts:
            return -1
        target = max(conflicts)
        conf_set[target] |= conflicts - {target}
        conf_set[i] = set()
        return target

    result = assign(0)
    if result == JUMP_DONE:
        return [assignment[i] for i in range(n)]
    return None


def find_sp_hom(
    g: SignedMultigraph,
    params,
    *,
    domains: Optional[Sequence[int]] = None,
    deadline_s: Optional[float] = None,
) -> Optional[Homomorphism]:
    """Find one edge-sign-preserving homomorphism into the clique, or None.

    The search is complete: a None answer is a proof of non-colorability.
    ``domains`` optionally restricts each vertex to a bitmask of allowed
    colors (used by list coloring).  Without that restriction the first
    branched vertex of every connected component is pinned to color 0,
    which is sound because the clique is vertex-transitive under color
    rotation.
    """
    pr = _params(params)
    if g.has_negative_loop:
        raise NegativeLoopError("graph has a negative loop; no circular coloring exists")
    full = (1 << pr.p) - 1
    if domains is None:
        doms = [full] * g.n
        pin = True
    else:
        if len(domains) != g.n:
            raise ValueError("need one domain mask per vertex")
        doms = [int(d) & full for d in domains]
        pin = False
    tables = _pair_tables(g, pr)
    deadline = _Deadline(deadline_s)
    result = [0] * g.n
    for comp in _components(g):
        order = _static_order(g, comp)
        if pin:
            doms[order[0]] = 1  # color 0 only; rotation symmetry
        sol = _search(order, doms, tables, deadline, pr)
        if sol is None:
            return None
        for v, c in zip(order, sol):
            result[v] = c
    return Homomorphism(pr, tuple(result))


def is_colorable(g: SignedMultigraph, params, *, deadline_s: Optional[float] = None) -> bool:
    return find_sp_hom(g, params, deadline_s=deadline_s) is not None


def enumerate_homs(
    g: SignedMultigraph, params, *, cap: Optional[int] = None
) -> Iterator[Homomorphism]:
    """Yield every sign-preserving homomorphism exactly once.

    Assignments come out in lexicographic order (vertex 0 first).  No
    symmetry breaking is applied.  If ``cap`` homomorphisms have been
    yielded and more exist, :class:`EnumerationTruncated` is raised.
    """
    pr = _params(params)
    if g.has_negative_loop:
        return
    full = (1 << pr.p) - 1
    tables = _pair_tables(g, pr)
    later = [
        [(w, tables[(v, w)]) for w in range(v + 1, g.n) if (v, w) in tables]
        for v in range(g.n)
    ]
    doms = [full] * g.n
    assignment = [0] * g.n
    count = 0

    def emit(v: int):
        nonlocal count
        if v == g.n:
            if cap is not None and count >= cap:
                raise EnumerationTruncated(cap)
            count += 1
            yield Homomorphism(pr, tuple(assignment))
            return
        dom = doms[v]
        while dom:
            bit = dom & -dom
            dom ^= bit
            c = bit.bit_length() - 1
            trail = []
            dead = False
            for (w, tab) in later[v]:
                old = doms[w]
                new = old & tab[c]
                if new != old:
                    trail.append((w, old))
                    doms[w] = new
                    if new == 0:
                        dead = True
                        break
            if not dead:
                assignment[v] = c
                yield from emit(v + 1)
            for (w, old) in trail:
                doms[w] = old
        return

    yield from emit(0)


# -- exact circular chromatic number ---------------------------------------


def candidate_params(q_max: int, ceiling: Fraction) -> list[CliqueParams]:
    """All candidate cliques with q <= q_max and value <= ceiling, one per
    rational value (the representative with minimal even p), sorted by
    strictly increasing value."""
    best: dict[Fraction, CliqueParams] = {}
    for q in range(1, q_max + 1):
        p = 2 * q
        while Fraction(p, q) <= ceiling:
            val = Fraction(p, q)
            cur = best.get(val)
            if cur is None or p < cur.p:
                best[val] = CliqueParams(p, q)
            p += 2
    return [best[v] for v in sorted(best)]


@dataclass
class ChiCResult:
    """Outcome of a chi_c computation: a claim within the stated budget."""

    value: Fraction
    params: CliqueParams
    witness: Homomorphism
    rejected: list[CliqueParams]
    q_max: int
    ceiling: Fraction
    elapsed_s: float = 0.0

    def to_json(self) -> dict:
        return {
            "chi_c": {"num": self.value.numerator, "den": self.value.denominator},
            "params": {"p": self.params.p, "q": self.params.q},
            "witness": list(self.witness.assignment),
            "rejected": [{"p": c.p, "q": c.q} for c in self.rejected],
            "q_max": self.q_max,
            "ceiling": str(self.ceiling),
            "elapsed_ms": round(self.elapsed_s * 1000.0, 3),
        }


def chi_c(
    g: SignedMultigraph,
    q_max: Optional[int] = None,
    *,
    ceiling: Optional[Fraction] = None,
    deadline_s: Optional[float] = None,
) -> ChiCResult:
    """Minimum colorable fraction p/q with q <= q_max (default |V|).

    Candidates are visited in strictly increasing rational order, each
    value once, so the first success is the minimum within the budget;
    the result records every rejected fraction.  The default ceiling is
    2 * max(2, max degree), loops not counted.
    """
    if g.n == 0:
        raise ValueError("chi_c of the empty graph is undefined")
    if g.has_negative_loop:
        raise NegativeLoopError("graph has a negative loop; chi_c is undefined")
    if q_max is None:
        q_max = g.n
    if ceiling is None:
        loopless_deg = max(
            (sum(1 for (a, b, _) in g.edges if a != b and v in (a, b)) for v in range(g.n)),
            default=0,
        )
        ceiling = Fraction(2 * max(2, loopless_deg))
    t0 = time.monotonic()
    remaining = None if deadline_s is None else deadline_s
    rejected: list[CliqueParams] = []
    for cand in candidate_params(q_max, ceiling):
        if deadline_s is not None:
            remaining = deadline_s - (time.monotonic() - t0)
            if remaining <= 0:
                raise SearchDeadlineExceeded()
        hom = find_sp_hom(g, cand, deadline_s=remaining)
        if hom is not None:
            return ChiCResult(
                value=Fraction(cand.p, cand.q),
                params=cand,
                witness=hom,
                rejected=rejected,
                q_max=q_max,
                ceiling=ceiling,
                elapsed_s=time.monotonic() - t0,
            )
        rejected.append(cand)
    raise CeilingExhausted(ceiling, q_max)
