"""Signed multigraphs: construction, switching, and switching-aware comparison.

A signed multigraph has vertices 0..n-1 and an ordered list of edges
(u, v, sign) with sign +1 or -1.  Loops and parallel edges are
representable; a *digon* is a pair of parallel edges of opposite sign
between the same two vertices.  Switching a vertex set X negates every
edge with exactly one endpoint in X; loop signs are unchanged.

All values are immutable after construction; every operation returns a
new graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

POS = 1
NEG = -1

_SIGN_CHAR = {POS: "+", NEG: "-"}
_CHAR_SIGN = {"+": POS, "-": NEG}


class GraphError(ValueError):
    """Malformed graph input: bad vertex index, bad sign, bad file format."""


def sign_char(s: int) -> str:
    return _SIGN_CHAR[s]


def _check_sign(s: int) -> int:
    if s not in (POS, NEG):
        raise GraphError(f"sign must be +1 or -1, got {s!r}")
    return s


@dataclass(frozen=True)
class SignedMultigraph:
    """Immutable signed multigraph on vertices 0..n-1.

    ``edges`` keeps construction order so that certificates can refer to
    individual parallel edges.  Semantic equality (``__eq__``) compares
    the edge *multiset* with endpoints unordered.
    """

    n: int
    edges: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be nonnegative")
        for (u, v, s) in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u},{v}) out of range for n={self.n}")
            _check_sign(s)

    # -- basic accessors -------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        """Degree counting edge multiplicity; a loop contributes 2."""
        return sum((e[0] == v) + (e[1] == v) for e in self.edges)

    def max_degree(self) -> int:
        return max((self.degree(v) for v in range(self.n)), default=0)

    def pair_signs(self) -> dict[tuple[int, int], tuple[int, ...]]:
        """Sign multiset per unordered non-loop pair, sorted +1 first."""
        out: dict[tuple[int, int], list[int]] = {}
        for (u, v, s) in self.edges:
            if u == v:
                continue
            out.setdefault((min(u, v), max(u, v)), []).append(s)
        return {k: tuple(sorted(v, reverse=True)) for k, v in out.items()}

    def loop_signs(self) -> dict[int, tuple[int, ...]]:
        out: dict[int, list[int]] = {}
        for (u, v, s) in self.edges:
            if u == v:
                out.setdefault(u, []).append(s)
        return {k: tuple(sorted(v, reverse=True)) for k, v in out.items()}

    @property
    def has_loop(self) -> bool:
        return any(u == v for (u, v, _) in self.edges)

    @property
    def has_negative_loop(self) -> bool:
        return any(u == v and s == NEG for (u, v, s) in self.edges)

    @property
    def is_simple(self) -> bool:
        """No loops and at most one edge per unordered pair."""
        if self.has_loop:
            return False
        return all(len(sig) == 1 for sig in self.pair_signs().values())

    def neighbors(self, v: int) -> list[int]:
        out = set()
        for (a, b, _) in self.edges:
            if a == v and b != v:
                out.add(b)
            elif b == v and a != v:
                out.add(a)
        return sorted(out)

    def _key(self):
        return (self.n, tuple(sorted((min(u, v), max(u, v), s) for (u, v, s) in self.edges)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SignedMultigraph):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        es = ",".join(f"({u},{v},{sign_char(s)})" for (u, v, s) in self.edges)
        return f"SignedMultigraph(n={self.n}, edges=[{es}])"


def make_graph(n: int, edges: Iterable[tuple[int, int, int]], *, dedupe: bool = False) -> SignedMultigraph:
    """Build a signed multigraph, validating indices and signs.

    With ``dedupe=True``, a second parallel edge of the same sign on the
    same unordered pair (or loop) is rejected: the graph classes studied
    here never contain same-sign parallel edges, so a duplicate is
    almost always a transcription error.
    """
    edge_list = tuple((int(u), int(v), _check_sign(int(s))) for (u, v, s) in edges)
    g = SignedMultigraph(n, edge_list)
    if dedupe:
        seen = set()
        for (u, v, s) in edge_list:
            key = (min(u, v), max(u, v), s)
            if key in seen:
                raise GraphError(f"same-sign parallel edge ({u},{v},{sign_char(s)})")
            seen.add(key)
    return g


def switch(g: SignedMultigraph, x: Iterable[int]) -> SignedMultigraph:
    """Negate every edge with exactly one endpoint in ``x``."""
    xs = frozenset(x)
    for v in xs:
        if not (0 <= v < g.n):
            raise GraphError(f"switch set vertex {v} out of range")
    new_edges = tuple(
        (u, v, -s if ((u in xs) != (v in xs)) else s) for (u, v, s) in g.edges
    )
    return SignedMultigraph(g.n, new_edges)


def relabel(g: SignedMultigraph, perm: Sequence[int]) -> SignedMultigraph:
    """Apply the vertex bijection ``perm`` (old index -> new index)."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError("relabel requires a permutation of 0..n-1")
    return SignedMultigraph(g.n, tuple((perm[u], perm[v], s) for (u, v, s) in g.edges))


def cycle_sign(g: SignedMultigraph, walk: Sequence[int]) -> int:
    """Sign of a closed walk given as a sequence of edge indices.

    The edges must chain: consecutive edges share an endpoint and the
    walk returns to its starting vertex.  Edge indices may repeat (it is
    a walk, not a cycle); the sign is the product over the sequence.
    """
    if not walk:
        raise GraphError("empty walk")
    for i in walk:
        if not (0 <= i < g.m):
            raise GraphError(f"edge index {i} out of range")
    first = g.edges[walk[0]]
    for start in {first[0], first[1]}:
        cur = first[1] if start == first[0] else first[0]
        ok = True
        for i in walk[1:]:
            (u, v, _) = g.edges[i]
            if cur == u:
                cur = v
            elif cur == v:
                cur = u
            else:
                ok = False
                break
        if ok and cur == start:
            prod = 1
            for i in walk:
                prod *= g.edges[i][2]
            return prod
    raise GraphError("edge sequence is not a closed walk")


def _flip(sig: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sorted((-s for s in sig), reverse=True))


def _pair_constraints(g1: SignedMultigraph, g2: SignedMultigraph):
    """Per-pair switching constraints between two signatures of one graph.

    Returns a list of (u, v, parity) constraints meaning x_u xor x_v =
    parity, or None if some pair cannot be matched by any switching.
    Digon-like pairs (sign multiset invariant under flipping) impose no
    constraint.
    """
    p1, p2 = g1.pair_signs(), g2.pair_signs()
    if set(p1) != set(p2):
        return None
    constraints = []
    for pair, sig1 in p1.items():
        sig2 = p2[pair]
        same = sig1 == sig2
        flipped = _flip(sig1) == sig2
        if not same and not flipped:
            return None
        if same and flipped:
            continue
        constraints.append((pair[0], pair[1], 0 if same else 1))
    return constraints


def switching_set(g1: SignedMultigraph, g2: SignedMultigraph) -> Optional[frozenset[int]]:
    """A vertex set X with switch(g1, X) sign-equal to g2, or None.

    Both graphs must have the same underlying multigraph (same n, same
    pair multiplicities, same loops).  Loop signs are switching
    invariant and must already agree.
    """
    if g1.n != g2.n:
        raise GraphError("underlying graphs differ: vertex counts")
    if g1.loop_signs() != g2.loop_signs():
        ps1, ps2 = g1.pair_signs(), g2.pair_signs()
        if {k: len(v) for k, v in ps1.items()} != {k: len(v) for k, v in ps2.items()}:
            raise GraphError("underlying graphs differ: edge multiplicities")
        return None
    ps1, ps2 = g1.pair_signs(), g2.pair_signs()
    if {k: len(v) for k, v in ps1.items()} != {k: len(v) for k, v in ps2.items()}:
        raise GraphError("underlying graphs differ: edge multiplicities")
    constraints = _pair_constraints(g1, g2)
    if constraints is None:
        return None
    # 2-color the constraint graph by BFS; roots stay unswitched.
    adj: dict[int, list[tuple[int, int]]] = {v: [] for v in range(g1.n)}
    for (u, v, parity) in constraints:
        adj[u].append((v, parity))
        adj[v].append((u, parity))
    colour = [-1] * g1.n
    for root in range(g1.n):
        if colour[root] != -1:
            continue
        colour[root] = 0
        queue = [root]
        while queue:
            u = queue.pop()
            for (v, parity) in adj[u]:
                want = colour[u] ^ parity
                if colour[v] == -1:
                    colour[v] = want
                    queue.append(v)
                elif colour[v] != want:
                    return None
    return frozenset(v for v in range(g1.n) if colour[v] == 1)


def is_switching_equivalent(g1: SignedMultigraph, g2: SignedMultigraph) -> bool:
    """True iff some switching maps g1's signature to g2's.

    Equivalent to the two signatures having the same set of positive
    cycles; decided in linear time by propagating switch parities over a
    spanning forest instead of comparing cycle sets.
    """
    return switching_set(g1, g2) is not None


def canonical_signature(g: SignedMultigraph) -> SignedMultigraph:
    """Deterministic representative of the switching class of ``g``.

    A BFS spanning forest (rooted at the lowest vertex of each
    component, neighbors visited in increasing order) is switched so
    that every forest pair carries its maximum number of positive signs;
    for single edges that means all forest edges positive.  Within each
    pair the final sign multiset is laid back onto the edge slots with
    positives first, so equal classes give equal edge lists.
    """
    pairs = g.pair_signs()
    # Only pairs whose sign multiset changes under flipping constrain the
    # switch parity; digons are invariant.
    orientable = {p: sig for p, sig in pairs.items() if sig != _flip(sig)}
    adj: dict[int, list[int]] = {v: [] for v in range(g.n)}
    for (a, b) in orientable:
        adj[a].append(b)
        adj[b].append(a)
    for v in adj:
        adj[v].sort()
    parity = [0] * g.n
    seen = [False] * g.n
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        queue = [root]
        while queue:
            u = queue.pop(0)
            for w in adj[u]:
                if seen[w]:
                    continue
                seen[w] = True
                sig = orientable[(min(u, w), max(u, w))]
                # Canonical orientation of this pair: the flip with more
                # positives (never a tie on orientable pairs).  The pair
                # ends up flipped iff parity[u] != parity[w].
                flip_needed = 1 if sum(sig) < sum(_flip(sig)) else 0
                parity[w] = parity[u] ^ flip_needed
                queue.append(w)
    switched = switch(g, [v for v in range(g.n) if parity[v]])
    # Redistribute pair signs onto slots, positives first, for stable output.
    remaining = {p: list(sig) for p, sig in switched.pair_signs().items()}
    new_edges = []
    for (u, v, s) in switched.edges:
        if u == v:
            new_edges.append((u, v, s))
        else:
            pool = remaining[(min(u, v), max(u, v))]
            new_edges.append((u, v, pool.pop(0)))
    return SignedMultigraph(g.n, tuple(new_edges))


# -- switching isomorphism ----------------------------------------------


def _vertex_profile(g: SignedMultigraph):
    """Per-vertex switching-invariant profile used for pruning."""
    pairs = g.pair_signs()
    loops = g.loop_signs()
    prof = []
    for v in range(g.n):
        mults = sorted(len(sig) for p, sig in pairs.items() if v in p)
        prof.append((g.degree(v), tuple(mults), loops.get(v, ())))
    return prof


def is_switching_isomorphic(g: SignedMultigraph, h: SignedMultigraph, *, max_n: int = 12) -> bool:
    """True iff some vertex bijection plus switching maps g onto h.

    Brute-force search over bijections, pruned by switching-invariant
    vertex profiles (degree, incident multiplicities, loop signs) and by
    incremental underlying-adjacency consistency; candidate bijections
    are then checked with :func:`is_switching_equivalent`.  Intended for
    gadget-sized graphs; refuses n > ``max_n``.
    """
    if g.n != h.n or g.m != h.m:
        return False
    if g.n > max_n:
        raise GraphError(f"is_switching_isomorphic limited to n <= {max_n}")
    pg, ph = _vertex_profile(g), _vertex_profile(h)
    if sorted(pg) != sorted(ph):
        return False
    gp, hp = g.pair_signs(), h.pair_signs()
    gmult = {p: len(s) for p, s in gp.items()}
    hmult = {p: len(s) for p, s in hp.items()}

    # Map vertices in an order that keeps the partial map connected when
    # possible, so adjacency mismatches surface early.
    order: list[int] = []
    placed = set()
    while len(order) < g.n:
        best = None
        for v in range(g.n):
            if v in placed:
                continue
            attached = sum(1 for u in g.neighbors(v) if u in placed)
            key = (attached, pg[v][0], -v)
            if best is None or key > best[0]:
                best = (key, v)
        order.append(best[1])
        placed.add(best[1])

    mapping = [-1] * g.n
    used = [False] * h.n

    def extend(i: int) -> bool:
        if i == g.n:
            return is_switching_equivalent(relabel(g, mapping), h)
        v = order[i]
        for w in range(h.n):
            if used[w] or pg[v] != ph[w]:
                continue
            ok = True
            for u in order[:i]:
                a = (min(v, u), max(v, u))
                b = (min(w, mapping[u]), max(w, mapping[u]))
                if gmult.get(a, 0) != hmult.get(b, 0):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used[w] = True
            if extend(i + 1):
                return True
            mapping[v] = -1
            used[w] = False
        return False

    return extend(0)


def contains_switching_subgraph(
    g: SignedMultigraph, h: SignedMultigraph
) -> Optional[tuple[tuple[int, ...], frozenset[int]]]:
    """Find h inside g up to switching.

    Returns (phi, X) where phi is an injective vertex map and X a switch
    set of g such that every edge of h appears in switch(g, X) under phi
    with matching sign, or None.  h must be small (<= 6 vertices); g may
    be large - the search walks g's adjacency, so it stays cheap on
    sparse graphs.
    """
    if h.n > 6:
        raise GraphError("subgraph pattern limited to 6 vertices")
    if h.n > g.n or h.m > g.m:
        return None
    hp = h.pair_signs()
    hloops = h.loop_signs()
    gp = g.pair_signs()
    gloops = g.loop_signs()
    gmult = {p: len(s) for p, s in gp.items()}

    # Order h's vertices so each one (after the first of its component)
    # attaches to an earlier vertex.
    order: list[int] = []
    placed: set[int] = set()
    while len(order) < h.n:
        nxt = None
        for v in range(h.n):
            if v in placed:
                continue
            if any(u in placed for u in h.neighbors(v)):
                nxt = v
                break
        if nxt is None:
            nxt = min(set(range(h.n)) - placed)
        order.append(nxt)
        placed.add(nxt)

    hdeg = [h.degree(v) for v in range(h.n)]
    gdeg = [g.degree(v) for v in range(g.n)]
    phi = [-1] * h.n
    used = [False] * g.n

    def signs_fit(hv: int, gv: int) -> bool:
        for lv, sig in hloops.items():
            if lv == hv:
                have = gloops.get(gv, ())
                for s in set(sig):
                    if sig.count(s) > have.count(s):
                        return False
        return True

    def pair_ok(a: tuple[int, ...], b_pair) -> set[int]:
        """Switch parities f such that flipping b's multiset by f covers a."""
        out = set()
        for f in (0, 1):
            bb = b_pair if f == 0 else _flip(b_pair)
            if all(a.count(s) <= bb.count(s) for s in set(a)):
                out.add(f)
        return out

    def solve_parities() -> Optional[frozenset[int]]:
        # x_u xor x_v constraints over h's vertices; free vertices unswitched.
        cons = []
        for (a, b), sig in hp.items():
            gpair = (min(phi[a], phi[b]), max(phi[a], phi[b]))
            fits = pair_ok(sig, gp[gpair])
            if not fits:
                return None
            if fits == {0, 1}:
                continue
            cons.append((a, b, fits.pop()))
        colour = [-1] * h.n
        adj: dict[int, list[tuple[int, int]]] = {v: [] for v in range(h.n)}
        for (u, v, f) in cons:
            adj[u].append((v, f))
            adj[v].append((u, f))
        for root in range(h.n):
            if colour[root] != -1:
                continue
            colour[root] = 0
            stack = [root]
            while stack:
                u = stack.pop()
                for (v, f) in adj[u]:
                    want = colour[u] ^ f
                    if colour[v] == -1:
                        colour[v] = want
                        stack.append(v)
                    elif colour[v] != want:
                        return None
        return frozenset(phi[v] for v in range(h.n) if colour[v] == 1)

    def candidates(hv: int, depth: int):
        anchors = [u for u in order[:depth] if (min(u, hv), max(u, hv)) in hp]
        if anchors:
            base = phi[anchors[0]]
            return g.neighbors(base)
        return range(g.n)

    def extend(depth: int) -> Optional[tuple[tuple[int, ...], frozenset[int]]]:
        if depth == h.n:
            x = solve_parities()
            if x is None:
                return None
            return (tuple(phi), x)
        hv = order[depth]
        for gv in candidates(hv, depth):
            if used[gv] or gdeg[gv] < hdeg[hv] or not signs_fit(hv, gv):
                continue
            ok = True
            for u in order[:depth]:
                need = len(hp.get((min(u, hv), max(u, hv)), ()))
                have = gmult.get((min(phi[u], gv), max(phi[u], gv)), 0)
                if have < need:
                    ok = False
                    break
            if not ok:
                continue
            phi[hv] = gv
            used[gv] = True
            found = extend(depth + 1)
            if found is not None:
                return found
            phi[hv] = -1
            used[gv] = False
        return None

    return extend(0)


# -- text interchange format ----------------------------------------------


def parse_graph_text(text: str) -> SignedMultigraph:
    """Parse the text interchange format.

    Line 1: ``n m``; then m lines ``u v s`` with s one of ``+``/``-``.
    ``#`` starts a comment; blank lines are skipped.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line))
    if not rows:
        raise GraphError("empty graph file")
    lineno, header = rows[0]
    parts = header.split()
    if len(parts) != 2:
        raise GraphError(f"line {lineno}: expected 'n m'")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphError(f"line {lineno}: expected integers 'n m'") from None
    if len(rows) - 1 != m:
        raise GraphError(f"expected {m} edge lines, found {len(rows) - 1}")
    edges = []
    for lineno, line in rows[1:]:
        parts = line.split()
        if len(parts) != 3 or parts[2] not in _CHAR_SIGN:
            raise GraphError(f"line {lineno}: expected 'u v +|-'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {lineno}: bad vertex index") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"line {lineno}: vertex out of range")
        edges.append((u, v, _CHAR_SIGN[parts[2]]))
    return make_graph(n, edges)


def format_graph_text(g: SignedMultigraph, *, comment: str = "") -> str:
    lines = []
    if comment:
        for row in comment.splitlines():
            lines.append(f"# {row}")
    lines.append(f"{g.n} {g.m}")
    for (u, v, s) in g.edges:
        lines.append(f"{u} {v} {sign_char(s)}")
    return "\n".join(lines) + "\n"
