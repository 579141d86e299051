"""Exhaustive enumeration of small signed graphs and the theorem-level
verification campaigns.

Enumeration yields one representative per switching-isomorphism class:
underlying multigraphs are generated by vertex augmentation with
canonical-form deduplication, and per underlying graph the signatures
are cotree sign vectors (spanning forest forced positive) deduplicated
as orbits under automorphisms composed with switching.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from fractions import Fraction
from multiprocessing import Pool
from typing import Iterator, Optional

import numpy as np

from . import _canon
from .catalog import apply_indicator, build, hajos_graph, negative_cycle
from .clique import CliqueParams, hat_clique
from .core import (
    NEG,
    POS,
    SignedMultigraph,
    contains_switching_subgraph,
    format_graph_text,
    is_switching_isomorphic,
    relabel,
)
from .criticality import density_check, is_critical, is_two_connected
from .solver import chi_c, is_colorable, verify_hom

P103 = CliqueParams(10, 3)

CAMPAIGN_IDS = (
    "T_SURJECTIVE",
    "SMALL_3COLORABLE",
    "SMALL_CRITICAL",
    "BROOKS",
    "NEGATIVE_CYCLES",
    "PETERSEN",
    "DENSITY_FAMILY",
)


@dataclass(frozen=True)
class EnumSpec:
    """What to enumerate.  allow_digons=True extends the per-pair states
    from {none, one signed edge} to {none, single, digon}; loops are
    never generated."""

    n_max: int
    max_degree: Optional[int] = None
    simple: bool = True
    connected: bool = False
    allow_digons: bool = False

    def __post_init__(self):
        if not (1 <= self.n_max <= 10):
            raise ValueError("n_max must be between 1 and 10")
        if self.allow_digons and self.simple:
            object.__setattr__(self, "simple", False)


@dataclass
class CampaignReport:
    id: str
    cases_checked: int = 0
    failures: list = field(default_factory=list)
    elapsed_s: float = 0.0
    budget_notes: list[str] = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "cases_checked": self.cases_checked,
            "failures": self.failures,
            "passed": self.passed,
            "elapsed_s": round(self.elapsed_s, 3),
            "budget_notes": self.budget_notes,
            "extra": self.extra,
        }


# -- underlying multigraph enumeration --------------------------------------


def _pair_states(g: SignedMultigraph) -> _canon.PairStates:
    return {pair: len(sig) for pair, sig in g.pair_signs().items()}


def _underlying_classes(n: int, states: tuple[int, ...], max_degree: Optional[int]):
    """Canonical representatives (as pair-state dicts) of all multigraphs
    on exactly 2..n vertices with per-pair states drawn from ``states``,
    grown by vertex augmentation from the single-vertex graph."""
    reps: list[_canon.PairStates] = [{}]  # the 1-vertex graph
    for size in range(2, n + 1):
        nxt: dict[tuple, _canon.PairStates] = {}
        for parent in reps:
            deg = [0] * (size - 1)
            for (a, b), st in parent.items():
                deg[a] += st
                deg[b] += st
            for vec in itertools.product(states, repeat=size - 1):
                newdeg = sum(vec)
                if max_degree is not None:
                    if newdeg > max_degree:
                        continue
                    if any(deg[u] + vec[u] > max_degree for u in range(size - 1)):
                        continue
                pairs = dict(parent)
                for u, st in enumerate(vec):
                    if st:
                        pairs[(u, size - 1)] = st
                key = _canon.canonical_key(size, pairs)
                if key not in nxt:
                    lab = _canon.canonical_relabeling(size, pairs)
                    canon = {}
                    for (a, b), st in pairs.items():
                        x, y = lab[a], lab[b]
                        canon[(min(x, y), max(x, y))] = st
                    nxt[key] = canon
        reps = list(nxt.values())
        yield size, reps
    return


def _is_connected_states(n: int, pairs: _canon.PairStates) -> bool:
    if n <= 1:
        return True
    adj = {v: [] for v in range(n)}
    for (a, b) in pairs:
        adj[a].append(b)
        adj[b].append(a)
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def _bfs_forest_pairs(n: int, single_pairs) -> list[tuple[int, int]]:
    """BFS spanning forest of the single-edge pairs, lowest roots first;
    mirrors the forest used by canonical signature normalization."""
    adj = {v: [] for v in range(n)}
    for (a, b) in single_pairs:
        adj[a].append(b)
        adj[b].append(a)
    for v in adj:
        adj[v].sort()
    seen = [False] * n
    forest = []
    for root in range(n):
        if seen[root]:
            continue
        seen[root] = True
        queue = [root]
        while queue:
            u = queue.pop(0)
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    forest.append((min(u, w), max(u, w)))
                    queue.append(w)
    return forest


def _signature_classes(n: int, pairs: _canon.PairStates) -> list[SignedMultigraph]:
    """One signed representative per switching-isomorphism class over a
    fixed underlying multigraph: orbits of cotree sign vectors under the
    automorphism group."""
    from .core import canonical_signature  # local import to keep module load light

    singles = sorted(p for p, st in pairs.items() if st == 1)
    digons = sorted(p for p, st in pairs.items() if st == 2)
    forest = set(_bfs_forest_pairs(n, singles))
    cotree = [p for p in singles if p not in forest]
    auts = _canon.automorphisms(n, pairs)
    reps: list[SignedMultigraph] = []
    seen: set = set()
    for bits in itertools.product((POS, NEG), repeat=len(cotree)):
        sign_of = {p: POS for p in singles}
        for p, s in zip(cotree, bits):
            sign_of[p] = s
        edges = [(a, b, sign_of[(a, b)]) for (a, b) in singles]
        edges += [(a, b, POS) for (a, b) in digons] + [(a, b, NEG) for (a, b) in digons]
        g = SignedMultigraph(n, tuple(sorted(edges)))
        key = g._key()
        if key in seen:
            continue
        # First cotree vector of a fresh orbit is the class representative;
        # the orbit under (automorphism, then re-normalize) marks the rest.
        reps.append(g)
        for perm in auts:
            seen.add(canonical_signature(relabel(g, perm))._key())
    return reps


def enumerate_signed(spec: EnumSpec) -> Iterator[SignedMultigraph]:
    """Yield one representative per switching-isomorphism class, for each
    vertex count 1..n_max, in a deterministic order."""
    states = (0, 1, 2) if spec.allow_digons else (0, 1)
    yield SignedMultigraph(1, ())
    for size, reps in _underlying_classes(spec.n_max, states, spec.max_degree):
        for pairs in reps:
            if spec.connected and not _is_connected_states(size, pairs):
                continue
            for g in _signature_classes(size, pairs):
                yield g


# -- campaign helpers --------------------------------------------------------


def _pmap(fn, items, threads: int):
    items = list(items)
    if threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with Pool(processes=threads) as pool:
        return pool.map(fn, items, chunksize=max(1, len(items) // (threads * 4)))


def _finish(rep: CampaignReport, t0: float) -> CampaignReport:
    rep.elapsed_s = time.monotonic() - t0
    return rep


# -- campaigns ----------------------------------------------------------------


def campaign_T_surjective() -> CampaignReport:
    """Every homomorphism of the 5-vertex gadget T (any switching) into
    the halved (10, 3) clique must use all five target vertices."""
    t0 = time.monotonic()
    rep = CampaignReport("T_SURJECTIVE")
    t = build("T").graph
    hat = hat_clique(P103)
    half = hat.n
    ok = {POS: np.zeros((half, half), dtype=bool), NEG: np.zeros((half, half), dtype=bool)}
    for (u, v, s) in hat.edges:
        ok[s][u, v] = True
        ok[s][v, u] = True
    maps = np.array(list(itertools.product(range(half), repeat=t.n)), dtype=np.int64)
    valid_total = 0
    for switch_bits in range(1 << t.n):
        xs = {v for v in range(t.n) if switch_bits >> v & 1}
        valid = np.ones(len(maps), dtype=bool)
        for (u, v, s) in t.edges:
            s_eff = -s if ((u in xs) != (v in xs)) else s
            valid &= ok[s_eff][maps[:, u], maps[:, v]]
        rep.cases_checked += len(maps)
        if valid.any():
            sub = maps[valid]
            valid_total += len(sub)
            srt = np.sort(sub, axis=1)
            bijective = (np.diff(srt, axis=1) != 0).all(axis=1)
            for row in sub[~bijective]:
                rep.failures.append({"switch_set": sorted(xs), "map": row.tolist()})
    rep.extra["valid_homomorphisms"] = valid_total
    if valid_total == 0:
        rep.failures.append({"error": "no valid homomorphism exists at all"})
    return _finish(rep, t0)


def _probe_3colorable(g: SignedMultigraph) -> bool:
    return is_colorable(g, CliqueParams(6, 2))


def campaign_small_3colorable(threads: int = 1) -> CampaignReport:
    """Simple signed graphs with at most 5 vertices and 7 edges that are
    not the gadget T and contain no switching copy of the all-negative
    K4 are all circular 3-colorable."""
    t0 = time.monotonic()
    rep = CampaignReport("SMALL_3COLORABLE")
    t_graph = build("T").graph
    k4 = build("K4_MINUS").graph
    graphs = []
    for g in enumerate_signed(EnumSpec(n_max=5, simple=True)):
        if g.m > 7:
            continue
        if g.n == t_graph.n and g.m == t_graph.m and is_switching_isomorphic(g, t_graph):
            continue
        if g.n >= 4 and contains_switching_subgraph(g, k4) is not None:
            continue
        graphs.append(g)
    results = _pmap(_probe_3colorable, graphs, threads)
    rep.cases_checked = len(graphs)
    for g, colorable in zip(graphs, results):
        if not colorable:
            rep.failures.append({"graph": format_graph_text(g)})
    return _finish(rep, t0)


def _probe_critical(g: SignedMultigraph) -> bool:
    return is_critical(g, P103)


def campaign_small_critical(threads: int = 1) -> CampaignReport:
    """The (10, 3)-critical signed graphs on at most five vertices are
    exactly the digon, the all-negative K4, and T_PLUS (up to switching
    isomorphism).  Digons are enumerated; same-sign parallels are not,
    since a graph with one is never critical."""
    t0 = time.monotonic()
    rep = CampaignReport("SMALL_CRITICAL")
    graphs = list(enumerate_signed(EnumSpec(n_max=5, allow_digons=True)))
    results = _pmap(_probe_critical, graphs, threads)
    rep.cases_checked = len(graphs)
    criticals = [g for g, crit in zip(graphs, results) if crit]
    expected = [build(nm).graph for nm in ("DIGON", "K4_MINUS", "T_PLUS")]
    matched = {i: None for i in range(len(expected))}
    for g in criticals:
        if not is_two_connected(g):
            rep.failures.append({"graph": format_graph_text(g), "error": "critical but not 2-connected"})
        hit = None
        for i, e in enumerate(expected):
            if g.n == e.n and g.m == e.m and is_switching_isomorphic(g, e):
                hit = i
                break
        if hit is None:
            rep.failures.append({"graph": format_graph_text(g), "error": "unexpected critical class"})
        elif matched[hit] is not None:
            rep.failures.append({"graph": format_graph_text(g), "error": "duplicate critical class"})
        else:
            matched[hit] = g
    for i, e in enumerate(expected):
        if matched[i] is None:
            rep.failures.append({"graph": format_graph_text(e), "error": "expected critical class not found"})
    rep.extra["critical_classes_found"] = len(criticals)
    return _finish(rep, t0)


def _probe_brooks(g: SignedMultigraph):
    res = chi_c(g, ceiling=Fraction(10, 3))
    return (res.value, res.params.p, res.params.q)


def campaign_brooks(n_max: int = 7, threads: int = 1) -> CampaignReport:
    """Connected simple subcubic signed graphs, except the all-negative
    K4 class, are (10, 3)-colorable; the classes attaining 10/3 exactly
    (within denominator budget |V|) are recorded."""
    if n_max > 8:
        raise ValueError("brooks campaign capped at n_max = 8")
    t0 = time.monotonic()
    rep = CampaignReport("BROOKS")
    k4 = build("K4_MINUS").graph
    graphs = []
    excluded = 0
    for g in enumerate_signed(EnumSpec(n_max=n_max, simple=True, connected=True, max_degree=3)):
        if g.n == 4 and g.m == 6 and is_switching_isomorphic(g, k4):
            excluded += 1
            continue
        graphs.append(g)
    attains = []
    rep.cases_checked = len(graphs)
    results = _pmap(_probe_brooks, graphs, threads)
    for g, (value, p, q) in zip(graphs, results):
        if value > Fraction(10, 3):
            rep.failures.append({"graph": format_graph_text(g), "error": "not (10,3)-colorable"})
        elif value == Fraction(10, 3):
            attains.append(format_graph_text(g))
    rep.extra["excluded_k4_classes"] = excluded
    rep.extra["attains_10_3"] = attains
    rep.budget_notes.append(f"n_max={n_max}")
    return _finish(rep, t0)


def campaign_negative_cycles(l_max: int = 8) -> CampaignReport:
    """chi_c of the unbalanced cycle of length l is 2 + 2/(l-1), found at
    its minimal even-numerator parameters."""
    t0 = time.monotonic()
    rep = CampaignReport("NEGATIVE_CYCLES")
    for length in range(2, l_max + 1):
        rep.cases_checked += 1
        g = negative_cycle(length)
        res = chi_c(g)
        want = Fraction(2) + Fraction(2, length - 1)
        if res.value != want:
            rep.failures.append(
                {"length": length, "got": str(res.value), "want": str(want)}
            )
    return _finish(rep, t0)


def campaign_petersen() -> CampaignReport:
    """The signed Petersen graph has chi_c exactly 10/3 within the
    denominator budget q <= 10: every smaller candidate fraction is
    rejected by a completed search and the witness at (10, 3) verifies."""
    t0 = time.monotonic()
    rep = CampaignReport("PETERSEN")
    g = build("PETERSEN").graph
    res = chi_c(g, q_max=10)
    rep.cases_checked = len(res.rejected) + 1
    if res.value != Fraction(10, 3):
        rep.failures.append({"got": str(res.value)})
    if not verify_hom(g, res.witness):
        rep.failures.append({"error": "witness does not verify"})
    rejected = {(c.p, c.q) for c in res.rejected}
    for must in ((6, 2), (16, 5)):
        if must not in rejected:
            rep.failures.append({"error": f"expected rejection missing: {must}"})
    rep.extra["rejected"] = sorted(rejected)
    rep.extra["witness"] = list(res.witness.assignment)
    return _finish(rep, t0)


def campaign_density_family(k_max: int = 5, probe_k1: bool = True) -> CampaignReport:
    """The gadget-replaced Hajos family has 47k+4 vertices and 84k+6
    edges; the k=1 member is non-(10,3)-colorable and meets the density
    bound."""
    t0 = time.monotonic()
    rep = CampaignReport("DENSITY_FAMILY")
    for k in range(1, k_max + 1):
        rep.cases_checked += 1
        base = hajos_graph(k)
        if (base.n, base.m) != (5 * k + 1, 14 * k + 1):
            rep.failures.append({"k": k, "error": f"hajos counts {(base.n, base.m)}"})
            continue
        big = apply_indicator(base)
        if (big.n, big.m) != (47 * k + 4, 84 * k + 6):
            rep.failures.append({"k": k, "error": f"family counts {(big.n, big.m)}"})
    if probe_k1:
        big1 = apply_indicator(hajos_graph(1))
        rep.cases_checked += 1
        if is_colorable(big1, P103):
            rep.failures.append({"k": 1, "error": "gadget family member is (10,3)-colorable"})
        if not density_check(big1).passes:
            rep.failures.append({"k": 1, "error": "density bound fails"})
    return _finish(rep, t0)


def run_campaign(campaign_id: str, *, n_max: Optional[int] = None, threads: int = 1) -> CampaignReport:
    if campaign_id == "T_SURJECTIVE":
        return campaign_T_surjective()
    if campaign_id == "SMALL_3COLORABLE":
        return campaign_small_3colorable(threads=threads)
    if campaign_id == "SMALL_CRITICAL":
        return campaign_small_critical(threads=threads)
    if campaign_id == "BROOKS":
        return campaign_brooks(n_max=n_max or 7, threads=threads)
    if campaign_id == "NEGATIVE_CYCLES":
        return campaign_negative_cycles(l_max=n_max or 8)
    if campaign_id == "PETERSEN":
        return campaign_petersen()
    if campaign_id == "DENSITY_FAMILY":
        return campaign_density_family(k_max=n_max or 5)
    raise KeyError(f"unknown campaign {campaign_id!r}; known: {', '.join(CAMPAIGN_IDS)}")
