"""Canonical labeling and automorphisms of small edge-colored multigraphs.

Graphs are given as a vertex count plus a mapping (i, j) -> state for
i < j, where the state is a small positive integer (an edge color; for
plain graphs 1 = edge, for the enumeration here 2 = digon).  Canonical
form is computed by color refinement plus full individualization; the
search explores every branch, so the labelings achieving the minimal
code also yield the complete automorphism group.  Intended for n <= 10.
"""

from __future__ import annotations

PairStates = dict[tuple[int, int], int]


def _state(pairs: PairStates, u: int, v: int) -> int:
    if u == v:
        return 0
    return pairs.get((min(u, v), max(u, v)), 0)


def _refine(n: int, pairs: PairStates, colors: list[int]) -> list[int]:
    while True:
        sigs = []
        for v in range(n):
            row = sorted((colors[u], _state(pairs, u, v)) for u in range(n) if u != v and _state(pairs, u, v))
            sigs.append((colors[v], tuple(row)))
        order = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new = [order[s] for s in sigs]
        if new == colors:
            return new
        colors = new


def _encode(n: int, pairs: PairStates, lab: list[int]) -> tuple:
    """Upper-triangle state vector of the relabeled graph (lab: old->new)."""
    inv = [0] * n
    for old, new in enumerate(lab):
        inv[new] = old
    return tuple(
        _state(pairs, inv[i], inv[j]) for i in range(n) for j in range(i + 1, n)
    )


def canonical_form(n: int, pairs: PairStates):
    """Return (code, labelings) where code is the minimal encoding and
    labelings are all old->new maps achieving it."""
    if n == 0:
        return ((), [[]])
    leaves: list[tuple[tuple, list[int]]] = []

    def descend(colors: list[int]):
        colors = _refine(n, pairs, colors)
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            lab = [0] * n
            for v in range(n):
                lab[v] = colors[v]
            leaves.append((_encode(n, pairs, lab), lab))
            return
        for v in target:
            # Individualized vertex gets a strictly smaller color so the
            # refinement ordering stays deterministic.
            nxt = [2 * c for c in colors]
            nxt[v] -= 1
            descend(nxt)

    descend([0] * n)
    best = min(code for code, _ in leaves)
    labs = [lab for code, lab in leaves if code == best]
    return best, labs


def canonical_key(n: int, pairs: PairStates) -> tuple:
    code, _ = canonical_form(n, pairs)
    return (n, code)


def canonical_relabeling(n: int, pairs: PairStates) -> list[int]:
    """One deterministic old->new labeling achieving the canonical code."""
    _, labs = canonical_form(n, pairs)
    return min(labs)


def automorphisms(n: int, pairs: PairStates) -> list[tuple[int, ...]]:
    """Every vertex permutation preserving all pair states."""
    _, labs = canonical_form(n, pairs)
    base = labs[0]
    inv_base = [0] * n
    for old, new in enumerate(base):
        inv_base[new] = old
    auts = []
    for lab in labs:
        # lab and base both send the graph to the same code, so
        # base^{-1} o lab fixes it.
        perm = tuple(inv_base[lab[v]] for v in range(n))
        auts.append(perm)
    seen = sorted(set(auts))
    return seen
