"""Exact canonical labeling for arbitrary graphs at desk scale (n <= ~16).

Equitable refinement (split cells by neighbor counts into every cell until
stable) followed by individualization search: branch on each vertex of the
first non-singleton cell, recurse, and keep the lexicographically smallest
relabeled adjacency code over all leaves.  Cell selection and refinement are
isomorphism-invariant, so equal canonical forms characterize isomorphism
exactly; nothing here is probabilistic.

One shortcut tames the symmetric worst cases (complete and empty cells):
when the stable partition is uniform, i.e. every cell is internally complete
or empty and every cell pair is fully joined or fully separated, all
orderings within cells produce the same code, so the search stops there.
"""

from __future__ import annotations

from .graphs import Graph, to_graph6


def canonical_form(g: Graph) -> str:
    """graph6 string of the canonically relabeled graph."""
    order = canonical_order(g)
    perm = {v: i for i, v in enumerate(order)}
    return to_graph6(g.relabel(perm))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or g.degree_sequence() != h.degree_sequence():
        return False
    return canonical_form(g) == canonical_form(h)


def canonical_order(g: Graph) -> list[int]:
    """Vertex order realizing the canonical labeling (position -> vertex)."""
    n = g.n
    if n == 0:
        return []
    rows = g.bitrows
    by_degree: dict[int, list[int]] = {}
    for v in range(n):
        by_degree.setdefault(rows[v].bit_count(), []).append(v)
    cells = [by_degree[d] for d in sorted(by_degree)]

    best_code: tuple[int, ...] | None = None
    best_order: list[int] | None = None

    def consider(order: list[int]) -> None:
        nonlocal best_code, best_order
        inv = {v: i for i, v in enumerate(order)}
        code = []
        for v in order:
            acc = 0
            for w in g.neighbors[v]:
                acc |= 1 << inv[w]
            code.append(acc)
        tcode = tuple(code)
        if best_code is None or tcode < best_code:
            best_code = tcode
            best_order = order

    def search(cells: list[list[int]]) -> None:
        cells = _refine(rows, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), -1)
        if target < 0:
            consider([c[0] for c in cells])
            return
        if _uniform(rows, cells):
            consider([v for c in cells for v in c])
            return
        cell = cells[target]
        for v in cell:
            rest = [w for w in cell if w != v]
            search(cells[:target] + [[v], rest] + cells[target + 1 :])

    search(cells)
    assert best_order is not None
    return best_order


def _refine(rows: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Split cells by per-cell neighbor counts until the partition is stable."""
    while True:
        masks = [_mask(c) for c in cells]
        out: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            buckets: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple((rows[v] & m).bit_count() for m in masks)
                buckets.setdefault(sig, []).append(v)
            if len(buckets) == 1:
                out.append(cell)
            else:
                changed = True
                for sig in sorted(buckets):
                    out.append(buckets[sig])
        if not changed:
            return cells
        cells = out


def _uniform(rows: tuple[int, ...], cells: list[list[int]]) -> bool:
    masks = [_mask(c) for c in cells]
    for i, cell in enumerate(cells):
        size = len(cell)
        inner = sum((rows[v] & masks[i]).bit_count() for v in cell)
        if inner not in (0, size * (size - 1)):
            return False
        for j in range(i + 1, len(cells)):
            cross = sum((rows[v] & masks[j]).bit_count() for v in cell)
            if cross not in (0, size * len(cells[j])):
                return False
    return True


def _mask(cell: list[int]) -> int:
    m = 0
    for v in cell:
        m |= 1 << v
    return m
