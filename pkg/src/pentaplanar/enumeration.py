"""Isomorph-free generation of planar triangulations (maximal planar graphs).

Level n+1 is produced from level n by vertex splitting, the inverse of edge
contraction: pick a vertex v and two positions i < j in its rotation; the
new vertex takes the rotation arc j..i, v keeps i..j, the two stay adjacent
and share exactly the arc endpoints.  Every triangulation on >= 5 vertices
contracts down to one on fewer vertices, so breadth-first splitting from K4
reaches every isomorphism class; duplicates are rejected through the
canonical embedding code (rotation systems of triangulations are unique up
to relabeling and reflection, which the code minimizes over).

Correctness is defined by oracle equivalence: `bruteforce_triangulations`
re-derives the small levels by filtering every graph with 3n - 6 edges for
planarity and all-triangle faces, with no shared machinery.
"""

from __future__ import annotations

import hashlib
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable

from . import kernels
from .canon import canonical_form
from .embeddings import Embedding, is_triangulation, planar_embed
from .graphs import Graph, GraphError, to_graph6

SCHEMA_VERSION = 1

MIN_N = 4
MAX_N = 14          # hard cap: desk scale
BRUTEFORCE_MAX_N = 7

# Tetrahedron rotation system, consistently oriented (the generation seed);
# its facial walks are (0,1,2), (0,2,3), (0,3,1), (1,3,2).
_K4_ROTATIONS: tuple[tuple[int, ...], ...] = (
    (1, 3, 2),
    (0, 2, 3),
    (0, 3, 1),
    (0, 1, 2),
)


@dataclass(frozen=True)
class EnumerationCertificate:
    """Outcome summary: class count plus a digest of the sorted canonical forms."""

    n: int
    count: int
    digest: str

    def to_json_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "n": self.n,
            "count": self.count,
            "digest": self.digest,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)


def canonical_code(emb: Embedding) -> tuple[int, ...]:
    """Flat canonical embedding code (dedup key for triangulations)."""
    return kernels.embedding_min_code(emb.rotations, emb.graph.n)


def code_to_embedding(code: tuple[int, ...]) -> Embedding:
    """Rebuild the canonically labeled embedding encoded by a flat code."""
    rotations = []
    pos = 0
    while pos < len(code):
        d = code[pos]
        rotations.append(tuple(code[pos + 1 : pos + 1 + d]))
        pos += 1 + d
    n = len(rotations)
    edges = sorted(
        {(min(v, w), max(v, w)) for v, rot in enumerate(rotations) for w in rot}
    )
    return Embedding(Graph(n, edges), rotations)


def split_vertex(
    rotations: tuple[tuple[int, ...], ...], v: int, i: int, j: int
) -> tuple[tuple[int, ...], ...]:
    """Inverse edge contraction at vertex v between rotation positions i < j.

    v keeps the arc i..j of its rotation, the new vertex (labeled n) takes
    the arc j..i; both gain each other, and the arc endpoints gain the new
    vertex next to v, oriented so that every face stays a triangle.
    """
    rot_v = rotations[v]
    new = len(rotations)
    wi, wj = rot_v[i], rot_v[j]
    arc_keep = rot_v[i : j + 1]
    arc_move = rot_v[j:] + rot_v[: i + 1]
    out = list(rotations)
    out[v] = arc_keep + (new,)
    for w in arc_move[1:-1]:
        r = out[w]
        idx = r.index(v)
        out[w] = r[:idx] + (new,) + r[idx + 1 :]
    r = out[wi]
    idx = r.index(v)
    out[wi] = r[:idx] + (v, new) + r[idx + 1 :]
    r = out[wj]
    idx = r.index(v)
    out[wj] = r[:idx] + (new, v) + r[idx + 1 :]
    out.append(arc_move + (v,))
    return tuple(out)


def _expand_batch(
    batch: list[tuple[tuple[int, ...], ...]],
) -> set[tuple[int, ...]]:
    """All child canonical codes of a batch of parent rotation systems."""
    child_n = len(batch[0]) + 1 if batch else 0
    codes: set[tuple[int, ...]] = set()
    for rotations in batch:
        for v, rot_v in enumerate(rotations):
            d = len(rot_v)
            for i in range(d):
                for j in range(i + 1, d):
                    child = split_vertex(rotations, v, i, j)
                    codes.add(kernels.embedding_min_code(child, child_n))
    return codes


def _level_codes(
    parent_rotations: list[tuple[tuple[int, ...], ...]], workers: int
) -> list[tuple[int, ...]]:
    """Sorted child canonical codes of one full parent level."""
    if workers > 1 and len(parent_rotations) > 2 * workers:
        chunk = (len(parent_rotations) + workers - 1) // workers
        batches = [
            parent_rotations[k : k + chunk]
            for k in range(0, len(parent_rotations), chunk)
        ]
        codes: set[tuple[int, ...]] = set()
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_expand_batch, batches):
                codes |= part
    else:
        codes = _expand_batch(parent_rotations)
    return sorted(codes)


def base_level_code() -> tuple[int, ...]:
    return kernels.embedding_min_code(_K4_ROTATIONS, 4)


_LEVELS: dict[int, tuple[Embedding, ...]] = {}


def corpus(n: int, workers: int = 1) -> tuple[Embedding, ...]:
    """All triangulation classes on n vertices, canonically labeled and
    sorted by canonical code.  Levels are cached for the process lifetime;
    the content is deterministic regardless of worker count.
    """
    if not (MIN_N <= n <= MAX_N):
        raise GraphError(f"triangulation enumeration supports {MIN_N} <= n <= {MAX_N}")
    if n not in _LEVELS:
        if n == MIN_N:
            _LEVELS[4] = (code_to_embedding(base_level_code()),)
        else:
            parents = corpus(n - 1, workers=workers)
            codes = _level_codes([e.rotations for e in parents], workers)
            _LEVELS[n] = tuple(code_to_embedding(c) for c in codes)
    return _LEVELS[n]


def enumerate_triangulations(
    n: int,
    visitor: Callable[[Embedding], None] | None = None,
    workers: int = 1,
) -> EnumerationCertificate:
    """Visit every isomorphism class of n-vertex triangulations exactly once.

    Each class is delivered as a valid Embedding (rotation system included);
    the certificate reports the class count and the corpus digest.
    """
    classes = corpus(n, workers=workers)
    if visitor is not None:
        for emb in classes:
            visitor(emb)
    lines = corpus_graph6(n, workers=workers)
    return EnumerationCertificate(n=n, count=len(classes), digest=_digest(lines))


def corpus_graph6(n: int, workers: int = 1) -> list[str]:
    """One graph6 line per class, sorted lexicographically (dump format)."""
    return sorted(to_graph6(e.graph) for e in corpus(n, workers=workers))


def _digest(lines: Iterable[str]) -> str:
    h = hashlib.sha256()
    for line in lines:
        h.update(line.encode("ascii"))
        h.update(b"\n")
    return h.hexdigest()


def bruteforce_triangulations(n: int) -> list[str]:
    """Oracle: canonical forms of all n-vertex triangulations, by filtering
    every graph with 3n - 6 edges for planarity and all-triangle faces.

    Independent of the splitting generator; capped at n = 7 because the
    filter enumerates all C(n(n-1)/2, 3n-6) edge subsets.
    """
    if not (3 <= n <= BRUTEFORCE_MAX_N):
        raise GraphError(
            f"brute-force triangulation oracle supports 3 <= n <= {BRUTEFORCE_MAX_N}"
        )
    target_m = 3 * n - 6
    pairs = list(combinations(range(n), 2))
    forms: set[str] = set()
    for chosen in combinations(range(len(pairs)), target_m):
        degs = [0] * n
        for idx in chosen:
            u, v = pairs[idx]
            degs[u] += 1
            degs[v] += 1
        if n >= 4 and min(degs) < 3:
            continue
        g = Graph(n, [pairs[idx] for idx in chosen])
        emb = planar_embed(g)
        if isinstance(emb, Embedding) and is_triangulation(emb):
            forms.add(canonical_form(g))
    return sorted(forms)
