"""The theorem harness: exhaustive confirmation of the pentagon maximum and
the extremal-graph characterization for small n, plus the lemma sweeps.

The theorem's uniqueness claim ranges over all planar graphs, while the
exhaustive search ranges over triangulations only; the gap is discharged by
two recorded sub-results: edge addition never decreases the pentagon count
(`verify_monotonicity`), and the best non-extremal triangulation sits
strictly below the maximum (`second_best` in the certificate).
"""

from __future__ import annotations

import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import kernels
from .canon import canonical_form
from .counting import (
    apex_exists,
    count_cycles,
    count_face_paths3,
    g_formula,
)
from .embeddings import Embedding, is_triangulation, planar_embed, triangular_faces
from .enumeration import corpus
from .families import build_A, build_D
from .graphs import Graph, common_neighbors, induced_subgraph, is_path_forest

SCHEMA_VERSION = 1

MAX_VIOLATION_EXAMPLES = 5


def expected_max_c5(n: int) -> int:
    """The proven maximum: 6 at n=5, 41 at n=7, else 2n^2 - 10n + 12."""
    if n == 5:
        return 6
    return g_formula(n)


def expected_family_labels(n: int) -> tuple[str, ...]:
    return ("A", "D") if n in (8, 11) else ("D",)


@dataclass
class LemmaStats:
    checked: int = 0
    violations: int = 0
    min_slack: int | None = None
    max_slack: int | None = None
    examples: list[str] = field(default_factory=list)

    def record(
        self, ok: bool, slack: int | None = None, note: str | None = None
    ) -> None:
        self.checked += 1
        if slack is not None:
            if self.min_slack is None or slack < self.min_slack:
                self.min_slack = slack
            if self.max_slack is None or slack > self.max_slack:
                self.max_slack = slack
        if not ok:
            self.violations += 1
            if note and len(self.examples) < MAX_VIOLATION_EXAMPLES:
                self.examples.append(note)

    def to_json_dict(self) -> dict:
        return {
            "checked": self.checked,
            "violations": self.violations,
            "min_slack": self.min_slack,
            "max_slack": self.max_slack,
            "examples": list(self.examples),
        }


@dataclass(frozen=True)
class ExtremalEntry:
    graph6: str      # canonical form
    family: str      # "D" | "A" | "unknown"


@dataclass
class VerificationCertificate:
    n: int
    max_c5: int
    g_n: int
    expected_max: int
    second_best: int | None
    extremal: tuple[ExtremalEntry, ...]
    theorem_match: bool
    lemmas: dict[str, LemmaStats] | None = None

    def to_json_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "n": self.n,
            "max_c5": self.max_c5,
            "g_n": self.g_n,
            "expected_max": self.expected_max,
            "theorem_match": self.theorem_match,
            "extremal": [
                {"graph6": e.graph6, "family": e.family} for e in self.extremal
            ],
            "second_best": self.second_best,
            "lemmas": (
                {k: v.to_json_dict() for k, v in self.lemmas.items()}
                if self.lemmas is not None
                else None
            ),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)


def _count_batch(args: tuple[list[tuple[int, ...]], int]) -> list[int]:
    batch, n = args
    return [kernels.cycle_counts(rows, n)[2] for rows in batch]


def corpus_c5_counts(n: int, workers: int = 1) -> list[int]:
    """Pentagon count per corpus class, in corpus order."""
    embs = corpus(n, workers=workers)
    rows_list = [e.graph.bitrows for e in embs]
    if workers > 1 and len(rows_list) > 4 * workers:
        chunk = (len(rows_list) + workers - 1) // workers
        batches = [
            (rows_list[i : i + chunk], n) for i in range(0, len(rows_list), chunk)
        ]
        out: list[int] = []
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_count_batch, batches):
                out.extend(part)
        return out
    return [kernels.cycle_counts(rows, n)[2] for rows in rows_list]


def verify_theorem(
    n: int, workers: int = 1, include_lemmas: bool = False
) -> VerificationCertificate:
    """Exhaustively confirm the maximum and the extremal set at one n.

    theorem_match requires: the maximum over all n-vertex triangulations
    equals the proven value, the maximizers are exactly the expected
    families, and every other class counts strictly fewer pentagons.
    """
    if not (5 <= n <= 14):
        raise ValueError(f"verify_theorem supports 5 <= n <= 14, got {n}")
    embs = corpus(n, workers=workers)
    counts = corpus_c5_counts(n, workers=workers)
    max_c5 = max(counts)
    arg = [i for i, c in enumerate(counts) if c == max_c5]
    second = max((c for c in counts if c != max_c5), default=None)

    known: dict[str, str] = {canonical_form(build_D(n)): "D"}
    if n in (8, 11):
        known[canonical_form(build_A(n))] = "A"
    extremal = []
    for i in arg:
        cf = canonical_form(embs[i].graph)
        extremal.append(ExtremalEntry(graph6=cf, family=known.get(cf, "unknown")))
    extremal.sort(key=lambda e: (e.family, e.graph6))

    labels = tuple(sorted(e.family for e in extremal))
    match = (
        max_c5 == expected_max_c5(n)
        and labels == tuple(sorted(expected_family_labels(n)))
        and (second is None or second < max_c5)
    )
    cert = VerificationCertificate(
        n=n,
        max_c5=max_c5,
        g_n=g_formula(n),
        expected_max=expected_max_c5(n),
        second_best=second,
        extremal=tuple(extremal),
        theorem_match=match,
    )
    if include_lemmas:
        cert.lemmas = verify_lemmas_over([e.graph for e in embs], embs)
    return cert


# ---------------------------------------------------------------------------
# Lemma sweeps
# ---------------------------------------------------------------------------


def verify_lemma1(graphs) -> LemmaStats:
    """Common neighborhoods of edges in planar graphs are path forests, and
    the closed neighborhood triangulates iff the forest is one path."""
    stats = LemmaStats()
    for g in graphs:
        for u, v in g.edges():
            common = common_neighbors(g, u, v)
            sub, _ = induced_subgraph(g, common)
            pf = is_path_forest(sub)
            if not pf.ok:
                stats.record(False, note=f"n={g.n} edge=({u},{v}): not a path forest")
                continue
            closed, _ = induced_subgraph(g, set(common) | {u, v})
            emb = planar_embed(closed)
            tri = isinstance(emb, Embedding) and is_triangulation(emb)
            stats.record(
                tri == pf.single_path,
                note=f"n={g.n} edge=({u},{v}): triangulation={tri} "
                f"single_path={pf.single_path}",
            )
    return stats


def verify_lemma2(graphs) -> LemmaStats:
    """At most 2(k-3) length-3 paths join the endpoints of any edge of a
    planar graph on k >= 3 vertices."""
    stats = LemmaStats()
    for g in graphs:
        k = g.n
        if k < 3:
            continue
        bound = 2 * (k - 3)
        counts = kernels.paths3_per_edge(g.bitrows, g.n)
        for (u, v), cnt in zip(g.edges(), counts):
            stats.record(
                cnt <= bound,
                slack=bound - cnt,
                note=f"n={k} edge=({u},{v}) paths={cnt} > {bound}",
            )
    return stats


def verify_lemma3(embeddings) -> LemmaStats:
    """Per triangular face: at most 4(k-1) length-3 paths with endpoints in
    the face, and at most 4k-9 when no vertex is adjacent to all of it."""
    stats = LemmaStats()
    for emb in embeddings:
        g = emb.graph
        k = g.n
        if k < 4:
            continue
        for face in triangular_faces(emb):
            cnt = count_face_paths3(g, face.boundary)
            bound = 4 * (k - 1)
            if not apex_exists(g, face.boundary):
                bound = 4 * k - 9
            stats.record(
                cnt <= bound,
                slack=bound - cnt,
                note=f"n={k} face={face.boundary} paths={cnt} > {bound}",
            )
    return stats


def verify_remark4(embeddings) -> LemmaStats:
    """Neighborhoods of triangulation vertices carry a Hamiltonian cycle:
    consecutive rotation neighbors must be adjacent."""
    stats = LemmaStats()
    for emb in embeddings:
        g = emb.graph
        for v in range(g.n):
            rot = emb.rotations[v]
            ok = all(
                g.has_edge(rot[i], rot[(i + 1) % len(rot)]) for i in range(len(rot))
            )
            stats.record(ok, note=f"n={g.n} vertex={v} rotation gap")
    return stats


def verify_lemmas_over(graphs, embeddings) -> dict[str, LemmaStats]:
    return {
        "lemma1": verify_lemma1(graphs),
        "lemma2": verify_lemma2(graphs),
        "lemma3": verify_lemma3(embeddings),
        "remark4": verify_remark4(embeddings),
    }


# ---------------------------------------------------------------------------
# Edge-deleted variants and monotonicity
# ---------------------------------------------------------------------------


def edge_deleted_variants(
    count: int, seed: int, n_range: tuple[int, int] = (5, 12)
) -> list[Graph]:
    """Seed-pinned random connected planar subgraphs of corpus members,
    obtained by deleting one to three edges from a triangulation."""
    rng = random.Random(seed)
    lo, hi = n_range
    out: list[Graph] = []
    while len(out) < count:
        n = rng.randint(lo, hi)
        classes = corpus(n)
        g = classes[rng.randrange(len(classes))].graph
        edges = g.edges()
        drop = {rng.randrange(len(edges)) for _ in range(rng.randint(1, 3))}
        h = Graph(n, [e for i, e in enumerate(edges) if i not in drop])
        if _connected(h):
            out.append(h)
    return out


def _connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = 1
    stack = [0]
    mask = 1
    while stack:
        v = stack.pop()
        new = g.bitrows[v] & ~mask
        while new:
            low = new & -new
            w = low.bit_length() - 1
            mask |= low
            seen += 1
            stack.append(w)
            new ^= low
    return seen == g.n


@dataclass
class MonotonicityResult:
    samples: int
    edges_tested: int
    seed: int
    passed: bool
    counterexamples: list[str] = field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "samples": self.samples,
            "edges_tested": self.edges_tested,
            "seed": self.seed,
            "passed": self.passed,
            "counterexamples": list(self.counterexamples),
        }


def verify_monotonicity(samples: int = 200, seed: int = 42) -> MonotonicityResult:
    """Adding any planarity-preserving edge never decreases the pentagon
    count; this is what reduces the maximization to triangulations."""
    rng = random.Random(seed)
    result = MonotonicityResult(samples=samples, edges_tested=0, seed=seed, passed=True)
    for _ in range(samples):
        n = rng.randint(5, 11)
        classes = corpus(n)
        g = classes[rng.randrange(len(classes))].graph
        edges = g.edges()
        keep = [e for e in edges if rng.random() > 0.25]
        base = Graph(n, keep)
        base_c5 = count_cycles(base, 5)
        present = set(keep)
        for u in range(n):
            for v in range(u + 1, n):
                if (u, v) in present:
                    continue
                grown = Graph(n, keep + [(u, v)])
                if not isinstance(planar_embed(grown), Embedding):
                    continue
                result.edges_tested += 1
                if count_cycles(grown, 5) < base_c5:
                    result.passed = False
                    if len(result.counterexamples) < MAX_VIOLATION_EXAMPLES:
                        result.counterexamples.append(
                            f"n={n} base_m={base.m} add=({u},{v})"
                        )
    return result
