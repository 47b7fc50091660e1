"""Immutable simple-graph value type and the primitives built on it.

Vertices are dense integers 0..n-1.  Adjacency is stored twice: as sorted
neighbor tuples (linear iteration) and as per-vertex bitmasks (constant-time
membership, bit-parallel intersection).  Bitmasks are plain Python ints, so
the same representation covers any n; the compiled kernel additionally packs
them into 64-bit words when n <= 64.

Graphs are values: every derived graph (induced subgraph, contraction) is a
fresh object and carries an explicit relabeling map.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Raised on contract violations: bad vertices, non-edges, malformed input."""


class Graph:
    """Simple undirected graph on vertices 0..n-1, immutable after construction."""

    __slots__ = ("n", "neighbors", "bitrows", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        self.n = n
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if rows[u] >> v & 1:
                raise GraphError(f"duplicate edge ({u},{v})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self.bitrows: tuple[int, ...] = tuple(rows)
        self.neighbors: tuple[tuple[int, ...], ...] = tuple(
            tuple(_bits(row)) for row in rows
        )
        self._hash: int | None = None

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.bitrows) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges (u, v) with u < v, in ascending lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.neighbors[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.bitrows[u] >> v & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.bitrows[v].bit_count()

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(row.bit_count() for row in self.bitrows))

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise GraphError(f"vertex {v} out of range for n={self.n}")

    def relabel(self, perm: dict[int, int] | list[int]) -> "Graph":
        """New graph with vertex v renamed to perm[v]; perm must be a bijection."""
        if isinstance(perm, dict):
            perm = [perm[v] for v in range(self.n)]
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling is not a permutation of 0..n-1")
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.bitrows == other.bitrows

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.n, self.bitrows)))
        return self._hash  # type: ignore[return-value]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs >= 3 vertices, got {n}")
    return Graph(n, [(v, (v + 1) % n) for v in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(v, v + 1) for v in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


# ---------------------------------------------------------------------------
# Neighborhood / subgraph operations
# ---------------------------------------------------------------------------


def degree(g: Graph, v: int) -> int:
    """Number of neighbors of v."""
    return g.degree(v)


def common_neighbors(g: Graph, u: int, v: int) -> frozenset[int]:
    """N(u) intersect N(v); never contains u or v."""
    if u == v:
        raise GraphError(f"common_neighbors requires distinct vertices, got {u} twice")
    g._check_vertex(u)
    g._check_vertex(v)
    mask = g.bitrows[u] & g.bitrows[v] & ~(1 << u) & ~(1 << v)
    return frozenset(_bits(mask))


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced on s, relabeled to 0..|s|-1 in ascending vertex order.

    Returns the new graph and the old->new relabeling map.
    """
    verts = sorted(set(s))
    for v in verts:
        g._check_vertex(v)
    relabel = {v: i for i, v in enumerate(verts)}
    edges = [
        (relabel[u], relabel[v])
        for u in verts
        for v in g.neighbors[u]
        if u < v and v in relabel
    ]
    return Graph(len(verts), edges), relabel


def contract_edge(g: Graph, u: int, v: int) -> tuple[Graph, dict[int, int]]:
    """Contract edge {u,v} into a single vertex; parallel edges collapse.

    The merged vertex inherits the smaller of the two labels after the usual
    dense relabeling; returns the new graph plus the old->new map (u and v
    map to the same vertex).
    """
    if not g.has_edge(u, v):
        raise GraphError(f"({u},{v}) is not an edge; cannot contract")
    lo, hi = min(u, v), max(u, v)
    relabel = {}
    for w in range(g.n):
        if w == hi:
            relabel[w] = relabel[lo] if lo in relabel else lo
        else:
            relabel[w] = w - (1 if w > hi else 0)
    relabel[hi] = relabel[lo]
    edges = {
        (min(relabel[a], relabel[b]), max(relabel[a], relabel[b]))
        for a, b in g.edges()
        if relabel[a] != relabel[b]
    }
    return Graph(g.n - 1, sorted(edges)), relabel


@dataclass(frozen=True)
class PathForestResult:
    """Outcome of the path-forest test.

    ok: graph is acyclic with maximum degree <= 2.
    single_path: ok and the forest is exactly one path (so it is connected;
        the empty graph does not count as a single path).
    paths: on success, the maximal paths as vertex sequences (isolated
        vertices appear as length-1 sequences); None on failure.
    """

    ok: bool
    single_path: bool
    paths: tuple[tuple[int, ...], ...] | None

    def __bool__(self) -> bool:
        return self.ok


def is_path_forest(g: Graph) -> PathForestResult:
    """Test for a disjoint union of paths and decompose it on success."""
    if any(row.bit_count() > 2 for row in g.bitrows):
        return PathForestResult(False, False, None)
    seen = [False] * g.n
    paths: list[tuple[int, ...]] = []
    for start in range(g.n):
        if seen[start] or g.bitrows[start].bit_count() == 2:
            continue
        # Walk from an endpoint (degree <= 1) to the other end.
        walk = [start]
        seen[start] = True
        prev, cur = -1, start
        while True:
            nxt = [w for w in g.neighbors[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            if seen[cur]:
                return PathForestResult(False, False, None)
            seen[cur] = True
            walk.append(cur)
        paths.append(tuple(walk))
    if not all(seen):
        # Leftover vertices all have degree 2: a cycle.
        return PathForestResult(False, False, None)
    return PathForestResult(True, len(paths) == 1 and g.n > 0, tuple(paths))


# ---------------------------------------------------------------------------
# graph6 codec (byte-exact against the published format definition)
# ---------------------------------------------------------------------------

GRAPH6_HEADER = ">>graph6<<"


def to_graph6(g: Graph) -> str:
    """Encode as graph6: 6-bit chunks of the column-major upper triangle."""
    out = _encode_g6_size(g.n)
    bits: list[int] = []
    for v in range(1, g.n):
        row = g.bitrows[v]
        for u in range(v):
            bits.append(row >> u & 1)
    for i in range(0, len(bits), 6):
        chunk = bits[i : i + 6]
        chunk += [0] * (6 - len(chunk))
        val = 0
        for b in chunk:
            val = val << 1 | b
        out.append(val + 63)
    return bytes(out).decode("ascii")


def parse_graph6(text: str) -> Graph:
    """Decode a graph6 string (optional >>graph6<< header allowed)."""
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER) :].strip()
    if not s:
        raise GraphError("empty graph6 string")
    data = s.encode("ascii")
    if any(b < 63 or b > 126 for b in data):
        raise GraphError(f"invalid graph6 byte in {s!r}")
    n, pos = _decode_g6_size(data)
    need = (n * (n - 1) // 2 + 5) // 6
    if len(data) - pos != need:
        raise GraphError(
            f"graph6 body length {len(data) - pos} != expected {need} for n={n}"
        )
    bits = []
    for byte in data[pos:]:
        val = byte - 63
        bits.extend((val >> shift & 1) for shift in range(5, -1, -1))
    edges = []
    i = 0
    for v in range(1, n):
        for u in range(v):
            if bits[i]:
                edges.append((u, v))
            i += 1
    return Graph(n, edges)


def _encode_g6_size(n: int) -> bytearray:
    if n < 0:
        raise GraphError("negative vertex count")
    if n <= 62:
        return bytearray([n + 63])
    if n <= 258047:
        return bytearray(
            [126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
        )
    raise GraphError(f"graph6 encoding for n={n} not supported here")


def _decode_g6_size(data: bytes) -> tuple[int, int]:
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 4 and data[1] != 126:
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        return n, 4
    raise GraphError("graph6 size prefix too large or truncated")


# ---------------------------------------------------------------------------
# Edge-list text format: "n m" then one "u v" line per edge, u < v, ascending
# ---------------------------------------------------------------------------


def to_edge_list_text(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list_text(text: str) -> Graph:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise GraphError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphError(f"expected 'n m' header, got {lines[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise GraphError(f"header promises {m} edges, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphError(f"malformed edge line {ln!r}")
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise GraphError(f"self-loop in edge line {ln!r}")
        edges.append((min(u, v), max(u, v)))
    return Graph(n, edges)


def parse_graph_text(text: str, fmt: str = "auto") -> Graph:
    """Parse either supported text format; auto-detect by first line shape."""
    if fmt == "graph6":
        return parse_graph6(text)
    if fmt == "edgelist":
        return parse_edge_list_text(text)
    if fmt != "auto":
        raise GraphError(f"unknown format {fmt!r}")
    stripped = text.strip()
    first = stripped.splitlines()[0] if stripped else ""
    parts = first.split()
    if len(parts) == 2 and all(p.isdigit() for p in parts):
        return parse_edge_list_text(text)
    return parse_graph6(text)
