"""Combinatorial embeddings: rotation systems, face tracing, planarity.

An Embedding pairs a Graph with a rotation system (cyclic neighbor order per
vertex).  Faces are recovered by the standard trace: the directed edge (u,v)
is followed by (v,w) where w is the neighbor after u in the rotation of v,
so every directed edge lies on exactly one facial walk.

`planar_embed` runs the classic cycle-plus-path-addition planarity algorithm
(Demoucron, Malgrange, Pertuiset) per biconnected block and glues the block
rotations at cut vertices.  Faces are maintained as directed cycles during
the insertion, which makes the final rotation system a one-pass read-off.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .graphs import Graph, GraphError


class EmbeddingError(ValueError):
    """Raised for rotation systems that do not match the stated contracts."""


@dataclass(frozen=True)
class Face:
    """A facial walk, stored as the cyclic sequence of traversed vertices."""

    boundary: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.boundary)

    def __contains__(self, v: int) -> bool:
        return v in self.boundary

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.boundary)


@dataclass(frozen=True)
class NotPlanar:
    """Negative planarity witness (diagnostic only, no Kuratowski subgraph)."""

    reason: str


class Embedding:
    """Immutable rotation system over a Graph, with derived faces."""

    def __init__(self, graph: Graph, rotations: Sequence[Sequence[int]]):
        if len(rotations) != graph.n:
            raise EmbeddingError(
                f"expected {graph.n} rotations, got {len(rotations)}"
            )
        rots = tuple(tuple(r) for r in rotations)
        for v, rot in enumerate(rots):
            if tuple(sorted(rot)) != graph.neighbors[v]:
                raise EmbeddingError(
                    f"rotation of vertex {v} is not a cyclic order of N({v})"
                )
        self.graph = graph
        self.rotations = rots

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        rots = self.rotations
        pos = [{u: i for i, u in enumerate(rot)} for rot in rots]
        seen: set[tuple[int, int]] = set()
        faces = []
        for a in range(self.graph.n):
            for b in rots[a]:
                if (a, b) in seen:
                    continue
                walk = []
                u, v = a, b
                while (u, v) not in seen:
                    seen.add((u, v))
                    walk.append(u)
                    rot_v = rots[v]
                    u, v = v, rot_v[(pos[v][u] + 1) % len(rot_v)]
                faces.append(Face(tuple(walk)))
        return tuple(faces)

    @cached_property
    def is_spherical(self) -> bool:
        """Euler check n - m + f = 2, applied to every connected component."""
        comp = _component_labels(self.graph)
        ncomp = max(comp) + 1 if comp else 0
        nn = [0] * ncomp
        mm = [0] * ncomp
        ff = [0] * ncomp
        for v in range(self.graph.n):
            nn[comp[v]] += 1
        for u, v in self.graph.edges():
            mm[comp[u]] += 1
        for face in self.faces:
            ff[comp[face.boundary[0]]] += 1
        return all(
            n_c == 1 or n_c - m_c + f_c == 2 for n_c, m_c, f_c in zip(nn, mm, ff)
        )

    def serialize(self) -> str:
        """Text lines "v: w1 w2 ... wd"; round-trips through parse_rotations."""
        lines = []
        for v, rot in enumerate(self.rotations):
            lines.append(f"{v}:" + "".join(f" {w}" for w in rot))
        return "\n".join(lines) + "\n"

    def __repr__(self) -> str:
        return f"Embedding(n={self.graph.n}, m={self.graph.m})"


def parse_rotations(text: str) -> Embedding:
    """Inverse of Embedding.serialize."""
    rows: dict[int, list[int]] = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        head, _, rest = line.partition(":")
        rows[int(head)] = [int(tok) for tok in rest.split()]
    n = len(rows)
    if sorted(rows) != list(range(n)):
        raise EmbeddingError("rotation lines must cover vertices 0..n-1")
    edges = set()
    for v, rot in rows.items():
        for w in rot:
            edges.add((min(v, w), max(v, w)))
    g = Graph(n, sorted(edges))
    return Embedding(g, [rows[v] for v in range(n)])


def _component_labels(g: Graph) -> list[int]:
    comp = [-1] * g.n
    label = 0
    for start in range(g.n):
        if comp[start] >= 0:
            continue
        stack = [start]
        comp[start] = label
        while stack:
            v = stack.pop()
            for w in g.neighbors[v]:
                if comp[w] < 0:
                    comp[w] = label
                    stack.append(w)
        label += 1
    return comp


def _is_connected(g: Graph) -> bool:
    return g.n <= 1 or max(_component_labels(g)) == 0


# ---------------------------------------------------------------------------
# Planarity: biconnected decomposition + face-splitting embedder
# ---------------------------------------------------------------------------


def planar_embed(g: Graph) -> Embedding | NotPlanar:
    """A planar embedding of g, or a NotPlanar witness.

    Deterministic for a given input ordering.  The embedding is on the
    sphere; no outer face is distinguished.
    """
    n = g.n
    if n >= 3 and g.m > 3 * n - 6:
        return NotPlanar(f"m={g.m} exceeds the planar bound 3n-6={3 * n - 6}")
    rotations: list[list[int]] = [[] for _ in range(n)]
    for block in _biconnected_blocks(g):
        if len(block) == 1:
            (u, v), = block
            rotations[u].append(v)
            rotations[v].append(u)
            continue
        rot_block = _embed_block(block)
        if isinstance(rot_block, NotPlanar):
            return rot_block
        for v, cyc in rot_block.items():
            rotations[v].extend(cyc)
    emb = Embedding(g, rotations)
    if not emb.is_spherical:
        raise AssertionError("embedder produced a non-spherical rotation system")
    return emb


def is_planar(g: Graph) -> bool:
    return isinstance(planar_embed(g), Embedding)


def _biconnected_blocks(g: Graph) -> list[list[tuple[int, int]]]:
    """Edge sets of the biconnected components (iterative Hopcroft-Tarjan)."""
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    edge_stack: list[tuple[int, int]] = []
    blocks: list[list[tuple[int, int]]] = []
    for root in range(g.n):
        if root in disc:
            continue
        disc[root] = low[root] = len(disc)
        dfs = [(root, -1, iter(g.neighbors[root]))]
        while dfs:
            v, parent, it = dfs[-1]
            pushed = False
            for w in it:
                if w == parent:
                    continue
                if w not in disc:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = len(disc)
                    dfs.append((w, v, iter(g.neighbors[w])))
                    pushed = True
                    break
                if disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if pushed:
                continue
            dfs.pop()
            if dfs:
                u = dfs[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    block = []
                    while True:
                        e = edge_stack.pop()
                        block.append(e)
                        if e == (u, v):
                            break
                    blocks.append(block)
    return blocks


def _embed_block(block_edges: list[tuple[int, int]]) -> dict[int, list[int]] | NotPlanar:
    """Embed one biconnected block (>= 3 vertices); returns rotations."""
    adj: dict[int, set[int]] = {}
    for u, v in block_edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    all_edges = {frozenset(e) for e in block_edges}

    cycle = _find_cycle(adj)
    faces: list[list[int]] = [list(cycle), list(reversed(cycle))]
    h_vertices = set(cycle)
    h_edges = {
        frozenset((cycle[i], cycle[(i + 1) % len(cycle)])) for i in range(len(cycle))
    }

    while h_edges != all_edges:
        fragments = _fragments(adj, all_edges, h_vertices, h_edges)
        chosen: tuple[int, _Fragment, int] | None = None
        for frag in fragments:
            admissible = [
                i for i, f in enumerate(faces) if frag.attachments <= set(f)
            ]
            if not admissible:
                return NotPlanar(
                    f"fragment attached at {sorted(frag.attachments)} fits no face"
                )
            if chosen is None or len(admissible) < chosen[0]:
                chosen = (len(admissible), frag, admissible[0])
                if chosen[0] == 1:
                    # forced placement; no better choice can exist
                    break
        assert chosen is not None
        _, frag, chosen_face = chosen
        path = _alpha_path(adj, frag)
        _insert_path(faces, chosen_face, path)
        h_vertices.update(path)
        for i in range(len(path) - 1):
            h_edges.add(frozenset((path[i], path[i + 1])))

    succ: dict[int, dict[int, int]] = {v: {} for v in adj}
    for face in faces:
        size = len(face)
        for t in range(size):
            u, v, w = face[t], face[(t + 1) % size], face[(t + 2) % size]
            succ[v][u] = w
    rotations: dict[int, list[int]] = {}
    for v, nxt in succ.items():
        start = next(iter(nxt))
        cyc = [start]
        cur = nxt[start]
        while cur != start:
            cyc.append(cur)
            cur = nxt[cur]
        if len(cyc) != len(adj[v]):
            raise AssertionError("face structure does not close into a rotation")
        rotations[v] = cyc
    return rotations


@dataclass
class _Fragment:
    attachments: set[int]
    interior: set[int]          # empty for a chord
    chord: tuple[int, int] | None


def _fragments(
    adj: dict[int, set[int]],
    all_edges: set[frozenset[int]],
    h_vertices: set[int],
    h_edges: set[frozenset[int]],
) -> list[_Fragment]:
    frags: list[_Fragment] = []
    for e in sorted(all_edges - h_edges, key=sorted):
        u, v = sorted(e)
        if u in h_vertices and v in h_vertices:
            frags.append(_Fragment({u, v}, set(), (u, v)))
    seen: set[int] = set()
    for start in sorted(adj):
        if start in h_vertices or start in seen:
            continue
        interior = {start}
        seen.add(start)
        attach: set[int] = set()
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y in h_vertices:
                    attach.add(y)
                elif y not in seen:
                    seen.add(y)
                    interior.add(y)
                    stack.append(y)
        frags.append(_Fragment(attach, interior, None))
    return frags


def _find_cycle(adj: dict[int, set[int]]) -> list[int]:
    """Any cycle, via depth-first search (no cross edges in undirected DFS)."""
    start = min(adj)
    frames = [(start, -1, iter(sorted(adj[start])))]
    onpath = [start]
    onset = {start}
    visited = {start}
    while frames:
        v, parent, it = frames[-1]
        advanced = False
        for w in it:
            if w == parent:
                continue
            if w in onset:
                return onpath[onpath.index(w) :]
            if w not in visited:
                visited.add(w)
                frames.append((w, v, iter(sorted(adj[w]))))
                onpath.append(w)
                onset.add(w)
                advanced = True
                break
        if not advanced:
            frames.pop()
            onpath.pop()
            onset.discard(v)
    raise AssertionError("biconnected block with >= 3 vertices must contain a cycle")


def _alpha_path(adj: dict[int, set[int]], frag: _Fragment) -> list[int]:
    """A path between two distinct attachments through the fragment interior."""
    if frag.chord is not None:
        return list(frag.chord)
    a = min(frag.attachments)
    parent: dict[int, int] = {}
    queue = [x for x in sorted(adj[a]) if x in frag.interior]
    for x in queue:
        parent[x] = -1
    qi = 0
    while qi < len(queue):
        x = queue[qi]
        qi += 1
        for b in sorted(adj[x]):
            if b in frag.attachments and b != a:
                rev = [x]
                while parent[rev[-1]] != -1:
                    rev.append(parent[rev[-1]])
                return [a] + list(reversed(rev)) + [b]
            if b in frag.interior and b not in parent:
                parent[b] = x
                queue.append(b)
    raise AssertionError("fragment with a single attachment inside a biconnected block")


def _insert_path(faces: list[list[int]], face_idx: int, path: list[int]) -> None:
    """Split the directed face by the path; both orientations stay consistent."""
    face = faces[face_idx]
    a, b = path[0], path[-1]
    i, j = face.index(a), face.index(b)
    if i < j:
        seg_ab = face[i : j + 1]
        seg_ba = face[j:] + face[: i + 1]
    else:
        seg_ab = face[i:] + face[: j + 1]
        seg_ba = face[j : i + 1]
    interior = path[1:-1]
    faces[face_idx] = seg_ab + list(reversed(interior))
    faces.append(seg_ba + list(interior))


# ---------------------------------------------------------------------------
# Triangulation predicates
# ---------------------------------------------------------------------------


def is_triangulation(e: Embedding) -> bool:
    """Every face a triangle (maximal planar graph); requires n >= 3.

    For a connected spherical embedding this coincides with m = 3n - 6.
    """
    g = e.graph
    if g.n < 3 or not _is_connected(g) or not e.is_spherical:
        return False
    return all(len(f) == 3 for f in e.faces)


def neighborhood_cycle(e: Embedding, v: int) -> tuple[int, ...] | None:
    """Cyclic order of N(v) as a Hamiltonian cycle of the neighborhood.

    None when e is not a triangulation.  In a triangulation, consecutive
    rotation neighbors must be adjacent; a violation means the embedding is
    corrupt and raises.
    """
    if not is_triangulation(e):
        return None
    e.graph._check_vertex(v)
    rot = e.rotations[v]
    for i, a in enumerate(rot):
        b = rot[(i + 1) % len(rot)]
        if not e.graph.has_edge(a, b):
            raise EmbeddingError(
                f"triangulation invariant broken: {a} and {b} are consecutive "
                f"around {v} but not adjacent"
            )
    return rot


def triangular_faces(e: Embedding) -> list[Face]:
    """All faces of boundary length exactly 3, each face reported once."""
    return [f for f in e.faces if len(f) == 3]
