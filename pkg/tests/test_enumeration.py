import json

import pytest

from pentaplanar.canon import canonical_form
from pentaplanar.embeddings import is_triangulation
from pentaplanar.enumeration import (
    bruteforce_triangulations,
    canonical_code,
    code_to_embedding,
    corpus,
    corpus_graph6,
    enumerate_triangulations,
    split_vertex,
)
from pentaplanar.graphs import GraphError, parse_graph6

# published class counts of planar triangulations (simplicial polyhedra)
KNOWN_COUNTS = {4: 1, 5: 1, 6: 2, 7: 5, 8: 14, 9: 50, 10: 233, 11: 1249, 12: 7595}


@pytest.mark.parametrize("n", [4, 5, 6, 7, 8, 9])
def test_class_counts(n):
    assert len(corpus(n)) == KNOWN_COUNTS[n]


def test_every_class_is_a_valid_triangulation():
    for n in (4, 5, 6, 7, 8):
        for emb in corpus(n):
            g = emb.graph
            assert g.m == 3 * n - 6
            assert min(g.degree_sequence()) >= 3
            assert is_triangulation(emb)


def test_no_duplicate_canonical_forms():
    for n in (6, 7, 8, 9):
        forms = [canonical_form(e.graph) for e in corpus(n)]
        assert len(set(forms)) == len(forms)


def test_generator_equals_bruteforce_oracle_small():
    for n in (4, 5, 6):
        gen = sorted(canonical_form(e.graph) for e in corpus(n))
        assert gen == bruteforce_triangulations(n)


def test_bruteforce_range_check():
    with pytest.raises(GraphError):
        bruteforce_triangulations(8)
    with pytest.raises(GraphError):
        bruteforce_triangulations(2)


def _as_embedding(rotations):
    from pentaplanar.embeddings import Embedding
    from pentaplanar.graphs import Graph

    edges = sorted(
        {(min(v, w), max(v, w)) for v, rot in enumerate(rotations) for w in rot}
    )
    return Embedding(Graph(len(rotations), edges), rotations)


def test_split_vertex_always_yields_triangulations():
    for parent in corpus(6):
        rot = parent.rotations
        for v in range(6):
            d = len(rot[v])
            for i in range(d):
                for j in range(i + 1, d):
                    child = _as_embedding(split_vertex(rot, v, i, j))
                    assert child.graph.n == 7
                    assert child.graph.m == 3 * 7 - 6
                    assert is_triangulation(child)


def test_code_roundtrip():
    for emb in corpus(7):
        code = canonical_code(emb)
        back = code_to_embedding(code)
        assert canonical_code(back) == code
        assert canonical_form(back.graph) == canonical_form(emb.graph)


def test_certificate_and_dump():
    cert = enumerate_triangulations(6)
    assert cert.count == 2
    lines = corpus_graph6(6)
    assert lines == sorted(lines)
    assert len(lines) == 2
    for line in lines:
        assert parse_graph6(line).n == 6
    payload = json.loads(cert.to_json())
    assert payload["schema_version"] == 1
    assert payload["count"] == 2
    assert payload["digest"] == cert.digest


def test_visitor_called_once_per_class():
    seen = []
    cert = enumerate_triangulations(7, visitor=lambda e: seen.append(e))
    assert cert.count == len(seen) == 5
    forms = {canonical_form(e.graph) for e in seen}
    assert len(forms) == 5


def test_determinism_across_runs_and_workers():
    base = enumerate_triangulations(8, workers=1)
    again = enumerate_triangulations(8, workers=1)
    pooled = enumerate_triangulations(8, workers=4)
    assert base == again == pooled


def test_range_checks():
    with pytest.raises(GraphError):
        corpus(3)
    with pytest.raises(GraphError):
        corpus(15)
