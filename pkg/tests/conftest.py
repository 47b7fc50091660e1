from hypothesis import strategies as st

from pentaplanar.graphs import Graph


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 10):
    """Random simple graphs with mixed densities."""
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if not pairs:
        return Graph(n, [])
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [p for p, k in zip(pairs, keep) if k])
