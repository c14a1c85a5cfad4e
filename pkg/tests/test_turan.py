import pytest

from cliquedeg import (
    ResourceLimitError,
    complete_multipartite,
    enumerate_r_cliques,
    turan_decomposition,
    turan_graph,
    turan_size,
)


def test_turan_size_derived_values():
    # counted by hand: K(3,2), K(2,2,2), K(3,2,2)
    assert turan_size(2, 5) == 6
    assert turan_size(3, 6) == 12
    assert turan_size(3, 7) == 16


def test_turan_size_edge_cases():
    assert turan_size(1, 10) == 0
    assert turan_size(5, 5) == 10
    assert turan_size(9, 5) == 10  # r > n gives the complete graph
    assert turan_size(3, 0) == 0
    with pytest.raises(ValueError):
        turan_size(0, 5)


def test_decomposition_parts():
    dec = turan_decomposition(3, 7)
    assert dec.parts == (3, 2, 2) and dec.s == 1 and dec.t == 16
    dec = turan_decomposition(4, 4)
    assert dec.parts == (1, 1, 1, 1)
    dec = turan_decomposition(5, 3)
    assert dec.parts == (1, 1, 1, 0, 0) and sum(dec.parts) == 3


def test_complete_multipartite():
    g = complete_multipartite([2, 2])
    assert g.n == 4 and g.m == 4
    g = complete_multipartite([3, 2, 2])
    assert g.m == 16
    g = complete_multipartite([1, 1, 1])
    assert g.m == 3 and g.degrees() == (2, 2, 2)
    with pytest.raises(ValueError):
        complete_multipartite([2, 0])
    with pytest.raises(ValueError):
        complete_multipartite([])
    with pytest.raises(ResourceLimitError):
        complete_multipartite([40, 40])


def test_turan_graph_small():
    g, dec = turan_graph(2, 4)
    assert g.m == 4 == dec.t
    assert not any(True for _ in enumerate_r_cliques(g, 3))
    g, dec = turan_graph(3, 6)
    assert g.m == 12 and g.degrees() == (4,) * 6
    g, dec = turan_graph(5, 5)
    assert g.m == 10  # complete graph
    g, dec = turan_graph(3, 0)
    assert g.n == 0 and dec.t == 0


def test_turan_graph_clique_free():
    for r in range(2, 6):
        for n in range(r, 9):
            g, dec = turan_graph(r, n)
            assert g.m == dec.t == turan_size(r, n)
            assert not any(True for _ in enumerate_r_cliques(g, r + 1))
            assert any(True for _ in enumerate_r_cliques(g, r))


def test_strict_monotonicity_in_r():
    for n in range(1, 61):
        for q in range(1, n):
            assert turan_size(q, n) < turan_size(q + 1, n)


def test_quadratic_bounds_exact():
    # (r-1)n^2/(2r) >= t >= (r-1)n^2/(2r) - r/8, cross-multiplied to integers
    for n in range(0, 61):
        for r in range(1, n + 1):
            t = turan_size(r, n)
            assert 2 * r * t <= (r - 1) * n * n
            assert 4 * ((r - 1) * n * n - 2 * r * t) <= r * r


def test_parts_balanced_and_match_edge_count():
    for n in range(0, 30):
        for r in range(1, n + 2):
            dec = turan_decomposition(r, n)
            assert sum(dec.parts) == n and len(dec.parts) == r
            assert max(dec.parts) - min(dec.parts) <= 1
            assert dec.s == n % r
            if dec.s:
                assert sum(1 for k in dec.parts if k == -(-n // r)) == dec.s
            else:
                assert all(k == n // r for k in dec.parts)
            # edge count from the parts directly
            from_parts = (n * n - sum(k * k for k in dec.parts)) // 2
            assert from_parts == dec.t
