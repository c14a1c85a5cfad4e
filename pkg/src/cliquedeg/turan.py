"""Balanced complete multipartite graphs and their exact edge-count arithmetic.

All bound checks are integer-exact; nothing here touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import VERTEX_CAP, Graph, ResourceLimitError


@dataclass(frozen=True)
class TuranDecomposition:
    """Part sizes of the balanced r-partite graph on n vertices plus its edge count."""

    r: int
    n: int
    parts: tuple[int, ...]
    s: int  # n mod r: the number of parts of ceiling size
    t: int  # exact edge count


def turan_size(r: int, n: int) -> int:
    """Edge count of the balanced complete r-partite graph on n vertices.

    Computed exactly: with s = n mod r, the count is
    (r-1)(n^2 - s^2)/(2r) + s(s-1)/2, an integer for all inputs.
    """
    if r < 1:
        raise ValueError(f"part count must be at least 1, got {r}")
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    s = n % r
    num = (r - 1) * (n * n - s * s)
    assert num % (2 * r) == 0
    return num // (2 * r) + s * (s - 1) // 2


def turan_decomposition(r: int, n: int) -> TuranDecomposition:
    """Balanced part sizes (s parts of size ceil(n/r), then r-s of size floor(n/r))."""
    if r < 1:
        raise ValueError(f"part count must be at least 1, got {r}")
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    q, s = divmod(n, r)
    parts = (q + 1,) * s + (q,) * (r - s)
    return TuranDecomposition(r=r, n=n, parts=parts, s=s, t=turan_size(r, n))


def complete_multipartite(parts: list[int] | tuple[int, ...], cap: int = VERTEX_CAP) -> Graph:
    """Complete multipartite graph with the given part sizes.

    Vertices are numbered consecutively part by part; two vertices are
    adjacent iff they lie in different parts.
    """
    parts = tuple(parts)
    if not parts:
        raise ValueError("parts must be nonempty")
    for k in parts:
        if k < 1:
            raise ValueError(f"part sizes must be positive, got {k}")
    n = sum(parts)
    if n > cap:
        raise ResourceLimitError(f"vertex count {n} exceeds cap {cap}")
    full = (1 << n) - 1
    adj = []
    offset = 0
    for k in parts:
        part_mask = ((1 << k) - 1) << offset
        row = full & ~part_mask
        adj.extend([row] * k)
        offset += k
    return Graph._raw(n, tuple(adj))


def turan_graph(r: int, n: int, cap: int = VERTEX_CAP) -> tuple[Graph, TuranDecomposition]:
    """Balanced complete r-partite graph on n vertices plus its decomposition.

    For r > n the empty parts are dropped from the construction (the
    graph is then complete on n vertices); they remain in the
    decomposition so that the part list always has r entries.
    """
    dec = turan_decomposition(r, n)
    nonzero = tuple(k for k in dec.parts if k > 0)
    if not nonzero:
        if n > cap:
            raise ResourceLimitError(f"vertex count {n} exceeds cap {cap}")
        return Graph._raw(0, ()), dec
    return complete_multipartite(nonzero, cap=cap), dec
