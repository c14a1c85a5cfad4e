"""Exact clique enumeration and the maximum degree sum over r-cliques."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .graphs import Graph, VertexSet, _bits


@dataclass(frozen=True)
class DegreeSumResult:
    """Maximum degree sum over r-cliques; witness is absent iff there is no r-clique."""

    r: int
    value: int
    witness: Optional[VertexSet]


def enumerate_r_cliques(g: Graph, r: int) -> Iterator[VertexSet]:
    """Yield every r-clique exactly once, in lexicographic order of sorted vertex lists.

    Ordered backtracking: each chosen vertex restricts the candidate set
    to its higher-indexed common neighbors, so every clique appears once.
    """
    if r < 1:
        raise ValueError(f"clique size must be at least 1, got {r}")
    n = g.n
    if r > n:
        return
    adj = g.adj

    def extend(chosen: int, count: int, cand: int) -> Iterator[int]:
        if count == r:
            yield chosen
            return
        for v in _bits(cand):
            higher = cand & adj[v] & ~((1 << (v + 1)) - 1)
            if count + 1 == r:
                yield chosen | 1 << v
            else:
                yield from extend(chosen | 1 << v, count + 1, higher)

    full = g.full_mask
    if r == 1:
        for v in range(n):
            yield VertexSet(1 << v, n)
        return
    for bits in extend(0, 0, full):
        yield VertexSet(bits, n)


def degree_sum(g: Graph, members: VertexSet) -> int:
    """Sum of the graph degrees of the given vertices."""
    if members.n != g.n:
        raise ValueError(f"vertex set over {members.n} vertices used with n={g.n}")
    return sum(g.adj[v].bit_count() for v in _bits(members.bits))


def max_clique_degree_sum(g: Graph, r: int) -> DegreeSumResult:
    """Maximum over all r-cliques of the sum of their vertex degrees.

    Returns value 0 and no witness when the graph has no r-clique
    (including r > n).  The witness is the lexicographically least
    maximizing clique.
    """
    if r < 1:
        raise ValueError(f"clique size must be at least 1, got {r}")
    degs = g.degrees()
    best = -1
    best_bits = 0
    for clique in enumerate_r_cliques(g, r):
        s = sum(degs[v] for v in _bits(clique.bits))
        if s > best:
            best = s
            best_bits = clique.bits
    if best < 0:
        return DegreeSumResult(r=r, value=0, witness=None)
    return DegreeSumResult(r=r, value=best, witness=VertexSet(best_bits, g.n))


def max_degree_sum_value(
    adj: tuple[int, ...] | list[int],
    degs: tuple[int, ...] | list[int],
    r: int,
    abort_above: int | None = None,
) -> int | None:
    """Kernel: the value of max_clique_degree_sum on raw adjacency rows.

    Returns None as soon as some r-clique's degree sum exceeds
    ``abort_above`` (callers scanning for minima over many graphs use
    this to skip graphs that cannot matter).  0 when no r-clique exists.
    """
    n = len(adj)
    if r > n:
        return 0
    if r == 1:
        best = max(degs) if n else 0
        if abort_above is not None and best > abort_above:
            return None
        return best
    best = 0
    found = False
    if r == 2:
        # edge endpoints have degree >= 1, so any edge beats the initial 0
        for u in range(n):
            row = adj[u] >> (u + 1) << (u + 1)
            for v in _bits(row):
                s = degs[u] + degs[v]
                if s > best:
                    best = s
                    if abort_above is not None and best > abort_above:
                        return None
        return best
    # general r >= 3: depth-first over increasing vertex indices
    stack = [(0, 0, (1 << n) - 1)]
    while stack:
        acc, count, cand = stack.pop()
        for v in _bits(cand):
            s = acc + degs[v]
            if count + 1 == r:
                found = True
                if s > best:
                    best = s
                    if abort_above is not None and best > abort_above:
                        return None
            else:
                higher = cand & adj[v] & ~((1 << (v + 1)) - 1)
                if higher:
                    stack.append((s, count + 1, higher))
    return best if found else 0
