"""Greedy maximum-degree clique construction and per-graph bound checks.

The construction starts from a maximum-degree vertex and repeatedly
appends a maximum-degree vertex of the common neighborhood of the
vertices chosen so far, until that neighborhood is empty.  Degree ties
make the outcome non-unique; ``greedy_sequence`` resolves ties by
lowest index, ``all_greedy_sequences`` branches on every tie.

The check functions evaluate, per graph, the bounds that every such
sequence must satisfy once the edge count reaches the balanced
r-partite threshold:

* floor check: every sequence has at least r vertices, the first r
  degrees sum to at least (r-1)n, and equality forces m to equal the
  threshold exactly;
* mean check: the best sequence's first-r degree sum X satisfies
  X*n >= 2rm, strictly when the graph is not regular.

Both checks aggregate over all tie branches by scanning prefix *sets*
instead of ordered sequences: the candidate set and the first-r degree
sum depend only on the set of chosen vertices, so deduplicating by set
preserves every quantity checked while avoiding factorial blowup.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph6 import to_graph6
from .graphs import Graph, ResourceLimitError, _bits
from .turan import turan_size

DEFAULT_BRANCH_CAP = 100_000


class PreconditionError(ValueError):
    """The checked statement's hypothesis does not hold for this input."""


@dataclass(frozen=True)
class GreedySequence:
    """One run of the greedy construction: vertices in order plus prefix degree sums."""

    vertices: tuple[int, ...]
    degree_sums: tuple[int, ...]
    tie_policy: str  # "lowest-index" or "all-branches"


def greedy_sequence(g: Graph) -> GreedySequence:
    """Run the construction once, breaking every degree tie by lowest vertex index."""
    if g.n == 0:
        raise ValueError("greedy construction needs at least one vertex")
    adj = g.adj
    degs = g.degrees()
    cand = g.full_mask
    vertices: list[int] = []
    sums: list[int] = []
    total = 0
    while cand:
        pick = -1
        best = -1
        for v in _bits(cand):
            if degs[v] > best:
                best = degs[v]
                pick = v
        vertices.append(pick)
        total += best
        sums.append(total)
        cand &= adj[pick]
    return GreedySequence(tuple(vertices), tuple(sums), "lowest-index")


def all_greedy_sequences(g: Graph, branch_cap: int = DEFAULT_BRANCH_CAP) -> list[GreedySequence]:
    """Every vertex sequence the construction can produce, over all tie choices.

    Returns the deduplicated sequences sorted by vertex tuple.  Raises
    ResourceLimitError once more than ``branch_cap`` sequences complete.
    """
    if branch_cap < 1:
        raise ValueError(f"branch cap must be at least 1, got {branch_cap}")
    if g.n == 0:
        raise ValueError("greedy construction needs at least one vertex")
    adj = g.adj
    degs = g.degrees()
    out: list[GreedySequence] = []

    def rec(prefix: list[int], sums: list[int], cand: int):
        if not cand:
            if len(out) >= branch_cap:
                raise ResourceLimitError(
                    f"greedy tie branching exceeded branch cap {branch_cap}"
                )
            out.append(GreedySequence(tuple(prefix), tuple(sums), "all-branches"))
            return
        best = max(degs[v] for v in _bits(cand))
        base = sums[-1] if sums else 0
        for v in _bits(cand):
            if degs[v] == best:
                prefix.append(v)
                sums.append(base + best)
                rec(prefix, sums, cand & adj[v])
                prefix.pop()
                sums.pop()

    rec([], [], g.full_mask)
    out.sort(key=lambda s: s.vertices)
    return out


def greedy_prefix_extremes(
    adj: tuple[int, ...] | list[int],
    degs: tuple[int, ...] | list[int],
    r: int,
) -> tuple[Optional[int], Optional[int], Optional[int]]:
    """Kernel: scan all tie branches to depth r by deduplicating prefix sets.

    Returns (shortest_stop, min_sum, max_sum) where shortest_stop is the
    length of the shortest maximal sequence that stops before r vertices
    (None when every branch reaches depth r), and min_sum/max_sum range
    over the first-r degree sums of branches that reach depth r (None
    when none does).
    """
    n = len(adj)
    full = (1 << n) - 1
    level: dict[int, tuple[int, int]] = {0: (full, 0)}
    shortest_stop: Optional[int] = None
    for depth in range(r):
        nxt: dict[int, tuple[int, int]] = {}
        for state, (cand, acc) in level.items():
            if not cand:
                if shortest_stop is None or depth < shortest_stop:
                    shortest_stop = depth
                continue
            best = -1
            chosen: list[int] = []
            w = cand
            while w:
                b = w & -w
                v = b.bit_length() - 1
                w ^= b
                d = degs[v]
                if d > best:
                    best = d
                    chosen = [v]
                elif d == best:
                    chosen.append(v)
            acc2 = acc + best
            for v in chosen:
                ns = state | 1 << v
                if ns not in nxt:
                    nxt[ns] = (cand & adj[v], acc2)
        level = nxt
        if not level:
            return shortest_stop, None, None
    sums = [acc for (_, acc) in level.values()]
    return shortest_stop, min(sums), max(sums)


def _best_sequence_witness(g: Graph, r: int) -> tuple[int, tuple[int, ...]]:
    """Max first-r degree sum over all tie branches, with one ordered witness run."""
    adj = g.adj
    degs = g.degrees()
    level: dict[int, tuple[int, int]] = {0: (g.full_mask, 0)}
    parents: dict[int, tuple[int, int]] = {}
    for _ in range(r):
        nxt: dict[int, tuple[int, int]] = {}
        for state in sorted(level):
            cand, acc = level[state]
            if not cand:
                continue
            best = max(degs[v] for v in _bits(cand))
            for v in _bits(cand):
                if degs[v] != best:
                    continue
                ns = state | 1 << v
                if ns not in nxt:
                    nxt[ns] = (cand & adj[v], acc + best)
                    parents[ns] = (state, v)
        level = nxt
    best_state = max(sorted(level), key=lambda s: level[s][1])
    best_sum = level[best_state][1]
    seq: list[int] = []
    state = best_state
    while state:
        state, v = parents[state]
        seq.append(v)
    seq.reverse()
    return best_sum, tuple(seq)


def _require_threshold(g: Graph, r: int) -> int:
    if r < 2:
        raise PreconditionError(f"clique size must be at least 2, got {r}")
    if g.n < r:
        raise PreconditionError(f"need n >= r, got n={g.n}, r={r}")
    t = turan_size(r, g.n)
    if g.m < t:
        raise PreconditionError(
            f"need m >= {t} (balanced {r}-partite threshold for n={g.n}), got m={g.m}"
        )
    return t


@dataclass(frozen=True)
class FloorCheckReport:
    """Per-graph result for the length/floor/equality bounds on greedy sequences."""

    n: int
    m: int
    r: int
    floor: int  # (r-1) * n
    threshold: int  # balanced r-partite edge count
    all_reach_r: bool
    min_first_r_sum: Optional[int]
    max_first_r_sum: Optional[int]
    equality_attained: bool
    ok: bool
    failure: Optional[str]
    counterexample_g6: Optional[str]


def check_floor_bound(g: Graph, r: int) -> FloorCheckReport:
    """Check, over all tie branches: length >= r, first-r sum >= (r-1)n, and
    that any branch attaining the floor exactly forces m to equal the threshold."""
    t = _require_threshold(g, r)
    floor = (r - 1) * g.n
    shortest_stop, min_sum, max_sum = greedy_prefix_extremes(g.adj, g.degrees(), r)
    failure = None
    if shortest_stop is not None:
        failure = f"a maximal greedy sequence stops at {shortest_stop} < {r} vertices"
    elif min_sum is None:
        failure = f"no greedy branch reaches {r} vertices"
    elif min_sum < floor:
        failure = f"first-{r} degree sum {min_sum} below floor {floor}"
    equality = min_sum == floor if min_sum is not None else False
    if failure is None and equality and g.m != t:
        failure = f"floor attained but m={g.m} differs from threshold {t}"
    ok = failure is None
    return FloorCheckReport(
        n=g.n,
        m=g.m,
        r=r,
        floor=floor,
        threshold=t,
        all_reach_r=shortest_stop is None and min_sum is not None,
        min_first_r_sum=min_sum,
        max_first_r_sum=max_sum,
        equality_attained=equality,
        ok=ok,
        failure=failure,
        counterexample_g6=None if ok else to_graph6(g),
    )


@dataclass(frozen=True)
class MeanCheckReport:
    """Per-graph result for the 2rm/n bound on the best greedy sequence."""

    n: int
    m: int
    r: int
    best_first_r_sum: Optional[int]
    min_first_r_sum: Optional[int]  # per-branch statistic, not asserted
    regular: bool
    strict_required: bool
    ok: bool
    failure: Optional[str]
    witness: Optional[tuple[int, ...]]
    counterexample_g6: Optional[str]


def check_mean_bound(g: Graph, r: int) -> MeanCheckReport:
    """Check that the best first-r degree sum X over all tie branches satisfies
    X*n >= 2rm, strictly when the graph is not regular.  Integer arithmetic only."""
    _require_threshold(g, r)
    shortest_stop, min_sum, max_sum = greedy_prefix_extremes(g.adj, g.degrees(), r)
    regular = g.is_regular()
    failure = None
    witness: Optional[tuple[int, ...]] = None
    if max_sum is None:
        failure = f"no greedy branch reaches {r} vertices"
    else:
        lhs = max_sum * g.n
        rhs = 2 * r * g.m
        if lhs < rhs:
            failure = f"best first-{r} sum {max_sum}: {lhs} < {rhs}"
        elif not regular and lhs == rhs:
            failure = f"graph not regular but best sum meets 2rm/n with equality"
        else:
            _, witness = _best_sequence_witness(g, r)
    ok = failure is None
    return MeanCheckReport(
        n=g.n,
        m=g.m,
        r=r,
        best_first_r_sum=max_sum,
        min_first_r_sum=min_sum,
        regular=regular,
        strict_required=not regular,
        ok=ok,
        failure=failure,
        witness=witness,
        counterexample_g6=None if ok else to_graph6(g),
    )
