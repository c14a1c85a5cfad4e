"""Minimum over all (n, m)-graphs of the max clique degree sum, by brute force.

Exhaustive mode enumerates every labeled graph with m edges (n <= 7, or
n = 8 with canonical-form deduplication); local-search mode runs
steepest-descent edge swaps and reports an upper bound.  The labeled
enumeration is shardable into contiguous lexicographic ranges of the
m-subset space, and the merge (minimum value, ties by least canonical
form) is independent of the shard layout, so any worker count produces
identical records.
"""

from __future__ import annotations

import itertools
import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from .cliques import max_degree_sum_value
from .graph6 import to_graph6
from .graphs import VERTEX_CAP, Graph, ResourceLimitError
from .greedy import greedy_prefix_extremes
from .turan import turan_size

EXHAUSTIVE_MAX_N = 7
CANONICAL_MAX_N = 8

REGIME_BELOW = "below-threshold"
REGIME_AT = "at-threshold"
REGIME_ABOVE = "above-threshold"

CSV_HEADER = "n,m,r,mode,delta_min,ratio_num,ratio_den,witness_g6,graphs_examined"


@dataclass(frozen=True)
class ScanRecord:
    """One (n, m, r) data point: the minimized value, a witness, and the 2rm/n bound."""

    n: int
    m: int
    r: int
    mode: str
    delta_min: int
    witness_g6: str
    ratio_num: int  # 2rm/n in lowest terms
    ratio_den: int
    graphs_examined: int
    regime: str


def _slots(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def enumerate_graphs(n: int, m: int) -> Iterator[Graph]:
    """Every labeled graph on n vertices with exactly m edges, each once.

    Iterates m-subsets of the edge slots (pairs (u, v) with u < v in
    lexicographic order) in lexicographic order.
    """
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    if n > CANONICAL_MAX_N:
        raise ResourceLimitError(
            f"exhaustive enumeration capped at n={CANONICAL_MAX_N}; "
            "use canonical or local-search modes for larger graphs"
        )
    slots = _slots(n)
    if m < 0 or m > len(slots):
        raise ValueError(f"edge count {m} outside 0..{len(slots)}")
    for combo in itertools.combinations(range(len(slots)), m):
        adj = [0] * n
        for idx in combo:
            u, v = slots[idx]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        yield Graph._raw(n, tuple(adj))


# ---------------------------------------------------------------------------
# canonical form


def _canonical_chunks(
    adj, n: int, bound: Optional[tuple[int, ...]] = None
) -> Optional[list[int]]:
    """Least column-order upper-triangle encoding over all vertex orders.

    The encoding is one integer "chunk" per position j >= 1 holding the
    adjacency bits of the j-th placed vertex to the previously placed
    ones.  Branch-and-bound: subtrees whose prefix already exceeds the
    best known encoding are pruned.  With ``bound`` given, returns None
    unless some ordering beats the bound strictly.
    """
    if n <= 1:
        return None if bound is not None else []
    best: Optional[list[int]] = list(bound) if bound is not None else None

    def rec(chosen: list[int], chunks: list[int], used: int, tight: bool) -> bool:
        nonlocal best
        j = len(chosen)
        if j == n:
            if best is None or not tight:
                best = chunks.copy()
                return True
            return False
        cands = []
        for w in range(n):
            if used >> w & 1:
                continue
            c = 0
            aw = adj[w]
            for i in range(j):
                c = c << 1 | (aw >> chosen[i] & 1)
            cands.append((c, w))
        cands.sort()
        cur_tight = tight
        improved_here = False
        for c, w in cands:
            if cur_tight and best is not None and j >= 1:
                bc = best[j - 1]
                if c > bc:
                    break
                child_tight = c == bc
            else:
                child_tight = cur_tight and best is not None
            chosen.append(w)
            if j >= 1:
                chunks.append(c)
            imp = rec(chosen, chunks, used | 1 << w, child_tight)
            if j >= 1:
                chunks.pop()
            chosen.pop()
            if imp:
                improved_here = True
                cur_tight = True
        return improved_here

    improved = rec([], [], 0, bound is not None)
    if bound is not None and not improved:
        return None
    return best


def _render_chunks(chunks: list[int]) -> str:
    return "".join(format(c, f"0{j}b") for j, c in enumerate(chunks, start=1))


def canonical_form(g: Graph) -> str:
    """Lexicographically least upper-triangle adjacency bitstring over all
    vertex permutations; equal exactly for isomorphic graphs."""
    if g.n > CANONICAL_MAX_N:
        raise ResourceLimitError(f"canonical form capped at n={CANONICAL_MAX_N}, got {g.n}")
    chunks = _canonical_chunks(g.adj, g.n)
    return _render_chunks(chunks if chunks is not None else [])


def graph_from_triangle_bits(n: int, bits: str) -> Graph:
    """Rebuild a graph from a column-order upper-triangle bitstring."""
    if len(bits) != n * (n - 1) // 2:
        raise ValueError(f"expected {n * (n - 1) // 2} bits for n={n}, got {len(bits)}")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k] == "1":
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph._raw(n, tuple(adj))


# ---------------------------------------------------------------------------
# exhaustive minimum


def _combo_unrank(nslots: int, m: int, rank: int) -> list[int]:
    combo = []
    c = 0
    for pos in range(m):
        while True:
            cnt = math.comb(nslots - c - 1, m - pos - 1)
            if rank < cnt:
                combo.append(c)
                c += 1
                break
            rank -= cnt
            c += 1
    return combo


def _combo_next(combo: list[int], nslots: int) -> bool:
    m = len(combo)
    i = m - 1
    while i >= 0 and combo[i] == nslots - m + i:
        i -= 1
    if i < 0:
        return False
    combo[i] += 1
    for j in range(i + 1, m):
        combo[j] = combo[j - 1] + 1
    return True


def _min_scan_range(args) -> tuple[Optional[int], Optional[tuple[int, ...]], int]:
    """Partial minimum over one contiguous lex range of edge-subset space.

    Returns (min value, canonical chunks of the tie-least minimizer,
    graphs examined).  Top-level so it can run in worker processes.
    """
    n, m, r, start, count, mode = args
    slots = _slots(n)
    nslots = len(slots)
    best_val: Optional[int] = None
    best_canon: Optional[tuple[int, ...]] = None
    examined = 0
    seen: Optional[set] = set() if mode == "canonical" else None

    full_space = start == 0 and count == math.comb(nslots, m)
    if full_space:
        combos: Iterator = itertools.combinations(range(nslots), m)
    else:
        combos = _range_combos(nslots, m, start, count)

    for combo in combos:
        examined += 1
        adj = [0] * n
        for idx in combo:
            u, v = slots[idx]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        degs = [a.bit_count() for a in adj]
        if seen is not None:
            canon = tuple(_canonical_chunks(adj, n))
            if canon in seen:
                continue
            seen.add(canon)
        if r == 2:
            # every edge endpoint has degree >= 1, so 0 doubles as "no edge"
            val: Optional[int] = 0
            for idx in combo:
                u, v = slots[idx]
                s = degs[u] + degs[v]
                if s > val:
                    val = s
                    if best_val is not None and val > best_val:
                        val = None
                        break
        else:
            val = max_degree_sum_value(adj, degs, r, abort_above=best_val)
        if val is None:
            continue
        if best_val is None or val < best_val:
            best_val = val
            best_canon = tuple(_canonical_chunks(adj, n))
        elif val == best_val:
            better = _canonical_chunks(adj, n, bound=best_canon)
            if better is not None:
                best_canon = tuple(better)
    return best_val, best_canon, examined


def _range_combos(nslots: int, m: int, start: int, count: int) -> Iterator[tuple[int, ...]]:
    combo = _combo_unrank(nslots, m, start)
    for _ in range(count):
        yield tuple(combo)
        if not _combo_next(combo, nslots):
            break


def _shard_bounds(total: int, workers: int) -> list[tuple[int, int]]:
    bounds = [total * k // workers for k in range(workers + 1)]
    return [(bounds[k], bounds[k + 1] - bounds[k]) for k in range(workers)]


def _regime(m: int, r: int, n: int) -> str:
    t = turan_size(r, n)
    if m < t:
        return REGIME_BELOW
    if m == t:
        return REGIME_AT
    return REGIME_ABOVE


def _make_record(n, m, r, mode, value, canon_chunks, examined) -> ScanRecord:
    witness = graph_from_triangle_bits(n, _render_chunks(list(canon_chunks)))
    ratio = Fraction(2 * r * m, n)
    return ScanRecord(
        n=n,
        m=m,
        r=r,
        mode=mode,
        delta_min=value,
        witness_g6=to_graph6(witness),
        ratio_num=ratio.numerator,
        ratio_den=ratio.denominator,
        graphs_examined=examined,
        regime=_regime(m, r, n),
    )


def extremal_degree_sum_min(
    n: int,
    m: int,
    r: int,
    mode: str = "exhaustive",
    workers: int = 1,
    max_graphs: Optional[int] = None,
) -> ScanRecord:
    """Exact minimum over all labeled (n, m)-graphs of the max r-clique degree sum.

    The witness is the canonical representative of the minimizing
    isomorphism class with the least canonical form.
    """
    if n < 1:
        raise ValueError(f"vertex count must be at least 1, got {n}")
    if r < 1:
        raise ValueError(f"clique size must be at least 1, got {r}")
    nslots = n * (n - 1) // 2
    if m < 0 or m > nslots:
        raise ValueError(f"edge count {m} outside 0..{nslots}")
    if mode == "exhaustive":
        if n > EXHAUSTIVE_MAX_N:
            raise ResourceLimitError(
                f"exhaustive mode capped at n={EXHAUSTIVE_MAX_N}; "
                "use canonical (n=8) or local-search modes"
            )
    elif mode == "canonical":
        if n > CANONICAL_MAX_N:
            raise ResourceLimitError(
                f"canonical mode capped at n={CANONICAL_MAX_N}; use local-search"
            )
    else:
        raise ValueError(f"unknown exact mode {mode!r}")
    total = math.comb(nslots, m)
    if max_graphs is not None and total > max_graphs:
        raise ResourceLimitError(f"{total} graphs exceed max-graphs limit {max_graphs}")
    if workers < 1:
        raise ValueError(f"worker count must be at least 1, got {workers}")
    if workers == 1 or total < 2 * workers:
        parts = [_min_scan_range((n, m, r, 0, total, mode))]
    else:
        jobs = [(n, m, r, lo, cnt, mode) for lo, cnt in _shard_bounds(total, workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_min_scan_range, jobs))
    examined = sum(p[2] for p in parts)
    candidates = [(p[0], p[1]) for p in parts if p[0] is not None]
    value, canon = min(candidates)
    return _make_record(n, m, r, mode, value, canon, examined)


# ---------------------------------------------------------------------------
# near-regular construction


def _spread_positions(count: int, total: int) -> set[int]:
    return {i * total // count for i in range(count)}


def near_regular_graph(n: int, m: int) -> Graph:
    """A graph with exactly m edges whose degrees differ by at most 1.

    Circulant construction: full distance classes around a cycle (each
    class is regular), then the remainder as distance-1 cycle edges
    spread evenly so no vertex is bumped twice unless all are bumped
    at least once.
    """
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    nslots = n * (n - 1) // 2
    if m < 0 or m > nslots:
        raise ValueError(f"edge count {m} infeasible for n={n} (0..{nslots})")
    adj = [0] * n
    remaining = m

    def add(u: int, v: int):
        adj[u] |= 1 << v
        adj[v] |= 1 << u

    for d in range(2, n // 2 + 1):
        size = n // 2 if 2 * d == n else n
        if remaining < size:
            break
        for i in range(size):
            add(i, (i + d) % n)
        remaining -= size
    if n >= 3:
        cycle = [(i, (i + 1) % n) for i in range(n)]
    elif n == 2:
        cycle = [(0, 1)]
    else:
        cycle = []
    k = remaining
    if k == len(cycle):
        chosen = set(range(len(cycle)))
    elif k <= len(cycle) // 2:
        chosen = _spread_positions(k, len(cycle)) if k else set()
    else:
        skipped = _spread_positions(len(cycle) - k, len(cycle))
        chosen = set(range(len(cycle))) - skipped
    for i in chosen:
        add(*cycle[i])
    return Graph._raw(n, tuple(adj))


# ---------------------------------------------------------------------------
# local search


def _graph_key(adj, n: int):
    """Deterministic tie key: canonical chunks where feasible, else the labeled encoding."""
    if n <= CANONICAL_MAX_N:
        return tuple(_canonical_chunks(adj, n))
    return tuple(adj)


def extremal_degree_sum_local_search(
    n: int,
    m: int,
    r: int,
    seed: int = 0,
    restarts: int = 4,
    iter_budget: int = 200,
) -> ScanRecord:
    """Upper bound on the exact minimum via steepest-descent edge swaps.

    One start from the near-regular graph plus ``restarts`` seeded
    random starts (restart i uses seed + i).  A move removes one edge
    and adds one non-edge; ties in the objective are broken by the
    graph key, and plateau moves (equal objective, strictly smaller
    key) are limited to ``iter_budget`` per start.  Deterministic given
    the seed.
    """
    if n < 1:
        raise ValueError(f"vertex count must be at least 1, got {n}")
    if n > VERTEX_CAP:
        raise ResourceLimitError(f"vertex count {n} exceeds cap {VERTEX_CAP}")
    if r < 1:
        raise ValueError(f"clique size must be at least 1, got {r}")
    slots = _slots(n)
    if m < 0 or m > len(slots):
        raise ValueError(f"edge count {m} outside 0..{len(slots)}")
    if restarts < 0 or iter_budget < 0:
        raise ValueError("restarts and iter-budget must be nonnegative")

    def evaluate(adj) -> int:
        degs = [a.bit_count() for a in adj]
        return max_degree_sum_value(adj, degs, r)

    starts = [list(near_regular_graph(n, m).adj)]
    for i in range(1, restarts + 1):
        rng = random.Random(seed + i)
        adj = [0] * n
        for u, v in rng.sample(slots, m):
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        starts.append(adj)

    evals = 0
    best_val: Optional[int] = None
    best_key = None
    for adj in starts:
        cur = adj
        cur_val = evaluate(cur)
        evals += 1
        cur_key = _graph_key(cur, n)
        if best_val is None or (cur_val, cur_key) < (best_val, best_key):
            best_val, best_key = cur_val, cur_key
        plateau = 0
        while True:
            edges = [(u, v) for u in range(n) for v in range(u + 1, n) if cur[u] >> v & 1]
            holes = [(u, v) for u in range(n) for v in range(u + 1, n) if not cur[u] >> v & 1]
            nb_val: Optional[int] = None
            nb_key = None
            nb_adj = None
            for eu, ev in edges:
                for hu, hv in holes:
                    cand = list(cur)
                    cand[eu] &= ~(1 << ev)
                    cand[ev] &= ~(1 << eu)
                    cand[hu] |= 1 << hv
                    cand[hv] |= 1 << hu
                    degs = [a.bit_count() for a in cand]
                    val = max_degree_sum_value(cand, degs, r, abort_above=nb_val)
                    evals += 1
                    if val is None:
                        continue
                    if nb_val is None or val < nb_val:
                        nb_val, nb_key, nb_adj = val, _graph_key(cand, n), cand
                    elif val == nb_val:
                        key = _graph_key(cand, n)
                        if key < nb_key:
                            nb_key, nb_adj = key, cand
            if nb_val is None:
                break
            if nb_val < cur_val:
                cur, cur_val, cur_key = nb_adj, nb_val, nb_key
            elif nb_val == cur_val and nb_key < cur_key and plateau < iter_budget:
                plateau += 1
                cur, cur_key = nb_adj, nb_key
            else:
                break
            if (cur_val, cur_key) < (best_val, best_key):
                best_val, best_key = cur_val, cur_key

    if n <= CANONICAL_MAX_N:
        canon = best_key
    else:
        canon = None
    if canon is not None:
        witness = graph_from_triangle_bits(n, _render_chunks(list(canon)))
    else:
        witness = Graph._raw(n, tuple(best_key))
    ratio = Fraction(2 * r * m, n)
    return ScanRecord(
        n=n,
        m=m,
        r=r,
        mode="local-search",
        delta_min=best_val,
        witness_g6=to_graph6(witness),
        ratio_num=ratio.numerator,
        ratio_den=ratio.denominator,
        graphs_examined=evals,
        regime=_regime(m, r, n),
    )


# ---------------------------------------------------------------------------
# scans, stability, verification


def scan_m(
    n: int,
    r: int,
    m_from: int,
    m_to: int,
    mode: str = "exhaustive",
    seed: int = 0,
    restarts: int = 4,
    iter_budget: int = 200,
    workers: int = 1,
    max_graphs: Optional[int] = None,
) -> list[ScanRecord]:
    """One record per edge count in [m_from, m_to]; empty range gives an empty list."""
    records = []
    for m in range(m_from, m_to + 1):
        if mode == "local-search":
            records.append(
                extremal_degree_sum_local_search(
                    n, m, r, seed=seed, restarts=restarts, iter_budget=iter_budget
                )
            )
        else:
            records.append(
                extremal_degree_sum_min(
                    n, m, r, mode=mode, workers=workers, max_graphs=max_graphs
                )
            )
    return records


def band_violation(rec: ScanRecord) -> Optional[str]:
    """The two-sided bound 2rm <= value*n < 2rm + rn, checked when m is at or
    above the threshold; only exact modes can witness a violation."""
    if rec.mode not in ("exhaustive", "canonical"):
        return None
    if rec.regime == REGIME_BELOW:
        return None
    lhs = rec.delta_min * rec.n
    lo = 2 * rec.r * rec.m
    hi = lo + rec.r * rec.n
    if lhs < lo:
        return f"delta_min*n = {lhs} < 2rm = {lo}"
    if lhs >= hi:
        return f"delta_min*n = {lhs} >= 2rm + rn = {hi}"
    return None


@dataclass(frozen=True)
class StabilityParams:
    """Window just below the r-partite threshold: width ceil(delta*n^2) where
    delta = epsilon^2/32.

    Any epsilon in (0, 1) is accepted; epsilons at or above 2/(r(r+1))
    fall outside the range the underlying argument assumes (shrinking
    epsilon only strengthens the statement), which the report flags via
    ``within_proof_range``.
    """

    epsilon: Fraction
    r: int
    n: int

    def __post_init__(self):
        if self.r < 2:
            raise ValueError(f"clique size must be at least 2, got {self.r}")
        if self.n < self.r:
            raise ValueError(f"need n >= r, got n={self.n}, r={self.r}")
        if not (0 < self.epsilon < 1):
            raise ValueError(f"epsilon must be in (0, 1), got {self.epsilon}")

    @property
    def delta(self) -> Fraction:
        return self.epsilon * self.epsilon / 32

    @property
    def m_threshold(self) -> int:
        return turan_size(self.r, self.n) - math.ceil(self.delta * self.n * self.n)

    @property
    def within_proof_range(self) -> bool:
        return self.epsilon < Fraction(2, self.r * (self.r + 1))


@dataclass(frozen=True)
class StabilityRow:
    m: int
    delta_min: int
    ratio_num: int  # delta_min * n / (2rm) in lowest terms
    ratio_den: int
    ratio_decimal: str
    exceeds_threshold: bool  # ratio > 1 - epsilon


@dataclass(frozen=True)
class StabilityReport:
    r: int
    n: int
    epsilon_num: int
    epsilon_den: int
    delta_num: int
    delta_den: int
    m_threshold: int
    m_upper: int
    mode: str
    within_proof_range: bool
    rows: tuple[StabilityRow, ...]


def _decimal_6(frac: Fraction) -> str:
    q, rem = divmod(frac.numerator * 10**6, frac.denominator)
    if 2 * rem >= frac.denominator:
        q += 1
    return f"{q // 10**6}.{q % 10**6:06d}"


def stability_experiment(
    params: StabilityParams,
    mode: str = "exhaustive",
    seed: int = 0,
    restarts: int = 4,
    iter_budget: int = 200,
    workers: int = 1,
    max_graphs: Optional[int] = None,
) -> StabilityReport:
    """Ratio table value*n/(2rm) over the window just below the threshold.

    Purely empirical: the rows report whether each ratio exceeds
    1 - epsilon, nothing is asserted (the underlying statement is
    asymptotic and carries an unknown size threshold).
    """
    r, n = params.r, params.n
    upper = turan_size(r, n)
    lo = max(params.m_threshold + 1, 1)
    rows = []
    for m in range(lo, upper + 1):
        if mode == "local-search":
            rec = extremal_degree_sum_local_search(
                n, m, r, seed=seed, restarts=restarts, iter_budget=iter_budget
            )
        else:
            rec = extremal_degree_sum_min(
                n, m, r, mode=mode, workers=workers, max_graphs=max_graphs
            )
        ratio = Fraction(rec.delta_min * n, 2 * r * m)
        rows.append(
            StabilityRow(
                m=m,
                delta_min=rec.delta_min,
                ratio_num=ratio.numerator,
                ratio_den=ratio.denominator,
                ratio_decimal=_decimal_6(ratio),
                exceeds_threshold=ratio > 1 - params.epsilon,
            )
        )
    return StabilityReport(
        r=r,
        n=n,
        epsilon_num=params.epsilon.numerator,
        epsilon_den=params.epsilon.denominator,
        delta_num=params.delta.numerator,
        delta_den=params.delta.denominator,
        m_threshold=params.m_threshold,
        m_upper=upper,
        mode=mode,
        within_proof_range=params.within_proof_range,
        rows=tuple(rows),
    )


@dataclass(frozen=True)
class VerifyReport:
    n_max: int
    r_set: tuple[int, ...]
    mode: str
    graphs_examined: int
    cells: int
    violations: int
    counterexamples: tuple[dict, ...]
    cap_skips: int
    skipped_pairs: tuple[tuple[int, int], ...]


def verify_all(
    n_max: int,
    r_set: list[int] | tuple[int, ...],
    mode: str = "exhaustive",
    max_graphs: Optional[int] = None,
) -> VerifyReport:
    """Run both greedy checks on every labeled graph in range and the two-sided
    bound on every exhaustive minimum; every violation is carried as graph6.

    graphs_examined counts (graph, r) incidences: each enumerated graph
    once per clique size it is checked against.
    """
    if n_max > EXHAUSTIVE_MAX_N:
        raise ResourceLimitError(f"verify capped at n_max={EXHAUSTIVE_MAX_N}, got {n_max}")
    if mode not in ("exhaustive", "canonical"):
        raise ValueError(f"verify mode must be exhaustive or canonical, got {mode!r}")
    rs_all = sorted(set(r_set))
    for r in rs_all:
        if r < 2:
            raise ValueError(f"clique sizes must be at least 2, got {r}")
    skipped = tuple((n, r) for n in range(2, n_max + 1) for r in rs_all if r > n)
    counterexamples: list[dict] = []
    graphs_examined = 0
    cells = 0

    for n in range(2, n_max + 1):
        rs = [r for r in rs_all if r <= n]
        if not rs:
            continue
        slots = _slots(n)
        thresholds = {r: turan_size(r, n) for r in rs}
        m_lo = min(thresholds.values())
        for m in range(m_lo, len(slots) + 1):
            active = [r for r in rs if thresholds[r] <= m]
            if not active:
                continue
            if max_graphs is not None and math.comb(len(slots), m) > max_graphs:
                raise ResourceLimitError(
                    f"cell n={n} m={m} exceeds max-graphs limit {max_graphs}"
                )
            cell_min: dict[int, Optional[int]] = {r: None for r in active}
            seen: Optional[set] = set() if mode == "canonical" else None
            for combo in itertools.combinations(range(len(slots)), m):
                adj = [0] * n
                for idx in combo:
                    u, v = slots[idx]
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
                if seen is not None:
                    canon = tuple(_canonical_chunks(adj, n))
                    if canon in seen:
                        continue
                    seen.add(canon)
                degs = [a.bit_count() for a in adj]
                regular = min(degs) == max(degs)
                for r in active:
                    graphs_examined += 1
                    shortest, min_sum, max_sum = greedy_prefix_extremes(adj, degs, r)
                    problems = []
                    if shortest is not None or min_sum is None:
                        problems.append(f"greedy sequence shorter than {r}")
                    else:
                        if min_sum < (r - 1) * n:
                            problems.append(
                                f"first-{r} sum {min_sum} below floor {(r - 1) * n}"
                            )
                        if min_sum == (r - 1) * n and m != thresholds[r]:
                            problems.append(
                                f"floor equality at m={m} != threshold {thresholds[r]}"
                            )
                        lhs = max_sum * n
                        rhs = 2 * r * m
                        if lhs < rhs:
                            problems.append(f"best first-{r} sum: {lhs} < 2rm = {rhs}")
                        elif not regular and lhs == rhs:
                            problems.append("non-regular graph meets 2rm/n with equality")
                    for problem in problems:
                        counterexamples.append(
                            {
                                "n": n,
                                "m": m,
                                "r": r,
                                "kind": "greedy",
                                "detail": problem,
                                "graph6": to_graph6(Graph._raw(n, tuple(adj))),
                            }
                        )
                    val = max_degree_sum_value(adj, degs, r, abort_above=cell_min[r])
                    if val is not None and (cell_min[r] is None or val < cell_min[r]):
                        cell_min[r] = val
            for r in active:
                cells += 1
                dmin = cell_min[r]
                lhs = dmin * n
                lo = 2 * r * m
                hi = lo + r * n
                if not (lo <= lhs < hi):
                    counterexamples.append(
                        {
                            "n": n,
                            "m": m,
                            "r": r,
                            "kind": "band",
                            "detail": f"minimum {dmin}: {lhs} outside [{lo}, {hi})",
                            "graph6": "",
                        }
                    )
    return VerifyReport(
        n_max=n_max,
        r_set=tuple(rs_all),
        mode=mode,
        graphs_examined=graphs_examined,
        cells=cells,
        violations=len(counterexamples),
        counterexamples=tuple(counterexamples),
        cap_skips=0,
        skipped_pairs=skipped,
    )


# ---------------------------------------------------------------------------
# serialization


def record_to_dict(rec: ScanRecord) -> dict:
    return {
        "n": rec.n,
        "m": rec.m,
        "r": rec.r,
        "mode": rec.mode,
        "delta_min": rec.delta_min,
        "witness": rec.witness_g6,
        "lower_2rm_over_n": {"num": rec.ratio_num, "den": rec.ratio_den},
        "graphs_examined": rec.graphs_examined,
        "regime": rec.regime,
    }


def records_to_csv(records: list[ScanRecord]) -> str:
    lines = [CSV_HEADER]
    for rec in records:
        lines.append(
            f"{rec.n},{rec.m},{rec.r},{rec.mode},{rec.delta_min},"
            f"{rec.ratio_num},{rec.ratio_den},{rec.witness_g6},{rec.graphs_examined}"
        )
    return "\n".join(lines) + "\n"


def stability_report_to_dict(rep: StabilityReport) -> dict:
    return {
        "r": rep.r,
        "n": rep.n,
        "epsilon": {"num": rep.epsilon_num, "den": rep.epsilon_den},
        "delta": {"num": rep.delta_num, "den": rep.delta_den},
        "m_threshold": rep.m_threshold,
        "m_upper": rep.m_upper,
        "mode": rep.mode,
        "within_proof_range": rep.within_proof_range,
        "rows": [
            {
                "m": row.m,
                "delta_min": row.delta_min,
                "ratio": {"num": row.ratio_num, "den": row.ratio_den},
                "ratio_decimal": row.ratio_decimal,
                "exceeds_threshold": row.exceeds_threshold,
            }
            for row in rep.rows
        ],
    }


def stability_report_to_csv(rep: StabilityReport) -> str:
    lines = ["n,m,r,mode,delta_min,ratio_num,ratio_den,ratio_decimal,exceeds_threshold"]
    for row in rep.rows:
        lines.append(
            f"{rep.n},{row.m},{rep.r},{rep.mode},{row.delta_min},"
            f"{row.ratio_num},{row.ratio_den},{row.ratio_decimal},{row.exceeds_threshold}"
        )
    return "\n".join(lines) + "\n"


def verify_report_to_dict(rep: VerifyReport) -> dict:
    return {
        "n_max": rep.n_max,
        "r_set": list(rep.r_set),
        "mode": rep.mode,
        "graphs_examined": rep.graphs_examined,
        "cells": rep.cells,
        "violations": rep.violations,
        "counterexamples": list(rep.counterexamples),
        "cap_skips": rep.cap_skips,
        "skipped_pairs": [list(p) for p in rep.skipped_pairs],
    }
