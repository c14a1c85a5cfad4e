import itertools
import math
import random
from fractions import Fraction

import pytest

from cliquedeg import (
    ResourceLimitError,
    canonical_form,
    enumerate_graphs,
    extremal_degree_sum_local_search,
    extremal_degree_sum_min,
    from_edges,
    from_graph6,
    max_clique_degree_sum,
    near_regular_graph,
    scan_m,
    stability_experiment,
    turan_size,
    verify_all,
    StabilityParams,
)
from cliquedeg.extremal import (
    _combo_next,
    _combo_unrank,
    graph_from_triangle_bits,
    records_to_csv,
    stability_report_to_csv,
)

from conftest import slot_pairs
from oracles import naive_min_over_graphs


def test_enumerate_counts():
    assert len(list(enumerate_graphs(3, 2))) == 3
    assert len(list(enumerate_graphs(4, 4))) == 15
    assert len(list(enumerate_graphs(0, 0))) == 1
    with pytest.raises(ValueError):
        list(enumerate_graphs(4, 7))
    with pytest.raises(ResourceLimitError):
        list(enumerate_graphs(9, 3))


def test_enumerate_each_graph_once_with_right_size():
    seen = set()
    for g in enumerate_graphs(4, 3):
        assert g.n == 4 and g.m == 3
        seen.add(g.adj)
    assert len(seen) == math.comb(6, 3)


def test_canonical_invariance_under_relabeling():
    rng = random.Random(17)
    for _ in range(60):
        n = rng.randint(0, 6)
        edges = [p for p in slot_pairs(n) if rng.random() < 0.5]
        g = from_edges(n, edges)
        canon = canonical_form(g)
        perm = list(range(n))
        rng.shuffle(perm)
        h = from_edges(n, [(perm[u], perm[v]) for u, v in edges])
        assert canonical_form(h) == canon


def test_canonical_distinguishes():
    p3 = from_edges(3, [(0, 1), (1, 2)])
    k3 = from_edges(3, [(0, 1), (1, 2), (0, 2)])
    assert canonical_form(p3) != canonical_form(k3)


def test_canonical_classes_n4_m3():
    forms = {canonical_form(g) for g in enumerate_graphs(4, 3)}
    assert len(forms) == 3  # path, star, triangle plus isolated vertex


def test_canonical_cap():
    with pytest.raises(ResourceLimitError):
        canonical_form(from_edges(9, []))


def test_triangle_bits_round_trip():
    rng = random.Random(23)
    for _ in range(50):
        n = rng.randint(0, 7)
        edges = [p for p in slot_pairs(n) if rng.random() < 0.4]
        g = from_edges(n, edges)
        canon = canonical_form(g)
        h = graph_from_triangle_bits(n, canon)
        assert canonical_form(h) == canon and h.m == g.m


def test_combo_unrank_and_next():
    for nslots, m in ((6, 3), (5, 0), (7, 7), (8, 2)):
        combos = list(itertools.combinations(range(nslots), m))
        for rank, expect in enumerate(combos):
            assert tuple(_combo_unrank(nslots, m, rank)) == expect
        cur = _combo_unrank(nslots, m, 0)
        walked = [tuple(cur)]
        while _combo_next(cur, nslots):
            walked.append(tuple(cur))
        assert walked == combos


def test_min_exact_derived_values():
    rec = extremal_degree_sum_min(4, 4, 2)
    assert rec.delta_min == 4 == naive_min_over_graphs(4, 4, 2)
    witness = from_graph6(rec.witness_g6)
    assert witness.degrees() == (2, 2, 2, 2)  # the 4-cycle
    assert rec.graphs_examined == 15
    assert rec.regime == "at-threshold"
    assert (rec.ratio_num, rec.ratio_den) == (4, 1)

    rec = extremal_degree_sum_min(5, 6, 2)
    assert rec.delta_min == 5 == naive_min_over_graphs(5, 6, 2)
    assert 5 * 5 > 2 * 2 * 6

    rec = extremal_degree_sum_min(6, 9, 3)
    assert rec.delta_min == 0
    witness = from_graph6(rec.witness_g6)
    assert max_clique_degree_sum(witness, 3).value == 0
    assert witness.m == 9


def test_min_exact_matches_naive_oracle_broadly():
    for n in range(1, 6):
        for m in range(0, n * (n - 1) // 2 + 1):
            for r in (1, 2, 3, 4):
                rec = extremal_degree_sum_min(n, m, r)
                assert rec.delta_min == naive_min_over_graphs(n, m, r), (n, m, r)
                witness = from_graph6(rec.witness_g6)
                assert witness.n == n and witness.m == m
                assert max_clique_degree_sum(witness, r).value == rec.delta_min


def test_min_witness_is_least_canonical_minimizer():
    rec = extremal_degree_sum_min(5, 4, 2)
    minimizers = [
        g for g in enumerate_graphs(5, 4)
        if max_clique_degree_sum(g, 2).value == rec.delta_min
    ]
    least = min(canonical_form(g) for g in minimizers)
    assert canonical_form(from_graph6(rec.witness_g6)) == least


def test_canonical_mode_agrees_with_exhaustive():
    for n, m, r in ((4, 4, 2), (5, 6, 2), (5, 8, 3)):
        a = extremal_degree_sum_min(n, m, r, mode="exhaustive")
        b = extremal_degree_sum_min(n, m, r, mode="canonical")
        assert (a.delta_min, a.witness_g6, a.graphs_examined) == (
            b.delta_min,
            b.witness_g6,
            b.graphs_examined,
        )


def test_sharded_scan_identical_to_single_worker():
    single = scan_m(6, 3, 11, 13, workers=1)
    sharded = scan_m(6, 3, 11, 13, workers=3)
    assert records_to_csv(single) == records_to_csv(sharded)


def test_arbitrary_shard_partitions_merge_identically():
    from cliquedeg.extremal import _min_scan_range

    n, m, r = 6, 9, 2
    total = math.comb(15, 9)
    whole = _min_scan_range((n, m, r, 0, total, "exhaustive"))
    for cuts in ([0, 1, total], [0, total // 3, total // 3 + 7, total]):
        parts = [
            _min_scan_range((n, m, r, lo, hi - lo, "exhaustive"))
            for lo, hi in zip(cuts, cuts[1:])
        ]
        assert sum(p[2] for p in parts) == total == whole[2]
        merged = min((p[0], p[1]) for p in parts if p[0] is not None)
        assert merged == (whole[0], whole[1])


def test_scan_values_rise_through_threshold():
    records = scan_m(6, 3, 9, 12)
    assert [rec.delta_min for rec in records] == [0, 10, 12, 12]
    assert [rec.regime for rec in records] == [
        "below-threshold",
        "below-threshold",
        "below-threshold",
        "at-threshold",
    ]


def test_scan_n4_r2():
    records = scan_m(4, 2, 4, 6)
    assert [rec.delta_min for rec in records] == [4, 6, 6]
    assert records[-1].delta_min == 6  # complete graph


def test_scan_empty_range():
    assert scan_m(5, 2, 7, 6) == []


def test_max_graphs_guard():
    with pytest.raises(ResourceLimitError):
        extremal_degree_sum_min(6, 7, 2, max_graphs=100)


def test_local_search_reaches_known_minima():
    rec = extremal_degree_sum_local_search(4, 4, 2, seed=0)
    assert rec.delta_min == 4
    rec = extremal_degree_sum_local_search(6, 9, 3, seed=0)
    assert rec.delta_min == 0
    witness = from_graph6(rec.witness_g6)
    assert witness.m == 9 and max_clique_degree_sum(witness, 3).value == 0


def test_local_search_deterministic():
    a = extremal_degree_sum_local_search(6, 8, 3, seed=5, restarts=3, iter_budget=50)
    b = extremal_degree_sum_local_search(6, 8, 3, seed=5, restarts=3, iter_budget=50)
    assert a == b


def test_local_search_never_below_exact():
    rng = random.Random(31)
    for _ in range(25):
        n = rng.randint(2, 6)
        m = rng.randint(0, n * (n - 1) // 2)
        r = rng.randint(1, 3)
        exact = extremal_degree_sum_min(n, m, r).delta_min
        rec = extremal_degree_sum_local_search(n, m, r, seed=rng.randint(0, 99))
        assert rec.delta_min >= exact
        witness = from_graph6(rec.witness_g6)
        assert max_clique_degree_sum(witness, r).value == rec.delta_min


def test_local_search_witness_consistency():
    rec = extremal_degree_sum_local_search(5, 7, 2, seed=1)
    witness = from_graph6(rec.witness_g6)
    assert witness.n == 5 and witness.m == 7
    assert max_clique_degree_sum(witness, 2).value == rec.delta_min


def test_near_regular_examples():
    g = near_regular_graph(5, 5)
    assert sorted(g.degrees()) == [2, 2, 2, 2, 2]
    g = near_regular_graph(4, 4)
    assert sorted(g.degrees()) == [2, 2, 2, 2]
    g = near_regular_graph(5, 6)
    assert sorted(g.degrees()) == [2, 2, 2, 3, 3]


def test_near_regular_all_feasible_cases():
    for n in range(0, 13):
        for m in range(0, n * (n - 1) // 2 + 1):
            g = near_regular_graph(n, m)
            assert g.m == m
            if n:
                degs = g.degrees()
                assert max(degs) - min(degs) <= 1, (n, m, degs)
    with pytest.raises(ValueError):
        near_regular_graph(4, 7)
    with pytest.raises(ValueError):
        near_regular_graph(3, -1)


def test_stability_params():
    p = StabilityParams(epsilon=Fraction(1, 4), r=2, n=7)
    assert p.delta == Fraction(1, 512)
    assert p.m_threshold == turan_size(2, 7) - 1
    assert p.within_proof_range  # 1/4 < 2/6
    assert not StabilityParams(epsilon=Fraction(1, 4), r=3, n=7).within_proof_range
    with pytest.raises(ValueError):
        StabilityParams(epsilon=Fraction(0), r=2, n=7)
    with pytest.raises(ValueError):
        StabilityParams(epsilon=Fraction(-1, 8), r=3, n=7)
    with pytest.raises(ValueError):
        StabilityParams(epsilon=Fraction(3, 2), r=2, n=7)


def test_stability_small_table():
    rep = stability_experiment(StabilityParams(epsilon=Fraction(1, 4), r=2, n=5))
    # window is (t_2(5) - 1, t_2(5)] = {6}
    assert rep.m_threshold == 5 and rep.m_upper == 6
    assert len(rep.rows) == 1
    row = rep.rows[0]
    assert row.m == 6 and row.delta_min == 5
    assert Fraction(row.ratio_num, row.ratio_den) == Fraction(5 * 5, 2 * 2 * 6)
    assert row.ratio_decimal == "1.041667"
    assert row.exceeds_threshold


def test_stability_csv_stable():
    params = StabilityParams(epsilon=Fraction(1, 8), r=2, n=6)
    a = stability_report_to_csv(stability_experiment(params, workers=1))
    b = stability_report_to_csv(stability_experiment(params, workers=2))
    assert a == b


def test_verify_all_counts():
    rep = verify_all(4, [2])
    assert rep.violations == 0
    # (graph, r) incidences: n=2 gives 1, n=3 gives 4, n=4 gives 15+6+1
    assert rep.graphs_examined == 1 + 4 + 22
    assert rep.cells == 6
    assert rep.skipped_pairs == ()


def test_verify_all_skips_oversized_r():
    rep = verify_all(3, [2, 5])
    assert rep.violations == 0
    assert rep.skipped_pairs == ((2, 5), (3, 5))


def test_verify_all_n5():
    rep = verify_all(5, [2, 3])
    assert rep.violations == 0
    assert rep.cap_skips == 0


def test_verify_rejects_bad_r():
    with pytest.raises(ValueError):
        verify_all(4, [1])
    with pytest.raises(ResourceLimitError):
        verify_all(8, [2])


def test_band_holds_on_every_exact_record_at_or_above_threshold():
    for n in range(2, 6):
        for r in range(2, n + 1):
            t = turan_size(r, n)
            for m in range(t, n * (n - 1) // 2 + 1):
                rec = extremal_degree_sum_min(n, m, r)
                lhs = rec.delta_min * n
                assert 2 * r * m <= lhs < 2 * r * m + r * n
                near = near_regular_graph(n, m)
                val = max_clique_degree_sum(near, r).value
                assert val * n < 2 * r * m + r * n
