import json
import math
from fractions import Fraction

import networkx as nx
import pytest

from lipwalk.closed_forms import avg1_path, avg1_star
from lipwalk.errors import SweepLimitError
from lipwalk.graphs import RootedGraph, is_corolla, is_tree, make_path
from lipwalk.harness import (
    ALL_CHECKS,
    check_bhm,
    check_corolla_dominance,
    check_kc_monotonicity,
    check_lnr,
    check_tree_extremality,
    check_unicyclic_count_invariance,
    connected_graph_classes,
    enumerate_connected_graphs,
    enumerate_corollas,
    enumerate_trees,
    max_n,
    tree_canonical_form,
    tree_classes,
)
from lipwalk.lipschitz import WEAK1, avg_range_bruteforce, mapping_stats

from _oracles import naive_stats


def strip(result):
    d = result.as_dict()
    d.pop("elapsed")
    return d


# ---------------------------------------------------------------- enumeration


@pytest.mark.parametrize("n,expected", [(1, 1), (2, 1), (3, 3), (4, 16), (5, 125), (6, 1296)])
def test_tree_counts(n, expected):
    trees = list(enumerate_trees(n))
    assert len(trees) == expected
    assert len({t.edges for t in trees}) == expected
    assert all(is_tree(t) for t in trees)


def test_tree_classes_match_known_counts():
    # unlabeled trees: 1, 1, 1, 2, 3, 6, 11, 23
    assert [len(tree_classes(n)[0]) for n in range(1, 9)] == [1, 1, 1, 2, 3, 6, 11, 23]
    assert tree_classes(7)[1] == 7**5


def test_tree_canonical_form_is_label_free():
    a = RootedGraph(5, [(0, 1), (1, 2), (0, 3), (0, 4)])
    b = RootedGraph(5, [(4, 3), (3, 2), (4, 1), (4, 0)])
    assert tree_canonical_form(a) == tree_canonical_form(b)
    assert tree_canonical_form(a) != tree_canonical_form(make_path(5))


@pytest.mark.parametrize("n,expected", [(1, 1), (2, 1), (3, 4), (4, 38), (5, 728)])
def test_connected_graph_counts(n, expected):
    graphs = list(enumerate_connected_graphs(n))
    assert len(graphs) == expected
    assert len({g.edges for g in graphs}) == expected


def test_connected_graph_enumeration_deterministic():
    assert list(enumerate_connected_graphs(4)) == list(enumerate_connected_graphs(4))


def test_enumeration_cap():
    with pytest.raises(SweepLimitError):
        list(enumerate_connected_graphs(7))
    assert len(list(enumerate_connected_graphs(5, cap=5))) == 728
    with pytest.raises(SweepLimitError):
        check_lnr(7)
    with pytest.raises(SweepLimitError):
        check_tree_extremality(9)
    with pytest.raises(SweepLimitError):
        connected_graph_classes(8)


def test_env_override(monkeypatch):
    assert max_n("graphs") == 6
    monkeypatch.setenv("LIPWALK_MAX_N", "3")
    assert max_n("trees") == 3
    with pytest.raises(SweepLimitError):
        check_lnr(4)


@pytest.mark.parametrize("n", range(1, 6))
def test_classes_cover_labeled_graphs(n):
    """Orbit-stabilizer: sum of n!/|Aut(G)| over classes is the labeled count."""
    total = 0
    for g in connected_graph_classes(n):
        h = nx.Graph(list(g.edges))
        h.add_nodes_from(range(n))
        aut = sum(1 for _ in nx.algorithms.isomorphism.GraphMatcher(h, h).isomorphisms_iter())
        total += math.factorial(n) // aut
    assert total == len(list(enumerate_connected_graphs(n)))


def test_class_counts():
    # connected unlabeled graphs: 1, 1, 2, 6, 21, 112, 853
    assert [len(connected_graph_classes(n)) for n in range(1, 8)] == [1, 1, 2, 6, 21, 112, 853]


def test_corolla_enumeration():
    assert len(list(enumerate_corollas(3))) == 1
    for n in range(3, 8):
        cs = list(enumerate_corollas(n))
        assert all(is_corolla(c) and c.n == n for c in cs)


# ---------------------------------------------------------------- checks


def test_lnr_examples():
    r = check_lnr(3, labeled=True)
    assert r.instance_count == 4 and r.ok
    assert avg_range_bruteforce(RootedGraph(3, [(0, 1), (1, 2), (0, 2)])).average == Fraction(13, 7) <= Fraction(19, 9)
    assert check_lnr(4).ok
    r6 = check_lnr(6)
    assert r6.ok and r6.instance_count == 112
    assert r6.notes["closed_form_cross_checks"] > 0


def test_bhm_examples():
    assert check_bhm(3).ok
    r = check_bhm(4, labeled=True)
    assert r.ok
    assert check_bhm(6).ok


def test_tree_extremality_examples():
    r = check_tree_extremality(4)
    assert r.ok and r.notes["isomorphism_classes"] == 2
    spider = RootedGraph(5, [(0, 1), (1, 2), (0, 3), (0, 4)])
    assert naive_stats(5, sorted(spider.edges)) == (81, 221)
    assert avg1_star(5) < Fraction(221, 81) < avg1_path(5)
    r7 = check_tree_extremality(7)
    assert r7.ok and r7.instance_count == 7**5


def test_tree_extremality_rejects_tiny_order():
    with pytest.raises(ValueError):
        check_tree_extremality(1)


def test_kc_examples():
    from lipwalk.graphs import kc_transform, swap_automorphism_exists

    g = make_path(5)
    assert swap_automorphism_exists(g, 1, 3)
    assert avg_range_bruteforce(g).average >= avg_range_bruteforce(kc_transform(g, 1, 3)).average
    r = check_kc_monotonicity(6)
    assert r.ok
    assert r.notes["pairs_checked"] > 0
    assert r.skipped == r.notes["pairs_without_swap_automorphism"] + r.notes["pairs_with_disconnected_middle"]


def test_corolla_examples():
    u = RootedGraph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (0, 4)])
    assert not is_corolla(u)
    best = max(avg_range_bruteforce(r).average for r in enumerate_corollas(5))
    assert best >= avg_range_bruteforce(u).average
    r = check_corolla_dominance(5, labeled=True)
    assert r.ok and r.skipped > 0
    assert check_corolla_dominance(6).ok


def test_unicyclic_examples():
    assert mapping_stats(RootedGraph(4, [(0, 1), (1, 2), (2, 0), (0, 3)]))[0] == 21
    r = check_unicyclic_count_invariance(4, labeled=True)
    assert r.ok and r.notes["counts_by_cycle_length"] == {"3": [21], "4": [19]}
    r6 = check_unicyclic_count_invariance(6)
    assert r6.notes["counts_by_cycle_length"]["4"] == [171]
    assert r6.notes["counts_by_cycle_length"]["5"] == [51 * 3]
    assert check_unicyclic_count_invariance(5).notes["counts_by_cycle_length"]["5"] == [51]


@pytest.mark.parametrize("name", sorted(set(ALL_CHECKS) - {"tree_extremality"}))
def test_labeled_and_class_sweeps_agree(name):
    check = ALL_CHECKS[name]
    n = 5
    a, b = check(n), check(n, labeled=True)
    assert a.ok == b.ok
    assert a.instance_count <= b.instance_count


@pytest.mark.parametrize("name", sorted(ALL_CHECKS))
def test_sweeps_are_deterministic(name):
    n = 5
    assert strip(ALL_CHECKS[name](n)) == strip(ALL_CHECKS[name](n))


def test_workers_match_sequential():
    for name in ("lnr", "kc_monotonicity", "corolla_dominance"):
        assert strip(ALL_CHECKS[name](5, workers=2)) == strip(ALL_CHECKS[name](5))


def test_sweep_result_serializes():
    r = check_lnr(4)
    d = json.loads(json.dumps(r.as_dict()))
    assert d["name"] == "lnr" and d["violations"] == [] and d["instance_count"] == 6
    assert "OK" in r.summary()


def test_violation_records_are_auditable(monkeypatch):
    # force a violation by lowering the path bound
    import lipwalk.harness as h

    monkeypatch.setattr(h, "avg1_path", lambda n: Fraction(2))
    r = h.check_lnr(3)
    assert not r.ok
    for v in r.violations:
        g = RootedGraph(v.graph["n"], v.graph["edges"], v.graph["root"])
        assert avg_range_bruteforce(g, WEAK1).average == v.lhs
    assert "VIOLATION" in r.summary()
