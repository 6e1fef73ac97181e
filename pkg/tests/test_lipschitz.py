import itertools
from fractions import Fraction

import pytest

from lipwalk.errors import InvalidArgumentError, UndefinedAverageError
from lipwalk.graphs import (
    RootedGraph,
    diameter,
    make_complete_bipartite,
    make_cycle,
    make_path,
    make_star,
)
from lipwalk.harness import connected_graph_classes, enumerate_connected_graphs, enumerate_trees
from lipwalk.lipschitz import (
    STRONG1,
    WEAK1,
    AvgRangeReport,
    LipschitzMapping,
    Mode,
    avg_range_bruteforce,
    avg_range_root_invariance_check,
    enumerate_mappings,
    mapping_stats,
    range_of,
)

from _oracles import naive_stats


def test_small_enumerations():
    maps = list(enumerate_mappings(make_path(2)))
    assert sorted(m.values for m in maps) == [(0, -1), (0, 0), (0, 1)]
    assert len(list(enumerate_mappings(make_cycle(3)))) == 7
    assert list(enumerate_mappings(make_cycle(3), STRONG1)) == []


def test_enumeration_is_deterministic():
    g = make_complete_bipartite(2, 2)
    assert list(enumerate_mappings(g)) == list(enumerate_mappings(g))


def test_range_of():
    assert range_of(LipschitzMapping((0, 0, 0))) == 1
    assert range_of(LipschitzMapping((0, 1, -1), STRONG1)) == 3
    assert range_of(LipschitzMapping((0, 1, 2))) == 3
    assert range_of([0, 2, 2, 5]) == 3


@pytest.mark.parametrize(
    "g,mode,expected",
    [
        (make_path(2), WEAK1, Fraction(5, 3)),
        (make_cycle(3), WEAK1, Fraction(13, 7)),
        (RootedGraph(1, []), WEAK1, Fraction(1)),
        (make_complete_bipartite(2, 3), WEAK1, Fraction(103, 45)),
        (make_star(3), STRONG1, Fraction(5, 2)),
        (make_cycle(4), STRONG1, Fraction(8, 3)),
        (make_path(3), Mode(2), Fraction(61, 25)),
    ],
)
def test_avg_bruteforce_examples(g, mode, expected):
    report = avg_range_bruteforce(g, mode)
    assert report.average == expected
    assert report.average == Fraction(report.range_sum, report.mapping_count)
    assert report.source == "brute-force"


def test_undefined_average_for_odd_cycle():
    with pytest.raises(UndefinedAverageError) as info:
        avg_range_bruteforce(make_cycle(3), STRONG1)
    assert info.value.mapping_count == 0
    assert mapping_stats(make_cycle(5), STRONG1) == (0, 0)


def test_mode_validation():
    with pytest.raises(InvalidArgumentError):
        Mode(0)


def test_report_dict_roundtrip():
    r = avg_range_bruteforce(make_path(5))
    assert AvgRangeReport.from_dict(r.as_dict()) == r
    assert r.as_dict()["average"] == "227/81"


# ---------------------------------------------------------------- oracle agreement


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("mode", [WEAK1, STRONG1, Mode(2), Mode(2, True)])
def test_stats_match_naive_product_oracle(n, mode):
    for g in connected_graph_classes(n):
        for root in range(n):
            h = g.with_root(root)
            assert mapping_stats(h, mode) == naive_stats(n, sorted(h.edges), root, mode.M, mode.strong)


@pytest.mark.parametrize("n", range(1, 5))
def test_enumeration_complete_and_duplicate_free(n):
    for g in enumerate_connected_graphs(n):
        maps = [m.values for m in enumerate_mappings(g)]
        assert len(maps) == len(set(maps))
        assert all(LipschitzMapping(v).is_valid(g) for v in maps)
        assert len(maps) == naive_stats(n, sorted(g.edges))[0]


def test_stats_match_materialized_enumeration():
    for n in range(1, 6):
        for g in connected_graph_classes(n):
            for mode in (WEAK1, STRONG1, Mode(2)):
                maps = list(enumerate_mappings(g, mode))
                assert mapping_stats(g, mode) == (len(maps), sum(range_of(m) for m in maps))


# ---------------------------------------------------------------- invariants


@pytest.mark.parametrize("n", range(1, 9))
def test_tree_count_is_power_of_three(n):
    from lipwalk.harness import tree_classes

    trees = tree_classes(n)[0] if n >= 7 else list(enumerate_trees(n))
    for t in trees:
        assert mapping_stats(t)[0] == 3 ** (n - 1)


@pytest.mark.parametrize("n", range(1, 6))
def test_mapping_set_inclusions(n):
    for g in connected_graph_classes(n):
        w1 = {m.values for m in enumerate_mappings(g, Mode(1))}
        w2 = {m.values for m in enumerate_mappings(g, Mode(2))}
        s1 = {m.values for m in enumerate_mappings(g, Mode(1, True))}
        s2 = {m.values for m in enumerate_mappings(g, Mode(2, True))}
        assert w1 <= w2
        assert s1 <= w1
        assert s2 <= w2


@pytest.mark.parametrize("n", range(1, 8))
def test_range_bounded_by_diameter(n):
    modes = [WEAK1, STRONG1, Mode(2), Mode(2, True)] if n <= 6 else [WEAK1, STRONG1]
    for g in connected_graph_classes(n):
        d = diameter(g)
        for mode in modes:
            for f in enumerate_mappings(g, mode):
                assert range_of(f) <= mode.M * d + 1


@pytest.mark.parametrize("n", range(1, 8))
def test_weak_image_is_interval(n):
    for g in connected_graph_classes(n):
        for f in enumerate_mappings(g):
            vals = set(f.values)
            assert vals == set(range(min(vals), max(vals) + 1))


def test_root_invariance_examples():
    assert avg_range_root_invariance_check(make_path(4))
    assert avg_range_root_invariance_check(make_complete_bipartite(2, 3))
    assert avg_range_root_invariance_check(make_cycle(4), STRONG1)
    assert avg_range_root_invariance_check(make_cycle(5), STRONG1)  # empty for every root


@pytest.mark.parametrize("n", range(2, 6))
def test_root_invariance_all_small_graphs(n):
    for g in connected_graph_classes(n):
        for mode in (WEAK1, STRONG1, Mode(2)):
            assert avg_range_root_invariance_check(g, mode)


def test_avg_same_for_all_labelings_of_p4():
    base = avg_range_bruteforce(make_path(4)).average
    for perm in itertools.permutations(range(4)):
        assert avg_range_bruteforce(make_path(4).relabel(perm)).average == base
