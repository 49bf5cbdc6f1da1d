import itertools
import random

import pytest

from recolorpath import (
    ColoringCodec,
    Graph,
    SearchBudgetExceeded,
    oracle_distance,
    reachable_set,
    separator_holds,
    verify_sequence,
)
from recolorpath.gadgets import build_bk

from helpers import proper_colorings, random_graph

B2 = build_bk(2)


def test_single_vertex_distance_one():
    g = Graph.from_edges(1, [])
    result = oracle_distance(g, [(1, 2, 3)], (1,), (3,))
    assert result.distance == 1
    assert result.witness == [(0, 3)]


def test_frozen_swap_is_unreachable():
    g = Graph.from_edges(2, [(0, 1)])
    result = oracle_distance(g, [(1, 2), (1, 2)], (1, 2), (2, 1))
    assert result.distance is None
    assert result.witness is None
    assert result.explored == 1


def test_b2_distance_is_exactly_three():
    result = oracle_distance(B2.graph, 3, B2.alpha, B2.beta)
    assert result.distance == 3
    assert verify_sequence(B2.graph, 3, B2.alpha, B2.beta, 3, result.witness).ok
    # independent check that no sequence of length <= 2 exists: enumerate
    # every 1- and 2-step walk from alpha by brute force
    def moves(coloring):
        for v in range(B2.graph.n):
            for c in (1, 2, 3):
                if c == coloring[v]:
                    continue
                if all(coloring[u] != c for u in B2.graph.adjacency[v]):
                    yield coloring[:v] + (c,) + coloring[v + 1 :]

    short = set()
    for one in moves(B2.alpha):
        short.add(one)
        short.update(moves(one))
    assert B2.beta not in short


def test_witnesses_are_reproducible():
    first = oracle_distance(B2.graph, 3, B2.alpha, B2.beta)
    second = oracle_distance(B2.graph, 3, B2.alpha, B2.beta)
    assert first.witness == second.witness
    assert first.explored == second.explored


def test_reachable_set_sizes():
    single = Graph.from_edges(1, [])
    assert len(reachable_set(single, [(1, 2)], (1,))) == 2

    frozen = Graph.from_edges(2, [(0, 1)])
    assert len(reachable_set(frozen, [(1, 2), (1, 2)], (1, 2))) == 1

    triangle = Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)])
    for alpha in proper_colorings(triangle, 3):
        component = reachable_set(triangle, 3, alpha)
        codec = ColoringCodec(3, 3)
        assert component == {codec.encode(alpha)}


def test_separator_examples():
    uses_at_least = lambda q: (lambda coloring: len(set(coloring)) >= q)
    assert separator_holds(B2.graph, 3, B2.alpha, B2.beta, uses_at_least(3))
    assert not separator_holds(B2.graph, 3, B2.alpha, B2.beta, uses_at_least(4))
    single = Graph.from_edges(1, [])
    assert not separator_holds(single, 2, (1,), (1,), lambda _: False)


def test_budget_exhaustion_is_distinct_from_unreachable():
    empty = Graph.from_edges(4, [])
    with pytest.raises(SearchBudgetExceeded):
        oracle_distance(empty, 3, (1,) * 4, (2,) * 4, node_cap=5)
    with pytest.raises(SearchBudgetExceeded):
        reachable_set(empty, 3, (1,) * 4, node_cap=5)
    with pytest.raises(SearchBudgetExceeded):
        separator_holds(empty, 3, (1,) * 4, (2,) * 4, lambda _: False, node_cap=5)


def test_distance_symmetry_random():
    rng = random.Random(11)
    for _ in range(120):
        graph = random_graph(rng, rng.randint(1, 4))
        k = rng.randint(2, 3)
        colorings = proper_colorings(graph, k)
        if not colorings:
            continue
        alpha, beta = rng.choice(colorings), rng.choice(colorings)
        assert (
            oracle_distance(graph, k, alpha, beta).distance
            == oracle_distance(graph, k, beta, alpha).distance
        )


def test_list_monotonicity_random():
    rng = random.Random(12)
    for _ in range(80):
        n = rng.randint(1, 4)
        graph = random_graph(rng, n)
        k = rng.randint(2, 3)
        colorings = proper_colorings(graph, k)
        if not colorings:
            continue
        alpha, beta = rng.choice(colorings), rng.choice(colorings)
        before = oracle_distance(graph, k, alpha, beta).distance
        grown = [tuple(range(1, k + 1))] * n
        grown[rng.randrange(n)] = tuple(range(1, k + 2))
        after = oracle_distance(graph, grown, alpha, beta).distance
        if before is not None:
            assert after is not None and after <= before


def test_codec_round_trip_and_fallback():
    packed = ColoringCodec(4, 3)
    assert packed.packable
    seen = set()
    for coloring in itertools.product((1, 2, 3), repeat=4):
        key = packed.encode(coloring)
        assert isinstance(key, int)
        assert packed.decode(key) == coloring
        seen.add(key)
    assert len(seen) == 3 ** 4

    wide = ColoringCodec(22, 8)  # 22 * 3 bits = 66 > 63
    assert not wide.packable
    coloring = tuple((i % 8) + 1 for i in range(22))
    assert wide.encode(coloring) == coloring
