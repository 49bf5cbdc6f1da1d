"""Enumeration and random-instance helpers shared by the tests."""

import itertools

from recolorpath import Graph, Instance, as_lists


def all_graphs(n):
    """Every labeled simple graph on n vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph.from_edges(
            n, [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
        )


def proper_colorings(graph, k_or_lists):
    """All proper list colorings, in lexicographic order."""
    lists = as_lists(graph.n, k_or_lists)
    out = []
    for combo in itertools.product(*lists):
        if all(combo[u] != combo[v] for u, v in graph.edges):
            out.append(combo)
    return out


def first_three_coloring(graph):
    """Lexicographically first proper 3-coloring, or None."""
    for combo in itertools.product((1, 2, 3), repeat=graph.n):
        if all(combo[u] != combo[v] for u, v in graph.edges):
            return combo
    return None


def random_graph(rng, n, density=0.5):
    pairs = list(itertools.combinations(range(n), 2))
    return Graph.from_edges(n, [p for p in pairs if rng.random() < density])


def random_walk(rng, graph, lists, start, length):
    """A random valid recoloring walk; returns (steps, end coloring)."""
    from recolorpath import Step

    lists = as_lists(graph.n, lists)
    current = tuple(start)
    steps = []
    for _ in range(length):
        moves = []
        for v in range(graph.n):
            for c in lists[v]:
                if c == current[v]:
                    continue
                if all(current[u] != c for u in graph.adjacency[v]):
                    moves.append(Step(v, c))
        if not moves:
            break
        step = rng.choice(moves)
        steps.append(step)
        current = current[: step.vertex] + (step.color,) + current[step.vertex + 1 :]
    return steps, current


def random_list_instance(rng, max_n=4):
    """Random list instance with lists inside 1..4 and proper endpoints."""
    while True:
        n = rng.randint(1, max_n)
        graph = random_graph(rng, n)
        lists = tuple(
            tuple(sorted(rng.sample((1, 2, 3, 4), rng.randint(1, 3)))) for _ in range(n)
        )
        colorings = proper_colorings(graph, lists)
        if not colorings:
            continue
        alpha = rng.choice(colorings)
        beta = rng.choice(colorings)
        return Instance(
            graph=graph, k=4, ell=32, alpha=alpha, beta=beta, lists=lists
        )
