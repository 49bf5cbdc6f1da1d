"""Fixed-parameter solver: guess per-vertex used-color sets, then order the steps.

recolor() runs a two-stage search. Stage one ignores step ordering and
guesses, per vertex that must move, the exact set of colors it will ever
hold; the guessed weight sum((|L(v)| - 1)) is capped by the budget, which
bounds the recursion depth. Stage two (list_recolor) is a depth-bounded
branching search inside the guessed lists that produces the actual step
order. Witnesses found on the induced subgraph of guessed vertices lift to
the whole graph unchanged because guessed colors never collide with the
frozen colors outside it.
"""

import itertools
from dataclasses import dataclass
from typing import Mapping, Sequence

from .graph import (
    Graph,
    GraphError,
    Step,
    as_lists,
    check_coloring,
    diff_set,
    full_lists,
    induced_subgraph,
)


@dataclass
class FptStats:
    """Counters for one recolor/list_recolor call."""

    recurse_calls: int = 0
    max_depth: int = 0
    base_calls: int = 0
    max_base_weight: int = 0
    list_nodes: int = 0


@dataclass(frozen=True)
class GuessState:
    """Stage-one search node.

    pending: vertices known to need recoloring, used-color set not yet
    guessed. guessed: vertices whose set is fixed in lists. A vertex
    belongs to pending exactly when it is outside guessed and either its
    endpoints differ or some guessed neighbor's set contains its start
    color.
    """

    pending: frozenset[int]
    guessed: frozenset[int]
    lists: Mapping[int, tuple[int, ...]]

    def invariants_ok(self, graph: Graph, alpha: Sequence[int], beta: Sequence[int]) -> bool:
        if self.pending & self.guessed:
            return False
        for v in self.guessed:
            colors = self.lists[v]
            if alpha[v] not in colors or beta[v] not in colors or len(colors) < 2:
                return False
        for u in range(graph.n):
            if u in self.guessed:
                continue
            must_move = alpha[u] != beta[u] or any(
                w in self.guessed and alpha[u] in self.lists[w]
                for w in graph.adjacency[u]
            )
            if (u in self.pending) != must_move:
                return False
        return True


def list_recolor(
    graph: Graph,
    k_or_lists,
    alpha: Sequence[int],
    beta: Sequence[int],
    ell: int,
    *,
    fail_memo: bool = False,
    stats: FptStats | None = None,
) -> list[Step] | None:
    """Recoloring sequence of length <= ell inside the color lists, or None.

    Plain depth-bounded branching: from the current coloring, try every
    proper recoloring of a single vertex to a different color in its list,
    vertex ascending then color ascending. The first sequence found is
    returned; it is not necessarily shortest.

    fail_memo caches colorings that already failed with at least the
    remaining budget and skips them. That only ever skips subtrees with no
    witness inside the budget, so verdict and returned witness are
    identical to the plain search.
    """
    if ell < 0:
        raise GraphError("budget must be nonnegative")
    lists = as_lists(graph.n, k_or_lists)
    alpha = tuple(alpha)
    beta = tuple(beta)
    for name, coloring in (("alpha", alpha), ("beta", beta)):
        bad = check_coloring(graph, lists, coloring)
        if bad:
            raise GraphError(f"{name} is not a proper list coloring: {bad[0]}")
    if stats is None:
        stats = FptStats()
    adjacency = graph.adjacency
    n = graph.n
    memo: dict | None = {} if fail_memo else None
    path: list[Step] = []

    def descend(current, remaining) -> bool:
        stats.list_nodes += 1
        if current == beta:
            return True
        if remaining <= 0:
            return False
        if memo is not None and memo.get(current, -1) >= remaining:
            return False
        for v in range(n):
            held = current[v]
            neighbors = adjacency[v]
            for c in lists[v]:
                if c == held:
                    continue
                conflict = False
                for u in neighbors:
                    if current[u] == c:
                        conflict = True
                        break
                if conflict:
                    continue
                child = current[:v] + (c,) + current[v + 1:]
                path.append(Step(v, c))
                if descend(child, remaining - 1):
                    return True
                path.pop()
        if memo is not None and memo.get(current, -1) < remaining:
            memo[current] = remaining
        return False

    return list(path) if descend(alpha, ell) else None


def recolor(
    graph: Graph,
    k: int,
    ell: int,
    alpha: Sequence[int],
    beta: Sequence[int],
    *,
    guess_cap: int | None = None,
    stats: FptStats | None = None,
) -> list[Step] | None:
    """Recoloring sequence of length <= ell using colors 1..k, or None.

    guess_cap bounds the size of each guessed used-color set. The sound
    default is ell + 1: across ell steps a single vertex can hold up to
    ell + 1 distinct colors. Setting guess_cap=ell reproduces a known-bad
    tighter cap that wrongly answers NO on instances whose witness pushes
    one vertex through ell + 1 colors (kept for regression comparison).
    """
    if ell < 0:
        raise GraphError("budget must be nonnegative")
    lists = full_lists(graph.n, k)
    alpha = tuple(alpha)
    beta = tuple(beta)
    for name, coloring in (("alpha", alpha), ("beta", beta)):
        bad = check_coloring(graph, lists, coloring)
        if bad:
            raise GraphError(f"{name} is not a proper {k}-coloring: {bad[0]}")
    if stats is None:
        stats = FptStats()
    differing = diff_set(alpha, beta)
    if len(differing) > ell:
        return None
    if not differing:
        return []
    cap = ell + 1 if guess_cap is None else guess_cap
    max_size = min(cap, k)
    palette = range(1, k + 1)
    adjacency = graph.adjacency

    def recurse(state: GuessState, weight: int, depth: int) -> list[Step] | None:
        stats.recurse_calls += 1
        stats.max_depth = max(stats.max_depth, depth)
        assert state.invariants_ok(graph, alpha, beta)
        if not state.pending:
            stats.base_calls += 1
            stats.max_base_weight = max(stats.max_base_weight, weight)
            order = sorted(state.guessed)
            subgraph, old_ids = induced_subgraph(graph, order)
            sub_lists = tuple(state.lists[v] for v in order)
            sub_alpha = tuple(alpha[v] for v in order)
            sub_beta = tuple(beta[v] for v in order)
            steps = list_recolor(
                subgraph, sub_lists, sub_alpha, sub_beta, ell,
                fail_memo=True, stats=stats,
            )
            if steps is None:
                return None
            return [Step(old_ids[s.vertex], s.color) for s in steps]
        v = min(state.pending)
        must = {alpha[v], beta[v]}
        still_pending = state.pending - {v}
        now_guessed = state.guessed | {v}
        for size in range(2, max_size + 1):
            if weight + size - 1 > ell:
                break
            for combo in itertools.combinations(palette, size):
                if not must.issubset(combo):
                    continue
                pulled = {
                    u
                    for u in adjacency[v]
                    if u not in state.pending
                    and u not in state.guessed
                    and alpha[u] in combo
                }
                child = GuessState(
                    pending=still_pending | pulled,
                    guessed=now_guessed,
                    lists={**state.lists, v: combo},
                )
                found = recurse(child, weight + size - 1, depth + 1)
                if found is not None:
                    return found
        return None

    return recurse(GuessState(frozenset(differing), frozenset(), {}), 0, 1)
