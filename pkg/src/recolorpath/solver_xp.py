"""Depth-bounded branching solver: polynomial for each fixed budget.

From the current coloring, branch on every proper single-vertex recoloring
and recurse until the budget runs out. Wrapped in iterative deepening so a
returned witness is always shortest, which makes the output directly
comparable to the oracle.
"""

from dataclasses import dataclass, field
from typing import Sequence

from .graph import Graph, GraphError, Step, as_lists, check_coloring
from .oracle import SearchBudgetExceeded


@dataclass
class XpStats:
    """Counters for one solve_xp call.

    rounds holds (budget, colorings generated in that round); generated is
    the total across rounds.
    """

    generated: int = 0
    rounds: list[tuple[int, int]] = field(default_factory=list)


def solve_xp(
    graph: Graph,
    k_or_lists,
    alpha: Sequence[int],
    beta: Sequence[int],
    ell: int,
    *,
    prune_revisits: bool = False,
    node_cap: int | None = None,
    stats: XpStats | None = None,
) -> list[Step] | None:
    """Shortest recoloring sequence of length <= ell, or None.

    Branch order is vertex ascending then color ascending, so results are
    reproducible. prune_revisits skips a coloring already expanded at the
    same or smaller depth within the current deepening round; it changes
    the traversal, never the verdict or the returned witness. node_cap
    bounds the total number of colorings generated across rounds and
    raises SearchBudgetExceeded when exceeded.
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
        stats = XpStats()
    adjacency = graph.adjacency
    n = graph.n
    path: list[Step] = []

    for budget in range(ell + 1):
        round_start = stats.generated
        seen: dict | None = {alpha: 0} if prune_revisits else None

        def descend(current, depth) -> bool:
            if current == beta:
                return True
            if depth == budget:
                return False
            next_depth = depth + 1
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
                    stats.generated += 1
                    if node_cap is not None and stats.generated > node_cap:
                        raise SearchBudgetExceeded(
                            f"generated {stats.generated} colorings (cap {node_cap})"
                        )
                    child = current[:v] + (c,) + current[v + 1:]
                    if seen is not None:
                        before = seen.get(child)
                        if before is not None and before <= next_depth:
                            continue
                        seen[child] = next_depth
                    path.append(Step(v, c))
                    if descend(child, next_depth):
                        return True
                    path.pop()
            return False

        found = descend(alpha, 0)
        stats.rounds.append((budget, stats.generated - round_start))
        if found:
            return list(path)
    return None
