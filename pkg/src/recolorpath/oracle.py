"""Ground-truth breadth-first search over the space of proper list colorings.

Deliberately simple: plain BFS with a canonical state encoding and a hard
state cap. Every other solver and generator in the package is checked
against this one, so it stays free of pruning or heuristics.
"""

from collections import deque
from dataclasses import dataclass
from typing import Callable, Sequence

from .graph import (
    Coloring,
    Graph,
    GraphError,
    Step,
    as_lists,
    check_coloring,
    full_lists,
)

DEFAULT_NODE_CAP = 10_000_000


class SearchBudgetExceeded(RuntimeError):
    """The state cap was hit before the search could settle the question.

    Distinct from "unreachable": the search gave up, it did not finish.
    """


class ColoringCodec:
    """Injective fixed-width packing of colorings for visited-set keys.

    Packs each color into ceil(log2 k) bits when the whole coloring fits
    in 63 bits; otherwise keys are the raw tuples.
    """

    def __init__(self, n: int, k: int):
        self.n = n
        self.k = k
        self.bits = max(1, (k - 1).bit_length())
        self.packable = n * self.bits <= 63

    def encode(self, coloring: Coloring):
        if not self.packable:
            return coloring
        key = 0
        bits = self.bits
        for c in coloring:
            key = (key << bits) | (c - 1)
        return key

    def decode(self, key) -> Coloring:
        if not self.packable:
            return key
        mask = (1 << self.bits) - 1
        out = [0] * self.n
        for i in range(self.n - 1, -1, -1):
            out[i] = (key & mask) + 1
            key >>= self.bits
        return tuple(out)


@dataclass(frozen=True)
class OracleResult:
    """distance/witness are both present (reachable) or both None."""

    distance: int | None
    witness: list[Step] | None
    explored: int


def _require_proper(graph: Graph, lists, coloring, name: str) -> None:
    bad = check_coloring(graph, lists, coloring)
    if bad:
        raise GraphError(f"{name} is not a proper list coloring: {bad[0]}")


def _palette_size(lists) -> int:
    return max(entry[-1] for entry in lists) if lists else 1


def oracle_distance(
    graph: Graph,
    k_or_lists,
    alpha: Sequence[int],
    beta: Sequence[int],
    node_cap: int = DEFAULT_NODE_CAP,
) -> OracleResult:
    """Exact distance between two colorings in the color graph, with witness.

    BFS from alpha, expanding neighbors in vertex-ascending then
    color-ascending order, so the witness is shortest and reproducible
    byte for byte. distance is None when beta is unreachable. Raises
    SearchBudgetExceeded when more than node_cap states would be visited.
    """
    lists = as_lists(graph.n, k_or_lists)
    alpha = tuple(alpha)
    beta = tuple(beta)
    _require_proper(graph, lists, alpha, "alpha")
    _require_proper(graph, lists, beta, "beta")
    if alpha == beta:
        return OracleResult(0, [], 1)
    codec = ColoringCodec(graph.n, _palette_size(lists))
    adjacency = graph.adjacency
    start_key = codec.encode(alpha)
    goal_key = codec.encode(beta)
    parent: dict = {start_key: None}
    frontier: deque = deque([(alpha, start_key)])
    explored = 1
    while frontier:
        current, current_key = frontier.popleft()
        for v in range(graph.n):
            held = current[v]
            for c in lists[v]:
                if c == held:
                    continue
                if any(current[u] == c for u in adjacency[v]):
                    continue
                child = current[:v] + (c,) + current[v + 1:]
                child_key = codec.encode(child)
                if child_key in parent:
                    continue
                if explored >= node_cap:
                    raise SearchBudgetExceeded(
                        f"visited {explored} colorings without an answer (cap {node_cap})"
                    )
                parent[child_key] = (current_key, Step(v, c))
                explored += 1
                if child_key == goal_key:
                    steps: list[Step] = []
                    key = child_key
                    while parent[key] is not None:
                        key, step = parent[key]
                        steps.append(step)
                    steps.reverse()
                    return OracleResult(len(steps), steps, explored)
                frontier.append((child, child_key))
    return OracleResult(None, None, explored)


def reachable_set(
    graph: Graph,
    k_or_lists,
    alpha: Sequence[int],
    node_cap: int = DEFAULT_NODE_CAP,
) -> set:
    """Keys of every coloring reachable from alpha (its component).

    Keys are ColoringCodec encodings for the instance's palette size.
    """
    lists = as_lists(graph.n, k_or_lists)
    alpha = tuple(alpha)
    _require_proper(graph, lists, alpha, "alpha")
    codec = ColoringCodec(graph.n, _palette_size(lists))
    adjacency = graph.adjacency
    visited = {codec.encode(alpha)}
    frontier: deque = deque([alpha])
    while frontier:
        current = frontier.popleft()
        for v in range(graph.n):
            held = current[v]
            for c in lists[v]:
                if c == held:
                    continue
                if any(current[u] == c for u in adjacency[v]):
                    continue
                child = current[:v] + (c,) + current[v + 1:]
                child_key = codec.encode(child)
                if child_key in visited:
                    continue
                if len(visited) >= node_cap:
                    raise SearchBudgetExceeded(
                        f"visited {len(visited)} colorings without finishing (cap {node_cap})"
                    )
                visited.add(child_key)
                frontier.append(child)
    return visited


def separator_holds(
    graph: Graph,
    k: int,
    alpha: Sequence[int],
    beta: Sequence[int],
    forbidden: Callable[[Coloring], bool],
    node_cap: int = DEFAULT_NODE_CAP,
) -> bool:
    """True iff deleting all colorings satisfying the predicate disconnects
    beta from alpha in the k-coloring graph.

    If alpha or beta itself satisfies the predicate no path can exist, so
    the separator trivially holds.
    """
    lists = full_lists(graph.n, k)
    alpha = tuple(alpha)
    beta = tuple(beta)
    _require_proper(graph, lists, alpha, "alpha")
    _require_proper(graph, lists, beta, "beta")
    if forbidden(alpha) or forbidden(beta):
        return True
    if alpha == beta:
        return False
    codec = ColoringCodec(graph.n, k)
    adjacency = graph.adjacency
    goal_key = codec.encode(beta)
    visited = {codec.encode(alpha)}
    frontier: deque = deque([alpha])
    while frontier:
        current = frontier.popleft()
        for v in range(graph.n):
            held = current[v]
            for c in lists[v]:
                if c == held:
                    continue
                if any(current[u] == c for u in adjacency[v]):
                    continue
                child = current[:v] + (c,) + current[v + 1:]
                child_key = codec.encode(child)
                if child_key in visited:
                    continue
                if forbidden(child):
                    continue
                if child_key == goal_key:
                    return False
                if len(visited) >= node_cap:
                    raise SearchBudgetExceeded(
                        f"visited {len(visited)} colorings without finishing (cap {node_cap})"
                    )
                visited.add(child_key)
                frontier.append(child)
    return True
