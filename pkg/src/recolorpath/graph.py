"""Graphs, colorings, color lists, and recoloring sequences.

Vertices are 0-indexed here; file formats use 1-indexed vertices.
Colors are 1-indexed everywhere. Colorings are plain tuples so that
search code can branch cheaply without aliasing.
"""

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

Coloring = tuple[int, ...]
ColorLists = tuple[tuple[int, ...], ...]


class GraphError(ValueError):
    """Structural or domain error in a graph, coloring, or sequence."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    Construct through from_edges, which normalizes edges to (min, max)
    pairs and rejects self-loops, duplicates, and out-of-range endpoints.
    """

    n: int
    edges: frozenset[tuple[int, int]]
    adjacency: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise GraphError("vertex count must be nonnegative")
        normalized: set[tuple[int, int]] = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            edge = (u, v) if u < v else (v, u)
            if edge in normalized:
                raise GraphError(f"duplicate edge {edge}")
            normalized.add(edge)
        adjacency: list[list[int]] = [[] for _ in range(n)]
        for u, v in normalized:
            adjacency[u].append(v)
            adjacency[v].append(u)
        return cls(n, frozenset(normalized), tuple(tuple(sorted(a)) for a in adjacency))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])


def induced_subgraph(graph: Graph, vertices: Sequence[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph on the given vertices plus the new-id -> old-id map."""
    order = tuple(vertices)
    if len(set(order)) != len(order):
        raise GraphError("induced subgraph vertices must be distinct")
    index = {old: new for new, old in enumerate(order)}
    edges = [
        (index[u], index[v])
        for u, v in graph.edges
        if u in index and v in index
    ]
    return Graph.from_edges(len(order), edges), order


class Step(NamedTuple):
    """One recoloring step: assign new_color to vertex.

    The new color must differ from the color the vertex holds when the
    step is applied; no-op steps are not representable.
    """

    vertex: int
    color: int


def full_lists(n: int, k: int) -> ColorLists:
    """Color lists giving every vertex the full palette 1..k."""
    if k < 1:
        raise GraphError("color count must be at least 1")
    palette = tuple(range(1, k + 1))
    return (palette,) * n


def as_lists(n: int, k_or_lists) -> ColorLists:
    """Normalize a color count or per-vertex lists to sorted tuples."""
    if isinstance(k_or_lists, int):
        return full_lists(n, k_or_lists)
    lists = tuple(tuple(sorted(set(entry))) for entry in k_or_lists)
    if len(lists) != n:
        raise GraphError(f"expected {n} color lists, got {len(lists)}")
    for v, entry in enumerate(lists):
        if not entry:
            raise GraphError(f"empty color list for vertex {v}")
        if entry[0] < 1:
            raise GraphError(f"color list for vertex {v} contains {entry[0]}")
    return lists


@dataclass(frozen=True)
class ListViolation:
    """The vertex holds a color outside its list (or outside 1..k)."""

    vertex: int
    color: int


@dataclass(frozen=True)
class EdgeConflict:
    """Both endpoints of the edge hold the same color."""

    u: int
    v: int
    color: int


def check_coloring(graph: Graph, k_or_lists, coloring: Sequence[int]) -> list:
    """All violations that keep the assignment from being a proper (list) coloring.

    Returns list violations in vertex order followed by edge conflicts in
    sorted edge order; an empty result means the coloring is proper.
    """
    if len(coloring) != graph.n:
        raise GraphError(f"coloring has length {len(coloring)}, expected {graph.n}")
    lists = as_lists(graph.n, k_or_lists)
    violations: list = []
    for v in range(graph.n):
        if coloring[v] not in lists[v]:
            violations.append(ListViolation(v, coloring[v]))
    for u, v in sorted(graph.edges):
        if coloring[u] == coloring[v]:
            violations.append(EdgeConflict(u, v, coloring[u]))
    return violations


def is_proper(graph: Graph, k_or_lists, coloring: Sequence[int]) -> bool:
    return not check_coloring(graph, k_or_lists, coloring)


def apply_step(coloring: Coloring, step: Step) -> Coloring:
    """Fresh coloring with exactly one entry changed; the input is untouched."""
    v, c = step
    if not 0 <= v < len(coloring):
        raise GraphError(f"step vertex {v} out of range")
    if c < 1:
        raise GraphError(f"step color {c} must be positive")
    if coloring[v] == c:
        raise GraphError(f"degenerate step: vertex {v} already has color {c}")
    return coloring[:v] + (c,) + coloring[v + 1:]


@dataclass(frozen=True)
class Verdict:
    """Outcome of verify_sequence; truthy exactly when the sequence is valid."""

    ok: bool
    reason: str = ""
    step_index: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_sequence(
    graph: Graph,
    k_or_lists,
    alpha: Sequence[int],
    beta: Sequence[int],
    ell: int,
    steps: Sequence[Step],
) -> Verdict:
    """Check a recoloring sequence end to end.

    Valid iff the sequence fits the budget, every prefix application is a
    proper list-respecting coloring, and the final coloring equals beta.
    On failure the verdict carries the first offending step index (when
    the failure is tied to a step) and a reason.
    """
    lists = as_lists(graph.n, k_or_lists)
    bad = check_coloring(graph, lists, tuple(alpha))
    if bad:
        return Verdict(False, f"start coloring is not proper: {bad[0]}")
    bad = check_coloring(graph, lists, tuple(beta))
    if bad:
        return Verdict(False, f"target coloring is not proper: {bad[0]}")
    if len(steps) > ell:
        return Verdict(False, f"length {len(steps)} exceeds budget {ell}")
    current = tuple(alpha)
    for i, (v, c) in enumerate(steps):
        if not 0 <= v < graph.n:
            return Verdict(False, f"vertex {v} out of range", i)
        if c == current[v]:
            return Verdict(False, f"degenerate step: vertex {v} already has color {c}", i)
        if c not in lists[v]:
            return Verdict(False, f"color {c} is not allowed on vertex {v}", i)
        for u in graph.adjacency[v]:
            if current[u] == c:
                return Verdict(False, f"color {c} on vertex {v} conflicts with neighbor {u}", i)
        current = current[:v] + (c,) + current[v + 1:]
    if current != tuple(beta):
        v = next(i for i in range(graph.n) if current[i] != beta[i])
        return Verdict(False, f"final coloring differs from target at vertex {v}")
    return Verdict(True)


def used_color_lists(alpha: Sequence[int], steps: Sequence[Step]) -> list[set[int]]:
    """Per-vertex set of every color the vertex holds at any point.

    Includes the start color, so entries are never empty.
    """
    used = [{c} for c in alpha]
    current = list(alpha)
    for v, c in steps:
        if not 0 <= v < len(current):
            raise GraphError(f"step vertex {v} out of range")
        if current[v] == c:
            raise GraphError(f"degenerate step: vertex {v} already has color {c}")
        current[v] = c
        used[v].add(c)
    return used


def sequence_weight(used: Sequence[set[int]]) -> int:
    """Sum of (|used(v)| - 1); a lower bound on the sequence length."""
    return sum(len(u) - 1 for u in used)


def diff_set(alpha: Sequence[int], beta: Sequence[int]) -> set[int]:
    """Vertices on which the two assignments disagree."""
    if len(alpha) != len(beta):
        raise GraphError("assignments have different lengths")
    return {v for v in range(len(alpha)) if alpha[v] != beta[v]}


def reverse_sequence(alpha: Sequence[int], steps: Sequence[Step]) -> list[Step]:
    """Steps that undo the given sequence, each restoring the prior color.

    If steps is valid from alpha to some beta, the result is valid from
    beta back to alpha and has the same length.
    """
    current = list(alpha)
    prior: list[Step] = []
    for v, c in steps:
        prior.append(Step(v, current[v]))
        current[v] = c
    prior.reverse()
    return prior


@dataclass(frozen=True)
class Instance:
    """A bounded-length recoloring question: alpha -> beta in at most ell steps.

    lists is None for a plain k-coloring instance (full palette everywhere).
    roles optionally tags vertices of gadget-generated instances.
    """

    graph: Graph
    k: int
    ell: int
    alpha: Coloring
    beta: Coloring
    lists: ColorLists | None = None
    roles: dict[int, str] | None = None

    def effective_lists(self) -> ColorLists:
        if self.lists is not None:
            return self.lists
        return full_lists(self.graph.n, self.k)

    def validate(self) -> None:
        """Raise GraphError unless the instance is well formed."""
        if self.k < 1:
            raise GraphError("k must be at least 1")
        if self.ell < 0:
            raise GraphError("budget must be nonnegative")
        if len(self.alpha) != self.graph.n or len(self.beta) != self.graph.n:
            raise GraphError("alpha and beta must color every vertex")
        lists = as_lists(self.graph.n, self.effective_lists())
        for v, entry in enumerate(lists):
            if entry[-1] > self.k:
                raise GraphError(f"color list for vertex {v} exceeds k={self.k}")
        for name, coloring in (("alpha", self.alpha), ("beta", self.beta)):
            bad = check_coloring(self.graph, lists, coloring)
            if bad:
                first = bad[0]
                if isinstance(first, EdgeConflict):
                    raise GraphError(
                        f"{name} has a color conflict on edge ({first.u + 1}, {first.v + 1})"
                    )
                raise GraphError(
                    f"{name} gives vertex {first.vertex + 1} color {first.color}, "
                    "which its list does not allow"
                )
        if self.roles:
            for v in self.roles:
                if not 0 <= v < self.graph.n:
                    raise GraphError(f"role tag on unknown vertex {v}")
