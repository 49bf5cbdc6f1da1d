"""Constructive gadgets: interchange graphs, forbidding paths, and the two
hardness reductions, each with an explicit witness builder so every
generated YES instance is independently checkable.
"""

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import (
    ColorLists,
    Coloring,
    Graph,
    Instance,
    Step,
    check_coloring,
    reverse_sequence,
)


class GadgetError(ValueError):
    """A gadget constructor was handed arguments outside its domain."""


# ---------------------------------------------------------------------------
# Complement of K_k x K_k: the graph whose row and column colorings need
# 2k-1 colors to interconvert.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BkInstance:
    """k*k vertices b(i,j); two vertices are adjacent iff they differ in both
    the row and the column index. alpha colors by row, beta by column."""

    k: int
    graph: Graph
    alpha: Coloring
    beta: Coloring

    def vertex(self, i: int, j: int) -> int:
        """Vertex id for row i, column j (both 1-indexed)."""
        return (i - 1) * self.k + (j - 1)

    def row_of(self, v: int) -> int:
        return v // self.k + 1

    def col_of(self, v: int) -> int:
        return v % self.k + 1


def build_bk(k: int) -> BkInstance:
    """Build the k-by-k interchange graph with its row and column colorings."""
    if k < 1:
        raise GadgetError("k must be at least 1")
    n = k * k
    edges = []
    for a in range(n):
        for b in range(a + 1, n):
            if a // k != b // k and a % k != b % k:
                edges.append((a, b))
    graph = Graph.from_edges(n, edges)
    alpha = tuple(v // k + 1 for v in range(n))
    beta = tuple(v % k + 1 for v in range(n))
    return BkInstance(k, graph, alpha, beta)


def bk_sequence(
    k: int,
    base_colors: Sequence[int] | None = None,
    spare_colors: Sequence[int] | None = None,
) -> list[Step]:
    """Schedule moving build_bk(k)'s row coloring to its column coloring.

    base_colors are the k colors the row/column colorings use (row i and
    column i map to base_colors[i-1]); spare_colors are k-1 extra colors
    disjoint from them. First every vertex in columns 1..k-1 moves to its
    column's spare color, then column k and finally columns 1..k-1 settle
    on their base color, skipping the one vertex already correct. Each
    vertex is recolored at most twice and the length is at most 2*k*k.
    """
    if k < 1:
        raise GadgetError("k must be at least 1")
    base = tuple(base_colors) if base_colors is not None else tuple(range(1, k + 1))
    spare = (
        tuple(spare_colors)
        if spare_colors is not None
        else tuple(range(k + 1, 2 * k))
    )
    if len(base) != k or len(set(base)) != k:
        raise GadgetError(f"need {k} distinct base colors")
    if len(spare) != k - 1 or len(set(spare)) != k - 1:
        raise GadgetError(f"need {k - 1} distinct spare colors")
    if set(base) & set(spare):
        raise GadgetError("base and spare colors must be disjoint")
    if any(c < 1 for c in base + spare):
        raise GadgetError("colors must be positive")

    def vertex(i, j):
        return (i - 1) * k + (j - 1)

    steps: list[Step] = []
    for i in range(1, k + 1):
        for j in range(1, k):
            steps.append(Step(vertex(i, j), spare[j - 1]))
    for i in range(1, k + 1):
        if i != k:
            steps.append(Step(vertex(i, k), base[k - 1]))
    for j in range(1, k):
        for i in range(1, k + 1):
            steps.append(Step(vertex(i, j), base[j - 1]))
    return steps


# ---------------------------------------------------------------------------
# Forbidding paths: 7-vertex list-colored paths acting as the single binary
# constraint "endpoints are not colored (a, b)".
# ---------------------------------------------------------------------------

PALETTE4 = (1, 2, 3, 4)


@dataclass(frozen=True)
class ForbiddingPath:
    """Path u = p0 - p1 - ... - p6 = v with color lists over 1..4.

    Every endpoint color pair except `forbidden` extends to a full list
    coloring of the path, and any such pair is reachable from any current
    coloring (sharing one endpoint color) by recoloring each internal
    vertex at most once and the moving endpoint last.
    """

    graph: Graph
    lists: ColorLists
    forbidden: tuple[int, int]

    @property
    def u(self) -> int:
        return 0

    @property
    def v(self) -> int:
        return 6


_PATH_GRAPH = Graph.from_edges(7, [(i, i + 1) for i in range(6)])


def build_forbidding_path(
    l_u: Iterable[int], l_v: Iterable[int], a: int, b: int
) -> ForbiddingPath:
    """Construct the path excluding exactly the endpoint pair (a, b).

    Internal lists are {a,c}, {c,e}, {e,f}, {f,d}, {d,b} where c avoids
    l_u, d avoids l_v, e avoids {a,c}, f avoids {b,d} with e != f. Helper
    colors are chosen as the lexicographically first (c, d, e, f) whose
    path passes both defining properties, which makes outputs byte-stable.
    Picking each helper greedily is not always sound: some quadruples then
    get two identical adjacent 2-lists whose colorings can freeze.

    Every pair with a != b is realizable. When a == b, 48 of the 196
    endpoint-list combinations admit no length-six forbidding path at all
    (exhaustive search over every internal list pattern confirms it); those
    raise GadgetError. No construction in this package uses an a == b pair.
    """
    lu = tuple(sorted(set(l_u)))
    lv = tuple(sorted(set(l_v)))
    for name, entry in (("endpoint u list", lu), ("endpoint v list", lv)):
        if not entry or any(c not in PALETTE4 for c in entry):
            raise GadgetError(f"{name} must be a nonempty subset of 1..4")
        if len(entry) == 4:
            raise GadgetError(f"{name} must be a proper subset of 1..4")
    if a not in lu:
        raise GadgetError(f"forbidden color {a} is not in the u list")
    if b not in lv:
        raise GadgetError(f"forbidden color {b} is not in the v list")
    for c in (x for x in PALETTE4 if x not in lu):
        for d in (x for x in PALETTE4 if x not in lv):
            for e in (x for x in PALETTE4 if x not in (a, c)):
                for f in (x for x in PALETTE4 if x not in (b, d, e)):
                    lists = (
                        lu,
                        tuple(sorted({a, c})),
                        tuple(sorted({c, e})),
                        tuple(sorted({e, f})),
                        tuple(sorted({f, d})),
                        tuple(sorted({d, b})),
                        lv,
                    )
                    candidate = ForbiddingPath(_PATH_GRAPH, lists, (a, b))
                    if _path_properties_ok(candidate):
                        return candidate
    raise GadgetError(
        f"no length-six path forbids exactly ({a}, {b}) for these endpoint lists"
    )


def _chain_options(lists: ColorLists, y: int) -> list[tuple[int, ...]] | None:
    """Per-position colors that still extend to the far endpoint color y.

    options[i] lists the colors position i can take such that positions
    i+1..6 can be completed; None when y is not even in the last list.
    """
    if y not in lists[-1]:
        return None
    options: list[tuple[int, ...]] = [()] * len(lists)
    options[-1] = (y,)
    for i in range(len(lists) - 2, -1, -1):
        nxt = options[i + 1]
        options[i] = tuple(c for c in lists[i] if any(d != c for d in nxt))
    return options


def pair_admissible(fp: ForbiddingPath, x: int, y: int) -> bool:
    """Whether endpoint colors (x, y) extend to a full list coloring."""
    options = _chain_options(fp.lists, y)
    return options is not None and x in options[0] and any(c != x for c in options[1])


def admissible_pairs(fp: ForbiddingPath) -> set[tuple[int, int]]:
    """Every endpoint color pair that extends to a list coloring of the path."""
    return {
        (x, y)
        for x in fp.lists[0]
        for y in fp.lists[6]
        if pair_admissible(fp, x, y)
    }


def complete_path_coloring(fp: ForbiddingPath, x: int, y: int) -> Coloring:
    """Lexicographically smallest list coloring with endpoints (x, y)."""
    options = _chain_options(fp.lists, y)
    if options is None or x not in options[0]:
        raise GadgetError(f"endpoint colors ({x}, {y}) do not fit the lists")
    out = [x]
    for i in range(1, 7):
        choices = [c for c in options[i] if c != out[-1]]
        if not choices:
            raise GadgetError(f"endpoint pair ({x}, {y}) is not admissible")
        out.append(min(choices))
    return tuple(out)


def path_colorings(fp: ForbiddingPath) -> list[Coloring]:
    """All proper list colorings of the path, lexicographically ordered."""
    out = []
    for combo in itertools.product(*fp.lists):
        if all(combo[i] != combo[i + 1] for i in range(6)):
            out.append(combo)
    return out


def _discipline_states(fp: ForbiddingPath, coloring: Coloring) -> list[tuple[int, ...]]:
    """Internal colorings reachable with endpoints frozen and each internal
    vertex recolored at most once."""
    lists = fp.lists
    start = (coloring[1:6], 0)
    seen = {start}
    frontier: deque = deque([start])
    out = [start[0]]
    while frontier:
        colors, used = frontier.popleft()
        for pos in range(5):
            if used & (1 << pos):
                continue
            held = colors[pos]
            left = colors[pos - 1] if pos > 0 else coloring[0]
            right = colors[pos + 1] if pos < 4 else coloring[6]
            for c in lists[pos + 1]:
                if c == held or c == left or c == right:
                    continue
                child = (colors[:pos] + (c,) + colors[pos + 1:], used | (1 << pos))
                if child in seen:
                    continue
                seen.add(child)
                out.append(child[0])
                frontier.append(child)
    return out


def _path_properties_ok(fp: ForbiddingPath) -> bool:
    """Exhaustively check both defining properties of a forbidding path.

    Property 1: the admissible endpoint pairs are exactly all pairs except
    the forbidden one. Property 2: from every list coloring, every
    admissible pair sharing one endpoint color is reachable under the
    recoloring discipline (internals at most once, moving endpoint last).
    """
    expected = {
        (x, y) for x in fp.lists[0] for y in fp.lists[6] if (x, y) != fp.forbidden
    }
    if admissible_pairs(fp) != expected:
        return False
    for coloring in path_colorings(fp):
        held_u, held_v = coloring[0], coloring[6]
        states = _discipline_states(fp, coloring)
        next_to_u = {s[0] for s in states}
        next_to_v = {s[4] for s in states}
        for x in fp.lists[0]:
            if x != held_u and (x, held_v) in expected:
                if not any(c != x for c in next_to_u):
                    return False
        for y in fp.lists[6]:
            if y != held_v and (held_u, y) in expected:
                if not any(c != y for c in next_to_v):
                    return False
    return True


def shift_path(
    fp: ForbiddingPath, current: Sequence[int], target: tuple[int, int]
) -> list[Step]:
    """Steps moving the path's endpoints to the target pair.

    The target must be admissible and agree with the current coloring on
    at least one endpoint. Internal vertices are each recolored at most
    once and the moving endpoint only as the final step; a BFS under that
    discipline keeps the result shortest and deterministic. Returns [] when
    both endpoints already match.
    """
    current = tuple(current)
    bad = check_coloring(fp.graph, fp.lists, current)
    if bad:
        raise GadgetError(f"current coloring is not a proper list coloring: {bad[0]}")
    x, y = target
    if (x, y) == fp.forbidden:
        raise GadgetError(f"target pair {target} is the forbidden combination")
    if x not in fp.lists[0] or y not in fp.lists[6]:
        raise GadgetError(f"target pair {target} is outside the endpoint lists")
    held_u, held_v = current[0], current[6]
    if x != held_u and y != held_v:
        raise GadgetError("target must agree with the current coloring on one endpoint")
    if x == held_u and y == held_v:
        return []
    if y != held_v:
        moving, final_color, guard = 6, y, 4
    else:
        moving, final_color, guard = 0, x, 0

    start = (current[1:6], 0)
    parent: dict = {start: None}
    goal = start if start[0][guard] != final_color else None
    frontier: deque = deque([] if goal else [start])
    while frontier and goal is None:
        state = frontier.popleft()
        colors, used = state
        for pos in range(5):
            if used & (1 << pos):
                continue
            held = colors[pos]
            left = colors[pos - 1] if pos > 0 else current[0]
            right = colors[pos + 1] if pos < 4 else current[6]
            for c in fp.lists[pos + 1]:
                if c == held or c == left or c == right:
                    continue
                child = (colors[:pos] + (c,) + colors[pos + 1:], used | (1 << pos))
                if child in parent:
                    continue
                parent[child] = (state, Step(pos + 1, c))
                if child[0][guard] != final_color:
                    goal = child
                    break
                frontier.append(child)
            if goal is not None:
                break
    if goal is None:
        raise GadgetError("no shift reaches the target under the recoloring discipline")
    steps: list[Step] = []
    state = goal
    while parent[state] is not None:
        state, step = parent[state]
        steps.append(step)
    steps.reverse()
    steps.append(Step(moving, final_color))
    return steps


# ---------------------------------------------------------------------------
# List instances over 1..4 -> plain instances: anchor every color with a
# clique so dropped lists cost nothing.
# ---------------------------------------------------------------------------


def list_to_plain(instance: Instance, k: int = 4) -> Instance:
    """Equivalent plain k-coloring instance for a list instance over 1..4.

    Adds a clique of k anchor vertices, the i-th pinned to color i by
    alpha = beta, plus an edge from every original vertex to each anchor
    whose color is missing from its list. Distances between the original
    colorings are unchanged. ell is untouched.
    """
    if k < 4:
        raise GadgetError("target color count must be at least 4")
    instance.validate()
    lists = instance.effective_lists()
    for v, entry in enumerate(lists):
        if any(c > 4 for c in entry):
            raise GadgetError(f"list of vertex {v} is not a subset of 1..4")
    n = instance.graph.n
    anchors = tuple(range(n, n + k))
    edges = list(instance.graph.edges)
    edges.extend(itertools.combinations(anchors, 2))
    for v in range(n):
        allowed = set(lists[v])
        for i in range(1, k + 1):
            if i not in allowed:
                edges.append((v, anchors[i - 1]))
    graph = Graph.from_edges(n + k, edges)
    pinned = tuple(range(1, k + 1))
    roles = dict(instance.roles) if instance.roles else {}
    for i, anchor in enumerate(anchors, 1):
        roles[anchor] = f"anchor:{i}"
    return Instance(
        graph=graph,
        k=k,
        ell=instance.ell,
        alpha=instance.alpha + pinned,
        beta=instance.beta + pinned,
        lists=None,
        roles=roles,
    )


# ---------------------------------------------------------------------------
# Reduction from 3-colorability: one x/y/z gadget per source edge, wired
# with forbidding paths, plus the a/b/c/d release gadget.
# ---------------------------------------------------------------------------

SOURCE_LIST = (1, 2, 3)
X_LIST = (1, 2, 4)
Y_LIST = (3, 4)
Z_LIST = (1, 2, 4)

# (first endpoint role, second endpoint role, forbidden pair) per source edge.
_EDGE_PATHS = (
    ("u", "x", 1, 2),
    ("u", "x", 3, 1),
    ("u", "y", 2, 3),
    ("v", "x", 2, 1),
    ("v", "x", 3, 2),
    ("v", "y", 1, 3),
    ("x", "z", 4, 1),
    ("y", "z", 4, 2),
)

_ROLE_LISTS = {"u": SOURCE_LIST, "v": SOURCE_LIST, "x": X_LIST, "y": Y_LIST, "z": Z_LIST}


@dataclass(frozen=True)
class PathEmbedding:
    """A forbidding path placed inside a larger graph.

    vertices[0] and vertices[6] are the role endpoints; the rest are the
    path's private internal vertices.
    """

    fp: ForbiddingPath
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class EdgeGadget:
    """Per-source-edge machinery: x/y/z vertices plus eight forbidding paths."""

    source_u: int
    source_v: int
    x: int
    y: int
    z: int
    paths: tuple[PathEmbedding, ...]


@dataclass(frozen=True)
class NpInstance:
    """List instance whose alpha -> beta question encodes 3-colorability of
    the source graph. a/b/c/d form the release gadget; every z vertex is
    wired to c."""

    instance: Instance
    source: Graph
    gadgets: tuple[EdgeGadget, ...]
    a: int
    b: int
    c: int
    d: int

    @property
    def z_vertices(self) -> tuple[int, ...]:
        return tuple(g.z for g in self.gadgets)


def np_reduce(source: Graph) -> NpInstance:
    """Build the list instance that is YES iff the source graph is 3-colorable.

    The source's vertices are kept (as an independent set: none of its
    edges are copied); per edge uv, with u the lower id, three gadget
    vertices x/y/z start at color 4 and are tied to u and v through direct
    edges u-x, u-y and eight forbidding paths. The alpha coloring extends
    along every path deterministically; beta only swaps the colors of a
    and b. The budget is 4 * |V| (every vertex moves at most twice out and
    twice back in the canonical witness).
    """
    lists: list[tuple[int, ...]] = []
    alpha: list[int] = []
    roles: dict[int, str] = {}
    edges: list[tuple[int, int]] = []

    def new_vertex(tag: str, colors: tuple[int, ...], start: int) -> int:
        vid = len(lists)
        lists.append(colors)
        alpha.append(start)
        roles[vid] = tag
        return vid

    for i in range(source.n):
        new_vertex(f"g:{i + 1}", SOURCE_LIST, 1)

    gadgets: list[EdgeGadget] = []
    for u, v in sorted(source.edges):
        label = f"{u + 1}-{v + 1}"
        x = new_vertex(f"x:{label}", X_LIST, 4)
        y = new_vertex(f"y:{label}", Y_LIST, 4)
        z = new_vertex(f"z:{label}", Z_LIST, 4)
        edges.append((u, x))
        edges.append((u, y))
        ends = {"u": u, "v": v, "x": x, "y": y, "z": z}
        paths: list[PathEmbedding] = []
        for index, (p_role, q_role, fa, fb) in enumerate(_EDGE_PATHS, 1):
            p, q = ends[p_role], ends[q_role]
            fp = build_forbidding_path(_ROLE_LISTS[p_role], _ROLE_LISTS[q_role], fa, fb)
            filled = complete_path_coloring(fp, alpha[p], alpha[q])
            ids = [p]
            for pos in range(1, 6):
                ids.append(
                    new_vertex(f"fp:{label}:{index}:{pos}", fp.lists[pos], filled[pos])
                )
            ids.append(q)
            edges.extend((ids[i], ids[i + 1]) for i in range(6))
            paths.append(PathEmbedding(fp, tuple(ids)))
        gadgets.append(EdgeGadget(u, v, x, y, z, tuple(paths)))

    a = new_vertex("a", (1, 2, 3), 1)
    b = new_vertex("b", (1, 2), 2)
    c = new_vertex("c", (3, 4), 3)
    d = new_vertex("d", (4,), 4)
    edges.extend([(a, b), (a, c), (a, d), (b, c), (b, d)])
    edges.extend((g.z, c) for g in gadgets)

    n = len(lists)
    graph = Graph.from_edges(n, edges)
    alpha_t = tuple(alpha)
    beta = list(alpha)
    beta[a] = 2
    beta[b] = 1
    instance = Instance(
        graph=graph,
        k=4,
        ell=4 * n,
        alpha=alpha_t,
        beta=tuple(beta),
        lists=tuple(lists),
        roles=roles,
    )
    return NpInstance(instance, source, tuple(gadgets), a, b, c, d)


def gadget_abstraction_check(
    np_inst: NpInstance, edge_index: int, colors: Sequence[int]
) -> bool:
    """Whether a (u, v, x, y, z) role assignment extends to its whole gadget.

    Sound and complete through the forbidding-path abstraction: the paths
    are internally disjoint, so an extension exists exactly when each
    path's endpoint pair avoids its forbidden combination and the two
    direct edges u-x, u-y are conflict-free.
    """
    gadget = np_inst.gadgets[edge_index]
    cu, cv, cx, cy, cz = colors
    for value, allowed, name in (
        (cu, SOURCE_LIST, "u"),
        (cv, SOURCE_LIST, "v"),
        (cx, X_LIST, "x"),
        (cy, Y_LIST, "y"),
        (cz, Z_LIST, "z"),
    ):
        if value not in allowed:
            raise GadgetError(f"color {value} is outside the {name} list")
    if cu == cx or cu == cy:
        return False
    by_vertex = {
        gadget.source_u: cu,
        gadget.source_v: cv,
        gadget.x: cx,
        gadget.y: cy,
        gadget.z: cz,
    }
    for emb in gadget.paths:
        pair = (by_vertex[emb.vertices[0]], by_vertex[emb.vertices[6]])
        if pair == emb.fp.forbidden:
            return False
    return True


def np_witness(np_inst: NpInstance, three_coloring: Sequence[int]) -> list[Step]:
    """Recoloring sequence alpha -> beta certifying a YES, given a proper
    3-coloring of the source graph.

    Phases: recolor every source vertex to its 3-coloring color (shifting
    incident paths first), recolor each gadget so its z vertex leaves
    color 4, free c to color 4, cycle a and b through a -> 3, b -> 1,
    a -> 2, then replay everything before the a/b cycle in reverse so only
    a and b end up changed.
    """
    source = np_inst.source
    c3 = tuple(three_coloring)
    if len(c3) != source.n:
        raise GadgetError(f"3-coloring has length {len(c3)}, expected {source.n}")
    if any(c not in (1, 2, 3) for c in c3):
        raise GadgetError("3-coloring must use colors 1..3")
    for u, v in sorted(source.edges):
        if c3[u] == c3[v]:
            raise GadgetError(f"3-coloring is improper on edge ({u + 1}, {v + 1})")

    instance = np_inst.instance
    adjacency = instance.graph.adjacency
    current = list(instance.alpha)
    steps: list[Step] = []

    incident: dict[int, list[PathEmbedding]] = {}
    for gadget in np_inst.gadgets:
        for emb in gadget.paths:
            incident.setdefault(emb.vertices[0], []).append(emb)
            incident.setdefault(emb.vertices[6], []).append(emb)

    def emit(vertex: int, color: int) -> None:
        assert all(current[u] != color for u in adjacency[vertex])
        steps.append(Step(vertex, color))
        current[vertex] = color

    def recolor_role(vertex: int, color: int) -> None:
        # Prepare every incident path for the move, then move the vertex once.
        if current[vertex] == color:
            return
        for emb in incident.get(vertex, ()):
            local = tuple(current[w] for w in emb.vertices)
            if emb.vertices[0] == vertex:
                target = (color, local[6])
            else:
                target = (local[0], color)
            shift = shift_path(emb.fp, local, target)
            assert shift and shift[-1].vertex in (0, 6)
            for step in shift[:-1]:
                emit(emb.vertices[step.vertex], step.color)
        emit(vertex, color)

    def role_move_ok(gadget: EdgeGadget, vertex: int, color: int) -> bool:
        if vertex in (gadget.x, gadget.y) and current[gadget.source_u] == color:
            return False
        if vertex == gadget.z and current[np_inst.c] == color:
            return False
        for emb in incident.get(vertex, ()):
            far = emb.vertices[6] if emb.vertices[0] == vertex else emb.vertices[0]
            if emb.vertices[0] == vertex:
                pair = (color, current[far])
            else:
                pair = (current[far], color)
            if pair == emb.fp.forbidden:
                return False
        return True

    for vertex in range(source.n):
        recolor_role(vertex, c3[vertex])
    for gadget in np_inst.gadgets:
        for vertex, color in ((gadget.x, 1), (gadget.x, 2), (gadget.y, 3)):
            if role_move_ok(gadget, vertex, color):
                recolor_role(vertex, color)
                break
        else:
            raise GadgetError("no gadget branch applies; 3-coloring is inconsistent")
        for color in (1, 2):
            if role_move_ok(gadget, gadget.z, color):
                recolor_role(gadget.z, color)
                break
        else:
            raise GadgetError("z vertex cannot leave color 4")
    recolor_role(np_inst.c, 4)

    outbound = list(steps)
    emit(np_inst.a, 3)
    emit(np_inst.b, 1)
    emit(np_inst.a, 2)
    for step in reverse_sequence(instance.alpha, outbound):
        emit(step.vertex, step.color)
    return steps


# ---------------------------------------------------------------------------
# Reduction from independent set, parameterized: a source copy, an
# interchange block, and color-guard sets that freeze every other color.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class W1Instance:
    """Plain instance with k = n + t + 1 and ell = 2t + 2t^2 encoding
    whether the source graph has an independent set of size t - 1."""

    instance: Instance
    source: Graph
    t: int
    g_ids: tuple[int, ...]
    b_ids: tuple[int, ...]
    guard_sets: tuple[tuple[int, ...], ...]

    def b_vertex(self, i: int, j: int) -> int:
        """Interchange-block vertex for row i, column j (1-indexed)."""
        return self.b_ids[(i - 1) * self.t + (j - 1)]


def w1_reduce(source: Graph, t: int) -> W1Instance:
    """Build the bounded-length instance for independent sets of size t - 1.

    The graph is a copy of the source, a t-by-t interchange block joined
    completely to it, and n + t + 1 color-guard sets of size 2t + 2t^2:
    vertex g_i misses only guard sets i and n + t + 1, every block vertex
    sees all of guard set n + t + 1. alpha colors g_i with i, guards with
    their index, block rows with n + i; beta only changes block columns to
    n + j.
    """
    if t < 1:
        raise GadgetError("t must be at least 1")
    n = source.n
    k = n + t + 1
    ell = 2 * t + 2 * t * t
    guard_size = ell

    g_ids = tuple(range(n))
    b_ids = tuple(range(n, n + t * t))
    guard_sets = []
    offset = n + t * t
    for i in range(1, k + 1):
        guard_sets.append(tuple(range(offset, offset + guard_size)))
        offset += guard_size
    total = offset

    edges = list(source.edges)
    for g in g_ids:
        for b in b_ids:
            edges.append((g, b))
    for g in g_ids:
        skip = {g + 1, k}
        for i, guard in enumerate(guard_sets, 1):
            if i in skip:
                continue
            edges.extend((g, c) for c in guard)
    top_guard = guard_sets[k - 1]
    for b in b_ids:
        edges.extend((b, c) for c in top_guard)

    graph = Graph.from_edges(total, edges)
    alpha = [0] * total
    roles: dict[int, str] = {}
    for g in g_ids:
        alpha[g] = g + 1
        roles[g] = f"g:{g + 1}"
    for index, b in enumerate(b_ids):
        i, j = index // t + 1, index % t + 1
        alpha[b] = n + i
        roles[b] = f"b:{i}-{j}"
    for i, guard in enumerate(guard_sets, 1):
        for pos, c in enumerate(guard, 1):
            alpha[c] = i
            roles[c] = f"cg:{i}:{pos}"
    beta = list(alpha)
    for index, b in enumerate(b_ids):
        beta[b] = n + index % t + 1

    instance = Instance(
        graph=graph,
        k=k,
        ell=ell,
        alpha=tuple(alpha),
        beta=tuple(beta),
        lists=None,
        roles=roles,
    )
    return W1Instance(instance, source, t, g_ids, b_ids, tuple(guard_sets))


def w1_witness(w1: W1Instance, independent_set: Iterable[int]) -> list[Step]:
    """Recoloring sequence alpha -> beta from an independent set of size t - 1.

    Parks each chosen source vertex on color n + t + 1, runs the
    interchange schedule over the block using the freed source colors as
    spares, then restores the parked vertices. Length is at most
    2(t - 1) + 2t^2, under the instance budget.
    """
    chosen = sorted(set(independent_set))
    n = w1.source.n
    t = w1.t
    if len(chosen) != t - 1:
        raise GadgetError(f"need an independent set of exactly {t - 1} vertices")
    for v in chosen:
        if not 0 <= v < n:
            raise GadgetError(f"vertex {v} is not a source vertex")
    chosen_set = set(chosen)
    for u, v in sorted(w1.source.edges):
        if u in chosen_set and v in chosen_set:
            raise GadgetError(f"set is not independent: edge ({u + 1}, {v + 1})")

    top = n + t + 1
    steps = [Step(v, top) for v in chosen]
    base = tuple(range(n + 1, n + t + 1))
    spare = tuple(v + 1 for v in chosen)
    for step in bk_sequence(t, base, spare):
        steps.append(Step(w1.b_ids[step.vertex], step.color))
    steps.extend(Step(v, v + 1) for v in chosen)
    return steps


def colorguard_check(w1: W1Instance, steps: Sequence[Step]) -> bool:
    """Whether a sequence from alpha keeps every guard condition.

    True iff at every point each source vertex g_i holds color i or
    n + t + 1 and no interchange-block vertex holds n + t + 1. Steps must
    apply cleanly and fit the instance budget; properness along the way is
    the caller's concern (pair with verify_sequence for full checking).
    """
    instance = w1.instance
    n = w1.source.n
    top = n + w1.t + 1
    if len(steps) > instance.ell:
        raise GadgetError(f"sequence length {len(steps)} exceeds budget {instance.ell}")
    current = list(instance.alpha)
    b_set = set(w1.b_ids)

    def guards_hold() -> bool:
        for g in w1.g_ids:
            if current[g] not in (g + 1, top):
                return False
        for b in w1.b_ids:
            if current[b] == top:
                return False
        return True

    if not guards_hold():
        return False
    for index, (v, c) in enumerate(steps):
        if not 0 <= v < instance.graph.n:
            raise GadgetError(f"step {index} names unknown vertex {v}")
        if not 1 <= c <= instance.k:
            raise GadgetError(f"step {index} uses color {c} outside 1..{instance.k}")
        if current[v] == c:
            raise GadgetError(f"step {index} is degenerate")
        current[v] = c
        if v < n or v in b_set:
            if not guards_hold():
                return False
    return True
