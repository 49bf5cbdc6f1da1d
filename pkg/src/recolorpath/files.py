"""Line-oriented text formats for instances, sequences, and source graphs.

Instance files:
    c <comment>                 anywhere; `c role <v> <tag>` tags a vertex
    p recolor <n> <k> <ell>     exactly once, first non-comment line
    e <u> <v>                   one per edge
    a <v> <color>               start color, exactly one per vertex
    b <v> <color>               target color, exactly one per vertex
    l <v> <c1> <c2> ...         optional color list; absent means full 1..k

Sequence files:
    c <comment>
    s <v> <color>               steps in order

Vertices are 1-indexed on disk and 0-indexed in memory. Source graphs for
the generators use the common `p edge <n> <m>` header with e-lines.
"""

from typing import Sequence

from .graph import Graph, GraphError, Instance, Step


class ParseError(ValueError):
    """Malformed input file; carries the offending line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _int(token: str, what: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {token!r}", line) from None


def parse_instance(text: str) -> Instance:
    """Parse and fully validate an instance file."""
    header: tuple[int, int, int] | None = None
    edges: list[tuple[int, int]] = []
    edge_lines: dict[tuple[int, int], int] = {}
    alpha: dict[int, int] = {}
    beta: dict[int, int] = {}
    lists: dict[int, tuple[int, ...]] = {}
    roles: list[tuple[int, int, str]] = []

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        tag = parts[0]
        if tag == "c":
            if len(parts) >= 4 and parts[1] == "role":
                vertex = _int(parts[2], "role vertex", lineno)
                roles.append((lineno, vertex, " ".join(parts[3:])))
            continue
        if tag == "p":
            if header is not None:
                raise ParseError("duplicate p-line", lineno)
            if len(parts) != 5 or parts[1] != "recolor":
                raise ParseError("expected `p recolor <n> <k> <ell>`", lineno)
            n = _int(parts[2], "vertex count", lineno)
            k = _int(parts[3], "color count", lineno)
            ell = _int(parts[4], "budget", lineno)
            if n < 0 or k < 1 or ell < 0:
                raise ParseError("p-line values out of range", lineno)
            header = (n, k, ell)
            continue
        if header is None:
            raise ParseError(f"`{tag}` line before the p-line", lineno)
        n = header[0]
        if tag == "e":
            if len(parts) != 3:
                raise ParseError("expected `e <u> <v>`", lineno)
            u = _int(parts[1], "edge endpoint", lineno) - 1
            v = _int(parts[2], "edge endpoint", lineno) - 1
            if u == v:
                raise ParseError(f"self-loop at vertex {u + 1}", lineno)
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError("edge endpoint out of range", lineno)
            key = (u, v) if u < v else (v, u)
            if key in edge_lines:
                raise ParseError(
                    f"duplicate edge ({key[0] + 1}, {key[1] + 1}),"
                    f" first seen on line {edge_lines[key]}",
                    lineno,
                )
            edge_lines[key] = lineno
            edges.append(key)
        elif tag in ("a", "b"):
            if len(parts) != 3:
                raise ParseError(f"expected `{tag} <v> <color>`", lineno)
            v = _int(parts[1], "vertex", lineno) - 1
            color = _int(parts[2], "color", lineno)
            if not 0 <= v < n:
                raise ParseError(f"vertex {v + 1} out of range", lineno)
            store = alpha if tag == "a" else beta
            if v in store:
                raise ParseError(f"vertex {v + 1} already has a {tag}-line", lineno)
            store[v] = color
        elif tag == "l":
            if len(parts) < 3:
                raise ParseError("expected `l <v> <c1> ...`", lineno)
            v = _int(parts[1], "vertex", lineno) - 1
            if not 0 <= v < n:
                raise ParseError(f"vertex {v + 1} out of range", lineno)
            if v in lists:
                raise ParseError(f"vertex {v + 1} already has an l-line", lineno)
            colors = tuple(sorted({_int(p, "color", lineno) for p in parts[2:]}))
            lists[v] = colors
        else:
            raise ParseError(f"unknown line type {tag!r}", lineno)

    if header is None:
        raise ParseError("missing p-line")
    n, k, ell = header
    for v in range(n):
        if v not in alpha:
            raise ParseError(f"vertex {v + 1} has no a-line")
        if v not in beta:
            raise ParseError(f"vertex {v + 1} has no b-line")
    role_map: dict[int, str] = {}
    for lineno, vertex, tag in roles:
        if not 1 <= vertex <= n:
            raise ParseError(f"role vertex {vertex} out of range", lineno)
        role_map[vertex - 1] = tag

    full = tuple(range(1, k + 1))
    final_lists: tuple | None
    if lists:
        merged = tuple(lists.get(v, full) for v in range(n))
        final_lists = None if all(entry == full for entry in merged) else merged
    else:
        final_lists = None

    try:
        graph = Graph.from_edges(n, edges)
        instance = Instance(
            graph=graph,
            k=k,
            ell=ell,
            alpha=tuple(alpha[v] for v in range(n)),
            beta=tuple(beta[v] for v in range(n)),
            lists=final_lists,
            roles=role_map or None,
        )
        instance.validate()
    except GraphError as exc:
        raise ParseError(str(exc)) from exc
    return instance


def serialize_instance(instance: Instance, comments: Sequence[str] = ()) -> str:
    """Deterministic text form; parse_instance(serialize_instance(x)) == x."""
    out = [f"c {comment}" for comment in comments]
    n = instance.graph.n
    out.append(f"p recolor {n} {instance.k} {instance.ell}")
    for u, v in sorted(instance.graph.edges):
        out.append(f"e {u + 1} {v + 1}")
    if instance.lists is not None:
        full = tuple(range(1, instance.k + 1))
        for v in range(n):
            if instance.lists[v] != full:
                colors = " ".join(str(c) for c in instance.lists[v])
                out.append(f"l {v + 1} {colors}")
    for v in range(n):
        out.append(f"a {v + 1} {instance.alpha[v]}")
    for v in range(n):
        out.append(f"b {v + 1} {instance.beta[v]}")
    if instance.roles:
        for v in sorted(instance.roles):
            out.append(f"c role {v + 1} {instance.roles[v]}")
    return "\n".join(out) + "\n"


def parse_sequence(text: str) -> list[Step]:
    """Parse a sequence file into steps (vertices converted to 0-indexed)."""
    steps: list[Step] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "c":
            continue
        if parts[0] != "s" or len(parts) != 3:
            raise ParseError("expected `s <v> <color>`", lineno)
        v = _int(parts[1], "vertex", lineno)
        color = _int(parts[2], "color", lineno)
        if v < 1:
            raise ParseError(f"vertex {v} out of range", lineno)
        steps.append(Step(v - 1, color))
    return steps


def serialize_sequence(steps: Sequence[Step], comments: Sequence[str] = ()) -> str:
    out = [f"c {comment}" for comment in comments]
    out.extend(f"s {v + 1} {c}" for v, c in steps)
    return "\n".join(out) + "\n" if out else ""


def parse_graph(text: str) -> Graph:
    """Parse a bare graph file: `p edge <n> <m>` plus e-lines."""
    n: int | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ParseError("duplicate p-line", lineno)
            if len(parts) != 4 or parts[1] != "edge":
                raise ParseError("expected `p edge <n> <m>`", lineno)
            n = _int(parts[2], "vertex count", lineno)
            if n < 0:
                raise ParseError("vertex count out of range", lineno)
        elif parts[0] == "e":
            if n is None:
                raise ParseError("e-line before the p-line", lineno)
            if len(parts) != 3:
                raise ParseError("expected `e <u> <v>`", lineno)
            u = _int(parts[1], "edge endpoint", lineno) - 1
            v = _int(parts[2], "edge endpoint", lineno) - 1
            if u == v:
                raise ParseError(f"self-loop at vertex {u + 1}", lineno)
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError("edge endpoint out of range", lineno)
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ParseError(f"duplicate edge ({key[0] + 1}, {key[1] + 1})", lineno)
            seen.add(key)
            edges.append(key)
        else:
            raise ParseError(f"unknown line type {parts[0]!r}", lineno)
    if n is None:
        raise ParseError("missing p-line")
    return Graph.from_edges(n, edges)


def serialize_graph(graph: Graph, comments: Sequence[str] = ()) -> str:
    out = [f"c {comment}" for comment in comments]
    out.append(f"p edge {graph.n} {graph.m}")
    out.extend(f"e {u + 1} {v + 1}" for u, v in sorted(graph.edges))
    return "\n".join(out) + "\n"
