"""Simple undirected graphs on vertices ``0..n-1`` stored as adjacency bitmasks.

Also hosts the graph6 codec, induced subgraphs, small graph generation and
the literal construction of multiple coalescences used as an oracle.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Graph",
    "RootedGraph",
    "Graph6Error",
    "graph6_decode",
    "graph6_encode",
    "delete_vertices",
    "path_graph",
    "cycle_graph",
    "complete_graph",
    "star_graph",
    "disjoint_union",
    "build_coalescence",
    "canonical_form",
    "automorphisms",
    "small_graphs",
    "small_connected_graphs",
]

MAX_GRAPH6_N = 62


class Graph6Error(ValueError):
    """Malformed graph6 input. ``position`` is the offending character index."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph; ``rows[i]`` is the neighbour bitmask of ``i``."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise ValueError("need one adjacency row per vertex")
        for i, row in enumerate(self.rows):
            if row >> self.n:
                raise ValueError(f"row {i} references a vertex >= n")
            if row >> i & 1:
                raise ValueError(f"loop at vertex {i}")
            for j in _bits(row):
                if not self.rows[j] >> i & 1:
                    raise ValueError(f"asymmetric adjacency between {i} and {j}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise IndexError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in _bits(self.rows[i] >> (i + 1) << (i + 1))]

    @property
    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= self.rows[v]
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << self.n) - 1

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph in which old vertex ``v`` becomes ``perm[v]``."""
        rows = [0] * self.n
        for v in range(self.n):
            pv = perm[v]
            for u in _bits(self.rows[v]):
                rows[pv] |= 1 << perm[u]
        return Graph(self.n, tuple(rows))

    def to_graph6(self) -> str:
        return graph6_encode(self)

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class RootedGraph:
    graph: Graph
    root: int

    def __post_init__(self):
        if not 0 <= self.root < self.graph.n:
            raise ValueError(f"root {self.root} out of range for n={self.graph.n}")


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ---------------------------------------------------------------- graph6

def graph6_decode(text: str) -> Graph:
    """Decode a short-form graph6 string (n <= 62)."""
    s = text.strip()
    if not s:
        raise Graph6Error("empty graph6 string", 0)
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside graph6 range 63..126", pos)
    n = ord(s[0]) - 63
    if n > MAX_GRAPH6_N:
        raise Graph6Error("long-form length header (n > 62) is not supported", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(s) != 1 + nbytes:
        raise Graph6Error(f"expected {1 + nbytes} characters for n={n}, got {len(s)}", min(len(s), 1 + nbytes))
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(s[1 + k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if nbits % 6:
        pad = 6 - nbits % 6
        if (ord(s[-1]) - 63) & ((1 << pad) - 1):
            raise Graph6Error("nonzero padding bits", len(s) - 1)
    return Graph(n, tuple(rows))


def graph6_encode(g: Graph) -> str:
    """Encode ``g`` without relabelling; columns of the upper triangle in order."""
    if g.n > MAX_GRAPH6_N:
        raise ValueError(f"graph6 short form supports n <= {MAX_GRAPH6_N}, got {g.n}")
    bits = [g.rows[i] >> j & 1 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


# ---------------------------------------------------------------- constructions

def delete_vertices(g: Graph, s: Iterable[int]) -> Graph:
    """Induced subgraph on the complement of ``s``, order-preserving relabel."""
    dead = 0
    for v in s:
        if not 0 <= v < g.n:
            raise IndexError(f"vertex {v} out of range for n={g.n}")
        dead |= 1 << v
    keep = [v for v in range(g.n) if not dead >> v & 1]
    return induced_subgraph(g, keep)


def induced_subgraph(g: Graph, keep: Sequence[int]) -> Graph:
    index = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        row = 0
        for u in _bits(g.rows[v]):
            if u in index:
                row |= 1 << index[u]
        rows.append(row)
    return Graph(len(keep), tuple(rows))


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("a path needs at least one vertex")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least three vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the centre at vertex 0."""
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shifted = tuple(r << g.n for r in h.rows)
    return Graph(g.n + h.n, g.rows + shifted)


def build_coalescence(t: Graph, u: Sequence[int], sig: Sequence[int], g: RootedGraph) -> Graph:
    """Attach ``sig[i]`` copies of ``g`` at ``u[i]``, identifying each root with ``u[i]``.

    Vertices of ``t`` keep their labels; the non-root vertices of the copies
    follow in attachment order.
    """
    if len(u) != len(sig):
        raise ValueError(f"{len(u)} vertices but signature of length {len(sig)}")
    if len(set(u)) != len(u):
        raise ValueError(f"attachment vertices must be distinct: {tuple(u)}")
    for v in u:
        if not 0 <= v < t.n:
            raise IndexError(f"vertex {v} out of range for n={t.n}")
    if any(a < 1 for a in sig):
        raise ValueError(f"signature entries must be positive: {tuple(sig)}")
    others = [v for v in range(g.graph.n) if v != g.root]
    size = t.n + sum(sig) * len(others)
    edges = t.edges()
    nxt = t.n
    for ui, a in zip(u, sig):
        for _ in range(a):
            label = {g.root: ui}
            for v in others:
                label[v] = nxt
                nxt += 1
            edges.extend((label[p], label[q]) for p, q in g.graph.edges())
    return Graph.from_edges(size, edges)


# ---------------------------------------------------------------- small graphs

def _refined_cells(g: Graph) -> list[list[int]]:
    """Equitable-ish partition from iterated degree refinement, cells in invariant order."""
    colors = [g.degree(v) for v in range(g.n)]
    while True:
        keys = [(colors[v], tuple(sorted(colors[u] for u in _bits(g.rows[v])))) for v in range(g.n)]
        ranking = {k: i for i, k in enumerate(sorted(set(keys)))}
        new = [ranking[k] for k in keys]
        if len(set(new)) == len(set(colors)):
            colors = new
            break
        colors = new
    cells: dict[int, list[int]] = {}
    for v in range(g.n):
        cells.setdefault(colors[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def _upper_code(g: Graph, order: Sequence[int]) -> int:
    code = 0
    for j in range(1, len(order)):
        row = g.rows[order[j]]
        for i in range(j):
            code = code << 1 | (row >> order[i] & 1)
    return code


def canonical_form(g: Graph) -> Graph:
    """Canonical relabelling by exhaustive search inside refined degree cells.

    Cost is the product of the factorials of the cell sizes, fine for n <= 8.
    """
    cells = _refined_cells(g)
    best_code = -1
    best_order: tuple[int, ...] = ()
    for choice in itertools.product(*(itertools.permutations(c) for c in cells)):
        order = tuple(v for part in choice for v in part)
        code = _upper_code(g, order)
        if code > best_code:
            best_code, best_order = code, order
    perm = [0] * g.n
    for new, old in enumerate(best_order):
        perm[old] = new
    return g.relabel(perm)


def automorphisms(g: Graph) -> list[tuple[int, ...]]:
    """All automorphisms as vertex maps ``v -> perm[v]`` (backtracking with cell pruning)."""
    cells = _refined_cells(g)
    color = [0] * g.n
    for c, cell in enumerate(cells):
        for v in cell:
            color[v] = c
    found: list[tuple[int, ...]] = []
    image = [-1] * g.n
    used = [False] * g.n

    def extend(v: int):
        if v == g.n:
            found.append(tuple(image))
            return
        for w in cells[color[v]]:
            if used[w]:
                continue
            ok = all(g.has_edge(v, x) == g.has_edge(w, image[x]) for x in range(v))
            if ok:
                image[v], used[w] = w, True
                extend(v + 1)
                image[v], used[w] = -1, False

    extend(0)
    return found


def small_graphs(n: int) -> list[Graph]:
    """One canonical representative per isomorphism class of graphs on ``n`` vertices."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > 7:
        raise ValueError("small graph generation is limited to n <= 7; ingest larger sets as graph6")
    reps = {canonical_form(Graph.empty(0))}
    for m in range(1, n + 1):
        nxt = set()
        for h in reps:
            for mask in range(1 << (m - 1)):
                rows = list(h.rows) + [mask]
                for j in _bits(mask):
                    rows[j] |= 1 << (m - 1)
                nxt.add(canonical_form(Graph(m, tuple(rows))))
        reps = nxt
    return sorted(reps, key=lambda h: (h.num_edges, graph6_encode(h)))


def small_connected_graphs(n: int) -> Iterator[Graph]:
    """Connected graphs on ``n`` vertices, one per isomorphism class (1 <= n <= 7)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    for h in small_graphs(n):
        if h.is_connected():
            yield h
