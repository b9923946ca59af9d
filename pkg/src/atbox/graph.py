"""Simple undirected graphs on vertices 0..n-1, codecs and elementary metrics."""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator

UNREACHABLE = -1


class GraphError(ValueError):
    """Raised for malformed graph input."""


class Graph:
    """Immutable simple undirected graph.

    Adjacency is kept both as neighbor sets and as integer bitmasks; the
    bitmasks make the exponential oracles and the clique tests cheap.
    """

    __slots__ = ("n", "edges", "adj", "masks")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        norm = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) has endpoint outside 0..{n - 1}")
            norm.add((u, v) if u < v else (v, u))
        adj: list[set[int]] = [set() for _ in range(n)]
        masks = [0] * n
        for u, v in norm:
            adj[u].add(v)
            adj[v].add(u)
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self.n = n
        self.edges = frozenset(norm)
        self.adj = tuple(frozenset(a) for a in adj)
        self.masks = tuple(masks)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (self.masks[u] >> v) & 1 == 1

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def non_edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if not self.has_edge(u, v):
                    yield (u, v)

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled to 0..k-1, plus the old labels."""
        labels = sorted(set(vertices))
        index = {v: i for i, v in enumerate(labels)}
        sub = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Graph(len(labels), sub), labels

    def add_edges(self, extra: Iterable[tuple[int, int]]) -> "Graph":
        return Graph(self.n, list(self.edges) + list(extra))

    def remove_edges(self, gone: Iterable[tuple[int, int]]) -> "Graph":
        drop = {(u, v) if u < v else (v, u) for u, v in gone}
        return Graph(self.n, self.edges - drop)

    def complement(self) -> "Graph":
        return Graph(self.n, self.non_edges())

    def is_subgraph_of(self, other: "Graph") -> bool:
        return self.n == other.n and self.edges <= other.edges

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ---------------------------------------------------------------------------
# Edge-list text format
# ---------------------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"`` (0-based).

    Blank lines are skipped. Errors name the 1-based line number.
    """
    lines = [(no, line.strip()) for no, line in enumerate(text.splitlines(), start=1)]
    lines = [(no, line) for no, line in lines if line]
    if not lines:
        raise GraphError("line 1: empty input, expected header 'n m'")
    no, header = lines[0]
    n, m = _two_ints(header, no)
    if n < 0 or m < 0:
        raise GraphError(f"line {no}: negative count in header")
    body = lines[1:]
    if len(body) != m:
        raise GraphError(f"line {no}: header declares {m} edges, found {len(body)}")
    edges = []
    for no, line in body:
        u, v = _two_ints(line, no)
        if u == v:
            raise GraphError(f"line {no}: self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"line {no}: endpoint out of range 0..{n - 1}")
        edges.append((u, v))
    return Graph(n, edges)


def _two_ints(line: str, no: int) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise GraphError(f"line {no}: expected two integers, got {line!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphError(f"line {no}: expected two integers, got {line!r}") from None


def to_edge_list(G: Graph) -> str:
    rows = [f"{G.n} {G.m}"] + [f"{u} {v}" for u, v in G.sorted_edges()]
    return "\n".join(rows) + "\n"


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def to_graph6(G: Graph) -> str:
    """Encode ``G`` in graph6 (upper triangle, column order)."""
    n = G.n
    if n <= 62:
        out = [chr(n + 63)]
    elif n <= 258047:
        out = [chr(126)] + [chr(((n >> s) & 63) + 63) for s in (12, 6, 0)]
    else:
        raise GraphError(f"graph6 supports at most 258047 vertices, got {n}")
    bits = [1 if G.has_edge(i, j) else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k : k + 6]:
            value = (value << 1) | b
        out.append(chr(value + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER) :]
    if not s:
        raise GraphError("empty graph6 string")
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphError(f"invalid graph6 byte {ord(ch)} at position {pos}")
    data = [ord(ch) - 63 for ch in s]
    if data[0] < 63:
        n, rest = data[0], data[1:]
    else:
        if len(data) < 4 or data[1] == 63:
            raise GraphError("unsupported or truncated graph6 size field")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        rest = data[4:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(rest) < need:
        raise GraphError(f"truncated graph6 bit stream: need {need} bytes, got {len(rest)}")
    if len(rest) > need:
        raise GraphError(f"trailing data in graph6 string: expected {need} bytes, got {len(rest)}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (rest[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# Metrics
# ---------------------------------------------------------------------------


def bfs_layers(G: Graph, source: int) -> list[int]:
    """Unweighted distances from ``source``; ``UNREACHABLE`` (-1) otherwise."""
    if not 0 <= source < G.n:
        raise GraphError(f"source {source} outside 0..{G.n - 1}")
    dist = [UNREACHABLE] * G.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in G.adj[u]:
            if dist[w] == UNREACHABLE:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def shortest_path(G: Graph, x: int, y: int) -> list[int] | None:
    """BFS path from x to y; ties broken towards smaller vertex ids."""
    parent = {x: x}
    queue = deque([x])
    while queue:
        u = queue.popleft()
        if u == y:
            break
        for w in sorted(G.adj[u]):
            if w not in parent:
                parent[w] = u
                queue.append(w)
    if y not in parent:
        return None
    path = [y]
    while path[-1] != x:
        path.append(parent[path[-1]])
    return path[::-1]


def all_pairs_distances(G: Graph) -> list[list[int]]:
    return [bfs_layers(G, v) for v in range(G.n)]


def diameter(G: Graph) -> int:
    """Diameter of a connected graph (0 for a single vertex)."""
    best = 0
    for row in all_pairs_distances(G):
        if UNREACHABLE in row:
            raise GraphError("diameter is undefined for a disconnected graph")
        best = max(best, max(row, default=0))
    return best


def girth(G: Graph) -> int | None:
    """Length of a shortest cycle, or ``None`` when ``G`` is acyclic."""
    best = None
    for s in range(G.n):
        dist = [UNREACHABLE] * G.n
        parent = [-1] * G.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] + 1 >= best:
                break
            for w in G.adj[u]:
                if dist[w] == UNREACHABLE:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    cycle = dist[u] + dist[w] + 1
                    if best is None or cycle < best:
                        best = cycle
    return best


def connected_components(G: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by minimum vertex."""
    seen = [False] * G.n
    blocks = []
    for s in range(G.n):
        if seen[s]:
            continue
        seen[s] = True
        block = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in G.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    block.append(w)
                    stack.append(w)
        blocks.append(sorted(block))
    return blocks


def is_connected(G: Graph) -> bool:
    return G.n <= 1 or len(connected_components(G)) == 1


def components_avoiding(G: Graph, removed_mask: int) -> list[int]:
    """Component label per vertex of ``G`` minus ``removed_mask``; -1 for removed."""
    label = [-1] * G.n
    current = 0
    for s in range(G.n):
        if label[s] != -1 or (removed_mask >> s) & 1:
            continue
        label[s] = current
        stack = [s]
        while stack:
            u = stack.pop()
            for w in G.adj[u]:
                if label[w] == -1 and not (removed_mask >> w) & 1:
                    label[w] = current
                    stack.append(w)
        current += 1
    return label


# ---------------------------------------------------------------------------
# Named small graphs
# ---------------------------------------------------------------------------


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle length must be at least 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star_graph(k: int) -> Graph:
    """S(k) = K_{1,k}; the center is vertex 0."""
    return Graph(k + 1, [(0, i) for i in range(1, k + 1)])


def complete_multipartite(sizes: list[int]) -> Graph:
    part = []
    for p, size in enumerate(sizes):
        part += [p] * size
    n = len(part)
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if part[u] != part[v]])


def matching_complement(n: int) -> Graph:
    """Complement of the perfect matching {(0,1), (2,3), ...}."""
    if n % 2:
        raise GraphError(f"matching complement needs an even vertex count, got {n}")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if u // 2 != v // 2])


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for H in graphs:
        edges += [(u + offset, v + offset) for u, v in H.edges]
        offset += H.n
    return Graph(offset, edges)
