"""Simple undirected graphs on vertices 1..n: parsing, blocks, chordality.

Chordality is decided by maximum cardinality search followed by validation
of the candidate elimination ordering; both outcomes carry a checkable
certificate (a simplicial elimination ordering, or a chordless cycle of
length at least four).  All tie-breaks prefer the smallest vertex label so
outputs are reproducible.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import lru_cache


@dataclass(frozen=True)
class Graph:
    """Simple graph; vertices are the integers 1..n, edges are (i, j) with i < j."""

    n: int
    edges: frozenset

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        for e in self.edges:
            i, j = e
            if not (1 <= i < j <= self.n):
                raise ValueError(f"edge {e!r} out of range for n={self.n}")

    @staticmethod
    def from_edges(n, edges) -> "Graph":
        canon = set()
        for i, j in edges:
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            canon.add((i, j) if i < j else (j, i))
        return Graph(n, frozenset(canon))

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def has_edge(self, i, j) -> bool:
        return (min(i, j), max(i, j)) in self.edges


@dataclass(frozen=True)
class EliminationOrdering:
    """Vertex order sigma_1 .. sigma_n, each simplicial among its successors."""

    order: tuple


@dataclass(frozen=True)
class ChordlessCycleWitness:
    """Cycle of >= 4 vertices with no chord; consecutive pairs (cyclically) are edges."""

    cycle: tuple


@dataclass(frozen=True)
class DirectedCycle:
    cycle: tuple


@lru_cache(maxsize=None)
def adjacency(g: Graph) -> dict:
    adj = {v: set() for v in range(1, g.n + 1)}
    for i, j in g.edges:
        adj[i].add(j)
        adj[j].add(i)
    return adj


def is_simplicial(g: Graph, v: int) -> bool:
    """True iff the neighborhood of v induces a clique."""
    if not 1 <= v <= g.n:
        raise ValueError(f"vertex {v} out of range 1..{g.n}")
    nbrs = sorted(adjacency(g)[v])
    return all(g.has_edge(x, y) for x, y in itertools.combinations(nbrs, 2))


def connected_components(g: Graph) -> list:
    adj = adjacency(g)
    seen = set()
    comps = []
    for s in range(1, g.n + 1):
        if s in seen:
            continue
        comp = {s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in comp:
                    comp.add(w)
                    queue.append(w)
        seen |= comp
        comps.append(comp)
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def blocks(g: Graph) -> list:
    """Biconnected blocks of g, each returned as a Graph on the same vertex range.

    Blocks partition the edge set; two blocks share at most one vertex.
    Isolated vertices belong to no block.  Result is sorted by smallest edge.
    """
    adj = adjacency(g)
    disc = {}
    low = {}
    edge_stack = []
    found = []
    counter = itertools.count(1)

    def dfs(root):
        # iterative DFS so deep graphs cannot hit the recursion limit
        stack = [(root, None, iter(sorted(adj[root])))]
        disc[root] = low[root] = next(counter)
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    parent = None  # skip the tree edge to the parent exactly once
                    continue
                if w not in disc:
                    edge_stack.append((u, w))
                    disc[w] = low[w] = next(counter)
                    stack[-1] = (u, parent, it)
                    stack.append((w, u, iter(sorted(adj[w]))))
                    advanced = True
                    break
                if disc[w] < disc[u]:
                    edge_stack.append((u, w))
                    low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[u])
                if low[u] >= disc[p]:
                    comp = []
                    while edge_stack and edge_stack[-1] != (p, u):
                        comp.append(edge_stack.pop())
                    comp.append(edge_stack.pop())
                    found.append(comp)

    for s in range(1, g.n + 1):
        if s not in disc and adj[s]:
            dfs(s)

    out = [Graph.from_edges(g.n, comp) for comp in found]
    out.sort(key=lambda b: min(b.edges))
    return out


def mcs_order(g: Graph) -> list:
    """Maximum cardinality search visit order; ties pick the smallest label."""
    adj = adjacency(g)
    weight = {v: 0 for v in range(1, g.n + 1)}
    remaining = set(weight)
    visit = []
    while remaining:
        v = min(remaining, key=lambda u: (-weight[u], u))
        visit.append(v)
        remaining.remove(v)
        for w in adj[v]:
            if w in remaining:
                weight[w] += 1
    return visit


def is_elimination_ordering(g: Graph, order) -> bool:
    """Check that each vertex is simplicial among the vertices after it."""
    order = list(order)
    if sorted(order) != list(range(1, g.n + 1)):
        return False
    adj = adjacency(g)
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [w for w in adj[v] if pos[w] > pos[v]]
        for x, y in itertools.combinations(sorted(later), 2):
            if not g.has_edge(x, y):
                return False
    return True


def _shortest_path(adj, src, dst, banned):
    prev = {src: None}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        if u == dst:
            path = []
            while u is not None:
                path.append(u)
                u = prev[u]
            return path[::-1]
        for w in sorted(adj[u]):
            if w not in prev and w not in banned:
                prev[w] = u
                queue.append(w)
    return None


def find_chordless_cycle(g: Graph):
    """Some chordless cycle of length >= 4, or None if the graph is chordal.

    For every vertex v and non-adjacent pair x, y of its neighbors, a shortest
    x-y path avoiding the rest of N[v] closes into a chordless cycle through v.
    """
    adj = adjacency(g)
    for v in range(1, g.n + 1):
        nbrs = sorted(adj[v])
        for x, y in itertools.combinations(nbrs, 2):
            if g.has_edge(x, y):
                continue
            banned = ({v} | adj[v]) - {x, y}
            path = _shortest_path(adj, x, y, banned)
            if path is not None:
                return ChordlessCycleWitness(_canonical_cycle((v,) + tuple(path)))
    return None


def _canonical_cycle(cycle):
    k = len(cycle)
    i = cycle.index(min(cycle))
    rot = cycle[i:] + cycle[:i]
    if rot[1] > rot[-1]:
        rot = (rot[0],) + tuple(reversed(rot[1:]))
    return tuple(rot)


def is_chordless_cycle(g: Graph, cycle) -> bool:
    cycle = tuple(cycle)
    k = len(cycle)
    if k < 4 or len(set(cycle)) != k:
        return False
    for t in range(k):
        if not g.has_edge(cycle[t], cycle[(t + 1) % k]):
            return False
    for s, t in itertools.combinations(range(k), 2):
        if (t - s) % k in (1, k - 1):
            continue
        if g.has_edge(cycle[s], cycle[t]):
            return False
    return True


def chordality(g: Graph):
    """EliminationOrdering if g is chordal, otherwise a ChordlessCycleWitness."""
    candidate = tuple(reversed(mcs_order(g)))
    if is_elimination_ordering(g, candidate):
        return EliminationOrdering(candidate)
    witness = find_chordless_cycle(g)
    if witness is None:  # MCS validation failed, so a chordless cycle must exist
        raise AssertionError("MCS ordering rejected but no chordless cycle found")
    return witness


def topological_order(n, arcs):
    """Kahn's algorithm with smallest-label ties; DirectedCycle on failure.

    `arcs` is an iterable of (u, v) pairs meaning u -> v on vertices 1..n.
    """
    succ = {v: set() for v in range(1, n + 1)}
    indeg = {v: 0 for v in range(1, n + 1)}
    for u, v in arcs:
        if v not in succ[u]:
            succ[u].add(v)
            indeg[v] += 1
    ready = sorted(v for v in indeg if indeg[v] == 0)
    order = []
    while ready:
        u = ready.pop(0)
        order.append(u)
        opened = []
        for w in succ[u]:
            indeg[w] -= 1
            if indeg[w] == 0:
                opened.append(w)
        if opened:
            ready = sorted(ready + opened)
    if len(order) == n:
        return tuple(order)
    # remaining vertices all lie on or lead into a directed cycle; walk until repeat
    remaining = {v for v in indeg if indeg[v] > 0}
    u = min(remaining)
    seen = {}
    walk = []
    while u not in seen:
        seen[u] = len(walk)
        walk.append(u)
        u = min(w for w in succ[u] if w in remaining)
    return DirectedCycle(tuple(walk[seen[u]:]))


@lru_cache(maxsize=None)
def simple_cycles(g: Graph) -> tuple:
    """All simple cycles as vertex tuples (min vertex first, second < last)."""
    adj = adjacency(g)
    out = []

    def extend(path, on_path):
        s = path[0]
        last = path[-1]
        for w in sorted(adj[last]):
            if w == s and len(path) >= 3:
                if path[1] < path[-1]:
                    out.append(tuple(path))
            elif w > s and w not in on_path:
                path.append(w)
                on_path.add(w)
                extend(path, on_path)
                on_path.remove(w)
                path.pop()

    for s in range(1, g.n + 1):
        extend([s], {s})
    return tuple(sorted(out, key=lambda c: (len(c), c)))


# ---------------------------------------------------------------------------
# parsing


def parse_edge_list(text: str) -> Graph:
    """Edge-list text, one 1-based "u v" pair per line; n is the largest label."""
    edges = []
    top = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer vertex in {raw!r}") from None
        if u < 1 or v < 1:
            raise ValueError(f"line {lineno}: vertices must be >= 1")
        if u == v:
            raise ValueError(f"line {lineno}: self-loop at vertex {u}")
        e = (min(u, v), max(u, v))
        if e in edges:
            raise ValueError(f"line {lineno}: duplicate edge {u} {v}")
        edges.append(e)
        top = max(top, v, u)
    if top == 0:
        raise ValueError("no edges found in edge-list input")
    return Graph.from_edges(top, edges)


def parse_graph6(line: str) -> Graph:
    """Standard graph6 encoding (n <= 62 or the 3-byte extension), shifted to 1-based."""
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ValueError("empty graph6 string")
    data = []
    for c in s:
        v = ord(c) - 63
        if not 0 <= v <= 63:
            raise ValueError(f"invalid graph6 character {c!r}")
        data.append(v)
    if data[0] == 63:
        if len(data) < 4:
            raise ValueError("truncated graph6 size field")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise ValueError(f"graph6 body has {len(body)} groups, expected {need}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            bit = (body[k // 6] >> (5 - k % 6)) & 1
            if bit:
                edges.append((i + 1, j + 1))
            k += 1
    return Graph.from_edges(n, edges)


def to_graph6(g: Graph) -> str:
    if g.n > 62:
        raise ValueError("graph6 output supported only for n <= 62")
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if (i + 1, j + 1) in g.edges else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def parse_graph(text: str, fmt: str = "auto") -> Graph:
    """Dispatch between edge-list and graph6 input.

    Auto-detection: a first non-blank line starting with a digit pair is an
    edge list, anything else is graph6.
    """
    if fmt not in ("auto", "edgelist", "graph6"):
        raise ValueError(f"unknown input format {fmt!r}")
    if fmt == "edgelist":
        return parse_edge_list(text)
    if fmt == "graph6":
        return parse_graph6(text)
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) == 2 and all(f.isdigit() for f in fields):
            return parse_edge_list(text)
        return parse_graph6(line)
    raise ValueError("empty graph input")
