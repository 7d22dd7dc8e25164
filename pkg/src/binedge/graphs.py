"""Simple graphs on vertices 1..n with their text formats.

Also holds every purely graph-theoretic predicate and construction the
algebra modules rely on.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Optional

import numpy as np

from .errors import GraphParseError, PreconditionError

Edge = tuple[int, int]


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on the vertices 1..n.

    Edges are stored as sorted pairs ``(i, j)`` with ``i < j``.
    """

    n: int
    edges: frozenset

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = ()):
        if n < 0:
            raise PreconditionError(f"vertex count must be non-negative, got {n}")
        normed = set()
        for e in edges:
            u, v = e
            if u == v:
                raise PreconditionError(f"loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise PreconditionError(f"edge {{{u},{v}}} has endpoint outside 1..{n}")
            normed.add(_norm_edge(u, v))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(normed))

    def __repr__(self):
        return f"Graph({self.n}, {self.sorted_edges()})"

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adj(self) -> dict[int, frozenset]:
        nbrs: dict[int, set] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return {v: frozenset(s) for v, s in nbrs.items()}

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def relabel(self, perm) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v - 1]``."""
        return Graph(self.n, ((perm[u - 1], perm[v - 1]) for u, v in self.edges))

    def add_edge(self, u: int, v: int) -> "Graph":
        if self.has_edge(u, v):
            raise PreconditionError(f"edge {{{u},{v}}} already present")
        return Graph(self.n, self.edges | {_norm_edge(u, v)})

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by minimum vertex."""
        seen = set()
        comps = []
        for s in self.vertices:
            if s in seen:
                continue
            comp = [s]
            seen.add(s)
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.adj[u]:
                    if w not in seen:
                        seen.add(w)
                        comp.append(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def induced(self, vertices) -> tuple["Graph", list[int]]:
        """Induced subgraph, relabeled 1..k in ascending order of ``vertices``.

        Returns the subgraph and the list mapping new labels to old ones.
        """
        old = sorted(vertices)
        new = {v: k + 1 for k, v in enumerate(old)}
        sub = Graph(len(old), ((new[u], new[v]) for u, v in self.edges if u in new and v in new))
        return sub, old


# ---------------------------------------------------------------- text formats


def format_edge_list(g: Graph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    n = None
    seen: dict[Edge, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1 or not fields[0].isdigit():
                raise GraphParseError(f"expected vertex count, got {line!r}", line=lineno)
            n = int(fields[0])
            if n < 1:
                raise GraphParseError("vertex count must be positive", line=lineno)
            continue
        if len(fields) != 2 or not all(f.lstrip("-").isdigit() for f in fields):
            raise GraphParseError(f"expected 'i j', got {line!r}", line=lineno)
        u, v = int(fields[0]), int(fields[1])
        if u == v:
            raise GraphParseError(f"loop edge at vertex {u}", line=lineno)
        for w in (u, v):
            if not 1 <= w <= n:
                raise GraphParseError(f"endpoint {w} outside 1..{n}", line=lineno)
        e = _norm_edge(u, v)
        if e in seen:
            raise GraphParseError(
                f"duplicate edge {{{e[0]},{e[1]}}} (first on line {seen[e]})", line=lineno
            )
        seen[e] = lineno
    if n is None:
        raise GraphParseError("empty input: missing vertex count", line=1)
    return Graph(n, seen)


def _g6_size_bytes(n: int) -> list[int]:
    if n < 63:
        return [n]
    if n < 258048:
        return [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    return [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]


def format_graph6(g: Graph) -> str:
    bits = [
        1 if g.has_edge(i, j) else 0
        for j in range(2, g.n + 1)
        for i in range(1, j)
    ]
    bits.extend([0] * (-len(bits) % 6))
    data = _g6_size_bytes(g.n)
    for k in range(0, len(bits), 6):
        chunk = 0
        for b in bits[k:k + 6]:
            chunk = (chunk << 1) | b
        data.append(chunk)
    return "".join(chr(63 + x) for x in data)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphParseError("empty graph6 string", offset=0)
    for k, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphParseError(f"byte {ch!r} outside graph6 range 63..126", offset=k)
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] != 63:
        if len(vals) < 4:
            raise GraphParseError("truncated graph6 size header", offset=0)
        n, pos = (vals[1] << 12) | (vals[2] << 6) | vals[3], 4
    else:
        if len(vals) < 8:
            raise GraphParseError("truncated graph6 size header", offset=0)
        n = 0
        for x in vals[2:8]:
            n = (n << 6) | x
        pos = 8
    if n < 1:
        raise GraphParseError("vertex count must be positive", offset=0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = vals[pos:]
    if len(body) != need:
        raise GraphParseError(
            f"expected {need} data bytes for n={n}, found {len(body)}", offset=pos
        )
    edges = []
    k = 0
    for j in range(2, n + 1):
        for i in range(1, j):
            byte = body[k // 6]
            if (byte >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def parse_graph(text: str) -> Graph:
    """Parse an edge list or a graph6 string.

    The format is detected from the first significant byte: a digit starts an
    edge list, a byte in 63..126 starts graph6.
    """
    stripped = "\n".join(line.split("#", 1)[0] for line in text.splitlines()).strip()
    if not stripped:
        raise GraphParseError("empty input", line=1)
    first = stripped[0]
    if first.isdigit():
        return parse_edge_list(text)
    if stripped.startswith(">>graph6<<") or 63 <= ord(first) <= 126:
        return parse_graph6(stripped.splitlines()[0])
    raise GraphParseError(f"unrecognised leading byte {first!r}", offset=0)


# ------------------------------------------------------------------ chordality


def maximum_cardinality_search(g: Graph) -> list[int]:
    """Visit order of maximum cardinality search (ties to the smallest label)."""
    weight = {v: 0 for v in g.vertices}
    order = []
    while weight:
        v = max(weight, key=lambda u: (weight[u], -u))
        del weight[v]
        order.append(v)
        for w in g.adj[v]:
            if w in weight:
                weight[w] += 1
    return order


def is_perfect_elimination_ordering(g: Graph, order) -> bool:
    """Check that every vertex's later neighbours in ``order`` form a clique."""
    if sorted(order) != list(g.vertices):
        return False
    pos = {v: k for k, v in enumerate(order)}
    for v in order:
        later = [w for w in g.adj[v] if pos[w] > pos[v]]
        if not later:
            continue
        u = min(later, key=pos.__getitem__)
        for w in later:
            if w != u and not g.has_edge(u, w):
                return False
    return True


def perfect_elimination_ordering(g: Graph) -> Optional[list[int]]:
    """A perfect elimination ordering of ``g``, or None if ``g`` is not chordal."""
    order = maximum_cardinality_search(g)[::-1]
    return order if is_perfect_elimination_ordering(g, order) else None


def is_chordal(g: Graph) -> bool:
    return perfect_elimination_ordering(g) is not None


def find_induced_long_cycle(g: Graph) -> Optional[list[int]]:
    """An induced cycle of length at least 4, as a vertex sequence, or None.

    For every vertex ``v`` and non-adjacent neighbours ``a, b`` we look for a
    shortest ``a``-``b`` path avoiding the rest of the closed neighbourhood of
    ``v``; such a path closes an induced cycle through ``v``.
    """
    for v in g.vertices:
        nbrs = sorted(g.adj[v])
        for a, b in itertools.combinations(nbrs, 2):
            if g.has_edge(a, b):
                continue
            blocked = (g.adj[v] | {v}) - {a, b}
            prev = {a: None}
            queue = deque([a])
            while queue and b not in prev:
                u = queue.popleft()
                for w in sorted(g.adj[u]):
                    if w not in prev and w not in blocked:
                        prev[w] = u
                        queue.append(w)
            if b in prev:
                path = [b]
                while prev[path[-1]] is not None:
                    path.append(prev[path[-1]])
                return [v] + path[::-1]
    return None


# ---------------------------------------------------------- claws, distances


def find_claw(g: Graph) -> Optional[tuple[int, int, int, int]]:
    """Return ``(center, a, b, c)`` with ``a, b, c`` pairwise non-adjacent
    neighbours of ``center``, or None if ``g`` is claw-free."""
    for v in g.vertices:
        for a, b, c in itertools.combinations(sorted(g.adj[v]), 3):
            if not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)):
                return (v, a, b, c)
    return None


def independence_triangle(g: Graph) -> Optional[tuple[int, int, int]]:
    """Three pairwise non-adjacent vertices (a triangle of Ind(g)), or None."""
    for a, b, c in itertools.combinations(g.vertices, 3):
        if not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)):
            return (a, b, c)
    return None


def _bfs(g: Graph, s: int) -> dict[int, float]:
    dist: dict[int, float] = {s: 0}
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distances(g: Graph) -> dict[int, dict[int, float]]:
    """All-pairs shortest path lengths; unreachable pairs get ``math.inf``."""
    table = {}
    for s in g.vertices:
        reach = _bfs(g, s)
        table[s] = {t: reach.get(t, math.inf) for t in g.vertices}
    return table


def diameter(g: Graph) -> float:
    """Largest finite distance between two vertices (0 for an edgeless graph)."""
    dist = distances(g)
    return max((d for row in dist.values() for d in row.values() if d != math.inf), default=0)


def geodesics(g: Graph, a: int, b: int, dist=None) -> Iterator[list[int]]:
    """Yield every shortest path from ``a`` to ``b``."""
    dist = distances(g) if dist is None else dist
    target = dist[a][b]
    if target == math.inf:
        return

    def walk(path):
        u = path[-1]
        if u == b:
            yield list(path)
            return
        for w in sorted(g.adj[u]):
            if dist[a][w] == len(path) and dist[w][b] == target - len(path):
                path.append(w)
                yield from walk(path)
                path.pop()

    yield from walk([a])


NARROW_READINGS = ("some", "every")


def non_narrow_witness(g: Graph, reading: str = "some") -> Optional[tuple[int, list[int]]]:
    """Evidence that ``g`` is not narrow, or None.

    A diametral geodesic is a shortest path whose length equals the diameter
    of its component. With ``reading="some"`` each diametral pair must be
    joined by at least one geodesic that every vertex of the component is
    within distance one of; with ``reading="every"`` all diametral geodesics
    must have that property. The witness is a vertex at distance >= 2 from a
    diametral geodesic (for "some": from the first geodesic of a failing pair).
    """
    if reading not in NARROW_READINGS:
        raise ValueError(f"reading must be one of {NARROW_READINGS}, got {reading!r}")
    dist = distances(g)
    for comp in g.components():
        diam = max(dist[u][v] for u in comp for v in comp)
        for a, b in itertools.combinations(comp, 2):
            if dist[a][b] != diam:
                continue
            first = None
            for path in geodesics(g, a, b, dist):
                far = next((v for v in comp if min(dist[v][p] for p in path) > 1), None)
                if far is None:
                    if reading == "some":
                        first = None
                        break
                    continue
                if reading == "every":
                    return far, path
                if first is None:
                    first = (far, path)
            if first is not None:
                return first
    return None


def is_narrow(g: Graph, reading: str = "some") -> bool:
    """Every vertex is within distance one of the diametral geodesics of its
    component (see :func:`non_narrow_witness` for the two readings)."""
    return non_narrow_witness(g, reading) is None


# ------------------------------------------------------------ clique complex


def clique_facets(g: Graph) -> list[tuple[int, ...]]:
    """Maximal cliques (pivoted Bron-Kerbosch), each sorted, in lex order."""
    out = []

    def expand(r, p, x):
        if not p and not x:
            out.append(tuple(sorted(r)))
            return
        pivot = max(p | x, key=lambda u: (len(g.adj[u] & p), -u))
        for v in sorted(p - g.adj[pivot]):
            expand(r | {v}, p & g.adj[v], x & g.adj[v])
            p = p - {v}
            x = x | {v}

    expand(frozenset(), frozenset(g.vertices), frozenset())
    return sorted(out)


def free_vertices(g: Graph) -> set[int]:
    """Vertices lying in exactly one maximal clique."""
    count = {v: 0 for v in g.vertices}
    for facet in clique_facets(g):
        for v in facet:
            count[v] += 1
    return {v for v, c in count.items() if c == 1}


# -------------------------------------------------------------- constructions


def cone(g: Graph) -> Graph:
    """Adjoin the apex ``n + 1`` adjacent to every vertex of ``g``."""
    apex = g.n + 1
    return Graph(apex, list(g.edges) + [(v, apex) for v in g.vertices])


def glue_at_free_vertices(g1: Graph, v: int, g2: Graph, w: int) -> Graph:
    """Identify the free vertex ``v`` of ``g1`` with the free vertex ``w`` of
    ``g2``.

    ``g1`` keeps its labels; the other vertices of ``g2`` are renumbered
    ``n1 + 1, n1 + 2, ...`` in ascending order.
    """
    if v not in free_vertices(g1):
        raise PreconditionError(f"vertex {v} is not free in the first graph")
    if w not in free_vertices(g2):
        raise PreconditionError(f"vertex {w} is not free in the second graph")
    rename = {}
    nxt = g1.n + 1
    for u in g2.vertices:
        if u == w:
            rename[u] = v
        else:
            rename[u] = nxt
            nxt += 1
    edges = list(g1.edges) + [(rename[a], rename[b]) for a, b in g2.edges]
    return Graph(g1.n + g2.n - 1, edges)


# -------------------------------------------------------- small-graph sweeps


def _pairs(n: int) -> list[Edge]:
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def graph_from_mask(n: int, mask: int) -> Graph:
    return Graph(n, (e for k, e in enumerate(_pairs(n)) if mask >> k & 1))


def graph_mask(g: Graph) -> int:
    return sum(1 << k for k, e in enumerate(_pairs(g.n)) if e in g.edges)


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labeled simple graph on 1..n, in edge-bitmask order."""
    pairs = _pairs(n)
    for mask in range(1 << len(pairs)):
        yield Graph(n, (e for k, e in enumerate(pairs) if mask >> k & 1))


@lru_cache(maxsize=None)
def _perm_tables(n: int):
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64).reshape(-1, n)
    index = np.zeros((n, n), dtype=np.int64)
    for k, (i, j) in enumerate(_pairs(n)):
        index[i - 1, j - 1] = index[j - 1, i - 1] = k
    return perms, index


CANONICAL_MAX_N = 8


def canonical_mask(g: Graph) -> int:
    """Smallest edge bitmask over all relabelings of ``g``."""
    if g.n > CANONICAL_MAX_N:
        raise PreconditionError(f"canonical form limited to n <= {CANONICAL_MAX_N}")
    if not g.edges:
        return 0
    perms, index = _perm_tables(g.n)
    us = np.array([u - 1 for u, _ in g.edges])
    vs = np.array([v - 1 for _, v in g.edges])
    bits = index[perms[:, us], perms[:, vs]]
    return int((np.int64(1) << bits).sum(axis=1).min())


def canonical_form(g: Graph) -> Graph:
    return graph_from_mask(g.n, canonical_mask(g))


@lru_cache(maxsize=None)
def _canonical_masks(n: int) -> tuple[int, ...]:
    if n <= 1:
        return (0,)
    found = set()
    old = _pairs(n - 1)
    for base in _canonical_masks(n - 1):
        base_edges = [e for k, e in enumerate(old) if base >> k & 1]
        for nbrs in range(1 << (n - 1)):
            edges = base_edges + [(i + 1, n) for i in range(n - 1) if nbrs >> i & 1]
            found.add(canonical_mask(Graph(n, edges)))
    return tuple(sorted(found))


def canonical_graphs(n: int) -> list[Graph]:
    """One representative per isomorphism class of graphs on n vertices."""
    return [graph_from_mask(n, mask) for mask in _canonical_masks(n)]


def graphs_up_to(nmax: int, canonical: bool = False, nmin: int = 1) -> Iterator[Graph]:
    for n in range(nmin, nmax + 1):
        yield from (canonical_graphs(n) if canonical else all_graphs(n))


# ----------------------------------------------------------------- labelings


def check_labeling(lab, n: int) -> tuple[int, ...]:
    """Validate a labeling given as ``lab[v - 1] = position of v``."""
    lab = tuple(int(x) for x in lab)
    if sorted(lab) != list(range(1, n + 1)):
        raise PreconditionError(f"labeling {list(lab)} is not a permutation of 1..{n}")
    return lab


def identity_labeling(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))
