"""Simple undirected graphs on vertices 0..n-1, with spectra and girth.

Vertex ids double as the fixed linear order used everywhere downstream: edges
are stored as ``(u, v)`` with ``u < v`` in lexicographic order, and that order
indexes the coordinates of F_2^E.  Neighbors are listed in ascending order,
which indexes the coordinates of each local code.
"""

from __future__ import annotations

import math
from collections import deque
from itertools import combinations
from typing import Iterable

import numpy as np

from .errors import ParseError, ValidationError

REGULAR_RETRIES = 10_000


class Graph:
    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValidationError("vertex count must be nonnegative")
        canon = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValidationError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValidationError(f"edge ({u}, {v}) out of range for {n} vertices")
            e = (u, v) if u < v else (v, u)
            if e in canon:
                raise ValidationError(f"repeated edge {e}")
            canon.add(e)
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(canon))
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self._adj = tuple(tuple(sorted(a)) for a in adj)
        self._edge_index = {e: i for i, e in enumerate(self.edges)}

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, u: int) -> tuple[int, ...]:
        if not 0 <= u < self.n:
            raise ValidationError(f"vertex {u} out of range for {self.n} vertices")
        return self._adj[u]

    def degree(self, u: int) -> int:
        return len(self.neighbors(u))

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def edge_index(self, u: int, v: int) -> int:
        """Coordinate of edge uv in F_2^E."""
        return self._edge_index[(u, v) if u < v else (v, u)]

    def adjacency_matrix(self) -> np.ndarray:
        A = np.zeros((self.n, self.n))
        for u, v in self.edges:
            A[u, v] = A[v, u] = 1.0
        return A

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def neighbors(G: Graph, u: int) -> tuple[int, ...]:
    return G.neighbors(u)


def is_regular(G: Graph) -> int | None:
    """The common degree if every vertex has it, else None."""
    degs = set(G.degrees())
    if len(degs) == 1:
        return degs.pop()
    return None


def spectrum(G: Graph) -> np.ndarray:
    """Adjacency eigenvalues in descending order (dense symmetric eigensolve)."""
    return np.linalg.eigvalsh(G.adjacency_matrix())[::-1]


def second_eigenvalue(G: Graph) -> float:
    """Second entry of the descending signed spectrum, with multiplicity."""
    if G.n < 2:
        raise ValidationError("second eigenvalue needs at least 2 vertices")
    return float(spectrum(G)[1])


def second_eigenvalue_abs(G: Graph) -> float:
    """Largest |eigenvalue| after removing the top one; the bipartite-sensitive variant."""
    if G.n < 2:
        raise ValidationError("second eigenvalue needs at least 2 vertices")
    return float(np.abs(spectrum(G)[1:]).max())


def components(G: Graph) -> int:
    seen = [False] * G.n
    count = 0
    for s in range(G.n):
        if seen[s]:
            continue
        count += 1
        seen[s] = True
        stack = [s]
        while stack:
            x = stack.pop()
            for y in G._adj[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
    return count


def cycle_space_dimension(G: Graph) -> int:
    return G.m - G.n + components(G)


def girth(G: Graph) -> int | None:
    """Length of a shortest cycle, or None for a forest.

    BFS from every vertex; a non-tree edge x-y seen from root r closes a closed
    walk of length dist(x) + dist(y) + 1 through r, and the minimum over all
    roots is the girth.  A search stops once it cannot beat the current best.
    """
    best = math.inf
    adj = G._adj
    for root in range(G.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] >= best:
                break
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif y != parent[x]:
                    best = min(best, dist[x] + dist[y] + 1)
    return None if best == math.inf else int(best)


# -- generators ------------------------------------------------------------


def complete(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValidationError("a simple cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise ValidationError("a path needs at least 1 vertex")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def hypercube(k: int) -> Graph:
    if k < 0:
        raise ValidationError("hypercube dimension must be nonnegative")
    n = 1 << k
    return Graph(n, [(u, u ^ (1 << b)) for u in range(n) for b in range(k) if u < u ^ (1 << b)])


def star(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def paley(q: int) -> Graph:
    """Paley graph on Z_q, q prime with q = 1 mod 4: i ~ j iff i - j is a nonzero square."""
    if q < 5 or q % 4 != 1 or any(q % p == 0 for p in range(2, int(q**0.5) + 1)):
        raise ValidationError(f"Paley graph needs a prime q = 1 mod 4, got {q}")
    squares = {(x * x) % q for x in range(1, q)}
    return Graph(q, [(i, j) for i in range(q) for j in range(i + 1, q) if (j - i) % q in squares])


def _pair_stubs(n: int, d: int, rng: np.random.Generator) -> set[tuple[int, int]] | None:
    """One pairing-model attempt that re-pairs only the rejected half-edges.

    Returns None when the leftover half-edges cannot form any new simple edge.
    """
    edges: set[tuple[int, int]] = set()
    stubs = np.repeat(np.arange(n), d)
    while stubs.size:
        leftover = []
        for a, b in rng.permutation(stubs).reshape(-1, 2).tolist():
            e = (a, b) if a < b else (b, a)
            if a != b and e not in edges:
                edges.add(e)
            else:
                leftover.extend(e)
        if not leftover:
            break
        ends = sorted(set(leftover))
        if not any(u != v and (u, v) not in edges for u in ends for v in ends if u < v):
            return None
        stubs = np.array(leftover)
    return edges


def random_regular(n: int, d: int, seed: int) -> Graph:
    """d-regular simple graph from the pairing model.

    Half-edges are shuffled and paired; pairs forming a loop or a repeated edge
    are thrown back and re-paired, and an attempt that gets stuck is discarded.
    For d > (n-1)/2 the complement of an (n-1-d)-regular sample is returned.
    """
    if d < 0 or n < 0:
        raise ValidationError("n and d must be nonnegative")
    if (n * d) % 2:
        raise ValidationError(f"n*d must be even (n={n}, d={d})")
    if d >= n and n > 0:
        raise ValidationError(f"need d < n (n={n}, d={d})")
    if 2 * d > n - 1:
        H = random_regular(n, n - 1 - d, seed)
        present = set(H.edges)
        return Graph(n, [e for e in combinations(range(n), 2) if e not in present])
    rng = np.random.default_rng(seed)
    for _ in range(REGULAR_RETRIES):
        edges = _pair_stubs(n, d, rng)
        if edges is not None:
            return Graph(n, edges)
    raise RuntimeError(f"no simple {d}-regular graph on {n} vertices after {REGULAR_RETRIES} attempts")


def random_graph(n: int, m: int, seed: int) -> Graph:
    """Uniform graph with exactly m edges on n vertices."""
    total = n * (n - 1) // 2
    if not 0 <= m <= total:
        raise ValidationError(f"cannot place {m} edges on {n} vertices")
    rng = np.random.default_rng(seed)
    chosen = set()
    while len(chosen) < m:
        u, v = rng.integers(0, n, size=2)
        if u != v:
            chosen.add((min(u, v), max(u, v)))
    return Graph(n, chosen)


_NAMED = {
    "complete": complete,
    "cycle": cycle,
    "path": path,
    "petersen": petersen,
    "hypercube": hypercube,
    "star": star,
    "complete-bipartite": complete_bipartite,
    "paley": paley,
}


def named_graph(name: str, *params: int) -> Graph:
    try:
        factory = _NAMED[name]
    except KeyError:
        raise ValidationError(f"unknown graph {name!r}; choose from {sorted(_NAMED)}") from None
    try:
        return factory(*params)
    except TypeError as exc:
        raise ValidationError(f"bad parameters for {name}: {params}") from exc


# -- text format -----------------------------------------------------------


def format_graph(G: Graph) -> str:
    lines = [f"p {G.n} {G.m}"]
    lines.extend(f"e {u} {v}" for u, v in G.edges)
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    """Read ``p <n> <m>`` then m lines ``e <u> <v>`` (0-based, u < v, sorted)."""
    lines = [(i + 1, ln.strip()) for i, ln in enumerate(text.splitlines()) if ln.strip()]
    if not lines:
        raise ParseError("empty graph file", 1)
    no, head = lines[0]
    parts = head.split()
    if len(parts) != 3 or parts[0] != "p" or not (parts[1].isdigit() and parts[2].isdigit()):
        raise ParseError(f"expected 'p <n> <m>', got {head!r}", no)
    n, m = int(parts[1]), int(parts[2])
    if len(lines) - 1 != m:
        raise ParseError(f"header declares {m} edges, file has {len(lines) - 1} edge lines", no)
    edges = []
    for no, ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 3 or parts[0] != "e" or not (parts[1].isdigit() and parts[2].isdigit()):
            raise ParseError(f"expected 'e <u> <v>', got {ln!r}", no)
        u, v = int(parts[1]), int(parts[2])
        if not u < v:
            raise ParseError(f"edge must satisfy u < v, got {u} {v}", no)
        if not v < n:
            raise ParseError(f"vertex {v} out of range for {n} vertices", no)
        if edges and (u, v) <= edges[-1]:
            raise ParseError("edges must be sorted and distinct", no)
        edges.append((u, v))
    return Graph(n, edges)
