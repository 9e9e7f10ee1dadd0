#!/usr/bin/env python3
"""
Graph Core

Immutable simple undirected graphs in CSR form plus the elementary
algorithms the rest of the package builds on: BFS distances, bit-parallel
all-source eccentricities, power graphs, contraction, induced subgraphs and
brute-force Hamiltonicity checks for small graphs.
"""

import logging
import os
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .errors import (
    DisconnectedGraphError,
    EdgeListFormatError,
    InvalidParameterError,
    InvalidVertexError,
    SizeLimitExceededError,
)
from .models import WalkSpec
from .settings import BFS_BATCH, HAM_BRUTE_FORCE_LIMIT

logger = logging.getLogger(__name__)


class Graph:
    """Simple undirected graph on vertices 0..n-1.

    Adjacency is stored as CSR arrays with strictly increasing neighbor
    lists. Arrays are frozen after construction. ``labels`` is an optional
    side table of structured labels (tuples, bit strings).
    """

    __slots__ = ("n", "indptr", "indices", "labels", "name", "_arc_keys")

    def __init__(self, n: int, indptr: np.ndarray, indices: np.ndarray,
                 labels: Optional[Sequence[Any]] = None, name: str = ""):
        if n < 0:
            raise InvalidParameterError("vertex count must be non-negative")
        self.n = int(n)
        self.indptr = np.ascontiguousarray(indptr, dtype=np.int64)
        self.indices = np.ascontiguousarray(indices, dtype=np.int64)
        self.indptr.setflags(write=False)
        self.indices.setflags(write=False)
        self.labels = list(labels) if labels is not None else None
        self.name = name
        self._arc_keys = None

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    @classmethod
    def from_arcs(cls, n: int, src: np.ndarray, dst: np.ndarray,
                  labels: Optional[Sequence[Any]] = None, name: str = "",
                  simplify: bool = False) -> "Graph":
        """Build from a symmetric arc list (both directions present).

        With ``simplify`` the arcs may be one-directional, contain loops and
        duplicates; they are symmetrized and cleaned first.
        """
        src = np.asarray(src, dtype=np.int64)
        dst = np.asarray(dst, dtype=np.int64)
        if src.size and (src.min() < 0 or dst.min() < 0 or src.max() >= n or dst.max() >= n):
            raise InvalidVertexError(f"arc endpoint outside 0..{n - 1}")
        if simplify:
            keep = src != dst
            src, dst = src[keep], dst[keep]
            src, dst = np.concatenate([src, dst]), np.concatenate([dst, src])
            keys = np.unique(src * n + dst)
            src, dst = keys // n, keys % n
        else:
            order = np.argsort(src * n + dst, kind="stable")
            src, dst = src[order], dst[order]
        counts = np.bincount(src, minlength=n)
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(counts, out=indptr[1:])
        return cls(n, indptr, dst, labels=labels, name=name)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]],
                   labels: Optional[Sequence[Any]] = None, name: str = "") -> "Graph":
        """Build from undirected edges; loops and duplicates are collapsed."""
        arr = np.asarray(list(edges), dtype=np.int64).reshape(-1, 2)
        return cls.from_arcs(n, arr[:, 0], arr[:, 1], labels=labels, name=name, simplify=True)

    @classmethod
    def from_adjacency(cls, adjacency: Sequence[Sequence[int]],
                       labels: Optional[Sequence[Any]] = None, name: str = "") -> "Graph":
        edges = [(u, v) for u, nbrs in enumerate(adjacency) for v in nbrs]
        return cls.from_edges(len(adjacency), edges, labels=labels, name=name)

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.indices) // 2

    @property
    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    @property
    def min_degree(self) -> int:
        return int(self.degrees.min()) if self.n else 0

    @property
    def max_degree(self) -> int:
        return int(self.degrees.max()) if self.n else 0

    def _check(self, v: int) -> int:
        v = int(v)
        if not 0 <= v < self.n:
            raise InvalidVertexError(f"vertex {v} outside 0..{self.n - 1}")
        return v

    def neighbors(self, v: int) -> np.ndarray:
        v = self._check(v)
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def degree(self, v: int) -> int:
        v = self._check(v)
        return int(self.indptr[v + 1] - self.indptr[v])

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self.neighbors(u)
        v = self._check(v)
        i = np.searchsorted(nbrs, v)
        return bool(i < len(nbrs) and nbrs[i] == v)

    def has_edges(self, us: np.ndarray, vs: np.ndarray) -> np.ndarray:
        """Vectorized adjacency test for arrays of vertex pairs."""
        us = np.asarray(us, dtype=np.int64)
        vs = np.asarray(vs, dtype=np.int64)
        if self._arc_keys is None:
            owners = np.repeat(np.arange(self.n, dtype=np.int64), self.degrees)
            self._arc_keys = owners * self.n + self.indices
        if len(self._arc_keys) == 0:
            return np.zeros(len(us), dtype=bool)
        inside = (us >= 0) & (us < self.n) & (vs >= 0) & (vs < self.n)
        query = np.where(inside, us * self.n + vs, -1)
        pos = np.minimum(np.searchsorted(self._arc_keys, query), len(self._arc_keys) - 1)
        return inside & (self._arc_keys[pos] == query)

    def edges(self) -> np.ndarray:
        """Edge array of shape (m, 2) with u < v, sorted lexicographically."""
        owners = np.repeat(np.arange(self.n, dtype=np.int64), self.degrees)
        keep = owners < self.indices
        return np.stack([owners[keep], self.indices[keep]], axis=1)

    def edge_set(self) -> set:
        return {(int(u), int(v)) for u, v in self.edges()}

    def adjacency_lists(self) -> List[List[int]]:
        return [self.indices[self.indptr[v]:self.indptr[v + 1]].tolist() for v in range(self.n)]

    def label(self, v: int) -> Any:
        v = self._check(v)
        return self.labels[v] if self.labels is not None else v

    def index_of(self, label: Any) -> int:
        if self.labels is None:
            return self._check(label)
        try:
            return self.labels.index(label)
        except ValueError:
            raise InvalidVertexError(f"no vertex labelled {label!r}") from None

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def renamed(self, name: str) -> "Graph":
        """Same vertices and edges under another name; the frozen arrays are shared."""
        return Graph(self.n, self.indptr, self.indices, labels=self.labels, name=name)

    def to_networkx(self):
        import networkx as nx
        G = nx.Graph()
        G.add_nodes_from(range(self.n))
        G.add_edges_from(self.edges().tolist())
        return G

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n == other.n
                and np.array_equal(self.indptr, other.indptr)
                and np.array_equal(self.indices, other.indices))

    def __hash__(self) -> int:
        return hash((self.n, self.m, self.indices[:64].tobytes()))

    def __repr__(self) -> str:
        name = f" {self.name}" if self.name else ""
        return f"<Graph{name} n={self.n} m={self.m}>"


def check_invariants(G: Graph) -> List[str]:
    """Return a list of violated representation invariants (empty when valid)."""
    problems = []
    if len(G.indptr) != G.n + 1 or G.indptr[0] != 0 or G.indptr[-1] != len(G.indices):
        problems.append("indptr does not frame indices")
        return problems
    if len(G.indices) % 2:
        problems.append("odd number of arcs")
    if len(G.indices) and (G.indices.min() < 0 or G.indices.max() >= G.n):
        problems.append("neighbor id out of range")
        return problems
    owners = np.repeat(np.arange(G.n, dtype=np.int64), G.degrees)
    if np.any(owners == G.indices):
        problems.append("self-loop present")
    same_row = owners[1:] == owners[:-1]
    if np.any(same_row & (G.indices[1:] <= G.indices[:-1])):
        problems.append("neighbor lists not strictly increasing")
    forward = np.sort(owners * G.n + G.indices)
    backward = np.sort(G.indices * G.n + owners)
    if not np.array_equal(forward, backward):
        problems.append("adjacency not symmetric")
    return problems


# ----------------------------------------------------------------------
# BFS
# ----------------------------------------------------------------------

def expand_frontier(G: Graph, frontier: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """All (owner, neighbor) arcs leaving the frontier."""
    starts = G.indptr[frontier]
    counts = G.indptr[frontier + 1] - starts
    total = int(counts.sum())
    owners = np.repeat(frontier, counts)
    offsets = np.arange(total, dtype=np.int64) - np.repeat(np.cumsum(counts) - counts, counts)
    return owners, G.indices[np.repeat(starts, counts) + offsets]


def bfs_tree(G: Graph, source: int) -> Tuple[np.ndarray, np.ndarray]:
    """Level-synchronous BFS. Returns (dist, parent); unreachable vertices get -1.

    The parent of a vertex is its smallest-id neighbor on the previous level.
    """
    source = G._check(source)
    dist = np.full(G.n, -1, dtype=np.int64)
    parent = np.full(G.n, -1, dtype=np.int64)
    dist[source] = 0
    frontier = np.array([source], dtype=np.int64)
    level = 0
    while frontier.size:
        level += 1
        owners, nbrs = expand_frontier(G, frontier)
        fresh = dist[nbrs] < 0
        owners, nbrs = owners[fresh], nbrs[fresh]
        if nbrs.size == 0:
            break
        order = np.lexsort((owners, nbrs))
        owners, nbrs = owners[order], nbrs[order]
        first = np.ones(len(nbrs), dtype=bool)
        first[1:] = nbrs[1:] != nbrs[:-1]
        frontier = nbrs[first]
        parent[frontier] = owners[first]
        dist[frontier] = level
    return dist, parent


def bfs_distances(G: Graph, source: int) -> np.ndarray:
    return bfs_tree(G, source)[0]


def distance(G: Graph, u: int, v: int) -> Optional[int]:
    """Shortest-path length, or None when v is unreachable from u."""
    G._check(v)
    d = int(bfs_distances(G, u)[v])
    return d if d >= 0 else None


def shortest_path(G: Graph, u: int, v: int) -> List[int]:
    dist, parent = bfs_tree(G, u)
    v = G._check(v)
    if dist[v] < 0:
        raise DisconnectedGraphError(f"{v} unreachable from {u}")
    path = [v]
    while path[-1] != u:
        path.append(int(parent[path[-1]]))
    return path[::-1]


def is_connected(G: Graph) -> bool:
    if G.n == 0:
        return True
    return bool(np.all(bfs_distances(G, 0) >= 0))


def connected_components(G: Graph) -> List[List[int]]:
    seen = np.zeros(G.n, dtype=bool)
    components = []
    for v in range(G.n):
        if not seen[v]:
            members = np.flatnonzero(bfs_distances(G, v) >= 0)
            seen[members] = True
            components.append(members.tolist())
    return components


def all_pairs_distances(G: Graph) -> np.ndarray:
    """Dense distance matrix; intended for small graphs (metric closures)."""
    table = np.empty((G.n, G.n), dtype=np.int64)
    for v in range(G.n):
        table[v] = bfs_distances(G, v)
    return table


def eccentricities(G: Graph, sources: Optional[Sequence[int]] = None,
                   batch: int = BFS_BATCH) -> np.ndarray:
    """Eccentricities via bit-parallel multi-source BFS.

    Each uint64 word carries up to 64 concurrent searches; a level step is a
    gather over the CSR indices followed by an OR-reduction per row.
    """
    if G.n == 0:
        raise InvalidParameterError("empty graph has no eccentricity")
    batch = max(1, min(int(batch), 64))
    srcs = np.arange(G.n, dtype=np.int64) if sources is None else np.asarray(sources, dtype=np.int64)
    ecc = np.zeros(len(srcs), dtype=np.int64)
    has_nbrs = G.degrees > 0
    starts = G.indptr[:-1]
    for b0 in range(0, len(srcs), batch):
        chunk = srcs[b0:b0 + batch]
        k = len(chunk)
        bits = np.left_shift(np.uint64(1), np.arange(k, dtype=np.uint64))
        full = np.bitwise_or.reduce(bits)
        visited = np.zeros(G.n, dtype=np.uint64)
        np.bitwise_or.at(visited, chunk, bits)
        frontier = visited.copy()
        level = 0
        while True:
            # trailing zero keeps reduceat in range for empty last rows
            gathered = np.append(frontier[G.indices], np.uint64(0))
            reached = np.bitwise_or.reduceat(gathered, starts)
            reached[~has_nbrs] = 0
            reached &= ~visited
            active = np.bitwise_or.reduce(reached)
            if active == 0:
                break
            level += 1
            visited |= reached
            frontier = reached
            grew = ((np.uint64(active) >> np.arange(k, dtype=np.uint64)) & np.uint64(1)).astype(bool)
            ecc[b0:b0 + k][grew] = level
        if np.bitwise_and.reduce(visited) & full != full:
            raise DisconnectedGraphError(f"{G.name or 'graph'} is disconnected")
        logger.debug("eccentricity batch %d/%d done", b0 // batch + 1, -(-len(srcs) // batch))
    return ecc


def diameter(G: Graph, batch: int = BFS_BATCH) -> int:
    if G.n == 1:
        return 0
    if G.n > 10_000:
        logger.info("all-source BFS on %d vertices", G.n)
    return int(eccentricities(G, batch=batch).max())


# ----------------------------------------------------------------------
# Derived graphs
# ----------------------------------------------------------------------

def power_graph(G: Graph, n: int) -> Graph:
    """G^n: uv is an edge iff 1 <= dist_G(u, v) <= n."""
    if n < 1:
        raise InvalidParameterError("power must be >= 1")
    if not is_connected(G):
        raise DisconnectedGraphError("power graph needs a connected graph")
    src, dst = [], []
    for v in range(G.n):
        d = bfs_distances(G, v)
        near = np.flatnonzero((d >= 1) & (d <= n))
        src.append(np.full(len(near), v, dtype=np.int64))
        dst.append(near)
    name = f"POW({G.name},{n})" if G.name else ""
    return Graph.from_arcs(G.n, np.concatenate(src), np.concatenate(dst),
                           labels=G.labels, name=name)


def contract(G: Graph, partition: Sequence[Iterable[int]]) -> Graph:
    """Collapse each block to one vertex; uncovered vertices stay singletons.

    Blocks are numbered by their smallest member, so contracting the fibers
    of an exponential graph yields the Cartesian power in its own codec order.
    """
    return contract_with_mapping(G, partition)[0]


def contract_with_mapping(G: Graph, partition: Sequence[Iterable[int]]) -> Tuple[Graph, np.ndarray]:
    """Like contract, also returning the block id of every original vertex."""
    block_of = np.full(G.n, -1, dtype=np.int64)
    blocks = []
    for block in partition:
        members = np.unique(np.asarray(list(block), dtype=np.int64))
        if members.size == 0:
            continue
        if members.min() < 0 or members.max() >= G.n:
            raise InvalidVertexError("partition mentions a vertex outside the graph")
        if np.any(block_of[members] >= 0):
            raise InvalidParameterError("partition blocks overlap")
        block_of[members] = len(blocks)
        blocks.append(members)
    singles = np.flatnonzero(block_of < 0)
    block_of[singles] = np.arange(len(blocks), len(blocks) + len(singles))
    leaders = np.concatenate([[b.min() for b in blocks], singles]).astype(np.int64)
    rank = np.empty(len(leaders), dtype=np.int64)
    rank[np.argsort(leaders, kind="stable")] = np.arange(len(leaders))
    vertex_block = rank[block_of]
    owners = np.repeat(np.arange(G.n, dtype=np.int64), G.degrees)
    contracted = Graph.from_arcs(len(leaders), vertex_block[owners], vertex_block[G.indices],
                                 simplify=True)
    return contracted, vertex_block


def induced_subgraph(G: Graph, S: Iterable[int]) -> Graph:
    """Subgraph induced by S, relabelled 0..|S|-1 in increasing order.

    The returned graph's ``labels`` map each new id back to the original id.
    """
    members = np.unique(np.asarray(list(S), dtype=np.int64))
    if members.size == 0:
        raise InvalidParameterError("induced subgraph needs a nonempty vertex set")
    if members.min() < 0 or members.max() >= G.n:
        raise InvalidVertexError("vertex set mentions a vertex outside the graph")
    new_id = np.full(G.n, -1, dtype=np.int64)
    new_id[members] = np.arange(len(members))
    owners, nbrs = expand_frontier(G, members)
    keep = new_id[nbrs] >= 0
    return Graph.from_arcs(len(members), new_id[owners[keep]], new_id[nbrs[keep]],
                           labels=members.tolist())


def is_valid_walk(G: Graph, walk: WalkSpec) -> bool:
    if not walk.vertices:
        return False
    vs = np.asarray(walk.vertices, dtype=np.int64)
    if vs.min() < 0 or vs.max() >= G.n:
        return False
    if walk.closed and vs[0] != vs[-1]:
        return False
    return bool(np.all(G.has_edges(vs[:-1], vs[1:])))


# ----------------------------------------------------------------------
# Brute-force Hamiltonicity
# ----------------------------------------------------------------------

def _masks(G: Graph) -> List[int]:
    return [sum(1 << int(u) for u in G.neighbors(v)) for v in range(G.n)]


def _path_search(adj: List[int], n: int, start: int, end: Optional[int],
                 need_cycle: bool) -> Optional[List[int]]:
    full = (1 << n) - 1
    path = [start]

    def extend(v: int, visited: int) -> bool:
        if visited == full:
            if need_cycle:
                return bool(adj[v] >> start & 1)
            return end is None or v == end
        avail = adj[v] & ~visited
        if end is not None:
            # the end vertex is only entered last
            if visited | (1 << end) != full:
                avail &= ~(1 << end)
            if not (adj[end] & ~visited) and v != end and (adj[end] >> v & 1) == 0:
                return False
        while avail:
            low = avail & -avail
            u = low.bit_length() - 1
            avail ^= low
            path.append(u)
            if extend(u, visited | low):
                return True
            path.pop()
        return False

    return path if extend(start, 1 << start) else None


def _limit_check(G: Graph, limit: int) -> None:
    if G.n > limit:
        raise SizeLimitExceededError(
            f"brute-force Hamiltonicity limited to {limit} vertices, got {G.n}")


def hamiltonian_cycle(G: Graph, limit: int = HAM_BRUTE_FORCE_LIMIT) -> Optional[List[int]]:
    """Backtracking search anchored at vertex 0; returns the vertex order or None."""
    _limit_check(G, limit)
    if G.n < 3 or not is_connected(G) or G.min_degree < 2:
        return None
    return _path_search(_masks(G), G.n, 0, None, need_cycle=True)


def hamiltonian_path(G: Graph, s: int, t: int,
                     limit: int = HAM_BRUTE_FORCE_LIMIT) -> Optional[List[int]]:
    """A Hamiltonian path from s to t, or None."""
    _limit_check(G, limit)
    s, t = G._check(s), G._check(t)
    if G.n == 1:
        return [s] if s == t else None
    if s == t:
        return None
    return _path_search(_masks(G), G.n, s, t, need_cycle=False)


def is_hamiltonian(G: Graph, limit: int = HAM_BRUTE_FORCE_LIMIT) -> bool:
    return hamiltonian_cycle(G, limit) is not None


def _is_bipartite(G: Graph) -> bool:
    colour = np.full(G.n, -1, dtype=np.int64)
    for v in range(G.n):
        if colour[v] >= 0:
            continue
        d = bfs_distances(G, v)
        reached = d >= 0
        colour[reached] = d[reached] % 2
    ends = G.edges()
    return bool(np.all(colour[ends[:, 0]] != colour[ends[:, 1]]))


def is_hamiltonian_connected(G: Graph, limit: int = HAM_BRUTE_FORCE_LIMIT) -> bool:
    """Every pair of distinct vertices is joined by a Hamiltonian path."""
    _limit_check(G, limit)
    if G.n <= 2:
        return is_connected(G)
    if not is_connected(G) or _is_bipartite(G):
        # connected bipartite graphs on >= 3 vertices are never Hamiltonian-connected
        return False
    adj = _masks(G)
    return all(
        _path_search(adj, G.n, s, t, need_cycle=False) is not None
        for s in range(G.n) for t in range(s + 1, G.n)
    )


# ----------------------------------------------------------------------
# Edge-list I/O
# ----------------------------------------------------------------------

def write_edge_list(G: Graph, path: str, comments: Optional[Sequence[str]] = None) -> None:
    directory = os.path.dirname(path)
    if directory and not os.path.exists(directory):
        os.makedirs(directory, exist_ok=True)
    edges = G.edges()
    with open(path, "w", encoding="utf-8") as fh:
        for line in comments or []:
            fh.write(f"# {line}\n")
        fh.write(f"{G.n} {G.m}\n")
        if len(edges):
            np.savetxt(fh, edges, fmt="%d")


def format_edge_list(G: Graph) -> str:
    lines = [f"{G.n} {G.m}"]
    lines.extend(f"{u} {v}" for u, v in G.edges().tolist())
    return "\n".join(lines) + "\n"


def read_edge_list(path: str, name: str = "") -> Graph:
    """Read and validate the edge-list format: '#' comments, 'n m', then 'u v' lines."""
    with open(path, "r", encoding="utf-8") as fh:
        rows = [line.split() for line in fh if line.strip() and not line.lstrip().startswith("#")]
    if not rows or len(rows[0]) != 2:
        raise EdgeListFormatError("missing 'n m' header")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        edges = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as e:
        raise EdgeListFormatError(f"non-integer token: {e}") from e
    if len(edges) != m:
        raise EdgeListFormatError(f"header promises {m} edges, found {len(edges)}")
    for u, v in edges:
        if not (0 <= u < v < n):
            raise EdgeListFormatError(f"edge {u} {v} violates 0 <= u < v < n")
    if len(set(edges)) != len(edges):
        raise EdgeListFormatError("duplicate edge")
    return Graph.from_edges(n, edges, name=name)


def describe(G: Graph) -> Dict[str, Any]:
    return {
        "name": G.name,
        "order": G.n,
        "size": G.m,
        "minDegree": G.min_degree,
        "maxDegree": G.max_degree,
    }
