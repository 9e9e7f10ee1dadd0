#!/usr/bin/env python3
"""
Hamiltonian Constructions

Constructive Hamiltonian cycles in G^{K2}, dimension-alternating cycles in
Cartesian powers G^[n], lifting such cycles into G^H through Hamiltonian
paths of the fibers, two edge-disjoint Hamiltonian cycles and two completely
independent spanning trees in G^{Kn}, and the verifiers for all of them.

Constructions work on hc-positions: coordinate value a stands for the base
vertex hc[a], so consecutive positions (mod p) are always adjacent in G.
"""

import logging
import math
import random
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from . import graph_core
from .errors import MalformedCertificateError, PreconditionError
from .expo import ExpoSpace
from .generators import complete
from .graph_core import Graph
from .models import CistPair, ExpoEdgeKind, HamCycleCert, WalkSpec
from .settings import CIST_EXHAUSTIVE_LIMIT, HAM_BRUTE_FORCE_LIMIT

logger = logging.getLogger(__name__)

Host = Union[Graph, ExpoSpace]

_H_EDGE = ExpoEdgeKind.h_edge()


def _g_kinds(dims: Sequence[int]) -> List[ExpoEdgeKind]:
    table: Dict[int, ExpoEdgeKind] = {}
    kinds = []
    for d in dims:
        kind = table.get(d)
        if kind is None:
            kind = table[d] = ExpoEdgeKind.g_edge(int(d))
        kinds.append(kind)
    return kinds


def _check_hc(G: Graph, hc: Sequence[int]) -> np.ndarray:
    order = np.asarray(list(hc), dtype=np.int64)
    if (len(order) != G.n or G.n < 3 or len(np.unique(order)) != G.n
            or order.min() < 0 or order.max() >= G.n
            or not np.all(G.has_edges(order, np.roll(order, -1)))):
        raise PreconditionError("hc must be a Hamiltonian cycle of the base")
    return order


def canonical_hamiltonian_cycle(G: Graph, limit: int = HAM_BRUTE_FORCE_LIMIT) -> List[int]:
    """The identity order when it is a Hamiltonian cycle (K_n, C_n), a
    reflected Gray code for hypercube labels, otherwise brute force."""
    identity = list(range(G.n))
    if G.n >= 3 and np.all(G.has_edges(np.arange(G.n), np.roll(np.arange(G.n), -1))):
        return identity
    if G.labels and all(isinstance(x, str) for x in G.labels) and G.n >= 4:
        gray = [G.index_of(format(i ^ (i >> 1), f"0{len(G.labels[0])}b")) for i in range(G.n)]
        if np.all(G.has_edges(np.asarray(gray), np.roll(np.asarray(gray), -1))):
            return gray
    if G.n > limit:
        raise PreconditionError(f"no Hamiltonian cycle known for {G.name or 'the base'}")
    found = graph_core.hamiltonian_cycle(G, limit=limit)
    if found is None:
        raise PreconditionError(f"{G.name or 'the base'} is not Hamiltonian")
    return found


# ----------------------------------------------------------------------
# G^{K2}
# ----------------------------------------------------------------------

def ham_cycle_gk2(G: Graph, hc: Sequence[int]) -> HamCycleCert:
    """Hamiltonian cycle of G^{K2} for any Hamiltonian G (odd orders included).

    Step k walks the whole w1-row with u2 = -k backwards from u1 = k, crosses
    to w2, walks the whole w2-column with u1 = k+1 forwards from u2 = -k,
    and crosses back to w1 at (k+1, -k-1).
    """
    order = _check_hc(G, hc)
    p = G.n
    k = np.arange(p)[:, None]
    i = np.arange(p)[None, :]
    row_a = (k - i) % p
    row_b = np.broadcast_to((-k) % p, (p, p))
    col_a = np.broadcast_to((k + 1) % p, (p, p))
    col_b = (-k + i) % p
    a = np.concatenate([row_a, col_a], axis=1).ravel()
    b = np.concatenate([row_b, col_b], axis=1).ravel()
    t = np.tile(np.repeat([0, 1], p), p)
    ids = (order[a] + p * order[b]) * 2 + t
    vertices = ids.tolist()
    vertices.append(vertices[0])
    table = {0: _H_EDGE, 1: ExpoEdgeKind.g_edge(1), 2: ExpoEdgeKind.g_edge(2)}
    step = [1] * (p - 1) + [0] + [2] * (p - 1) + [0]
    kinds = [table[d] for d in step * p]
    space = ExpoSpace(G, complete(2))
    return HamCycleCert(WalkSpec(vertices, kinds, closed=True), host=space.name)


# ----------------------------------------------------------------------
# Dimension-alternating cycles in G^[n]
# ----------------------------------------------------------------------

def _boustrophedon(p: int) -> np.ndarray:
    """The cycle C on positions [0,p)^2; starts at (0,0), closes along dimension 2."""
    blocks = []
    for c in range(0, -p, -2):
        r = np.arange(2 * p)
        s = r // 2
        blocks.append(np.stack([(s + r % 2) % p, (c + s) % p], axis=1))
    return np.concatenate(blocks)


def _mirrored_boustrophedon(p: int) -> np.ndarray:
    """The companion cycle C', rotated to start at (p-1,p-1) so that it also
    closes along dimension 2 (through (p-1,0))."""
    blocks = []
    for c in range(0, p, 2):
        r = np.arange(2 * p)
        s = r // 2
        blocks.append(np.stack([(-s - r % 2) % p, (c - s) % p], axis=1))
    cycle = np.concatenate(blocks)
    start = int(np.flatnonzero((cycle[:, 0] == p - 1) & (cycle[:, 1] == p - 1))[0])
    return np.roll(cycle, -start, axis=0)


def _stack_layers(cycle: np.ndarray, p: int) -> np.ndarray:
    """Lift a cycle of G^[n] closing along dimension n to G^[n+1].

    The cycle is cut into a path at its closing edge; layer t runs the path
    forwards for even t, backwards for odd t, joined by dimension n+1 steps.
    """
    L = len(cycle)
    layers = []
    for t in range(p):
        seq = cycle if t % 2 == 0 else cycle[::-1]
        layers.append(np.hstack([seq, np.full((L, 1), t, dtype=np.int64)]))
    return np.vstack(layers)


def _walk_from_positions(positions: np.ndarray, order: np.ndarray) -> WalkSpec:
    p = len(order)
    n = positions.shape[1]
    strides = p ** np.arange(n, dtype=np.int64)
    ids = (order[positions] * strides[None, :]).sum(axis=1)
    differ = positions != np.roll(positions, -1, axis=0)
    dims = np.argmax(differ, axis=1) + 1
    vertices = ids.tolist()
    vertices.append(vertices[0])
    return WalkSpec(vertices, _g_kinds(dims.tolist()), closed=True)


def _require_even(G: Graph, n: int) -> None:
    if G.n % 2 or G.n < 4:
        raise PreconditionError("base order must be even >= 4")
    if n < 2:
        raise PreconditionError("Cartesian power needs n >= 2")


def _cp_positions(p: int, n: int, companion: bool = False) -> np.ndarray:
    cycle = _mirrored_boustrophedon(p) if companion else _boustrophedon(p)
    for _ in range(2, n):
        cycle = _stack_layers(cycle, p)
    return cycle


def cp_ham_cycle(G: Graph, hc: Sequence[int], n: int) -> WalkSpec:
    """Dimension-alternating Hamiltonian cycle of G^[n] for even |V(G)|.

    Every step of dimension >= 2 is flanked by dimension-1 steps.
    """
    order = _check_hc(G, hc)
    _require_even(G, n)
    return _walk_from_positions(_cp_positions(G.n, n), order)


def cp_ham_cycle_pair(G: Graph, hc: Sequence[int], n: int) -> Tuple[WalkSpec, WalkSpec]:
    """Two edge-disjoint dimension-alternating Hamiltonian cycles of G^[n].

    For G = C_p and n = 2 their edge sets partition E(C_p^[2]).
    """
    order = _check_hc(G, hc)
    _require_even(G, n)
    first = _walk_from_positions(_cp_positions(G.n, n), order)
    second = _walk_from_positions(_cp_positions(G.n, n, companion=True), order)
    return first, second


def _torus_sequence(A: int, B: int) -> Tuple[np.ndarray, np.ndarray]:
    """Boustrophedon Hamiltonian cycle of the torus C_A x C_B from (0,0).

    Block c runs (0,c),(1,c),(1,c+1),(2,c+1),...,(0,c+A-1) and steps down to
    the next block at c+A-2.
    """
    if math.gcd((A - 2) // 2, B // 2) != 1:
        raise PreconditionError(f"torus {A}x{B} does not close into one cycle")
    xs, ys = [], []
    c = 0
    r = np.arange(2 * A)
    s = r // 2
    for _ in range(B // 2):
        xs.append((s + r % 2) % A)
        ys.append((c + s) % B)
        c = (c + A - 2) % B
    return np.concatenate(xs), np.concatenate(ys)


def split_cycle_pair(G: Graph, hc: Sequence[int], n: int) -> Tuple[WalkSpec, WalkSpec]:
    """Two edge-disjoint alternating cycles of G^[n] (n >= 4) whose dimension
    pairs are disjoint at every tuple.

    Dimensions 1..m and m+1..n (m = n // 2) carry alternating cycles C_X and
    C_Y; the torus C_X x C_Y is covered by the boustrophedon cycle and its
    point mirror, so each tuple sees one X-step and one Y-step in each cycle,
    in opposite directions.
    """
    order = _check_hc(G, hc)
    _require_even(G, n)
    if n < 4:
        raise PreconditionError("disjoint dimension pairs need n >= 4")
    p, m = G.n, n // 2
    cx = _cp_positions(p, m)
    cy = _cp_positions(p, n - m)
    A, B = len(cx), len(cy)
    i, j = _torus_sequence(A, B)
    first = np.hstack([cx[i], cy[j]])
    second = np.hstack([cx[(-i) % A], cy[(-j) % B]])
    return _walk_from_positions(first, order), _walk_from_positions(second, order)


# ----------------------------------------------------------------------
# Lifting into G^H
# ----------------------------------------------------------------------

def _contact_dims(cycle: WalkSpec) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    tuples = np.asarray(cycle.vertices[:-1], dtype=np.int64)
    dims = np.asarray(cycle.dimensions(), dtype=np.int64)
    if np.any(dims < 1):
        raise MalformedCertificateError("Cartesian-power cycle needs a dimension on every step")
    return tuples, np.roll(dims, 1), dims


def _splice(space: ExpoSpace, cycle: WalkSpec,
            fiber_path: Callable[[int, int, int], Sequence[int]]) -> WalkSpec:
    """Replace every tuple of the cycle by a Hamiltonian path of its fiber.

    fiber_path(tuple, j_in, j_out) returns exponent vertices (0-based) from
    w_{j_in} to w_{j_out}.
    """
    q = space.q
    tuples, dims_in, dims_out = _contact_dims(cycle)
    vertices: List[int] = []
    kinds: List[ExpoEdgeKind] = []
    out_kinds = _g_kinds(dims_out.tolist())
    for t, j_in, j_out, leave in zip(tuples.tolist(), dims_in.tolist(), dims_out.tolist(), out_kinds):
        path = fiber_path(t, j_in, j_out)
        base = t * q
        vertices.extend(base + w for w in path)
        kinds.extend([_H_EDGE] * (len(path) - 1))
        kinds.append(leave)
    vertices.append(vertices[0])
    return WalkSpec(vertices, kinds, closed=True)


def _complete_path(q: int, a: int, b: int) -> List[int]:
    return [a] + [w for w in range(q) if w not in (a, b)] + [b]


def pivot_vertex(H: Graph, limit: int = HAM_BRUTE_FORCE_LIMIT) -> Optional[int]:
    """Smallest w with a Hamiltonian path from w to every other vertex."""
    for w in range(H.n):
        if all(graph_core.hamiltonian_path(H, w, b, limit=limit) is not None
               for b in range(H.n) if b != w):
            return w
    return None


def relabel_pivot_first(H: Graph, w: int) -> Graph:
    """Swap vertex w with vertex 0 so the pivot is bound to dimension 1."""
    perm = np.arange(H.n, dtype=np.int64)
    perm[0], perm[w] = w, 0
    owners = np.repeat(np.arange(H.n, dtype=np.int64), H.degrees)
    labels = None if H.labels is None else [H.labels[int(perm[v])] for v in range(H.n)]
    return Graph.from_arcs(H.n, perm[owners], perm[H.indices], labels=labels,
                           name=H.name, simplify=True)


def lift_ham_cycle(space: ExpoSpace, cp_cycle: WalkSpec, require: str = "connected",
                   limit: int = HAM_BRUTE_FORCE_LIMIT) -> HamCycleCert:
    """Hamiltonian cycle of G^H from an alternating cycle of G^[q].

    ``require="connected"`` needs H Hamiltonian-connected. ``require="pivot"``
    only needs Hamiltonian paths from w_1 to every other vertex, and a cycle
    whose dimension >= 2 steps are flanked by dimension-1 steps.
    """
    H, q = space.exponent, space.q
    if q < 2:
        raise PreconditionError("lifting needs an exponent with at least two vertices")
    if len(cp_cycle.vertices) - 1 != space.tuple_count:
        raise PreconditionError("cycle length does not match |V(G)|^|V(H)|")
    if not verify_alternation(cp_cycle):
        raise PreconditionError("Cartesian-power cycle is not dimension-alternating")
    complete_h = H.is_complete()
    if require == "connected":
        if not complete_h:
            if q > limit:
                raise PreconditionError("exponent too large to confirm Hamiltonian-connectedness")
            if not graph_core.is_hamiltonian_connected(H, limit=limit):
                raise PreconditionError("exponent is not Hamiltonian-connected")
    elif require == "pivot":
        if not verify_strong_alternation(cp_cycle):
            raise PreconditionError("cycle has a dimension >= 2 step not flanked by dimension 1")
        if not complete_h and any(graph_core.hamiltonian_path(H, 0, b, limit=limit) is None
                                  for b in range(1, q)):
            raise PreconditionError("w_1 is not a pivot of the exponent; relabel it first")
    else:
        raise PreconditionError(f"unknown lifting requirement {require!r}")

    cache: Dict[Tuple[int, int], List[int]] = {}

    def fiber_path(_t: int, j_in: int, j_out: int) -> List[int]:
        key = (j_in, j_out)
        if key not in cache:
            a, b = j_in - 1, j_out - 1
            if complete_h:
                cache[key] = _complete_path(q, a, b)
            elif require == "pivot":
                found = graph_core.hamiltonian_path(H, 0, b if a == 0 else a, limit=limit)
                cache[key] = found if a == 0 else found[::-1]
            else:
                cache[key] = graph_core.hamiltonian_path(H, a, b, limit=limit)
        return cache[key]

    cycle = _splice(space, cp_cycle, fiber_path)
    logger.info("lifted a Hamiltonian cycle of %s (%d vertices)", space.name, cycle.length)
    return HamCycleCert(cycle, host=space.name)


# ----------------------------------------------------------------------
# G^{Kn}: edge-disjoint cycles and CISTs
# ----------------------------------------------------------------------

def kn_zigzag_paths(n: int) -> Tuple[List[int], List[int]]:
    """P1 = (0, 1, n-1, 2, n-2, ...) ending at ceil(n/2), and P2 = P1 + 1 mod n."""
    if n < 2:
        raise PreconditionError("zigzag paths need n >= 2")
    first = [0]
    for i in range(1, n):
        k = (i + 1) // 2
        first.append(k if i % 2 else n - k)
    second = [(z + 1) % n for z in first]
    return first, second


def kn_path_pair(n: int, x1: int, y1: int, x2: int, y2: int) -> Tuple[List[int], List[int]]:
    """Edge-disjoint Hamiltonian paths of K_n, x1 -> y1 and x2 -> y2, for four
    distinct endpoints: the zigzag pair under the relabeling
    0 -> x1, ceil(n/2) -> y1, 1 -> x2, ceil(n/2)+1 -> y2."""
    if len({x1, y1, x2, y2}) != 4:
        raise PreconditionError("contact vertices x1, y1, x2, y2 must be distinct")
    first, second = kn_zigzag_paths(n)
    h = first[-1]
    pinned = {0: x1, h: y1, 1: x2, h + 1: y2}
    rest = iter(w for w in range(n) if w not in pinned.values())
    perm = [pinned[z] if z in pinned else next(rest) for z in range(n)]
    p1 = [perm[z] for z in first]
    p2 = [perm[z] for z in second]
    edges1 = {frozenset(e) for e in zip(p1, p1[1:])}
    if any(frozenset(e) in edges1 for e in zip(p2, p2[1:])):
        raise PreconditionError(f"relabeled K{n} paths share an edge")
    return p1, p2


def _contacts(cycle: WalkSpec, tuple_count: int) -> Tuple[np.ndarray, np.ndarray]:
    tuples, dims_in, dims_out = _contact_dims(cycle)
    x = np.empty(tuple_count, dtype=np.int64)
    y = np.empty(tuple_count, dtype=np.int64)
    x[tuples] = dims_in - 1
    y[tuples] = dims_out - 1
    return x, y


def _gkn_setup(G: Graph, hc: Sequence[int], n: int):
    if n < 4:
        raise PreconditionError("G^{Kn} constructions need n >= 4")
    c1, c2 = split_cycle_pair(G, hc, n)
    space = ExpoSpace(G, complete(n))
    x1, y1 = _contacts(c1, space.tuple_count)
    x2, y2 = _contacts(c2, space.tuple_count)
    return space, c1, c2, (x1, y1, x2, y2)


def edhc_gkn(G: Graph, hc: Sequence[int], n: int) -> Tuple[HamCycleCert, HamCycleCert]:
    """Two edge-disjoint Hamiltonian cycles of G^{Kn} (|V(G)| even >= 4, n >= 4)."""
    space, c1, c2, (x1, y1, x2, y2) = _gkn_setup(G, hc, n)
    cache: Dict[Tuple[int, int, int, int], Tuple[List[int], List[int]]] = {}

    def pair_for(t: int) -> Tuple[List[int], List[int]]:
        key = (int(x1[t]), int(y1[t]), int(x2[t]), int(y2[t]))
        if key not in cache:
            cache[key] = kn_path_pair(n, *key)
        return cache[key]

    first = _splice(space, c1, lambda t, _a, _b: pair_for(t)[0])
    second = _splice(space, c2, lambda t, _a, _b: pair_for(t)[1])
    return HamCycleCert(first, host=space.name), HamCycleCert(second, host=space.name)


def cist_gkn(G: Graph, hc: Sequence[int], n: int) -> CistPair:
    """Two completely independent spanning trees of G^{Kn}.

    In every fiber T1 is the star at x1 over the inner vertices plus
    x1y1, x1x2, y1y2 and T2 the star at x2 plus x2y2, x2y1, y2x1. The fibers
    are chained by the G-edges of the two cycles, each minus the G-edge that
    closes back into its first fiber.
    """
    space, c1, c2, (x1, y1, x2, y2) = _gkn_setup(G, hc, n)
    q, T = space.q, space.tuple_count
    base = np.arange(T, dtype=np.int64) * q
    w = np.arange(q, dtype=np.int64)[None, :]
    inner = (w != x1[:, None]) & (w != y1[:, None]) & (w != x2[:, None]) & (w != y2[:, None])

    def fiber_edges(hub, extra):
        star_src = np.broadcast_to((base + hub)[:, None], inner.shape)[inner]
        star_dst = (base[:, None] + w)[inner]
        src = [star_src] + [base + a for a, _ in extra]
        dst = [star_dst] + [base + b for _, b in extra]
        return np.concatenate(src), np.concatenate(dst)

    def cycle_edges(cycle: WalkSpec):
        tuples, _, dims_out = _contact_dims(cycle)
        src = tuples * q + dims_out - 1
        dst = np.roll(tuples, -1) * q + dims_out - 1
        return src[:-1], dst[:-1]

    trees = []
    for hub, extra, cycle in (
        (x1, [(x1, y1), (x1, x2), (y1, y2)], c1),
        (x2, [(x2, y2), (x2, y1), (y2, x1)], c2),
    ):
        fs, fd = fiber_edges(hub, extra)
        cs, cd = cycle_edges(cycle)
        src, dst = np.concatenate([fs, cs]), np.concatenate([fd, cd])
        lo, hi = np.minimum(src, dst), np.maximum(src, dst)
        trees.append(list(zip(lo.tolist(), hi.tolist())))
    return CistPair(trees[0], trees[1], host=space.name)


# ----------------------------------------------------------------------
# Verifiers
# ----------------------------------------------------------------------

def _host_order(host: Host) -> int:
    return host.order if isinstance(host, ExpoSpace) else host.n


def _host_adjacent(host: Host, us: np.ndarray, vs: np.ndarray) -> np.ndarray:
    if isinstance(host, ExpoSpace):
        return host.step_dimensions(us, vs) >= 0
    return host.has_edges(us, vs)


def verify_ham_cycle(cert: Union[HamCycleCert, WalkSpec], host: Host) -> bool:
    """Closed, visits every host vertex exactly once, every step a host edge."""
    walk = cert.cycle if isinstance(cert, HamCycleCert) else cert
    if not walk.vertices:
        raise MalformedCertificateError("empty cycle")
    if walk.kinds and len(walk.kinds) != len(walk.vertices) - 1:
        raise MalformedCertificateError("step annotations do not match the vertex list")
    order = _host_order(host)
    vs = np.asarray(walk.vertices, dtype=object if order >= 2 ** 62 else np.int64)
    if not walk.closed or vs[0] != vs[-1] or len(vs) - 1 != order:
        return False
    body = vs[:-1]
    if len(set(body.tolist())) != order:
        return False
    return bool(np.all(_host_adjacent(host, vs[:-1], vs[1:])))


def _edge_keys(walk: WalkSpec) -> set:
    vs = walk.vertices
    return {(a, b) if a < b else (b, a) for a, b in zip(vs[:-1], vs[1:])}


def verify_edge_disjoint(a: Union[HamCycleCert, WalkSpec], b: Union[HamCycleCert, WalkSpec]) -> bool:
    wa = a.cycle if isinstance(a, HamCycleCert) else a
    wb = b.cycle if isinstance(b, HamCycleCert) else b
    return _edge_keys(wa).isdisjoint(_edge_keys(wb))


def edges_partition(host: Graph, a: WalkSpec, b: WalkSpec) -> bool:
    """The two walks use every host edge exactly once between them."""
    ea, eb = _edge_keys(a), _edge_keys(b)
    return ea.isdisjoint(eb) and (ea | eb) == host.edge_set()


def verify_alternation(walk: WalkSpec) -> bool:
    """No two consecutive steps (cyclically, for closed walks) share a dimension."""
    dims = walk.dimensions()
    if not dims or any(d is None for d in dims):
        return False
    pairs = zip(dims, dims[1:] + ([dims[0]] if walk.closed else []))
    return all(a != b for a, b in pairs)


def verify_strong_alternation(walk: WalkSpec) -> bool:
    """Every step of dimension >= 2 is flanked by dimension-1 steps."""
    dims = walk.dimensions()
    if not verify_alternation(walk):
        return False
    L = len(dims)
    for i, d in enumerate(dims):
        if d >= 2:
            before = dims[i - 1] if (i > 0 or walk.closed) else 1
            after = dims[(i + 1) % L] if (i + 1 < L or walk.closed) else 1
            if before != 1 or after != 1:
                return False
    return True


def _tree_graph(edges: List[Tuple[int, int]], order: int) -> Optional[Graph]:
    if len(edges) != order - 1:
        return None
    arr = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
    if len(arr) and (arr.min() < 0 or arr.max() >= order):
        return None
    tree = Graph.from_edges(order, edges)
    if tree.m != order - 1 or not graph_core.is_connected(tree):
        return None
    return tree


def tree_paths_disjoint(t1: Graph, t2: Graph, u: int, v: int) -> bool:
    """The u-v paths of two trees share no inner vertex and no edge."""
    p1 = graph_core.shortest_path(t1, u, v)
    p2 = graph_core.shortest_path(t2, u, v)
    if set(p1[1:-1]) & set(p2[1:-1]):
        return False
    e1 = {frozenset(e) for e in zip(p1, p1[1:])}
    return not any(frozenset(e) in e1 for e in zip(p2, p2[1:]))


def verify_cist(pair: CistPair, host: Host, exhaustive_limit: int = CIST_EXHAUSTIVE_LIMIT,
                samples: int = 0, seed: int = 0) -> bool:
    """Degree characterization of two CISTs, plus literal path checks.

    Hosts up to ``exhaustive_limit`` vertices are checked for every pair;
    larger hosts get ``samples`` random pairs.
    """
    order = _host_order(host)
    for tree in (pair.tree1, pair.tree2):
        if any(len(e) != 2 for e in tree):
            raise MalformedCertificateError("tree edges must be pairs")
    t1 = _tree_graph(pair.tree1, order)
    t2 = _tree_graph(pair.tree2, order)
    if t1 is None or t2 is None:
        return False
    for tree in (t1, t2):
        ends = tree.edges()
        if not np.all(_host_adjacent(host, ends[:, 0], ends[:, 1])):
            return False
    if not t1.edge_set().isdisjoint(t2.edge_set()):
        return False
    if np.any((t1.degrees > 1) & (t2.degrees > 1)):
        return False
    if order <= exhaustive_limit:
        pairs = [(u, v) for u in range(order) for v in range(u + 1, order)]
    else:
        rng = random.Random(seed)
        pairs = [tuple(rng.sample(range(order), 2)) for _ in range(samples)]
    return all(tree_paths_disjoint(t1, t2, u, v) for u, v in pairs)
