#!/usr/bin/env python3
"""
Exponential Graphs

The operation G^H, its vertex codec, Cartesian products and powers, and the
iterated families Omega(G,k) = Omega(G,k-1)^G and Psi(G,k) = G^Psi(G,k-1).

Codec: a vertex (u1..uq; w_j) has id ``tuple_value * q + (j - 1)`` where the
tuple value is the base-p number with u1 as the least significant digit.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .errors import BudgetExceededError, InvalidParameterError, InvalidVertexError
from .graph_core import Graph, expand_frontier
from .models import CheckResult, ExpoEdgeKind, Magnitude
from .settings import EXACT_BITS_LIMIT, HAM_DP_LIMIT, MAX_EDGES, MAX_VERTICES

logger = logging.getLogger(__name__)

_DECIMAL_BITS = 133  # about 40 decimal digits


class ExpoSpace:
    """Implicit view of V(G^H): encode/decode ids and enumerate neighbors."""

    def __init__(self, base: Graph, exponent: Graph):
        if base.n < 1 or exponent.n < 1:
            raise InvalidParameterError("base and exponent need at least one vertex")
        self.base = base
        self.exponent = exponent
        self.p = base.n
        self.q = exponent.n
        self.tuple_count = self.p ** self.q
        self.order = self.tuple_count * self.q
        self.name = f"EXP({base.name or 'G'},{exponent.name or 'H'})"
        self._strides = [self.p ** i for i in range(self.q)]

    # -- codec ---------------------------------------------------------

    def _check(self, x: int) -> int:
        x = int(x)
        if not 0 <= x < self.order:
            raise InvalidVertexError(f"vertex {x} outside 0..{self.order - 1}")
        return x

    def tuple_value(self, u: Sequence[int]) -> int:
        if len(u) != self.q:
            raise InvalidVertexError(f"tuple needs {self.q} coordinates, got {len(u)}")
        if any(not 0 <= c < self.p for c in u):
            raise InvalidVertexError(f"coordinate outside 0..{self.p - 1} in {tuple(u)}")
        return sum(int(c) * s for c, s in zip(u, self._strides))

    def encode(self, u: Sequence[int], j: int) -> int:
        """Id of (u1..uq; w_j) with j in 1..q."""
        if not 1 <= j <= self.q:
            raise InvalidVertexError(f"exponent position {j} outside 1..{self.q}")
        return self.tuple_value(u) * self.q + (j - 1)

    def decode(self, x: int) -> Tuple[Tuple[int, ...], int]:
        tv, r = divmod(self._check(x), self.q)
        digits = []
        for _ in range(self.q):
            tv, d = divmod(tv, self.p)
            digits.append(d)
        return tuple(digits), r + 1

    def rho(self, x: int) -> Tuple[int, ...]:
        return self.decode(x)[0]

    def rho_i(self, x: int, i: int) -> int:
        if not 1 <= i <= self.q:
            raise InvalidParameterError(f"coordinate {i} outside 1..{self.q}")
        return (self._check(x) // self.q // self._strides[i - 1]) % self.p

    def sigma(self, x: int) -> int:
        return self._check(x) % self.q + 1

    def fiber(self, u: Sequence[int]) -> List[int]:
        """V(H_u) in exponent order w_1..w_q."""
        base = self.tuple_value(u) * self.q
        return list(range(base, base + self.q))

    def with_coordinate(self, x: int, i: int, value: int) -> int:
        """Same vertex with coordinate i replaced; sigma is unchanged."""
        tv, r = divmod(self._check(x), self.q)
        stride = self._strides[i - 1]
        old = (tv // stride) % self.p
        return (tv + (value - old) * stride) * self.q + r

    def with_position(self, x: int, j: int) -> int:
        """Vertex of the same fiber at exponent position j."""
        return (self._check(x) // self.q) * self.q + (j - 1)

    # -- adjacency -----------------------------------------------------

    def neighbors(self, x: int) -> List[Tuple[int, ExpoEdgeKind]]:
        tv, r = divmod(self._check(x), self.q)
        stride = self._strides[r]
        digit = (tv // stride) % self.p
        found = [((tv + (int(nb) - digit) * stride) * self.q + r, ExpoEdgeKind.g_edge(r + 1))
                 for nb in self.base.neighbors(digit)]
        found.extend((tv * self.q + int(w), ExpoEdgeKind.h_edge())
                     for w in self.exponent.neighbors(r))
        found.sort(key=lambda item: item[0])
        return found

    def degree(self, x: int) -> int:
        tv, r = divmod(self._check(x), self.q)
        digit = (tv // self._strides[r]) % self.p
        return self.base.degree(digit) + self.exponent.degree(r)

    def edge_kind(self, x: int, y: int) -> Optional[ExpoEdgeKind]:
        """Classify xy, or None when it is not an edge."""
        tx, rx = divmod(self._check(x), self.q)
        ty, ry = divmod(self._check(y), self.q)
        if tx == ty:
            return ExpoEdgeKind.h_edge() if self.exponent.has_edge(rx, ry) else None
        if rx != ry:
            return None
        stride = self._strides[rx]
        dx, dy = (tx // stride) % self.p, (ty // stride) % self.p
        if tx - dx * stride != ty - dy * stride or not self.base.has_edge(dx, dy):
            return None
        return ExpoEdgeKind.g_edge(rx + 1)

    def is_edge(self, x: int, y: int) -> bool:
        return self.edge_kind(x, y) is not None

    def step_dimensions(self, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        """Vectorized classification: j for a G-edge of dimension j, 0 for an
        H-edge, -1 for a non-edge."""
        if self.order >= 2 ** 62:
            dims = []
            for x, y in zip(xs, ys):
                kind = self.edge_kind(int(x), int(y)) if 0 <= x < self.order and 0 <= y < self.order else None
                dims.append(-1 if kind is None else (kind.dimension or 0))
            return np.asarray(dims, dtype=np.int64)
        xs = np.asarray(xs, dtype=np.int64)
        ys = np.asarray(ys, dtype=np.int64)
        inside = (xs >= 0) & (xs < self.order) & (ys >= 0) & (ys < self.order)
        xs, ys = np.where(inside, xs, 0), np.where(inside, ys, 0)
        tx, rx = np.divmod(xs, self.q)
        ty, ry = np.divmod(ys, self.q)
        h_edge = (tx == ty) & self.exponent.has_edges(rx, ry)
        strides = np.asarray(self._strides, dtype=np.int64)[rx]
        dx, dy = (tx // strides) % self.p, (ty // strides) % self.p
        g_edge = ((rx == ry) & (tx != ty)
                  & (tx - dx * strides == ty - dy * strides)
                  & self.base.has_edges(dx, dy))
        dims = np.full(len(xs), -1, dtype=np.int64)
        dims[h_edge] = 0
        dims[g_edge] = rx[g_edge] + 1
        dims[~inside] = -1
        return dims

    def label(self, x: int) -> Tuple[Tuple[int, ...], int]:
        return self.decode(x)

    def __repr__(self) -> str:
        return f"<ExpoSpace {self.name} p={self.p} q={self.q} order={self.order}>"


def expo_neighbors(space: ExpoSpace, x: int) -> List[Tuple[int, ExpoEdgeKind]]:
    """Neighbors of x in G^H from the codec alone, sorted by id."""
    return space.neighbors(x)


@dataclass(frozen=True)
class ExpoFormulas:
    order: int
    size: int
    min_degree: int
    max_degree: int


def expo_formulas(G: Graph, H: Graph) -> ExpoFormulas:
    p, q = G.n, H.n
    return ExpoFormulas(
        order=p ** q * q,
        size=p ** (q - 1) * (q * G.m + p * H.m),
        min_degree=G.min_degree + H.min_degree,
        max_degree=G.max_degree + H.max_degree,
    )


def formula_checks(graph: Graph, G: Graph, H: Graph) -> List[CheckResult]:
    """Order, size and degree formulas against a materialized G^H."""
    expected = expo_formulas(G, H)
    return [
        CheckResult("order", expected.order, graph.n),
        CheckResult("size", expected.size, graph.m),
        CheckResult("minDegree", expected.min_degree, graph.min_degree),
        CheckResult("maxDegree", expected.max_degree, graph.max_degree),
    ]


def _power_arcs(G: Graph, dims: int, tuples: np.ndarray, scale: int, offset_of_dim) -> Tuple[List[np.ndarray], List[np.ndarray]]:
    """G-edge arcs of every dimension over the given tuple values."""
    srcs, dsts = [], []
    p = G.n
    for j in range(dims):
        stride = p ** j
        digit = (tuples // stride) % p
        digit_rep, nbrs = expand_frontier(G, digit)
        owners = np.repeat(tuples, G.degrees[digit])
        targets = owners + (nbrs - digit_rep) * stride
        offset = offset_of_dim(j)
        srcs.append(owners * scale + offset)
        dsts.append(targets * scale + offset)
    return srcs, dsts


def exponential(G: Graph, H: Graph, max_vertices: int = MAX_VERTICES,
                max_edges: int = MAX_EDGES) -> Tuple[Graph, ExpoSpace]:
    """Materialize G^H. Raises BudgetExceededError beyond the budget."""
    space = ExpoSpace(G, H)
    formulas = expo_formulas(G, H)
    if space.order > max_vertices or formulas.size > max_edges:
        raise BudgetExceededError(
            f"{space.name} has {space.order} vertices and {formulas.size} edges "
            f"(budget {max_vertices} / {max_edges})")
    q = space.q
    tuples = np.arange(space.tuple_count, dtype=np.int64)
    srcs, dsts = _power_arcs(G, q, tuples, q, lambda j: j)
    h_owner = np.repeat(np.arange(q, dtype=np.int64), H.degrees)
    fiber_base = (tuples * q)[:, None]
    srcs.append((fiber_base + h_owner[None, :]).ravel())
    dsts.append((fiber_base + H.indices[None, :]).ravel())
    graph = Graph.from_arcs(space.order, np.concatenate(srcs), np.concatenate(dsts),
                            name=space.name)
    logger.info("materialized %s: %d vertices, %d edges", space.name, graph.n, graph.m)
    return graph, space


def cartesian_product(G: Graph, H: Graph, max_vertices: int = MAX_VERTICES) -> Graph:
    """G x H with vertex (g, h) at id g + |V(G)| * h."""
    p, r = G.n, H.n
    if p * r > max_vertices:
        raise BudgetExceededError(f"product has {p * r} vertices (budget {max_vertices})")
    ids = np.arange(p * r, dtype=np.int64)
    g, h = ids % p, ids // p
    g_rep, g_nbrs = expand_frontier(G, g)
    g_owner = np.repeat(ids, G.degrees[g])
    h_rep, h_nbrs = expand_frontier(H, h)
    h_owner = np.repeat(ids, H.degrees[h])
    src = np.concatenate([g_owner, h_owner])
    dst = np.concatenate([g_owner + (g_nbrs - g_rep), h_owner + (h_nbrs - h_rep) * p])
    labels = [(G.label(a), H.label(b)) for b in range(r) for a in range(p)]
    return Graph.from_arcs(p * r, src, dst, labels=labels,
                           name=f"CPROD({G.name},{H.name})")


def cartesian_power(G: Graph, n: int, max_vertices: int = MAX_VERTICES) -> Graph:
    """G^[n] on n-tuples, u1 least significant; the edge dimension is the
    differing coordinate."""
    if n < 1:
        raise InvalidParameterError("Cartesian power needs n >= 1")
    order = G.n ** n
    if order > max_vertices:
        raise BudgetExceededError(f"G^[{n}] has {order} vertices (budget {max_vertices})")
    tuples = np.arange(order, dtype=np.int64)
    srcs, dsts = _power_arcs(G, n, tuples, 1, lambda j: 0)
    labels = None
    if order <= 100_000:
        digits = (tuples[:, None] // (G.n ** np.arange(n, dtype=np.int64))[None, :]) % G.n
        labels = [tuple(row) for row in digits.tolist()]
    return Graph.from_arcs(order, np.concatenate(srcs), np.concatenate(dsts),
                           labels=labels, name=f"CPOW({G.name},{n})")


def power_step_dimensions(p: int, n: int, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    """Dimension (1-based) of each step of a walk in G^[n]; 0 where more or
    fewer than one coordinate changes."""
    xs = np.asarray(xs, dtype=np.int64)
    ys = np.asarray(ys, dtype=np.int64)
    strides = p ** np.arange(n, dtype=np.int64)
    differ = ((xs[:, None] // strides) % p) != ((ys[:, None] // strides) % p)
    dims = np.argmax(differ, axis=1) + 1
    return np.where(differ.sum(axis=1) == 1, dims, 0)


def contract_to_base(space: ExpoSpace, graph: Optional[Graph] = None,
                     max_vertices: int = MAX_VERTICES) -> Graph:
    """Contract every fiber H_u of G^H to the single vertex u.

    The result uses the Cartesian-power codec, so it equals
    ``cartesian_power(G, q)`` literally.
    """
    if graph is None:
        graph, _ = exponential(space.base, space.exponent, max_vertices=max_vertices)
    owners = np.repeat(np.arange(graph.n, dtype=np.int64), graph.degrees)
    return Graph.from_arcs(space.tuple_count, owners // space.q, graph.indices // space.q,
                           name=f"CPOW({space.base.name},{space.q})", simplify=True)


# ----------------------------------------------------------------------
# Magnitudes
# ----------------------------------------------------------------------

def _group(text: str, operators: str = "+-*^") -> str:
    """Parenthesize text when it has one of the operators at top level."""
    depth = 0
    for c in text:
        if c == "(":
            depth += 1
        elif c == ")":
            depth -= 1
        elif depth == 0 and c in operators:
            return f"({text})"
    return text


def magnitude(value: int, text: Optional[str] = None) -> Magnitude:
    value = int(value)
    log2 = None
    if value > 1 and value & (value - 1) == 0:
        log2 = magnitude(value.bit_length() - 1)
    if value.bit_length() <= _DECIMAL_BITS:
        return Magnitude(value, str(value), log2)
    if text is None:
        if log2 is not None:
            text = f"2^{_group(log2.text)}"
        else:
            text = f"~10^{int(value.bit_length() * 0.30103)}"
    return Magnitude(value, text, log2)


def mag_add(a: Magnitude, b: Magnitude) -> Magnitude:
    text = f"{a.text}+{b.text}"
    if a.is_exact and b.is_exact:
        return magnitude(a.value + b.value, text)
    return Magnitude(None, text)


def mag_affine(a: Magnitude, mul: int, add: int = 0) -> Magnitude:
    """mul * a + add."""
    text = a.text if mul == 1 else f"{mul}*{_group(a.text, '+-')}"
    if add:
        text = f"{text}{add:+d}"
    if a.is_exact:
        return magnitude(mul * a.value + add, text)
    return Magnitude(None, text, a.log2 if (mul == 1 and add == 0) else None)


def mag_mul(a: Magnitude, b: Magnitude) -> Magnitude:
    if a.is_exact and b.is_exact:
        return magnitude(a.value * b.value)
    return Magnitude(None, f"{_group(a.text)}*{_group(b.text)}")


def mag_pow(a: Magnitude, exponent: int) -> Magnitude:
    if a.is_exact:
        return magnitude(a.value ** exponent)
    return Magnitude(None, f"{_group(a.text)}^{exponent}")


def expo_order(p: Magnitude, q: Magnitude) -> Magnitude:
    """|V(G^H)| = p^q * q for magnitudes p = |V(G)|, q = |V(H)|."""
    if p.value == 1:
        return q
    if p.is_exact and q.is_exact and q.value * p.value.bit_length() <= EXACT_BITS_LIMIT:
        return magnitude(p.value ** q.value * q.value)
    if p.log2 is not None and p.log2.is_exact and q.log2 is not None:
        exponent = mag_add(mag_affine(q, p.log2.value), q.log2)
        return Magnitude(None, f"2^{_group(exponent.text)}", exponent)
    return Magnitude(None, f"{_group(p.text)}^{_group(q.text)}*{_group(q.text, '+-')}")


# ----------------------------------------------------------------------
# Iterated families
# ----------------------------------------------------------------------

@dataclass
class IteratedStats:
    family: str
    base: str
    k: int
    order: Magnitude
    size: Optional[Magnitude]
    min_degree: int
    max_degree: int
    connectivity: Optional[int]
    diameter: Optional[Magnitude] = None
    diameter_lower: Optional[Magnitude] = None
    diameter_upper: Optional[Magnitude] = None
    chain: List[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        def render(m: Optional[Magnitude]):
            return None if m is None else m.to_json()
        return {
            "family": self.family,
            "base": self.base,
            "k": self.k,
            "order": render(self.order),
            "size": render(self.size),
            "minDegree": self.min_degree,
            "maxDegree": self.max_degree,
            "connectivity": self.connectivity,
            "diameter": render(self.diameter),
            "diameterLower": render(self.diameter_lower),
            "diameterUpper": render(self.diameter_upper),
            "chain": list(self.chain),
        }


@dataclass
class IteratedResult:
    graph: Optional[Graph]
    space: Optional[ExpoSpace]
    stats: IteratedStats


def _expo_size(p: Magnitude, q: Magnitude, eg: Optional[Magnitude], eh: Optional[Magnitude]) -> Optional[Magnitude]:
    if not (p.is_exact and q.is_exact and eg is not None and eh is not None
            and eg.is_exact and eh.is_exact):
        return None
    if (q.value - 1) * p.value.bit_length() > EXACT_BITS_LIMIT:
        return None
    return magnitude(p.value ** (q.value - 1) * (q.value * eg.value + p.value * eh.value))


def _ham_diameter_or_none(H: Graph, limit: int) -> Optional[int]:
    from . import metrics
    if H.n > limit:
        return None
    return metrics.ham_diameter(H, limit=limit)


def omega_stats(G: Graph, k: int, ham_dp_limit: int = HAM_DP_LIMIT) -> IteratedStats:
    """Closed-form statistics of Omega(G,k) = Omega(G,k-1)^G."""
    from .graph_core import diameter as graph_diameter
    if k < 1 or G.n < 2:
        raise InvalidParameterError("Omega(G,k) needs k >= 1 and |V(G)| >= 2")
    n = G.n
    order, size = magnitude(n), magnitude(G.m)
    chain = [G.name]
    for _ in range(2, k + 1):
        size = _expo_size(order, magnitude(n), size, magnitude(G.m))
        order = expo_order(order, magnitude(n))
        chain.append(f"EXP({chain[-1]},{G.name})")
    diam_g = graph_diameter(G)
    star = _ham_diameter_or_none(G, ham_dp_limit)
    factor = n ** (k - 1)
    geometric = (factor - 1) // (n - 1)
    stats = IteratedStats("omega", G.name, k, order, size, k * G.min_degree,
                          k * G.max_degree, k * G.min_degree if k >= 2 else None, chain=chain)
    if star is not None:
        stats.diameter = magnitude(factor * diam_g + geometric * star)
        stats.diameter_lower = stats.diameter_upper = stats.diameter
    else:
        stats.diameter_lower = magnitude(factor * diam_g + geometric * n)
        stats.diameter_upper = magnitude(factor * diam_g + geometric * (2 * n - 2))
    return stats


def psi_stats(G: Graph, k: int, ham_dp_limit: int = HAM_DP_LIMIT,
              max_vertices: int = MAX_VERTICES) -> IteratedStats:
    """Closed-form statistics of Psi(G,k) = G^Psi(G,k-1).

    The diameter is exact when Psi(G,k-1) is small enough for the subset DP,
    otherwise it is the interval [(diam G + 1)|Psi_{k-1}|, (diam G + 2)|Psi_{k-1}| - 2].
    """
    from .graph_core import diameter as graph_diameter
    if k < 1 or G.n < 2:
        raise InvalidParameterError("Psi(G,k) needs k >= 1 and |V(G)| >= 2")
    diam_g = graph_diameter(G)
    order, size = magnitude(G.n), magnitude(G.m)
    previous = None
    inner: Optional[Graph] = G
    chain = [G.name]
    for _ in range(2, k + 1):
        previous = order
        size = _expo_size(magnitude(G.n), order, magnitude(G.m), size)
        order = expo_order(magnitude(G.n), order)
        chain.append(f"EXP({G.name},{chain[-1]})")
    stats = IteratedStats("psi", G.name, k, order, size, k * G.min_degree,
                          k * G.max_degree, k * G.min_degree if k >= 2 else None, chain=chain)
    if k == 1:
        stats.diameter = stats.diameter_lower = stats.diameter_upper = magnitude(diam_g)
        return stats
    stats.diameter_lower = mag_affine(previous, diam_g + 1)
    stats.diameter_upper = mag_affine(previous, diam_g + 2, -2)
    if previous.is_exact and previous.value <= ham_dp_limit:
        for _ in range(2, k):
            inner, _space = exponential(G, inner, max_vertices=max_vertices)
        star = _ham_diameter_or_none(inner, ham_dp_limit)
        if star is not None:
            stats.diameter = magnitude(diam_g * previous.value + star)
    return stats


def omega(G: Graph, k: int, max_vertices: int = MAX_VERTICES,
          ham_dp_limit: int = HAM_DP_LIMIT) -> IteratedResult:
    """Omega(G,k); materialized while within budget, otherwise stats only."""
    stats = omega_stats(G, k, ham_dp_limit=ham_dp_limit)
    if stats.order.value is None or stats.order.value > max_vertices:
        logger.warning("%s is over budget; returning formula stats only", stats.chain[-1])
        return IteratedResult(None, None, stats)
    current, space = G, None
    for _ in range(2, k + 1):
        current, space = exponential(current, G, max_vertices=max_vertices)
    current = current.renamed(f"OMEGA({G.name},{k})")
    return IteratedResult(current, space, stats)


def psi(G: Graph, k: int, max_vertices: int = MAX_VERTICES,
        ham_dp_limit: int = HAM_DP_LIMIT) -> IteratedResult:
    """Psi(G,k); materialized while within budget, otherwise stats only."""
    stats = psi_stats(G, k, ham_dp_limit=ham_dp_limit, max_vertices=max_vertices)
    if stats.order.value is None or stats.order.value > max_vertices:
        logger.warning("%s is over budget; returning formula stats only", stats.chain[-1])
        return IteratedResult(None, None, stats)
    current, space = G, None
    for _ in range(2, k + 1):
        current, space = exponential(G, current, max_vertices=max_vertices)
    current = current.renamed(f"PSI({G.name},{k})")
    return IteratedResult(current, space, stats)
