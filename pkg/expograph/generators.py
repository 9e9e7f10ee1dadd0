#!/usr/bin/env python3
"""
Topology Generators

Canonical constructions for the base and exponent families: complete graphs,
cycles, paths, hypercubes, undirected de Bruijn and Kautz graphs, 0-type
Möbius cubes, plus the DCell order recurrence used by comparison tables.
"""

import itertools
import logging
from fractions import Fraction
from typing import Callable, Dict, Optional, Tuple

import numpy as np

from .errors import BudgetExceededError, InvalidParameterError
from .graph_core import Graph
from .models import FamilySpec

logger = logging.getLogger(__name__)

MOBIUS_VARIANT = "0-type"


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise InvalidParameterError(message)


def complete(n: int) -> Graph:
    _require(n >= 1, "complete graph needs n >= 1")
    u, v = np.triu_indices(n, k=1)
    return Graph.from_arcs(n, u, v, name=f"K{n}", simplify=True)


def cycle(n: int) -> Graph:
    _require(n >= 3, "cycle needs n >= 3")
    ids = np.arange(n)
    return Graph.from_arcs(n, ids, (ids + 1) % n, name=f"C{n}", simplify=True)


def path(n: int) -> Graph:
    _require(n >= 1, "path needs n >= 1")
    ids = np.arange(n - 1)
    return Graph.from_arcs(n, ids, ids + 1, name=f"P{n}", simplify=True)


def hypercube(k: int) -> Graph:
    """Q_k on k-bit strings; bit i of the id is flipped along dimension i+1."""
    _require(k >= 1, "hypercube needs k >= 1")
    ids = np.arange(1 << k, dtype=np.int64)
    src = np.repeat(ids, k)
    dst = src ^ np.tile(1 << np.arange(k, dtype=np.int64), 1 << k)
    labels = [format(x, f"0{k}b") for x in range(1 << k)]
    return Graph.from_arcs(1 << k, src, dst, labels=labels, name=f"Q{k}", simplify=True)


def de_bruijn(d: int, k: int) -> Graph:
    """Undirected de Bruijn graph B(d,k): loops dropped, doubled shifts merged.

    Tuples are numbered lexicographically, v1 most significant.
    """
    _require(d >= 2 and k >= 1, "de Bruijn graph needs d >= 2, k >= 1")
    order = d ** k
    ids = np.arange(order, dtype=np.int64)
    src = np.repeat(ids, d)
    alpha = np.tile(np.arange(d, dtype=np.int64), order)
    dst = (src % (d ** (k - 1))) * d + alpha
    labels = list(itertools.product(range(d), repeat=k))
    return Graph.from_arcs(order, src, dst, labels=labels, name=f"B({d},{k})", simplify=True)


def kautz(d: int, k: int) -> Graph:
    """Undirected Kautz graph K(d,k) on words over {0..d} with no equal neighbors."""
    _require(d >= 2 and k >= 1, "Kautz graph needs d >= 2, k >= 1")
    words = [w for w in itertools.product(range(d + 1), repeat=k)
             if all(a != b for a, b in zip(w, w[1:]))]
    index = {w: i for i, w in enumerate(words)}
    edges = [(index[w], index[w[1:] + (a,)])
             for w in words for a in range(d + 1) if a != w[-1]]
    return Graph.from_edges(len(words), edges, labels=words, name=f"KZ({d},{k})")


def mobius_cube(k: int) -> Graph:
    """0-type Möbius cube MQ_k on bit strings x1..xk (x1 most significant).

    Along position i the neighbor flips x_i alone when x_{i-1} = 0 (x_0 = 0),
    otherwise it flips x_i..x_k.
    """
    _require(k >= 1, "Möbius cube needs k >= 1")
    edges = []
    for x in range(1 << k):
        for i in range(1, k + 1):
            bit = k - i
            previous = 0 if i == 1 else (x >> (bit + 1)) & 1
            mask = (1 << bit) if previous == 0 else (1 << (bit + 1)) - 1
            edges.append((x, x ^ mask))
    labels = [format(x, f"0{k}b") for x in range(1 << k)]
    return Graph.from_edges(1 << k, edges, labels=labels, name=f"MQ{k}")


def dcell_order(k: int, n: int) -> int:
    """t_{0,n} = n, t_{k,n} = t_{k-1,n} (t_{k-1,n} + 1)."""
    _require(k >= 0 and n >= 2, "DCell order needs k >= 0, n >= 2")
    t = n
    for _ in range(k):
        t = t * (t + 1)
    return t


def dcell_diam_bound(k: int) -> int:
    _require(k >= 0, "DCell level must be >= 0")
    return 2 ** (k + 1) - 1


def dcell_order_bounds(k: int, n: int) -> Tuple[Fraction, int]:
    """(n + 1/2)^(2^k) - 1/2 <= t_{k,n} <= (n + 1)^(2^k) - 1."""
    _require(k >= 0 and n >= 2, "DCell order needs k >= 0, n >= 2")
    lower = (Fraction(2 * n + 1, 2)) ** (2 ** k) - Fraction(1, 2)
    upper = (n + 1) ** (2 ** k) - 1
    return lower, upper


FAMILY_BUILDERS: Dict[str, Callable[..., Graph]] = {
    "complete": complete,
    "cycle": cycle,
    "path": path,
    "hypercube": hypercube,
    "debruijn": de_bruijn,
    "kautz": kautz,
    "mobius": mobius_cube,
}


def build_family(spec: FamilySpec, max_vertices: Optional[int] = None) -> Graph:
    """Build the graph a FamilySpec names."""
    if spec.family in FAMILY_BUILDERS:
        return FAMILY_BUILDERS[spec.family](*spec.params)
    if spec.family in ("expo-cube", "hyper-expo-cube"):
        from . import expo
        kwargs = {} if max_vertices is None else {"max_vertices": max_vertices}
        builder = expo.omega if spec.family == "expo-cube" else expo.psi
        result = builder(complete(2), *spec.params, **kwargs)
        if result.graph is None:
            raise BudgetExceededError(
                f"{spec.family}{spec.params} has {result.stats.order} vertices")
        return result.graph
    raise InvalidParameterError(f"unknown family {spec.family!r}")
