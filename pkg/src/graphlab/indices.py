"""Topological indices computed from their definitions, in exact arithmetic.

Every function here works by enumerating pairs, edges, or vertices of the
given graph; none of them consults the closed forms (those live in formulas
and are verified against these).  Distance-based indices stream distance
rows from the metric layer, so Gamma graphs use the constant-time distance
rule and general divisor graphs use breadth-first search.

Degree-based quantities use adjacency-counted degrees.  Equal pair or edge
terms are accumulated grouped by their value; with exact arithmetic the
result is independent of accumulation order.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import prod

from . import metric
from .exact import RadicalSum, Value, inv_sqrt, normalize, value_to_json
from .graphs import DprimeGraph, GeneralDivisorGraph

#: Canonical index names, in report order.
INDEX_NAMES = (
    "wiener",
    "hyper_wiener",
    "harary",
    "zagreb1",
    "zagreb2",
    "degree_distance",
    "gutman",
    "balaban",
    "harmonic",
    "randic",
    "r1",
    "r2",
    "r3",
    "mostar",
)


def _pair_distance_counts(g) -> Counter:
    """How often each distance value occurs over unordered vertex pairs."""
    counts: Counter = Counter()
    for i, row in enumerate(metric.distance_rows(g)):
        counts.update(row[i + 1 :])
    return counts


def _edge_degree_pairs(g) -> Counter:
    """How often each (deg u, deg v) pair (unordered, as sorted tuple) occurs."""
    deg = g.degrees()
    return Counter(tuple(sorted((deg[i], deg[j]))) for i, j in g.edges())


def wiener(g) -> Value:
    """Sum of distances over unordered pairs."""
    return sum(d * c for d, c in _pair_distance_counts(g).items())


def hyper_wiener(g) -> Value:
    """Half the sum of d + d**2 over unordered pairs."""
    acc = sum((d + d * d) * c for d, c in _pair_distance_counts(g).items())
    return normalize(Fraction(acc, 2))


def harary(g) -> Value:
    """Sum of reciprocal distances over unordered pairs."""
    acc = sum(
        (Fraction(c, d) for d, c in _pair_distance_counts(g).items()),
        start=Fraction(0),
    )
    return normalize(acc)


def zagreb1(g) -> Value:
    """Sum of squared vertex degrees."""
    return sum(d * d for d in g.degrees())


def zagreb2(g) -> Value:
    """Sum of degree products over edges."""
    return sum(a * b * c for (a, b), c in _edge_degree_pairs(g).items())


def degree_distance(g) -> Value:
    """Sum over unordered pairs of (deg u + deg v) * d(u, v)."""
    deg = g.degrees()
    acc = 0
    for i, row in enumerate(metric.distance_rows(g)):
        di = deg[i]
        for j in range(i + 1, len(row)):
            acc += (di + deg[j]) * row[j]
    return acc


def gutman(g) -> Value:
    """Sum over unordered pairs of deg u * deg v * d(u, v)."""
    deg = g.degrees()
    acc = 0
    for i, row in enumerate(metric.distance_rows(g)):
        di = deg[i]
        for j in range(i + 1, len(row)):
            acc += di * deg[j] * row[j]
    return acc


def balaban(g) -> Value:
    """m/(mu+1) times the edge sum of 1/sqrt(D_u * D_v), D = transmission."""
    m = len(g.edges())
    if m == 0:
        return 0
    mu = m - g.order + 1
    tr = metric.transmissions(g)
    products = Counter(tr[i] * tr[j] for i, j in g.edges())
    acc = RadicalSum()
    for p, c in products.items():
        acc = acc + inv_sqrt(p) * c
    return normalize(acc * Fraction(m, mu + 1))


def harmonic(g) -> Value:
    """Edge sum of 2/(deg u + deg v)."""
    acc = sum(
        (Fraction(2 * c, a + b) for (a, b), c in _edge_degree_pairs(g).items()),
        start=Fraction(0),
    )
    return normalize(acc)


def randic(g) -> Value:
    """Edge sum of 1/sqrt(deg u * deg v)."""
    acc = RadicalSum()
    for (a, b), c in _edge_degree_pairs(g).items():
        acc = acc + inv_sqrt(a * b) * c
    return normalize(acc)


@dataclass(frozen=True)
class RDegree:
    """R-degree of a vertex: degree-sum part S_v plus degree-product part M_v."""

    s: int
    m: int

    @property
    def r(self) -> int:
        return self.s + self.m


def r_degree(g, i: int) -> RDegree:
    """S_v = sum of the other degrees; M_v = product of the other degrees."""
    deg = g.degrees()
    total = sum(deg)
    d = deg[i]
    if d > 0:
        m = prod(deg) // d
    else:
        # single-vertex graph: empty product
        m = prod(deg[j] for j in range(len(deg)) if j != i)
    return RDegree(total - d, m)


def _r_values(g) -> list[int]:
    return [r_degree(g, i).r for i in range(g.order)]


def r1(g) -> Value:
    """Vertex sum of r(v)**2."""
    return sum(r * r for r in _r_values(g))


def r2(g) -> Value:
    """Edge sum of r(u) * r(v)."""
    r = _r_values(g)
    return sum(r[i] * r[j] for i, j in g.edges())


def r3(g) -> Value:
    """Edge sum of r(u) + r(v)."""
    r = _r_values(g)
    return sum(r[i] + r[j] for i, j in g.edges())


def mostar(g) -> Value:
    """Edge sum of |n_u - n_v| with n_u, n_v the closer-vertex counts."""
    rows = list(metric.distance_rows(g))
    acc = 0
    for i, j in g.edges():
        ri, rj = rows[i], rows[j]
        n_u = sum(1 for a, b in zip(ri, rj) if a < b)
        n_v = sum(1 for a, b in zip(ri, rj) if b < a)
        acc += abs(n_u - n_v)
    return acc


_DISPATCH = {
    "wiener": wiener,
    "hyper_wiener": hyper_wiener,
    "harary": harary,
    "zagreb1": zagreb1,
    "zagreb2": zagreb2,
    "degree_distance": degree_distance,
    "gutman": gutman,
    "balaban": balaban,
    "harmonic": harmonic,
    "randic": randic,
    "r1": r1,
    "r2": r2,
    "r3": r3,
    "mostar": mostar,
}


def compute_index(g, name: str) -> Value:
    """One index by name; unknown names raise ValueError listing valid ones."""
    try:
        fn = _DISPATCH[name]
    except KeyError:
        raise ValueError(
            f"unknown index {name!r}; valid names: {', '.join(INDEX_NAMES)}"
        ) from None
    return fn(g)


def compute_indices(g, names=None) -> dict[str, Value]:
    """Selected indices (default all) in canonical report order."""
    if names is None:
        names = INDEX_NAMES
    else:
        for n in names:
            if n not in _DISPATCH:
                raise ValueError(
                    f"unknown index {n!r}; valid names: {', '.join(INDEX_NAMES)}"
                )
        names = [n for n in INDEX_NAMES if n in set(names)]
    return {n: _DISPATCH[n](g) for n in names}


def graph_descriptor(g) -> dict:
    """Stable JSON identification of the graph a report was computed on."""
    if isinstance(g, DprimeGraph):
        doc: dict = {"family": "gamma", "k": g.k}
        if g.basis is not None:
            doc["primes"] = list(g.basis)
        return doc
    if isinstance(g, GeneralDivisorGraph):
        return {"family": "divisor", "n": g.n}
    return {"family": "graph", "order": g.order}


def report_dict(g, values: dict[str, Value]) -> dict:
    """IndexReport JSON document."""
    return {
        "graph": graph_descriptor(g),
        "indices": {name: value_to_json(v) for name, v in values.items()},
    }
