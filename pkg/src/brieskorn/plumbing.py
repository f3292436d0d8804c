"""Seifert invariants and plumbing trees for Brieskorn spheres."""
from __future__ import annotations

import json
from dataclasses import dataclass

from .arith import neg_cont_frac
from .errors import IntegrityError, InvalidInput, NotAlmostSimple
from .triples import Triple, seifert_triple

__all__ = [
    "SeifertData",
    "seifert_data",
    "PlumbingGraph",
    "star_graph",
    "almost_simple_linear_graph",
    "determinant",
    "bareiss",
    "export",
    "from_json",
]

STAR = "star"
LINEAR = "almost-simple-linear"


@dataclass(frozen=True)
class SeifertData:
    e0: int
    p1: int
    q1: int
    r1: int

    def as_tuple(self):
        return (self.e0, self.p1, self.q1, self.r1)


def _as_triple(t) -> Triple:
    if isinstance(t, Triple):
        return t
    return seifert_triple(*t)


def seifert_data(t) -> SeifertData:
    """Unique (e0, p', q', r') with e0 pqr + p'qr + pq'r + pqr' = -1 and 0 < p' < p etc."""
    t = _as_triple(t)
    p, q, r = t
    p1 = -pow(q * r, -1, p) % p
    q1 = -pow(p * r, -1, q) % q
    r1 = -pow(p * q, -1, r) % r
    num = -1 - p1 * q * r - p * q1 * r - p * q * r1
    e0, rem = divmod(num, p * q * r)
    if rem or not (0 < p1 < p and 0 < q1 < q and 0 < r1 < r):
        raise IntegrityError(f"no Seifert solution for {t}")
    return SeifertData(e0, p1, q1, r1)


@dataclass(frozen=True)
class PlumbingGraph:
    weights: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    shape: str

    def __post_init__(self):
        n = len(self.weights)
        if n == 0:
            raise InvalidInput("plumbing graph must have at least one vertex")
        if len(self.edges) != n - 1:
            raise InvalidInput(f"a tree on {n} vertices has {n - 1} edges, got {len(self.edges)}")
        adj = [[] for _ in range(n)]
        for i, j in self.edges:
            if not (0 <= i < n and 0 <= j < n) or i == j:
                raise InvalidInput(f"bad edge ({i}, {j})")
            adj[i].append(j)
            adj[j].append(i)
        # rooted traversal from vertex 0, cached for determinant
        parent = [-1] * n
        parent[0] = 0
        order = [0]
        children = [None] * n
        for v in order:
            kids = [u for u in adj[v] if parent[u] < 0]
            for u in kids:
                parent[u] = v
            children[v] = kids
            order.extend(kids)
        if len(order) != n:
            raise InvalidInput("plumbing graph is not connected")
        object.__setattr__(self, "_order", order)
        object.__setattr__(self, "_children", children)

    def __len__(self):
        return len(self.weights)

    def adjacency(self) -> list[set[int]]:
        adj = [set() for _ in self.weights]
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def matrix(self) -> list[list[int]]:
        n = len(self.weights)
        m = [[0] * n for _ in range(n)]
        for i, w in enumerate(self.weights):
            m[i][i] = w
        for i, j in self.edges:
            m[i][j] = m[j][i] = 1
        return m


def _chain(weights, start, edges):
    """Append a path of vertices; returns the index list."""
    idx = list(range(start, start + len(weights)))
    edges.extend(zip(idx, idx[1:]))
    return idx


def star_graph(t) -> PlumbingGraph:
    """Central e0 vertex with three Hirzebruch-Jung legs for -p/p', -q/q', -r/r'."""
    t = _as_triple(t)
    sd = seifert_data(t)
    weights, edges = [sd.e0], []
    for n, k in ((t.p, sd.p1), (t.q, sd.q1), (t.r, sd.r1)):
        leg = list(neg_cont_frac(n, k))
        idx = _chain(leg, len(weights), edges)
        edges.append((0, idx[0]))
        weights.extend(leg)
    return PlumbingGraph(tuple(weights), tuple(edges), STAR)


def almost_simple_linear_graph(t: Triple) -> PlumbingGraph:
    """Chain of q + r - 1 vertices weighted -2 with a -p leaf on chain vertex q."""
    if not t.is_almost_simple:
        raise NotAlmostSimple(f"{t} does not satisfy pq + pr - qr = 1")
    n = t.q + t.r - 1
    edges = list(zip(range(n - 1), range(1, n)))
    edges.append((t.q - 1, n))  # 0-indexed chain position q
    return PlumbingGraph(tuple([-2] * n + [-t.p]), tuple(edges), LINEAR)


def determinant(g: PlumbingGraph) -> int:
    """Exact determinant of the intersection matrix by a bottom-up tree recursion.

    For a vertex v with children c: det(T_v) = w_v * prod det(T_c)
    - sum_c det(T_c minus c) * prod_{c' != c} det(T_c'). Integers only.
    """
    w, children = g.weights, g._children
    n = len(w)
    full = [0] * n  # det of subtree
    rest = [0] * n  # det of subtree with its root removed
    for v in reversed(g._order):
        kids = children[v]
        if not kids:
            full[v], rest[v] = w[v], 1
        elif len(kids) == 1:
            c = kids[0]
            full[v], rest[v] = w[v] * full[c] - rest[c], full[c]
        else:
            prod = 1
            for c in kids:
                prod *= full[c]
            acc = w[v] * prod
            for c in kids:
                term = rest[c]
                for c2 in kids:
                    if c2 != c:
                        term *= full[c2]
                acc -= term
            full[v], rest[v] = acc, prod
    return full[0]


def bareiss(m) -> int:
    """Fraction-free Gaussian elimination on a dense integer matrix."""
    m = [row[:] for row in m]
    n, sign, prev = len(m), 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def export(g: PlumbingGraph, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps({"vertices": list(g.weights),
                           "edges": [list(e) for e in g.edges],
                           "shape": g.shape})
    if fmt == "dot":
        lines = ["graph plumbing {"]
        lines += [f'  v{i} [label="{w}"];' for i, w in enumerate(g.weights)]
        lines += [f"  v{i} -- v{j};" for i, j in g.edges]
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise InvalidInput(f"unknown export format {fmt!r}; use dot or json")


def from_json(text: str) -> PlumbingGraph:
    try:
        data = json.loads(text)
        weights = tuple(int(w) for w in data["vertices"])
        edges = tuple((int(i), int(j)) for i, j in data["edges"])
        shape = data.get("shape", STAR)
    except (ValueError, KeyError, TypeError) as exc:
        raise InvalidInput(f"malformed graph JSON: {exc}") from None
    if shape not in (STAR, LINEAR):
        raise InvalidInput(f"unknown shape {shape!r}")
    return PlumbingGraph(weights, edges, shape)
