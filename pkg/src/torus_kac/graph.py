"""Colored multigraphs and their polynomial invariants.

Vertices are numbered 1..r.  Edge colors only record provenance (which
permutation of a tuple produced the edge) and never enter a computation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable

from .errors import Disconnected, InvalidInput
from .exactmath import BiPoly, IntPoly, poly_eval


@dataclass(frozen=True)
class ColoredMultigraph:
    vertex_count: int
    edges: tuple[tuple[int, int, int], ...]

    def __init__(self, vertex_count: int, edges: Iterable[Iterable[int]] = ()):
        if vertex_count < 1:
            raise InvalidInput("a graph needs at least one vertex")
        canon = []
        for e in edges:
            u, v, *rest = e
            color = rest[0] if rest else 0
            if not (1 <= u <= vertex_count and 1 <= v <= vertex_count):
                raise InvalidInput(f"edge {(u, v)} has a vertex outside 1..{vertex_count}")
            if u > v:
                u, v = v, u
            canon.append((u, v, color))
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "edges", tuple(sorted(canon)))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def pairs(self) -> tuple[tuple[int, int], ...]:
        """Color-blind edge multiset, sorted."""
        return tuple(sorted((u, v) for u, v, _ in self.edges))

    def has_loops(self) -> bool:
        return any(u == v for u, v, _ in self.edges)

    def relabel(self, perm: dict[int, int]) -> ColoredMultigraph:
        return ColoredMultigraph(self.vertex_count, [(perm[u], perm[v], c) for u, v, c in self.edges])

    def to_json(self) -> str:
        return json.dumps({"vertices": self.vertex_count, "edges": [list(e) for e in self.edges]})

    @classmethod
    def from_json(cls, text: str) -> ColoredMultigraph:
        try:
            data = json.loads(text)
            return cls(int(data["vertices"]), [tuple(e) for e in data["edges"]])
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, InvalidInput):
                raise
            raise InvalidInput(f"malformed graph JSON: {exc}") from exc


def _component_count(n: int, pairs: Iterable[tuple[int, int]]) -> int:
    parent = list(range(n + 1))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    comps = n
    for u, v in pairs:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            comps -= 1
    return comps


def is_connected(g: ColoredMultigraph) -> bool:
    return _component_count(g.vertex_count, g.pairs()) == 1


def external_activity_subgraph_sum(g: ColoredMultigraph, method: str = "vertex") -> IntPoly:
    """Sum of (q-1)^{b_1(K)} over edge subsets K spanning a connected subgraph.

    Parallel edges are distinct elements of the edge set.  ``method="brute"``
    walks all 2^|E| subsets; ``method="vertex"`` uses the vertex-subset
    recursion for the connected part of the random-cluster sum, which costs
    O(3^r) polynomial operations and is used by the Kac pipeline.
    """
    if method == "brute":
        return _subgraph_sum_brute(g.vertex_count, g.pairs())
    if method == "vertex":
        return _subgraph_sum_vertex(g.vertex_count, g.pairs())
    raise ValueError(f"unknown method {method!r}")


def _subgraph_sum_brute(n: int, pairs: tuple[tuple[int, int], ...]) -> IntPoly:
    by_betti: dict[int, int] = {}
    m = len(pairs)
    for size in range(n - 1, m + 1):
        for subset in combinations(pairs, size):
            if _component_count(n, subset) == 1:
                b1 = size - n + 1
                by_betti[b1] = by_betti.get(b1, 0) + 1
    total = IntPoly()
    qm1 = IntPoly((-1, 1))
    for b1, count in by_betti.items():
        total = total + qm1**b1 * count
    return total


@lru_cache(maxsize=1 << 16)
def _subgraph_sum_vertex(n: int, pairs: tuple[tuple[int, int], ...]) -> IntPoly:
    # conn[S] = sum over edge sets K inside S connecting all of S of (q-1)^{|K|};
    # q^{e(S)} = sum over set partitions, peel off the block holding the lowest vertex.
    full = (1 << n) - 1
    masks = [(1 << (u - 1)) | (1 << (v - 1)) for u, v in pairs]
    max_e = len(pairs)
    qpow = [IntPoly.const(1)]
    q = IntPoly.q()
    for _ in range(max_e):
        qpow.append(qpow[-1] * q)

    def edges_in(s: int) -> int:
        return sum(1 for em in masks if em & s == em)

    e_cache: dict[int, int] = {}

    def e(s: int) -> int:
        if s not in e_cache:
            e_cache[s] = edges_in(s)
        return e_cache[s]

    conn: dict[int, IntPoly] = {}
    for s in range(1, full + 1):
        if not s & 1:
            continue
        acc = qpow[e(s)]
        rest = s & ~1
        sub = (rest - 1) & rest
        # proper subsets S' of S containing vertex 1: S' = 1 | sub, sub a proper submask of rest
        while True:
            sp = 1 | sub
            if sp != s:
                c = conn[sp]
                if c:
                    acc = acc - c * qpow[e(s & ~sp)]
            if sub == 0:
                break
            sub = (sub - 1) & rest
        conn[s] = acc
    top = conn[full]
    if not top:
        return IntPoly()
    return top.exact_div(IntPoly((-1, 1)) ** (n - 1))


# ---------------------------------------------------------------------------
# Tutte polynomial


def tutte(g: ColoredMultigraph, method: str = "deletion_contraction", memo: bool = True) -> BiPoly:
    """Tutte polynomial T_g(x, y).

    The default deletion-contraction always splits on the last edge of the
    canonical (sorted) edge list; ``method="corank_nullity"`` sums over all
    edge subsets and serves as an independent cross-check.
    """
    if method == "corank_nullity":
        return _tutte_subsets(g.vertex_count, g.pairs())
    if method != "deletion_contraction":
        raise ValueError(f"unknown method {method!r}")
    if memo:
        return _tutte_dc_cached(_normalize(g.pairs()))
    return _tutte_dc(g.pairs(), False)


def _normalize(pairs: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    """Relabel the touched vertices to 1..m in increasing order; sort the edges."""
    pairs = list(pairs)
    verts = sorted({x for e in pairs for x in e})
    idx = {v: i + 1 for i, v in enumerate(verts)}
    return tuple(sorted((min(idx[u], idx[v]), max(idx[u], idx[v])) for u, v in pairs))


def _linked(pairs: list[tuple[int, int]], a: int, b: int) -> bool:
    adj: dict[int, list[int]] = {}
    for u, v in pairs:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    seen = {a}
    stack = [a]
    while stack:
        x = stack.pop()
        if x == b:
            return True
        for y in adj.get(x, ()):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return False


_X = BiPoly.x()
_Y = BiPoly.y()


def _contract(pairs, u: int, v: int) -> tuple[tuple[int, int], ...]:
    """Merge vertex v into u; may create loops and parallel edges."""
    out = []
    for a, b in pairs:
        a = u if a == v else a
        b = u if b == v else b
        out.append((min(a, b), max(a, b)))
    return tuple(sorted(out))


def _tutte_dc(pairs: tuple[tuple[int, int], ...], memo: bool) -> BiPoly:
    if not pairs:
        return BiPoly.const(1)
    if memo:
        recurse, norm = _tutte_dc_cached, _normalize
    else:
        recurse, norm = (lambda p: _tutte_dc(p, False)), tuple
    u, v = pairs[-1]
    rest = pairs[:-1]
    if u == v:
        return _Y * recurse(norm(rest))
    contracted = norm(_contract(rest, u, v))
    if not _linked(list(rest), u, v):
        return _X * recurse(contracted)
    return recurse(norm(rest)) + recurse(contracted)


@lru_cache(maxsize=1 << 18)
def _tutte_dc_cached(pairs: tuple[tuple[int, int], ...]) -> BiPoly:
    return _tutte_dc(pairs, True)


def _tutte_subsets(n: int, pairs: tuple[tuple[int, int], ...]) -> BiPoly:
    k_e = _component_count(n, pairs)
    counts: dict[tuple[int, int], int] = {}
    for size in range(len(pairs) + 1):
        for subset in combinations(pairs, size):
            k_a = _component_count(n, subset)
            key = (k_a - k_e, k_a + size - n)
            counts[key] = counts.get(key, 0) + 1
    total = BiPoly()
    xm1 = _X - 1
    ym1 = _Y - 1
    for (a, b), c in counts.items():
        total = total + (xm1**a) * (ym1**b) * c
    return total


def external_activity_tutte(g: ColoredMultigraph) -> IntPoly:
    """T_g(1, q) for connected g, the zero polynomial otherwise."""
    if not is_connected(g):
        return IntPoly()
    return tutte(g).specialize_x(1)


def matrix_tree_count(g: ColoredMultigraph) -> int:
    """Determinant of the reduced Laplacian, computed over the rationals."""
    n = g.vertex_count
    lap = [[Fraction(0)] * n for _ in range(n)]
    for u, v in g.pairs():
        if u == v:
            continue
        lap[u - 1][u - 1] += 1
        lap[v - 1][v - 1] += 1
        lap[u - 1][v - 1] -= 1
        lap[v - 1][u - 1] -= 1
    m = [row[1:] for row in lap[1:]]
    size = n - 1
    det = Fraction(1)
    for col in range(size):
        piv = next((r for r in range(col, size) if m[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, size):
            f = m[r][col] / m[col][col]
            if f:
                for c in range(col, size):
                    m[r][c] -= f * m[col][c]
    assert det.denominator == 1
    return int(det)


def spanning_tree_count(g: ColoredMultigraph) -> int:
    if not is_connected(g):
        raise Disconnected("spanning trees need a connected graph")
    count = poly_eval(external_activity_subgraph_sum(g), 1)
    mt = matrix_tree_count(g)
    if count != mt:
        raise AssertionError(f"spanning-tree count {count} disagrees with Matrix-Tree {mt}")
    return count


def reliability(g: ColoredMultigraph, p) -> Fraction:
    """Probability that g stays connected when each edge is deleted with probability p.

    Evaluates (1-p)^{r-1} p^{|E|-r+1} T_g(1, 1/p), expanded as a polynomial in p
    so that p = 0 is covered.
    """
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise InvalidInput("p must lie in [0, 1]")
    if not is_connected(g):
        raise Disconnected("reliability is defined here for connected graphs")
    r = g.vertex_count
    b1 = g.edge_count - r + 1
    ext = external_activity_subgraph_sum(g)
    # p^{b1} R(1/p) = sum_j c_j p^{b1 - j}, and deg R <= b1
    scaled = sum((c * p ** (b1 - j) for j, c in enumerate(ext.coeffs)), Fraction(0))
    return (1 - p) ** (r - 1) * scaled
