"""Non-vanishing Jantzen coefficients and their linkage classes.

``J_{lambda,mu} != 0`` exactly when ``mu`` comes from ``lambda`` by unwrapping
a rim hook ``R_ac`` and wrapping it back on with its hand node in column ``b``
(``b < c``), where the hook lengths at ``(a, b)`` and ``(a, c)`` have different
``nu_{e,p}`` valuations.  The column form of the same criterion is computed
independently and serves as a cross-check.
"""

from __future__ import annotations

from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

from .hooks import remove_rim_hook, wrap_hook_candidates
from .partitions import (ArithmeticParams, Node, Partition, conjugate, hook_lengths,
                         strictly_dominates, _check_same_size)


def p_valuation(n: int, p: int) -> int:
    if p == 0:
        return 0
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def nu_ep(h: int, params: ArithmeticParams) -> int:
    """0 if ``e`` does not divide ``h``, else ``nu_p(h / e) + 1``."""
    if h < 1:
        raise ValueError(f"valuation needs a positive integer, got {h}")
    if h % params.e:
        return 0
    return p_valuation(h // params.e, params.p) + 1


@dataclass(frozen=True, order=True)
class JantzenEdge:
    """A non-zero coefficient ``J_{upper,lower}`` with the hook move behind it.

    ``sign`` is ``None`` (unknown) unless signs were requested.  Edges found
    from the column side carry ``col_witness`` instead of ``row_witness``.
    """

    upper: Partition
    lower: Partition
    moved_size: int
    magnitude: int
    row_witness: Optional[tuple[Node, Node]] = None
    col_witness: Optional[tuple[Node, Node]] = None
    sign: Optional[int] = None


def row_hook_moves(lam: Partition):
    """Every move of ``R_ac`` back onto ``lam`` with its hand node in column ``b < c``.

    Yields ``(a, b, c, mu, wrapped_hook)``; no valuation or dominance test is
    applied, and ``mu`` may fail to be dominated by ``lam``.
    """
    lam_c = conjugate(lam)
    for a in range(1, len(lam) + 1):
        for c in range(2, lam.part(a) + 1):
            h = lam.part(a) - a + lam_c.part(c) - c + 1
            for mu, info in wrap_hook_candidates(remove_rim_hook(lam, (a, c)), h):
                if info.hand.col < c:
                    yield a, info.hand.col, c, mu, info


@lru_cache(maxsize=None)
def jantzen_partners(lam: Partition, params: ArithmeticParams,
                     signs: bool = False) -> frozenset[JantzenEdge]:
    """Every ``mu`` with ``J_{lam,mu} != 0``, by rim-hook surgery on rows."""
    hooks = hook_lengths(lam)
    lam_c = conjugate(lam)
    out = set()
    for a, b, c, mu, info in row_hook_moves(lam):
        hb, hc = hooks[a - 1][b - 1], hooks[a - 1][c - 1]
        vb, vc = nu_ep(hb, params), nu_ep(hc, params)
        if vb == vc or not strictly_dominates(lam, mu):
            continue
        out.add(JantzenEdge(
            upper=lam, lower=mu, moved_size=hc, magnitude=abs(vb - vc),
            row_witness=(Node(a, b), Node(a, c)),
            sign=(-1) ** (lam_c.part(c) - a + info.leg) if signs else None,
        ))
    return frozenset(out)


@lru_cache(maxsize=None)
def jantzen_partners_by_columns(mu: Partition, params: ArithmeticParams) -> frozenset[JantzenEdge]:
    """Every ``lam`` with ``J_{lam,mu} != 0``, by rim-hook surgery on columns.

    For rows ``x < y`` of a column ``z`` with different valuations, unwrap
    ``R_yz`` and wrap it back on with its foot node in row ``x``.
    """
    hooks = hook_lengths(mu)
    mu_c = conjugate(mu)
    out = set()
    for z in range(1, mu.part(1) + 1):
        col = [hooks[i - 1][z - 1] for i in range(1, mu_c.part(z) + 1)]
        vals = [nu_ep(h, params) for h in col]
        for y in range(2, len(col) + 1):
            h = col[y - 1]
            by_foot = {}
            for lam, info in wrap_hook_candidates(remove_rim_hook(mu, (y, z)), h):
                by_foot.setdefault(info.foot.row, []).append(lam)
            for x in range(1, y):
                if vals[x - 1] == vals[y - 1]:
                    continue
                for lam in by_foot.get(x, ()):
                    if strictly_dominates(lam, mu):
                        out.add(JantzenEdge(
                            upper=lam, lower=mu, moved_size=h,
                            magnitude=abs(vals[x - 1] - vals[y - 1]),
                            col_witness=(Node(x, z), Node(y, z)),
                        ))
    return frozenset(out)


def jantzen_nonzero(lam: Partition, mu: Partition, params: ArithmeticParams) -> bool:
    _check_same_size(lam, mu)
    return any(edge.lower == mu for edge in jantzen_partners(lam, params))


@dataclass(frozen=True)
class JantzenGraph:
    vertices: frozenset[Partition]
    edges: tuple[JantzenEdge, ...]

    def adjacency(self) -> dict[Partition, set[Partition]]:
        adj = {v: set() for v in self.vertices}
        for edge in self.edges:
            adj[edge.upper].add(edge.lower)
            adj[edge.lower].add(edge.upper)
        return adj


def jantzen_graph(vertices: Iterable[Partition], params: ArithmeticParams,
                  threads: int = 1, signs: bool = False) -> JantzenGraph:
    """The Jantzen edges with both ends in ``vertices``."""
    verts = frozenset(vertices)
    order = sorted(verts, reverse=True)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            found = list(pool.map(lambda lam: jantzen_partners(lam, params, signs), order))
    else:
        found = [jantzen_partners(lam, params, signs) for lam in order]
    edges = [edge for partners in found for edge in sorted(partners) if edge.lower in verts]
    return JantzenGraph(verts, tuple(edges))


class UnionFind:
    """Disjoint sets with path halving and union by size."""

    def __init__(self, items=()):
        self.parent = {}
        self.size = {}
        for x in items:
            self.add(x)

    def add(self, x):
        if x not in self.parent:
            self.parent[x] = x
            self.size[x] = 1

    def find(self, x):
        self.add(x)
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]

    def groups(self) -> list[frozenset]:
        out = {}
        for x in self.parent:
            out.setdefault(self.find(x), set()).add(x)
        return [frozenset(g) for g in out.values()]


def linkage_classes(graph: JantzenGraph) -> list[frozenset[Partition]]:
    """Connected components, ordered by their lexicographically largest member."""
    uf = UnionFind(graph.vertices)
    for edge in graph.edges:
        uf.union(edge.upper, edge.lower)
    return sorted(uf.groups(), key=max, reverse=True)


def edge_path(graph: JantzenGraph, src: Partition, dst: Partition) -> Optional[list[Partition]]:
    """A shortest chain of Jantzen edges from ``src`` to ``dst``, if any."""
    adj = graph.adjacency()
    prev = {src: None}
    queue = deque([src])
    while queue:
        v = queue.popleft()
        if v == dst:
            path = []
            while v is not None:
                path.append(v)
                v = prev[v]
            return path[::-1]
        for w in sorted(adj[v], reverse=True):
            if w not in prev:
                prev[w] = v
                queue.append(w)
    return None
