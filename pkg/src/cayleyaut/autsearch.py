"""Automorphism groups of simple undirected graphs.

Two independent routes:

* :func:`automorphism_group` -- individualization-refinement.  A first path
  down the search tree fixes a base; the stabilizer chain along that base is
  filled bottom-up, and each level only searches for images of its base point
  that are not already in the orbit of the generators found so far.
* :func:`brute_force_automorphisms` -- plain DFS over vertex images, kept as
  the oracle for small graphs.
"""

from __future__ import annotations

import hashlib
import logging
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import CapacityError
from .groups import PermGroup, group_from_generators, trivial_group
from .perm import Perm, PermError, _trusted

log = logging.getLogger(__name__)

SEARCH_BOUND = 10080
ORACLE_BOUND = 40


@dataclass(frozen=True, eq=False)
class SimpleGraph:
    adjacency: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, n: int, edges) -> SimpleGraph:
        adj = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError("loops are not allowed")
            adj[u].add(v)
            adj[v].add(u)
        return cls(tuple(tuple(sorted(a)) for a in adj))

    @property
    def vertex_count(self) -> int:
        return len(self.adjacency)

    def edges(self):
        for v, nbrs in enumerate(self.adjacency):
            for w in nbrs:
                if v < w:
                    yield v, w


def cycle_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> SimpleGraph:
    return SimpleGraph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> SimpleGraph:
    return SimpleGraph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


class _Arrays:
    """Padded neighbor table; padding index ``N`` is a sentinel of color -1."""

    def __init__(self, graph):
        adj = graph.adjacency
        self.N = N = len(adj)
        d = max((len(a) for a in adj), default=0)
        nbr = np.full((N, max(d, 1)), N, dtype=np.int64)
        for v, a in enumerate(adj):
            nbr[v, : len(a)] = sorted(a)
        self.nbr = nbr
        self.nbr_sorted = np.sort(nbr, axis=1)

    def refine(self, colors: np.ndarray) -> tuple[np.ndarray, bytes]:
        """Coarsest equitable refinement with canonical color names, plus a trace digest."""
        h = hashlib.blake2b(digest_size=16)
        k = int(colors.max()) + 1 if len(colors) else 0
        while True:
            ext = np.append(colors, -1)
            rows = np.column_stack([colors, np.sort(ext[self.nbr], axis=1)])
            uniq, new = np.unique(rows, axis=0, return_inverse=True)
            new = new.reshape(-1)
            h.update(uniq.tobytes())
            if len(uniq) == k:
                return colors, h.digest()
            colors, k = new, len(uniq)

    def is_automorphism(self, g: np.ndarray) -> bool:
        gext = np.append(g, self.N)
        mapped = np.sort(gext[self.nbr], axis=1)
        return bool(np.array_equal(mapped, self.nbr_sorted[g]))


def _individualize(colors: np.ndarray, v: int) -> np.ndarray:
    c = colors * 2
    c[v] += 1
    _, out = np.unique(c, return_inverse=True)
    return out.reshape(-1)


def _target_cell(colors: np.ndarray) -> np.ndarray | None:
    counts = np.bincount(colors)
    nonsingle = np.flatnonzero(counts > 1)
    if len(nonsingle) == 0:
        return None
    sizes = counts[nonsingle]
    color = nonsingle[np.argmin(sizes)]  # argmin picks the first, i.e. smallest color id
    return np.flatnonzero(colors == color)


def _leaf_map(first: np.ndarray, other: np.ndarray) -> np.ndarray:
    g = np.empty_like(first)
    g[np.argsort(first)] = np.argsort(other)
    return g


def _check_graph(graph, bound):
    n = graph.vertex_count
    if n > bound:
        raise CapacityError("vertex count", n, bound)
    for v, nbrs in enumerate(graph.adjacency):
        if v in nbrs:
            raise ValueError(f"loop at vertex {v}")
    return n


@dataclass
class SearchStats:
    nodes: int = 0
    leaves: int = 0
    failed_searches: int = 0


def automorphism_group(graph, bound: int = SEARCH_BOUND, stats: SearchStats | None = None) -> PermGroup:
    N = _check_graph(graph, bound)
    if N == 0:
        raise ValueError("empty graph")
    arr = _Arrays(graph)
    stats = stats if stats is not None else SearchStats()

    # first path
    colors, trace = arr.refine(np.zeros(N, dtype=np.int64))
    path = [(colors, trace)]
    base: list[int] = []
    cells: list[np.ndarray] = []
    while (cell := _target_cell(colors)) is not None:
        v = int(cell[0])
        base.append(v)
        cells.append(cell)
        colors, trace = arr.refine(_individualize(colors, v))
        path.append((colors, trace))
    first_leaf = colors
    depth = len(base)

    def descend(colors, j):
        # node at depth j whose trace already matches path[j]
        stats.nodes += 1
        if j == depth:
            stats.leaves += 1
            g = _leaf_map(first_leaf, colors)
            return g if arr.is_automorphism(g) else None
        for u in _target_cell(colors):
            child, tr = arr.refine(_individualize(colors, int(u)))
            if tr != path[j + 1][1]:
                continue
            found = descend(child, j + 1)
            if found is not None:
                return found
        return None

    gens: list[np.ndarray] = []
    orbit_sizes = []
    for i in range(depth - 1, -1, -1):
        level_gens = [g for g in gens if all(g[b] == b for b in base[:i])]
        orbit = _orbit(base[i], level_gens)
        parent_colors = path[i][0]
        for w in cells[i]:
            w = int(w)
            if w in orbit:
                continue
            child, tr = arr.refine(_individualize(parent_colors, w))
            g = descend(child, i + 1) if tr == path[i + 1][1] else None
            if g is None or g[base[i]] != w or any(g[b] != b for b in base[:i]):
                stats.failed_searches += 1
                continue
            gens.append(g)
            level_gens.append(g)
            orbit = _orbit(base[i], level_gens)
        orbit_sizes.append(len(orbit))
        log.debug("level %d base point %d orbit %d", i, base[i], len(orbit))

    expected = 1
    for s in orbit_sizes:
        expected *= s
    if not gens:
        return trivial_group(N)
    group = group_from_generators([_trusted(tuple(g.tolist())) for g in gens], base=base)
    if group.order != expected:
        raise RuntimeError(f"search orbit product {expected} disagrees with Schreier-Sims order {group.order}")
    return group


def _orbit(point: int, gens: Sequence[np.ndarray]) -> set[int]:
    orbit = {point}
    frontier = [point]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = int(g[x])
                if y not in orbit:
                    orbit.add(y)
                    nxt.append(y)
        frontier = nxt
    return orbit


def equitable_refine(graph, coloring: Sequence[int]) -> np.ndarray:
    """Coarsest equitable refinement of ``coloring``, colors renamed to 0..k-1."""
    colors = np.asarray(coloring, dtype=np.int64)
    if len(colors) != graph.vertex_count:
        raise ValueError("coloring length differs from vertex count")
    _, colors = np.unique(colors, return_inverse=True)
    refined, _ = _Arrays(graph).refine(colors.reshape(-1))
    return refined


def is_edge_preserving(graph, p: Perm) -> bool:
    if p.degree != graph.vertex_count:
        raise PermError(f"degree mismatch: {p.degree} vs {graph.vertex_count} vertices")
    adj = [set(a) for a in graph.adjacency]
    img = p.images
    return all(img[w] in adj[img[v]] for v, nbrs in enumerate(graph.adjacency) for w in nbrs)


def brute_force_automorphisms(graph, bound: int = ORACLE_BOUND) -> PermGroup:
    """All automorphisms by DFS, returned as the group they form.

    Every enumerated automorphism is sifted; only the ones not yet generated
    become generators.  The raw count must equal the resulting order.
    """
    N = _check_graph(graph, bound)
    adj = [set(a) for a in graph.adjacency]
    deg = [len(a) for a in adj]

    # BFS order so that most new vertices already have a mapped neighbor
    order, seen = [], set()
    for r in range(N):
        if r in seen:
            continue
        seen.add(r)
        queue = [r]
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in sorted(adj[v]):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)

    mapping = [-1] * N
    used = [False] * N
    found: list[Perm] = []
    count = 0
    group = trivial_group(N)

    def rec(k):
        nonlocal count, group
        if k == N:
            count += 1
            p = _trusted(tuple(mapping))
            if not group.contains(p):
                found.append(p)
                group = group_from_generators(found)
            return
        v = order[k]
        for w in range(N):
            if used[w] or deg[w] != deg[v]:
                continue
            ok = True
            for u in order[:k]:
                if (u in adj[v]) != (mapping[u] in adj[w]):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used[w] = True
            rec(k + 1)
            used[w] = False
            mapping[v] = -1

    rec(0)
    if group.order != count:
        raise RuntimeError(f"enumerated {count} automorphisms but they generate {group.order}")
    return group


def vertex_stabilizer(A: PermGroup, v: int) -> PermGroup:
    return A.stabilizer(v)
