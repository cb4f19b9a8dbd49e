"""Transposition sets and their transposition graphs T(S)."""

from __future__ import annotations

import enum
import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .errors import CapacityError
from .groups import PermGroup, group_from_generators
from .perm import Perm, PermError, _trusted, parse_cycle_words, transposition

AUT_POINT_BOUND = 12


@dataclass(frozen=True)
class TranspositionSet:
    """Generator set S: unordered 1-based pairs ``(i, j)`` with ``i < j``."""

    n: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        norm = []
        for i, j in self.pairs:
            i, j = int(i), int(j)
            if i == j:
                raise ValueError(f"({i},{j}) is not a transposition")
            if i > j:
                i, j = j, i
            if not (1 <= i and j <= self.n):
                raise ValueError(f"pair ({i},{j}) out of range 1..{self.n}")
            norm.append((i, j))
        if len(set(norm)) != len(norm):
            raise ValueError("repeated transposition")
        if not norm and self.n != 1:
            raise ValueError("empty transposition set")
        # insertion order is kept: it fixes the generator order everywhere downstream
        object.__setattr__(self, "pairs", tuple(norm))

    @classmethod
    def from_perms(cls, perms: Iterable[Perm]) -> TranspositionSet:
        perms = list(perms)
        if not perms:
            raise ValueError("empty transposition set")
        pairs = []
        for p in perms:
            moved = p.support()
            if len(moved) != 2:
                raise ValueError(f"{p} is not a transposition")
            pairs.append((moved[0] + 1, moved[1] + 1))
        return cls(perms[0].degree, tuple(pairs))

    @classmethod
    def parse(cls, text: str, n: int) -> TranspositionSet:
        """Parse ``"(1,2),(2,3)"``; every cycle must be a 2-cycle."""
        return cls.from_perms(parse_cycle_words(text, n))

    def perms(self) -> list[Perm]:
        return [transposition(i, j, self.n) for i, j in self.pairs]

    def __contains__(self, pair) -> bool:
        i, j = pair
        return (min(i, j), max(i, j)) in set(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def to_strings(self) -> list[str]:
        return [f"({i},{j})" for i, j in self.pairs]


@dataclass(frozen=True)
class TranspositionGraph:
    n: int
    edges: frozenset[frozenset[int]]  # 1-based endpoints
    adjacency: tuple[frozenset[int], ...]  # entry v-1 holds the 1-based neighbors of v

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        """1-based neighbors of 1-based vertex ``v``."""
        return self.adjacency[v - 1]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v - 1])

    def to_dot(self, name: str = "T") -> str:
        lines = [f"graph {name} {{"]
        lines += [f"  {v};" for v in range(1, self.n + 1)]
        for i, j in sorted(tuple(sorted(e)) for e in self.edges):
            lines.append(f"  {i} -- {j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


class Precheck(str, enum.Enum):
    TREE_NORMAL = "TREE_NORMAL"
    GIRTH5_NORMAL = "GIRTH5_NORMAL"
    SMALL_CYCLE_NONNORMAL = "SMALL_CYCLE_NONNORMAL"
    UNKNOWN = "UNKNOWN"


def build_transposition_graph(S: TranspositionSet) -> TranspositionGraph:
    adj = [set() for _ in range(S.n)]
    for i, j in S.pairs:
        adj[i - 1].add(j)
        adj[j - 1].add(i)
    edges = frozenset(frozenset(p) for p in S.pairs)
    return TranspositionGraph(S.n, edges, tuple(frozenset(a) for a in adj))


def is_connected(T: TranspositionGraph) -> bool:
    seen = {1}
    queue = deque([1])
    while queue:
        v = queue.popleft()
        for w in T.neighbors(v):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == T.n


def generates_symmetric_group(T: TranspositionGraph) -> bool:
    return is_connected(T)


def is_tree(T: TranspositionGraph) -> bool:
    return is_connected(T) and T.edge_count == T.n - 1


def is_cycle_graph(T: TranspositionGraph) -> bool:
    return T.n >= 3 and is_connected(T) and all(T.degree(v) == 2 for v in range(1, T.n + 1))


def girth(T: TranspositionGraph) -> float:
    """Shortest cycle length, ``math.inf`` for forests."""
    best = math.inf
    for root in range(1, T.n + 1):
        dist = {root: 0}
        parent = {root: 0}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in T.neighbors(v):
                if w not in dist:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif parent[v] != w:
                    best = min(best, dist[v] + dist[w] + 1)
    return best


def _vertex_invariant(T: TranspositionGraph, v: int):
    return (T.degree(v), tuple(sorted(T.degree(w) for w in T.neighbors(v))))


def _find_automorphism(T: TranspositionGraph, fixed: list[int], target: int, cand) -> list[int] | None:
    """Backtrack for an automorphism fixing ``fixed`` (0-based) pointwise and
    sending the next point ``len(fixed)`` to ``target``."""
    n = T.n
    adj = [set(w - 1 for w in T.adjacency[v]) for v in range(n)]
    mapping = [-1] * n
    used = [False] * n
    for x in fixed:
        mapping[x] = x
        used[x] = True
    k = len(fixed)
    if used[target]:
        return None
    mapping[k] = target
    used[target] = True

    def consistent(v):
        img = mapping[v]
        for u in range(n):
            if mapping[u] < 0 or u == v:
                continue
            if (u in adj[v]) != (mapping[u] in adj[img]):
                return False
        return True

    if not all(consistent(v) for v in range(k + 1)):
        return None

    def rec(v):
        if v == n:
            return True
        for w in cand[v]:
            if used[w]:
                continue
            mapping[v] = w
            used[w] = True
            if consistent(v) and rec(v + 1):
                return True
            used[w] = False
            mapping[v] = -1
        return False

    return list(mapping) if rec(k + 1) else None


def small_graph_automorphisms(T: TranspositionGraph, bound: int = AUT_POINT_BOUND) -> PermGroup:
    """Aut(T) as a group on the n points.

    Generators come from a point-stabilizer chain along the base 1, 2, ...,
    n: for each level the orbit of the next point is filled by backtracking
    searches, skipping images already reached by known generators.
    """
    n = T.n
    if n > bound:
        raise CapacityError("transposition graph vertices", n, bound)
    inv = [_vertex_invariant(T, v + 1) for v in range(n)]
    cand = [[w for w in range(n) if inv[w] == inv[v]] for v in range(n)]
    gens: list[Perm] = []
    for level in range(n - 1, -1, -1):
        level_gens = [g for g in gens if all(g.images[x] == x for x in range(level))]
        orbit = {level}
        frontier = [level]

        def grow():
            nonlocal frontier
            while frontier:
                nxt = []
                for x in frontier:
                    for g in level_gens:
                        y = g.images[x]
                        if y not in orbit:
                            orbit.add(y)
                            nxt.append(y)
                frontier = nxt

        grow()
        for w in cand[level]:
            if w in orbit:
                continue
            found = _find_automorphism(T, list(range(level)), w, cand)
            if found is not None:
                g = _trusted(tuple(found))
                gens.append(g)
                level_gens.append(g)
                frontier = list(orbit)
                grow()
    if not gens:
        gens = [_trusted(tuple(range(n)))]
    return group_from_generators(gens)


def maps_edges_to_edges(T: TranspositionGraph, a: Perm) -> bool:
    """Pair action {i,j} -> {i^a, j^a} preserves the edge set."""
    if a.degree != T.n:
        raise PermError("degree mismatch")
    return all(frozenset(a.images[x - 1] + 1 for x in e) in T.edges for e in T.edges)


def normality_precheck(T: TranspositionGraph) -> Precheck:
    """Classify T(S) against the known normality results for Cay(S_n, S).

    Advisory only: trees and girth >= 5 are known normal, the 3- and
    4-cycles known non-normal, everything else is UNKNOWN.
    """
    if not is_connected(T):
        raise ValueError("transposition graph is disconnected; S does not generate S_n")
    if is_tree(T):
        return Precheck.TREE_NORMAL
    if girth(T) >= 5:
        return Precheck.GIRTH5_NORMAL
    if is_cycle_graph(T) and T.n in (3, 4):
        return Precheck.SMALL_CYCLE_NONNORMAL
    return Precheck.UNKNOWN
