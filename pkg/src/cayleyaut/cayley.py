"""Cayley graphs Cay(S_n, S) on rank-indexed vertices, and the regular embeddings."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import CapacityError
from .perm import Perm, PermError, _trusted, format_cycles, inverse
from .tgraph import TranspositionSet

BUILD_BOUND = 8
DOT_BOUND = 4
FAMILIES = ("mbs", "bubble", "star")


def mbs_generators(n: int) -> TranspositionSet:
    """The n cyclically adjacent transpositions (1,2),...,(n-1,n),(n,1)."""
    if n < 3:
        raise ValueError(f"modified bubble-sort generators need n >= 3, got {n}")
    return TranspositionSet(n, tuple((i, i % n + 1) for i in range(1, n + 1)))


def family_generators(family: str, n: int) -> TranspositionSet:
    if family == "mbs":
        return mbs_generators(n)
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {FAMILIES}")
    if n < 2:
        raise ValueError(f"family {family!r} needs n >= 2, got {n}")
    if family == "bubble":
        return TranspositionSet(n, tuple((i, i + 1) for i in range(1, n)))
    return TranspositionSet(n, tuple((1, i) for i in range(2, n + 1)))


@lru_cache(maxsize=8)
def _elements(n: int) -> tuple[tuple[tuple[int, ...], ...], dict]:
    # itertools.permutations emits image tuples in lexicographic order, i.e. by rank
    perms = tuple(itertools.permutations(range(n)))
    return perms, {p: r for r, p in enumerate(perms)}


@dataclass(frozen=True, eq=False)
class CayleyGraph:
    n: int
    S: TranspositionSet
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def vertex_count(self) -> int:
        return len(self.adjacency)

    @property
    def degree(self) -> int:
        return len(self.S)

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def edges(self):
        for v, nbrs in enumerate(self.adjacency):
            for w in nbrs:
                if v < w:
                    yield v, w

    def vertex_perm(self, v: int) -> Perm:
        return _trusted(_elements(self.n)[0][v])

    def vertex_of(self, p: Perm) -> int:
        return _elements(self.n)[1][p.images]

    def to_dot(self, name: str = "Cay") -> str:
        if self.n > DOT_BOUND:
            raise CapacityError("n for DOT export", self.n, DOT_BOUND)
        perms = _elements(self.n)[0]
        label = lambda v: "".join(str(x + 1) for x in perms[v])
        lines = [f"graph {name} {{"]
        lines += [f'  {v} [label="{label(v)}"];' for v in range(self.vertex_count)]
        lines += [f"  {v} -- {w};" for v, w in self.edges()]
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_cayley(n: int, S: TranspositionSet, bound: int = BUILD_BOUND) -> CayleyGraph:
    """Vertex rank(h) is joined to rank(s*h) for every s in S."""
    if S.n != n:
        raise ValueError(f"generator set is on {S.n} points, not {n}")
    if n > bound:
        raise CapacityError("n", n, bound)
    if n < 3:
        raise ValueError(f"Cayley graphs are built for n >= 3, got {n}")
    if not len(S):
        raise ValueError("empty generator set")
    perms, index = _elements(n)
    swaps = [(i - 1, j - 1) for i, j in S.pairs]
    adjacency = []
    for h in perms:
        nbrs = []
        for i, j in swaps:
            # s*h: apply the transposition first, so positions i and j of h swap
            sh = list(h)
            sh[i], sh[j] = sh[j], sh[i]
            nbrs.append(index[tuple(sh)])
        adjacency.append(tuple(sorted(nbrs)))
    return CayleyGraph(n, S, tuple(adjacency))


def right_regular_embed(a: Perm, n: int) -> Perm:
    """R(a): rank(x) -> rank(x*a)."""
    if a.degree != n:
        raise PermError(f"degree mismatch: {a.degree} vs {n}")
    perms, index = _elements(n)
    ai = a.images
    return _trusted(tuple(index[tuple(ai[v] for v in x)] for x in perms))


def left_regular_embed(a: Perm, n: int) -> Perm:
    """lambda_a: rank(x) -> rank(a^-1 * x)."""
    if a.degree != n:
        raise PermError(f"degree mismatch: {a.degree} vs {n}")
    perms, index = _elements(n)
    ainv = inverse(a).images
    return _trusted(tuple(index[tuple(x[ainv[i]] for i in range(n))] for x in perms))


def vertex_label(n: int, v: int) -> str:
    return format_cycles(_trusted(_elements(n)[0][v]))
