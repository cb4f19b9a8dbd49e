"""Permutation groups through a base and strong generating set.

The stabilizer chain is built eagerly with the deterministic Schreier-Sims
algorithm.  Elements are held as numpy index arrays internally so that
groups acting on a few thousand Cayley-graph vertices stay cheap; the public
surface speaks :class:`~cayleyaut.perm.Perm`.
"""

from __future__ import annotations

import math
import random
from typing import Iterator, Sequence

import numpy as np

from .errors import CapacityError
from .perm import Perm, PermError, _trusted

ENUMERATION_BOUND = 10**6


class NotASubgroupError(ValueError):
    pass


def _dtype(degree: int):
    return np.int16 if degree < 2**15 else np.int32


def _inv(a: np.ndarray) -> np.ndarray:
    out = np.empty_like(a)
    out[a] = np.arange(len(a), dtype=a.dtype)
    return out


class _Level:
    __slots__ = ("point", "gens", "transversal")

    def __init__(self, point: int, gens: list[np.ndarray], ident: np.ndarray):
        self.point = point
        self.gens = gens
        self.transversal: dict[int, np.ndarray] = {}
        self.rebuild(ident)

    def rebuild(self, ident: np.ndarray):
        # BFS keeps coset representatives short and the orbit order deterministic
        trans = {self.point: ident}
        frontier = [self.point]
        while frontier:
            nxt = []
            for beta in frontier:
                u = trans[beta]
                for s in self.gens:
                    gamma = int(s[beta])
                    if gamma not in trans:
                        trans[gamma] = s[u]
                        nxt.append(gamma)
            frontier = nxt
        self.transversal = trans


class PermGroup:
    """A permutation group together with its stabilizer chain.

    Construction is the only mutating step; afterwards every query is
    read-only.  ``base`` may be given to force a prefix of the base, which
    is how point stabilizers are extracted.
    """

    def __init__(self, generators: Sequence[Perm], base: Sequence[int] = ()):
        generators = list(generators)
        if not generators:
            raise ValueError("need at least one generator")
        degree = generators[0].degree
        for g in generators:
            if g.degree != degree:
                raise PermError(f"mixed degrees {degree} and {g.degree}")
        self.degree = degree
        self.generators = generators
        self._dt = _dtype(degree)
        self._ident = np.arange(degree, dtype=self._dt)
        self._schreier_sims([int(b) for b in base])
        self.order = math.prod(len(lv.transversal) for lv in self._levels)

    # -- construction -------------------------------------------------

    def _schreier_sims(self, base_prefix: list[int]):
        ident = self._ident
        seen = set()
        strong: list[np.ndarray] = []
        for g in self.generators:
            arr = np.asarray(g.images, dtype=self._dt)
            key = arr.tobytes()
            if key in seen or np.array_equal(arr, ident):
                continue
            seen.add(key)
            strong.append(arr)

        base = list(dict.fromkeys(base_prefix))
        for g in strong:
            if all(g[b] == b for b in base):
                base.append(_first_moved(g))

        def level_gens(i):
            return [g for g in strong if all(g[b] == b for b in base[:i])]

        levels = [_Level(b, level_gens(i), ident) for i, b in enumerate(base)]
        i = len(levels) - 1
        while i >= 0:
            level = levels[i]
            restart = None
            for beta, u in list(level.transversal.items()):
                for s in level.gens:
                    su = s[u]
                    gamma = int(su[level.point])
                    h = _inv(level.transversal[gamma])[su]
                    h, j = self._strip(levels, h, i + 1)
                    if j < len(levels) or not np.array_equal(h, ident):
                        restart = (h, j)
                        break
                if restart:
                    break
            if restart is None:
                i -= 1
                continue
            h, j = restart
            strong.append(h)
            if j == len(levels):
                base.append(_first_moved(h))
                levels.append(_Level(base[-1], [], ident))
            for lv in range(i + 1, j + 1):
                levels[lv].gens = level_gens(lv)
                levels[lv].rebuild(ident)
            i = j

        # trailing levels with trivial orbits carry no information
        while levels and len(levels[-1].transversal) == 1 and levels[-1].point not in base_prefix:
            levels.pop()
        self._levels = levels
        self.base = tuple(lv.point for lv in levels)
        uniq = {g.tobytes(): g for g in strong}
        self._strong = sorted(uniq.values(), key=lambda a: tuple(a.tolist()))
        self.strong_generators = [_to_perm(g) for g in self._strong]

    @staticmethod
    def _strip(levels, h, start):
        for j in range(start, len(levels)):
            lv = levels[j]
            beta = int(h[lv.point])
            u = lv.transversal.get(beta)
            if u is None:
                return h, j
            h = _inv(u)[h]
        return h, len(levels)

    # -- queries ------------------------------------------------------

    def _as_array(self, p: Perm) -> np.ndarray:
        if p.degree != self.degree:
            raise PermError(f"degree mismatch: {p.degree} vs group degree {self.degree}")
        return np.asarray(p.images, dtype=self._dt)

    def _contains_array(self, a: np.ndarray) -> bool:
        h, j = self._strip(self._levels, a, 0)
        return j == len(self._levels) and np.array_equal(h, self._ident)

    def contains(self, p: Perm) -> bool:
        return self._contains_array(self._as_array(p))

    __contains__ = contains

    def orbit_sizes(self) -> list[int]:
        return [len(lv.transversal) for lv in self._levels]

    def orbit(self, point: int) -> list[int]:
        seen = {point}
        frontier = [point]
        while frontier:
            nxt = []
            for x in frontier:
                for g in self._strong:
                    y = int(g[x])
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return sorted(seen)

    def _iter_arrays(self) -> Iterator[np.ndarray]:
        levels = self._levels

        def rec(i, acc):
            if i < 0:
                yield acc
                return
            for u in levels[i].transversal.values():
                # g = g' * u with g' in the deeper stabilizer
                yield from rec(i - 1, u[acc])

        if not levels:
            yield self._ident
            return
        yield from rec(len(levels) - 1, self._ident)

    def elements(self, bound: int = ENUMERATION_BOUND) -> Iterator[Perm]:
        if self.order > bound:
            raise CapacityError("group order", self.order, bound)
        for a in self._iter_arrays():
            yield _to_perm(a)

    def random_element(self, rng: random.Random) -> Perm:
        acc = self._ident
        for lv in reversed(self._levels):
            keys = list(lv.transversal)
            acc = lv.transversal[keys[rng.randrange(len(keys))]][acc]
        return _to_perm(acc)

    def stabilizer(self, point: int) -> PermGroup:
        """Subgroup fixing ``point``, by rebuilding the chain with ``point`` first."""
        if not 0 <= point < self.degree:
            raise ValueError(f"point {point} outside 0..{self.degree - 1}")
        if self.base[:1] == (point,):
            chained = self
        else:
            chained = PermGroup(self.strong_generators, base=[point])
        gens = [g for g in chained.strong_generators if g.images[point] == point]
        if not gens:
            gens = [_to_perm(chained._ident)]
        return PermGroup(gens)

    def is_trivial(self) -> bool:
        return self.order == 1

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, order={self.order}, base={list(self.base)})"


def _first_moved(a: np.ndarray) -> int:
    return int(np.flatnonzero(a != np.arange(len(a)))[0])


def _to_perm(a: np.ndarray) -> Perm:
    return _trusted(tuple(int(x) for x in a.tolist()))


def group_from_generators(gens: Sequence[Perm], base: Sequence[int] = ()) -> PermGroup:
    return PermGroup(gens, base)


def trivial_group(n: int) -> PermGroup:
    return PermGroup([_trusted(tuple(range(n)))])


def order(G: PermGroup) -> int:
    return G.order


def contains(G: PermGroup, p: Perm) -> bool:
    return G.contains(p)


def is_subgroup(G: PermGroup, H: PermGroup) -> bool:
    return H.degree == G.degree and all(G.contains(h) for h in H.generators)


def is_normal_subgroup(G: PermGroup, H: PermGroup) -> bool:
    """True iff ``H`` is normal in ``G``; checked on generator conjugates."""
    if not is_subgroup(G, H):
        raise NotASubgroupError("H is not contained in G")
    for g in G.generators:
        ga = G._as_array(g)
        gi = _inv(ga)
        for h in H.generators:
            # g^-1 h g under apply-left-first composition
            c = ga[H._as_array(h)[gi]]
            if not H._contains_array(c):
                return False
    return True


def intersection_is_trivial(G: PermGroup, H: PermGroup, bound: int = ENUMERATION_BOUND) -> bool:
    if G.degree != H.degree:
        raise PermError("groups act on different degrees")
    small, big = (G, H) if G.order <= H.order else (H, G)
    if small.order > bound:
        raise CapacityError("smaller group order", small.order, bound)
    ident = small._ident
    for a in small._iter_arrays():
        if not np.array_equal(a, ident) and big._contains_array(a):
            return False
    return True


def center_is_trivial(G: PermGroup, bound: int = ENUMERATION_BOUND) -> bool:
    if G.order > bound:
        raise CapacityError("group order", G.order, bound)
    gens = [G._as_array(g) for g in G.generators]
    ident = G._ident
    for a in G._iter_arrays():
        if np.array_equal(a, ident):
            continue
        if all(np.array_equal(g[a], a[g]) for g in gens):
            return False
    return True


def recognize_dihedral(G: PermGroup, bound: int = ENUMERATION_BOUND) -> int | None:
    """Return ``m`` when ``G`` is dihedral of order ``2m`` (``m >= 3``), else None."""
    if G.order % 2 or G.order < 6:
        return None
    if G.order > bound:
        raise CapacityError("group order", G.order, bound)
    m = G.order // 2
    elems = list(G._iter_arrays())
    ident = G._ident

    def elem_order(a):
        k, x = 1, a
        while not np.array_equal(x, ident):
            x = a[x]
            k += 1
        return k

    involutions = [a for a in elems if not np.array_equal(a, ident) and np.array_equal(a[a], ident)]
    for r in elems:
        if elem_order(r) != m:
            continue
        r_inv = _inv(r)
        for t in involutions:
            # t^-1 r t == r^-1, and t is its own inverse
            if np.array_equal(t[r[t]], r_inv):
                return m
    return None


def is_full_symmetric(G: PermGroup, n: int) -> bool:
    if G.degree != n:
        raise PermError(f"group degree {G.degree} differs from n = {n}")
    return G.order == math.factorial(n)
