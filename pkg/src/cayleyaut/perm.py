"""Permutations of {0..n-1} with right-action composition.

Points are 0-based internally and 1-based in every textual form.  Products
follow the exponent convention ``x^(pq) = (x^p)^q``: ``compose(p, q)``
applies ``p`` first.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Sequence


class PermError(ValueError):
    pass


class CycleParseError(PermError):
    """Malformed cycle notation; ``position`` is a 0-based offset into the text."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


@dataclass(frozen=True, slots=True)
class Perm:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if not images:
            raise PermError("degree must be at least 1")
        if sorted(images) != list(range(len(images))):
            raise PermError(f"not a bijection of 0..{len(images) - 1}: {images}")
        object.__setattr__(self, "images", images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: Perm) -> Perm:
        return compose(self, other)

    def __invert__(self) -> Perm:
        return inverse(self)

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def support(self) -> list[int]:
        return [i for i, x in enumerate(self.images) if i != x]

    def one_line(self) -> list[int]:
        """1-based image list, e.g. ``[2, 1, 3]``."""
        return [x + 1 for x in self.images]

    def __str__(self) -> str:
        return format_cycles(self)

    def __repr__(self) -> str:
        return f"Perm({format_cycles(self)!r}, n={self.degree})"


def _trusted(images: tuple[int, ...]) -> Perm:
    # skips validation; only for images known to be bijections
    p = object.__new__(Perm)
    object.__setattr__(p, "images", images)
    return p


def identity(n: int) -> Perm:
    if n < 1:
        raise PermError("degree must be at least 1")
    return _trusted(tuple(range(n)))


def from_one_line(values: Sequence[int]) -> Perm:
    """Build from 1-based images."""
    return Perm(tuple(v - 1 for v in values))


def transposition(i: int, j: int, n: int) -> Perm:
    """The transposition swapping 1-based points ``i`` and ``j``."""
    if not (1 <= i <= n and 1 <= j <= n) or i == j:
        raise PermError(f"bad transposition ({i},{j}) on {n} points")
    images = list(range(n))
    images[i - 1], images[j - 1] = j - 1, i - 1
    return _trusted(tuple(images))


def _check_degrees(p: Perm, q: Perm):
    if p.degree != q.degree:
        raise PermError(f"degree mismatch: {p.degree} vs {q.degree}")


def compose(p: Perm, q: Perm) -> Perm:
    """Apply ``p`` then ``q``."""
    _check_degrees(p, q)
    qi = q.images
    return _trusted(tuple(qi[x] for x in p.images))


def inverse(p: Perm) -> Perm:
    inv = [0] * p.degree
    for i, x in enumerate(p.images):
        inv[x] = i
    return _trusted(tuple(inv))


def conjugate(s: Perm, a: Perm) -> Perm:
    """``a^-1 s a``; sends the transposition (i,j) to (i^a, j^a)."""
    _check_degrees(s, a)
    return compose(compose(inverse(a), s), a)


def power(p: Perm, k: int) -> Perm:
    if k < 0:
        return power(inverse(p), -k)
    result = identity(p.degree)
    base = p
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


def cycles(p: Perm) -> list[tuple[int, ...]]:
    """Non-trivial cycles, 0-based, each starting at its smallest point."""
    seen = set()
    out = []
    for start in range(p.degree):
        if start in seen or p.images[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        x = p.images[start]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = p.images[x]
        out.append(tuple(cyc))
    return out


def perm_order(p: Perm) -> int:
    return math.lcm(1, *(len(c) for c in cycles(p)))


def format_cycles(p: Perm) -> str:
    cs = cycles(p)
    if not cs:
        return "()"
    return "".join("(" + ",".join(str(x + 1) for x in c) + ")" for c in cs)


_TOKEN = re.compile(r"\s*(?:(\()|(\))|(,)|(\d+)|(\S))")


def _parse_cycle_list(text: str, n: int) -> list[list[int]]:
    """Tokenize ``(1,2),(2,3)`` style text into 1-based cycles."""
    result: list[list[int]] = []
    current: list[int] | None = None
    expect_number = False
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # trailing whitespace only
            break
        start = m.start(m.lastindex) if m.lastindex else m.end()
        open_, close, comma, num, junk = m.groups()
        pos = m.end()
        if junk is not None:
            raise CycleParseError(f"unexpected character {junk!r}", start)
        if current is None:
            if open_:
                current = []
                expect_number = True
            elif comma:
                if not result:
                    raise CycleParseError("leading comma", start)
            else:
                raise CycleParseError("expected '('", start)
            continue
        if expect_number:
            if num is None:
                if close and not current:
                    raise CycleParseError("empty cycle", start)
                raise CycleParseError("expected a point", start)
            value = int(num)
            if not 1 <= value <= n:
                raise CycleParseError(f"point {value} out of range 1..{n}", start)
            if value in current:
                raise CycleParseError(f"point {value} repeated in cycle", start)
            current.append(value)
            expect_number = False
        elif comma:
            expect_number = True
        elif close:
            if len(current) < 2:
                raise CycleParseError("cycle needs at least two points", start)
            result.append(current)
            current = None
        else:
            raise CycleParseError("expected ',' or ')'", start)
    if current is not None:
        raise CycleParseError("unclosed '('", len(text))
    return result


def parse_cycles(text: str, n: int) -> Perm:
    """Parse 1-based cycle notation.  Cycles are multiplied left to right.

    ``"()"`` and the empty string both denote the identity.
    """
    if n < 1:
        raise PermError("degree must be at least 1")
    if re.fullmatch(r"\s*(\(\s*\)\s*)?", text):
        return identity(n)
    result = identity(n)
    for cyc in _parse_cycle_list(text, n):
        images = list(range(n))
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            images[a - 1] = b - 1
        result = compose(result, _trusted(tuple(images)))
    return result


def parse_cycle_words(text: str, n: int) -> list[Perm]:
    """Parse a generator list: each cycle in the text becomes its own Perm."""
    if n < 1:
        raise PermError("degree must be at least 1")
    out = []
    for cyc in _parse_cycle_list(text, n):
        images = list(range(n))
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            images[a - 1] = b - 1
        out.append(_trusted(tuple(images)))
    return out


def rank(p: Perm) -> int:
    """Lexicographic rank of the image list (Lehmer code)."""
    n = p.degree
    # Fenwick tree over still-unused values
    tree = [0] * (n + 1)
    for i in range(1, n + 1):
        tree[i] += 1
        j = i + (i & -i)
        if j <= n:
            tree[j] += tree[i]

    def prefix(i):
        s = 0
        while i > 0:
            s += tree[i]
            i -= i & -i
        return s

    r = 0
    for pos, x in enumerate(p.images):
        smaller = prefix(x)
        r = r * (n - pos) + smaller
        i = x + 1
        while i <= n:
            tree[i] -= 1
            i += i & -i
    return r


def unrank(r: int, n: int) -> Perm:
    if n < 1:
        raise PermError("degree must be at least 1")
    if not 0 <= r < math.factorial(n):
        raise PermError(f"rank {r} out of range for degree {n}")
    digits = []
    for base in range(1, n + 1):
        r, d = divmod(r, base)
        digits.append(d)
    digits.reverse()
    pool = list(range(n))
    return _trusted(tuple(pool.pop(d) for d in digits))


def all_perms(n: int) -> Iterable[Perm]:
    """All degree-n permutations in rank order."""
    import itertools

    for t in itertools.permutations(range(n)):
        yield _trusted(t)
