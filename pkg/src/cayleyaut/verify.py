"""Machine checks of the direct-product decomposition Aut(X) = R(S_n) x lambda(Aut(T(S))).

Every flag in a :class:`DecompositionReport` is measured independently; the
verdict ``is_direct_product`` is only their conjunction.
"""

from __future__ import annotations

import math
import random
from dataclasses import asdict, dataclass, field
from typing import Optional

from .autsearch import automorphism_group, is_edge_preserving, vertex_stabilizer
from .cayley import (
    BUILD_BOUND,
    CayleyGraph,
    build_cayley,
    left_regular_embed,
    mbs_generators,
    right_regular_embed,
)
from .errors import CapacityError
from .groups import (
    NotASubgroupError,
    PermGroup,
    group_from_generators,
    intersection_is_trivial,
    is_normal_subgroup,
    recognize_dihedral,
)
from .perm import Perm, compose, conjugate, identity, inverse
from .tgraph import (
    TranspositionSet,
    build_transposition_graph,
    is_connected,
    normality_precheck,
    small_graph_automorphisms,
)

MBS_BOUND = 7


class PreconditionError(ValueError):
    pass


@dataclass
class DecompositionReport:
    n: int
    family: Optional[str]
    generators: list[str]
    aut_order: int
    r_order: int
    l_order: int
    t_aut_order: int
    lambda_all_automorphisms: bool
    r_normal_in_aut: bool
    l_normal_in_aut: bool
    intersection_trivial: bool
    orders_multiply: bool
    is_direct_product: bool
    dihedral_m: Optional[int]
    precheck: str
    stabilizer_order: int

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass
class Decomposition:
    """Groups behind a report, kept for follow-up checks."""

    X: CayleyGraph
    aut_t: PermGroup
    aut: PermGroup
    right: PermGroup
    left: PermGroup
    report: DecompositionReport = field(repr=False)


def right_group(X: CayleyGraph) -> PermGroup:
    """R(S_n), generated by the images of S (S generates S_n)."""
    return group_from_generators([right_regular_embed(s, X.n) for s in X.S.perms()])


def left_group(X: CayleyGraph, aut_t: PermGroup) -> PermGroup:
    return group_from_generators([left_regular_embed(a, X.n) for a in aut_t.generators])


def verify_lambda_automorphisms(X: CayleyGraph, aut_t: PermGroup) -> bool:
    # lambda is a homomorphism, so generators suffice
    return all(is_edge_preserving(X, left_regular_embed(a, X.n)) for a in aut_t.generators)


def is_normal_cayley(X: CayleyGraph, aut: PermGroup | None = None) -> bool:
    aut = aut if aut is not None else automorphism_group(X)
    return is_normal_subgroup(aut, right_group(X))


def verify_conjugation_fixes_generators(a: Perm, S: TranspositionSet) -> bool:
    """Does conjugation by ``a`` permute the transpositions of S?"""
    pairs = set(S.pairs)
    for s in S.perms():
        c = conjugate(s, a)
        moved = c.support()
        if (moved[0] + 1, moved[1] + 1) not in pairs:
            return False
    return True


def decompose(X: CayleyGraph, family: str | None = None) -> Decomposition:
    T = build_transposition_graph(X.S)
    if not is_connected(T):
        raise ValueError("transposition graph is disconnected; S does not generate S_n")
    aut_t = small_graph_automorphisms(T)
    aut = automorphism_group(X)
    right = right_group(X)
    left = left_group(X, aut_t)

    lambda_ok = verify_lambda_automorphisms(X, aut_t)
    r_normal = is_normal_subgroup(aut, right)
    try:
        l_normal = is_normal_subgroup(aut, left)
    except NotASubgroupError:
        l_normal = False
    trivial_meet = intersection_is_trivial(right, left)
    multiply = aut.order == right.order * left.order
    report = DecompositionReport(
        n=X.n,
        family=family,
        generators=X.S.to_strings(),
        aut_order=aut.order,
        r_order=right.order,
        l_order=left.order,
        t_aut_order=aut_t.order,
        lambda_all_automorphisms=lambda_ok,
        r_normal_in_aut=r_normal,
        l_normal_in_aut=l_normal,
        intersection_trivial=trivial_meet,
        orders_multiply=multiply,
        is_direct_product=lambda_ok and r_normal and l_normal and trivial_meet and multiply,
        dihedral_m=recognize_dihedral(left),
        precheck=normality_precheck(T).value,
        stabilizer_order=vertex_stabilizer(aut, X.vertex_of(identity(X.n))).order,
    )
    return Decomposition(X, aut_t, aut, right, left, report)


def verify_direct_product(X: CayleyGraph, family: str | None = None) -> DecompositionReport:
    return decompose(X, family).report


def verify_mbs_theorem(n: int, bound: int = MBS_BOUND) -> DecompositionReport:
    if n < 3:
        raise ValueError(f"modified bubble-sort graphs need n >= 3, got {n}")
    if n > bound:
        raise CapacityError("n", n, bound)
    X = build_cayley(n, mbs_generators(n), bound=max(bound, BUILD_BOUND))
    return verify_direct_product(X, family="mbs")


def mbs_report_consistent(report: DecompositionReport) -> bool:
    """Direct product with dihedral factor D_2n for n >= 5, no direct product below."""
    if report.n >= 5:
        return report.is_direct_product and report.dihedral_m == report.n
    return not report.is_direct_product


def verify_semidirect_stabilizer(X: CayleyGraph, aut: PermGroup | None = None) -> bool:
    """|Aut(X)_e| = |Aut(T(S))| and Aut(X)_e meets R(S_n) trivially."""
    aut = aut if aut is not None else automorphism_group(X)
    if not is_normal_cayley(X, aut):
        raise PreconditionError("Cayley graph is not normal")
    aut_t = small_graph_automorphisms(build_transposition_graph(X.S))
    stab = vertex_stabilizer(aut, X.vertex_of(identity(X.n)))
    return stab.order == aut_t.order and intersection_is_trivial(stab, right_group(X))


def factorize(X: CayleyGraph, w: Perm, aut_t: PermGroup, left: PermGroup) -> list[tuple[Perm, Perm]]:
    """All pairs (a, b), b in Aut(T(S)), with w = R(a) * lambda_b.

    w sends the identity vertex to b^-1 a, so each b fixes a = b * x0;
    the residual R(a)^-1 w must then be lambda_b, a member of ``left``.
    """
    x0 = X.vertex_perm(w.images[0])
    out = []
    for b in aut_t.elements():
        a = compose(b, x0)
        residual = compose(inverse(right_regular_embed(a, X.n)), w)
        if left.contains(residual) and residual == left_regular_embed(b, X.n):
            out.append((a, b))
    return out


def check_unique_factorization(dec: Decomposition, samples: int = 50, seed: int = 0) -> tuple[int, int]:
    """Factor random automorphisms; returns (unique, total)."""
    rng = random.Random(seed)
    unique = 0
    for _ in range(samples):
        w = dec.aut.random_element(rng)
        if len(factorize(dec.X, w, dec.aut_t, dec.left)) == 1:
            unique += 1
    return unique, samples


def conjugation_closure(dec: Decomposition) -> bool:
    """g^-1 lambda_c g lies in lambda(Aut(T(S))) for generators g of Aut(X), c of Aut(T(S))."""
    for g in dec.aut.generators:
        gi = inverse(g)
        for c in dec.aut_t.generators:
            lc = left_regular_embed(c, dec.X.n)
            if not dec.left.contains(compose(compose(gi, lc), g)):
                return False
    return True


def expected_mbs_order(n: int) -> int:
    return math.factorial(n) * 2 * n
