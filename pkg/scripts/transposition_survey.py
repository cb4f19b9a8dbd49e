"""Survey every connected transposition graph on n points up to isomorphism.

For each one, compare the literature precheck with measured normality and
record whether the direct-product decomposition holds.  Also counts how
often |Aut(X)| = n! |Aut(T(S))| coincides with normality.

    python scripts/transposition_survey.py --n 5
"""

import argparse
import itertools
import math
from collections import Counter
from dataclasses import dataclass

import networkx as nx

from cayleyaut.cayley import build_cayley
from cayleyaut.tgraph import TranspositionSet
from cayleyaut.verify import verify_direct_product


@dataclass
class Config:
    n: int = 4
    max_edges: int | None = None


def connected_graphs(n, max_edges=None):
    """One representative per isomorphism class of connected graphs on n vertices."""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    seen: list[nx.Graph] = []
    top = len(pairs) if max_edges is None else min(max_edges, len(pairs))
    for m in range(n - 1, top + 1):
        for edges in itertools.combinations(pairs, m):
            g = nx.Graph(edges)
            if g.number_of_nodes() != n or not nx.is_connected(g):
                continue
            if any(nx.is_isomorphic(g, h) for h in seen if h.number_of_edges() == m):
                continue
            seen.append(g)
            yield edges


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, default=Config.n)
    p.add_argument("--max-edges", type=int)
    a = p.parse_args()
    cfg = Config(a.n, a.max_edges)

    tally = Counter()
    print(f"{'edges':<40} {'precheck':<22} {'|Aut|':>7} {'normal':>6} {'direct':>6}")
    for edges in connected_graphs(cfg.n, cfg.max_edges):
        S = TranspositionSet(cfg.n, edges)
        r = verify_direct_product(build_cayley(cfg.n, S))
        label = ",".join(f"{i}{j}" for i, j in edges)
        print(f"{label:<40} {r.precheck:<22} {r.aut_order:>7} {str(r.r_normal_in_aut):>6} {str(r.is_direct_product):>6}")
        equality = r.aut_order == math.factorial(cfg.n) * r.t_aut_order
        tally[(r.precheck, r.r_normal_in_aut)] += 1
        tally["equality==normal"] += equality == r.r_normal_in_aut
        tally["graphs"] += 1
    print()
    for key, count in sorted(tally.items(), key=str):
        print(f"{key}: {count}")


if __name__ == "__main__":
    main()
