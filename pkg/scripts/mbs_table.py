"""Decomposition reports for MBS_n over a range of n, printed as a table.

    python scripts/mbs_table.py --n-min 3 --n-max 6
    python scripts/mbs_table.py --n-max 7 --json out.json
"""

import argparse
import json
import math
import time
from dataclasses import dataclass

from cayleyaut.verify import mbs_report_consistent, verify_mbs_theorem


@dataclass
class Config:
    n_min: int = 3
    n_max: int = 6
    json_path: str | None = None


def parse_args() -> Config:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n-min", type=int, default=Config.n_min)
    p.add_argument("--n-max", type=int, default=Config.n_max)
    p.add_argument("--json", dest="json_path")
    a = p.parse_args()
    return Config(a.n_min, a.n_max, a.json_path)


def main():
    cfg = parse_args()
    rows = []
    print(f"{'n':>2} {'|Aut|':>8} {'n!*2n':>8} {'normal':>6} {'direct':>6} {'m':>3} {'|G_e|':>5} {'sec':>6}  ok")
    for n in range(cfg.n_min, cfg.n_max + 1):
        t = time.perf_counter()
        r = verify_mbs_theorem(n)
        dt = time.perf_counter() - t
        ok = mbs_report_consistent(r)
        print(f"{n:>2} {r.aut_order:>8} {math.factorial(n) * 2 * n:>8} {str(r.r_normal_in_aut):>6} "
              f"{str(r.is_direct_product):>6} {str(r.dihedral_m):>3} {r.stabilizer_order:>5} {dt:>6.2f}  {ok}")
        rows.append(r.as_dict() | {"seconds": round(dt, 3), "consistent": ok})
    if cfg.json_path:
        with open(cfg.json_path, "w") as f:
            json.dump(rows, f, indent=2)


if __name__ == "__main__":
    main()
