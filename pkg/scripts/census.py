"""Print the equality census of the domination and total domination bounds.

    python3 scripts/census.py --max-order 6
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from stardom.graph import enumerate_connected
from stardom.verifier import Census, Check, sweep


@dataclass
class CensusConfig:
    min_order: int = 1
    max_order: int = 6
    checks: tuple[Check, ...] = (Check.DOMINATION_BOUND, Check.TOTAL_EQUALITY)


def run(cfg: CensusConfig) -> Census:
    census = Census()
    source = (g for n in range(cfg.min_order, cfg.max_order + 1) for g in enumerate_connected(n))
    for _ in sweep(source, cfg.checks, census=census):
        pass
    return census


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min-order", type=int, default=1)
    ap.add_argument("--max-order", type=int, default=6)
    args = ap.parse_args()
    cfg = CensusConfig(args.min_order, args.max_order)
    start = time.perf_counter()
    census = run(cfg)
    for line in census.summary_lines():
        print(line)
    print(f"elapsed: {time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    main()
