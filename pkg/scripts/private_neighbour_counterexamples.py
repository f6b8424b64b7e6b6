"""List graphs where the private-neighbour hypothesis holds but gamma_p > n - m(lambda).

For every connected graph of the chosen orders and every p, the script runs the
private-neighbour bound under each reading of the hypothesis and prints the
violating graphs together with the offending eigenvalue, so the failures can be
re-checked by hand or with another tool.

    python3 scripts/private_neighbour_counterexamples.py --max-order 6 --p 3
"""

from __future__ import annotations

import argparse
from collections import Counter
from dataclasses import dataclass, field

from stardom.domination import TOK_READINGS, epn_witnesses
from stardom.graph import enumerate_connected, parse_graph6
from stardom.verifier import Status, verify_tok


@dataclass
class SearchConfig:
    min_order: int = 2
    max_order: int = 6
    p_values: tuple[int, ...] = (1, 2, 3)
    readings: tuple[str, ...] = field(default_factory=lambda: TOK_READINGS)
    show: int = 5


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min-order", type=int, default=2)
    ap.add_argument("--max-order", type=int, default=6)
    ap.add_argument("--p", type=int, nargs="+", default=[1, 2, 3])
    ap.add_argument("--show", type=int, default=5, help="examples printed per reading")
    args = ap.parse_args()
    cfg = SearchConfig(args.min_order, args.max_order, tuple(args.p), show=args.show)

    graphs = [g for n in range(cfg.min_order, cfg.max_order + 1) for g in enumerate_connected(n)]
    for reading in cfg.readings:
        applied = Counter()
        bad = []
        for p in cfg.p_values:
            for g in graphs:
                rep = verify_tok(g, p, reading)
                if rep.status != Status.SKIPPED:
                    applied[p] += 1
                if rep.status == Status.VIOLATED:
                    bad.append(rep)
        print(f"[{reading}] in scope by p: {dict(applied)}; violations: {len(bad)} "
              f"by (p, n): {dict(Counter((r.p, r.n) for r in bad))}")
        for rep in bad[:cfg.show]:
            g = parse_graph6(rep.graph6)
            row = next(r for r in rep.rows if r.status == Status.VIOLATED)
            witness = row.payload.get("witness_set") if row.payload else None
            print(f"  {rep.graph6} p={rep.p} {row.kind.value} lambda={row.lam.display()} "
                  f"m={row.mult} gamma_p={row.value} > {row.bound}; S={witness} "
                  f"epn={epn_witnesses(g, witness, rep.p) if witness else '?'}")


if __name__ == "__main__":
    main()
