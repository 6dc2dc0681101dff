#!/usr/bin/env python3
"""Tabulate primitive periodic class-pairs for small Garside groups.

    python scripts/primitive_tables.py [--groups A:2 torus:3 ...] [--max-simples N]
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, field

from garside.catalog import build
from garside.conjugacy import orbit
from garside.element import format_element
from garside.periodicity import periodic_profile, primitive_table


@dataclass
class TableConfig:
    groups: list[str] = field(default_factory=lambda: ["A:2", "A:3", "B:2", "I2:5", "dualA:3", "torus:3", "Z:1,1"])
    max_simples: int = 5000


def run(cfg: TableConfig) -> None:
    for desc in cfg.groups:
        s = build(desc)[0]
        t0 = time.perf_counter()
        reps = primitive_table(s, max_simples=cfg.max_simples)
        dt = time.perf_counter() - t0
        print(f"{desc}  ({s.size} simples, m={s.m}, {len(reps)} class-pairs, {dt:.2f}s)")
        for h in reps:
            prof = periodic_profile(h)
            size = len(orbit(h, "sss"))
            print(f"  {format_element(h):40} INF={prof.p}/{prof.q}  order={prof.order_in_quotient}  |SSS|={size}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--groups", nargs="*")
    ap.add_argument("--max-simples", type=int, default=TableConfig.max_simples)
    args = ap.parse_args()
    cfg = TableConfig(max_simples=args.max_simples)
    if args.groups:
        cfg.groups = args.groups
    run(cfg)


if __name__ == "__main__":
    main()
