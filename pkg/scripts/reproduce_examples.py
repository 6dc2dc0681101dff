#!/usr/bin/env python3
"""Recompute the braid examples on 5 and 6 strands and the precentrality audits.

    python scripts/reproduce_examples.py [--groups A:2 D:4 ...] [--json]
"""

from __future__ import annotations

import argparse
import json
from dataclasses import dataclass, field

from garside.catalog import build, distinguished, expected_precentral
from garside.conjugacy import orbit, partial_cycling, summit_representative
from garside.element import format_element, parse_element, power
from garside.periodicity import periodic_profile, translation_limits


@dataclass
class ExampleConfig:
    # (group, element word, prefix to partially cycle by)
    braid_cases: tuple[tuple[str, str, str], ...] = (
        ("A:4", "s1 (s4 s3 s2 s1)", "s1"),
        ("A:5", "s1 (s5 s4 s3 s2 s1)", "s1"),
    )
    audit_groups: list[str] = field(
        default_factory=lambda: ["A:2", "A:3", "A:4", "A:5", "B:3", "D:4", "I2:5", "dualA:3", "dualI2:5"]
    )


def braid_case(desc: str, word: str, prefix: str) -> dict:
    s, entry = build(desc)
    g = parse_element(s, word)
    eps = distinguished(s, entry, "epsilon")
    sss = orbit(g, "sss")
    stable = orbit(g, "stable")
    b = parse_element(s, prefix).factors[0]
    lo, hi, ln = translation_limits(g)
    prof = periodic_profile(g)
    return {
        "group": desc,
        "g": format_element(g),
        "g^2": format_element(power(g, 2)),
        "epsilon": format_element(eps),
        "pcycle(g)": format_element(partial_cycling(g, b)),
        "lens(epsilon^2)": summit_representative(power(eps, 2))[0].length,
        "INF/SUP/LEN": [str(lo), str(hi), str(ln)],
        "profile": prof.to_json(),
        "sss_size": len(sss),
        "stable_size": len(stable),
        "g_in_sss": g in sss,
        "g_in_stable": g in stable,
        "epsilon_in_sss": eps in sss,
    }


def audit(desc: str) -> list[dict]:
    s, entry = build(desc)
    rows = []
    for which, claim in sorted(expected_precentral(entry).items()):
        prof = periodic_profile(distinguished(s, entry, which))
        rows.append({"group": desc, "element": which, **prof.to_json(), "expected": claim, "match": prof.precentral == claim})
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--groups", nargs="*", help="groups to audit")
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    cfg = ExampleConfig()
    if args.groups:
        cfg.audit_groups = args.groups
    cases = [braid_case(*c) for c in cfg.braid_cases]
    rows = [r for d in cfg.audit_groups for r in audit(d)]
    if args.json:
        print(json.dumps({"examples": cases, "audit": rows}, indent=2))
        return
    for c in cases:
        print(f"[{c['group']}]")
        for k, v in c.items():
            if k != "group":
                print(f"  {k:16} {v}")
    print("\nprecentrality audit")
    for r in rows:
        flag = "ok" if r["match"] else "MISMATCH"
        print(f"  {r['group']:9} {r['element']:9} p/q={r['p']}/{r['q']:<3} m={r['m']} precentral={r['precentral']!s:5} {flag}")


if __name__ == "__main__":
    main()
