"""Command-line front end.

Exit codes: 0 success, 1 negative answer (not conjugate, not periodic, ...),
2 usage or parse error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Sequence

from .catalog import (
    CatalogError,
    build,
    check_relations,
    distinguished,
    expected_precentral,
    is_regular,
    periodicity_criterion,
)
from .conjugacy import (
    BudgetExceeded,
    conjugacy_decide,
    orbit,
    partial_cycling_step,
    summit_representative,
)
from .element import format_element, parse_element, simple_element
from .lattice import GarsideStructure, StructureError, TableStructure
from .periodicity import (
    NotPeriodic,
    is_periodic,
    periodic_profile,
    primitive_table,
    translation_limits,
)
from .words import WordParseError

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _load_group(desc: str):
    if desc.startswith("file:"):
        with open(desc[5:], encoding="utf-8") as fh:
            return TableStructure.loads(fh.read()), None
    return build(desc)


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _need_entry(entry, what: str):
    if entry is None:
        raise UsageError(f"{what} needs a catalog group, not a structure file")
    return entry


def cmd_nf(args, s, entry) -> int:
    g = parse_element(s, args.word)
    _emit(args, {"element": format_element(g), "inf": g.inf, "sup": g.sup, "len": g.length}, format_element(g))
    return EXIT_OK


def cmd_invariants(args, s, entry) -> int:
    g = parse_element(s, args.word)
    h, _ = summit_representative(g)
    data = {
        "inf": g.inf,
        "sup": g.sup,
        "len": g.length,
        "infs": h.inf,
        "sups": h.sup,
        "lens": h.length,
    }
    _emit(args, data, " ".join(f"{k}={v}" for k, v in data.items()))
    return EXIT_OK


def cmd_tinf(args, s, entry) -> int:
    g = parse_element(s, args.word)
    lo, hi, ln = translation_limits(g)
    _emit(args, {"INF": str(lo), "SUP": str(hi), "LEN": str(ln)}, f"INF={lo} SUP={hi} LEN={ln}")
    return EXIT_OK


def cmd_periodic(args, s, entry) -> int:
    g = parse_element(s, args.word)
    if not is_periodic(g):
        _emit(args, {"periodic": False}, "not periodic")
        return EXIT_NEGATIVE
    prof = periodic_profile(g)
    data = prof.to_json()
    _emit(args, data, json.dumps(data, sort_keys=True))
    return EXIT_OK


def cmd_orbit(args, s, entry) -> int:
    g = parse_element(s, args.word)
    try:
        orb = orbit(g, args.kind, max_set=args.max_set)
    except StructureError as exc:
        if args.kind == "stable":
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        raise
    data = orb.to_json()
    lines = [f"kind={orb.kind} inf_s={orb.inf_s} sup_s={orb.sup_s} size={len(orb)}"]
    lines += [f"{m['element']}    witness {m['witness']}" for m in data["members"]]
    _emit(args, data, "\n".join(lines))
    return EXIT_OK


def cmd_conj(args, s, entry) -> int:
    g = parse_element(s, args.word1)
    h = parse_element(s, args.word2)
    ok, x = conjugacy_decide(g, h, max_set=args.max_set)
    if ok:
        assert x is not None
        _emit(args, {"conjugate": True, "witness": format_element(x)}, f"conjugate, witness {format_element(x)}")
        return EXIT_OK
    _emit(args, {"conjugate": False, "witness": None}, "not conjugate")
    return EXIT_NEGATIVE


def cmd_pcycle(args, s, entry) -> int:
    g = parse_element(s, args.word)
    b = parse_element(s, args.by)
    if b.u != 0 or len(b.factors) != 1:
        if b.u == 1 and not b.factors:
            simple = s.delta
        else:
            raise UsageError("--by must spell a single simple element")
    else:
        simple = b.factors[0]
    try:
        h, x = partial_cycling_step(g, simple)
    except StructureError as exc:
        raise UsageError(str(exc)) from None
    xs = format_element(simple_element(s, x))
    _emit(args, {"element": format_element(h), "witness": xs}, format_element(h))
    return EXIT_OK


def cmd_primitive_table(args, s, entry) -> int:
    reps = primitive_table(s)
    out = [format_element(h) for h in reps]
    _emit(args, {"representatives": out}, "\n".join(out))
    return EXIT_OK


def cmd_regular(args, s, entry) -> int:
    entry = _need_entry(entry, "regular")
    try:
        by_degrees, closed = is_regular(entry, args.d)
    except CatalogError as exc:
        raise UsageError(str(exc)) from None
    data = {"d": args.d, "regular": by_degrees, "closed_form": closed, "agree": by_degrees == closed}
    _emit(args, data, f"d={args.d} regular={by_degrees} closed_form={closed}")
    if by_degrees != closed:
        return EXIT_NEGATIVE
    return EXIT_OK if by_degrees else EXIT_NEGATIVE


def cmd_relations(args, s, entry) -> int:
    entry = _need_entry(entry, "relations")
    report = check_relations(s, entry)
    _emit(
        args,
        {"relations": [{"identity": label, "holds": ok} for label, ok in report]},
        "\n".join(f"{'ok  ' if ok else 'FAIL'} {label}" for label, ok in report),
    )
    return EXIT_OK if all(ok for _, ok in report) else EXIT_NEGATIVE


def cmd_audit(args, s, entry) -> int:
    entry = _need_entry(entry, "audit-precentral")
    rows = []
    good = True
    for which, claim in sorted(expected_precentral(entry).items()):
        prof = periodic_profile(distinguished(s, entry, which))
        rows.append({"element": which, "profile": prof.to_json(), "expected": claim, "match": prof.precentral == claim})
        good = good and prof.precentral == claim
    lines = [
        f"{r['element']}: p/q={r['profile']['p']}/{r['profile']['q']} m={r['profile']['m']} "
        f"precentral={r['profile']['precentral']} expected={r['expected']}"
        for r in rows
    ]
    _emit(args, {"audit": rows}, "\n".join(lines))
    return EXIT_OK if good else EXIT_NEGATIVE


def cmd_dump(args, s, entry) -> int:
    print(s.dumps())
    return EXIT_OK


def random_word(s: GarsideStructure, rng: random.Random, length: int) -> str:
    letters = [*s.atom_names, "D"]
    return " ".join(f"{rng.choice(letters)}^{rng.choice((1, -1))}" for _ in range(length))


def cmd_sample(args, s, entry) -> int:
    """Random words with their periodicity verdicts; deterministic in --seed."""
    rng = random.Random(args.seed)
    rows = []
    for _ in range(args.count):
        w = random_word(s, rng, rng.randint(1, args.length))
        g = parse_element(s, w)
        row = {"word": w, "element": format_element(g), "periodic": is_periodic(g)}
        if entry is not None and entry.degrees is not None:
            row["criterion"] = periodicity_criterion(entry, g)
        rows.append(row)
    _emit(args, {"samples": rows}, "\n".join(f"{r['element']}  periodic={r['periodic']}" for r in rows))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="garside", description="Exact computations in Garside groups.")
    p.add_argument("--group", default="A:2", help="A:n B:n D:n I2:e dualA:n dualI2:e torus:a Z:w1,..  or file:PATH")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--max-set", type=int, default=100_000, help="cardinality budget for conjugacy sets")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized subcommands")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, *words):
        sp = sub.add_parser(name)
        for w in words:
            sp.add_argument(w)
        sp.set_defaults(fn=fn)
        return sp

    add("nf", cmd_nf, "word")
    add("invariants", cmd_invariants, "word")
    add("tinf", cmd_tinf, "word")
    add("periodic", cmd_periodic, "word")
    sp = add("orbit", cmd_orbit, "word")
    sp.add_argument("--kind", choices=["summit", "sss", "ultra", "stable"], default="sss")
    add("conj", cmd_conj, "word1", "word2")
    sp = add("pcycle", cmd_pcycle, "word")
    sp.add_argument("--by", required=True)
    add("primitive-table", cmd_primitive_table)
    sp = add("regular", cmd_regular)
    sp.add_argument("--d", type=int, required=True)
    add("relations", cmd_relations)
    add("audit-precentral", cmd_audit)
    add("dump-structure", cmd_dump)
    sp = add("sample", cmd_sample)
    sp.add_argument("--count", type=int, default=10)
    sp.add_argument("--length", type=int, default=8)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        s, entry = _load_group(args.group)
        return args.fn(args, s, entry)
    except (WordParseError, CatalogError, UsageError, OSError, ValueError) as exc:
        if isinstance(exc, NotPeriodic):
            print(f"not periodic: {exc}", file=sys.stderr)
            return EXIT_NEGATIVE
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
