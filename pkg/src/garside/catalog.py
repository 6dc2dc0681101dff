"""Concrete Garside structures and reflection-group data.

Descriptors: ``A:n``, ``B:n``, ``D:n``, ``I2:e`` (classical Artin structures),
``dualA:n`` (band generators), ``dualI2:e``, ``torus:a`` for
``<x, y | x^a = y^a>`` and ``Z:w1,w2,...`` for the free abelian monoid with
Garside element ``w``.

Classical structures are intervals ``[1, w0]`` of a finite Coxeter group for
the length in simple reflections; dual ones are intervals ``[1, c]`` for the
length in all reflections.  Group elements are permutations of a small point
set, composed as functions: ``(uv)(i) = u(v(i))``.
"""

from __future__ import annotations

import math
import re
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Sequence

from .element import Element, delta_power, is_central, multiply, parse_element, power
from .lattice import GarsideStructure, PermutationStructure, StructureError, build_table

FAMILIES = ("artin_A", "artin_B", "artin_D", "artin_I2", "braid_dual_A", "i2_dual", "torus", "free_abelian")

_PREFIX = {
    "A": "artin_A",
    "B": "artin_B",
    "D": "artin_D",
    "I2": "artin_I2",
    "dualA": "braid_dual_A",
    "dualI2": "i2_dual",
    "torus": "torus",
    "Z": "free_abelian",
}

# Above this many simples the permutation backend replaces the table for A:n.
TABLE_LIMIT_A = 720


@dataclass
class CatalogEntry:
    family: str
    params: tuple[int, ...]
    degrees: tuple[int, ...] | None = None
    codegrees: tuple[int, ...] | None = None
    coxeter_h: int | None = None
    h_prime: int | None = None
    homogeneous: bool = True
    unique_roots: bool = False
    delta_word: str | None = None
    epsilon_word: str | None = None
    big_delta_word: str | None = None
    descriptor: str = ""
    relations: list[tuple[str, str, str]] = field(default_factory=list)

    @property
    def n(self) -> int:
        return self.params[0]


class CatalogError(ValueError):
    """Unsupported family, rank, or undefined distinguished element."""


# -- permutation group helpers -------------------------------------------------

Perm = tuple[int, ...]


def _compose(u: Perm, v: Perm) -> Perm:
    return tuple(u[i] for i in v)


def _inv(u: Perm) -> Perm:
    out = [0] * len(u)
    for i, x in enumerate(u):
        out[x] = i
    return tuple(out)


def _coxeter_lengths(gens: Sequence[Perm]) -> dict[Perm, int]:
    """Word length of every group element in the generators (BFS)."""
    e = tuple(range(len(gens[0])))
    dist = {e: 0}
    queue = deque([e])
    while queue:
        w = queue.popleft()
        for g in gens:
            x = _compose(w, g)
            if x not in dist:
                dist[x] = dist[w] + 1
                queue.append(x)
    return dist


def _interval_structure(
    name: str,
    atom_names: Sequence[str],
    atoms: Sequence[Perm],
    length: Callable[[Perm], int],
    top: Perm,
) -> GarsideStructure:
    lt = length(top)

    def below_top(x: Perm) -> bool:
        return length(x) + length(_compose(_inv(x), top)) == lt

    def mul(x: Perm, s: Perm) -> Perm | None:
        y = _compose(x, s)
        if length(y) != length(x) + 1 or not below_top(y):
            return None
        return y

    e = tuple(range(len(top)))
    return build_table(name, atom_names, e, list(atoms), mul, top)


def _swap(n: int, i: int, j: int) -> Perm:
    p = list(range(n))
    p[i], p[j] = p[j], p[i]
    return tuple(p)


def _signed_swap(n: int, i: int, j: int) -> Perm:
    """Swap coordinates i and j (and their negatives) on 2n points."""
    p = list(range(2 * n))
    p[i], p[j] = j, i
    p[i + n], p[j + n] = j + n, i + n
    return tuple(p)


def _classical(name: str, atom_names: Sequence[str], gens: Sequence[Perm]) -> GarsideStructure:
    lengths = _coxeter_lengths(gens)
    top = max(lengths, key=lengths.__getitem__)
    return _interval_structure(name, atom_names, gens, lengths.__getitem__, top)


def _structure_A(n: int, backend: str | None) -> GarsideStructure:
    size = math.factorial(n + 1)
    if backend is None:
        backend = "table" if size <= TABLE_LIMIT_A else "perm"
    if backend == "perm":
        return PermutationStructure(n + 1, name=f"A:{n}")
    if backend != "table":
        raise CatalogError(f"unknown backend {backend!r}")
    gens = [_swap(n + 1, i - 1, i) for i in range(1, n + 1)]
    return _classical(f"A:{n}", [f"s{i}" for i in range(1, n + 1)], gens)


def _structure_B(n: int) -> GarsideStructure:
    gens = [_swap(2 * n, 0, n)] + [_signed_swap(n, i - 2, i - 1) for i in range(2, n + 1)]
    return _classical(f"B:{n}", [f"s{i}" for i in range(1, n + 1)], gens)


def _structure_D(n: int) -> GarsideStructure:
    t1 = _signed_swap(n, 0, 1)
    t2 = list(range(2 * n))
    t2[0], t2[1], t2[n], t2[n + 1] = n + 1, n, 1, 0
    gens = [t1, tuple(t2)] + [_signed_swap(n, i - 2, i - 1) for i in range(3, n + 1)]
    names = ["t1", "t2"] + [f"s{i}" for i in range(3, n + 1)]
    return _classical(f"D:{n}", names, gens)


def _structure_I2(e: int) -> GarsideStructure:
    t1 = tuple((-i) % e for i in range(e))
    t2 = tuple((1 - i) % e for i in range(e))
    return _classical(f"I2:{e}", ["t1", "t2"], [t1, t2])


def _structure_dual_A(n: int) -> GarsideStructure:
    size = n + 1

    def reflection_length(p: Perm) -> int:
        seen = [False] * size
        cycles = 0
        for i in range(size):
            if not seen[i]:
                cycles += 1
                while not seen[i]:
                    seen[i] = True
                    i = p[i]
        return size - cycles

    names, atoms = [], []
    for t in range(2, size + 1):
        for s in range(1, t):
            names.append(f"a{t}_{s}")
            atoms.append(_swap(size, s - 1, t - 1))
    c = tuple(range(size))
    for i in range(n, 0, -1):
        c = _compose(c, _swap(size, i - 1, i))
    return _interval_structure(f"dualA:{n}", names, atoms, reflection_length, c)


def _structure_dual_I2(e: int) -> GarsideStructure:
    # [1, delta] = {1, t1..te, delta} with t_i t_(i+1) = delta, indices mod e.
    def mul(x, s):
        if x == "1":
            return s
        if x == "D":
            return None
        return "D" if s == x % e + 1 else None

    return build_table(f"dualI2:{e}", [f"t{i}" for i in range(1, e + 1)], "1", list(range(1, e + 1)), mul, "D")


def _structure_torus(a: int) -> GarsideStructure:
    def mul(x, s):
        if x == "1":
            return (s, 1) if a > 1 else "D"
        if x == "D" or x[0] != s:
            return None
        return "D" if x[1] + 1 == a else (s, x[1] + 1)

    return build_table(f"torus:{a}", ["x", "y"], "1", ["x", "y"], mul, "D")


def _structure_Z(w: Sequence[int]) -> GarsideStructure:
    k = len(w)
    units = [tuple(int(i == j) for j in range(k)) for i in range(k)]

    def mul(x, s):
        y = tuple(p + q for p, q in zip(x, s))
        return y if all(p <= q for p, q in zip(y, w)) else None

    name = "Z:" + ",".join(map(str, w))
    return build_table(name, [f"z{i}" for i in range(1, k + 1)], tuple([0] * k), units, mul, tuple(w))


# -- reflection group data -----------------------------------------------------


def degrees_codegrees(family: str, n: int, e: int | None = None) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Degrees and codegrees of the reflection group behind a family."""
    if family in ("artin_A", "braid_dual_A"):
        return tuple(range(2, n + 2)), tuple(range(0, n))
    if family == "artin_B":
        return tuple(range(2, 2 * n + 1, 2)), tuple(range(0, 2 * n - 1, 2))
    if family == "artin_D":
        return (
            tuple(sorted([*range(2, 2 * n - 3, 2), n, 2 * n - 2])),
            tuple(sorted([*range(0, 2 * n - 3, 2), n - 2])),
        )
    if family in ("artin_I2", "i2_dual"):
        return (2, n), (0, n - 2)
    if family == "bee":
        assert e is not None
        mult = [e * i for i in range(1, n - 1)]
        return tuple(sorted(mult + [(n - 1) * e, n])), tuple(sorted(mult + [0, (n - 1) * e - n]))
    raise CatalogError(f"no degree data for {family}")


def regular_closed_form(family: str, n: int, d: int, e: int | None = None) -> bool:
    """Divisibility description of regular numbers per family."""
    if family in ("artin_A", "braid_dual_A"):
        return n % d == 0 or (n + 1) % d == 0
    if family == "artin_B":
        return (2 * n) % d == 0
    if family == "artin_D":
        return n % d == 0 or (2 * (n - 1)) % d == 0
    if family in ("artin_I2", "i2_dual"):
        return 2 % d == 0 or n % d == 0
    if family == "bee":
        assert e is not None
        return n % d == 0 or (e * (n - 1)) % d == 0
    raise CatalogError(f"no closed form for {family}")


def regular_from_degrees(degrees: Sequence[int], codegrees: Sequence[int], d: int) -> bool:
    """``d`` is regular iff as many degrees as codegrees are divisible by it."""
    return sum(x % d == 0 for x in degrees) == sum(x % d == 0 for x in codegrees)


def degree_duality_holds(degrees: Sequence[int], codegrees: Sequence[int]) -> bool:
    """Degrees and codegrees pair up as ``d_i + d*_i = h``."""
    h = max(degrees)
    return Counter(degrees) == Counter(h - c for c in codegrees)


def bee_entry(e: int, n: int) -> CatalogEntry:
    """Data-only row for B(e,e,n); no Garside structure is built."""
    degs, codegs = degrees_codegrees("bee", n, e)
    g = math.gcd(e, n)
    return CatalogEntry(
        family="bee",
        params=(e, n),
        degrees=degs,
        codegrees=codegs,
        coxeter_h=max(degs),
        h_prime=e * (n - 1) // g,
        descriptor=f"Bee:{e},{n}",
    )


# -- distinguished words -----------------------------------------------------


def _desc(names: Sequence[str]) -> str:
    return " ".join(names)


def _entry_words(family: str, p: tuple[int, ...]) -> dict[str, str | None]:
    if family in ("artin_A", "braid_dual_A"):
        n = p[0]
        if family == "artin_A":
            s = {i: f"s{i}" for i in range(1, n + 1)}
        else:
            s = {i: f"a{i + 1}_{i}" for i in range(1, n + 1)}
        delta = _desc([s[i] for i in range(n, 0, -1)])
        big = " ".join("(" + _desc([s[i] for i in range(k, 0, -1)]) + ")" for k in range(1, n + 1))
        return {"delta": delta, "epsilon": f"({delta}) {s[1]}", "big_delta": big}
    if family == "artin_B":
        n = p[0]
        delta = _desc([f"s{i}" for i in range(n, 0, -1)])
        return {"delta": delta, "epsilon": None, "big_delta": f"({delta})^{n}"}
    if family == "artin_D":
        n = p[0]
        S = _desc([f"s{i}" for i in range(n, 2, -1)])
        return {
            "delta": f"{S} t1 t2",
            "epsilon": f"{S} t1 {S} t2",
            "big_delta": f"({S} t1 t2)^{n - 1}",
        }
    if family in ("artin_I2", "i2_dual"):
        e = p[0]
        alt = _desc(["t1" if i % 2 == 0 else "t2" for i in range(e)])
        return {"delta": "t1 t2", "epsilon": None, "big_delta": alt}
    if family == "torus":
        return {"delta": None, "epsilon": None, "big_delta": "D"}
    return {"delta": None, "epsilon": None, "big_delta": "D"}


def _relations(family: str, p: tuple[int, ...]) -> list[tuple[str, str, str]]:
    """Identities ``(label, lhs, rhs)`` using d/e/D placeholders for the words."""
    if family in ("artin_A", "braid_dual_A"):
        n = p[0]
        return [
            (f"delta^{n + 1} = Delta^2", f"delta^{n + 1}", "Delta^2"),
            (f"Delta^2 = epsilon^{n}", "Delta^2", f"epsilon^{n}"),
        ]
    if family == "artin_B":
        n = p[0]
        return [(f"delta^{n} = Delta", f"delta^{n}", "Delta^1")]
    if family == "artin_D":
        n = p[0]
        g = math.gcd(2, n)
        return [
            (f"delta^{n - 1} = Delta", f"delta^{n - 1}", "Delta^1"),
            (f"Delta^{2 // g} = epsilon^{n // g}", f"Delta^{2 // g}", f"epsilon^{n // g}"),
        ]
    if family in ("artin_I2", "i2_dual"):
        e = p[0]
        g = math.gcd(2, e)
        return [(f"delta^{e // g} = Delta^{2 // g}", f"delta^{e // g}", f"Delta^{2 // g}")]
    if family == "torus":
        a = p[0]
        return [(f"x^{a} = y^{a} = D", f"x^{a}", f"y^{a}")]
    return []


# -- building ---------------------------------------------------------------


def parse_descriptor(text: str) -> tuple[str, tuple[int, ...]]:
    m = re.fullmatch(r"\s*([A-Za-z0-9]+)\s*:\s*([0-9,\s]+)\s*", text)
    if not m or m.group(1) not in _PREFIX:
        raise CatalogError(f"unknown group descriptor {text!r}")
    family = _PREFIX[m.group(1)]
    try:
        params = tuple(int(x) for x in m.group(2).split(",") if x.strip())
    except ValueError:
        raise CatalogError(f"bad parameters in {text!r}") from None
    if not params or (family != "free_abelian" and len(params) != 1):
        raise CatalogError(f"bad parameters in {text!r}")
    return family, params


_MIN_RANK = {
    "artin_A": 1,
    "artin_B": 2,
    "artin_D": 3,
    "artin_I2": 3,
    "braid_dual_A": 1,
    "i2_dual": 3,
    "torus": 1,
}

# Upper bounds keeping the simple count under control.
_MAX_RANK = {
    "artin_A": 8,
    "artin_B": 6,
    "artin_D": 6,
    "artin_I2": 1000,
    "braid_dual_A": 9,
    "i2_dual": 1000,
    "torus": 10**5,
}


@lru_cache(maxsize=None)
def build(descriptor: str, backend: str | None = None) -> tuple[GarsideStructure, CatalogEntry]:
    """Build the structure and metadata named by ``descriptor`` (cached)."""
    family, params = parse_descriptor(descriptor)
    if family == "free_abelian":
        if any(w < 1 for w in params):
            raise CatalogError("weights must be positive")
        if math.prod(w + 1 for w in params) > 10**6:
            raise CatalogError("too many simples")
    else:
        r = params[0]
        if not _MIN_RANK[family] <= r <= _MAX_RANK[family]:
            raise CatalogError(f"unsupported rank {r} for {family}")
    r = params[0]
    if backend is not None and family != "artin_A":
        raise CatalogError("the backend choice only applies to A:n")
    builders: dict[str, Callable[[], GarsideStructure]] = {
        "artin_A": lambda: _structure_A(r, backend),
        "artin_B": lambda: _structure_B(r),
        "artin_D": lambda: _structure_D(r),
        "artin_I2": lambda: _structure_I2(r),
        "braid_dual_A": lambda: _structure_dual_A(r),
        "i2_dual": lambda: _structure_dual_I2(r),
        "torus": lambda: _structure_torus(r),
        "free_abelian": lambda: _structure_Z(params),
    }
    s = builders[family]()
    words = _entry_words(family, params)
    entry = CatalogEntry(
        family=family,
        params=params,
        homogeneous=True,
        unique_roots=family not in ("torus", "free_abelian"),
        delta_word=words["delta"],
        epsilon_word=words["epsilon"],
        big_delta_word=words["big_delta"],
        descriptor=descriptor.strip(),
        relations=_relations(family, params),
    )
    if family not in ("torus", "free_abelian"):
        degs, codegs = degrees_codegrees(family, r)
        entry.degrees, entry.codegrees = degs, codegs
        entry.coxeter_h = max(degs)
        entry.h_prime = {
            "artin_A": r + 1,
            "braid_dual_A": r + 1,
            "artin_B": r,
            "artin_D": 2 * (r - 1) // math.gcd(2, r),
            "artin_I2": r // math.gcd(r, 2),
            "i2_dual": r // math.gcd(r, 2),
        }[family]
    s.homogeneous = entry.homogeneous
    s.unique_roots = entry.unique_roots
    return s, entry


def distinguished(s: GarsideStructure, entry: CatalogEntry, which: str) -> Element:
    """The element delta, epsilon or big_delta of the entry."""
    word = {"delta": entry.delta_word, "epsilon": entry.epsilon_word, "big_delta": entry.big_delta_word}.get(which)
    if which not in ("delta", "epsilon", "big_delta"):
        raise CatalogError(f"unknown distinguished element {which!r}")
    if word is None:
        raise CatalogError(f"{which} is not defined for {entry.family}")
    return parse_element(s, word)


def _eval_side(s: GarsideStructure, entry: CatalogEntry, expr: str) -> Element:
    name, _, k = expr.partition("^")
    k = int(k) if k else 1
    if entry.family == "torus":
        return parse_element(s, expr)
    base = {"delta": "delta", "epsilon": "epsilon", "Delta": "big_delta"}[name]
    return power(distinguished(s, entry, base), k)


def check_relations(s: GarsideStructure, entry: CatalogEntry) -> list[tuple[str, bool]]:
    """Evaluate each listed identity by exact arithmetic."""
    report = []
    for label, lhs, rhs in entry.relations:
        ok = _eval_side(s, entry, lhs) == _eval_side(s, entry, rhs)
        if entry.family == "torus":
            ok = ok and _eval_side(s, entry, lhs) == delta_power(s, 1)
        report.append((label, ok))
    return report


def is_regular(entry: CatalogEntry, d: int) -> tuple[bool, bool]:
    """Regularity of ``d`` from degrees/codegrees and from the closed form."""
    if d < 1:
        raise CatalogError("d must be positive")
    if entry.degrees is None or entry.codegrees is None:
        raise CatalogError(f"no degree data for {entry.family}")
    by_degrees = regular_from_degrees(entry.degrees, entry.codegrees, d)
    if entry.family == "bee":
        e, n = entry.params
        closed = regular_closed_form("bee", n, d, e)
    else:
        closed = regular_closed_form(entry.family, entry.n, d)
    return by_degrees, closed


def expected_precentral(entry: CatalogEntry) -> dict[str, bool]:
    """Precentrality pattern claimed for the entry's distinguished elements."""
    n = entry.n
    fam = entry.family
    if fam == "artin_A":
        return {"delta": n % 2 == 0, "epsilon": n % 2 == 1}
    if fam == "artin_B":
        return {"delta": True}
    if fam == "artin_D":
        return {"delta": n % 2 == 0, "epsilon": True}
    if fam == "artin_I2":
        return {"delta": True}
    if fam == "braid_dual_A":
        return {"epsilon": True}
    if fam == "i2_dual":
        return {"big_delta": True}
    return {}


def periodicity_criterion(entry: CatalogEntry, g: Element) -> bool:
    """Family-specific test: some listed power of ``g`` is central."""
    fam, n = entry.family, entry.n
    if fam in ("artin_A", "braid_dual_A"):
        exps = [n, n + 1]
    elif fam == "artin_B":
        exps = [n]
    elif fam == "artin_D":
        k = math.gcd(2, n)
        exps = [n // k, 2 * (n - 1) // k]
    elif fam in ("artin_I2", "i2_dual"):
        k = math.gcd(n, 2)
        exps = [2 // k, n // k]
    else:
        raise CatalogError(f"no central-power criterion for {fam}")
    return any(is_central(power(g, k)) for k in exps)
