"""Cycling, decycling, partial cycling and summit-type conjugacy sets."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

from .element import (
    Element,
    conjugate,
    conjugate_by_simple,
    delta_power,
    format_element,
    identity,
    inverse,
    multiply,
    normalize,
    power,
    simple_element,
)
from .lattice import GarsideStructure, StructureError

KINDS = ("summit", "super_summit", "ultra", "stable")
_KIND_ALIASES = {"sss": "super_summit", "inf": "summit"}

DEFAULT_MAX_SET = 100_000


class BudgetExceeded(RuntimeError):
    """A conjugacy set grew past the configured cardinality budget."""


# -- single steps --------------------------------------------------------------


def cycling_step(g: Element) -> tuple[Element, int]:
    """Cycling of ``g`` with the simple conjugator used (identity if l = 0)."""
    s = g.structure
    if not g.factors:
        return g, s.identity
    x = s.tau(g.factors[0], -g.u)
    return normalize(s, g.u, [*g.factors[1:], x]), x


def cycling(g: Element) -> Element:
    return cycling_step(g)[0]


def decycling_step(g: Element) -> tuple[Element, Element]:
    """Decycling with its conjugator ``a_l^-1``."""
    s = g.structure
    if not g.factors:
        return g, identity(s)
    last = g.factors[-1]
    h = normalize(s, g.u, [s.tau(last, g.u), *g.factors[:-1]])
    return h, inverse(simple_element(s, last))


def decycling(g: Element) -> Element:
    return decycling_step(g)[0]


def partial_cycling_step(g: Element, b: int) -> tuple[Element, int]:
    s = g.structure
    if not g.factors:
        raise StructureError("partial cycling needs a nonempty normal form")
    a1 = g.factors[0]
    if b == s.identity or not s.left_divides(b, a1):
        raise StructureError("partial cycling needs a nontrivial prefix of the first factor")
    x = s.tau(b, -g.u)
    rest = s.right_divide(b, a1)
    return normalize(s, g.u, [rest, *g.factors[1:], x]), x


def partial_cycling(g: Element, b: int) -> Element:
    """Conjugate ``g`` by ``tau^-u(b)`` for a prefix ``b`` of the first factor."""
    return partial_cycling_step(g, b)[0]


# -- reaching the summit ---------------------------------------------------------


@lru_cache(maxsize=200_000)
def summit_representative(g: Element) -> tuple[Element, Element]:
    """A super summit conjugate ``h`` of ``g`` with ``x^-1 g x = h``.

    Cycles until inf stops growing for |Delta| steps, then decycles until sup
    stops shrinking for |Delta| steps, and repeats until neither improves.
    """
    s = g.structure
    patience = max(1, s.delta_norm)
    cap = patience * (g.length + 1) * 4 + 4 * patience
    steps = 0
    best, bx = g, identity(s)
    while True:
        improved = False
        cur, cx, idle = best, bx, 0
        while idle < patience and cur.length:
            cur, c = cycling_step(cur)
            cx = multiply(cx, simple_element(s, c))
            steps += 1
            idle += 1
            if cur.inf > best.inf or (cur.inf == best.inf and cur.sup < best.sup):
                best, bx, idle, improved = cur, cx, 0, True
        cur, cx, idle = best, bx, 0
        while idle < patience and cur.length:
            cur, c = decycling_step(cur)
            cx = multiply(cx, c)
            steps += 1
            idle += 1
            if cur.sup < best.sup or (cur.sup == best.sup and cur.inf > best.inf):
                best, bx, idle, improved = cur, cx, 0, True
        if not improved:
            return best, bx
        if steps > cap * 8:
            raise BudgetExceeded("summit search did not settle")


def infs_sups(g: Element) -> tuple[int, int]:
    h, _ = summit_representative(g)
    return h.inf, h.sup


# -- conjugating sets ------------------------------------------------------


def min_conjugators(h: Element, kind: str = "super_summit") -> list[int]:
    """The <=_L-minimal nontrivial simples keeping ``h`` in its summit set.

    ``kind="summit"`` only asks inf not to drop; otherwise sup must not grow
    either.  Found by scanning every simple.
    """
    kind = _KIND_ALIASES.get(kind, kind)
    s = h.structure
    keep_sup = kind != "summit"
    good = []
    for c in s.simples():
        if c == s.identity:
            continue
        k = conjugate_by_simple(h, c)
        if k.inf >= h.inf and (not keep_sup or k.sup <= h.sup):
            good.append(c)
    minimal = []
    for c in good:
        if not any(d != c and s.left_divides(d, c) for d in good):
            minimal.append(c)
    return minimal


@dataclass
class ConjugacyOrbit:
    kind: str
    base: Element
    inf_s: int
    sup_s: int
    members: list[Element] = field(default_factory=list)
    witness: dict[Element, Element] = field(default_factory=dict)

    def __contains__(self, h: Element) -> bool:
        return h in self.witness

    def __len__(self) -> int:
        return len(self.members)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "base": format_element(self.base),
            "inf_s": self.inf_s,
            "sup_s": self.sup_s,
            "members": [
                {"element": format_element(h), "witness": format_element(self.witness[h])} for h in self.members
            ],
        }


@lru_cache(maxsize=4096)
def _closure(start: Element, kind: str, budget: int) -> tuple[tuple[Element, Element], ...]:
    """BFS over minimal simple conjugators; witnesses relative to ``start``."""
    s = start.structure
    seen = {start: identity(s)}
    order = [start]
    queue = deque([start])
    while queue:
        h = queue.popleft()
        wh = seen[h]
        for c in min_conjugators(h, kind):
            k = conjugate_by_simple(h, c)
            if k in seen:
                continue
            if kind == "summit" and k.inf != start.inf:
                continue
            if kind != "summit" and (k.inf != start.inf or k.sup != start.sup):
                continue
            seen[k] = multiply(wh, simple_element(s, c))
            order.append(k)
            queue.append(k)
            if len(seen) > budget:
                raise BudgetExceeded(f"conjugacy set exceeds {budget} elements")
    return tuple((h, seen[h]) for h in order)


def _summit_start(g: Element) -> tuple[Element, Element]:
    """A conjugate with maximal inf reached by cycling only."""
    h, x = summit_representative(g)
    return h, x


def _cycles_back(h: Element, limit: int) -> bool:
    cur = h
    for _ in range(limit):
        cur = cycling(cur)
        if cur == h:
            return True
    return False


def _minimal_periodic_q(g: Element) -> int:
    """Least q <= |Delta| with lens(g^q) = 0; requires periodic ``g``."""
    s = g.structure
    for q in range(1, s.delta_norm + 1):
        h, _ = summit_representative(power(g, q))
        if h.length == 0:
            return q
    raise StructureError("stable sets are only computed for periodic elements")


def orbit(g: Element, kind: str = "super_summit", max_set: int = DEFAULT_MAX_SET, horizon: int | None = None) -> ConjugacyOrbit:
    """The summit, super summit, ultra summit or stable set of ``g``.

    Members are sorted by ``(u, factors)``; ``witness[h]`` conjugates ``g``
    to ``h``.  The stable set is computed for periodic ``g`` only, testing
    powers ``1..horizon`` (default ``q*m``).
    """
    kind = _KIND_ALIASES.get(kind, kind)
    if kind not in KINDS:
        raise ValueError(f"unknown orbit kind {kind!r}")
    s = g.structure
    rep, x = summit_representative(g)
    if kind == "summit":
        # the super summit conjugate already has maximal inf
        closure = _closure(rep, "summit", max_set)
    else:
        closure = _closure(rep, "super_summit", max_set)
    pairs = [(h, multiply(x, w)) for h, w in closure]
    if kind == "ultra":
        limit = len(pairs) + 1
        pairs = [(h, w) for h, w in pairs if _cycles_back(h, limit)]
    elif kind == "stable":
        q = _minimal_periodic_q(g)
        top = horizon if horizon is not None else q * s.m
        targets = [infs_sups(power(g, k)) for k in range(1, top + 1)]
        kept = []
        for h, w in pairs:
            hk = h
            ok = True
            for k in range(1, top + 1):
                if k > 1:
                    hk = multiply(hk, h)
                if (hk.inf, hk.sup) != targets[k - 1]:
                    ok = False
                    break
            if ok:
                kept.append((h, w))
        pairs = kept
    pairs.sort(key=lambda p: p[0].sort_key())
    out = ConjugacyOrbit(kind, g, rep.inf, rep.sup)
    out.members = [h for h, _ in pairs]
    out.witness = dict(pairs)
    return out


def conjugacy_decide(g: Element, h: Element, max_set: int = DEFAULT_MAX_SET) -> tuple[bool, Element | None]:
    """Decide whether ``h = x^-1 g x`` for some ``x``; return such an ``x``."""
    if g.structure is not h.structure:
        raise StructureError("elements live in different structures")
    if g == h:
        return True, identity(g.structure)
    rg, _ = summit_representative(g)
    rh, xh = summit_representative(h)
    if (rg.inf, rg.sup) != (rh.inf, rh.sup):
        return False, None
    if rg.length == 0:
        # both are powers of Delta with the same exponent
        return rg == rh, (multiply(summit_representative(g)[1], inverse(xh)) if rg == rh else None)
    orb = orbit(g, "super_summit", max_set=max_set)
    w = orb.witness.get(rh)
    if w is None:
        return False, None
    return True, multiply(w, inverse(xh))
