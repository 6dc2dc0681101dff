"""Translation limits and tools for periodic elements.

An element is periodic when some power of it is a power of D.  Its rational
invariant ``INF(g) = p/q`` (lowest terms) determines the rest: ``g^q`` is
conjugate to ``D^p``.  ``m`` is the order of tau, so ``D^m`` is the least
central power of D.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from functools import lru_cache

from .conjugacy import conjugacy_decide, summit_representative
from .element import (
    Element,
    delta_power,
    exponent_sum,
    inverse,
    multiply,
    normalize,
    power,
)
from .lattice import GarsideStructure, StructureError


class NotPeriodic(ValueError):
    """Raised when an operation needs a periodic element."""


@dataclass(frozen=True)
class PeriodicProfile:
    p: int
    q: int
    m: int
    slim: bool
    precentral: bool
    order_in_quotient: int

    def to_json(self) -> dict:
        return asdict(self)


@lru_cache(maxsize=100_000)
def translation_limits(g: Element) -> tuple[Fraction, Fraction, Fraction]:
    """Exact ``(INF, SUP, LEN)`` from summit data of ``g^k``, ``k <= |Delta|``."""
    best_inf: Fraction | None = None
    best_sup: Fraction | None = None
    gk = g
    for k in range(1, g.structure.delta_norm + 1):
        if k > 1:
            gk = multiply(gk, g)
        h, _ = summit_representative(gk)
        lo, hi = Fraction(h.inf, k), Fraction(h.sup, k)
        best_inf = lo if best_inf is None else max(best_inf, lo)
        best_sup = hi if best_sup is None else min(best_sup, hi)
    assert best_inf is not None and best_sup is not None
    return best_inf, best_sup, best_sup - best_inf


def tinf(g: Element) -> Fraction:
    return translation_limits(g)[0]


@lru_cache(maxsize=100_000)
def is_periodic(g: Element) -> bool:
    """Whether ``g^(q m)`` is a power of D for some ``1 <= q <= |Delta|``."""
    s = g.structure
    base = power(g, s.m)
    gk = base
    for q in range(1, s.delta_norm + 1):
        if q > 1:
            gk = multiply(gk, base)
        if gk.length == 0:
            return True
    return False


def _require_periodic(g: Element) -> None:
    if not is_periodic(g):
        raise NotPeriodic(f"{g} is not periodic")


def periodic_profile(g: Element) -> PeriodicProfile:
    _require_periodic(g)
    m = g.structure.m
    t = tinf(g)
    p, q = t.numerator, t.denominator
    if summit_representative(power(g, q))[0] != delta_power(g.structure, p):
        raise AssertionError(f"g^{q} is not conjugate to D^{p}")
    return PeriodicProfile(
        p=p,
        q=q,
        m=m,
        slim=(p - 1) % q == 0,
        precentral=p % m == 0,
        order_in_quotient=q * m // math.gcd(p, m),
    )


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """``(d, x, y)`` with ``a x + b y = d = gcd(a, b) >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        k, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - k * x1
        y0, y1 = y1, y0 - k * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def slim_exponent(g: Element) -> int:
    """Least ``r > 0`` with ``p r = 1 (mod q)`` and ``gcd(r, m/gcd(p, m)) = 1``.

    Then ``g^r`` is slim and generates the same subgroup modulo ``D^m``.
    """
    prof = periodic_profile(g)
    p, q, m = prof.p, prof.q, prof.m
    if p == 0:
        raise NotPeriodic("the identity has no slim exponent")
    mm = m // math.gcd(p, m)
    period = q * mm
    best = next(r for r in range(1, period + 1) if (p * r - 1) % q == 0 and math.gcd(r, mm) == 1)
    d, r0, _ = ext_gcd(p, period)
    if d == 1:
        r0 %= period
        # the Euclid solution is admissible, so the scan cannot beat it by accident
        assert (p * r0 - 1) % q == 0 and math.gcd(r0 or period, mm) == 1
        assert best <= (r0 or period)
    return best


def cyclic_generator(g: Element) -> tuple[Element, int, int]:
    """``h = g^r D^(m s)`` with ``p r + q m s = gcd(p, m)``.

    ``h`` generates the subgroup spanned by ``g`` and ``D^m``.
    """
    prof = periodic_profile(g)
    p, q, m = prof.p, prof.q, prof.m
    if p == 0:
        raise NotPeriodic("the identity generates nothing")
    d, r, s_ = ext_gcd(p, q * m)
    assert d == math.gcd(p, m)
    # smallest positive r
    step = q * m // d
    k = (r - 1) // step if r > 0 else -((-r) // step) - 1
    r, s_ = r - k * step, s_ + k * (p // d)
    assert p * r + q * m * s_ == d
    st = g.structure
    h = multiply(power(g, r), delta_power(st, m * s_))
    if power(h, p // d) != g:
        raise AssertionError("generator does not recover g")
    if power(h, q * m // d) != delta_power(st, m):
        raise AssertionError("generator does not recover D^m")
    return h, r, s_


def power_conjugacy_transfer(g: Element, h: Element, r: int) -> tuple[bool, Element | None]:
    """Decide conjugacy of ``g, h`` through ``g^r, h^r``; same witness."""
    prof = periodic_profile(g)
    if math.gcd(r, prof.order_in_quotient) != 1:
        raise ValueError(f"r={r} is not coprime to the order {prof.order_in_quotient}")
    ok, x = conjugacy_decide(power(g, r), power(h, r))
    if not ok:
        return False, None
    assert x is not None
    if multiply(multiply(inverse(x), g), x) != h:
        raise AssertionError("transferred witness does not conjugate g to h")
    return True, x


def periodic_root_uniqueness_check(g: Element, a: int, b: int, k: int) -> bool:
    """``g^(k b) ~ D^(k a)`` implies ``g^b ~ D^a``; returns the implication."""
    s = g.structure
    premise = summit_representative(power(g, k * b))[0] == delta_power(s, k * a)
    if not premise:
        return True
    return summit_representative(power(g, b))[0] == delta_power(s, a)


def kth_root_of_periodic(h: Element, k: int) -> Element | None:
    """Some ``x`` with ``x^k = h`` or None, for periodic ``h``.

    A periodic root is conjugate to ``D^u a`` with ``u = floor(INF(h)/k)``;
    the neighbours ``u +- 1`` are scanned as well.
    """
    if k < 1:
        raise ValueError("k must be positive")
    _require_periodic(h)
    s = h.structure
    if k == 1:
        return h
    u0 = math.floor(tinf(h) / k)
    rep = summit_representative(h)[0]
    target = (rep.inf, rep.sup)
    for u in (u0 - 1, u0, u0 + 1):
        for a in s.simples():
            if a == s.delta:
                continue
            x = normalize(s, u, [a])
            xk = power(x, k)
            rx = summit_representative(xk)[0]
            if (rx.inf, rx.sup) != target:
                continue
            ok, w = conjugacy_decide(xk, h)
            if ok:
                assert w is not None
                root = multiply(multiply(inverse(w), x), w)
                assert power(root, k) == h
                return root
    return None


def exp_sum_conjugacy(g: Element, h: Element) -> bool:
    """Periodic elements with unique roots are conjugate iff exponent sums agree."""
    s = g.structure
    if not s.unique_roots:
        raise StructureError(f"{s.name}: exponent sums do not decide conjugacy here")
    _require_periodic(g)
    _require_periodic(h)
    return exponent_sum(g) == exponent_sum(h)


def primitive_table(s: GarsideStructure, max_simples: int = 5000) -> list[Element]:
    """One representative per class-pair ``{[h], [h^-1]}`` of primitive periodic elements.

    1. candidates ``D^u a`` (``0 <= u <= m``) with ``h^k = D^m`` for some
       ``1 <= k <= m |Delta|``;
    2. merge candidates that are conjugate or inverse-conjugate, keeping the
       least normal form;
    3. drop those with a proper root of order ``2 .. m |Delta|``.
    """
    if s.size > max_simples:
        raise StructureError(f"{s.size} simples is too many for the primitive table")
    m, top = s.m, s.m * s.delta_norm
    target = delta_power(s, m)
    cands = []
    for u in range(0, m + 1):
        for a in s.simples():
            if a == s.delta:
                continue
            h = normalize(s, u, [a])
            hk = h
            for k in range(1, top + 1):
                if k > 1:
                    hk = multiply(hk, h)
                if hk == target:
                    cands.append(h)
                    break
                if hk.inf > m:
                    break
    reps: list[Element] = []
    for h in sorted(set(cands), key=Element.sort_key):
        if any(conjugacy_decide(r, h)[0] or conjugacy_decide(inverse(r), h)[0] for r in reps):
            continue
        reps.append(h)
    out = []
    for h in reps:
        if any(kth_root_of_periodic(h, k) is not None for k in range(2, top + 1)):
            continue
        out.append(h)
    return out
