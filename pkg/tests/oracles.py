"""Brute-force reference computations independent of the summit machinery."""

from garside.element import conjugate_by_simple, inverse, multiply, simple_element


def conjugate_ball(g, radius):
    """All ``x^-1 g x`` with ``x`` a word of at most ``radius`` atoms or inverse atoms."""
    s = g.structure
    letters = []
    for a in s.atoms:
        x = simple_element(s, a)
        letters.append((x, inverse(x)))
        letters.append((inverse(x), x))
    seen = {g}
    frontier = [g]
    for _ in range(radius):
        nxt = []
        for h in frontier:
            for x, xi in letters:
                k = multiply(multiply(xi, h), x)
                if k not in seen:
                    seen.add(k)
                    nxt.append(k)
        frontier = nxt
    return seen


def summit_sets_bruteforce(g, radius):
    ball = conjugate_ball(g, radius)
    top = max(h.inf for h in ball)
    low = min(h.sup for h in ball if h.inf == top)
    summit = {h for h in ball if h.inf == top}
    sss = {h for h in summit if h.sup == low}
    return summit, sss


def same_class(g, h, radius):
    return bool(conjugate_ball(g, radius) & conjugate_ball(h, radius))
