"""Group elements in left normal form ``D^u a_1 ... a_l``."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .lattice import GarsideStructure, StructureError
from .words import Group, Letter, Term, WordParseError, parse_word


@dataclass(frozen=True)
class Element:
    """An element of the group of fractions, stored in left normal form.

    Build elements through :func:`normalize` or the helpers below; the raw
    constructor does not check the normal-form invariants.
    """

    structure: GarsideStructure
    u: int
    factors: tuple[int, ...]

    @property
    def inf(self) -> int:
        return self.u

    @property
    def sup(self) -> int:
        return self.u + len(self.factors)

    @property
    def length(self) -> int:
        return len(self.factors)

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (self.u, self.factors)

    def __mul__(self, other: "Element") -> "Element":
        return multiply(self, other)

    def __pow__(self, k: int) -> "Element":
        return power(self, k)

    def __invert__(self) -> "Element":
        return inverse(self)

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"Element({format_element(self)!r})"


def _insert_left(s: GarsideStructure, x: int, nf: list[int]) -> int:
    """Left-multiply the normal sequence ``nf`` by the simple ``x`` in place.

    Returns how many copies of Delta were split off the front.
    """
    if x == s.identity:
        return 0
    if x == s.delta:
        return 1
    mlw = s.make_left_weighted
    carry = x
    for i in range(len(nf)):
        a, b = mlw(carry, nf[i])
        if b == nf[i]:
            # (carry, nf[i]) is already left-weighted; the tail is untouched
            nf.insert(i, carry)
            break
        nf[i] = a
        carry = b
        if carry == s.identity:
            break
    else:
        nf.append(carry)
    shift = 0
    while nf and nf[0] == s.delta:
        nf.pop(0)
        shift += 1
    return shift


def _is_normal(s: GarsideStructure, nf: Sequence[int]) -> bool:
    for a in nf:
        if a == s.identity or a == s.delta:
            return False
    mlw = s.make_left_weighted
    for i in range(len(nf) - 1):
        if mlw(nf[i], nf[i + 1])[1] != nf[i + 1]:
            return False
    return True


def _bubble(s: GarsideStructure, u: int, word: Sequence[int]) -> tuple[int, list[int]]:
    """Reference normalisation: sweep make_left_weighted to a fixed point."""
    f = list(word)
    changed = True
    while changed:
        changed = False
        # pull every Delta to the front and drop identities
        out: list[int] = []
        for x in f:
            if x == s.identity:
                changed = True
            elif x == s.delta:
                out = [s.tau(y, 1) for y in out]
                u += 1
                changed = changed or bool(out)
            else:
                out.append(x)
        f = out
        for i in range(len(f) - 1):
            a, b = s.make_left_weighted(f[i], f[i + 1])
            if (a, b) != (f[i], f[i + 1]):
                f[i], f[i + 1] = a, b
                changed = True
    return u, f


def normalize(s: GarsideStructure, u: int, word: Iterable[int]) -> Element:
    """Normal form of ``D^u * word`` for a word of simples (1 and D allowed)."""
    nf: list[int] = []
    d = 0
    for x in reversed(list(word)):
        d += _insert_left(s, s.tau(x, d), nf)
    if not _is_normal(s, nf):
        d, nf = _bubble(s, d, nf)
    return Element(s, u + d, tuple(nf))


def multiply(g: Element, h: Element) -> Element:
    s = g.structure
    if h.structure is not s:
        raise StructureError("elements live in different structures")
    nf = list(h.factors)
    d = 0
    for x in reversed(g.factors):
        d += _insert_left(s, s.tau(x, h.u + d), nf)
    if not _is_normal(s, nf):
        d, nf = _bubble(s, d, nf)
    return Element(s, g.u + h.u + d, tuple(nf))


def identity(s: GarsideStructure) -> Element:
    return Element(s, 0, ())


def delta_power(s: GarsideStructure, k: int) -> Element:
    return Element(s, k, ())


def simple_element(s: GarsideStructure, a: int) -> Element:
    return normalize(s, 0, [a])


def inverse(g: Element) -> Element:
    s = g.structure
    u, fac = g.u, g.factors
    n = len(fac)
    word = [s.tau(s.right_complement(fac[n - 1 - j]), -u - n + j) for j in range(n)]
    return normalize(s, -u - n, word)


def power(g: Element, k: int) -> Element:
    if k < 0:
        g, k = inverse(g), -k
    result = identity(g.structure)
    base = g
    while k:
        if k & 1:
            result = multiply(result, base)
        k >>= 1
        if k:
            base = multiply(base, base)
    return result


def conjugate(g: Element, x: Element) -> Element:
    """``x^-1 g x``."""
    return multiply(multiply(inverse(x), g), x)


def conjugate_by_simple(g: Element, c: int) -> Element:
    """``c^-1 g c`` for a simple ``c``, via ``c^-1 = D^-1 * left_complement(c)``."""
    s = g.structure
    word = [s.tau(s.left_complement(c), g.u), *g.factors, c]
    return normalize(s, g.u - 1, word)


def inf(g: Element) -> int:
    return g.inf


def sup(g: Element) -> int:
    return g.sup


def canonical_length(g: Element) -> int:
    return g.length


def exponent_sum(g: Element) -> int:
    s = g.structure
    if not s.homogeneous:
        raise StructureError(f"{s.name}: exponent sum needs a homogeneous presentation")
    return g.u * s.delta_norm + sum(s.norm(a) for a in g.factors)


def is_central(g: Element) -> bool:
    s = g.structure
    for a in s.atoms:
        x = simple_element(s, a)
        if multiply(g, x) != multiply(x, g):
            return False
    return True


def is_garside_element(c: Element) -> bool:
    """Whether a positive element is central and divisible by D."""
    if c.u < 0:
        raise StructureError("expected a positive element")
    return c.u >= 1 and is_central(c)


# -- text form -----------------------------------------------------------------


def format_element(g: Element) -> str:
    s = g.structure
    head = f"D^{g.u}"
    if not g.factors:
        return head
    return head + " " + " ".join("(" + " ".join(s.word_names(a)) + ")" for a in g.factors)


def _evaluate(s: GarsideStructure, terms: Sequence[Term], text: str) -> Element:
    result = identity(s)
    run: list[int] = []  # pending positive atoms

    def flush() -> None:
        nonlocal result, run
        if run:
            result = multiply(result, normalize(s, 0, run))
            run = []

    for term in terms:
        base = term.base
        if isinstance(base, Letter):
            if base.name == "D":
                flush()
                result = multiply(result, delta_power(s, term.exponent))
                continue
            if base.name == "1":
                continue
            try:
                atom = s.atoms[s.atom_index(base.name)]
            except StructureError:
                raise WordParseError(f"unknown atom {base.name!r}", text, base.pos) from None
            if term.exponent >= 0:
                run.extend([atom] * term.exponent)
                continue
            flush()
            result = multiply(result, power(simple_element(s, atom), term.exponent))
        else:
            assert isinstance(base, Group)
            flush()
            result = multiply(result, power(_evaluate(s, base.items, text), term.exponent))
    flush()
    return result


def parse_element(s: GarsideStructure, text: str) -> Element:
    """Evaluate a word such as ``"s1 s2^-1 (s1 s2)^3 D^-1"`` in ``s``."""
    return _evaluate(s, parse_word(text), text)


def from_factor_words(s: GarsideStructure, u: int, words: Sequence[Sequence[str]]) -> Element:
    """Normal form of ``D^u`` times simples given as atom-name words."""
    simples = [s.from_atoms(s.atom_index(x) for x in w) for w in words]
    return normalize(s, u, simples)
