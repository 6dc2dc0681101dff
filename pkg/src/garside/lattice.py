"""Garside structures as finite lattices of simple elements.

A structure is addressed through dense integer handles (``SimpleId``): index 0
is the identity and ``structure.delta`` is the Garside element.  Two backends
answer the same queries:

* :class:`TableStructure` stores right multiplication by atoms and derives
  everything else (complements, tau, divisor bitsets) from it.  Indices are
  sorted by norm, so the left meet of two simples is the highest set bit of
  the intersection of their divisor bitsets.
* :class:`PermutationStructure` models the classical braid monoid on ``n``
  strands directly by permutations ranked in lexicographic order, with the
  left weak order computed from inversion counts.  Nothing is tabulated, so it
  stays usable up to ``n`` around 8.
"""

from __future__ import annotations

import json
import math
from abc import ABC, abstractmethod
from collections import deque
from typing import Callable, Hashable, Iterable, Sequence

MAX_SIMPLES = 10**6


class StructureError(ValueError):
    """Raised for malformed or oversized Garside structures."""


class GarsideStructure(ABC):
    """Common interface for a Garside monoid's set of simple elements."""

    identity = 0
    name: str
    atom_names: tuple[str, ...]
    atoms: tuple[int, ...]
    delta: int
    # Presentation flags, set by the catalog.
    homogeneous: bool = True
    unique_roots: bool = False

    def __init__(self) -> None:
        self._mlw_cache: dict[tuple[int, int], tuple[int, int]] = {}
        self._m: int | None = None

    # -- primitives every backend supplies -------------------------------

    @property
    @abstractmethod
    def size(self) -> int: ...

    @abstractmethod
    def norm(self, a: int) -> int: ...

    @abstractmethod
    def word(self, a: int) -> tuple[int, ...]:
        """Canonical atom word of ``a`` as positions into ``atom_names``."""

    @abstractmethod
    def product(self, a: int, b: int) -> int | None:
        """The simple ``a*b``, or None when the product is not simple."""

    @abstractmethod
    def right_divide(self, a: int, b: int) -> int:
        """The simple ``c`` with ``a*c = b``; requires ``a <=_L b``."""

    @abstractmethod
    def left_divides(self, a: int, b: int) -> bool: ...

    @abstractmethod
    def right_complement(self, a: int) -> int: ...

    @abstractmethod
    def left_complement(self, a: int) -> int: ...

    @abstractmethod
    def tau(self, a: int, power: int = 1) -> int: ...

    def _tau1(self, a: int) -> int:
        return self.tau(a, 1)

    @abstractmethod
    def lower_covers(self, a: int) -> list[int]:
        """Simples ``c`` with ``c*s = a`` for some atom ``s``."""

    # -- derived operations ---------------------------------------------

    @property
    def delta_norm(self) -> int:
        return self.norm(self.delta)

    @property
    def m(self) -> int:
        """Order of tau; tau is an automorphism, so its action on atoms decides it."""
        if self._m is None:
            order = 1
            for s in self.atoms:
                k, x = 1, self._tau1(s)
                while x != s:
                    x = self._tau1(x)
                    k += 1
                order = order * k // math.gcd(order, k)
            self._m = order
        return self._m

    def simples(self) -> range:
        return range(self.size)

    def right_divides(self, a: int, b: int) -> bool:
        """``a <=_R b``: holds iff the left complement of b left-divides that of a."""
        return self.left_divides(self.left_complement(b), self.left_complement(a))

    def left_meet(self, a: int, b: int) -> int:
        c = self.identity
        grown = True
        while grown:
            grown = False
            for s in self.atoms:
                d = self.product(c, s)
                if d is not None and self.left_divides(d, a) and self.left_divides(d, b):
                    c, grown = d, True
                    break
        return c

    def left_join(self, a: int, b: int) -> int:
        c = self.delta
        shrunk = True
        while shrunk:
            shrunk = False
            for d in self.lower_covers(c):
                if self.left_divides(a, d) and self.left_divides(b, d):
                    c, shrunk = d, True
                    break
        return c

    def left_divisors(self, a: int) -> set[int]:
        seen = {a}
        stack = [a]
        while stack:
            for c in self.lower_covers(stack.pop()):
                if c not in seen:
                    seen.add(c)
                    stack.append(c)
        return seen

    def make_left_weighted(self, a: int, b: int) -> tuple[int, int]:
        key = (a, b)
        hit = self._mlw_cache.get(key)
        if hit is None:
            t = self.left_meet(self.right_complement(a), b)
            if t == self.identity:
                hit = key
            else:
                ab = self.product(a, t)
                assert ab is not None
                hit = (ab, self.right_divide(t, b))
            self._mlw_cache[key] = hit
        return hit

    def from_atoms(self, positions: Iterable[int]) -> int:
        """The simple spelled by atom positions; raises if the word is not simple."""
        c = self.identity
        for i in positions:
            d = self.product(c, self.atoms[i])
            if d is None:
                raise StructureError("word is not a simple element")
            c = d
        return c

    def atom_index(self, name: str) -> int:
        try:
            return self.atom_names.index(name)
        except ValueError:
            raise StructureError(f"unknown atom {name!r}") from None

    def word_names(self, a: int) -> list[str]:
        return [self.atom_names[i] for i in self.word(a)]

    def format_simple(self, a: int) -> str:
        if a == self.identity:
            return "1"
        if a == self.delta:
            return "D"
        return " ".join(self.word_names(a))

    # -- serialisation ----------------------------------------------------

    def to_dict(self) -> dict:
        covers = []
        for a in range(self.size):
            row = []
            for i, s in enumerate(self.atoms):
                b = self.product(a, s)
                if b is not None:
                    row.append([i, b])
            covers.append(row)
        return {
            "name": self.name,
            "atoms": list(self.atom_names),
            "simples": [self.word_names(a) for a in range(self.size)],
            "delta": self.delta,
            "tau": [self.tau(a, 1) for a in range(self.size)],
            "m": self.m,
            "left_divisibility": covers,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name} |S|={self.size}>"


class TableStructure(GarsideStructure):
    """Explicit table backend.

    ``rmul[a][i]`` is the index of ``a * atom_i`` or -1.  Indices must be
    ordered by nondecreasing norm with the identity first.
    """

    def __init__(
        self,
        name: str,
        atom_names: Sequence[str],
        rmul: Sequence[Sequence[int]],
        delta: int,
        words: Sequence[Sequence[int]] | None = None,
    ) -> None:
        super().__init__()
        size = len(rmul)
        if size > MAX_SIMPLES:
            raise StructureError(f"{size} simples exceeds the limit of {MAX_SIMPLES}")
        self.name = name
        self.atom_names = tuple(atom_names)
        if "D" in self.atom_names:
            raise StructureError("'D' is reserved for the Garside element")
        k = len(self.atom_names)
        self._rmul = [list(row) for row in rmul]
        self.delta = delta
        self._size = size

        # BFS from the identity fixes norms and canonical words.
        depth = [-1] * size
        parent: list[tuple[int, int]] = [(-1, -1)] * size
        depth[0] = 0
        queue = deque([0])
        while queue:
            a = queue.popleft()
            for i in range(k):
                b = self._rmul[a][i]
                if b < 0:
                    continue
                if depth[b] < 0:
                    depth[b] = depth[a] + 1
                    parent[b] = (a, i)
                    queue.append(b)
                elif depth[b] != depth[a] + 1:
                    raise StructureError("presentation is not homogeneous")
        if min(depth) < 0:
            raise StructureError("some simples are unreachable from the identity")
        if any(depth[a] > depth[a + 1] for a in range(size - 1)):
            raise StructureError("simples must be indexed by nondecreasing norm")
        self._norm = depth
        self.atoms = tuple(self._rmul[0][i] for i in range(k))
        if any(s <= 0 for s in self.atoms):
            raise StructureError("every atom must be a simple")

        if words is None:
            computed: list[tuple[int, ...]] = [()] * size
            for a in range(1, size):
                p, i = parent[a]
                computed[a] = computed[p] + (i,)
            self._words = computed
        else:
            self._words = [tuple(w) for w in words]
            for a, w in enumerate(self._words):
                if self.from_atoms(w) != a:
                    raise StructureError(f"canonical word of simple {a} does not spell it")

        self._pred: list[list[int]] = [[] for _ in range(size)]
        for a in range(size):
            for b in self._rmul[a]:
                if b >= 0:
                    self._pred[b].append(a)

        # Left multiplication by atoms: s*(c*t) = (s*c)*t along the BFS tree.
        lmul = [[-1] * size for _ in range(k)]
        for i in range(k):
            row = lmul[i]
            row[0] = self.atoms[i]
            for a in range(1, size):
                p, j = parent[a]
                sp = row[p]
                if sp >= 0:
                    row[a] = self._rmul[sp][j]
        self._ldiv = [[-1] * size for _ in range(k)]
        for i in range(k):
            for a, b in enumerate(lmul[i]):
                if b >= 0:
                    self._ldiv[i][b] = a

        self._rcomp = [self.right_divide(a, delta) for a in range(size)]
        if sorted(self._rcomp) != list(range(size)):
            raise StructureError("Garside element is not balanced")
        self._lcomp = [0] * size
        for a, b in enumerate(self._rcomp):
            self._lcomp[b] = a
        self._tau = [self._rcomp[self._rcomp[a]] for a in range(size)]
        self._tau_powers: dict[int, list[int]] = {0: list(range(size)), 1: self._tau}
        self._divs: list[int] | None = None
        self._mults: list[int] | None = None

    @property
    def size(self) -> int:
        return self._size

    def norm(self, a: int) -> int:
        return self._norm[a]

    def word(self, a: int) -> tuple[int, ...]:
        return self._words[a]

    def product(self, a: int, b: int) -> int | None:
        rmul = self._rmul
        for i in self._words[b]:
            a = rmul[a][i]
            if a < 0:
                return None
        return a

    def right_divide(self, a: int, b: int) -> int:
        for i in self._words[a]:
            b = self._ldiv[i][b]
            if b < 0:
                raise StructureError("left division by a non-divisor")
        return b

    @property
    def divisor_bits(self) -> list[int]:
        if self._divs is None:
            divs = [0] * self._size
            for a in range(self._size):
                bits = 1 << a
                for c in self._pred[a]:
                    bits |= divs[c]
                divs[a] = bits
            self._divs = divs
        return self._divs

    @property
    def multiple_bits(self) -> list[int]:
        if self._mults is None:
            mults = [0] * self._size
            for a in range(self._size - 1, -1, -1):
                bits = 1 << a
                for b in self._rmul[a]:
                    if b >= 0:
                        bits |= mults[b]
                mults[a] = bits
            self._mults = mults
        return self._mults

    def left_divides(self, a: int, b: int) -> bool:
        return bool(self.divisor_bits[b] >> a & 1)

    def left_meet(self, a: int, b: int) -> int:
        divs = self.divisor_bits
        return (divs[a] & divs[b]).bit_length() - 1

    def left_join(self, a: int, b: int) -> int:
        mults = self.multiple_bits
        common = mults[a] & mults[b]
        return (common & -common).bit_length() - 1

    def left_divisors(self, a: int) -> set[int]:
        bits = self.divisor_bits[a]
        out = set()
        while bits:
            low = bits & -bits
            out.add(low.bit_length() - 1)
            bits ^= low
        return out

    def right_complement(self, a: int) -> int:
        return self._rcomp[a]

    def left_complement(self, a: int) -> int:
        return self._lcomp[a]

    def _tau1(self, a: int) -> int:
        return self._tau[a]

    def tau(self, a: int, power: int = 1) -> int:
        k = power % self.m
        table = self._tau_powers.get(k)
        if table is None:
            table = list(range(self._size))
            for _ in range(k):
                table = [self._tau[x] for x in table]
            self._tau_powers[k] = table
        return table[a]

    def lower_covers(self, a: int) -> list[int]:
        return self._pred[a]

    @classmethod
    def from_dict(cls, data: dict) -> "TableStructure":
        names = data["atoms"]
        pos = {name: i for i, name in enumerate(names)}
        size = len(data["simples"])
        rmul = [[-1] * len(names) for _ in range(size)]
        for a, row in enumerate(data["left_divisibility"]):
            for i, b in row:
                rmul[a][i] = b
        words = [[pos[x] for x in w] for w in data["simples"]]
        out = cls(data["name"], names, rmul, data["delta"], words)
        if [out.tau(a) for a in range(size)] != list(data["tau"]):
            raise StructureError("stored tau disagrees with the recomputed one")
        if out.m != data["m"]:
            raise StructureError("stored m disagrees with the order of tau")
        return out

    @classmethod
    def loads(cls, text: str) -> "TableStructure":
        return cls.from_dict(json.loads(text))


def build_table(
    name: str,
    atom_names: Sequence[str],
    identity: Hashable,
    atoms: Sequence[Hashable],
    multiply: Callable[[Hashable, Hashable], Hashable | None],
    delta: Hashable,
) -> TableStructure:
    """Close ``identity`` under right multiplication by atoms.

    ``multiply(x, s)`` returns the model of the simple ``x*s`` or None when
    that product is not simple.
    """
    index = {identity: 0}
    models = [identity]
    rmul: list[list[int]] = []
    a = 0
    while a < len(models):
        row = []
        for s in atoms:
            y = multiply(models[a], s)
            if y is None:
                row.append(-1)
                continue
            j = index.get(y)
            if j is None:
                j = index[y] = len(models)
                models.append(y)
                if len(models) > MAX_SIMPLES:
                    raise StructureError(f"more than {MAX_SIMPLES} simples")
            row.append(j)
        rmul.append(row)
        a += 1
    if delta not in index:
        raise StructureError("Garside element is not among the simples")
    return TableStructure(name, atom_names, rmul, index[delta])


# -- permutation backend --------------------------------------------------


def _compose(u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    return tuple(u[i] for i in v)


def _inverse(u: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(u)
    for i, x in enumerate(u):
        out[x] = i
    return tuple(out)


def _inversions(u: Sequence[int]) -> int:
    n = len(u)
    return sum(1 for i in range(n) for j in range(i + 1, n) if u[i] > u[j])


class PermutationStructure(GarsideStructure):
    """Classical braid monoid on ``n`` strands with simples as permutations.

    Atom ``s_i`` is the transposition of positions i-1 and i; products compose
    as functions, ``(uv)(x) = u(v(x))``.  The handle of a permutation is its
    rank in lexicographic order, so 0 is the identity and ``n! - 1`` is the
    longest element.
    """

    def __init__(self, n: int, name: str | None = None) -> None:
        super().__init__()
        if n < 2:
            raise StructureError("need at least two strands")
        size = math.factorial(n)
        if size > MAX_SIMPLES:
            raise StructureError(f"{size} simples exceeds the limit of {MAX_SIMPLES}")
        self.n = n
        self.name = name or f"A:{n - 1}"
        self.atom_names = tuple(f"s{i}" for i in range(1, n))
        self._size = size
        self._fact = [math.factorial(k) for k in range(n + 1)]
        self.atoms = tuple(self.rank(self._atom_perm(i)) for i in range(n - 1))
        self.delta = size - 1
        self._w0 = tuple(range(n - 1, -1, -1))

    def _atom_perm(self, i: int) -> tuple[int, ...]:
        p = list(range(self.n))
        p[i], p[i + 1] = p[i + 1], p[i]
        return tuple(p)

    def rank(self, perm: Sequence[int]) -> int:
        n = self.n
        r = 0
        for i in range(n):
            smaller = sum(1 for j in range(i + 1, n) if perm[j] < perm[i])
            r += smaller * self._fact[n - 1 - i]
        return r

    def perm(self, a: int) -> tuple[int, ...]:
        pool = list(range(self.n))
        out = []
        for i in range(self.n - 1, -1, -1):
            q, a = divmod(a, self._fact[i])
            out.append(pool.pop(q))
        return tuple(out)

    @property
    def size(self) -> int:
        return self._size

    def norm(self, a: int) -> int:
        return _inversions(self.perm(a))

    def word(self, a: int) -> tuple[int, ...]:
        p = list(self.perm(a))
        out: list[int] = []
        while True:
            for i in range(self.n - 1):
                if p[i] > p[i + 1]:
                    p[i], p[i + 1] = p[i + 1], p[i]
                    out.append(i)
                    break
            else:
                return tuple(reversed(out))

    def product(self, a: int, b: int) -> int | None:
        pa, pb = self.perm(a), self.perm(b)
        c = _compose(pa, pb)
        if _inversions(c) != _inversions(pa) + _inversions(pb):
            return None
        return self.rank(c)

    def right_divide(self, a: int, b: int) -> int:
        if not self.left_divides(a, b):
            raise StructureError("left division by a non-divisor")
        return self.rank(_compose(_inverse(self.perm(a)), self.perm(b)))

    def left_divides(self, a: int, b: int) -> bool:
        pa, pb = self.perm(a), self.perm(b)
        return _inversions(pa) + _inversions(_compose(_inverse(pa), pb)) == _inversions(pb)

    def right_complement(self, a: int) -> int:
        return self.rank(_compose(_inverse(self.perm(a)), self._w0))

    def left_complement(self, a: int) -> int:
        return self.rank(_compose(self._w0, _inverse(self.perm(a))))

    def tau(self, a: int, power: int = 1) -> int:
        if power % 2 == 0:
            return a
        w0 = self._w0
        return self.rank(_compose(w0, _compose(self.perm(a), w0)))

    def lower_covers(self, a: int) -> list[int]:
        p = self.perm(a)
        out = []
        for i in range(self.n - 1):
            if p[i] > p[i + 1]:
                q = list(p)
                q[i], q[i + 1] = q[i + 1], q[i]
                out.append(self.rank(q))
        return out

    def left_meet(self, a: int, b: int) -> int:
        # Grow a common prefix one atom at a time, working on permutations.
        pa, pb = self.perm(a), self.perm(b)
        ia, ib = _inverse(pa), _inverse(pb)
        c = list(range(self.n))
        while True:
            for i in range(self.n - 1):
                # c*s_i is a prefix of x iff values c[i], c[i+1] are inverted in x.
                lo, hi = c[i], c[i + 1]
                if ia[lo] > ia[hi] and ib[lo] > ib[hi] and lo < hi:
                    c[i], c[i + 1] = hi, lo
                    break
            else:
                return self.rank(c)
