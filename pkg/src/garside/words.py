"""Tokenizer and parser for group words.

Grammar::

    word   := term*
    term   := primary ('^' INT)?
    primary:= NAME | 'D' | '1' | '(' word ')'

Terms are separated by whitespace or parentheses.  ``D`` denotes the Garside
element and ``1`` the identity.  The parser is structure agnostic; atom names
are resolved later, so it reports positions for every error.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z][A-Za-z0-9_.]*)|(?P<one>1(?![0-9]))|(?P<op>[()^])|(?P<int>[+-]?\d+))")


class WordParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int) -> None:
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


@dataclass(frozen=True)
class Letter:
    name: str  # atom name, "D", or "1"
    pos: int


@dataclass(frozen=True)
class Group:
    items: tuple["Term", ...]


@dataclass(frozen=True)
class Term:
    base: Union[Letter, Group]
    exponent: int = 1


def _tokens(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise WordParseError("unexpected character", text, start)
        kind = m.lastgroup
        assert kind is not None
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    return out


def parse_word(text: str) -> tuple[Term, ...]:
    """Parse ``text`` into a tuple of terms."""
    toks = _tokens(text)
    i = 0

    def parse_seq(closing: bool) -> tuple[Term, ...]:
        nonlocal i
        items = []
        while i < len(toks):
            kind, val, pos = toks[i]
            if kind == "op" and val == ")":
                if not closing:
                    raise WordParseError("unmatched ')'", text, pos)
                return tuple(items)
            if kind == "name" or kind == "one":
                base: Union[Letter, Group] = Letter(val, pos)
                i += 1
            elif kind == "op" and val == "(":
                i += 1
                inner = parse_seq(True)
                if i >= len(toks):
                    raise WordParseError("missing ')'", text, pos)
                i += 1
                base = Group(inner)
            else:
                raise WordParseError(f"unexpected token {val!r}", text, pos)
            exp = 1
            if i < len(toks) and toks[i][0] == "op" and toks[i][1] == "^":
                if i + 1 >= len(toks) or toks[i + 1][0] not in ("int", "one"):
                    raise WordParseError("expected integer exponent", text, toks[i][2])
                exp = int(toks[i + 1][1])
                i += 2
            items.append(Term(base, exp))
        if closing:
            raise WordParseError("missing ')'", text, len(text))
        return tuple(items)

    return parse_seq(False)
