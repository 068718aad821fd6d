"""Finite presentations, their triangle cost, and the text format.

Text grammar::

    presentation := "<" gen-list "|" relator-list ">"
    gen-list     := ident ("," ident)*
    relator-list := (word ("," word)*)?
    word         := factor+
    factor       := ident | ident "^" int | "(" word ")" ("^" int)?

Whitespace is insignificant and negative exponents denote inverses.
Exponents are expanded while parsing, so a parsed word is a flat tuple of
letters.  Two small extensions: identifiers may contain ``_`` after the
first character, and the token ``1`` denotes the empty word.
"""

import re
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .words import Word, cyclic_reduce, inverse

__all__ = [
    "Presentation",
    "PresentationError",
    "PresentationSyntaxError",
    "UnknownGeneratorError",
    "DuplicateGeneratorError",
    "parse_presentation",
    "parse_word",
    "format_word",
    "format_presentation",
    "relator_cost",
    "tcost",
    "triangulate",
    "wedge",
]


class PresentationError(ValueError):
    """Base class for malformed presentations."""


class PresentationSyntaxError(PresentationError):
    def __init__(self, message, line, column):
        super().__init__(f"{message} at line {line}, column {column}")
        self.line = line
        self.column = column


class UnknownGeneratorError(PresentationSyntaxError):
    def __init__(self, name, line, column):
        super().__init__(f"unknown generator {name!r}", line, column)
        self.name = name


class DuplicateGeneratorError(PresentationSyntaxError):
    def __init__(self, name, line, column):
        super().__init__(f"duplicate generator {name!r}", line, column)
        self.name = name


_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class Presentation:
    """``< generators | relators >`` with relators stored as letter tuples."""

    generators: Tuple[str, ...]
    relators: Tuple[Word, ...] = ()

    def __post_init__(self):
        gens = tuple(self.generators)
        rels = tuple(tuple(r) for r in self.relators)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relators", rels)
        if len(set(gens)) != len(gens):
            seen = set()
            dup = next(g for g in gens if g in seen or seen.add(g))
            raise PresentationError(f"duplicate generator {dup!r}")
        for g in gens:
            if not _IDENT.match(g):
                raise PresentationError(f"invalid generator name {g!r}")
        n = len(gens)
        for r in rels:
            for x in r:
                if x == 0 or abs(x) > n:
                    raise PresentationError(f"letter {x} out of range in relator {r}")

    @property
    def ngens(self) -> int:
        return len(self.generators)

    def index_of(self, name: str) -> int:
        return self.generators.index(name)

    def word(self, text: str) -> Word:
        """Parse a word over this presentation's generators."""
        return parse_word(text, self.generators)

    def format_word(self, w: Sequence[int]) -> str:
        return format_word(w, self.generators)

    def lengths(self) -> List[int]:
        return [len(r) for r in self.relators]

    def is_triangular(self) -> bool:
        return all(len(r) <= 3 for r in self.relators)

    def euler_characteristic(self) -> int:
        return 1 - self.ngens + len(self.relators)

    def __str__(self):
        return format_presentation(self)


# ---------------------------------------------------------------------------
# parsing

_WS = re.compile(r"\s*")
_TOKEN = re.compile(r"\s*(?:(?P<ident>[A-Za-z][A-Za-z0-9_]*)|(?P<int>-?[0-9]+)|(?P<punct>[<>|,()^]))")


class _Tokens:
    def __init__(self, text):
        self.text = text
        self.items = []
        pos = 0
        while True:
            m = _WS.match(text, pos)
            pos = m.end()
            if pos >= len(text):
                break
            m = _TOKEN.match(text, pos)
            if m is None or m.end() == pos:
                line, col = self._where(pos)
                raise PresentationSyntaxError(f"unexpected character {text[pos]!r}", line, col)
            kind = m.lastgroup
            start = m.start(kind)
            self.items.append((kind, m.group(kind), start))
            pos = m.end()
        self.i = 0

    def _where(self, offset):
        line = self.text.count("\n", 0, offset) + 1
        col = offset - (self.text.rfind("\n", 0, offset) + 1) + 1
        return line, col

    def peek(self):
        if self.i < len(self.items):
            return self.items[self.i]
        return ("eof", "", len(self.text))

    def next(self):
        tok = self.peek()
        self.i += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        line, col = self._where(tok[2])
        found = "end of input" if tok[0] == "eof" else repr(tok[1])
        return PresentationSyntaxError(f"{message}, found {found}", line, col)

    def expect(self, value):
        tok = self.peek()
        if tok[0] != "punct" or tok[1] != value:
            raise self.error(f"expected {value!r}")
        return self.next()


def _parse_int(toks):
    tok = toks.next()
    if tok[0] != "int":
        raise toks.error("expected integer exponent", tok)
    return int(tok[1])


def _starts_factor(tok):
    return tok[0] == "ident" or (tok[0] == "punct" and tok[1] == "(") or (tok[0] == "int" and tok[1] == "1")


def _parse_factor(toks, index):
    tok = toks.peek()
    if tok[0] == "ident":
        toks.next()
        if tok[1] not in index:
            line, col = toks._where(tok[2])
            raise UnknownGeneratorError(tok[1], line, col)
        base = (index[tok[1]] + 1,)
    elif tok[0] == "int" and tok[1] == "1":
        toks.next()
        base = ()
    elif tok[0] == "punct" and tok[1] == "(":
        toks.next()
        base = _parse_word(toks, index)
        toks.expect(")")
    else:
        raise toks.error("expected generator or '('")
    nxt = toks.peek()
    if nxt[0] == "punct" and nxt[1] == "^":
        toks.next()
        k = _parse_int(toks)
        return inverse(base) * (-k) if k < 0 else base * k
    return base


def _parse_word(toks, index):
    if not _starts_factor(toks.peek()):
        raise toks.error("expected a word")
    out = ()
    while _starts_factor(toks.peek()):
        out += _parse_factor(toks, index)
    return out


def parse_presentation(text: str) -> Presentation:
    toks = _Tokens(text)
    toks.expect("<")
    names = []
    index = {}
    tok = toks.peek()
    if tok[0] == "ident":
        while True:
            tok = toks.next()
            if tok[0] != "ident":
                raise toks.error("expected generator name", tok)
            if tok[1] in index:
                line, col = toks._where(tok[2])
                raise DuplicateGeneratorError(tok[1], line, col)
            index[tok[1]] = len(names)
            names.append(tok[1])
            if toks.peek()[:2] == ("punct", ","):
                toks.next()
                continue
            break
    toks.expect("|")
    relators = []
    if toks.peek()[:2] != ("punct", ">"):
        while True:
            relators.append(_parse_word(toks, index))
            if toks.peek()[:2] == ("punct", ","):
                toks.next()
                continue
            break
    toks.expect(">")
    if toks.peek()[0] != "eof":
        raise toks.error("trailing input")
    return Presentation(tuple(names), tuple(relators))


def parse_word(text: str, generators: Sequence[str]) -> Word:
    toks = _Tokens(text)
    index = {g: k for k, g in enumerate(generators)}
    w = _parse_word(toks, index)
    if toks.peek()[0] != "eof":
        raise toks.error("trailing input")
    return w


def format_word(w: Sequence[int], generators: Sequence[str]) -> str:
    """Canonical text of a word: maximal runs become ``x^k``, ``x^-k``."""
    if not w:
        return "1"
    parts = []
    k = 0
    while k < len(w):
        x = w[k]
        run = 1
        while k + run < len(w) and w[k + run] == x:
            run += 1
        name = generators[abs(x) - 1]
        exp = run if x > 0 else -run
        parts.append(name if exp == 1 else f"{name}^{exp}")
        k += run
    return " ".join(parts)


def format_presentation(p: Presentation) -> str:
    gens = ", ".join(p.generators)
    rels = ", ".join(format_word(r, p.generators) for r in p.relators)
    head = f"< {gens} |" if gens else "< |"
    return f"{head} {rels} >" if rels else f"{head} >"


# ---------------------------------------------------------------------------
# cost


def relator_cost(w: Sequence[int]) -> int:
    return max(0, len(cyclic_reduce(w)) - 2)


def tcost(p: Presentation) -> int:
    """Number of triangles: sum of max(0, |r| - 2) over cyclically reduced relators."""
    return sum(relator_cost(r) for r in p.relators)


def _fresh_names(taken, count, prefix="t"):
    taken = set(taken)
    out = []
    k = 1
    while len(out) < count:
        name = f"{prefix}{k}"
        if name not in taken:
            out.append(name)
            taken.add(name)
        k += 1
    return out


def triangulate(p: Presentation) -> Presentation:
    """Fan-split every relator longer than 3 into length-3 relators.

    A cyclically reduced relator ``l1 ... lk`` with k > 3 becomes
    ``t1 l1 l2``, ``t2 t1^-1 l3``, ..., ``t_{k-3}^-1 l_{k-1} lk`` with new
    generators t1..t_{k-3}, one per diagonal of the k-gon.
    """
    long = [cyclic_reduce(r) for r in p.relators]
    need = sum(max(0, len(r) - 3) for r in long)
    if p.is_triangular():
        return p
    fresh = iter(_fresh_names(p.generators, need))
    gens = list(p.generators)
    relators = []
    for raw, r in zip(p.relators, long):
        if len(raw) <= 3:
            relators.append(raw)
            continue
        if len(r) <= 3:
            relators.append(r)
            continue
        diag = []
        for _ in range(len(r) - 3):
            gens.append(next(fresh))
            diag.append(len(gens))
        relators.append((diag[0], r[0], r[1]))
        for k in range(1, len(diag)):
            relators.append((diag[k], -diag[k - 1], r[k + 1]))
        relators.append((-diag[-1], r[-2], r[-1]))
    return Presentation(tuple(gens), tuple(relators))


def wedge(*parts: Presentation) -> Presentation:
    """Disjoint union of generators and relators (a free product).

    Clashing generator names are made distinct by suffixing the factor
    number.
    """
    all_names = [g for q in parts for g in q.generators]
    clash = len(set(all_names)) != len(all_names)
    gens = []
    rels = []
    for k, q in enumerate(parts, start=1):
        shift = len(gens)
        gens.extend(f"{g}_f{k}" if clash else g for g in q.generators)
        for r in q.relators:
            rels.append(tuple(x + shift if x > 0 else x - shift for x in r))
    return Presentation(tuple(gens), tuple(rels))
