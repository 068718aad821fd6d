"""Coset tables, Todd-Coxeter enumeration and low-index subgroups.

Columns of a table are ordered ``g0, g0^-1, g1, g1^-1, ...``; the column of
letter ``x`` is :func:`column`.  Tables are stored 0-based in memory, with
coset 0 the subgroup itself; the JSON form is 1-based.
"""

import json
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .presentation import Presentation
from .words import Word

__all__ = [
    "CosetTable",
    "SubgroupSpec",
    "CapacityExceeded",
    "column",
    "todd_coxeter",
    "low_index_subgroups",
    "check_table",
    "standardize",
    "trivial_table",
    "table_from_permutations",
]


def column(x: int) -> int:
    return 2 * (abs(x) - 1) + (0 if x > 0 else 1)


class CapacityExceeded(RuntimeError):
    """Enumeration did not close within the coset limit.

    This says nothing about whether the index is actually infinite.
    """


@dataclass(frozen=True)
class SubgroupSpec:
    generator_words: Tuple[Word, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "generator_words", tuple(tuple(w) for w in self.generator_words))

    @classmethod
    def parse(cls, text: str, p: Presentation) -> "SubgroupSpec":
        text = text.strip()
        if not text:
            return cls(())
        return cls(tuple(p.word(part) for part in text.split(",")))


@dataclass(frozen=True)
class CosetTable:
    """Complete right-coset action: ``rows[c][column(x)]`` is ``c . x``."""

    ngens: int
    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))

    @property
    def index(self) -> int:
        return len(self.rows)

    def act(self, coset: int, x: int) -> int:
        return self.rows[coset][column(x)]

    def trace(self, coset: int, w: Sequence[int]) -> int:
        for x in w:
            coset = self.rows[coset][column(x)]
        return coset

    def permutation(self, gen: int) -> Tuple[int, ...]:
        return tuple(r[2 * gen] for r in self.rows)

    def flat(self) -> Tuple[int, ...]:
        return tuple(v for r in self.rows for v in r)

    def to_json(self) -> str:
        obj = {
            "index": self.index,
            "ngens": self.ngens,
            "action": [[v + 1 for v in r] for r in self.rows],
        }
        return json.dumps(obj, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "CosetTable":
        obj = json.loads(text) if isinstance(text, str) else text
        rows = tuple(tuple(v - 1 for v in r) for r in obj["action"])
        if len(rows) != obj["index"]:
            raise ValueError("index does not match the number of rows")
        ngens = obj.get("ngens", len(rows[0]) // 2 if rows else 0)
        t = cls(ngens, rows)
        _check_permutations(t)
        return t


def trivial_table(ngens: int) -> CosetTable:
    return CosetTable(ngens, (tuple([0] * (2 * ngens)),))


def table_from_permutations(perms: Sequence[Sequence[int]]) -> CosetTable:
    """Table from the images of each generator (0-based permutations).

    The cosets are renumbered into standard form from coset 0.
    """
    d = len(perms[0]) if perms else 1
    rows = []
    for c in range(d):
        row = []
        for perm in perms:
            row.append(perm[c])
            row.append(perm.index(c))
        rows.append(tuple(row))
    return standardize(CosetTable(len(perms), tuple(rows)))


def _check_permutations(t: CosetTable):
    d = t.index
    for c, row in enumerate(t.rows):
        if len(row) != 2 * t.ngens:
            raise ValueError("row has wrong width")
        for col, v in enumerate(row):
            if not 0 <= v < d:
                raise ValueError(f"entry {v} out of range")
            if t.rows[v][col ^ 1] != c:
                raise ValueError("generator columns are not inverse permutations")


def standardize(t: CosetTable, base: int = 0) -> CosetTable:
    """Renumber cosets in order of first appearance, scanning from ``base``."""
    order = [base]
    new = {base: 0}
    k = 0
    while k < len(order):
        c = order[k]
        for v in t.rows[c]:
            if v not in new:
                new[v] = len(order)
                order.append(v)
        k += 1
    if len(order) != t.index:
        raise ValueError("coset action is not transitive")
    rows = tuple(tuple(new[v] for v in t.rows[c]) for c in order)
    return CosetTable(t.ngens, rows)


def check_table(p: Presentation, t: CosetTable, subgroup: Optional[SubgroupSpec] = None) -> None:
    """Raise ValueError unless ``t`` is a valid complete table for ``p``."""
    if t.ngens != p.ngens:
        raise ValueError("table and presentation disagree on generator count")
    _check_permutations(t)
    for c in range(t.index):
        for r in p.relators:
            if t.trace(c, r) != c:
                raise ValueError(f"relator does not close at coset {c}")
    if subgroup is not None:
        for w in subgroup.generator_words:
            if t.trace(0, w) != 0:
                raise ValueError("subgroup generator does not fix coset 0")
    standardize(t)


# ---------------------------------------------------------------------------
# Todd-Coxeter, HLT strategy with lookahead


class _Enumerator:
    def __init__(self, p: Presentation, max_cosets: int):
        self.ncols = 2 * p.ngens
        self.max_cosets = max_cosets
        self.table: List[List[Optional[int]]] = [[None] * self.ncols]
        self.parent = [0]
        self.relators = [[column(x) for x in r] for r in p.relators if r]

    def live(self, c):
        return self.parent[c] == c

    def rep(self, c):
        root = c
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[c] != root:
            self.parent[c], c = root, self.parent[c]
        return root

    def define(self, c, col):
        if len(self.table) >= self.max_cosets:
            raise _NoSpace
        b = len(self.table)
        self.table.append([None] * self.ncols)
        self.parent.append(b)
        self.table[c][col] = b
        self.table[b][col ^ 1] = c

    def merge(self, a, b, queue):
        a, b = self.rep(a), self.rep(b)
        if a != b:
            a, b = min(a, b), max(a, b)
            self.parent[b] = a
            queue.append(b)

    def coincidence(self, a, b):
        queue = []
        self.merge(a, b, queue)
        i = 0
        while i < len(queue):
            e = queue[i]
            i += 1
            row = self.table[e]
            for col in range(self.ncols):
                f = row[col]
                if f is None:
                    continue
                self.table[f][col ^ 1] = None
                e1, f1 = self.rep(e), self.rep(f)
                if self.table[e1][col] is not None:
                    self.merge(f1, self.table[e1][col], queue)
                elif self.table[f1][col ^ 1] is not None:
                    self.merge(e1, self.table[f1][col ^ 1], queue)
                else:
                    self.table[e1][col] = f1
                    self.table[f1][col ^ 1] = e1

    def scan(self, c, word, define):
        table = self.table
        f = b = c
        i, j = 0, len(word) - 1
        while True:
            while i <= j and table[f][word[i]] is not None:
                f = table[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and table[b][word[j] ^ 1] is not None:
                b = table[b][word[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                table[f][word[i]] = b
                table[b][word[i] ^ 1] = f
                return
            if not define:
                return
            self.define(f, word[i])

    def lookahead(self):
        for c in range(len(self.table)):
            if not self.live(c):
                continue
            for w in self.relators:
                if not self.live(c):
                    break
                self.scan(c, w, define=False)

    def compact(self, alpha):
        """Renumber live cosets consecutively; returns the new position of alpha."""
        new = {}
        for c in range(len(self.table)):
            if self.live(c):
                new[c] = len(new)
        self.table = [[None if v is None else new[self.rep(v)] for v in self.table[c]]
                      for c in range(len(self.table)) if c in new]
        self.parent = list(range(len(self.table)))
        return sum(1 for c in new if c < alpha)

    def run(self, subgroup_words):
        for w in subgroup_words:
            if not w:
                continue
            cols = [column(x) for x in w]
            while True:
                try:
                    self.scan(0, cols, True)
                    break
                except _NoSpace:
                    self._make_room(0)
        alpha = 0
        while alpha < len(self.table):
            if self.live(alpha):
                alpha = self._fill_row(alpha)
            alpha += 1

    def _make_room(self, alpha):
        """Lookahead plus compaction; returns (new position, still live)."""
        self.lookahead()
        alive = self.live(alpha)
        alpha = self.compact(alpha)
        if len(self.table) >= self.max_cosets:
            raise CapacityExceeded(f"coset enumeration exceeded {self.max_cosets} cosets")
        return alpha, alive

    def _fill_row(self, alpha):
        while True:
            try:
                for w in self.relators:
                    if not self.live(alpha):
                        return alpha
                    self.scan(alpha, w, True)
                for col in range(self.ncols):
                    if not self.live(alpha):
                        return alpha
                    if self.table[alpha][col] is None:
                        self.define(alpha, col)
                return alpha
            except _NoSpace:
                alpha, alive = self._make_room(alpha)
                if not alive:
                    return alpha - 1


class _NoSpace(Exception):
    pass


def todd_coxeter(p: Presentation, s: Optional[SubgroupSpec] = None, max_cosets: int = 100_000) -> CosetTable:
    """Index of the subgroup generated by ``s`` (default: trivial subgroup)."""
    s = s or SubgroupSpec(())
    if p.ngens == 0:
        return CosetTable(0, ((),))
    en = _Enumerator(p, max_cosets)
    en.run(s.generator_words)
    en.compact(0)
    rows = tuple(tuple(r) for r in en.table)
    t = standardize(CosetTable(p.ngens, rows))
    return t


# ---------------------------------------------------------------------------
# low-index subgroups


class _LowIndex:
    """Backtrack over partial tables in standard form.

    The first undefined entry (row-major) is filled next, and a new coset
    always receives the next free number, so every complete table reached
    is standardized and each subgroup is met exactly once.  A table is kept
    only if re-basing it at any coset and standardizing never produces a
    lexicographically smaller table; this picks one subgroup per conjugacy
    class and prunes partial tables early.
    """

    def __init__(self, p: Presentation, max_index: int):
        self.n = max_index
        self.ncols = 2 * p.ngens
        self.ngens = p.ngens
        rels = [tuple(column(x) for x in r) for r in p.relators if r]
        # cyclic conjugates of relators and their inverses, keyed by first column
        by_col = [[] for _ in range(self.ncols)]
        seen = set()
        for r in rels:
            inv = tuple(c ^ 1 for c in reversed(r))
            for w in (r, inv):
                for k in range(len(w)):
                    rot = w[k:] + w[:k]
                    if rot not in seen:
                        seen.add(rot)
                        by_col[rot[0]].append(rot)
        self.by_col = by_col
        self.results = []

    def run(self):
        n = self.n
        table = [[-1] * self.ncols for _ in range(n)]
        self.table = table
        self.count = 1
        self._search()
        return self.results

    # entries are -1 when undefined

    def _set(self, c, col, d, undo, stack):
        self.table[c][col] = d
        self.table[d][col ^ 1] = c
        undo.append((c, col))
        undo.append((d, col ^ 1))
        stack.append((c, col))
        stack.append((d, col ^ 1))

    def _deduce(self, stack, undo):
        table = self.table
        while stack:
            c, col = stack.pop()
            for w in self.by_col[col]:
                # forward from c
                f = c
                i = 0
                m = len(w)
                while i < m:
                    v = table[f][w[i]]
                    if v < 0:
                        break
                    f = v
                    i += 1
                if i == m:
                    if f != c:
                        return False
                    continue
                b = c
                j = m - 1
                while j > i:
                    v = table[b][w[j] ^ 1]
                    if v < 0:
                        break
                    b = v
                    j -= 1
                if j == i:
                    col_i = w[i]
                    if table[b][col_i ^ 1] >= 0:
                        return False
                    self._set(f, col_i, b, undo, stack)
        return True

    def _first_gap(self):
        table = self.table
        for c in range(self.count):
            row = table[c]
            for col in range(self.ncols):
                if row[col] < 0:
                    return c, col
        return None

    def _is_canonical(self):
        """False if some re-basing yields a smaller (partial) table."""
        table = self.table
        count = self.count
        ncols = self.ncols
        for gamma in range(1, count):
            fwd = {0: gamma}
            back = {gamma: 0}
            nxt = 1
            verdict = 0
            for i in range(count):
                if i not in fwd:
                    break
                src = table[fwd[i]]
                row = table[i]
                for col in range(ncols):
                    a = row[col]
                    cv = src[col]
                    if a < 0 or cv < 0:
                        verdict = 2
                        break
                    b = back.get(cv)
                    if b is None:
                        b = nxt
                        back[cv] = b
                        fwd[b] = cv
                        nxt += 1
                    if b < a:
                        return False
                    if b > a:
                        verdict = 1
                        break
                if verdict:
                    break
        return True

    def _search(self):
        gap = self._first_gap()
        if gap is None:
            rows = tuple(tuple(self.table[c]) for c in range(self.count))
            self.results.append(CosetTable(self.ngens, rows))
            return
        c, col = gap
        inv = col ^ 1
        choices = [d for d in range(self.count) if self.table[d][inv] < 0]
        if self.count < self.n:
            choices.append(self.count)
        for d in choices:
            undo = []
            stack = []
            new = d == self.count
            if new:
                self.count += 1
            self._set(c, col, d, undo, stack)
            if self._deduce(stack, undo) and self._is_canonical():
                self._search()
            for (x, y) in undo:
                self.table[x][y] = -1
            if new:
                self.count -= 1


def low_index_subgroups(p: Presentation, max_index: int) -> List[CosetTable]:
    """One table per conjugacy class of subgroups of index <= max_index.

    Ordered by index, then lexicographically by table.
    """
    if max_index < 1:
        raise ValueError("max_index must be at least 1")
    if p.ngens == 0:
        return [CosetTable(0, ((),))]
    found = _LowIndex(p, max_index).run()
    found.sort(key=lambda t: (t.index, t.flat()))
    return found
