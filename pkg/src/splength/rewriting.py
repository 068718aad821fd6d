"""Reidemeister-Schreier rewriting against a coset table.

The coset graph has one vertex per coset and one edge ``c --g--> c.g`` per
coset and generator.  A breadth-first spanning tree gives the Schreier
transversal; every edge outside the tree becomes a subgroup generator and
every relator, read from every coset, becomes a subgroup relator.  This is
the covering 2-complex with its tree contracted, written as a presentation.
"""

from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Tuple

from .cosets import CosetTable, column
from .presentation import Presentation
from .words import Word, cyclic_reduce

Edge = Tuple[int, int]  # (source coset, generator ordinal): the edge c --g--> c.g


@dataclass(frozen=True)
class SchreierTransversal:
    """Coset representatives and the spanning tree they come from.

    ``tree_edges`` holds the positive edges ``(c, g)`` of the coset graph that
    lie in the tree, regardless of the direction in which the search
    crossed them.
    """

    representatives: Tuple[Word, ...]
    tree_edges: FrozenSet[Edge]

    @property
    def index(self) -> int:
        return len(self.representatives)


def schreier_transversal(t: CosetTable) -> SchreierTransversal:
    """Breadth-first tree from coset 0, trying ``g0, g0^-1, g1, g1^-1, ...``."""
    reps: Dict[int, Word] = {0: ()}
    tree = set()
    queue = deque([0])
    letters = [x for g in range(t.ngens) for x in (g + 1, -(g + 1))]
    while queue:
        c = queue.popleft()
        for x in letters:
            d = t.rows[c][column(x)]
            if d in reps:
                continue
            reps[d] = reps[c] + (x,)
            tree.add((c, x - 1) if x > 0 else (d, -x - 1))
            queue.append(d)
    if len(reps) != t.index:
        raise ValueError("coset table is not transitive")
    return SchreierTransversal(tuple(reps[c] for c in range(t.index)), frozenset(tree))


def schreier_generators(t: CosetTable, tr: SchreierTransversal) -> List[Edge]:
    """Non-tree edges, ordered by generator and then by coset."""
    return [(c, g) for g in range(t.ngens) for c in range(t.index) if (c, g) not in tr.tree_edges]


def rewrite_word(t: CosetTable, edge_letter: Dict[Edge, int], coset: int, w: Word) -> Tuple[Word, int]:
    """Rewrite ``w`` read from ``coset``; returns the Schreier word and the end coset."""
    out = []
    c = coset
    for x in w:
        if x > 0:
            e = (c, x - 1)
            c = t.rows[c][column(x)]
            k = edge_letter.get(e)
            if k is not None:
                out.append(k)
        else:
            c = t.rows[c][column(x)]
            k = edge_letter.get((c, -x - 1))
            if k is not None:
                out.append(-k)
    return tuple(out), c


def rewrite_presentation(p: Presentation, t: CosetTable) -> Presentation:
    """Presentation of the subgroup encoded by ``t``.

    Generators are the non-tree edges ``(c, g)``, named ``{g}_{c+1}``.
    Relators are the rewrites of each relator at each coset, freely and
    cyclically reduced, with empty words omitted.  Every rewritten relator
    is no longer than its source, so the triangle cost is at most
    ``index * tcost(p)``.
    """
    if t.ngens != p.ngens:
        raise ValueError(f"table has {t.ngens} generators, presentation has {p.ngens}")
    tr = schreier_transversal(t)
    gens = schreier_generators(t, tr)
    edge_letter = {e: k + 1 for k, e in enumerate(gens)}
    names = tuple(f"{p.generators[g]}_{c + 1}" for c, g in gens)
    rels = []
    for r in p.relators:
        for c in range(t.index):
            w, end = rewrite_word(t, edge_letter, c, r)
            if end != c:
                raise ValueError("relator does not close in the coset table")
            w = cyclic_reduce(w)
            if w:
                rels.append(w)
    return Presentation(names, tuple(rels))


def subgroup_generator_words(p: Presentation, t: CosetTable) -> List[Word]:
    """The Schreier generators as words in ``p``: ``rep(c) g rep(c.g)^-1``."""
    from .words import free_reduce, inverse

    tr = schreier_transversal(t)
    out = []
    for c, g in schreier_generators(t, tr):
        d = t.rows[c][2 * g]
        out.append(free_reduce(tr.representatives[c] + (g + 1,) + inverse(tr.representatives[d])))
    return out
