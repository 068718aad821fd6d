"""Greedy Tietze simplification under a work budget.

Each pass applies, in order:

1. free and cyclic reduction of every relator;
2. deletion of empty relators and of relators equal to an earlier one up
   to rotation and inversion;
3. generator elimination through a relator in which the generator occurs
   exactly once, picking the move with the smallest total-length increase
   (ties: lowest generator ordinal) and applying it only if neither total
   length nor triangle cost grows;
4. substitution of a subword ``u`` of one relator by ``v^-1`` whenever
   ``u v`` is a rotation of another relator and this strictly shortens.

Passes repeat until nothing changes or the budget runs out.  Every move is
a Tietze transformation, so the group is unchanged.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .presentation import Presentation, relator_cost, tcost
from .words import Word, cyclic_key, cyclic_reduce, free_reduce, inverse, rotations

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SimplifyBudget:
    max_passes: int = 50
    max_total_length: int = 1_000_000

    def __post_init__(self):
        if self.max_passes < 1 or self.max_total_length < 1:
            raise ValueError("budget fields must be positive")

    @classmethod
    def parse(cls, text: str) -> "SimplifyBudget":
        """``"PASSES:MAXLEN"``, as accepted on the command line."""
        passes, _, maxlen = text.partition(":")
        return cls(int(passes), int(maxlen) if maxlen else cls.max_total_length)


@dataclass(frozen=True)
class SimplifyResult:
    presentation: Presentation
    passes: int
    budget_exceeded: bool


class _State:
    def __init__(self, p: Presentation):
        self.names = list(p.generators)
        self.alive = [True] * p.ngens
        self.rels: List[Word] = [tuple(r) for r in p.relators]

    def total_length(self):
        return sum(len(r) for r in self.rels)

    def cost(self):
        return sum(relator_cost(r) for r in self.rels)

    def snapshot(self) -> Presentation:
        renum = {}
        gens = []
        for g, ok in enumerate(self.alive):
            if ok:
                renum[g + 1] = len(gens) + 1
                gens.append(self.names[g])
        rels = tuple(tuple(renum[x] if x > 0 else -renum[-x] for x in r) for r in self.rels)
        return Presentation(tuple(gens), rels)

    # moves ------------------------------------------------------------------

    def reduce_all(self) -> bool:
        new = [cyclic_reduce(r) for r in self.rels]
        changed = new != self.rels
        self.rels = new
        return changed

    def drop_redundant(self) -> bool:
        seen = set()
        keep = []
        for r in self.rels:
            if not r:
                continue
            key = cyclic_key(r)
            if key in seen:
                continue
            seen.add(key)
            keep.append(r)
        changed = len(keep) != len(self.rels)
        self.rels = keep
        return changed

    def eliminate_one(self) -> bool:
        totals: Dict[int, int] = {}
        for r in self.rels:
            for x in r:
                totals[abs(x)] = totals.get(abs(x), 0) + 1
        candidates = []
        for k, r in enumerate(self.rels):
            counts: Dict[int, int] = {}
            for x in r:
                counts[abs(x)] = counts.get(abs(x), 0) + 1
            for g, c in counts.items():
                if c != 1:
                    continue
                others = totals[g] - 1
                delta = others * (len(r) - 2) - len(r)
                if delta <= 0:
                    candidates.append((delta, g, k))
        candidates.sort()
        base_cost = self.cost()
        for delta, g, k in candidates:
            new_rels = self._substituted(g, k)
            if sum(relator_cost(r) for r in new_rels) <= base_cost:
                self.rels = new_rels
                self.alive[g - 1] = False
                return True
        return False

    def _substituted(self, g: int, k: int) -> List[Word]:
        r = self.rels[k]
        pos = next(i for i, x in enumerate(r) if abs(x) == g)
        rot = r[pos:] + r[:pos]
        rest = rot[1:]
        # rot = g^e rest = 1, so g = rest^-e
        expr = inverse(rest) if rot[0] > 0 else tuple(rest)
        expr_inv = inverse(expr)
        out = []
        for i, s in enumerate(self.rels):
            if i == k:
                continue
            if any(abs(x) == g for x in s):
                w = []
                for x in s:
                    if x == g:
                        w.extend(expr)
                    elif x == -g:
                        w.extend(expr_inv)
                    else:
                        w.append(x)
                s = cyclic_reduce(w)
            out.append(s)
        return out

    def substitute_one(self) -> bool:
        table: Dict[Word, List[Tuple[int, Word]]] = {}
        lengths = set()
        for k, r in enumerate(self.rels):
            n = len(r)
            if n == 0:
                continue
            for rho in list(rotations(r)) + list(rotations(inverse(r))):
                for cut in range(n // 2 + 1, n + 1):
                    u, v = rho[:cut], rho[cut:]
                    table.setdefault(u, []).append((k, inverse(v)))
                    lengths.add(cut)
        if not table:
            return False
        order = sorted(range(len(self.rels)), key=lambda i: (-len(self.rels[i]), i))
        for i in order:
            s = self.rels[i]
            n = len(s)
            best: Optional[Word] = None
            for cut in sorted(lengths, reverse=True):
                if cut > n:
                    continue
                doubled = s + s[:cut - 1]
                for pos in range(n):
                    u = doubled[pos:pos + cut]
                    for src, repl in table.get(u, ()):
                        if src == i:
                            continue
                        rot = s[pos:] + s[:pos]
                        cand = cyclic_reduce(repl + rot[cut:])
                        if len(cand) < n and (best is None or len(cand) < len(best)):
                            best = cand
                        break
            if best is not None:
                self.rels[i] = best
                return True
        return False


def simplify_with_status(p: Presentation, budget: Optional[SimplifyBudget] = None) -> SimplifyResult:
    budget = budget or SimplifyBudget()
    state = _State(p)
    best = p
    best_cost = tcost(p)
    exceeded = False
    passes = 0
    while passes < budget.max_passes:
        passes += 1
        if state.total_length() > budget.max_total_length:
            exceeded = True
            break
        changed = state.reduce_all()
        changed |= state.drop_redundant()
        while state.eliminate_one():
            changed = True
            state.drop_redundant()
        while state.substitute_one():
            changed = True
            state.drop_redundant()
        cost = state.cost()
        if cost <= best_cost:
            best, best_cost = state.snapshot(), cost
        if not changed:
            break
    else:
        exceeded = True
    if exceeded:
        log.info("simplify budget exhausted after %d passes", passes)
    return SimplifyResult(best, passes, exceeded)


def simplify(p: Presentation, budget: Optional[SimplifyBudget] = None) -> Presentation:
    """Tietze-simplify ``p``; the cost of the result never exceeds ``tcost(p)``."""
    return simplify_with_status(p, budget).presentation
