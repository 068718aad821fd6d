"""Abelianization via Smith normal form, and the torsion floor on cost.

For a group without 2-torsion the triangle cost is at least
``log_3 |Tor(G^ab)|``.  Logarithms are never taken: the bound is checked as
the integer inequality ``3**cost >= torsion_order``.
"""

from dataclasses import dataclass
from math import prod
from typing import List, Optional, Tuple

from .presentation import Presentation, tcost
from .words import exponent_sums

IntegerMatrix = List[List[int]]


@dataclass(frozen=True)
class SmithForm:
    """Invariant factors d1 | d2 | ... of an integer matrix.

    ``diagonal`` holds the nonzero invariant factors (ones included), so
    ``rank == len(diagonal)``.  ``ncols`` is the number of generators.
    """

    diagonal: Tuple[int, ...]
    ncols: int

    @property
    def rank(self) -> int:
        return len(self.diagonal)

    @property
    def betti(self) -> int:
        return self.ncols - self.rank

    @property
    def torsion(self) -> Tuple[int, ...]:
        return tuple(d for d in self.diagonal if d > 1)

    @property
    def torsion_order(self) -> int:
        return prod(self.torsion)

    @property
    def invariants(self) -> Tuple[Tuple[int, ...], int]:
        """(torsion coefficients, betti number): equal exactly for isomorphic groups."""
        return self.torsion, self.betti

    def describe(self) -> str:
        parts = [f"Z/{d}" for d in self.torsion]
        if self.betti:
            parts.append("Z" if self.betti == 1 else f"Z^{self.betti}")
        return " + ".join(parts) if parts else "0"


def abelianize(p: Presentation) -> IntegerMatrix:
    """Relator-by-generator matrix of exponent sums."""
    return [exponent_sums(r, p.ngens) for r in p.relators]


def smith_normal_form(m: IntegerMatrix, ncols: Optional[int] = None) -> SmithForm:
    rows = [list(r) for r in m]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    for r in rows:
        if len(r) != ncols:
            raise ValueError("ragged matrix")
    a = [r for r in rows if any(r)]
    diag = []
    t = 0
    nr = len(a)
    while t < min(nr, ncols):
        # pivot: nonzero entry of least absolute value in the remaining block
        best = None
        for i in range(t, nr):
            for j in range(t, ncols):
                v = a[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, pi, pj = best
        a[t], a[pi] = a[pi], a[t]
        for r in a:
            r[t], r[pj] = r[pj], r[t]
        while True:
            piv = a[t][t]
            done = True
            # clear column t
            for i in range(t + 1, nr):
                if a[i][t]:
                    q = a[i][t] // piv
                    if q:
                        ri, rt = a[i], a[t]
                        for j in range(t, ncols):
                            ri[j] -= q * rt[j]
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
                        done = False
                        break
            if not done:
                continue
            # clear row t
            for j in range(t + 1, ncols):
                if a[t][j]:
                    q = a[t][j] // piv
                    if q:
                        for r in a[t:]:
                            r[j] -= q * r[t]
                    if a[t][j]:
                        for r in a:
                            r[t], r[j] = r[j], r[t]
                        done = False
                        break
            if not done:
                continue
            # divisibility into the remaining block
            bad = None
            for i in range(t + 1, nr):
                for j in range(t + 1, ncols):
                    if a[i][j] % piv:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            rb, rt = a[bad], a[t]
            for j in range(t, ncols):
                rt[j] += rb[j]
        diag.append(abs(a[t][t]))
        t += 1
    return SmithForm(tuple(diag), ncols)


def smith_form_of(p: Presentation) -> SmithForm:
    return smith_normal_form(abelianize(p), p.ngens)


@dataclass(frozen=True)
class TorsionBound:
    value: int
    torsion_order: int
    caveat: Optional[str] = None


def torsion_lower_bound(p: Presentation, no_2_torsion: bool = False) -> TorsionBound:
    """Least integer k with ``3**k >= |Tor(G^ab)|``.

    The inequality only bounds the cost of groups without 2-torsion; unless
    the caller vouches for that, the result carries a caveat.
    """
    order = smith_form_of(p).torsion_order
    k = 0
    while 3 ** k < order:
        k += 1
    caveat = None if no_2_torsion else "absence of 2-torsion not certified"
    return TorsionBound(k, order, caveat)


def satisfies_torsion_floor(p: Presentation) -> bool:
    return 3 ** tcost(p) >= smith_form_of(p).torsion_order
