"""Exact lattice arithmetic: LLL, covolume, reduced-basis certificates and
the triangle contraction count over a fundamental parallelogram.

Nothing here touches floating point.  Vectors are tuples of Fractions and
a basis is stored by columns.
"""

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, gcd
from typing import List, Optional, Sequence, Tuple

Vector = Tuple[Fraction, ...]
Point = Tuple[Fraction, Fraction]


class CertificateError(ArithmeticError):
    """The reduced-basis inequality failed; the basis was not reduced."""


def _vec(v) -> Vector:
    return tuple(Fraction(x) for x in v)


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def _det(cols: Sequence[Vector]) -> Fraction:
    n = len(cols)
    a = [[Fraction(cols[j][i]) for j in range(n)] for i in range(n)]
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            if f:
                for j in range(k, n):
                    a[i][j] -= f * a[k][j]
    return det


@dataclass(frozen=True)
class LatticeBasis:
    """Full-rank lattice in Q^r given by r column vectors."""

    columns: Tuple[Vector, ...]

    def __post_init__(self):
        cols = tuple(_vec(c) for c in self.columns)
        object.__setattr__(self, "columns", cols)
        r = len(cols)
        if r == 0:
            raise ValueError("a basis needs at least one vector")
        if any(len(c) != r for c in cols):
            raise ValueError("basis must be square: r vectors in dimension r")
        if _det(cols) == 0:
            raise ValueError("basis vectors are linearly dependent")

    @classmethod
    def parse(cls, text: str) -> "LatticeBasis":
        """``"3,-1;1,4"``: columns separated by ``;``, entries by ``,``."""
        cols = [tuple(Fraction(x.strip()) for x in part.split(",")) for part in text.split(";") if part.strip()]
        return cls(tuple(cols))

    @property
    def rank(self) -> int:
        return len(self.columns)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for c in self.columns for x in c)

    def format(self) -> str:
        return ";".join(",".join(str(x) for x in c) for c in self.columns)


@dataclass(frozen=True)
class WeightedOneNorm:
    """``||v|| = sum a_i |v_i|``, the 1-norm in the basis ``x_i / a_i``."""

    weights: Tuple[Fraction, ...]

    def __post_init__(self):
        w = tuple(Fraction(a) for a in self.weights)
        if any(a <= 0 for a in w):
            raise ValueError("weights must be positive")
        object.__setattr__(self, "weights", w)

    @classmethod
    def unit(cls, r: int) -> "WeightedOneNorm":
        return cls((Fraction(1),) * r)

    def __call__(self, v: Sequence[Fraction]) -> Fraction:
        if len(v) != len(self.weights):
            raise ValueError("dimension mismatch")
        return sum((a * abs(Fraction(x)) for a, x in zip(self.weights, v)), Fraction(0))


def covolume(b: LatticeBasis) -> Fraction:
    return abs(_det(b.columns))


# ---------------------------------------------------------------------------
# LLL


def _gram_schmidt(b):
    n = len(b)
    bstar = []
    mu = [[Fraction(0)] * n for _ in range(n)]
    norms = []
    for i in range(n):
        v = list(b[i])
        for j in range(i):
            mu[i][j] = _dot(b[i], bstar[j]) / norms[j]
            v = [x - mu[i][j] * y for x, y in zip(v, bstar[j])]
        bstar.append(v)
        norms.append(_dot(v, v))
    return bstar, mu, norms


def lll_reduce_with_transform(b: LatticeBasis, delta=Fraction(3, 4)) -> Tuple[LatticeBasis, List[List[int]]]:
    """LLL-reduce ``b``; also return the integer matrix U with new = old * U.

    Column k of U holds the coordinates of the k-th reduced vector in the
    input basis.
    """
    delta = Fraction(delta)
    if not Fraction(1, 4) < delta < 1:
        raise ValueError("delta must lie strictly between 1/4 and 1")
    vecs = [list(c) for c in b.columns]
    n = len(vecs)
    coords = [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    bstar, mu, norms = _gram_schmidt(vecs)
    k = 1
    while k < n:
        for j in range(k - 1, -1, -1):
            q = round(mu[k][j])
            if q:
                vecs[k] = [x - q * y for x, y in zip(vecs[k], vecs[j])]
                coords[k] = [x - q * y for x, y in zip(coords[k], coords[j])]
                for i in range(j + 1):
                    mu[k][i] -= q * (mu[j][i] if i < j else 1)
        if norms[k] >= (delta - mu[k][k - 1] ** 2) * norms[k - 1]:
            k += 1
        else:
            vecs[k], vecs[k - 1] = vecs[k - 1], vecs[k]
            coords[k], coords[k - 1] = coords[k - 1], coords[k]
            bstar, mu, norms = _gram_schmidt(vecs)
            k = max(k - 1, 1)
    u = [[coords[j][i] for j in range(n)] for i in range(n)]
    return LatticeBasis(tuple(tuple(v) for v in vecs)), u


def lll_reduce(b: LatticeBasis, delta=Fraction(3, 4)) -> LatticeBasis:
    return lll_reduce_with_transform(b, delta)[0]


def is_lll_reduced(b: LatticeBasis, delta=Fraction(3, 4)) -> bool:
    _, mu, norms = _gram_schmidt(b.columns)
    n = b.rank
    for i in range(n):
        for j in range(i):
            if abs(mu[i][j]) > Fraction(1, 2):
                return False
    return all(norms[k] >= (delta - mu[k][k - 1] ** 2) * norms[k - 1] for k in range(1, n))


# ---------------------------------------------------------------------------
# reduced-basis certificate


def _ceil_root(q: Fraction, n: int) -> int:
    """Least integer N with N**n >= q, for rational q >= 0."""
    q = Fraction(q)
    lo, hi = 0, 1
    while Fraction(hi) ** n < q:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if Fraction(mid) ** n >= q:
            hi = mid
        else:
            lo = mid + 1
    return lo


def epsilon_r(r: int, norm: Optional[WeightedOneNorm] = None, delta=Fraction(3, 4)) -> Fraction:
    """Default constant for ``covolume >= eps * prod ||b_i||`` on LLL bases.

    An LLL basis with parameter delta satisfies
    ``prod |b_i|_2 <= alpha**(r(r-1)/4) * covolume`` with
    ``alpha = 1 / (delta - 1/4)``, and ``||v|| <= max(a) * sqrt(r) * |v|_2``
    for the weighted 1-norm.  Rounding both irrational factors up to
    integers keeps the constant exact:

        eps_r = 1 / (max(a)**r * ceil(r**(r/2)) * ceil(alpha**(r(r-1)/4)))

    which is 1/4 for r = 2 and 1/18 for r = 3 at unit weights.
    """
    if r < 1:
        raise ValueError("rank must be positive")
    alpha = 1 / (Fraction(delta) - Fraction(1, 4))
    amax = max(norm.weights) if norm is not None else Fraction(1)
    root_r = _ceil_root(Fraction(r) ** r, 2)
    root_alpha = _ceil_root(alpha ** (r * (r - 1)), 4)
    return 1 / (amax ** r * root_r * root_alpha)


@dataclass(frozen=True)
class ReducedBasisCertificate:
    product_of_norms: Fraction
    covolume: Fraction
    epsilon_witness: Fraction
    epsilon: Fraction


def reduced_basis_certificate(b: LatticeBasis, norm: Optional[WeightedOneNorm] = None,
                              epsilon: Optional[Fraction] = None,
                              delta=Fraction(3, 4)) -> ReducedBasisCertificate:
    norm = norm or WeightedOneNorm.unit(b.rank)
    if epsilon is None:
        epsilon = epsilon_r(b.rank, norm, delta)
    prod = Fraction(1)
    for c in b.columns:
        prod *= norm(c)
    vol = covolume(b)
    witness = vol / prod
    if witness < epsilon:
        raise CertificateError(f"covolume/product = {witness} is below eps = {epsilon}")
    return ReducedBasisCertificate(prod, vol, witness, Fraction(epsilon))


def relative_to_absolute_bound(t_g: int, norms: Sequence, epsilon_r: Fraction) -> Fraction:
    """``t_g + (sum of norms) / (eps_r * product of norms)``."""
    if len(norms) < 2:
        raise ValueError("the bound needs a lattice of rank at least two")
    if t_g < 0:
        raise ValueError("t_g must be nonnegative")
    norms = [Fraction(x) for x in norms]
    if any(x <= 0 for x in norms):
        raise ValueError("norms must be positive")
    prod = Fraction(1)
    for x in norms:
        prod *= x
    return t_g + sum(norms) / (Fraction(epsilon_r) * prod)


# ---------------------------------------------------------------------------
# triangle contraction over a fundamental parallelogram


@dataclass(frozen=True)
class CellLayout:
    """Triangles of one unit cell, repeated under translation by Z^2."""

    triangles: Tuple[Tuple[Point, Point, Point], ...]

    def __post_init__(self):
        tris = tuple(tuple(_vec(p) for p in tri) for tri in self.triangles)
        for tri in tris:
            if len(tri) != 3 or any(len(p) != 2 for p in tri):
                raise ValueError("a triangle is three points in the plane")
            (ax, ay), (bx, by), (cx, cy) = tri
            if (bx - ax) * (cy - ay) - (by - ay) * (cx - ax) == 0:
                raise ValueError(f"degenerate triangle {tri}")
        object.__setattr__(self, "triangles", tris)


def builtin_layouts():
    # z1 = (1,0), z2 = (0,1): the two halves of the commutator square, and
    # the triangle spanned by z1 and z1' = z1^2 z2 = (2,1).
    return {
        "fig8proof": CellLayout((
            ((0, 0), (1, 0), (1, 1)),
            ((0, 0), (0, 1), (1, 1)),
            ((0, 0), (1, 0), (2, 1)),
        )),
    }


@dataclass(frozen=True)
class ContractionCount:
    total_triangles: int
    interior_contracted: int
    boundary_remaining: int

    @property
    def boundary_ratio(self) -> Fraction:
        return Fraction(self.boundary_remaining, self.total_triangles)


def fundamental_domain_contraction(layout: CellLayout, sub: LatticeBasis) -> ContractionCount:
    """Count lifted triangles lying in the open parallelogram spanned by ``sub``.

    A triangle counts as interior when all three vertices, and hence the
    closed triangle, lie strictly inside ``{s u + t v : 0 < s, t < 1}``.
    Since translates of the open parallelogram are disjoint, each interior
    triangle is the only representative of its orbit that gets counted.
    """
    if sub.rank != 2:
        raise ValueError("contraction is implemented in rank 2 only")
    if not sub.is_integral():
        raise ValueError("sublattice basis must be integral")
    (u0, u1), (v0, v1) = ((int(x) for x in c) for c in sub.columns)
    det = u0 * v1 - u1 * v0
    total = abs(det) * len(layout.triangles)
    sign = 1 if det > 0 else -1
    # Clear denominators so the coordinates s*D and t*D of a point are
    # integers, scaled by ``scale``; interior means both lie in (0, scale*|D|).
    scale = 1
    for tri in layout.triangles:
        for p in tri:
            for x in p:
                scale = scale * x.denominator // gcd(scale, x.denominator)
    limit = scale * abs(det)
    xs = (0, u0, v0, u0 + v0)
    ys = (0, u1, v1, u1 + v1)
    interior = 0
    for tri in layout.triangles:
        pts = [(int(p[0] * scale), int(p[1] * scale)) for p in tri]
        base = [(sign * (x * v1 - y * v0), sign * (u0 * y - u1 * x)) for x, y in pts]
        tx = [p[0] for p in tri]
        ty = [p[1] for p in tri]
        for zx in range(floor(min(xs) - max(tx)) - 1, ceil(max(xs) - min(tx)) + 2):
            for zy in range(floor(min(ys) - max(ty)) - 1, ceil(max(ys) - min(ty)) + 2):
                ds = sign * scale * (zx * v1 - zy * v0)
                dt = sign * scale * (u0 * zy - u1 * zx)
                if all(0 < bs + ds < limit and 0 < bt + dt < limit for bs, bt in base):
                    interior += 1
    return ContractionCount(total, interior, total - interior)


def scaled(sub: LatticeBasis, k: int) -> LatticeBasis:
    return LatticeBasis(tuple(tuple(k * x for x in c) for c in sub.columns))


def contraction_sweep(layout: CellLayout, sub: LatticeBasis, ks: Sequence[int]):
    rows = []
    for k in ks:
        cnt = fundamental_domain_contraction(layout, scaled(sub, k))
        rows.append((k, cnt))
    return rows


def contraction_sweep_csv(rows) -> str:
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\r\n")
    w.writerow(["k", "total", "interior", "boundary", "boundary_ratio"])
    for k, cnt in rows:
        w.writerow([k, cnt.total_triangles, cnt.interior_contracted, cnt.boundary_remaining,
                    f"{cnt.boundary_remaining}/{cnt.total_triangles}"])
    return out.getvalue()
