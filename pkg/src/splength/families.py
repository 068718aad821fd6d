"""Parametric presentation families with closed-form triangle costs.

Surfaces, circle bundles over surfaces, and the m x n grid covers of link
complements in the thickened torus.  Each generator returns a FamilyPoint
whose ``predicted_cost`` is checked against ``tcost`` on construction.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .presentation import Presentation, parse_presentation, tcost, wedge
from .words import Word, commutator, cyclic_reduce, inverse


@dataclass(frozen=True)
class FamilyPoint:
    family: str
    params: Tuple[Tuple[str, int], ...]
    presentation: Presentation
    predicted_cost: Optional[int] = None

    def __post_init__(self):
        if self.predicted_cost is not None and tcost(self.presentation) != self.predicted_cost:
            raise AssertionError(
                f"{self.family}{dict(self.params)}: tcost {tcost(self.presentation)} "
                f"!= predicted {self.predicted_cost}")

    @property
    def param_dict(self) -> Dict[str, int]:
        return dict(self.params)


# ---------------------------------------------------------------------------
# surfaces


def surface(g: int) -> FamilyPoint:
    """``< x1, y1, ..., xg, yg | [x1, y1] ... [xg, yg] >``, cost 4g - 2."""
    if g < 1:
        raise ValueError("genus must be at least 1")
    names = [n for i in range(1, g + 1) for n in (f"x{i}", f"y{i}")]
    rel: Word = ()
    for i in range(g):
        rel += commutator((2 * i + 1,), (2 * i + 2,))
    return FamilyPoint("surface", (("g", g),), Presentation(tuple(names), (rel,)), 4 * g - 2)


def surface_cover_cost(g: int, d: int) -> int:
    """Cost of the genus ``d(g-1)+1`` surface, a degree-d cover of genus g."""
    return 4 * (d * (g - 1) + 1) - 2


def surface_cover_ratio(g: int, d: int) -> Fraction:
    if g < 2:
        # the torus covers itself with every degree, so its stable value is 0
        raise ValueError("surface_cover_ratio needs g >= 2; the torus has stable value 0")
    if d < 1:
        raise ValueError("degree must be positive")
    return Fraction(surface_cover_cost(g, d), d)


@dataclass(frozen=True)
class RelativeCount:
    genus: int
    punctures: int
    triangle_count: int


def punctured_surface_relative(g: int, b: int) -> RelativeCount:
    """Triangles in an ideal triangulation of the genus g surface with b punctures."""
    if g < 0 or b < 1 or 2 * g - 2 + b <= 0:
        raise ValueError("need b >= 1 and 2g - 2 + b > 0")
    return RelativeCount(g, b, 4 * g - 4 + 2 * b)


# ---------------------------------------------------------------------------
# circle bundles


def seifert(g: int, e: int) -> FamilyPoint:
    """``< x_i, y_i, z | [x1,y1]...[xg,yg] z^e, [x_i, z], [y_i, z] >``, cost 8g + |e| - 2."""
    if g < 1:
        raise ValueError("genus must be at least 1")
    names = [n for i in range(1, g + 1) for n in (f"x{i}", f"y{i}")] + ["z"]
    z = 2 * g + 1
    first: Word = ()
    for i in range(g):
        first += commutator((2 * i + 1,), (2 * i + 2,))
    first += (z,) * e if e >= 0 else (-z,) * (-e)
    rels = [first] + [commutator((k,), (z,)) for k in range(1, 2 * g + 1)]
    return FamilyPoint("seifert", (("g", g), ("e", e)), Presentation(tuple(names), tuple(rels)),
                       8 * g + abs(e) - 2)


def seifert_cover_cost(g: int, e: int, d: int) -> int:
    return 8 * (d * (g - 1) + 1) + abs(e) - 2


def seifert_cover_ratio(g: int, e: int, d: int) -> Fraction:
    """Cost per sheet of the d^2-sheeted cover with base genus d(g-1)+1."""
    if g < 1 or d < 1:
        raise ValueError("need g >= 1 and d >= 1")
    return Fraction(seifert_cover_cost(g, e, d), d * d)


def free_product(p1: Presentation, p2: Presentation) -> Presentation:
    return wedge(p1, p2)


# ---------------------------------------------------------------------------
# torus-cover templates

Ref = Tuple[str, int, int]  # (symbol, row offset, column offset)


@dataclass(frozen=True)
class ShiftRule:
    """``sym[m + offset, j] = s sym[offset, j] s^-1`` for j in a range, or the
    vertical analogue with t, ``sym[i, n + offset] = t sym[i, offset] t^-1``.

    ``lo`` and ``hi`` give the range of the free index: ``lo .. n + hi`` for
    a horizontal rule and ``lo .. m + hi`` for a vertical one.
    """

    direction: str  # "h" or "v"
    symbol: str
    lo: int
    hi: int
    offset: int = 1

    def instances(self, m: int, n: int) -> List[Tuple[Tuple[str, int, int], Tuple[str, int, int]]]:
        """Pairs (image, source) of indexed symbols."""
        out = []
        if self.direction == "h":
            for j in range(self.lo, n + self.hi + 1):
                out.append(((self.symbol, m + self.offset, j), (self.symbol, self.offset, j)))
        else:
            for i in range(self.lo, m + self.hi + 1):
                out.append(((self.symbol, i, n + self.offset), (self.symbol, i, self.offset)))
        return out

    def count(self, m: int, n: int) -> int:
        return (n if self.direction == "h" else m) + self.hi - self.lo + 1


@dataclass(frozen=True)
class TorusCoverTemplate:
    """A cell of a link complement in the thickened torus, repeated on a grid.

    ``core`` lists relators ``lhs = rhs`` where ``lhs`` is a cell symbol at
    offset (0, 0) and ``rhs`` a product of symbols at offsets relative to
    the cell.  Offset (0, 0) is cell (i, j).  The m x n cover has these
    relators for every cell, the shift rules identifying symbols that leave
    the grid, and ``s t s^-1 t^-1``.

    ``commensurability`` is the factor relating the stable length of the
    template's manifold to that of the manifold of interest.
    """

    name: str
    cell_symbols: Tuple[str, ...]
    core: Tuple[Tuple[str, Tuple[Ref, ...]], ...]
    shifts: Tuple[ShiftRule, ...]
    commensurability: int = 1
    base_text: str = ""
    note: str = ""

    def __post_init__(self):
        declared = set(self.cell_symbols)
        for lhs, rhs in self.core:
            if lhs not in declared:
                raise ValueError(f"{self.name}: undeclared symbol {lhs}")
            for sym, _, _ in rhs:
                if sym not in declared:
                    raise ValueError(f"{self.name}: undeclared symbol {sym}")
        for rule in self.shifts:
            if rule.symbol not in declared or rule.direction not in ("h", "v"):
                raise ValueError(f"{self.name}: malformed shift rule {rule}")

    @property
    def core_cost(self) -> int:
        return sum(max(0, 1 + len(rhs) - 2) for _, rhs in self.core)

    def cost(self, m: int, n: int) -> int:
        """Triangle cost of the m x n instance, by counting."""
        return self.core_cost * m * n + 2 * sum(r.count(m, n) for r in self.shifts) + 2

    def base(self) -> Presentation:
        return parse_presentation(self.base_text)


def _name(sym: str, i: int, j: int) -> str:
    return f"{sym}{i}_{j}"


def instantiate_torus_cover(tmpl: TorusCoverTemplate, m: int, n: int) -> FamilyPoint:
    if m < 1 or n < 1:
        raise ValueError("grid dimensions must be positive")
    index: Dict[str, int] = {}
    names: List[str] = []

    def letter(sym, i, j):
        key = _name(sym, i, j)
        if key not in index:
            names.append(key)
            index[key] = len(names)
        return index[key]

    for i in range(1, m + 1):
        for j in range(1, n + 1):
            for sym in tmpl.cell_symbols:
                letter(sym, i, j)
    rels = []
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            for lhs, rhs in tmpl.core:
                w = (letter(lhs, i, j),)
                word = tuple(letter(sym, i + di, j + dj) for sym, di, dj in rhs)
                rels.append(cyclic_reduce(w + inverse(word)))
    pending = []
    for rule in tmpl.shifts:
        for image, source in rule.instances(m, n):
            pending.append((rule.direction, letter(*image), letter(*source)))
    names.append("s")
    names.append("t")
    s, t = len(names) - 1, len(names)
    for direction, img, src in pending:
        c = s if direction == "h" else t
        rels.append((img, c, -src, -c))
    rels.append((s, t, -s, -t))
    p = Presentation(tuple(names), tuple(rels))
    return FamilyPoint(tmpl.name, (("m", m), ("n", n)), p, tmpl.cost(m, n))


def _core(spec: str) -> Tuple[Tuple[str, Tuple[Ref, ...]], ...]:
    """``"a = y x; b = z(0,1) w"``: offsets in parentheses, default (0,0)."""
    out = []
    for part in spec.split(";"):
        lhs, rhs = (x.strip() for x in part.split("="))
        refs = []
        for tok in rhs.split():
            if "(" in tok:
                sym, off = tok.split("(")
                di, dj = (int(x) for x in off.rstrip(")").split(","))
            else:
                sym, di, dj = tok, 0, 0
            refs.append((sym, di, dj))
        out.append((lhs, tuple(refs)))
    return tuple(out)


def _rename_base(tmpl: TorusCoverTemplate) -> Presentation:
    """The transcribed base presentation with names as produced by
    :func:`instantiate_torus_cover`: ``x11 -> x1_1`` and unindexed cell
    symbols ``a -> a1_1``."""
    p = tmpl.base()
    new = []
    for g in p.generators:
        if g in ("s", "t"):
            new.append(g)
        elif len(g) >= 3 and g[-2:].isdigit():
            new.append(_name(g[:-2], int(g[-2]), int(g[-1])))
        else:
            new.append(_name(g, 1, 1))
    return Presentation(tuple(new), p.relators)


_FIGURE8_BASE = """< x11, y11, z11, w11, a11, b11, x21, y21, x12, z12, x22, s, t |
  a11 x11^-1 y11^-1, a11 y11^-1 z11^-1, a11 z11^-1 w11^-1,
  b11 w11^-1 z12^-1, b11 x22^-1 w11^-1, b11 y21^-1 x22^-1,
  x21 s x11^-1 s^-1, x22 s x12^-1 s^-1, y21 s y11^-1 s^-1,
  x12 t x11^-1 t^-1, x22 t x21^-1 t^-1, z12 t z11^-1 t^-1, s t s^-1 t^-1 >"""

_WHITEHEAD_BASE = """< x11, x21, x22, y11, y12, y21, a, b, s, t |
  a x11^-1 y11^-1, a y11^-1 x22^-1, b x22^-1 y12^-1, b y21^-1 x22^-1,
  x21 s x11^-1 s^-1, y21 s y11^-1 s^-1, y12 t y11^-1 t^-1, x22 t x21^-1 t^-1,
  s t s^-1 t^-1 >"""

_MAGIC_BASE = """< x11, x21, y11, y12, a, s, t |
  a x11^-1 y12^-1, a x21^-1 x11^-1, a y11^-1 x21^-1,
  x21 s x11^-1 s^-1, y12 t y11^-1 t^-1, s t s^-1 t^-1 >"""

_D2_BASE = """< x11, x21, y11, y21, y20, z11, z12, w, u, a, b, c, s, t |
  a x11^-1 y11^-1, a y11^-1 w^-1, a w^-1 u^-1, b z11^-1 y20^-1,
  c u^-1 z12^-1, c x21^-1 a^-1, c b^-1 x21^-1,
  x21 s x11^-1 s^-1, y21 s y11^-1 s^-1, z12 t z11^-1 t^-1, y21 t y20^-1 t^-1,
  s t s^-1 t^-1 >"""


def builtin_templates() -> Dict[str, TorusCoverTemplate]:
    return {
        "figure8": TorusCoverTemplate(
            "figure8",
            ("x", "y", "z", "w", "a", "b"),
            _core("a = y x; a = z y; a = w z; b = z(0,1) w; b = w x(1,1); b = x(1,1) y(1,0)"),
            (ShiftRule("h", "x", 1, 1), ShiftRule("h", "y", 1, 0),
             ShiftRule("v", "x", 1, 1), ShiftRule("v", "z", 1, 0)),
            commensurability=6,
            base_text=_FIGURE8_BASE,
            note="link complement made of 12 regular ideal tetrahedra; 6-fold commensurable "
                 "with the figure-eight knot complement",
        ),
        "whitehead": TorusCoverTemplate(
            "whitehead",
            ("x", "y", "a", "b"),
            _core("a = y x; a = x(1,1) y; b = y(0,1) x(1,1); b = x(1,1) y(1,0)"),
            (ShiftRule("h", "x", 1, 0), ShiftRule("h", "y", 1, 0),
             ShiftRule("v", "y", 1, 0), ShiftRule("v", "x", 2, 1)),
            commensurability=2,
            base_text=_WHITEHEAD_BASE,
            note="built from two regular ideal octahedra; the quotient bound for the "
                 "Whitehead link complement halves the cover bound",
        ),
        "magic": TorusCoverTemplate(
            "magic",
            ("x", "y", "a"),
            _core("a = y(0,1) x; a = x x(1,0); a = x(1,0) y"),
            (ShiftRule("h", "x", 1, 0), ShiftRule("v", "y", 1, 0)),
            commensurability=1,
            base_text=_MAGIC_BASE,
            note="the alternating 3-chain link complement",
        ),
        "d2": TorusCoverTemplate(
            "d2",
            ("x", "y", "z", "w", "u", "a", "b", "c"),
            _core("a = y x; a = w y; a = u w; b = y(1,-1) z; c = z(0,1) u; c = a x(1,0); c = x(1,0) b"),
            (ShiftRule("h", "x", 1, 0), ShiftRule("h", "y", 1, 0),
             ShiftRule("v", "z", 1, 0), ShiftRule("v", "y", 2, 1, offset=0)),
            commensurability=1,
            base_text=_D2_BASE,
            note="complement of a link built from one regular ideal cuboctahedron",
        ),
    }


def torus_cover_ratio(tmpl: TorusCoverTemplate, m: int, n: int) -> Fraction:
    return Fraction(tmpl.cost(m, n), m * n)


def grid_kernel_table(p: Presentation, m: int, n: int):
    """Coset table of the kernel of ``s -> (1,0), t -> (0,1)`` onto Z/m x Z/n.

    Every other generator maps to 0.  Used to cross-check the grid covers.
    """
    from .cosets import table_from_permutations

    perms = []
    for g in p.generators:
        if g == "s":
            perms.append([((c // n + 1) % m) * n + c % n for c in range(m * n)])
        elif g == "t":
            perms.append([(c // n) * n + (c % n + 1) % n for c in range(m * n)])
        else:
            perms.append(list(range(m * n)))
    return table_from_permutations(perms)
