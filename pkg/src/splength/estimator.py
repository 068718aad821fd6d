"""Upper bounds on stable presentation length by searching finite covers.

For each subgroup H of index d found by the low-index search, the
presentation is rewritten over H, simplified, and ``T(H)/d`` recorded.
Every number produced here is an upper bound.  No finite search reaches
the infimum, and the reports say so.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from . import families
from .cosets import CapacityExceeded, CosetTable, SubgroupSpec, low_index_subgroups, todd_coxeter
from .presentation import Presentation, tcost
from .report import csv_text, decimal_string, fraction_string
from .rewriting import rewrite_presentation
from .tietze import SimplifyBudget, simplify_with_status

log = logging.getLogger(__name__)

UPPER_BOUND_NOTE = "upper bound only; a finite search does not certify the stable value"


@dataclass(frozen=True)
class EstimateRecord:
    subgroup: Union[CosetTable, SubgroupSpec]
    index: int
    raw_cost: int
    simplified_cost: int
    ratio: Fraction
    presentation: Optional[Presentation] = field(default=None, compare=False, repr=False)
    budget_exceeded: bool = False

    def __post_init__(self):
        if self.simplified_cost > self.raw_cost:
            raise AssertionError("simplification increased the cost")
        if self.ratio != Fraction(self.simplified_cost, self.index):
            raise AssertionError("ratio inconsistent with cost and index")


@dataclass(frozen=True)
class StableReport:
    best: EstimateRecord
    records: Tuple[EstimateRecord, ...]
    failures: Tuple[Tuple[SubgroupSpec, str], ...] = ()
    note: str = UPPER_BOUND_NOTE


def estimate_for_table(p: Presentation, t: CosetTable, budget: Optional[SimplifyBudget] = None,
                       subgroup=None) -> EstimateRecord:
    raw = rewrite_presentation(p, t)
    res = simplify_with_status(raw, budget)
    cost = tcost(res.presentation)
    return EstimateRecord(subgroup if subgroup is not None else t, t.index, tcost(raw), cost,
                          Fraction(cost, t.index), res.presentation, res.budget_exceeded)


def stable_upper_bound(p: Presentation, max_index: int, budget: Optional[SimplifyBudget] = None,
                       subgroups: Optional[Sequence[SubgroupSpec]] = None,
                       max_cosets: int = 100_000) -> StableReport:
    """Best ``T(H)/[G:H]`` over subgroups of index at most ``max_index``.

    Without ``subgroups`` the search runs over one subgroup per conjugacy
    class from the low-index enumeration, which always includes G itself.
    With explicit subgroup specs each one is enumerated by Todd-Coxeter; a
    spec whose enumeration does not close is recorded in ``failures`` and
    skipped.
    """
    if max_index < 1:
        raise ValueError("max_index must be positive")
    records: List[EstimateRecord] = []
    failures = []
    if subgroups is None:
        for t in low_index_subgroups(p, max_index):
            records.append(estimate_for_table(p, t, budget))
    else:
        whole = SubgroupSpec(tuple((g + 1,) for g in range(p.ngens)))
        for spec in (whole, *subgroups):
            try:
                t = todd_coxeter(p, spec, max_cosets)
            except CapacityExceeded as exc:
                log.warning("subgroup skipped: %s", exc)
                failures.append((spec, str(exc)))
                continue
            if t.index > max_index:
                continue
            records.append(estimate_for_table(p, t, budget, spec))
    best = min(records, key=lambda r: (r.ratio, r.index))
    return StableReport(best, tuple(records), tuple(failures))


@dataclass(frozen=True)
class MultiplicativityReport:
    index: int
    bound_group: Fraction
    bound_subgroup: Fraction
    holds: bool
    reverse_holds: bool

    def describe(self) -> str:
        d = self.index
        return (f"index {d}: bound(H) = {fraction_string(self.bound_subgroup)}, "
                f"{d} * bound(G) = {fraction_string(d * self.bound_group)}; "
                f"bound(H) <= d * bound(G): {self.holds}; "
                f"bound(H) >= d * bound(G): {self.reverse_holds}")


def multiplicativity_check(p: Presentation, t: CosetTable, max_index2: int,
                           budget: Optional[SimplifyBudget] = None) -> MultiplicativityReport:
    """Compare the bound for H = subgroup of ``t`` with d times the bound for G.

    G is searched to index ``d * max_index2`` and H to ``max_index2``.
    ``holds`` reports ``bound(H) <= d * bound(G)``.  Because every subgroup
    of H of index k is a subgroup of G of index dk, exact searches would
    give the opposite inequality as well; ``reverse_holds`` records it.
    """
    d = t.index
    bg = stable_upper_bound(p, d * max_index2, budget).best.ratio
    h = rewrite_presentation(p, t)
    bh = stable_upper_bound(h, max_index2, budget).best.ratio
    return MultiplicativityReport(d, bg, bh, bh <= d * bg, bh >= d * bg)


def free_product_combine(e1, e2) -> Fraction:
    """Upper bound for the free product from bounds of the factors.

    Gluing d2 copies of the first cover to d1 copies of the second gives a
    cover of degree d1 d2 whose cost per sheet is the sum of the ratios.
    """
    r1 = e1.ratio if isinstance(e1, EstimateRecord) else Fraction(e1)
    r2 = e2.ratio if isinstance(e2, EstimateRecord) else Fraction(e2)
    return r1 + r2


# ---------------------------------------------------------------------------
# family sweeps


@dataclass(frozen=True)
class SweepRow:
    family: str
    params: Tuple[Tuple[str, int], ...]
    degree: int
    tcost: int
    commensurability: int = 1

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.tcost, self.degree)

    @property
    def adjusted_ratio(self) -> Fraction:
        return self.ratio / self.commensurability


@dataclass(frozen=True)
class Sweep:
    family: str
    param_names: Tuple[str, ...]
    rows: Tuple[SweepRow, ...]

    @property
    def argmin(self) -> SweepRow:
        return min(self.rows, key=lambda r: r.ratio)

    def to_csv(self) -> str:
        header = ["family", *self.param_names, "index_or_degree", "tcost", "ratio", "ratio_decimal",
                  "commensurability_adjusted_ratio", "adjusted_decimal"]
        body = []
        for r in self.rows:
            adj = r.adjusted_ratio
            adj_text = f"{r.tcost}/{r.degree * r.commensurability}"
            body.append([r.family, *(v for _, v in r.params), r.degree, r.tcost,
                         f"{r.tcost}/{r.degree}", decimal_string(r.ratio), adj_text, decimal_string(adj)])
        return csv_text(header, body)

    def summary(self) -> str:
        b = self.argmin
        params = ", ".join(f"{k}={v}" for k, v in b.params)
        return (f"{self.family}: min ratio {b.tcost}/{b.degree} = {decimal_string(b.ratio)} at {params}; "
                f"commensurability-adjusted {decimal_string(b.adjusted_ratio)} ({UPPER_BOUND_NOTE})")


FAMILIES = ("surface", "seifert", "figure8", "whitehead", "magic", "d2")


def family_sweep(family: str, grid: Dict[str, Sequence[int]], instantiate: bool = False) -> Sweep:
    """One row per grid point, in the nested order of the parameter names.

    ``surface`` takes g and d, ``seifert`` takes g, e and d, and the torus
    families take m and n.  Costs come from the closed-form counts; with
    ``instantiate=True`` the torus presentations are built and measured
    instead, which is much slower but independent of the counting.
    """
    rows = []
    if family == "surface":
        names = ("g", "d")
        _require(grid, names)
        for g in grid["g"]:
            for d in grid["d"]:
                families.surface_cover_ratio(g, d)  # validates the range
                rows.append(SweepRow(family, (("g", g), ("d", d)), d, families.surface_cover_cost(g, d)))
    elif family == "seifert":
        names = ("g", "e", "d")
        _require(grid, names)
        for g in grid["g"]:
            for e in grid["e"]:
                for d in grid["d"]:
                    families.seifert_cover_ratio(g, e, d)
                    rows.append(SweepRow(family, (("g", g), ("e", e), ("d", d)), d * d,
                                         families.seifert_cover_cost(g, e, d)))
    elif family in families.builtin_templates():
        names = ("m", "n")
        _require(grid, names)
        tmpl = families.builtin_templates()[family]
        for m in grid["m"]:
            for n in grid["n"]:
                if instantiate:
                    cost = tcost(families.instantiate_torus_cover(tmpl, m, n).presentation)
                else:
                    if m < 1 or n < 1:
                        raise ValueError("grid dimensions must be positive")
                    cost = tmpl.cost(m, n)
                rows.append(SweepRow(family, (("m", m), ("n", n)), m * n, cost, tmpl.commensurability))
    else:
        raise ValueError(f"unknown family {family!r}; known: {', '.join(FAMILIES)}")
    if not rows:
        raise ValueError("empty grid")
    return Sweep(family, names, tuple(rows))


def _require(grid, names):
    missing = [n for n in names if n not in grid]
    if missing:
        raise ValueError(f"grid is missing parameter(s): {', '.join(missing)}")
    extra = [n for n in grid if n not in names]
    if extra:
        raise ValueError(f"unexpected grid parameter(s): {', '.join(extra)}")


def parse_range(text: str) -> List[int]:
    """``"3"``, ``"1..50"``, ``"-5..5"`` or a comma list of those."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..")
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise ValueError(f"empty range {part!r}")
            out.extend(range(lo, hi + 1))
        elif part:
            out.append(int(part))
    if not out:
        raise ValueError(f"empty range {text!r}")
    return out


def parse_grid(text: str) -> Dict[str, List[int]]:
    """``"g=2;d=1..100"``: semicolon-separated ``name=range`` items."""
    grid = {}
    for item in text.split(";"):
        item = item.strip()
        if not item:
            continue
        name, sep, rng = item.partition("=")
        if not sep:
            raise ValueError(f"grid item {item!r} is not of the form name=range")
        grid[name.strip()] = parse_range(rng)
    return grid
