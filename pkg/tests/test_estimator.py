from fractions import Fraction

import pytest

from splength.abelian import satisfies_torsion_floor
from splength.cosets import SubgroupSpec, low_index_subgroups, trivial_table
from splength.estimator import (UPPER_BOUND_NOTE, EstimateRecord, family_sweep, free_product_combine,
                                multiplicativity_check, parse_grid, parse_range, stable_upper_bound)
from splength.families import surface
from splength.fixtures import no_2_torsion_corpus
from splength.presentation import parse_presentation, tcost, triangulate
from splength.tietze import SimplifyBudget, simplify


def test_free_group_ratio_zero():
    rep = stable_upper_bound(parse_presentation("< a, b | >"), 3)
    assert rep.best.ratio == 0
    assert rep.note == UPPER_BOUND_NOTE


@pytest.mark.parametrize("k", [3, 4, 7])
def test_cyclic_index_one(k):
    rep = stable_upper_bound(parse_presentation(f"< x | x^{k} >"), 1)
    assert len(rep.records) == 1
    assert rep.best.ratio == k - 2


def test_triangulated_surface_index_two():
    tp = triangulate(surface(2).presentation)
    rep = stable_upper_bound(tp, 2)
    assert rep.best.ratio <= 6
    assert rep.best.ratio == 5 and rep.best.index == 2
    assert rep.best.ratio <= tcost(simplify(tp))


def test_records_obey_covering_bound():
    for text in ["< a, b | a^2, b^3, (a b)^3 >", "< x | x^6 >", "< x, y | x y x y^-1 x^-1 y^-1 >"]:
        p = parse_presentation(text)
        base = tcost(triangulate(p))
        for rec in stable_upper_bound(p, 4).records:
            assert rec.simplified_cost <= rec.raw_cost <= rec.index * base
            assert rec.ratio == Fraction(rec.simplified_cost, rec.index)


def test_best_nonincreasing_in_index():
    p = parse_presentation("< a, b | a^3, b^3, (a b)^3 >")
    bests = [stable_upper_bound(p, k).best.ratio for k in range(1, 5)]
    assert all(a >= b for a, b in zip(bests, bests[1:]))


def test_torsion_floor_on_subgroups():
    for f in no_2_torsion_corpus():
        if f.presentation.ngens > 4:
            continue
        for rec in stable_upper_bound(f.presentation, 3).records:
            assert satisfies_torsion_floor(rec.presentation), f.name


def test_deterministic():
    p = parse_presentation("< a, b | a^2, b^3 >")
    assert stable_upper_bound(p, 3) == stable_upper_bound(p, 3)


def test_budget_flag_recorded():
    p = triangulate(surface(3).presentation)
    rep = stable_upper_bound(p, 1, SimplifyBudget(max_passes=1))
    assert rep.best.budget_exceeded


def test_subgroup_mode_records_failures():
    p = parse_presentation("< a, b | >")
    good = SubgroupSpec.parse("a, b^2, b a b^-1", p)
    bad = SubgroupSpec.parse("a", p)
    rep = stable_upper_bound(p, 5, subgroups=[good, bad], max_cosets=50)
    assert [r.index for r in rep.records] == [1, 2]
    assert len(rep.failures) == 1 and rep.failures[0][0] == bad


def test_record_validation():
    t = trivial_table(1)
    with pytest.raises(AssertionError):
        EstimateRecord(t, 1, 3, 4, Fraction(4))
    with pytest.raises(AssertionError):
        EstimateRecord(t, 2, 4, 3, Fraction(3))


def test_multiplicativity_index_one():
    p = parse_presentation("< x | x^6 >")
    rep = multiplicativity_check(p, trivial_table(1), 2)
    assert rep.bound_group == rep.bound_subgroup and rep.holds and rep.reverse_holds


def test_multiplicativity_cyclic():
    p = parse_presentation("< x | x^6 >")
    t = next(t for t in low_index_subgroups(p, 2) if t.index == 2)
    rep = multiplicativity_check(p, t, 3)
    assert rep.holds
    assert "bound(H) <= d * bound(G): True" in rep.describe()


def test_multiplicativity_surface():
    tp = triangulate(surface(2).presentation)
    t = low_index_subgroups(tp, 2)[1]
    rep = multiplicativity_check(tp, t, 2)
    assert rep.index == 2 and rep.holds


def test_free_product_combine():
    assert free_product_combine(Fraction(402, 100), 0) == Fraction(402, 100)
    assert free_product_combine(6, 15) == 21
    rec = stable_upper_bound(triangulate(surface(2).presentation), 2).best
    assert free_product_combine(rec, rec) == 2 * rec.ratio


def test_surface_sweep():
    sw = family_sweep("surface", {"g": [2], "d": range(1, 101)})
    assert sw.argmin.ratio == Fraction(402, 100) and dict(sw.argmin.params)["d"] == 100
    lines = sw.to_csv().splitlines()
    assert lines[0] == ("family,g,d,index_or_degree,tcost,ratio,ratio_decimal,"
                        "commensurability_adjusted_ratio,adjusted_decimal")
    assert lines[100] == "surface,2,100,100,402,402/100,4.02,402/100,4.02"
    assert "upper bound" in sw.summary()


def test_figure8_sweep():
    sw = family_sweep("figure8", {"m": range(1, 51), "n": range(1, 51)})
    best = sw.argmin
    assert (best.tcost, best.degree) == (15406, 2500)
    assert best.adjusted_ratio <= Fraction(103, 100)
    assert "figure8,50,50,2500,15406,15406/2500,6.1624,15406/15000,1.02707" in sw.to_csv()


def test_instantiated_sweep_agrees():
    counted = family_sweep("magic", {"m": range(1, 4), "n": range(1, 4)})
    built = family_sweep("magic", {"m": range(1, 4), "n": range(1, 4)}, instantiate=True)
    assert counted == built


def test_seifert_sweep():
    sw = family_sweep("seifert", {"g": [2], "e": [1], "d": range(1, 31)})
    assert sw.argmin.ratio == Fraction(247, 900)
    assert sw.argmin.ratio < Fraction(3, 10)


def test_sweep_errors():
    with pytest.raises(ValueError):
        family_sweep("lamplighter", {"m": [1]})
    with pytest.raises(ValueError):
        family_sweep("surface", {"g": [2]})
    with pytest.raises(ValueError):
        family_sweep("surface", {"g": [1], "d": [1]})
    with pytest.raises(ValueError):
        family_sweep("magic", {"m": [1], "n": [1], "k": [2]})


def test_parse_grid():
    assert parse_grid("g=2;d=1..4") == {"g": [2], "d": [1, 2, 3, 4]}
    assert parse_range("-2..1,5") == [-2, -1, 0, 1, 5]
    for bad in ["g", "d=4..1", "d="]:
        with pytest.raises(ValueError):
            parse_grid(bad)
