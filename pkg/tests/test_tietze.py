import pytest

from splength.abelian import smith_form_of
from splength.cosets import low_index_subgroups, trivial_table
from splength.families import surface
from splength.presentation import Presentation, parse_presentation, tcost, triangulate
from splength.rewriting import rewrite_presentation
from splength.tietze import SimplifyBudget, simplify, simplify_with_status


def test_budget_validation():
    with pytest.raises(ValueError):
        SimplifyBudget(0, 10)
    assert SimplifyBudget.parse("7:300") == SimplifyBudget(7, 300)
    assert SimplifyBudget.parse("7") == SimplifyBudget(7)


def test_recovers_one_relator_surface():
    tp = triangulate(surface(2).presentation)
    s = simplify(tp)
    assert len(s.relators) == 1
    assert s.ngens == 4
    assert tcost(s) == 6
    assert smith_form_of(s).invariants == ((), 4)


def test_removes_trivial_relator():
    p = parse_presentation("< a, b | a a^-1, b^3 >")
    s = simplify(p)
    assert s.relators == ((2, 2, 2),) or tcost(s) <= 1
    assert smith_form_of(s).torsion == (3,)


def test_removes_duplicate_relators():
    p = parse_presentation("< a, b | a b a^-1 b^-1, b a b^-1 a^-1, (a b a^-1 b^-1)^1 >")
    s = simplify(p)
    assert tcost(s) == 2


def test_eliminates_generator():
    p = parse_presentation("< a, b, c | c a^-1 b^-1, c^5 >")
    s = simplify(p)
    assert s.ngens == 2
    assert tcost(s) <= tcost(p)


def test_index_one_rewrite_simplifies_back():
    for text in ("< a, b | a^2, b^3, (a b)^5 >", "< x, y | x y x y^-1 x^-1 y^-1 >"):
        p = parse_presentation(text)
        r = rewrite_presentation(p, trivial_table(p.ngens))
        assert tcost(simplify(r)) <= tcost(p)


def test_budget_exceeded_is_reported_not_raised():
    tp = triangulate(surface(3).presentation)
    res = simplify_with_status(tp, SimplifyBudget(1, 10_000))
    assert res.budget_exceeded
    assert tcost(res.presentation) <= tcost(tp)
    res = simplify_with_status(tp, SimplifyBudget(50, 3))
    assert res.budget_exceeded and res.presentation == tp


def test_no_relators():
    p = Presentation(("a", "b"), ())
    assert simplify(p) == p


def test_corpus_safety(fixture_corpus):
    for f in fixture_corpus:
        for p in (f.presentation, triangulate(f.presentation)):
            s = simplify(p)
            assert tcost(s) <= tcost(p)
            assert smith_form_of(s).invariants == smith_form_of(p).invariants, f.name
            assert len(low_index_subgroups(s, 3)) == len(low_index_subgroups(p, 3)), f.name
