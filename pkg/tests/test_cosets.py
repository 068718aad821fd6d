import json
from collections import Counter

import pytest

from oracles import abelian_subgroup_count, transitive_action_classes
from splength.abelian import abelianize
from splength.cosets import (CapacityExceeded, CosetTable, SubgroupSpec, check_table, low_index_subgroups,
                             standardize, table_from_permutations, todd_coxeter, trivial_table)
from splength.families import surface
from splength.presentation import Presentation, parse_presentation

S3 = "< a, b | a^2, b^2, (a b)^3 >"


def test_cyclic_group_order():
    assert todd_coxeter(parse_presentation("< x | x^5 >")).index == 5


def test_s3_cosets_of_transposition():
    p = parse_presentation(S3)
    t = todd_coxeter(p, SubgroupSpec.parse("a", p))
    assert t.index == 3
    check_table(p, t, SubgroupSpec.parse("a", p))
    assert todd_coxeter(p).index == 6


def test_full_subgroup_has_index_one():
    p = parse_presentation("< a, b, c | a b c, a^4 b^2 >")
    assert todd_coxeter(p, SubgroupSpec.parse("a, b, c", p)).index == 1


def test_zero_generators():
    p = Presentation((), ())
    t = todd_coxeter(p)
    assert t.index == 1
    assert low_index_subgroups(p, 3) == [t]


def test_larger_enumeration_needs_compaction():
    # (2,3,7) triangle quotient PSL(2,7) has order 168
    p = parse_presentation("< a, b | a^2, b^3, (a b)^7, (a b a b^-1)^4 >")
    assert todd_coxeter(p).index == 168
    assert todd_coxeter(p, SubgroupSpec.parse("b", p), max_cosets=200).index == 56


def test_capacity_exceeded():
    p = parse_presentation("< a, b | a b a^-1 b^-1 >")
    with pytest.raises(CapacityExceeded):
        todd_coxeter(p, max_cosets=50)


def test_low_index_free_rank_two():
    tables = low_index_subgroups(parse_presentation("< x, y | >"), 2)
    assert Counter(t.index for t in tables) == {1: 1, 2: 3}


def test_low_index_cyclic_six():
    tables = low_index_subgroups(parse_presentation("< x | x^6 >"), 6)
    assert sorted(t.index for t in tables) == [1, 2, 3, 6]


def test_low_index_max_one():
    p = surface(2).presentation
    assert low_index_subgroups(p, 1) == [trivial_table(p.ngens)]


def test_low_index_triangle_group():
    # the (2,3,4) triangle group is S4; four classes up to index 4
    p = parse_presentation("< x, y | x^2, y^3, (x y)^4 >")
    assert len(low_index_subgroups(p, 4)) == 4


def test_low_index_tables_are_valid_and_standard(fixture_corpus):
    for f in fixture_corpus:
        tables = low_index_subgroups(f.presentation, 3)
        assert tables == sorted(tables, key=lambda t: (t.index, t.flat()))
        for t in tables:
            check_table(f.presentation, t)
            assert standardize(t) == t


def test_low_index_is_deterministic():
    p = surface(2).presentation
    assert low_index_subgroups(p, 3) == low_index_subgroups(p, 3)


def test_low_index_counts_match_brute_force(fixture_corpus):
    for f in fixture_corpus:
        p = f.presentation
        if p.ngens > 4:
            continue
        top = 4 if p.ngens <= 2 else 3
        got = Counter(t.index for t in low_index_subgroups(p, top))
        for n in range(1, top + 1):
            assert got.get(n, 0) == transitive_action_classes(p, n), (f.name, n)


def test_abelian_counts_match_sublattice_enumeration(fixture_corpus):
    for f in fixture_corpus:
        if not f.abelian:
            continue
        p = f.presentation
        got = Counter(t.index for t in low_index_subgroups(p, 6))
        for n in range(1, 7):
            assert got.get(n, 0) == abelian_subgroup_count(abelianize(p), p.ngens, n), (f.name, n)


def test_surface_counts_frozen():
    # computed once with the brute-force transitive-action oracle
    got = Counter(t.index for t in low_index_subgroups(surface(2).presentation, 3))
    assert got == {1: 1, 2: 15, 3: 100}


def test_json_roundtrip():
    p = parse_presentation(S3)
    t = todd_coxeter(p, SubgroupSpec.parse("a", p))
    text = t.to_json()
    assert json.loads(text)["index"] == 3
    assert text == '{"index":3,"ngens":2,"action":[[1,1,2,2],[3,3,1,1],[2,2,3,3]]}'
    assert CosetTable.from_json(text) == t


def test_json_rejects_bad_tables():
    with pytest.raises(ValueError):
        CosetTable.from_json('{"index":2,"ngens":1,"action":[[1,1],[1,2]]}')
    with pytest.raises(ValueError):
        CosetTable.from_json('{"index":3,"ngens":1,"action":[[1,1],[2,2]]}')


def test_table_from_permutations_standardises():
    t = table_from_permutations([[2, 0, 1]])
    assert t.rows == ((1, 2), (2, 0), (0, 1))


def test_check_table_rejects_non_closing_relator():
    p = parse_presentation("< x | x^3 >")
    t = table_from_permutations([[1, 0]])
    with pytest.raises(ValueError):
        check_table(p, t)
