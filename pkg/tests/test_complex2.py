import json

import pytest

from splength.complex2 import (ComplexError, TwoComplex, attach_cones, bfs_tree, contract_tree, cover, euler_char,
                               from_json, from_presentation, to_dot, to_json, to_presentation, transversal_tree)
from splength.cosets import low_index_subgroups, table_from_permutations, todd_coxeter, trivial_table
from splength.families import surface
from splength.presentation import parse_presentation, tcost, triangulate
from splength.rewriting import rewrite_presentation
from splength.words import cyclic_reduce


def test_from_presentation_genus_two():
    c = from_presentation(triangulate(surface(2).presentation))
    assert (c.vertex_count, len(c.edges), c.triangle_count) == (1, 9, 6)
    assert euler_char(c) == -2


def test_from_presentation_bigon_and_free():
    c = from_presentation(parse_presentation("< x | x^2 >"))
    assert (c.vertex_count, len(c.edges), c.bigon_count) == (1, 1, 1)
    assert euler_char(c) == 1
    w = from_presentation(parse_presentation("< a, b, c | >"))
    assert euler_char(w) == 1 - 3 and w.faces == ()


def test_from_presentation_rejects_long_relators():
    with pytest.raises(ComplexError):
        from_presentation(surface(2).presentation)


def test_cover_index_one_is_copy():
    c = from_presentation(parse_presentation("< a, b | a b a, b^2 >"))
    d = cover(c, trivial_table(2))
    assert (d.vertex_count, d.edges, d.faces) == (1, c.edges, c.faces)


def test_cover_of_wedge():
    c = from_presentation(parse_presentation("< a, b | >"))
    d = cover(c, table_from_permutations([[1, 0], [0, 1]]))
    assert (d.vertex_count, len(d.edges), euler_char(d)) == (2, 4, -2)


def test_cover_genus_two_index_three():
    c = from_presentation(triangulate(surface(2).presentation))
    for t in low_index_subgroups(triangulate(surface(2).presentation), 3):
        d = cover(c, t)
        assert euler_char(d) == t.index * euler_char(c)
        assert d.triangle_count == t.index * c.triangle_count


def test_cover_rejects_mismatch():
    c = from_presentation(parse_presentation("< a | a^2 >"))
    with pytest.raises(ComplexError):
        cover(c, trivial_table(2))


def test_contract_empty_tree_on_one_vertex():
    c = from_presentation(parse_presentation("< a, b | a b a >"))
    assert contract_tree(c, set()) == c


def test_contract_segment():
    c = TwoComplex(2, ((0, 1),))
    d = contract_tree(c, {0})
    assert (d.vertex_count, d.edges) == (1, ())


def test_contract_rejects_cycle():
    c = TwoComplex(2, ((0, 1), (1, 0)))
    with pytest.raises(ComplexError):
        contract_tree(c, {0, 1})


def test_contract_genus_two_double_cover():
    tp = triangulate(surface(2).presentation)
    c = from_presentation(tp)
    for t in low_index_subgroups(tp, 2)[1:]:
        d = contract_tree(cover(c, t), transversal_tree(t))
        assert d.vertex_count == 1
        assert len(d.faces) + d.collapsed_faces == 12
        assert d.triangle_count <= 12


def test_contract_with_generic_bfs_tree():
    tp = triangulate(surface(2).presentation)
    for t in low_index_subgroups(tp, 3):
        cov = cover(from_presentation(tp), t)
        d = contract_tree(cov, bfs_tree(cov))
        assert d.vertex_count == 1
        assert euler_char(d) + d.collapsed_faces == euler_char(cov)


def test_contraction_keeps_one_sided_faces():
    p = parse_presentation("< x | x^3 >")
    t = todd_coxeter(p)
    d = contract_tree(cover(from_presentation(p), t), transversal_tree(t))
    assert [len(f) for f in d.faces] == [1, 1, 1]
    assert d.collapsed_faces == 0


def test_geometric_route_matches_rewriting():
    p = parse_presentation("< a, b | a^2, b^3, a b a >")
    for t in low_index_subgroups(p, 4):
        q = to_presentation(contract_tree(cover(from_presentation(p), t), transversal_tree(t)))
        r = rewrite_presentation(p, t)
        assert q.generators == r.generators
        assert sorted(w for w in map(cyclic_reduce, q.relators) if w) == sorted(r.relators)


def test_attach_cones_counts():
    c = from_presentation(parse_presentation("< a, b, c | >"))
    assert attach_cones(c, [], []) == c
    one = attach_cones(c, [(1,)], ["Z"])
    assert one.triangle_count == 1 and one.isotropy == {1: "Z"}
    two = attach_cones(c, [(1, 2, 3), (1, -2, 3, 3, 1)], ["A", "B"])
    assert two.triangle_count == 8
    assert two.vertex_count == 3
    assert euler_char(two) == euler_char(c) + 2 - (3 + 5) + 8


def test_attach_cones_open_path():
    c = TwoComplex(3, ((0, 1), (1, 2)))
    d = attach_cones(c, [(1, 2)], ["v"])
    assert len(d.edges) == 2 + 3 and d.triangle_count == 2
    assert euler_char(d) == euler_char(c) + 1 - 3 + 2


def test_attach_cones_rejects_bad_paths():
    c = TwoComplex(3, ((0, 1), (1, 2)))
    with pytest.raises(ComplexError):
        attach_cones(c, [(2, 1)], ["v"])
    with pytest.raises(ComplexError):
        attach_cones(c, [(3,)], ["v"])


def test_faces_must_close():
    with pytest.raises(ComplexError):
        TwoComplex(2, ((0, 1),), ((1,),))


def test_exports():
    c = from_presentation(parse_presentation("< a | a^2 >"))
    obj = json.loads(to_json(c))
    assert obj["vertices"] == 1 and obj["faces"] == [[1, 1]]
    assert from_json(to_json(c)) == c
    assert 'v0 -> v0 [label="a"]' in to_dot(c)
    with pytest.raises(ComplexError):
        to_presentation(TwoComplex(2, ((0, 1),)))
