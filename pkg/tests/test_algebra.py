import pytest

from gentle_ext.algebra import GentlenessError, random_gentle, validate_gentle
from gentle_ext.formats import fixture_text, format_algebra, parse_algebra


def _c4_with(extra_rel):
    text = fixture_text("C4.alg") + f"rel {extra_rel[0]} {extra_rel[1]}\n"
    return parse_algebra(text)


def _same_cycle(c, target):
    return len(c) == len(target) and any(c[i:] + c[:i] == tuple(target) for i in range(len(c)))


def test_c4_has_one_four_cycle(c4):
    assert len(c4.relation_cycles) == 1
    assert _same_cycle(c4.relation_cycles[0], ("b", "g", "d", "a"))


def test_lin_has_no_cycles(lin):
    assert lin.relation_cycles == ()


def test_tri3_cycle(tri3):
    assert len(tri3.relation_cycles) == 1
    assert _same_cycle(tri3.relation_cycles[0], ("p", "q", "r"))


def test_extra_relation_into_a_is_rejected():
    with pytest.raises(GentlenessError) as err:
        _c4_with(("f", "a"))
    assert err.value.clause == "relation"
    assert err.value.culprit == "a"


@pytest.mark.parametrize(
    "alg,arrow,direct,rel",
    [("C4", "b", "e", "g"), ("C4", "g", None, "d"), ("C4", "e", None, None), ("LIN", "f", "a", None), ("LIN", "a", None, "b")],
)
def test_successors(alg, arrow, direct, rel):
    from gentle_ext.formats import fixture_algebra

    A = fixture_algebra(alg)
    assert A.direct_successor(arrow) == direct
    assert A.relation_successor(arrow) == rel


def test_maximal_direct_paths(c4, lin):
    from gentle_ext.strings import maximal_direct_path_after

    assert maximal_direct_path_after(c4, "b").text == "e"
    assert maximal_direct_path_after(c4, "g").text == "@6"
    assert maximal_direct_path_after(lin, "f").text == "a"


@pytest.mark.parametrize(
    "vertices,arrows,rels,clause",
    [
        (["1", "1"], [], [], "syntax"),
        (["1"], [("a", "1", "2")], [], "syntax"),
        (["1", "2"], [("a", "1", "2"), ("a", "2", "1")], [], "syntax"),
        (["1", "2"], [("a", "1", "2"), ("b", "1", "2"), ("c", "1", "2")], [], "valence"),
        (["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3"), ("c", "2", "3")], [], "continuation"),
        (["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3"), ("c", "2", "3")], [("a", "b"), ("a", "c")], "relation"),
        (["1", "2"], [("a", "1", "2"), ("b", "2", "1")], [], "finite"),
        (["1"], [("a", "1", "1")], [], "finite"),
        (["1", "2"], [("a", "1", "2"), ("b", "1", "2")], [("a", "b")], "syntax"),
        (["-x"], [], [], "syntax"),
    ],
)
def test_rejections_name_the_clause(vertices, arrows, rels, clause):
    with pytest.raises(GentlenessError) as err:
        validate_gentle(vertices, arrows, rels)
    assert err.value.clause == clause


def test_loop_with_relation_is_accepted():
    A = validate_gentle(["1"], [("a", "1", "1")], [("a", "a")])
    assert A.relation_cycles == (("a",),)


def test_two_cycle_is_accepted():
    A = validate_gentle(["1", "2"], [("a", "1", "2"), ("b", "2", "1")], [("a", "b")])
    assert A.relation_cycles == ()
    assert A.direct_successor("b") == "a"


def test_random_gentle_is_deterministic():
    assert random_gentle(1, 8, 12) == random_gentle(1, 8, 12)
    A = random_gentle(1, 8, 12)
    validate_gentle(A.vertices, A.arrows.values(), A.relations)


def test_random_gentle_degenerate_bound():
    A = random_gentle(2, 1, 0)
    assert len(A.vertices) == 1 and not A.arrows


def test_random_gentle_rejects_bad_bounds():
    with pytest.raises(ValueError):
        random_gentle(0, 0, 3)


def test_format_round_trip(c4):
    assert parse_algebra(format_algebra(c4)) == c4


def test_opposite_is_involution(c4):
    assert c4.opposite().opposite() == c4
