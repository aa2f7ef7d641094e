import pytest

from gentle_ext.algebra import validate_gentle
from gentle_ext.formats import fixture_triangulation, format_algebra, parse_triangulation
from gentle_ext.modules import simple, string_module
from gentle_ext.oracle import ext_dims_oracle, to_representation
from gentle_ext.strings import enumerate_strings, invert
from gentle_ext.triangulation import (
    Triangulation,
    TriangulationError,
    algebra_from_triangulation,
    ext_degree_profile,
    period3_check,
    random_disk_triangulation,
    string_from_crossings,
    validate_triangulation,
)


def test_hex_is_three_cycle():
    A = algebra_from_triangulation(fixture_triangulation("HEX"))
    assert set(A.vertices) == {"A", "B", "C"}
    assert len(A.arrows) == 3 and len(A.relations) == 3
    assert [len(c) for c in A.relation_cycles] == [3]


def test_small_disks():
    sq = algebra_from_triangulation(fixture_triangulation("SQUARE"))
    assert list(sq.vertices) == ["D"] and not sq.arrows
    fan = algebra_from_triangulation(fixture_triangulation("FAN5"))
    assert len(fan.vertices) == 2 and len(fan.arrows) == 1 and not fan.relations


def test_crossings():
    tri = fixture_triangulation("HEX")
    A = algebra_from_triangulation(tri)
    assert string_from_crossings(tri, A, ["A"]).text == "@A"
    w = string_from_crossings(tri, A, ["A", "B"])
    assert len(w) == 1 and w.letters[0].name == "A_B"
    back = string_from_crossings(tri, A, ["B", "A"])
    assert back == invert(w)
    assert string_module(A, w) == string_module(A, back)


def test_crossing_errors():
    tri = fixture_triangulation("HEX")
    A = algebra_from_triangulation(tri)
    with pytest.raises(TriangulationError):
        string_from_crossings(tri, A, [])
    with pytest.raises(TriangulationError):
        string_from_crossings(tri, A, ["s01"])
    with pytest.raises(TriangulationError, match="invalid arc"):
        string_from_crossings(tri, A, ["A", "B", "C"])


@pytest.mark.parametrize(
    "text, needle",
    [
        ("edge a\nedge b\nedge c\nboundary a\nboundary b\nboundary c\ntriangle a b c\n", "no internal"),
        ("edge a\nedge b\nedge c\nboundary a\nboundary b\ntriangle a b c\n", "expected 2"),
        ("edge a\nedge b\nboundary a\ntriangle a b b\n", "degenerate"),
    ],
)
def test_invalid_triangulations(text, needle):
    with pytest.raises(TriangulationError, match=needle):
        validate_triangulation(parse_triangulation(text))


@pytest.mark.parametrize("seed", range(25))
def test_random_disks(seed):
    tri = random_disk_triangulation(seed)
    assert 2 <= len(tri.triangles) <= 12
    A = algebra_from_triangulation(tri)
    validate_gentle(A.vertices, A.arrows.values(), A.relations)
    assert all(len(c) == 3 for c in A.relation_cycles)
    assert len(A.vertices) == len(tri.triangles) - 1
    words = enumerate_strings(A, 2)
    for v in words[:6]:
        for w in words[:6]:
            rep = period3_check(A, string_module(A, v), string_module(A, w))
            assert rep.ok, (format_algebra(A), v, w, rep)


def test_period3_tri3(tri3):
    x, y = simple(tri3, "x"), simple(tri3, "y")
    rep = period3_check(tri3, x, x)
    assert rep.ok and rep.dims == [0, 1, 0, 0, 1, 0, 0]
    assert period3_check(tri3, x, y).ok


def test_degree_profile(tri3):
    x, y = simple(tri3, "x"), simple(tri3, "y")
    assert list(ext_degree_profile(tri3, x, x).values()) == [[3]]
    prof = ext_degree_profile(tri3, x, y)
    from gentle_ext.ext import ext_dim

    for r in (2, 3, 4):
        assert ext_dim(tri3, x, y, r) == sum(1 for hits in prof.values() if r in hits)


def test_profile_of_finite_pd_module(lin):
    from gentle_ext.ext import ext_dim

    m = string_module(lin, enumerate_strings(lin, 1)[0])
    assert all(not hits for hits in ext_degree_profile(lin, m, m).values())
    assert [ext_dim(lin, m, m, d) for d in range(3, 8)] == [0] * 5


def test_hex_matches_oracle():
    A = algebra_from_triangulation(fixture_triangulation("HEX"))
    s = simple(A, "A")
    rep = to_representation(A, s)
    assert ext_dims_oracle(A, rep, rep, 7) == [0, 0, 1, 0, 0, 1, 0]


def test_triangulation_dataclass_internal():
    t = Triangulation(("a", "b"), (), frozenset({"a"}))
    assert t.internal == ("b",)
