import pytest

from jetcomplex import (
    ClassificationError,
    GridShape,
    decompose,
    enumerate_facets,
    enumerate_facets_bruteforce,
    facet_vertex_set,
    is_face,
    multiplicity_closed,
    multiplicity_sum,
)
from jetcomplex.facets import FacetProfile, forced_vertex_report, y_decompositions
from jetcomplex.grid import Layer, LatticePath, x, y


def test_two_by_two_profiles():
    facets = list(enumerate_facets(GridShape(2, 2)))
    assert [f.mu for f in facets] == [(2, 1), (1, 2), (1, 1), (1, 1)]


def test_three_by_three_count():
    assert len(list(enumerate_facets(GridShape(3, 3)))) == 36


def test_special_case_vertex_set():
    (f,) = [p for p in enumerate_facets(GridShape(2, 2)) if p.mu == (2, 1)]
    assert facet_vertex_set(f) == {x(2, 1), x(2, 2), y(1, 1), y(1, 2), y(2, 2), y(2, 1)}
    assert f.y_upper.cells == ((1, 1), (1, 2), (2, 2))
    assert f.y_lower.cells == ((2, 1),)


def test_facet_size_three_by_four():
    assert {len(f.vertices) for f in enumerate_facets(GridShape(3, 4))} == {12}


def test_two_by_three_pivot_one_two():
    for f in enumerate_facets(GridShape(2, 3)):
        if f.mu == (1, 2):
            assert y(1, 3) in f.vertices and y(2, 2) in f.vertices


@pytest.mark.parametrize("m, n", [(2, 2), (2, 3), (3, 3), (2, 4), (2, 5), (3, 4)])
def test_matches_oracle(m, n):
    shape = GridShape(m, n)
    structured = [f.vertices for f in enumerate_facets(shape)]
    assert len(set(structured)) == len(structured)
    assert set(structured) == enumerate_facets_bruteforce(shape)


@pytest.mark.parametrize("m, n", [(2, 2), (2, 6), (3, 5), (4, 4), (4, 5)])
def test_counts_and_structure(m, n):
    shape = GridShape(m, n)
    facets = list(enumerate_facets(shape))
    assert len(facets) == multiplicity_sum(shape) == multiplicity_closed(shape)
    for f in facets:
        assert all(forced_vertex_report(f).values()), f
        assert x(m, n) in f.vertices


@pytest.mark.parametrize("m, n", [(2, 3), (3, 3), (3, 4)])
def test_every_profile_is_a_face(m, n):
    shape = GridShape(m, n)
    assert all(is_face(shape, f.mask) for f in enumerate_facets(shape))


@pytest.mark.parametrize("m, n", [(2, 2), (2, 4), (3, 3), (3, 4), (4, 4)])
def test_decompose_roundtrip_and_uniqueness(m, n):
    shape = GridShape(m, n)
    for f in enumerate_facets(shape):
        assert decompose(shape, f.vertices) == f
        ys = [v.cell for v in f.vertices if v.layer is Layer.Y]
        assert len(y_decompositions(shape, f.mu, ys)) == 1


def test_enumeration_order_is_shelling_key_order():
    facets = list(enumerate_facets(GridShape(3, 4)))
    keys = [f.order_key for f in facets]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)


def test_decompose_rejects_non_facets():
    shape = GridShape(3, 3)
    f = next(iter(enumerate_facets(shape)))
    smaller = set(f.vertices) - {y(1, 1)}
    with pytest.raises(ClassificationError) as err:
        decompose(shape, smaller)
    assert err.value.reason == "cardinality"

    absent = min(set(shape.vertices()) - f.vertices)
    no_corner = (set(f.vertices) - {x(3, 3)}) | {absent}
    with pytest.raises(ClassificationError) as err:
        decompose(shape, no_corner)
    assert err.value.reason == "missing_corner"


def test_decompose_reports_x_and_y_failures():
    shape = GridShape(3, 3)
    # X vertices x[1,1], x[3,3] are not a path
    bad_x = {x(1, 1), x(3, 3)} | {y(1, c) for c in (1, 2, 3)} | {y(2, 1), y(3, 1), y(3, 2), y(2, 2), y(2, 3)}
    with pytest.raises(ClassificationError) as err:
        decompose(shape, bad_x)
    assert err.value.reason == "x_not_path"
    # valid X path, Y cells that cannot split
    bad_y = {x(2, 2), x(2, 3), x(3, 3)} | {y(1, 1), y(1, 2), y(1, 3), y(2, 3), y(3, 1), y(3, 2), y(3, 3)}
    with pytest.raises(ClassificationError) as err:
        decompose(shape, bad_y)
    assert err.value.reason == "y_not_decomposable"


def test_profile_validation():
    shape = GridShape(2, 2)
    up = LatticePath(Layer.Y, (1, 1), (1, 2), "R")
    low = LatticePath(Layer.Y, (2, 1), (2, 1), "")
    xp = LatticePath(Layer.X, (1, 1), (2, 2), "RD")
    FacetProfile(shape, (1, 1), xp, up, low)
    with pytest.raises(ClassificationError):
        FacetProfile(shape, (1, 2), xp, up, low)
    with pytest.raises(ClassificationError):
        FacetProfile(shape, (2, 2), xp, up, low)


def test_enumeration_is_lazy():
    gen = enumerate_facets(GridShape(6, 6))
    first = next(gen)
    assert first.mu == (6, 5)
