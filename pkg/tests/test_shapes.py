import pytest
from hypothesis import given, strategies as st

from catalan_tasep.polyring import monomial
from catalan_tasep.shapes import (
    Shape, all_states, boundary_path, boundary_weight, parse_shape, shape_to_state,
    shapes_in_rectangle, shapes_with_semiperimeter, state_to_shape,
)

words = st.text(alphabet="01", min_size=1, max_size=12)


@given(words)
def test_state_shape_roundtrip(w):
    s = state_to_shape(w)
    assert shape_to_state(s) == w
    assert s.k == w.count("1") and s.cols == w.count("0") and s.n == len(w)
    assert boundary_weight(s) == monomial(s.k, s.cols)


def test_example_shape():
    s = state_to_shape("0101100")
    assert s == Shape((3, 2, 2), 4)
    assert str(parse_shape("3,2,2,0,0/4")) == "3,2,2,0,0/4"
    assert shape_to_state(parse_shape("3,2,2,0,0/4")) == "010110011"
    assert boundary_path(Shape((1,), 1)) == "SW"
    assert parse_shape("/3") == Shape((), 3)


@pytest.mark.parametrize("bad", [((2, 3), 3), ((4,), 3), ((-1,), 2)])
def test_invalid_shapes(bad):
    with pytest.raises(ValueError):
        Shape(*bad)


def test_counts():
    assert sum(1 for _ in shapes_with_semiperimeter(6)) == 2 ** 6
    assert len(all_states(4)) == 16
    # lattice paths in a 2 x 3 rectangle
    assert sum(1 for _ in shapes_in_rectangle(2, 3)) == 10


def test_cells_column_major():
    assert Shape((2, 1), 2).cells() == [(1, 1), (2, 1), (1, 2)]
    assert Shape((3, 1), 3).column_height(1) == 2
