"""Determinant, derivative, and edge-subset checks against known values."""

from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from tetravol.cayley_menger import (
    AXIS_PAIRS, EDGES, FACES, VERTEX_EDGES, EdgeIndex, EdgeSubset,
    build_f, build_f_on_squares, directional_derivative, f_hat_polynomial,
    f_polynomial, is_tetrahedral, volume_squared,
)
from tetravol.exact_poly import Polynomial

REGULAR = (1, 1, 1, 1, 1, 1)
CENTER = (4, 4, 4, 4, 4, 4)


def test_edge_order_is_lexicographic():
    assert EDGES == ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))
    for k, (i, j) in enumerate(EDGES):
        assert EdgeIndex.of(i, j) == k
        assert EdgeIndex.pair(k) == (i, j)


def test_axis_pairs_are_disjoint_edges():
    assert AXIS_PAIRS == ((0, 5), (1, 4), (2, 3))
    for k1, k2 in AXIS_PAIRS:
        assert not set(EDGES[k1]) & set(EDGES[k2])


def test_vertex_edges_cover_each_star():
    for v, ks in VERTEX_EDGES.items():
        assert all(v in EDGES[k] for k in ks)
        assert len(ks) == 3


def test_faces_list_their_boundary_edges():
    for face, ks in FACES.items():
        for k in ks:
            assert set(EDGES[k]) <= set(face)
        assert len(ks) == 3


def test_f_shape():
    f = f_polynomial()
    assert f.term_count() == 22
    assert f.total_degree() == 6
    assert f.max_variable_degree() == 4


def test_f_factors_through_squares():
    fhat = f_hat_polynomial()
    assert fhat.total_degree() == 3
    squares = [Polynomial.variable(6, k) ** 2 for k in range(6)]
    assert fhat.substitute(squares) == f_polynomial()


def test_builders_match_cached_polynomials():
    assert build_f() == f_polynomial()
    assert build_f_on_squares() == f_hat_polynomial()


def test_known_values():
    f = f_polynomial()
    assert f.evaluate(REGULAR) == 4
    assert f.evaluate(CENTER) == 16384
    assert f.evaluate((6, 3, 3, 3, 3, 6)) == -93312


def test_degenerate_configurations_vanish():
    f = f_polynomial()
    for d in [(0, 6, 6, 6, 6, 0), (6, 0, 6, 6, 0, 6), (6, 6, 0, 0, 6, 6),
              (8, 8, 8, 0, 0, 0), (8, 0, 0, 8, 8, 0), (0, 8, 0, 8, 0, 8),
              (0, 0, 8, 0, 8, 8)]:
        assert f.evaluate(d) == 0


def test_volume_of_regular_unit_tetrahedron():
    assert volume_squared(REGULAR) == Fraction(1, 72)
    assert volume_squared(CENTER) == Fraction(16384, 288)


@given(st.tuples(*[st.integers(1, 9)] * 6), st.integers(1, 4))
def test_f_is_homogeneous_degree_six(d, lam):
    f = f_polynomial()
    scaled = tuple(lam * v for v in d)
    assert f.evaluate(scaled) == lam ** 6 * f.evaluate(d)


@given(st.tuples(*[st.integers(1, 9)] * 6), st.integers(1, 4))
def test_g_is_homogeneous_degree_five(d, lam):
    g = directional_derivative(EdgeSubset.parse("12,13"))
    scaled = tuple(lam * v for v in d)
    assert g.evaluate(scaled) == lam ** 5 * g.evaluate(d)


def test_directional_derivative_is_additive():
    singles = [directional_derivative((k,)) for k in range(6)]
    f = f_polynomial()
    for k in range(6):
        assert singles[k] == f.partial_derivative(k)
    assert directional_derivative((0, 2, 5)) == (
        singles[0] + singles[2] + singles[5])
    total = Polynomial.zero(6)
    for s in singles:
        total = total + s
    assert directional_derivative(EdgeSubset.full()) == total


def test_directional_derivative_known_value():
    g = directional_derivative(EdgeSubset.full())
    assert g.evaluate(CENTER) == 24576
    assert g.evaluate((6, 3, 3, 3, 3, 6)) == -62208


def test_is_tetrahedral_known_cases():
    assert is_tetrahedral(REGULAR)
    assert is_tetrahedral(CENTER)
    assert is_tetrahedral((3, 4, 5, 4, 5, 3))
    # flat: one length equal to the sum of two others on a face
    assert not is_tetrahedral((1, 1, 1, 1, 1, 4))
    assert not is_tetrahedral((0, 6, 6, 6, 6, 0))


def test_is_tetrahedral_needs_positive_volume():
    # all face triangles fine but negative determinant
    d = (6, 3, 3, 3, 3, 6)
    assert f_polynomial().evaluate(d) < 0
    assert not is_tetrahedral(d)


# -- edge subsets --------------------------------------------------------

def test_parse_spec_roundtrip():
    for text in ["12", "12,34", "12,13,14", "12,13,24,34"]:
        assert EdgeSubset.parse(text).spec() == text
    with pytest.raises(ValueError):
        EdgeSubset.parse("15")
    with pytest.raises(ValueError):
        EdgeSubset(())


def test_classification_tags():
    cases = {
        "12": "single-edge",
        "12,34": "opposite-pair",
        "12,13": "incident-pair",
        "12,13,14": "tripod",
        "12,13,23": "3-cycle",
        "12,14,23": "3-path",
        "12,13,24,34": "4-cycle",
        "12,13,14,23": "complement-of-incident-pair",
        "12,13,14,23,24": "complement-of-edge",
        "12,13,14,23,24,34": "full-K4",
    }
    for text, tag in cases.items():
        assert EdgeSubset.parse(text).classify() == tag


def test_classification_counts_over_all_subsets():
    tags = {}
    for n in range(1, 7):
        for idx in combinations(range(6), n):
            tag = EdgeSubset(idx).classify()
            tags[tag] = tags.get(tag, 0) + 1
    assert tags == {
        "single-edge": 6, "opposite-pair": 3, "incident-pair": 12,
        "tripod": 4, "3-cycle": 4, "3-path": 12, "4-cycle": 3,
        "complement-of-incident-pair": 12, "complement-of-edge": 6,
        "full-K4": 1,
    }


def test_friendly_flag():
    assert EdgeSubset.parse("12,13,23").friendly is False
    assert EdgeSubset.parse("12,13,14,23").friendly is False
    assert EdgeSubset.parse("12,13,14,23,24").friendly is False
    for text in ["12", "12,13", "12,34", "12,13,14", "12,14,23",
                 "12,13,24,34"]:
        assert EdgeSubset.parse(text).friendly is True
    assert EdgeSubset.full().friendly is True


def test_vertex_star_containment():
    assert EdgeSubset.parse("12,13,14").contains_vertex_star(1)
    assert not EdgeSubset.parse("12,13").contains_vertex_star(1)
    assert EdgeSubset.full().contains_vertex_star(3)
