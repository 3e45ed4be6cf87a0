"""Pullback of polynomials onto the unit cube over a lattice simplex."""

from fractions import Fraction

from hypothesis import given, settings, strategies as st

from tetravol.cayley_menger import directional_derivative, f_polynomial
from tetravol.chamber_geometry import build_partitions
from tetravol.exact_poly import Polynomial
from tetravol.simplex_pullback import PullbackMap, build_pullback, pullback


def _cells():
    parts = build_partitions()
    return [parts.twelve["C_11"], parts.twelve["C_31"],
            parts.four["B_1"], parts.fortyeight["D_1111"]]


def small_polys6(max_deg=2, max_terms=4):
    exps = st.tuples(*[st.integers(0, max_deg) for _ in range(6)])
    term = st.tuples(exps, st.integers(-20, 20))
    return st.lists(term, max_size=max_terms).map(
        lambda ts: Polynomial(6, dict(ts)))


cube_points = st.tuples(*[
    st.fractions(min_value=0, max_value=1, max_denominator=8)
    for _ in range(5)])


def test_cube_corners_map_to_first_and_last_vertex():
    for cell in _cells():
        m = build_pullback(cell)
        assert m.point_image((0,) * 5) == cell.vertices[0]
        assert m.point_image((1,) * 5) == cell.vertices[5]


def test_axis_steps_walk_the_vertex_chain():
    cell = _cells()[0]
    m = build_pullback(cell)
    # setting the first j coordinates to 1 and the rest to 0 gives vertex j
    for j in range(6):
        x = tuple(1 if k < j else 0 for k in range(5))
        assert m.point_image(x) == cell.vertices[j]


@given(cube_points)
@settings(max_examples=40)
def test_point_image_stays_inside_the_simplex(x):
    cell = _cells()[0]
    m = build_pullback(cell)
    assert cell.contains(m.point_image(x))


@given(small_polys6(), cube_points)
@settings(max_examples=40, deadline=None)
def test_pullback_evaluates_like_composition(p, x):
    cell = _cells()[1]
    m = build_pullback(cell)
    assert m.apply(p).evaluate(x) == p.evaluate(m.point_image(x))


@given(small_polys6(max_deg=2, max_terms=3))
@settings(max_examples=25, deadline=None)
def test_fast_and_reference_paths_agree(p):
    cell = _cells()[2]
    m = PullbackMap(cell)
    assert m.apply(p) == m.apply_reference(p)


def test_reference_path_on_the_determinant():
    cell = _cells()[3]
    m = PullbackMap(cell)
    g = directional_derivative((0,))
    assert m.apply(g) == m.apply_reference(g)


def test_pullback_keeps_per_variable_degree_bounded():
    # the dominance tester only accepts per-variable degree up to six
    f = f_polynomial()
    for cell in _cells():
        assert pullback(f, cell).max_variable_degree() <= 6


def test_pullback_of_constants_and_cache():
    cell = _cells()[0]
    one = Polynomial.constant(6, 7)
    assert pullback(one, cell) == Polynomial.constant(5, 7)
    assert build_pullback(cell) is build_pullback(cell)


def test_pullback_preserves_sign_on_samples():
    f = f_polynomial()
    cell = _cells()[0]
    q = pullback(f, cell)
    m = build_pullback(cell)
    for x in [(Fraction(1, 2),) * 5,
              (Fraction(1, 3), Fraction(2, 3), 0, 1, Fraction(1, 4))]:
        assert q.evaluate(x) == f.evaluate(m.point_image(x))
        assert q.evaluate(x) >= 0
