import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lehmangraphs.clutters import Clutter, ClutterTooLarge, build_J, minimal_sets
from lehmangraphs.figures import fano_matrix, j_minus_i, mobius10
from lehmangraphs.polyhedra import (HPolyhedron, NotAClutterError, covering_polyhedron, enumerate_vertices,
                                    enumerate_vertices_bruteforce, fractional_vertices, is_ideal, is_mni_exact,
                                    mni_test_square)

TRIANGLE = ((1, 1, 0), (0, 1, 1), (1, 0, 1))


@st.composite
def clutters(draw, max_n=7):
    n = draw(st.integers(2, max_n))
    sets = draw(st.lists(st.frozensets(st.integers(0, n - 1), min_size=1), min_size=1, max_size=9))
    return Clutter(range(n), minimal_sets(sets))


def test_triangle_vertices():
    V = enumerate_vertices(covering_polyhedron(TRIANGLE))
    half = Fraction(1, 2)
    assert V.vertices == ((0, 1, 1), (half, half, half), (1, 0, 1), (1, 1, 0))
    assert set(V.rays) == {(1, 0, 0), (0, 1, 0), (0, 0, 1)}
    assert list(V.vertices) == enumerate_vertices_bruteforce(covering_polyhedron(TRIANGLE))
    assert V.to_json_obj()["vertices"][1] == ["1/2", "1/2", "1/2"]


def test_fano_vertices():
    V = enumerate_vertices(covering_polyhedron(fano_matrix().adj))
    assert len(V.vertices) == 8
    assert fractional_vertices(V) == [(Fraction(1, 3),) * 7]


@given(clutters())
@settings(max_examples=120, deadline=None)
def test_double_description_matches_brute_force(C):
    H = covering_polyhedron(C.matrix())
    V = enumerate_vertices(H)
    assert list(V.vertices) == enumerate_vertices_bruteforce(H)
    assert set(V.rays) == {tuple(int(i == j) for i in range(len(C.ground))) for j in range(len(C.ground))}


@given(st.integers(1, 4), st.integers(0, 10 ** 6))
@settings(max_examples=60, deadline=None)
def test_double_description_on_rational_inequalities(d, seed):
    rng = random.Random(seed)
    ineq = []
    for _ in range(rng.randint(1, 5)):
        a = tuple(Fraction(rng.randint(-2, 4), rng.randint(1, 3)) for _ in range(d))
        ineq.append((a, Fraction(rng.randint(-3, 6), rng.randint(1, 4))))
    ineq += [(tuple(int(i == j) for i in range(d)), 0) for j in range(d)]
    H = HPolyhedron(tuple(ineq), d)
    V = enumerate_vertices(H)
    assert list(V.vertices) == enumerate_vertices_bruteforce(H)
    for r in V.rays:
        assert all(sum(c * x for c, x in zip(a, r)) >= 0 for a, _ in ineq)


def test_vertex_enumeration_errors():
    with pytest.raises(ValueError):
        enumerate_vertices(HPolyhedron((((1, 1), 1),), 2))
    with pytest.raises(ValueError):
        enumerate_vertices(HPolyhedron((), 0))
    with pytest.raises(NotAClutterError):
        covering_polyhedron(((1, 1), (1, 0)))
    with pytest.raises(NotAClutterError):
        covering_polyhedron(((2, 0),))
    with pytest.raises(NotAClutterError):
        covering_polyhedron(())


def test_idealness_examples():
    assert not is_ideal(Clutter.from_matrix(TRIANGLE))
    assert is_ideal(Clutter(range(3), [(0, 1), (1, 2)]))
    assert is_ideal(Clutter(range(3), [()]))
    assert is_ideal(Clutter(range(3), []))
    assert not is_ideal(Clutter.from_matrix(fano_matrix().adj))
    assert not is_ideal(build_J(3))


@given(clutters(6))
@settings(max_examples=40, deadline=None)
def test_idealness_is_minor_closed(C):
    if not is_ideal(C):
        return
    for v in C.ground:
        assert is_ideal(C.delete(v)) and is_ideal(C.contract(v))


@pytest.mark.parametrize("name", ["fano", "J2", "J3", "triangle", "mobius10"])
def test_mni_tests_agree(name):
    rows = {
        "fano": fano_matrix().adj,
        "J2": build_J(2).matrix(),
        "J3": build_J(3).matrix(),
        "triangle": TRIANGLE,
        "mobius10": mobius10().adj,
    }[name]
    assert mni_test_square(rows) is True
    assert is_mni_exact(Clutter.from_matrix(rows)) is True


def test_mni_negative_cases():
    # J - I of order 4 is Lehman with k = -1 but its covering polyhedron has more fractional vertices
    rows = j_minus_i(4).adj
    assert mni_test_square(rows) == is_mni_exact(Clutter.from_matrix(rows))
    assert not is_mni_exact(Clutter(range(3), [(0, 1), (1, 2)]))
    with pytest.raises(ValueError):
        mni_test_square(((1, 1, 0), (0, 1, 0), (1, 0, 1)))
    with pytest.raises(ValueError):
        mni_test_square(((1, 1),))
    with pytest.raises(ClutterTooLarge):
        is_mni_exact(Clutter(range(20), [range(20)]))


def test_mni_agreement_on_catalogue(catalogues):
    for (n, k), cat in catalogues.items():
        if n > 8:
            continue
        for g in cat.blind_graphs():
            assert mni_test_square(g.adj, cert=True) == is_mni_exact(Clutter.from_matrix(g.adj))
