import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lehmangraphs.clutters import (Clutter, ClutterError, ClutterTooLarge, augmented_ternary, blocking_sets,
                                   build_J, build_plane, core, corner_classify, fano_minor_configuration,
                                   find_minor, is_degenerate_plane, minimal_sets, triangles,
                                   verify_fano_minor_in_augmented_ternary, zero_corner)
from lehmangraphs.figures import fano_matrix


@st.composite
def clutters(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    sets = draw(st.lists(st.frozensets(st.integers(0, n - 1), min_size=1), min_size=1, max_size=8))
    return Clutter(range(n), minimal_sets(sets))


def transversal_oracle(C: Clutter) -> frozenset:
    """Minimal transversals by checking every subset of the ground set."""
    hits = []
    for mask in range(1 << len(C.ground)):
        S = frozenset(v for i, v in enumerate(C.ground) if mask >> i & 1)
        if C.is_transversal(S):
            hits.append(S)
    return minimal_sets(hits)


# -- clutter algebra ------------------------------------------------------------

def test_clutter_validation():
    with pytest.raises(ClutterError):
        Clutter(range(3), [(0, 1), (0, 1, 2)])
    with pytest.raises(ClutterError):
        Clutter(range(2), [(0, 5)])
    with pytest.raises(ClutterError):
        Clutter(range(3), [(0, 1)]).delete(7)
    with pytest.raises(ClutterError):
        Clutter(range(3), [(0, 1)]).minor([0], [0])


@given(clutters(), st.data())
@settings(max_examples=80, deadline=None)
def test_deletion_and_contraction_commute(C, data):
    if len(C.ground) < 2:
        return
    u, v = data.draw(st.lists(st.sampled_from(C.ground), min_size=2, max_size=2, unique=True))
    assert C.delete(u).delete(v) == C.delete(v).delete(u)
    assert C.contract(u).contract(v) == C.contract(v).contract(u)
    assert C.delete(u).contract(v) == C.contract(v).delete(u) == C.minor([u], [v])


@given(clutters())
@settings(max_examples=80, deadline=None)
def test_blocker_matches_oracle_and_is_an_involution(C):
    B = C.blocker()
    assert B.edges == transversal_oracle(C)
    assert B.blocker() == C


@given(clutters(), st.data())
@settings(max_examples=60, deadline=None)
def test_blocker_swaps_deletion_and_contraction(C, data):
    v = data.draw(st.sampled_from(C.ground))
    assert C.delete(v).blocker() == C.blocker().contract(v)
    assert C.contract(v).blocker() == C.blocker().delete(v)


def test_named_blockers():
    fano = Clutter.from_matrix(fano_matrix().adj)
    assert fano.blocker() == fano
    for t in (2, 3, 4, 5):
        J = build_J(t)
        assert J.blocker() == J
        assert is_degenerate_plane(J) == t
    assert is_degenerate_plane(fano) is None
    with pytest.raises(ClutterError):
        build_J(1)
    with pytest.raises(ClutterTooLarge):
        Clutter(range(20), [range(20)]).blocker()


def test_core():
    rows = [(1, 1, 0, 0), (0, 1, 1, 1), (0, 0, 1, 1)]
    assert core(rows) == [(1, 1, 0, 0), (0, 0, 1, 1)]
    assert core([]) == []


def test_text_round_trip():
    C = build_J(3)
    text = C.to_text()
    assert text.splitlines()[0] == "4 4"
    assert Clutter.from_text("# J3\n" + text) == C
    for bad in ("", "3 2\n0 1\n", "x y\n", "2 1\n0 1 q\n"):
        with pytest.raises(ClutterError):
            Clutter.from_text(bad)


def test_isomorphism():
    fano = Clutter.from_matrix(fano_matrix().adj)
    assert fano.isomorphic(build_plane(2).lines)
    assert not fano.isomorphic(build_J(6))
    assert not build_J(3).isomorphic(Clutter(range(4), [(0, 1), (1, 2), (2, 3), (0, 3)]))


# -- planes, triangles and corners -------------------------------------------

@pytest.mark.parametrize("q,tri", [(2, 28), (3, 234)])
def test_planes_and_triangles(q, tri):
    P = build_plane(q)
    P.validate()
    n = q * q + q + 1
    assert len(P.points) == n and len(P.lines.edges) == n
    assert all(len(L) == q + 1 for L in P.lines.edges)
    for a, b in itertools.combinations(P.points, 2):
        assert {a, b} <= P.line_through(a, b)
    T = triangles(P)
    assert len(T) == tri
    for t in T:
        assert len(zero_corner(t)) == 3 * (q - 1)
        assert len(t.points) == 3 * q


def test_fano_has_no_blocking_sets():
    assert blocking_sets(build_plane(2)) == []


def test_ternary_blocking_sets_are_zero_corners():
    P = build_plane(3)
    found = blocking_sets(P)
    oracle = sorted((S for S in transversal_oracle(P.lines) if S not in P.lines.edges), key=sorted)
    assert found == oracle
    assert len(found) == 234 and {len(S) for S in found} == {6}
    assert set(found) == {zero_corner(T) for T in triangles(P)}


def test_corner_classification_is_exhaustive():
    # every minimal transversal of the lines inside a triangle is a line or a 0-, 1- or 3-corner
    P = build_plane(3)
    trans = P.lines.blocker().edges
    seen = set()
    for T in triangles(P):
        for R in trans:
            if R <= T.points:
                kind = corner_classify(T, R)
                assert kind[0] != "invalid"
                seen.add(kind[0])
        assert corner_classify(T, zero_corner(T)) == ("0-corner",)
        assert corner_classify(T, T.lines[1]) == ("line", 1)
        assert corner_classify(T, list(T.sides[0])[:1]) == ("invalid",)
    assert seen == {"line", "0-corner", "1-corner", "3-corner"}
    T = triangles(P)[0]
    with pytest.raises(ClutterError):
        corner_classify(T, set(P.points) - T.points)


def test_augmented_ternary():
    P, aug = augmented_ternary()
    assert len(aug.edges) == 13 + 234
    assert P.lines.edges <= aug.edges


# -- the Fano minor configuration ---------------------------------------------

def test_configuration_shape():
    P = build_plane(3)
    cfg = fano_minor_configuration(P)
    assert len(cfg["keep"]) == 7
    assert len(cfg["delete"]) + len(cfg["contract"]) + 7 == 13
    assert not cfg["delete"] & cfg["contract"]
    with pytest.raises(ClutterError):
        fano_minor_configuration(P, fourth=cfg["lines"][0])


def test_configuration_sets_give_fano():
    assert verify_fano_minor_in_augmented_ternary(configuration_only=True)
    assert verify_fano_minor_in_augmented_ternary(configuration_only=True, all_configurations=True)
    assert not verify_fano_minor_in_augmented_ternary(with_zero_corners=False, configuration_only=True)


def test_full_augmented_clutter_recipe():
    # two further lines through the fourth point of L4 sit inside the union and shrink to size <= 1
    P, aug = augmented_ternary()
    cfg = fano_minor_configuration(P)
    M = aug.minor(cfg["delete"], cfg["contract"])
    assert min(map(len, M.edges)) <= 1
    assert verify_fano_minor_in_augmented_ternary(with_zero_corners=False) is False


def test_find_minor():
    fano = build_plane(2).lines
    assert find_minor(fano, fano) == ((), ())
    # J_3 is minimally non-ideal, so the non-ideal J_2 is not a minor of it
    assert find_minor(build_J(3), build_J(2)) is None
    hidden = Clutter(range(5), [(0, 1), (1, 2), (0, 2, 3), (3, 4)])
    d, c = find_minor(hidden, build_J(2))
    assert hidden.minor(d, c).isomorphic(build_J(2))
    assert find_minor(build_plane(3).lines, fano) is None


def test_augmented_ternary_minors():
    # no 7-point minor of the augmented plane is Fano, yet it is not mni: it has a J_2 minor
    _, aug = augmented_ternary()
    assert find_minor(aug, build_plane(2).lines) is None
    d, c = find_minor(aug, build_J(2))
    assert aug.minor(d, c).isomorphic(build_J(2))
