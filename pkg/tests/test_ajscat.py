import pytest
from hypothesis import given, settings, strategies as st

from ajsdual.ajscat import (
    KMorphism,
    bott_samelson,
    check_morphism,
    compose,
    diagonal_morphism,
    identity_morphism,
    inverse_morphism,
    is_identity,
    is_morphism,
    lift_hom,
    links,
    object_from_json,
    object_to_json,
    objects_equal,
    q0_indecomposable_check,
    q_zero,
    rank_table,
    shift,
    structure_report,
    translate,
    translate_morphism,
    unit_object,
)
from ajsdual.alcove import down, finite_alcoves, fundamental_alcove, neighbour, s_wall, up
from ajsdual.lattice import equal_submodules, make_basis


def test_unit_object(a2):
    P = unit_object(a2)
    a_e = fundamental_alcove(a2.datum)
    assert P.support() == {a_e}
    for beta in range(3):
        below = P.edge(down(beta, a_e), beta)
        assert below.split == 0 and below.vectors == ((a2.one,),)
    assert len(P.edges) == 6
    assert not any(links(P, a, beta) for a, beta in P.edges)


def test_q0_in_a1(a1):
    Q = q_zero(a1)
    a_e = fundamental_alcove(a1.datum)
    a_s = neighbour(a_e, 0)
    alpha = a1.root(0)
    fly = make_basis(a1, Q.module(a_s) + Q.module(a_e), 0, [(alpha, a1.zero), (a1.one, a1.one)], [2, 0], 1)
    assert equal_submodules(Q.edge(a_s, 0), fly)
    assert Q.edge(a_e, 0).vectors == ((alpha,),)
    assert links(Q, a_s, 0)


def test_q0_support(a2):
    Q = q_zero(a2)
    assert Q.support() == set(finite_alcoves(a2.datum))
    assert all(rank == 1 for rank, _ in rank_table(Q).values())


def test_translated_unit_is_q0_in_a1(a1):
    T = translate(0, unit_object(a1))
    assert objects_equal(T, q_zero(a1))
    assert not objects_equal(translate(1, unit_object(a1)), q_zero(a1))


@pytest.mark.parametrize("word", [(0,), (0, 1), (2, 0, 1), (0, 0)])
def test_rank_law(a2, word):
    M = bott_samelson(a2, word[:-1], "Q0")
    s = word[-1]
    T = translate(s, M)
    for a in T.support() | M.support():
        wall = s_wall(a, s)
        assert T.rank(a) == M.rank(wall.minus) + M.rank(wall.plus)


def test_dual_translation_differs_only_on_fixed_plus_edges(a2):
    M = bott_samelson(a2, (0, 1), "Q0")
    for s in range(3):
        T, Td = translate(s, M), translate(s, M, dual=True)
        assert T.components == Td.components
        for a, beta in set(T.edges) | set(Td.edges):
            wall = s_wall(a, s)
            if not (wall.beta == beta and a == wall.plus):
                assert equal_submodules(T.edge(a, beta), Td.edge(a, beta))


def test_unit_rank_bound(a2):
    for word in [(0, 1, 2), (0, 0, 0), (2, 1, 0, 2)]:
        M = bott_samelson(a2, word, "P0")
        assert M.rank(fundamental_alcove(a2.datum)) <= 2 ** len(word)


def test_shift_round_trip(a2):
    M = bott_samelson(a2, (0, 2), "Q0")
    back = shift(shift(M, 4), -4)
    assert objects_equal(back, M)
    assert shift(M, 4).support() == M.support()


def test_morphism_examples(a1, a2):
    Q, P = q_zero(a2), unit_object(a2)
    a_e = fundamental_alcove(a2.datum)
    assert is_morphism(identity_morphism(Q))
    f = KMorphism(Q, P, {a_e: [[a2.one]]})
    assert is_morphism(f)
    # multiplication by alpha into the shifted copy is a morphism; its inverse is not
    Q1 = q_zero(a1)
    times = KMorphism(Q1, shift(Q1, -2), {a: [[a1.root(0)]] for a in Q1.components})
    assert is_morphism(times)
    inverse = inverse_morphism(times)
    assert inverse is not None and not is_morphism(inverse)
    assert any(kind == "edge" for kind, *_ in check_morphism(inverse).failures)


def test_degree_mismatch_is_reported(a1):
    Q = q_zero(a1)
    times = KMorphism(Q, Q, {a: [[a1.root(0)]] for a in Q.components})
    assert check_morphism(times).failures[0][0] == "degree"


def test_translation_is_a_functor(a2):
    M = bott_samelson(a2, (0,), "Q0")
    ident = identity_morphism(M)
    T = translate(1, M)
    assert is_identity(translate_morphism(1, ident, source=T, target=T))
    double = compose(ident, ident)
    assert is_identity(translate_morphism(1, double, source=T, target=T))


def test_diagonal_and_lift(a1, a2):
    Q = q_zero(a1)
    delta = diagonal_morphism(0, Q)
    assert is_morphism(delta)
    TQ = translate(0, Q)
    lifted = translate_morphism(0, delta, source=TQ)
    assert is_morphism(lifted)
    P = unit_object(a2)
    f = KMorphism(q_zero(a2), P, {fundamental_alcove(a2.datum): [[a2.one]]})
    g = lift_hom(f, 0)
    assert is_morphism(g)
    assert g.target.rank(fundamental_alcove(a2.datum)) == 1
    assert g.target.rank(neighbour(fundamental_alcove(a2.datum), 0)) == 1
    with pytest.raises(ValueError):
        diagonal_morphism(1, Q)


@pytest.mark.parametrize("fixture", ["a1", "a2", "b2"])
def test_q0_indecomposable(fixture, request):
    assert q0_indecomposable_check(request.getfixturevalue(fixture))


def test_single_alcove_is_connected(a2):
    assert q0_indecomposable_check(a2, unit_object(a2))


def test_rank_invariance_under_finite_weyl_group(a2):
    from ajsdual.alcove import weyl_act_alcove
    M = bott_samelson(a2, (2, 0, 2), "Q0")
    for a in M.support():
        for w in a2.datum.weyl_group:
            assert M.rank(weyl_act_alcove(w, a)) == M.rank(a)


def test_json_round_trip(a2):
    M = bott_samelson(a2, (0, 1, 2), "Q0", -2)
    data = object_to_json(M)
    again = object_from_json(a2, data)
    assert objects_equal(M, again)
    assert again.provenance == M.provenance
    data["edges"][0]["basis"]["matrix"][0][0] = "a1/("
    with pytest.raises(ValueError):
        object_from_json(a2, data)


words = st.lists(st.integers(0, 2), max_size=3)


@settings(max_examples=15, deadline=None)
@given(word=words, base=st.sampled_from(["P0", "Q0"]))
def test_structure_of_random_objects(word, base):
    from ajsdual.fracring import get_ring
    from ajsdual.rootsys import build_root_datum
    ring = get_ring(build_root_datum("A2"))
    M = bott_samelson(ring, word, base)
    report = structure_report(M, up_equality=(base == "Q0"))
    assert all(entry["failed"] == 0 for entry in report.values())
    for (a, beta) in M.edges:
        assert a in M.support() or up(beta, a) in M.support()
