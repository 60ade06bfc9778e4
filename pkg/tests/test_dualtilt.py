import pytest

from ajsdual.ajscat import (
    bott_samelson,
    identity_morphism,
    is_identity,
    objects_equal,
    q_zero,
    rank_table,
    shift,
    unit_object,
)
from ajsdual.alcove import fundamental_alcove, neighbour, weyl_act_alcove
from ajsdual.dualtilt import (
    anti_box_alcoves,
    bs_selfdual_witness,
    check_kipptrans,
    dualize,
    dualize_morphism,
    q0_selfdual_witness,
    q0_summand_split,
    selfdual_anti_check,
    tau_sigma,
    tilt,
    tilt_morphism,
)


def test_unit_object_is_self_dual(a2):
    P = unit_object(a2)
    assert objects_equal(dualize(P), P)


def test_dual_of_shift(a2):
    M = bott_samelson(a2, (0, 1), "Q0")
    assert objects_equal(dualize(shift(M, 2)), shift(dualize(M), -2))


def test_double_dual(a2):
    M = bott_samelson(a2, (2, 0), "Q0")
    DD = dualize(dualize(M))
    assert objects_equal(DD, M)
    assert rank_table(dualize(M)).keys() == rank_table(M).keys()
    assert all(dualize(M).rank(a) == M.rank(a) for a in M.support())


def test_dualized_identity(a2):
    M = bott_samelson(a2, (0,), "Q0")
    assert is_identity(dualize_morphism(identity_morphism(M)))


def test_tilt_by_identity_changes_nothing(a2):
    M = bott_samelson(a2, (0, 1), "Q0")
    assert objects_equal(tilt(M, a2.datum.identity()), M)


def test_tilt_moves_support(a2):
    datum = a2.datum
    w0 = datum.longest_element()
    a_e = fundamental_alcove(datum)
    assert tilt(unit_object(a2)).support() == {weyl_act_alcove(w0, a_e)}
    M = bott_samelson(a2, (1, 2), "Q0")
    assert tilt(M).support() == {weyl_act_alcove(w0, a) for a in M.support()}
    assert objects_equal(tilt(tilt(M)), M)
    assert is_identity(tilt_morphism(identity_morphism(M)))


def test_tau_sigma_on_unit_object(a1):
    witness = tau_sigma(0, unit_object(a1))
    assert witness.ok and witness.shift_amount == -2


@pytest.mark.parametrize("s", [0, 1, 2])
def test_tau_sigma_in_a2(a2, s):
    assert tau_sigma(s, bott_samelson(a2, (0,), "Q0")).ok


def test_q0_witness_signs_in_a1(a1):
    witness = q0_selfdual_witness(a1)
    a_e = fundamental_alcove(a1.datum)
    a_s = neighbour(a_e, 0)
    alpha = a1.root(0)
    assert witness.ok and witness.shift_amount == -2
    assert witness.forward.matrix(a_e) == [[alpha]]
    assert witness.forward.matrix(a_s) == [[-alpha]]


@pytest.mark.parametrize("fixture,shift_amount", [("a1", -2), ("a2", -6), ("b2", -8)])
def test_q0_witness_shift(fixture, shift_amount, request):
    witness = q0_selfdual_witness(request.getfixturevalue(fixture))
    assert witness.ok and witness.shift_amount == shift_amount


def test_bott_samelson_witness_in_a1(a1):
    witness = bs_selfdual_witness(a1, (1,))
    assert witness.ok and witness.shift_amount == -4
    moved = bs_selfdual_witness(a1, (1,), n=3)
    assert moved.ok and moved.shift_amount == -10


def test_bott_samelson_witness_in_a2(a2):
    witness = bs_selfdual_witness(a2, (0, 1))
    assert witness.ok and witness.shift_amount == -10


def test_bott_samelson_witness_needs_q0(a1):
    with pytest.raises(ValueError):
        bs_selfdual_witness(a1, (0,), base="P0")


@pytest.mark.parametrize("s", [0, 1, 2])
def test_kipptrans_with_longest_element(a2, s):
    report = check_kipptrans(s, bott_samelson(a2, (1,), "Q0"))
    assert report.equal and not report.failing_edges


def test_kipptrans_fails_without_tilt(a2):
    identity = a2.datum.identity()
    reports = [check_kipptrans(s, q_zero(a2), identity) for s in range(3)]
    assert not all(r.equal for r in reports)


@pytest.mark.parametrize("word", [(0, 1, 0), (1, 0, 1)])
def test_q0_is_a_summand_in_a2(a2, word):
    report = q0_summand_split(a2, word)
    assert report.ok and report.is_identity


def test_q0_is_a_summand_in_a1(a1):
    report = q0_summand_split(a1, (0,))
    assert report.ok and report.is_identity


@pytest.mark.parametrize("word", [(0, 1), (0, 0, 1), (0, 1, 2)])
def test_summand_split_rejects_bad_words(a2, word):
    with pytest.raises(ValueError):
        q0_summand_split(a2, word)


def test_anti_box_checks_in_a2(a2):
    alcoves = anti_box_alcoves(a2.datum, 4)
    assert len(alcoves) >= 2
    lengths = set()
    for a in alcoves:
        report = selfdual_anti_check(a2, a)
        assert report.ok, report.clauses
        assert report.shift_amount == -2 * a.length
        lengths.add(a.length)
    assert 3 in lengths and 4 in lengths


def test_anti_box_check_rejects_other_alcoves(a2):
    with pytest.raises(ValueError):
        selfdual_anti_check(a2, fundamental_alcove(a2.datum))


def test_anti_box_in_a1(a1):
    a_s = neighbour(fundamental_alcove(a1.datum), 0)
    assert anti_box_alcoves(a1.datum, 4) == [a_s]
    report = selfdual_anti_check(a1, a_s)
    assert report.ok and report.word == (0,) and report.shift_amount == -2
