import pytest
from hypothesis import given, strategies as st

from ajsdual.alcove import (
    alcove_from_json,
    alcove_to_json,
    alpha_s,
    down,
    enumerate_alcoves,
    finite_alcoves,
    fundamental_alcove,
    in_anti_fundamental_box,
    neighbour,
    s_wall,
    up,
    verify_alcove_lemmas,
    w0_path,
    wall_between,
    weyl_act_alcove,
)
from ajsdual.rootsys import build_root_datum


def walk(datum, word):
    a = fundamental_alcove(datum)
    for s in word:
        a = neighbour(a, s)
    return a


@pytest.mark.parametrize("label,count", [("A1", 1), ("A2", 2), ("B2", 4)])
def test_anti_fundamental_box_size(label, count):
    # one alcove per coset of the coroot lattice in the coweight lattice
    datum = build_root_datum(label)
    box = [a for a in enumerate_alcoves(datum, 8) if in_anti_fundamental_box(a)]
    assert len(box) == count


def test_fundamental_alcove_has_length_zero():
    datum = build_root_datum("A2")
    a_e = fundamental_alcove(datum)
    assert a_e.length == 0 and a_e.is_finite()
    assert all(a_e.strip(b) == 0 for b in range(3))


def test_finite_alcoves_lengths_match_weyl_lengths():
    datum = build_root_datum("B2")
    lengths = sorted(a.length for a in finite_alcoves(datum))
    assert lengths == sorted(w.length for w in datum.weyl_group)


def test_alcove_counts_by_length_in_a1():
    datum = build_root_datum("A1")
    alcoves = enumerate_alcoves(datum, 4)
    assert [sum(a.length == n for a in alcoves) for n in range(5)] == [1, 2, 2, 2, 2]


def test_sign_and_type_at_fundamental_alcove():
    datum = build_root_datum("A2")
    a_e = fundamental_alcove(datum)
    # A_e is the plus side of its finite walls and the minus side of the affine one
    assert alpha_s(a_e, 0) == (1, 0)
    assert alpha_s(a_e, 1) == (1, 1)
    assert alpha_s(a_e, 2) == (-1, 2)
    assert alpha_s(neighbour(a_e, 0), 0) == (-1, 0)


def test_w0_path_in_a2():
    datum = build_root_datum("A2")
    a_w0 = weyl_act_alcove(datum.longest_element(), fundamental_alcove(datum))
    path = w0_path(a_w0, (0, 1, 0))
    assert [beta for _, beta in path[1:]] == [0, 2, 1]
    assert path[-1][0] == fundamental_alcove(datum)


def test_w0_path_rejects_bad_word():
    datum = build_root_datum("A2")
    a_w0 = weyl_act_alcove(datum.longest_element(), fundamental_alcove(datum))
    with pytest.raises(ValueError):
        w0_path(a_w0, (0, 1))


@pytest.mark.parametrize("label,window", [("A1", 6), ("A2", 3), ("B2", 3)])
def test_lemmas_hold_on_small_windows(label, window):
    report = verify_alcove_lemmas(build_root_datum(label), window)
    assert report and all(entry["failed"] == 0 for entry in report.values())


def test_lemmas_need_positive_window():
    with pytest.raises(ValueError):
        verify_alcove_lemmas(build_root_datum("A1"), 0)


affine_words = st.lists(st.integers(0, 2), max_size=7)


@given(word=affine_words, s=st.integers(0, 2), beta=st.integers(0, 2))
def test_alcove_moves_are_invertible(word, s, beta):
    datum = build_root_datum("A2")
    a = walk(datum, word)
    assert neighbour(neighbour(a, s), s) == a
    assert down(beta, up(beta, a)) == a
    assert up(beta, a).strip(beta) == a.strip(beta) + 1
    wall = s_wall(a, s)
    assert a in (wall.minus, wall.plus)
    assert wall_between(wall.minus, wall.plus) == wall
    assert a.length <= len(word)


@given(word=affine_words)
def test_alcove_json_round_trip(word):
    datum = build_root_datum("A2")
    a = walk(datum, word)
    assert alcove_from_json(datum, alcove_to_json(a)) == a
