import pytest
from hypothesis import given, strategies as st

from ajsdual.rootsys import build_root_datum, reflection_word, weyl_act


@pytest.mark.parametrize("label,roots,h,lw0,order", [
    ("A1", ((1,),), 2, 1, 2),
    ("A2", ((1, 0), (0, 1), (1, 1)), 3, 3, 6),
    ("B2", ((1, 0), (0, 1), (1, 1), (1, 2)), 4, 4, 8),
])
def test_basic_data(label, roots, h, lw0, order):
    rd = build_root_datum(label)
    assert rd.positive_roots == roots
    assert rd.coxeter_number == h
    assert rd.longest_element().length == lw0
    assert len(rd.weyl_group) == order


def test_g2_needs_flag():
    with pytest.raises(ValueError):
        build_root_datum("G2")
    rd = build_root_datum("G2", experimental=True)
    assert len(rd.positive_roots) == 6
    assert rd.coxeter_number == 6


def test_unknown_type():
    with pytest.raises(ValueError):
        build_root_datum("C3")


def test_reduced_words_of_w0_in_a2():
    rd = build_root_datum("A2")
    assert sorted(rd.reduced_words(rd.longest_element())) == [(0, 1, 0), (1, 0, 1)]


def test_cartan_entries():
    rd = build_root_datum("B2")
    # alpha_1 long: <alpha_2, alpha_1^vee> = -1 and <alpha_1, alpha_2^vee> = -2
    assert rd.cartan[0][0] == 2 and rd.cartan[1][1] == 2
    assert sorted((rd.cartan[0][1], rd.cartan[1][0])) == [-2, -1]


def test_reflection_word_realizes_reflection():
    rd = build_root_datum("B2")
    for root in rd.positive_roots:
        word = reflection_word(rd, root)
        assert rd.weyl_element_from_word(word) == rd.reflection(root)


words = st.lists(st.integers(0, 1), max_size=8)


@pytest.mark.parametrize("label", ["A2", "B2"])
@given(word=words)
def test_weyl_elements_preserve_form_and_roots(label, word):
    rd = build_root_datum(label)
    w = rd.weyl_element_from_word(word)
    for u in rd.positive_roots:
        assert rd.is_root(weyl_act(w, u))
        for v in rd.positive_roots:
            assert rd.bilinear(w(u), w(v)) == rd.bilinear(u, v)
    assert w.length == rd.inversions(w)
    assert len(word) >= w.length and (len(word) - w.length) % 2 == 0
    assert (w * w.inverse()).is_identity()
